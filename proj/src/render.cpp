#include <sstream>

#include "flowloop/half_int.hpp"
#include "flowloop/qlaurent.hpp"
#include "flowloop/xseries.hpp"

namespace flowloop {

std::string HalfInt::to_string() const {
  if (is_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

// "q", "q^2", "q^-1", "q^(3/2)"; empty for exponent 0.
std::string power(const std::string& var, int twice) {
  if (twice == 0) return "";
  if (twice == 2) return var;
  if (twice % 2 == 0) return var + "^" + std::to_string(twice / 2);
  return var + "^(" + std::to_string(twice) + "/2)";
}

// Joins signed pieces as "a + b - c".  Each piece is (negative, body).
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [neg, body] = pieces[i];
    if (i == 0) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// |c| times a variable power, omitting unit coefficients.
std::string scaled_power(const mpz_class& abs_c, const std::string& pw) {
  if (pw.empty()) return abs_c.get_str();
  if (abs_c == 1) return pw;
  return abs_c.get_str() + "*" + pw;
}

}  // namespace

std::string QLaurent::canonical() const {
  if (is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    pieces.emplace_back(c < 0, a.get_str() + "*q^(" + std::to_string(e) + "/2)");
  }
  return join_signed(pieces);
}

std::string QLaurent::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [e, c] : terms_) pieces.emplace_back(c < 0, scaled_power(abs(c), power(var, e)));
  return join_signed(pieces);
}

namespace {

std::string order_term(const XSeries& s, const std::string& var, bool canonical) {
  if (s.is_exact()) return "";
  const int n = s.order_twice();
  bool integral = n % 2 == 0;
  for (const auto& [e, c] : s.terms()) integral = integral && e % 2 == 0;
  const int next = integral ? n + 2 : n + 1;
  if (canonical) return "O(" + var + "^(" + std::to_string(next) + "/2))";
  std::string pw = power(var, next);
  return "O(" + (pw.empty() ? std::string("1") : pw) + ")";
}

}  // namespace

std::string XSeries::canonical(const std::string& var) const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.canonical() + ")*" + var + "^(" + std::to_string(e) + "/2)";
  }
  std::string o = order_term(*this, var, true);
  if (!o.empty()) out += out.empty() ? o : " + " + o;
  return out.empty() ? "0" : out;
}

std::string XSeries::pretty(const std::string& var) const {
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [e, c] : terms_) {
    const std::string xp = power(var, e);
    if (c.is_monomial()) {
      const auto& [qe, qc] = c.terms().front();
      std::string qp = power("q", qe);
      std::string body;
      if (qp.empty() && xp.empty()) body = mpz_class(abs(qc)).get_str();
      else if (qp.empty()) body = scaled_power(abs(qc), xp);
      else if (xp.empty()) body = scaled_power(abs(qc), qp);
      else body = scaled_power(abs(qc), qp + "*" + xp);
      pieces.emplace_back(qc < 0, body);
    } else {
      std::string body = "(" + c.pretty("q") + ")";
      if (!xp.empty()) body += "*" + xp;
      pieces.emplace_back(false, body);
    }
  }
  std::string out = join_signed(pieces);
  std::string o = order_term(*this, var, false);
  if (!o.empty()) out += out.empty() ? o : " + " + o;
  return out.empty() ? "0" : out;
}

}  // namespace flowloop
