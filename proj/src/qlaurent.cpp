#include "flowloop/qlaurent.hpp"

#include <algorithm>
#include <map>

#include "flowloop/error.hpp"

namespace flowloop {

QLaurent::QLaurent(long constant) {
  if (constant != 0) terms_.emplace_back(0, mpz_class(constant));
}

QLaurent QLaurent::constant(const mpz_class& c) { return monomial(0, c); }

QLaurent QLaurent::monomial(int twice_exp, const mpz_class& c) {
  QLaurent r;
  if (c != 0) r.terms_.emplace_back(twice_exp, c);
  return r;
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  QLaurent r;
  for (auto& [e, c] : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == e) {
      r.terms_.back().second += c;
      if (r.terms_.back().second == 0) r.terms_.pop_back();
    } else if (c != 0) {
      r.terms_.emplace_back(e, std::move(c));
    }
  }
  return r;
}

mpz_class QLaurent::coefficient(int twice_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), twice_exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == twice_exp) return it->second;
  return 0;
}

bool QLaurent::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first % 2 == 0; });
}

bool QLaurent::is_unit() const {
  return is_monomial() && abs(terms_.front().second) == 1;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Merge b*sign into a, both sorted.
std::vector<QLaurent::Term> merge(const std::vector<QLaurent::Term>& a,
                                  const std::vector<QLaurent::Term>& b, bool negate) {
  std::vector<QLaurent::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate ? mpz_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpz_class c = negate ? mpz_class(a[i].second - b[j].second)
                           : mpz_class(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  if (o.is_zero()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_monomial()) return b.shifted(a.terms_[0].first).scaled(a.terms_[0].second);
  if (b.is_monomial()) return a.shifted(b.terms_[0].first).scaled(b.terms_[0].second);

  const long lo = static_cast<long>(a.min_exponent()) + b.min_exponent();
  const long hi = static_cast<long>(a.max_exponent()) + b.max_exponent();
  const long span = hi - lo + 1;
  const long pairs = static_cast<long>(a.size()) * static_cast<long>(b.size());
  if (span <= 4 * pairs + 64) {
    std::vector<mpz_class> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                   cb.get_mpz_t());
      }
    for (long k = 0; k < span; ++k)
      if (acc[static_cast<std::size_t>(k)] != 0)
        r.terms_.emplace_back(static_cast<int>(lo + k),
                              std::move(acc[static_cast<std::size_t>(k)]));
    return r;
  }
  std::map<int, mpz_class> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

QLaurent QLaurent::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  QLaurent r = *this;
  if (c == 1) return r;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

QLaurent QLaurent::shifted(int twice) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.first += twice;
  return r;
}

QLaurent QLaurent::inverted() const {
  QLaurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

mpz_class QLaurent::at_one() const {
  mpz_class s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

QLaurent QLaurent::divide_exact(QLaurent num, const QLaurent& den) {
  if (den.is_zero()) throw InternalError("QLaurent::divide_exact: division by zero");
  if (num.is_zero()) return {};
  const int den_lo = den.min_exponent();
  const int den_span = den.max_exponent() - den_lo;
  const mpz_class& lead = den.terms_.front().second;
  const int quot_hi = num.max_exponent() - den.max_exponent();
  std::vector<Term> quot;
  while (!num.is_zero()) {
    const int e = num.min_exponent() - den_lo;
    if (e > quot_hi || num.max_exponent() - num.min_exponent() < den_span)
      throw InternalError("QLaurent::divide_exact: nonzero remainder");
    const mpz_class& c = num.terms_.front().second;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
      throw InternalError("QLaurent::divide_exact: coefficient not divisible");
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    num -= den.shifted(e).scaled(qc);
    quot.emplace_back(e, std::move(qc));
  }
  QLaurent r;
  r.terms_ = std::move(quot);
  return r;
}

}  // namespace flowloop
