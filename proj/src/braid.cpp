#include "flowloop/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace flowloop {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw InputError("braid needs at least 2 strands");
  if (letters_.empty()) throw InputError("empty braid word");
  for (const auto& l : letters_) {
    if (l.column < 1 || l.column >= strands_)
      throw InputError("generator index " + std::to_string(l.column) + " out of range for " +
                       std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
  }
}

std::vector<int> BraidWord::signed_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign * l.column);
  return out;
}

BraidWord BraidWord::rotated(std::size_t k) const {
  std::vector<Letter> r = letters_;
  std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k % r.size()), r.end());
  return BraidWord(strands_, std::move(r));
}

namespace {

bool parse_int(std::string_view tok, int& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size() && !tok.empty();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  std::string_view body = trim(text);
  int declared = 0;
  if (body.starts_with("n=") || body.starts_with("n =")) {
    auto semi = body.find(';');
    if (semi == std::string_view::npos) throw BraidParseError("missing ';' after strand count", 0);
    std::string_view head = trim(body.substr(body.find('=') + 1, semi - body.find('=') - 1));
    if (!parse_int(head, declared) || declared < 2)
      throw BraidParseError("malformed strand count '" + std::string(head) + "'", 0);
    body = body.substr(semi + 1);
  }

  std::vector<Letter> letters;
  std::size_t pos = 0;
  std::size_t token_no = 0;
  int max_index = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < body.size()) {
    while (pos < body.size() && is_sep(body[pos])) ++pos;
    if (pos >= body.size()) break;
    std::size_t end = pos;
    while (end < body.size() && !is_sep(body[end])) ++end;
    std::string_view tok = body.substr(pos, end - pos);
    ++token_no;
    int v = 0;
    if (!parse_int(tok, v)) throw BraidParseError("malformed token '" + std::string(tok) + "'", token_no);
    if (v == 0) throw BraidParseError("generator index 0 is not allowed", token_no);
    if (declared != 0 && std::abs(v) >= declared)
      throw BraidParseError("generator index " + std::to_string(std::abs(v)) +
                                " must be less than n=" + std::to_string(declared),
                            token_no);
    max_index = std::max(max_index, std::abs(v));
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    pos = end;
  }
  if (letters.empty()) throw BraidParseError("empty braid word", token_no);
  return BraidWord(declared != 0 ? declared : max_index + 1, std::move(letters));
}

std::string render_braid(const BraidWord& word) {
  std::ostringstream os;
  os << "n=" << word.strands() << ";";
  for (int v : word.signed_indices()) os << ' ' << v;
  return os.str();
}

HalfInt BraidStats::hopf_invariant() const {
  // g - (w - (n-1))/2 - col_-
  return genus - HalfInt::from_twice(writhe - (n - 1)) - HalfInt::from_int(col_minus);
}

BraidStats analyze(const BraidWord& word) {
  BraidStats s;
  s.n = word.strands();
  s.c = static_cast<int>(word.size());
  s.column_sign.assign(static_cast<std::size_t>(s.n - 1), 0);
  std::vector<int> seen_pos(static_cast<std::size_t>(s.n - 1), 0);
  std::vector<int> seen_neg(static_cast<std::size_t>(s.n - 1), 0);
  for (const auto& l : word.letters()) {
    if (l.sign > 0) {
      ++seen_pos[static_cast<std::size_t>(l.column - 1)];
    } else {
      ++seen_neg[static_cast<std::size_t>(l.column - 1)];
      ++s.cr_minus;
    }
  }
  s.writhe = s.c - 2 * s.cr_minus;
  s.is_homogeneous = true;
  for (std::size_t i = 0; i < s.column_sign.size(); ++i) {
    if (seen_pos[i] > 0 && seen_neg[i] == 0) {
      s.column_sign[i] = 1;
    } else if (seen_neg[i] > 0 && seen_pos[i] == 0) {
      s.column_sign[i] = -1;
      ++s.col_minus;
    } else {
      s.is_homogeneous = false;
    }
  }

  // Strand permutation; each generator swaps positions i and i+1.
  std::vector<int> perm(static_cast<std::size_t>(s.n));
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& l : word.letters())
    std::swap(perm[static_cast<std::size_t>(l.column - 1)], perm[static_cast<std::size_t>(l.column)]);
  std::vector<bool> visited(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    ++s.closure_components;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(perm[j])) visited[j] = true;
  }
  s.genus = HalfInt::from_twice(s.c - s.n + 1);
  return s;
}

std::string stats_text(const BraidStats& s) {
  std::ostringstream os;
  os << "n: " << s.n << "\n"
     << "c: " << s.c << "\n"
     << "writhe: " << s.writhe << "\n"
     << "cr_minus: " << s.cr_minus << "\n"
     << "col_minus: " << s.col_minus << "\n"
     << "columns:";
  for (int v : s.column_sign) os << ' ' << (v > 0 ? "+" : v < 0 ? "-" : "0");
  os << "\n"
     << "homogeneous: " << (s.is_homogeneous ? "true" : "false") << "\n"
     << "components: " << s.closure_components << "\n"
     << "genus: " << s.genus.to_string() << "\n";
  return os.str();
}

std::string stats_json(const BraidStats& s) {
  std::ostringstream os;
  os << "{\"n\": " << s.n << ", \"c\": " << s.c << ", \"writhe\": " << s.writhe
     << ", \"cr_minus\": " << s.cr_minus << ", \"col_minus\": " << s.col_minus << ", \"columns\": [";
  for (std::size_t i = 0; i < s.column_sign.size(); ++i) os << (i ? ", " : "") << s.column_sign[i];
  os << "], \"homogeneous\": " << (s.is_homogeneous ? "true" : "false")
     << ", \"components\": " << s.closure_components << ", \"genus\": \"" << s.genus.to_string()
     << "\"}";
  return os.str();
}

void require_homogeneous_knot(const BraidStats& s) {
  if (!s.is_homogeneous) {
    for (std::size_t i = 0; i < s.column_sign.size(); ++i)
      if (s.column_sign[i] == 0)
        throw InputError("braid is not homogeneous: column " + std::to_string(i + 1) +
                         " is empty or has mixed signs");
  }
  if (!s.is_knot())
    throw InputError("closure has " + std::to_string(s.closure_components) +
                     " components; a knot (1 component) is required");
}

}  // namespace flowloop
