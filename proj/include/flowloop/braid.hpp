#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flowloop/error.hpp"
#include "flowloop/half_int.hpp"
#include "flowloop/xseries.hpp"

namespace flowloop {

/// One Artin generator sigma_column^{sign}.
struct Letter {
  int column = 1;  // 1..n-1
  int sign = 1;    // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A braid word on `strands` strands, read left to right as bottom to top.
class BraidWord {
 public:
  /// Throws InputError if the word is empty or an index is out of range.
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  /// Signed index form, e.g. {1, -2, 1, -2}.
  std::vector<int> signed_indices() const;
  /// Rotate the letter list left by k.
  BraidWord rotated(std::size_t k) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

class BraidParseError : public InputError {
 public:
  BraidParseError(const std::string& what, std::size_t token_position)
      : InputError(what + " (token " + std::to_string(token_position) + ")"),
        position_(token_position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "1 -2 1 -2", "1,-2,1,-2" or "n=4; 1 3".  Tokens are numbered from 1
/// in error messages; the `n=` header is token 0.
BraidWord parse_braid(std::string_view text);

/// Inverse of parse_braid: "n=3; 1 -2 1 -2".
std::string render_braid(const BraidWord& word);

struct BraidStats {
  int n = 0;
  int c = 0;
  int writhe = 0;
  int cr_minus = 0;
  int col_minus = 0;
  /// Per column: +1, -1, or 0 when the column is empty or mixed.
  std::vector<int> column_sign;
  bool is_homogeneous = false;
  int closure_components = 0;
  /// (c - n + 1) / 2; the Seifert genus for homogeneous knot closures.
  HalfInt genus;

  bool is_knot() const { return closure_components == 1; }
  /// Hopf invariant lambda = g - (w - (n-1))/2 - col_-; equals cr_- - col_-.
  HalfInt hopf_invariant() const;
};

BraidStats analyze(const BraidWord& word);

/// Flat "key: value" block.
std::string stats_text(const BraidStats& s);
/// JSON object with keys n, c, writhe, cr_minus, col_minus, columns,
/// homogeneous, components, genus.
std::string stats_json(const BraidStats& s);

/// Throws InputError unless the closure is a knot given by a homogeneous word.
void require_homogeneous_knot(const BraidStats& s);

struct AlexanderResult {
  /// Normalized so that (1-x)/delta expands as 1 + ...
  XSeries delta;
  /// (1-x)/delta truncated at the requested order.
  XSeries inv_delta_series;
};

/// Alexander polynomial at q = 1, computed from det(I - V_{n,1}(beta)) and
/// from the reduced Burau matrix at t = x.  The two must agree, otherwise
/// InternalError.
AlexanderResult alexander_classical(const BraidWord& word, HalfInt order);

/// Individual routes, exposed for testing.  Both return a normalized delta.
XSeries alexander_from_lawrence(const BraidWord& word);
XSeries alexander_from_burau(const BraidWord& word);

}  // namespace flowloop
