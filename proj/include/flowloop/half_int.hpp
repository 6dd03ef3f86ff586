#pragma once

#include <compare>
#include <string>

namespace flowloop {

/// An element of (1/2)Z stored as a count of halves.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }
  /// Only meaningful when is_integral().
  constexpr int as_int() const { return twice_ / 2; }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "3", "-1", "3/2", "-1/2".
  std::string to_string() const;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Framing of a flow loop; half-integral framings are allowed.
struct Framing {
  HalfInt value;
};

}  // namespace flowloop
