#pragma once

#include <limits>
#include <map>
#include <string>

#include "flowloop/half_int.hpp"
#include "flowloop/qlaurent.hpp"

namespace flowloop {

/// Series in x^{1/2} with QLaurent coefficients, truncated at a fixed order.
///
/// Exponents of x are stored in half units.  `order_twice()` is the largest
/// retained exponent; every stored term satisfies exponent <= order.  The
/// special order kExact marks a finite Laurent polynomial in both variables
/// (used for matrix entries and traces).
///
/// Sums truncate to the smaller order.  A product is known exactly up to
/// min(order_a + low_b, order_b + low_a), where low is the smallest stored
/// x-exponent clamped at zero from above; for two series starting at x^0
/// this is the minimum of the two orders.
class XSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  XSeries() = default;  // exact zero
  explicit XSeries(int order_twice) : order_(order_twice) {}
  static XSeries truncated(HalfInt order) { return XSeries(order.twice()); }
  static XSeries exact() { return XSeries(kExact); }
  static XSeries monomial(int x_twice, const QLaurent& coeff, int order_twice = kExact);
  static XSeries one(int order_twice = kExact) { return monomial(0, 1, order_twice); }

  int order_twice() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, QLaurent>& terms() const { return terms_; }
  QLaurent coefficient(int x_twice) const;
  /// Precondition: !is_zero().
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Adds c*x^{x_twice/2}; silently dropped above the truncation order.
  void add_term(int x_twice, const QLaurent& c);

  /// All x- and q-exponents are integers.
  bool is_integral() const;

  XSeries operator-() const;
  XSeries& operator+=(const XSeries& o);
  XSeries& operator-=(const XSeries& o);
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  XSeries& operator*=(const XSeries& o) { return *this = *this * o; }
  friend bool operator==(const XSeries& a, const XSeries& b) = default;

  /// Multiply every coefficient by c.
  XSeries scaled(const QLaurent& c) const;
  /// Multiply by x^{twice/2} (the order shifts along).
  XSeries shifted_x(int twice) const;
  /// Multiply by q^{twice/2}.
  XSeries shifted_q(int twice) const;
  /// Drop terms above the new order (never raises the order).
  XSeries truncated_to(int order_twice) const;
  /// Substitute q = 1; coefficients become constants.
  XSeries at_q_one() const;
  /// Substitute x -> x^{-1}.  Only valid on exact polynomials.
  XSeries inverted_x() const;
  /// Substitute q -> q^{-1}.
  XSeries inverted_q() const;
  /// Substitute x^{1/2} -> q^{k/2}; only valid on exact polynomials.
  QLaurent x_as_q_power(int k) const;

  /// Multiplicative inverse.  Requires the lowest term to sit at x^0 with a
  /// unit monomial coefficient.  The result keeps this series' order.
  XSeries inverse() const;

  /// Same coefficients for every exponent <= order_twice.
  bool agrees_to(const XSeries& o, int order_twice) const;

  /// Canonical text: `(<QLaurent>)*x^(p/2)` terms sorted by exponent,
  /// followed by `+ O(x^(N/2))` for truncated series.
  std::string canonical(const std::string& var = "x") const;
  /// Human form: "1 - q*x^2 + (q^-1 + 3 + q)*x^2 + O(x^11)".
  std::string pretty(const std::string& var = "x") const;

 private:
  int order_ = kExact;
  std::map<int, QLaurent> terms_;
};

}  // namespace flowloop
