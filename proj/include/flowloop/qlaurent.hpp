#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace flowloop {

/// Sparse Laurent polynomial in q^{1/2} with arbitrary-precision integer
/// coefficients.  Exponents count q^{1/2} units, so q^{3/2} is stored as 3.
/// Terms are kept sorted by exponent with no zero coefficients.
class QLaurent {
 public:
  using Term = std::pair<int, mpz_class>;

  QLaurent() = default;
  QLaurent(long constant);  // NOLINT(google-explicit-constructor)
  static QLaurent constant(const mpz_class& c);
  static QLaurent monomial(int twice_exp, const mpz_class& c = 1);
  /// Accepts unsorted input with repeated exponents and zeros.
  static QLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(int twice_exp) const;
  /// Precondition: !is_zero().
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }

  /// Every exponent is an integer power of q.
  bool is_integral() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Monomial with coefficient +1 or -1.
  bool is_unit() const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

  QLaurent scaled(const mpz_class& c) const;
  /// Multiply by q^{twice/2}.
  QLaurent shifted(int twice) const;
  /// Substitute q -> q^{-1}.
  QLaurent inverted() const;
  /// Value at q = 1.
  mpz_class at_one() const;

  /// Quotient of an exact division.  A nonzero remainder or a non-divisible
  /// coefficient throws InternalError: callers only divide when the quotient
  /// is known to be a Laurent polynomial.
  static QLaurent divide_exact(QLaurent num, const QLaurent& den);

  /// Canonical text: `c*q^(p/2)` terms sorted by exponent, e.g.
  /// "1*q^(-2/2) - 3*q^(0/2)".  Zero renders as "0".
  std::string canonical() const;
  /// Human form in variable `var`: "q^-1 + 3 + q", "-2*q^(3/2)".
  std::string pretty(const std::string& var = "q") const;

 private:
  std::vector<Term> terms_;
};

}  // namespace flowloop
