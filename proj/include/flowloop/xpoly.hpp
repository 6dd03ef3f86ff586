#pragma once

#include <vector>

#include "flowloop/qlaurent.hpp"

namespace flowloop {

// Laurent polynomials in x^{1/2} at q = 1 are carried as QLaurent values in
// the variable x; the type's half-unit exponents fit exactly.
using XPoly = QLaurent;
using XMatrix = std::vector<std::vector<XPoly>>;

inline XPoly x_power(int twice) { return XPoly::monomial(twice); }

XMatrix identity_matrix(std::size_t d);
XMatrix multiply(const XMatrix& a, const XMatrix& b);
/// Fraction-free Gaussian elimination; every division is exact.
XPoly determinant(XMatrix m);
/// det(I - m).
XPoly det_one_minus(const XMatrix& m);

}  // namespace flowloop
