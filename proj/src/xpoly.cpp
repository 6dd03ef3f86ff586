#include "flowloop/xpoly.hpp"

#include <utility>

namespace flowloop {

XMatrix identity_matrix(std::size_t d) {
  XMatrix m(d, std::vector<XPoly>(d));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

XMatrix multiply(const XMatrix& a, const XMatrix& b) {
  const std::size_t d = a.size();
  XMatrix r(d, std::vector<XPoly>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

XPoly determinant(XMatrix m) {
  const std::size_t d = m.size();
  XPoly prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < d; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < d && m[r][k].is_zero()) ++r;
      if (r == d) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j)
        m[i][j] = XPoly::divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  XPoly det = d == 0 ? XPoly(1) : m[d - 1][d - 1];
  return negate ? -det : det;
}

XPoly det_one_minus(const XMatrix& m) {
  XMatrix a = identity_matrix(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] -= m[i][j];
  return determinant(std::move(a));
}

}  // namespace flowloop
