#include <map>
#include <vector>

#include "flowloop/braid.hpp"
#include "flowloop/lawrence.hpp"
#include "flowloop/xpoly.hpp"

namespace flowloop {

namespace {

// Divide by the lowest monomial so the constant term is +1.
XPoly normalize(const XPoly& delta) {
  if (delta.is_zero()) throw InternalError("Alexander polynomial vanished");
  const auto& [e, c] = delta.terms().front();
  if (abs(c) != 1) throw InternalError("Alexander polynomial has non-unit lowest coefficient");
  return delta.shifted(-e).scaled(c);
}

XSeries to_series(const XPoly& p) {
  XSeries s;
  for (const auto& [e, c] : p.terms()) s.add_term(e, QLaurent::constant(c));
  return s;
}

// V_{n,1} at q = 1 as a dense matrix acting on column vectors.
XMatrix lawrence_sector_one(int n, const Letter& l) {
  const StateMatrix g = generator_matrix(n, 1, l.column, l.sign);
  const auto& basis = g.basis();
  std::map<StateTuple, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  XMatrix m(basis.size(), std::vector<XPoly>(basis.size()));
  for (const auto& [from, row] : g.rows())
    for (const auto& [to, v] : row)
      for (const auto& [xe, qc] : v.terms()) m[index[to]][index[from]] += x_power(xe).scaled(qc.at_one());
  return m;
}

// Reduced Burau matrix of sigma_i^{+-1} at t = x.
XMatrix reduced_burau(int n, const Letter& l) {
  const std::size_t d = static_cast<std::size_t>(n - 1);
  XMatrix m = identity_matrix(d);
  const std::size_t i = static_cast<std::size_t>(l.column - 1);
  const XPoly t = l.sign > 0 ? x_power(2) : x_power(-2);
  // sigma_i:      column i becomes (t, -t, 1) around the diagonal.
  // sigma_i^{-1}: column i becomes (1, -t^{-1}, t^{-1}).
  m[i][i] = -t;
  if (l.sign > 0) {
    if (i > 0) m[i - 1][i] = t;
    if (i + 1 < d) m[i + 1][i] = 1;
  } else {
    if (i > 0) m[i - 1][i] = 1;
    if (i + 1 < d) m[i + 1][i] = t;
  }
  return m;
}

}  // namespace

XSeries alexander_from_lawrence(const BraidWord& word) {
  const int n = word.strands();
  const std::size_t d = static_cast<std::size_t>(n - 1);
  XMatrix prod = identity_matrix(d);
  for (const auto& l : word.letters()) prod = multiply(lawrence_sector_one(n, l), prod);
  // 1/Delta = x^{w/2} (x^{n/2} - x^{-n/2}) / (x^{1/2} - x^{-1/2}) / det(I - V)
  const int w = analyze(word).writhe;
  const XPoly num = det_one_minus(prod) * XPoly::from_terms({{1, 1}, {-1, -1}});
  const XPoly den = x_power(w) * XPoly::from_terms({{n, 1}, {-n, -1}});
  return to_series(normalize(XPoly::divide_exact(num, den)));
}

XSeries alexander_from_burau(const BraidWord& word) {
  const int n = word.strands();
  XMatrix prod = identity_matrix(static_cast<std::size_t>(n - 1));
  for (const auto& l : word.letters()) prod = multiply(reduced_burau(n, l), prod);
  // det(I - B) = Delta (1 + t + ... + t^{n-1}) up to a unit
  const XPoly num = det_one_minus(prod) * XPoly::from_terms({{0, 1}, {2, -1}});
  const XPoly den = XPoly::from_terms({{0, 1}, {2 * n, -1}});
  return to_series(normalize(XPoly::divide_exact(num, den)));
}

AlexanderResult alexander_classical(const BraidWord& word, HalfInt order) {
  require_homogeneous_knot(analyze(word));
  XSeries from_lawrence = alexander_from_lawrence(word);
  XSeries from_burau = alexander_from_burau(word);
  if (from_lawrence != from_burau)
    throw InternalError("Alexander polynomial routes disagree: " + from_lawrence.pretty() +
                        " vs " + from_burau.pretty());
  AlexanderResult r;
  r.delta = from_lawrence;
  XSeries one_minus_x = XSeries::one();
  one_minus_x.add_term(2, -1);
  r.inv_delta_series = one_minus_x * from_lawrence.truncated_to(order.twice()).inverse();
  return r;
}

}  // namespace flowloop
