#include "flowloop/bifurcation.hpp"

namespace flowloop {

namespace {

// q^{f k^2} in half units of q: f is stored in halves already.
QLaurent framed_weight(Framing f, int k) { return QLaurent::monomial(f.value.twice() * k * k); }

QLaurent signed_unit(int parity) { return parity % 2 == 0 ? QLaurent(1) : QLaurent(-1); }

}  // namespace

XSeries saddle_node_identity(Framing f, HalfInt order) {
  XSeries s = XSeries::truncated(order);
  for (int n = 0; 2 * n <= order.twice(); ++n)
    for (int e = 0; e <= 1; ++e)
      s.add_term(2 * (n + e), framed_weight(f, n + e) * signed_unit(e));
  return s;
}

std::pair<XSeries, XSeries> period_doubling_identity(Framing f, HalfInt order) {
  XSeries negative_hyperbolic = XSeries::truncated(order);
  for (int n = 0; 2 * n <= order.twice(); ++n)
    negative_hyperbolic.add_term(2 * n, framed_weight(f, n) * signed_unit(n));

  XSeries split = XSeries::truncated(order);
  for (int n = 0; 4 * n <= order.twice(); ++n)
    for (int e = 0; e <= 1; ++e)
      split.add_term(2 * (2 * n + e), framed_weight(f, 2 * n + e) * signed_unit(e));
  return {negative_hyperbolic, split};
}

}  // namespace flowloop
