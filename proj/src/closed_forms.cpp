#include "flowloop/qcombinatorics.hpp"
#include "flowloop/zhat.hpp"

namespace flowloop {

namespace {

QLaurent sign_of(int k) { return k % 2 == 0 ? QLaurent(1) : QLaurent(-1); }

XSeries one_minus_x(int ot) {
  return XSeries::monomial(0, 1, ot) - XSeries::monomial(2, 1, ot);
}

XSeries trefoil_direct(int ot) {
  const int d = ot / 2;
  XSeries s(ot);
  for (int a = 0; 2 * a <= d; ++a)
    for (int b = 0; 2 * a + b <= d; ++b)
      s.add_term(2 * (2 * a + b), (qbinom(a + b, a) * sign_of(a)).shifted(a * a + a));
  return one_minus_x(ot) * s;
}

XSeries trefoil_braid(int ot) {
  const int d = ot / 2;
  XSeries s(ot);
  for (int a = 0; 3 * a <= d; ++a)
    for (int e = 0; e <= 1; ++e) {
      const int q_twice = 3 * a * a + 4 * e * a + 3 * a + 2 * e - 2 * a;
      s.add_term(2 * (3 * a + 2 * e), QLaurent::monomial(q_twice, (a + e) % 2 == 0 ? 1 : -1));
    }
  return s;
}

XSeries fig8_direct(int ot) {
  const int d = ot / 2;
  XSeries s(ot);
  for (int c = 0; 2 * c <= d; ++c)
    for (int a = 0; a + 2 * c <= d; ++a)
      for (int b = 0; a + b + 2 * c <= d; ++b)
        for (int dd = 0; a + b + 2 * c + dd <= d; ++dd)
          s.add_term(2 * (a + b + 2 * c + dd), QLaurent::monomial(2 * c * c) *
                                                   qbinom_inv(a + b + c, a) * qbinom(b + c, b) *
                                                   qbinom(c + dd, c));
  return one_minus_x(ot) * s;
}

XSeries fig8_braid(int ot) {
  const int d = ot / 2;
  XSeries s(ot);
  for (int e = 0; e <= 1; ++e)
    for (int a = 0; a <= d; ++a)
      for (int b = 0; b <= d; ++b)
        for (int c = 0; c <= d; ++c)
          for (int dd = 0; dd <= d; ++dd)
            for (int ee = 0; ee <= d; ++ee) {
              const int f = b - a + dd;
              if (f < 0) continue;
              const int x = (a + c) + (a + ee) + b + f + 3 * e;
              if (x > d) continue;
              const int q_twice = (a * a + dd * dd - b * b - f * f) + 4 * e * a - 4 * e * b +
                                  (a + dd - b - f) - 2 * (a - b);
              const QLaurent w = qbinom(a + c, a) * qbinom(a + ee, dd) * qbinom_inv(b + ee, b) *
                                 qbinom_inv(b + c, a + c - dd);
              if (w.is_zero()) continue;
              s.add_term(2 * x, (w * sign_of(a + dd + b + f + e)).shifted(q_twice));
            }
  return s;
}

}  // namespace

XSeries closed_form(ClosedForm which, HalfInt order) {
  if (order.twice() < 0) throw InputError("order must be nonnegative");
  const int ot = order.twice();
  switch (which) {
    case ClosedForm::TrefoilBraid: return trefoil_braid(ot);
    case ClosedForm::TrefoilDirect: return trefoil_direct(ot);
    case ClosedForm::Fig8Braid: return fig8_braid(ot);
    case ClosedForm::Fig8Direct: return fig8_direct(ot);
  }
  throw InternalError("unknown closed form");
}

}  // namespace flowloop
