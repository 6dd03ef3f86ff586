#pragma once

#include <utility>

#include "flowloop/half_int.hpp"
#include "flowloop/xseries.hpp"

namespace flowloop {

/// Creation/annihilation of an elliptic and a positive hyperbolic loop:
///   sum_{n >= 0, e in {0,1}} q^{f (n+e)^2} x^n (-x)^e,
/// truncated at `order`.  Identically 1 for every framing f.
XSeries saddle_node_identity(Framing f, HalfInt order);

/// Period doubling.  Returns
///   ( sum_{n >= 0} q^{f n^2} (-x)^n,
///     sum_{n >= 0, e in {0,1}} q^{f (2n+e)^2} x^{2n} (-x)^e ),
/// both truncated at `order`; the two series coincide.
std::pair<XSeries, XSeries> period_doubling_identity(Framing f, HalfInt order);

}  // namespace flowloop
