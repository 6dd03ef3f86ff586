#pragma once

#include <vector>

#include "flowloop/braid.hpp"
#include "flowloop/state_matrix.hpp"

namespace flowloop {

/// Which highest-weight variable the Verma module carries.
enum class HighestWeight { X, XInverse };

/// Braided R-matrix entry on V_inf(x) (x -> x^{-1} for XInverse):
///   delta_{i+j, i'+j'} q^{j j'} (q x^{-1})^{(j+j'+1)/2} [i; j']_q (q^{j+1} x^{-1}; q)_{i-j'}
/// Zero whenever j' > i.
XSeries r_entry(int i, int j, int i_out, int j_out, HighestWeight hw = HighestWeight::X);

/// Entry of the inverse braiding: R(x^{-1}; q^{-1}) with both index pairs
/// transposed.
XSeries r_inverse_entry(int i, int j, int i_out, int j_out, HighestWeight hw = HighestWeight::X);

/// Compositions of m into n nonnegative parts, lexicographic.
std::vector<TensorState> tensor_states(int n, int m);

/// Action of sigma_column^{sign} on the weight-m subspace of V_inf^{(x)n}.
StateMatrix tensor_generator(int n, int m, int column, int sign, HighestWeight hw);

/// Product over the word, leftmost letter applied first.
StateMatrix tensor_action(const BraidWord& word, int m, HighestWeight hw);

struct KohnoReport {
  /// Tr on (V_inf(x^{-1})^{(x)n})_m for m = 0..m_max.
  std::vector<XSeries> lhs;
  /// (qx)^{w/2} sum_{k <= m} Tr_{V_{n,k}}.
  std::vector<XSeries> rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of the graded-trace identity relating the Verma tensor power
/// to the flow-loop representations, coefficient by coefficient in z.
KohnoReport kohno_check(const BraidWord& word, int m_max);

}  // namespace flowloop
