#pragma once

#include <vector>

#include "flowloop/braid.hpp"
#include "flowloop/state_matrix.hpp"
#include "flowloop/xseries.hpp"

namespace flowloop {

/// Which crossings contribute to linking numbers.  Half averages over- and
/// under-crossings; Under counts only crossings where the loop passes under.
/// Closed traces agree.
enum class Convention { Half, Under };

/// S_{n,m}: (n-1)-tuples of nonnegative integers summing to m, in
/// lexicographic order.
std::vector<StateTuple> lawrence_states(int n, int m);

/// Matrix of sigma_column^{sign} on V_{n,m}.  Positive generators move b
/// units from the left neighbour and c from the right neighbour into the
/// column, with weight
///   (-1)^a q^{a^2/2 + (a+b+c)/2} [a+b+c; a,b,c]_q x^{(2a+b+c)/2}      (Half)
///   (-1)^a q^{a(a-1)/2} [a+b+c; a,b,c]_q (qx)^{a+c}                   (Under)
/// where a is the column's current label.  Negative Half generators use the
/// mirror weight (q -> q^{-1}, x -> x^{-1}) with the same label movement;
/// negative Under generators are the exact inverse of the positive ones.
/// Throws InputError for an out-of-range column.
StateMatrix generator_matrix(int n, int m, int column, int sign, Convention conv = Convention::Half);

/// Inverse by back substitution.  Generator matrices are triangular (the
/// column label never decreases) with unit monomials on the diagonal.
StateMatrix triangular_inverse(const StateMatrix& g);

/// Product of generator matrices, leftmost letter applied first.
StateMatrix rep_matrix(const BraidWord& word, int m, Convention conv = Convention::Half);

/// Tr_{V_{n,m}}(word) for m = 0..m_max, exact.  Sectors run in parallel.
std::vector<XSeries> graded_trace(const BraidWord& word, int m_max,
                                  Convention conv = Convention::Half);

/// Tr_{V_{n,m}}(word) with every term of x-degree above order_twice/2
/// dropped along the way.  Only valid for positive words, where all
/// intermediate x-exponents are nonnegative.
XSeries truncated_trace(const BraidWord& word, int m, int order_twice);

/// sum_{m, e} Tr_{V_{n,m}}(word)|_{x = q^{-1+2e}} z^m (q^w)^e (-z^n)^e up to
/// z^{z_order}, returned as a series in z.  Equals 1 - z for every knot
/// closure.  Throws InputError for multi-component closures.
XSeries unknot_closure_check(const BraidWord& word, int z_order);

}  // namespace flowloop
