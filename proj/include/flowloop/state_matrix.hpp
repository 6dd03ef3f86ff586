#pragma once

#include <map>
#include <string>
#include <vector>

#include "flowloop/xseries.hpp"

namespace flowloop {

/// Tuple of nonnegative labels indexing a basis vector.
using StateTuple = std::vector<int>;
/// Composition (a_1, ..., a_n) labelling v_{a_1} (x) ... (x) v_{a_n}.
using TensorState = StateTuple;

/// Sparse square matrix over Z[q^{+-1/2}, x^{+-1/2}] whose basis vectors are
/// labelled by state tuples.  Entries are stored row-wise by source state:
/// rows()[from][to] is the coefficient of v_to in the image of v_from.
class StateMatrix {
 public:
  StateMatrix() = default;
  explicit StateMatrix(std::vector<StateTuple> basis);
  static StateMatrix identity(std::vector<StateTuple> basis);

  const std::vector<StateTuple>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::map<StateTuple, std::map<StateTuple, XSeries>>& rows() const { return rows_; }

  void add(const StateTuple& from, const StateTuple& to, const XSeries& value);
  XSeries entry(const StateTuple& from, const StateTuple& to) const;
  XSeries trace() const;
  bool is_identity() const;

  /// Composition: apply `first`, then `second`.
  friend StateMatrix then(const StateMatrix& first, const StateMatrix& second);
  /// Matrix product in operator order: (a * b) applies b first.
  friend StateMatrix operator*(const StateMatrix& a, const StateMatrix& b) { return then(b, a); }
  friend bool operator==(const StateMatrix& a, const StateMatrix& b) { return a.rows_ == b.rows_; }

  /// One line per nonzero entry, "(<from>) -> (<to>) : <canonical>", sorted.
  std::string dump() const;

 private:
  std::vector<StateTuple> basis_;
  std::map<StateTuple, std::map<StateTuple, XSeries>> rows_;
};

std::string tuple_string(const StateTuple& t);

}  // namespace flowloop
