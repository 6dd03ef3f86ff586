#include "flowloop/state_matrix.hpp"

#include <sstream>

namespace flowloop {

StateMatrix::StateMatrix(std::vector<StateTuple> basis) : basis_(std::move(basis)) {}

StateMatrix StateMatrix::identity(std::vector<StateTuple> basis) {
  StateMatrix m(std::move(basis));
  for (const auto& s : m.basis_) m.add(s, s, XSeries::one());
  return m;
}

void StateMatrix::add(const StateTuple& from, const StateTuple& to, const XSeries& value) {
  if (value.is_zero()) return;
  auto& row = rows_[from];
  auto [it, inserted] = row.try_emplace(to, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) row.erase(it);
  }
  if (row.empty()) rows_.erase(from);
}

XSeries StateMatrix::entry(const StateTuple& from, const StateTuple& to) const {
  auto r = rows_.find(from);
  if (r == rows_.end()) return {};
  auto e = r->second.find(to);
  return e == r->second.end() ? XSeries{} : e->second;
}

XSeries StateMatrix::trace() const {
  XSeries t;
  for (const auto& [from, row] : rows_)
    if (auto it = row.find(from); it != row.end()) t += it->second;
  return t;
}

bool StateMatrix::is_identity() const {
  if (rows_.size() != basis_.size()) return false;
  for (const auto& [from, row] : rows_) {
    if (row.size() != 1 || row.begin()->first != from) return false;
    if (row.begin()->second != XSeries::one()) return false;
  }
  return true;
}

StateMatrix then(const StateMatrix& first, const StateMatrix& second) {
  StateMatrix out(first.basis_);
  for (const auto& [from, row] : first.rows_) {
    std::map<StateTuple, XSeries> acc;
    for (const auto& [mid, v] : row) {
      auto r2 = second.rows_.find(mid);
      if (r2 == second.rows_.end()) continue;
      for (const auto& [to, w] : r2->second) acc[to] += v * w;
    }
    for (auto& [to, v] : acc) out.add(from, to, v);
  }
  return out;
}

std::string tuple_string(const StateTuple& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s;
}

std::string StateMatrix::dump() const {
  std::ostringstream os;
  for (const auto& [from, row] : rows_)
    for (const auto& [to, v] : row)
      os << "(" << tuple_string(from) << ") -> (" << tuple_string(to) << ") : " << v.canonical()
         << "\n";
  return os.str();
}

}  // namespace flowloop
