#include "flowloop/lawrence.hpp"

#include <functional>

#include "flowloop/parallel.hpp"
#include "flowloop/qcombinatorics.hpp"

namespace flowloop {

std::vector<StateTuple> lawrence_states(int n, int m) {
  std::vector<StateTuple> out;
  if (n < 2) return out;
  StateTuple cur(static_cast<std::size_t>(n - 1), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == cur.size()) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, m);
  return out;
}

namespace {

QLaurent sign_of(int k) { return k % 2 == 0 ? QLaurent(1) : QLaurent(-1); }

// Weight of moving b (from the left) and c (from the right) into a column
// currently labelled a.
XSeries crossing_weight(int a, int b, int c, int sign, Convention conv) {
  const QLaurent tri = qtrinom(a + b + c, a, b, c);
  int q_twice = 0;
  int x_twice = 0;
  if (conv == Convention::Half) {
    q_twice = a * a + a + b + c;
    x_twice = 2 * a + b + c;
  } else {
    q_twice = a * (a - 1) + 2 * (a + c);
    x_twice = 2 * (a + c);
  }
  if (sign > 0) return XSeries::monomial(x_twice, (tri * sign_of(a)).shifted(q_twice));
  return XSeries::monomial(-x_twice, (tri.inverted() * sign_of(a)).shifted(-q_twice));
}

}  // namespace

StateMatrix generator_matrix(int n, int m, int column, int sign, Convention conv) {
  if (column < 1 || column > n - 1)
    throw InputError("generator index " + std::to_string(column) + " out of range for " +
                     std::to_string(n) + " strands");
  const std::size_t i = static_cast<std::size_t>(column - 1);
  const bool has_left = column >= 2;
  const bool has_right = column <= n - 2;
  // The mirror weight inverts the Half generator only; Under generators are
  // conjugates of those by a diagonal matrix that is not mirror invariant.
  if (sign < 0 && conv == Convention::Under)
    return triangular_inverse(generator_matrix(n, m, column, 1, conv));
  StateMatrix g(lawrence_states(n, m));
  for (const auto& from : g.basis()) {
    const int a = from[i];
    const int b_max = has_left ? from[i - 1] : 0;
    const int c_max = has_right ? from[i + 1] : 0;
    for (int b = 0; b <= b_max; ++b) {
      for (int c = 0; c <= c_max; ++c) {
        StateTuple to = from;
        if (has_left) to[i - 1] -= b;
        if (has_right) to[i + 1] -= c;
        to[i] = a + b + c;
        g.add(from, to, crossing_weight(a, b, c, sign, conv));
      }
    }
  }
  return g;
}

StateMatrix triangular_inverse(const StateMatrix& g) {
  // h(g(v)) = v gives h(v) = d^{-1} (v - sum_{u != v} g[v][u] h(u)); every
  // such u has a strictly larger column label, so the recursion terminates.
  const auto& basis = g.basis();
  StateMatrix h(basis);
  std::map<StateTuple, std::map<StateTuple, XSeries>> solved;
  std::function<const std::map<StateTuple, XSeries>&(const StateTuple&)> solve =
      [&](const StateTuple& v) -> const std::map<StateTuple, XSeries>& {
    if (auto it = solved.find(v); it != solved.end()) return it->second;
    const auto& row = g.rows().at(v);
    const XSeries& diag = row.at(v);
    const auto& [dx, dq] = *diag.terms().begin();
    if (diag.terms().size() != 1 || !dq.is_unit())
      throw InternalError("triangular_inverse: diagonal entry is not a unit monomial");
    const XSeries diag_inv = XSeries::monomial(-dx, QLaurent::monomial(-dq.min_exponent(),
                                                                       dq.terms().front().second));
    std::map<StateTuple, XSeries> acc;
    acc[v] = XSeries::one();
    for (const auto& [u, w] : row) {
      if (u == v) continue;
      for (const auto& [t, val] : solve(u)) acc[t] -= w * val;
    }
    std::map<StateTuple, XSeries> result;
    for (auto& [t, val] : acc)
      if (!val.is_zero()) result.emplace(t, diag_inv * val);
    return solved.emplace(v, std::move(result)).first->second;
  };
  for (const auto& v : basis)
    for (const auto& [t, val] : solve(v)) h.add(v, t, val);
  return h;
}

StateMatrix rep_matrix(const BraidWord& word, int m, Convention conv) {
  StateMatrix acc = StateMatrix::identity(lawrence_states(word.strands(), m));
  for (const auto& l : word.letters())
    acc = then(acc, generator_matrix(word.strands(), m, l.column, l.sign, conv));
  return acc;
}

std::vector<XSeries> graded_trace(const BraidWord& word, int m_max, Convention conv) {
  if (m_max < 0) return {};
  return parallel_map<XSeries>(static_cast<std::size_t>(m_max + 1), [&](std::size_t m) {
    return rep_matrix(word, static_cast<int>(m), conv).trace();
  });
}

XSeries truncated_trace(const BraidWord& word, int m, int order_twice) {
  const int n = word.strands();
  std::map<int, StateMatrix> gens;
  for (const auto& l : word.letters())
    if (!gens.count(l.column * l.sign))
      gens.emplace(l.column * l.sign, generator_matrix(n, m, l.column, l.sign));

  XSeries total = XSeries(order_twice);
  for (const auto& start : lawrence_states(n, m)) {
    std::map<StateTuple, XSeries> vec;
    vec.emplace(start, XSeries::one(order_twice));
    for (const auto& l : word.letters()) {
      const StateMatrix& g = gens.at(l.column * l.sign);
      std::map<StateTuple, XSeries> next;
      for (const auto& [from, v] : vec) {
        for (const auto& [to, w] : g.rows().at(from)) {
          XSeries p = v * w;
          if (p.is_zero()) continue;
          auto [it, inserted] = next.try_emplace(to, p);
          if (!inserted) it->second += p;
        }
      }
      vec.clear();
      for (auto& [s, v] : next)
        if (!v.is_zero()) vec.emplace(s, std::move(v));
      if (vec.empty()) break;
    }
    if (auto it = vec.find(start); it != vec.end()) total += it->second;
  }
  return total;
}

XSeries unknot_closure_check(const BraidWord& word, int z_order) {
  const BraidStats stats = analyze(word);
  if (!stats.is_knot())
    throw InputError("unknot closure identity needs a knot closure; got " +
                     std::to_string(stats.closure_components) + " components");
  const int n = word.strands();
  const auto traces = graded_trace(word, z_order);
  XSeries z_series(2 * z_order);
  for (int m = 0; m <= z_order; ++m) {
    const XSeries& tr = traces[static_cast<std::size_t>(m)];
    // e = 0: x = q^{-1}
    z_series.add_term(2 * m, tr.x_as_q_power(-1));
    // e = 1: x = q, times q^w (-z^n)
    z_series.add_term(2 * (m + n), -tr.x_as_q_power(1).shifted(2 * stats.writhe));
  }
  return z_series;
}

}  // namespace flowloop
