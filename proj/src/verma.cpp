#include "flowloop/verma.hpp"

#include <functional>

#include "flowloop/lawrence.hpp"
#include "flowloop/parallel.hpp"
#include "flowloop/qcombinatorics.hpp"

namespace flowloop {

namespace {

// x^{e/2} in the chosen highest-weight variable.
int x_twice(int e, HighestWeight hw) { return hw == HighestWeight::X ? e : -e; }

}  // namespace

XSeries r_entry(int i, int j, int i_out, int j_out, HighestWeight hw) {
  if (i < 0 || j < 0 || i_out < 0 || j_out < 0) return {};
  if (i + j != i_out + j_out || j_out > i) return {};
  // q^{j j'} (q x^{-1})^{(j+j'+1)/2} [i; j']_q
  const int half = j + j_out + 1;
  XSeries value = XSeries::monomial(x_twice(-half, hw),
                                    qbinom(i, j_out).shifted(2 * j * j_out + half));
  // (q^{j+1} x^{-1}; q)_{i-j'}
  for (int l = 0; l < i - j_out; ++l) {
    XSeries factor = XSeries::one();
    factor.add_term(x_twice(-2, hw), QLaurent::monomial(2 * (j + 1 + l), -1));
    value = value * factor;
  }
  return value;
}

XSeries r_inverse_entry(int i, int j, int i_out, int j_out, HighestWeight hw) {
  return r_entry(j, i, j_out, i_out, hw).inverted_x().inverted_q();
}

std::vector<TensorState> tensor_states(int n, int m) {
  std::vector<TensorState> out;
  TensorState cur(static_cast<std::size_t>(n), 0);
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
  if (n >= 1) rec(0, m);
  return out;
}

StateMatrix tensor_generator(int n, int m, int column, int sign, HighestWeight hw) {
  if (column < 1 || column > n - 1)
    throw InputError("generator index " + std::to_string(column) + " out of range for " +
                     std::to_string(n) + " strands");
  const std::size_t k = static_cast<std::size_t>(column - 1);
  StateMatrix g(tensor_states(n, m));
  for (const auto& from : g.basis()) {
    const int i = from[k];
    const int j = from[k + 1];
    for (int i_out = 0; i_out <= i + j; ++i_out) {
      const int j_out = i + j - i_out;
      XSeries v = sign > 0 ? r_entry(i, j, i_out, j_out, hw) : r_inverse_entry(i, j, i_out, j_out, hw);
      if (v.is_zero()) continue;
      TensorState to = from;
      to[k] = i_out;
      to[k + 1] = j_out;
      g.add(from, to, v);
    }
  }
  return g;
}

StateMatrix tensor_action(const BraidWord& word, int m, HighestWeight hw) {
  StateMatrix acc = StateMatrix::identity(tensor_states(word.strands(), m));
  for (const auto& l : word.letters())
    acc = then(acc, tensor_generator(word.strands(), m, l.column, l.sign, hw));
  return acc;
}

KohnoReport kohno_check(const BraidWord& word, int m_max) {
  KohnoReport report;
  if (m_max < 0) return report;
  const int w = analyze(word).writhe;
  report.lhs = parallel_map<XSeries>(static_cast<std::size_t>(m_max + 1), [&](std::size_t m) {
    return tensor_action(word, static_cast<int>(m), HighestWeight::XInverse).trace();
  });
  const auto traces = graded_trace(word, m_max);
  // (qx)^{w/2}
  const XSeries prefactor = XSeries::monomial(w, QLaurent::monomial(w));
  XSeries partial;
  for (int m = 0; m <= m_max; ++m) {
    partial += traces[static_cast<std::size_t>(m)];
    report.rhs.push_back(prefactor * partial);
  }
  return report;
}

}  // namespace flowloop
