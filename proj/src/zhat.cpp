#include "flowloop/zhat.hpp"

#include <map>

#include "flowloop/lawrence.hpp"
#include "flowloop/parallel.hpp"
#include "flowloop/qcombinatorics.hpp"
#include "json.hpp"

namespace flowloop {

namespace {

QLaurent sign_of(int k) { return k % 2 == 0 ? QLaurent(1) : QLaurent(-1); }

int cap_for(HalfInt order, const PhiOptions& opts) {
  const int cap = opts.label_cap.value_or(order.twice() / 2);
  if (cap < 0) throw InputError("label cap must be nonnegative");
  return cap;
}

void check_order(HalfInt order) {
  if (order.twice() < 0) throw InputError("order must be nonnegative");
}

XSeries normalized_phi(XSeries phi, const char* route) {
  if (!phi.is_integral())
    throw InternalError(std::string(route) + ": Phi has half-integral exponents");
  if (phi.coefficient(0) != QLaurent(1))
    throw InternalError(std::string(route) + ": Phi constant term is " +
                        phi.coefficient(0).pretty());
  return phi;
}

template <typename Fn>
XSeries stabilized(Fn&& compute, int cap, const PhiOptions& opts, const char* route) {
  XSeries out = compute(cap);
  if (opts.check_stabilization && !(compute(cap + 2) == out))
    throw InternalError(std::string(route) + ": result changed when the label cap was raised to " +
                        std::to_string(cap + 2));
  return out;
}

// Every HatState with entries in [0, cap] and entry sum <= budget.
std::vector<detail::HatState> initial_states(int columns, int cap, int budget) {
  std::vector<detail::HatState> out;
  detail::HatState cur(static_cast<std::size_t>(columns), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos == cur.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(cap, left); ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, budget);
  return out;
}

}  // namespace

XSeries phi_positive(const BraidWord& word, HalfInt order, const PhiOptions& opts) {
  check_order(order);
  const BraidStats stats = analyze(word);
  require_homogeneous_knot(stats);
  for (const auto& l : word.letters())
    if (l.sign < 0) throw InputError("phi_positive needs a positive braid word");
  const int n = word.strands();
  const int ot = order.twice();
  auto compute = [&](int m_max) {
    const auto traces = parallel_map<XSeries>(static_cast<std::size_t>(m_max + 1), [&](std::size_t m) {
      return truncated_trace(word, static_cast<int>(m), ot);
    });
    XSeries phi(ot);
    for (int m = 0; m <= m_max; ++m) {
      const XSeries axis = XSeries::monomial(0, QLaurent::monomial(-2 * m), ot) -
                           XSeries::monomial(2 * n, QLaurent::monomial(2 * (m + n - 1)), ot);
      phi += (axis * traces[static_cast<std::size_t>(m)]).truncated_to(ot);
    }
    return phi;
  };
  return normalized_phi(stabilized(compute, cap_for(order, opts), opts, "phi_positive"),
                        "phi_positive");
}

namespace detail {

int conserved_charge(const std::vector<int>& column_sign, const HatState& s) {
  int m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) m += column_sign[i] > 0 ? s[i] : -s[i];
  return m;
}

std::vector<Transfer> crossing_transfers(const std::vector<int>& column_sign, const HatState& from,
                                         const Letter& letter, int cap, bool mirrored,
                                         int max_x_twice) {
  const int cols = static_cast<int>(from.size());
  const std::size_t i = static_cast<std::size_t>(letter.column - 1);
  const bool has_left = letter.column >= 2;
  const bool has_right = letter.column <= cols - 1;
  // A positive neighbour can hand over up to its label; a negative neighbour
  // absorbs by raising its hat label, bounded by the cap.
  auto range = [&](bool present, std::size_t k) {
    if (!present) return 0;
    return column_sign[k] > 0 ? from[k] : cap - from[k];
  };
  const int b_max = range(has_left, i - 1);
  const int c_max = range(has_right, i + 1);
  const int a = from[i];

  std::vector<Transfer> out;
  for (int b = 0; b <= b_max; ++b) {
    for (int c = 0; c <= c_max; ++c) {
      HatState to = from;
      if (has_left) to[i - 1] += column_sign[i - 1] > 0 ? -b : b;
      if (has_right) to[i + 1] += column_sign[i + 1] > 0 ? -c : c;
      if (letter.sign > 0) {
        const int na = a + b + c;
        if (na > cap || 2 * a + b + c > max_x_twice) continue;
        to[i] = na;
        const QLaurent w = (qtrinom(na, a, b, c) * sign_of(a)).shifted(a * a + na);
        out.push_back({std::move(to), XSeries::monomial(2 * a + b + c, w)});
        continue;
      }
      int before = a;
      int after = a - b - c;
      if (mirrored) {
        before = a + b + c;
        after = a;
        if (before > cap) continue;
        to[i] = before;
      } else {
        if (after < 0) continue;
        to[i] = after;
      }
      // (-1)^{h'} q^{-(h'^2 + h)/2} [h; b, h', c]_{q^-1} x^{(h+h')/2}, times (-x).
      if (before + after + 2 > max_x_twice) continue;
      const int q_twice = -(after * after + before);
      const QLaurent w = -(qtrinom(before, b, after, c).inverted() * sign_of(after)).shifted(q_twice);
      out.push_back({std::move(to), XSeries::monomial(before + after + 2, w)});
    }
  }
  return out;
}

XSeries inverted_state_sum(const BraidWord& word, int order_twice, int cap, bool mirrored) {
  const BraidStats stats = analyze(word);
  const int n = word.strands();
  const auto& sign = stats.column_sign;
  // Between its own crossings a positive label only shrinks and a hat label
  // only grows, so each bottom label is at most twice the x-degree its column
  // contributes.  The (-x) factors are not part of that degree.
  const auto starts = initial_states(n - 1, cap, order_twice - 2 * stats.cr_minus);

  auto closed_amplitude = [&](std::size_t k) {
    const HatState& start = starts[k];
    std::map<HatState, XSeries> vec;
    vec.emplace(start, XSeries::one(order_twice));
    for (const auto& l : word.letters()) {
      std::map<HatState, XSeries> next;
      for (const auto& [from, v] : vec) {
        const int room = order_twice - v.min_exponent();
        for (auto& t : crossing_transfers(sign, from, l, cap, mirrored, room)) {
          XSeries p = (v * t.weight).truncated_to(order_twice);
          if (p.is_zero()) continue;
          auto [it, inserted] = next.try_emplace(std::move(t.to), p);
          if (!inserted) it->second += p;
        }
      }
      vec.clear();
      for (auto& [s, v] : next)
        if (!v.is_zero()) vec.emplace(s, std::move(v));
      if (vec.empty()) break;
    }
    auto it = vec.find(start);
    return it == vec.end() ? XSeries(order_twice) : it->second;
  };
  const auto amplitudes = parallel_map<XSeries>(starts.size(), closed_amplitude);

  XSeries total(order_twice);
  for (std::size_t k = 0; k < starts.size(); ++k) {
    if (amplitudes[k].is_zero()) continue;
    // Elliptic axis: e = 0 and e = 1 with weight (-x^n).  Labels are read at
    // the bottom slice; each negative column carries an extra q.
    int q0 = 0;
    int q1 = 0;
    for (std::size_t i = 0; i < starts[k].size(); ++i) {
      const int l = starts[k][i];
      if (sign[i] > 0) {
        q0 += -2 * l;
        q1 += 2 * l + 2;
      } else {
        q0 += 2 * l + 2;
        q1 += -2 * l;
      }
    }
    const XSeries axis = XSeries::monomial(0, QLaurent::monomial(q0), order_twice) -
                         XSeries::monomial(2 * n, QLaurent::monomial(q1), order_twice);
    total += (axis * amplitudes[k]).truncated_to(order_twice);
  }
  return total;
}

}  // namespace detail

XSeries phi_homogeneous(const BraidWord& word, HalfInt order, const PhiOptions& opts) {
  check_order(order);
  const BraidStats stats = analyze(word);
  require_homogeneous_knot(stats);
  const int ot = order.twice();
  auto compute = [&](int cap) {
    const XSeries inv = detail::inverted_state_sum(word, ot + 2 * stats.cr_minus, cap,
                                                   opts.mirrored_negative_roles);
    return inv.shifted_x(-2 * stats.cr_minus)
        .shifted_q(-2 * stats.col_minus)
        .scaled(sign_of(stats.cr_minus));
  };
  XSeries phi = stabilized(compute, cap_for(order, opts), opts, "phi_homogeneous");
  if (opts.mirrored_negative_roles) return phi;
  return normalized_phi(std::move(phi), "phi_homogeneous");
}

XSeries Prefactor::as_series() const {
  return XSeries::monomial(x_twice, QLaurent::monomial(q_twice, sign));
}

std::string Prefactor::to_string() const {
  return std::to_string(sign) + " * q^(" + std::to_string(q_twice) + "/2) * x^(" +
         std::to_string(x_twice) + "/2)";
}

Prefactor zhat_prefactor(const BraidStats& s) {
  Prefactor p;
  p.sign = (1 + s.cr_minus + s.col_minus) % 2 == 0 ? 1 : -1;
  p.q_twice = s.writhe - (s.n - 1) + 2 * s.col_minus;
  p.x_twice = s.writhe - s.n + 2 * s.cr_minus;

  // Same monomial written through the genus g and the Hopf invariant lambda:
  // (-1)^{1+lambda} q^{g-lambda} x^{g-1/2}.
  const HalfInt lambda = s.hopf_invariant();
  if (!lambda.is_integral()) throw InternalError("Hopf invariant is not an integer");
  Prefactor via_genus;
  via_genus.sign = (1 + lambda.as_int()) % 2 == 0 ? 1 : -1;
  via_genus.q_twice = (s.genus - lambda).twice();
  via_genus.x_twice = s.genus.twice() - 1;
  if (!(via_genus == p))
    throw InternalError("prefactor mismatch: " + p.to_string() + " vs " + via_genus.to_string());
  return p;
}

ZhatResult zhat(const BraidWord& word, HalfInt order, const PhiOptions& opts) {
  ZhatResult r;
  r.stats = analyze(word);
  require_homogeneous_knot(r.stats);
  r.phi = phi_homogeneous(word, order, opts);
  r.prefactor = zhat_prefactor(r.stats);
  r.zhat = r.prefactor.as_series() * r.phi;
  r.genus = r.stats.genus;
  r.hopf_invariant = r.stats.hopf_invariant();
  return r;
}

namespace {

nlohmann::ordered_json series_json(const XSeries& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [x, c] : s.terms()) {
    auto coeff = nlohmann::ordered_json::array();
    for (const auto& [q, v] : c.terms())
      coeff.push_back({{"q_exp_half", q}, {"value", v.get_str()}});
    arr.push_back({{"x_exp_half", x}, {"coeff", std::move(coeff)}});
  }
  return arr;
}

}  // namespace

std::string zhat_json(const ZhatResult& r, const BraidWord& word) {
  nlohmann::ordered_json j;
  j["braid"] = render_braid(word);
  j["n"] = r.stats.n;
  j["writhe"] = r.stats.writhe;
  j["prefactor"] = {{"sign", r.prefactor.sign},
                    {"q_exp_half", r.prefactor.q_twice},
                    {"x_exp_half", r.prefactor.x_twice}};
  j["order_half"] = r.phi.order_twice();
  j["phi"] = series_json(r.phi);
  j["zhat"] = series_json(r.zhat);
  return j.dump(2);
}

std::string series_to_json(const XSeries& s) { return series_json(s).dump(); }

XSeries series_from_json(const std::string& json_array) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json_array);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed series JSON: ") + e.what());
  }
  if (!arr.is_array()) throw InputError("series JSON must be an array");
  XSeries s;
  try {
    for (const auto& term : arr) {
      std::vector<QLaurent::Term> coeff;
      for (const auto& c : term.at("coeff"))
        coeff.emplace_back(c.at("q_exp_half").get<int>(), mpz_class(c.at("value").get<std::string>()));
      s.add_term(term.at("x_exp_half").get<int>(), QLaurent::from_terms(std::move(coeff)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed series JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed integer in series JSON: ") + e.what());
  }
  return s;
}

}  // namespace flowloop
