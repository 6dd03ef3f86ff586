#include "flowloop/verify.hpp"

#include <cstdint>
#include <functional>
#include <tuple>

#include "flowloop/bifurcation.hpp"
#include "flowloop/corpus.hpp"
#include "flowloop/knot_holder.hpp"
#include "flowloop/lawrence.hpp"
#include "flowloop/qcombinatorics.hpp"
#include "flowloop/verma.hpp"
#include "flowloop/zhat.hpp"

namespace flowloop {

namespace {

using Property = std::function<std::string()>;  // returns "" on success

struct Named {
  std::string name;
  Property check;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

std::string series_mismatch(const std::string& what, const XSeries& got, const XSeries& want) {
  return got == want ? "" : mismatch(what, got.pretty(), want.pretty());
}

BraidWord word(const std::string& text) { return parse_braid(text); }

XSeries poly(std::initializer_list<std::pair<int, long>> terms, int order) {
  XSeries s(2 * order);
  for (const auto& [e, c] : terms) s.add_term(2 * e, c);
  return s;
}

const std::vector<int> kFramingsTwice = {-2, -1, 0, 1, 2, 4};

// ---- ring -----------------------------------------------------------------

std::vector<Named> ring_suite() {
  return {
      {"qbinom Pascal recurrence for -6 <= n <= 12",
       [] {
         for (int n = -6; n <= 12; ++n)
           for (int k = 1; k <= 8; ++k)
             if (qbinom(n, k) != qbinom(n - 1, k - 1) + qbinom(n - 1, k).shifted(2 * k))
               return "[" + std::to_string(n) + ";" + std::to_string(k) + "]";
         return std::string();
       }},
      {"qbinom symmetry and q=1 limit",
       [] {
         for (int n = 0; n <= 12; ++n)
           for (int k = 0; k <= n; ++k) {
             if (qbinom(n, k) != qbinom(n, n - k)) return "symmetry at n=" + std::to_string(n);
             if (qbinom(n, k).at_one() != generalized_binomial(n, k))
               return "q=1 at n=" + std::to_string(n);
           }
         return std::string();
       }},
      {"saddle-node identity to order 12",
       [] {
         for (int f : kFramingsTwice) {
           const XSeries s = saddle_node_identity({HalfInt::from_twice(f)}, HalfInt::from_int(12));
           if (s != XSeries::one(24)) return series_mismatch("f=" + HalfInt::from_twice(f).to_string(), s, XSeries::one(24));
         }
         return std::string();
       }},
      {"period-doubling identity to order 12",
       [] {
         for (int f : kFramingsTwice) {
           const auto [a, b] = period_doubling_identity({HalfInt::from_twice(f)}, HalfInt::from_int(12));
           if (a != b) return series_mismatch("f=" + HalfInt::from_twice(f).to_string(), a, b);
         }
         return std::string();
       }},
      {"series inverse",
       [] {
         const XSeries s = poly({{0, 1}, {1, -3}, {2, 1}}, 10) +
                           XSeries::monomial(3, QLaurent::monomial(1, 2), 20);
         return series_mismatch("s * s^-1", s * s.inverse(), XSeries::one(20));
       }},
  };
}

// ---- lawrence -------------------------------------------------------------

std::string for_all_sectors(const std::function<std::string(int, int, Convention)>& body) {
  for (Convention conv : {Convention::Half, Convention::Under})
    for (int n = 2; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        std::string r = body(n, m, conv);
        if (!r.empty())
          return r + " (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                 (conv == Convention::Half ? ", half)" : ", under)");
      }
  return "";
}

std::vector<Named> lawrence_suite() {
  return {
      {"dimension of V_{n,m} is C(m+n-2, n-2)",
       [] {
         return for_all_sectors([](int n, int m, Convention) {
           const auto states = lawrence_states(n, m);
           return mpz_class(static_cast<long>(states.size())) == generalized_binomial(m + n - 2, n - 2)
                      ? std::string()
                      : std::string("dimension");
         });
       }},
      {"braid relation",
       [] {
         return for_all_sectors([](int n, int m, Convention conv) {
           for (int i = 1; i + 1 <= n - 1; ++i) {
             const auto a = generator_matrix(n, m, i, 1, conv);
             const auto b = generator_matrix(n, m, i + 1, 1, conv);
             if (!(a * b * a == b * a * b)) return "sigma_" + std::to_string(i);
           }
           return std::string();
         });
       }},
      {"far commutation",
       [] {
         return for_all_sectors([](int n, int m, Convention conv) {
           for (int i = 1; i <= n - 1; ++i)
             for (int j = i + 2; j <= n - 1; ++j) {
               const auto a = generator_matrix(n, m, i, 1, conv);
               const auto b = generator_matrix(n, m, j, 1, conv);
               if (!(a * b == b * a)) return "sigma_" + std::to_string(i) + ", sigma_" + std::to_string(j);
             }
           return std::string();
         });
       }},
      {"weight conservation",
       [] {
         return for_all_sectors([](int n, int m, Convention conv) {
           for (int i = 1; i <= n - 1; ++i)
             for (int sign : {1, -1}) {
               const StateMatrix g = generator_matrix(n, m, i, sign, conv);
               for (const auto& [from, row] : g.rows())
                 for (const auto& [to, v] : row) {
                   int total = 0;
                   for (int l : to) total += l;
                   if (total != m || to.size() != from.size()) return tuple_string(to);
                 }
             }
           return std::string();
         });
       }},
      {"inverse generator identity",
       [] {
         return for_all_sectors([](int n, int m, Convention conv) {
           for (int i = 1; i <= n - 1; ++i) {
             const auto g = generator_matrix(n, m, i, 1, conv);
             const auto h = generator_matrix(n, m, i, -1, conv);
             if (!(g * h).is_identity() || !(h * g).is_identity())
               return "sigma_" + std::to_string(i) + " * mirror";
             if (!(triangular_inverse(g) == h)) return "triangular solve for sigma_" + std::to_string(i);
           }
           return std::string();
         });
       }},
      {"conventions give equal traces",
       [] {
         for (const auto& e : corpus()) {
           const BraidWord w = word(e.braid);
           if (w.strands() > 3) continue;
           if (graded_trace(w, 3, Convention::Half) != graded_trace(w, 3, Convention::Under))
             return e.name;
         }
         return std::string();
       }},
      {"unknot closure sum is 1 - z",
       [] {
         for (const char* b : {"1", "1 2", "1 1 1"}) {
           const XSeries s = unknot_closure_check(word(b), 6);
           if (s != poly({{0, 1}, {1, -1}}, 6)) return series_mismatch(b, s, poly({{0, 1}, {1, -1}}, 6));
         }
         return std::string();
       }},
      {"Alexander polynomial routes agree",
       [] {
         for (const auto& e : corpus()) {
           const BraidWord w = word(e.braid);
           const XSeries a = alexander_from_lawrence(w);
           const XSeries b = alexander_from_burau(w);
           if (a != b) return series_mismatch(e.name, a, b);
         }
         return std::string();
       }},
  };
}

// ---- verma ----------------------------------------------------------------

std::vector<Named> verma_suite() {
  return {
      {"tensor braid relation and inverse",
       [] {
         for (auto hw : {HighestWeight::X, HighestWeight::XInverse})
           for (int m = 0; m <= 3; ++m) {
             const auto a = tensor_generator(3, m, 1, 1, hw);
             const auto b = tensor_generator(3, m, 2, 1, hw);
             if (!(a * b * a == b * a * b)) return "braid relation at m=" + std::to_string(m);
             if (!(a * tensor_generator(3, m, 1, -1, hw)).is_identity())
               return "inverse at m=" + std::to_string(m);
           }
         return std::string();
       }},
      {"graded trace identity on corpus words with n <= 3",
       [] {
         for (const auto& e : corpus()) {
           const BraidWord w = word(e.braid);
           if (w.strands() > 3) continue;
           const KohnoReport r = kohno_check(w, 3);
           for (std::size_t m = 0; m < r.lhs.size(); ++m)
             if (r.lhs[m] != r.rhs[m])
               return e.name + " at z^" + std::to_string(m) + ": " + r.lhs[m].pretty() + " vs " +
                      r.rhs[m].pretty();
         }
         return std::string();
       }},
  };
}

// ---- zhat -----------------------------------------------------------------

XSeries trefoil_phi() {
  XSeries s(20);
  for (auto [x, q, c] : std::vector<std::tuple<int, int, long>>{
           {0, 0, 1}, {2, 1, -1}, {3, 2, -1}, {5, 5, 1}, {6, 7, 1}, {8, 12, -1}, {9, 15, -1}})
    s.add_term(2 * x, QLaurent::monomial(2 * q, c));
  return s;
}

std::vector<Named> zhat_suite() {
  return {
      {"trefoil series and prefactor",
       [] {
         const ZhatResult r = zhat(word("1 1 1"), HalfInt::from_int(10));
         if (r.prefactor.to_string() != "-1 * q^(2/2) * x^(1/2)") return r.prefactor.to_string();
         return series_mismatch("phi", r.phi, trefoil_phi());
       }},
      {"figure-eight series and prefactor",
       [] {
         const ZhatResult r = zhat(word("1 -2 1 -2"), HalfInt::from_int(3));
         if (r.prefactor.to_string() != "1 * q^(0/2) * x^(1/2)") return r.prefactor.to_string();
         XSeries want(6);
         want.add_term(0, 1);
         want.add_term(2, 2);
         want.add_term(4, QLaurent::from_terms({{-2, 1}, {0, 3}, {2, 1}}));
         want.add_term(6, QLaurent::from_terms({{-4, 2}, {-2, 2}, {0, 5}, {2, 2}, {4, 2}}));
         return series_mismatch("phi", r.phi, want);
       }},
      {"closed forms agree with the state sums",
       [] {
         const HalfInt o10 = HalfInt::from_int(10);
         const XSeries t = phi_positive(word("1 1 1"), o10);
         for (auto f : {ClosedForm::TrefoilBraid, ClosedForm::TrefoilDirect})
           if (auto r = series_mismatch("trefoil", closed_form(f, o10), t); !r.empty()) return r;
         const HalfInt o4 = HalfInt::from_int(4);
         const XSeries e = phi_homogeneous(word("1 -2 1 -2"), o4);
         for (auto f : {ClosedForm::Fig8Braid, ClosedForm::Fig8Direct})
           if (auto r = series_mismatch("figure-eight", closed_form(f, o4), e); !r.empty()) return r;
         return std::string();
       }},
      {"positive and inverted state sums agree",
       [] {
         for (const auto& e : corpus()) {
           const BraidWord w = word(e.braid);
           if (analyze(w).cr_minus > 0) continue;
           const HalfInt o = HalfInt::from_int(8);
           if (auto r = series_mismatch(e.name, phi_homogeneous(w, o), phi_positive(w, o)); !r.empty())
             return r;
         }
         return std::string();
       }},
      {"classical limit is (1-x)/Delta",
       [] {
         for (const auto& e : corpus()) {
           const BraidWord w = word(e.braid);
           const HalfInt o = HalfInt::from_int(8);
           const XSeries phi1 = phi_homogeneous(w, o).at_q_one();
           if (auto r = series_mismatch(e.name, phi1, alexander_classical(w, o).inv_delta_series);
               !r.empty())
             return r;
         }
         return std::string();
       }},
      {"stabilized trefoil has the same Zhat",
       [] {
         const HalfInt o = HalfInt::from_int(8);
         return series_mismatch("1 1 1 2", zhat(word("1 1 1 2"), o).zhat, zhat(word("1 1 1"), o).zhat);
       }},
      {"conserved charge on random transfers",
       [] {
         std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
         auto next = [&](int bound) {
           seed ^= seed << 13;
           seed ^= seed >> 7;
           seed ^= seed << 17;
           return static_cast<int>(seed % static_cast<std::uint64_t>(bound));
         };
         for (int trial = 0; trial < 400; ++trial) {
           const int cols = 1 + next(4);
           std::vector<int> sign(static_cast<std::size_t>(cols));
           detail::HatState s(static_cast<std::size_t>(cols));
           for (int i = 0; i < cols; ++i) {
             sign[static_cast<std::size_t>(i)] = next(2) ? 1 : -1;
             s[static_cast<std::size_t>(i)] = next(5);
           }
           const int col = 1 + next(cols);
           const Letter l{col, sign[static_cast<std::size_t>(col - 1)]};
           const int before = detail::conserved_charge(sign, s);
           for (const auto& t : detail::crossing_transfers(sign, s, l, 6))
             if (detail::conserved_charge(sign, t.to) != before) return tuple_string(s) + " -> " + tuple_string(t.to);
         }
         return std::string();
       }},
  };
}

// ---- template -------------------------------------------------------------

std::vector<Named> template_suite() {
  return {
      {"orbits of the unknot and trefoil holders",
       [] {
         const auto u = enumerate_orbits(build_template(word("1")), 3);
         if (u.size() != 1 || u[0].degree != 1 || u[0].hyperbolic_sign != -1) return orbit_table(u);
         const auto t = enumerate_orbits(build_template(word("1 1 1")), 6);
         if (t.size() != 1 || t[0].degree != 3 || t[0].hyperbolic_sign != -1) return orbit_table(t);
         return std::string();
       }},
      {"orbit product equals determinant form",
       [] {
         for (const auto& e : corpus()) {
           const Template t = build_template(word(e.braid));
           if (auto r = series_mismatch(e.name, zeta_classical(t, 8), zeta_determinant(t, 8)); !r.empty())
             return r;
         }
         return std::string();
       }},
      {"zeta equals (1-x)/Delta",
       [] {
         for (const auto& e : corpus()) {
           const BraidWord w = word(e.braid);
           const XSeries z = zeta_classical(build_template(w), 8);
           if (auto r = series_mismatch(e.name, z, alexander_classical(w, HalfInt::from_int(8)).inv_delta_series);
               !r.empty())
             return r;
         }
         return std::string();
       }},
  };
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ring", "lawrence", "verma", "zhat", "template"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::vector<Named> props;
  if (name == "ring") props = ring_suite();
  else if (name == "lawrence") props = lawrence_suite();
  else if (name == "verma") props = verma_suite();
  else if (name == "zhat") props = zhat_suite();
  else if (name == "template") props = template_suite();
  else throw InputError("unknown suite '" + name + "'");

  std::vector<CheckResult> out;
  for (const auto& p : props) {
    CheckResult r{name, p.name, false, ""};
    try {
      r.detail = p.check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace flowloop
