// One PASS/FAIL line per acceptance criterion.  All comparisons are exact.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "flowloop/bifurcation.hpp"
#include "flowloop/corpus.hpp"
#include "flowloop/knot_holder.hpp"
#include "flowloop/lawrence.hpp"
#include "flowloop/qcombinatorics.hpp"
#include "flowloop/verma.hpp"
#include "flowloop/zhat.hpp"
#include "json.hpp"

using namespace flowloop;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

BraidWord word(const std::string& b) { return parse_braid(b); }

XSeries from_json_field(const std::string& json, const char* field) {
  return series_from_json(nlohmann::json::parse(json)[field].dump());
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + err.str();
}

Outcome trefoil_series() {
  Outcome o;
  int code = 0;
  const std::string text = run_cli({"zhat", "--braid", "1 1 1", "--order", "10"}, code);
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(text.find("phi: 1 - q*x^2 - q^2*x^3 + q^5*x^5 + q^7*x^6 - q^12*x^8 - q^15*x^9 + O(x^11)\n") !=
                std::string::npos,
            "phi line: " + text);
  o.require(text.find("prefactor: -1 * q^(2/2) * x^(1/2)\n") != std::string::npos, "prefactor line");
  const std::string json = run_cli({"zhat", "--braid", "1 1 1", "--order", "10", "--format", "json"}, code);
  XSeries want;
  want.add_term(0, 1);
  want.add_term(4, QLaurent::monomial(2, -1));
  want.add_term(6, QLaurent::monomial(4, -1));
  want.add_term(10, QLaurent::monomial(10, 1));
  want.add_term(12, QLaurent::monomial(14, 1));
  want.add_term(16, QLaurent::monomial(24, -1));
  want.add_term(18, QLaurent::monomial(30, -1));
  o.require(from_json_field(json, "phi") == want, "phi from json");
  o.require(from_json_field(json, "zhat") == XSeries::monomial(1, QLaurent::monomial(2, -1)) * want, "zhat");
  return o;
}

Outcome figure_eight_series() {
  Outcome o;
  int code = 0;
  const std::string json = run_cli({"zhat", "--braid", "1 -2 1 -2", "--order", "3", "--format", "json"}, code);
  o.require(code == 0, "exit code " + std::to_string(code));
  const XSeries phi = from_json_field(json, "phi");
  o.require(phi.coefficient(0) == QLaurent(1), "x^0");
  o.require(phi.coefficient(2) == QLaurent(2), "x^1");
  o.require(phi.coefficient(4) == QLaurent::from_terms({{-2, 1}, {0, 3}, {2, 1}}), "x^2");
  const auto doc = nlohmann::json::parse(json);
  o.require(doc["prefactor"]["sign"] == 1 && doc["prefactor"]["q_exp_half"] == 0 &&
                doc["prefactor"]["x_exp_half"] == 1,
            "prefactor " + doc["prefactor"].dump());
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  const HalfInt o10 = HalfInt::from_int(10);
  const XSeries trefoil = phi_positive(word("1 1 1"), o10);
  o.require(trefoil == closed_form(ClosedForm::TrefoilBraid, o10), "trefoil braid-model sum");
  o.require(trefoil == closed_form(ClosedForm::TrefoilDirect, o10), "trefoil direct-model sum");
  const HalfInt o4 = HalfInt::from_int(4);
  const XSeries fig8 = phi_homogeneous(word("1 -2 1 -2"), o4);
  o.require(fig8 == closed_form(ClosedForm::Fig8Braid, o4), "figure-eight braid-model sum");
  o.require(fig8 == closed_form(ClosedForm::Fig8Direct, o4), "figure-eight direct-model sum");
  return o;
}

Outcome classical_limit() {
  Outcome o;
  const HalfInt o8 = HalfInt::from_int(8);
  int big = 0;
  for (const auto& e : corpus()) {
    const BraidWord w = word(e.braid);
    o.require(alexander_from_lawrence(w) == alexander_from_burau(w), e.name + ": Delta routes differ");
    o.require(phi_homogeneous(w, o8).at_q_one() == alexander_classical(w, o8).inv_delta_series,
              e.name + ": Phi(q=1) != (1-x)/Delta");
    if (w.size() >= 5) ++big;
  }
  o.require(big >= 2, "fewer than two knots with at least 5 crossings");
  return o;
}

Outcome representation_soundness() {
  Outcome o;
  for (Convention conv : {Convention::Half, Convention::Under})
    for (int n = 2; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        const std::string at = " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
        o.require(mpz_class(static_cast<long>(lawrence_states(n, m).size())) ==
                      generalized_binomial(m + n - 2, n - 2),
                  "dimension" + at);
        std::vector<StateMatrix> pos, neg;
        for (int i = 1; i <= n - 1; ++i) {
          pos.push_back(generator_matrix(n, m, i, 1, conv));
          neg.push_back(generator_matrix(n, m, i, -1, conv));
        }
        for (std::size_t i = 0; i < pos.size(); ++i) {
          o.require((pos[i] * neg[i]).is_identity() && (neg[i] * pos[i]).is_identity(), "inverse" + at);
          for (const auto& [from, row] : pos[i].rows())
            for (const auto& [to, v] : row) {
              int total = 0;
              for (int l : to) total += l;
              o.require(total == m, "weight" + at);
            }
          if (i + 1 < pos.size())
            o.require(pos[i] * pos[i + 1] * pos[i] == pos[i + 1] * pos[i] * pos[i + 1], "braid relation" + at);
          for (std::size_t j = i + 2; j < pos.size(); ++j)
            o.require(pos[i] * pos[j] == pos[j] * pos[i], "far commutation" + at);
        }
      }
  return o;
}

Outcome unknot_closure() {
  Outcome o;
  XSeries want(12);
  want.add_term(0, 1);
  want.add_term(2, -1);
  for (const char* b : {"1", "1 2", "1 1 1"}) o.require(unknot_closure_check(word(b), 6) == want, b);
  return o;
}

Outcome kohno() {
  Outcome o;
  for (const auto& e : corpus()) {
    const BraidWord w = word(e.braid);
    if (w.strands() > 3) continue;
    const KohnoReport r = kohno_check(w, 3);
    o.require(r.lhs.size() == 4 && r.holds(), e.name);
  }
  return o;
}

Outcome bifurcations() {
  Outcome o;
  for (int f : {-2, -1, 0, 1, 2, 4}) {
    const Framing fr{HalfInt::from_twice(f)};
    const std::string at = "f=" + fr.value.to_string();
    o.require(saddle_node_identity(fr, HalfInt::from_int(12)) == XSeries::one(24), "saddle-node " + at);
    const auto [a, b] = period_doubling_identity(fr, HalfInt::from_int(12));
    o.require(a == b, "period doubling " + at);
  }
  return o;
}

Outcome invariance() {
  Outcome o;
  const HalfInt o8 = HalfInt::from_int(8);
  o.require(zhat(word("1 1 1"), o8).zhat == zhat(word("1 1 1 2"), o8).zhat, "Zhat(1 1 1) != Zhat(1 1 1 2)");
  for (const auto& e : corpus()) {
    const BraidWord w = word(e.braid);
    o.require(zeta_classical(build_template(w), 8) == phi_homogeneous(w, o8).at_q_one(), e.name);
  }
  return o;
}

Outcome stabilization() {
  Outcome o;
  const int order = 8;
  const HalfInt o8 = HalfInt::from_int(order);
  for (const auto& e : corpus()) {
    const BraidWord w = word(e.braid);
    PhiOptions base, raised;
    base.check_stabilization = raised.check_stabilization = false;
    base.label_cap = order;
    raised.label_cap = order + 2;
    o.require(phi_homogeneous(w, o8, base) == phi_homogeneous(w, o8, raised), e.name + ": label cap");
    if (analyze(w).cr_minus == 0)
      o.require(phi_positive(w, o8, base) == phi_positive(w, o8, raised), e.name + ": sector cutoff");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> check;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {1, "trefoil series and prefactor", trefoil_series, 1},
      {2, "figure-eight series and prefactor", figure_eight_series, 5},
      {3, "state sums agree with the closed forms", oracle_agreement, 0},
      {4, "Phi at q=1 equals (1-x)/Delta on the corpus", classical_limit, 5},
      {5, "representation soundness for n<=4, m<=4", representation_soundness, 30},
      {6, "unknot closure sum is 1-z", unknot_closure, 0},
      {7, "graded trace identity to z^3", kohno, 60},
      {8, "bifurcation identities to order 12", bifurcations, 0},
      {9, "Zhat stabilization invariance and zeta = Phi(q=1)", invariance, 0},
      {10, "raising cap and cutoff by 2 changes nothing", stabilization, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r.ok = false;
      r.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) r.require(false, "over time budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (r.ok ? "PASS" : "FAIL") << " " << c.title << " (" << secs << " s)";
    if (!r.ok) line << " -- " << r.note;
    std::cout << line.str() << '\n';
    all = all && r.ok;
  }
  return all ? 0 : 1;
}
