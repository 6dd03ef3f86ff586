#include <cstdlib>

#include "doctest.h"
#include "flowloop/corpus.hpp"
#include "flowloop/zhat.hpp"
#include "json.hpp"
#include "random.hpp"

using namespace flowloop;

namespace {

const HalfInt kOrder8 = HalfInt::from_int(8);

XSeries trefoil_phi() {
  XSeries s(20);
  s.add_term(0, 1);
  s.add_term(4, QLaurent::monomial(2, -1));
  s.add_term(6, QLaurent::monomial(4, -1));
  s.add_term(10, QLaurent::monomial(10, 1));
  s.add_term(12, QLaurent::monomial(14, 1));
  s.add_term(16, QLaurent::monomial(24, -1));
  s.add_term(18, QLaurent::monomial(30, -1));
  return s;
}

XSeries figure_eight_phi() {
  XSeries s(6);
  s.add_term(0, 1);
  s.add_term(2, 2);
  s.add_term(4, QLaurent::from_terms({{-2, 1}, {0, 3}, {2, 1}}));
  s.add_term(6, QLaurent::from_terms({{-4, 2}, {-2, 2}, {0, 5}, {2, 2}, {4, 2}}));
  return s;
}

// Random homogeneous knot braid on up to 3 strands.
BraidWord random_knot(bool positive_only) {
  while (true) {
    const BraidWord w = testing::random_homogeneous_word(testing::uniform(2, 3), testing::uniform(1, 6));
    const BraidStats s = analyze(w);
    if (!s.is_homogeneous || !s.is_knot()) continue;
    if (positive_only && s.cr_minus > 0) continue;
    return w;
  }
}

}  // namespace

TEST_CASE("trefoil") {
  const ZhatResult r = zhat(parse_braid("1 1 1"), HalfInt::from_int(10));
  CHECK(r.phi == trefoil_phi());
  CHECK(r.prefactor == Prefactor{-1, 2, 1});
  CHECK(r.prefactor.to_string() == "-1 * q^(2/2) * x^(1/2)");
  CHECK(r.zhat == XSeries::monomial(1, QLaurent::monomial(2, -1)) * trefoil_phi());
  CHECK(r.phi.pretty() == "1 - q*x^2 - q^2*x^3 + q^5*x^5 + q^7*x^6 - q^12*x^8 - q^15*x^9 + O(x^11)");
}

TEST_CASE("figure-eight") {
  const ZhatResult r = zhat(parse_braid("1 -2 1 -2"), HalfInt::from_int(3));
  CHECK(r.phi == figure_eight_phi());
  CHECK(r.prefactor == Prefactor{1, 0, 1});
  CHECK(r.genus == HalfInt::from_int(1));
  CHECK(r.hopf_invariant == HalfInt::from_int(1));
}

TEST_CASE("figure-eight is amphichiral") {
  CHECK(phi_homogeneous(parse_braid("-1 2 -1 2"), HalfInt::from_int(5)) ==
        phi_homogeneous(parse_braid("1 -2 1 -2"), HalfInt::from_int(5)));
}

TEST_CASE("closed forms") {
  const HalfInt o11 = HalfInt::from_int(11);
  CHECK(closed_form(ClosedForm::TrefoilDirect, o11) == closed_form(ClosedForm::TrefoilBraid, o11));
  CHECK(closed_form(ClosedForm::TrefoilDirect, HalfInt::from_int(10)) == trefoil_phi());
  CHECK(closed_form(ClosedForm::Fig8Direct, HalfInt::from_int(3)) == figure_eight_phi());
  CHECK(closed_form(ClosedForm::Fig8Braid, HalfInt::from_int(3)) == figure_eight_phi());
  CHECK(closed_form(ClosedForm::TrefoilBraid, HalfInt::from_int(10)) ==
        phi_positive(parse_braid("1 1 1"), HalfInt::from_int(10)));
  const HalfInt o5 = HalfInt::from_int(5);
  const XSeries fig8 = phi_homogeneous(parse_braid("1 -2 1 -2"), o5);
  CHECK(closed_form(ClosedForm::Fig8Braid, o5) == fig8);
  CHECK(closed_form(ClosedForm::Fig8Direct, o5) == fig8);
  CHECK_THROWS_AS(closed_form(ClosedForm::Fig8Direct, HalfInt::from_int(-1)), InputError);
}

TEST_CASE("positive and inverted state sums agree") {
  for (const char* b : {"1 1 1", "1 1 1 2", "1 1 1 1 1", "1 2 1 2 1 2 1 2"}) {
    CAPTURE(b);
    CHECK(phi_homogeneous(parse_braid(b), kOrder8) == phi_positive(parse_braid(b), kOrder8));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const BraidWord w = random_knot(true);
    CAPTURE(render_braid(w));
    CHECK(phi_homogeneous(w, HalfInt::from_int(6)) == phi_positive(w, HalfInt::from_int(6)));
  }
}

TEST_CASE("phi is invariant under cyclic rotation of the word") {
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord w = random_knot(false);
    CAPTURE(render_braid(w));
    const XSeries phi = phi_homogeneous(w, HalfInt::from_int(5));
    for (std::size_t k = 1; k < w.size(); ++k) CHECK(phi_homogeneous(w.rotated(k), HalfInt::from_int(5)) == phi);
  }
}

TEST_CASE("classical limit matches the Alexander polynomial") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const BraidWord w = parse_braid(e.braid);
    CHECK(phi_homogeneous(w, kOrder8).at_q_one() == alexander_classical(w, kOrder8).inv_delta_series);
  }
  for (int trial = 0; trial < 15; ++trial) {
    const BraidWord w = random_knot(false);
    CAPTURE(render_braid(w));
    const HalfInt o = HalfInt::from_int(6);
    CHECK(phi_homogeneous(w, o).at_q_one() == alexander_classical(w, o).inv_delta_series);
  }
}

TEST_CASE("phi is normalized") {
  for (const auto& e : corpus()) {
    const XSeries phi = phi_homogeneous(parse_braid(e.braid), HalfInt::from_int(6));
    CHECK(phi.is_integral());
    CHECK(phi.coefficient(0) == QLaurent(1));
  }
}

TEST_CASE("raising the label cap changes nothing") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    const BraidWord w = parse_braid(e.braid);
    const HalfInt o = HalfInt::from_int(6);
    PhiOptions wide;
    wide.label_cap = 9;
    wide.check_stabilization = false;
    CHECK(phi_homogeneous(w, o, wide) == phi_homogeneous(w, o));
  }
}

TEST_CASE("a cap that is too small is caught") {
  PhiOptions tight;
  tight.label_cap = 0;
  CHECK_THROWS_AS(phi_homogeneous(parse_braid("1 -2 1 -2"), HalfInt::from_int(4), tight), InternalError);
  CHECK_THROWS_AS(phi_positive(parse_braid("1 1 1"), HalfInt::from_int(10), tight), InternalError);
}

TEST_CASE("rejected negative-crossing orientation") {
  PhiOptions mirrored;
  mirrored.mirrored_negative_roles = true;
  XSeries want(6);
  want.add_term(0, 1);
  want.add_term(4, QLaurent::from_terms({{-2, 1}, {2, 1}}));
  want.add_term(6, -1);
  const XSeries got = phi_homogeneous(parse_braid("1 -2 1 -2"), HalfInt::from_int(3), mirrored);
  CHECK(got == want);
  CHECK(got != figure_eight_phi());
}

TEST_CASE("stabilization leaves Zhat unchanged") {
  CHECK(zhat(parse_braid("1 1 1"), kOrder8).zhat == zhat(parse_braid("1 1 1 2"), kOrder8).zhat);
  CHECK(zhat(parse_braid("1 -2 1 -2"), HalfInt::from_int(5)).zhat ==
        zhat(parse_braid("1 -2 1 -2 3"), HalfInt::from_int(5)).zhat);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(phi_homogeneous(parse_braid("1 -1 1"), kOrder8), InputError);
  CHECK_THROWS_AS(phi_homogeneous(parse_braid("1 1"), kOrder8), InputError);
  CHECK_THROWS_AS(phi_positive(parse_braid("1 -2 1 -2"), kOrder8), InputError);
  CHECK_THROWS_AS(phi_homogeneous(parse_braid("1"), HalfInt::from_int(-1)), InputError);
  PhiOptions bad;
  bad.label_cap = -1;
  CHECK_THROWS_AS(phi_homogeneous(parse_braid("1"), kOrder8, bad), InputError);
}

TEST_CASE("prefactor identity on random knots") {
  for (int trial = 0; trial < 50; ++trial) {
    const BraidStats s = analyze(random_knot(false));
    const Prefactor p = zhat_prefactor(s);
    const HalfInt lambda = HalfInt::from_int(s.cr_minus - s.col_minus);
    CHECK(p.q_twice == (s.genus - lambda).twice());
    CHECK(p.x_twice == s.genus.twice() - 1);
  }
}

TEST_CASE("transfers conserve the charge") {
  for (int trial = 0; trial < 300; ++trial) {
    const int cols = testing::uniform(1, 4);
    std::vector<int> sign;
    detail::HatState s;
    for (int i = 0; i < cols; ++i) {
      sign.push_back(testing::uniform(0, 1) ? 1 : -1);
      s.push_back(testing::uniform(0, 5));
    }
    const int col = testing::uniform(1, cols);
    const Letter l{col, sign[static_cast<std::size_t>(col - 1)]};
    for (const auto& t : detail::crossing_transfers(sign, s, l, 5)) {
      CHECK(detail::conserved_charge(sign, t.to) == detail::conserved_charge(sign, s));
      for (int v : t.to) {
        CHECK(v >= 0);
        CHECK(v <= 5);
      }
      CHECK(t.weight.min_exponent() >= 0);
    }
  }
}

TEST_CASE("json round trip") {
  const BraidWord w = parse_braid("1 -2 1 -2");
  const ZhatResult r = zhat(w, HalfInt::from_int(4));
  const auto doc = nlohmann::json::parse(zhat_json(r, w));
  CHECK(doc["braid"] == "n=3; 1 -2 1 -2");
  CHECK(doc["prefactor"]["sign"] == 1);
  CHECK(doc["prefactor"]["x_exp_half"] == 1);
  CHECK(series_from_json(doc["phi"].dump()).terms() == r.phi.terms());
  XSeries back = series_from_json(doc["zhat"].dump());
  CHECK(back.terms() == r.zhat.terms());
  CHECK(series_from_json(series_to_json(r.phi)).terms() == r.phi.terms());
  CHECK_THROWS_AS(series_from_json("{"), InputError);
  CHECK_THROWS_AS(series_from_json("[{\"x_exp_half\": 0}]"), InputError);
  CHECK_THROWS_AS(series_from_json("[{\"x_exp_half\": 0, \"coeff\": [{\"q_exp_half\": 0, \"value\": \"1x\"}]}]"),
                  InputError);
}

TEST_CASE("huge coefficients survive json") {
  XSeries s;
  s.add_term(4, QLaurent::constant(mpz_class("-123456789012345678901234567890")));
  CHECK(series_from_json(series_to_json(s)) == s);
}

TEST_CASE("results do not depend on the thread count") {
  const BraidWord w = parse_braid("2 -1 2 -1 -1 2");
  setenv("FLOWLOOP_THREADS", "1", 1);
  const XSeries one = phi_homogeneous(w, HalfInt::from_int(6));
  setenv("FLOWLOOP_THREADS", "4", 1);
  const XSeries four = phi_homogeneous(w, HalfInt::from_int(6));
  unsetenv("FLOWLOOP_THREADS");
  CHECK(one == four);
}
