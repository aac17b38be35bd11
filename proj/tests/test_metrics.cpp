#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>

#include "spinent/error.hpp"
#include "spinent/metrics.hpp"
#include "spinent/states.hpp"

using namespace spinent;
using doctest::Approx;

namespace {

const double kSqrt3 = std::sqrt(3.0);

DickeState worked_example() {
  return DickeState::from_coefficients(2, {kSqrt3 / 2, 0.0, 0.5});
}

Frame frame_of(const DickeState& s) { return build_frame(mean_spin(collective_moments(s))); }

TransverseVariances variances_of(const DickeState& s) {
  return transverse_variances(collective_moments(s), frame_of(s));
}

}  // namespace

TEST_CASE("transverse variances") {
  SUBCASE("coherent states sit at N/4 on both axes") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto spec = random_coherent_spec(2 + trial % 15, rng);
      const auto v = variances_of(coherent_state(spec));
      CHECK(std::abs(v.x - 0.25 * spec.n_atoms) < 1e-10);
      CHECK(std::abs(v.y - 0.25 * spec.n_atoms) < 1e-10);
    }
  }
  SUBCASE("worked example") {
    const auto v = variances_of(worked_example());
    CHECK(v.x == Approx(0.5 + kSqrt3 / 4).epsilon(1e-14));
    CHECK(v.y == Approx(0.5 - kSqrt3 / 4).epsilon(1e-13));
  }
  SUBCASE("Dicke |3/2, 1/2>") {
    const auto v = variances_of(dicke_state(3, 0.5));
    CHECK(v.x == Approx(1.75).epsilon(1e-14));
    CHECK(v.y == Approx(1.75).epsilon(1e-14));
  }
  SUBCASE("small negative residue is clamped, larger one is a bug") {
    CollectiveMoments m;
    m.jz = 1.0;
    m.jx2 = -5e-13;
    m.jy2 = 0.3;
    const auto f = build_frame(mean_spin(m));
    CHECK(transverse_variances(m, f).x == 0.0);
    m.jx2 = -1e-6;
    CHECK_THROWS_AS(transverse_variances(m, f), std::logic_error);
  }
}

TEST_CASE("correlation terms") {
  const auto c = correlation_terms(variances_of(worked_example()), 2);
  CHECK(c.x == Approx(kSqrt3 / 4).epsilon(1e-13));
  CHECK(c.y == Approx(-kSqrt3 / 4).epsilon(1e-13));

  const auto d = correlation_terms(variances_of(dicke_state(3, 0.5)), 3);
  CHECK(d.x == Approx(1.0).epsilon(1e-14));
  CHECK(d.y == Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(correlation_terms({0.25, 0.25}, 1), InsufficientAtoms);

  SUBCASE("pairwise route on the worked example") {
    const auto s = worked_example();
    const auto p = correlation_terms_pairwise(s, frame_of(s));
    CHECK(p.x == Approx(kSqrt3 / 4).epsilon(1e-12));
    CHECK(p.y == Approx(-kSqrt3 / 4).epsilon(1e-12));
  }
  SUBCASE("pairwise route vanishes on coherent states") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
      const auto spec = random_coherent_spec(2 + trial % 9, rng);
      const auto s = coherent_state(spec);
      const auto p = correlation_terms_pairwise(s, frame_of(s));
      CHECK(std::abs(p.x) < 1e-9);
      CHECK(std::abs(p.y) < 1e-9);
    }
  }
  SUBCASE("pairwise route agrees with the collective route") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 2 + trial % 11;
      const auto s = random_state(n, rng);
      const auto f = frame_of(s);
      const auto a = correlation_terms(transverse_variances(collective_moments(s), f), n);
      const auto b = correlation_terms_pairwise(s, f);
      CHECK(std::abs(a.x - b.x) < 1e-9);
      CHECK(std::abs(a.y - b.y) < 1e-9);
    }
  }
  SUBCASE("pairwise route with mean spin along z uses the frame angles") {
    for (int n : {2, 3, 6}) {
      for (double m = 0.5 * n; m > 0.0; m -= 1.0) {
        const auto s = dicke_state(n, m);
        const auto f = frame_of(s);
        REQUIRE(f.degenerate_phi);
        const auto a = correlation_terms(transverse_variances(collective_moments(s), f), n);
        const auto b = correlation_terms_pairwise(s, f);
        CHECK(std::abs(a.x - b.x) < 1e-12);
        CHECK(std::abs(a.y - b.y) < 1e-12);
      }
    }
  }
}

TEST_CASE("entanglement parameter and its alternative forms") {
  CHECK(entanglement_parameter({0.0, 0.0}) == 0.0);
  CHECK(entanglement_parameter({kSqrt3 / 4, -kSqrt3 / 4}) == Approx(0.1875).epsilon(1e-15));
  CHECK(entanglement_parameter({1.0, 1.0}) == 1.0);

  CHECK(s_from_variances({0.5, 0.5}, 2) == Approx(0.0));
  CHECK(std::abs(s_from_variances({1.25, 1.25}, 5)) < 1e-15);
  CHECK(s_from_variances({0.5 + kSqrt3 / 4, 0.5 - kSqrt3 / 4}, 2) ==
        Approx(0.1875).epsilon(1e-14));
  CHECK(s_from_variances({1.75, 1.75}, 3) == Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(s_from_variances({0.25, 0.25}, 1), InsufficientAtoms);

  const auto q_worked = squeezing_parameters({0.5 + kSqrt3 / 4, 0.5 - kSqrt3 / 4}, 2);
  CHECK(q_worked.x == Approx(1.3660254037844386).epsilon(1e-14));
  CHECK(q_worked.y == Approx(0.3660254037844386).epsilon(1e-13));
  const auto q_dicke = squeezing_parameters({1.75, 1.75}, 3);
  CHECK(q_dicke.x == Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-14));
  CHECK(q_dicke.y == Approx(std::sqrt(7.0 / 3.0)).epsilon(1e-14));

  for (int n : {2, 3, 7, 40}) CHECK(std::abs(s_from_q({1.0, 1.0}, n)) < 1e-12);
  CHECK(s_from_q(q_worked, 2) == Approx(0.1875).epsilon(1e-13));
  CHECK(s_from_q(q_dicke, 3) == Approx(1.0).epsilon(1e-13));

  const auto xi = spectroscopic_parameters(q_worked, 0.5, 2);
  CHECK(xi.x == Approx(2.7320508075688772).epsilon(1e-14));
  CHECK(xi.y == Approx(0.7320508075688772).epsilon(1e-13));
  CHECK(s_from_xi(xi, 0.5, 2) == Approx(0.1875).epsilon(1e-13));
  const auto xi_coh = spectroscopic_parameters({1.0, 1.0}, 2.0, 4);
  CHECK(xi_coh.x == 1.0);
  CHECK(xi_coh.y == 1.0);
  CHECK_THROWS_AS(spectroscopic_parameters({1.0, 1.0}, 0.0, 4), DegenerateMeanSpin);
}

TEST_CASE("classify") {
  CHECK(classify(false, 0.0) == Classification::Unentangled);
  CHECK(classify(false, 1e-10) == Classification::Unentangled);
  CHECK(classify(false, 2e-10) == Classification::Entangled);
  CHECK(classify(false, 0.1875) == Classification::Entangled);
  CHECK(classify(true, 5.0) == Classification::DegenerateFrame);
  CHECK(classify(false, 1e-6, 1e-5) == Classification::Unentangled);

  for (auto c : {Classification::Unentangled, Classification::Entangled,
                 Classification::DegenerateFrame}) {
    CHECK(classification_from_string(to_string(c)) == c);
  }
  CHECK_THROWS_AS(classification_from_string("entangled"), ParseError);
}

TEST_CASE("analyze") {
  SUBCASE("worked example") {
    const auto a = analyze(worked_example());
    REQUIRE(a.metrics);
    CHECK(a.classification == Classification::Entangled);
    CHECK(a.metrics->s_param == Approx(0.1875).epsilon(1e-12));
    CHECK(a.metrics->corr_x == Approx(kSqrt3 / 4).epsilon(1e-12));
    CHECK(a.metrics->corr_y == Approx(-kSqrt3 / 4).epsilon(1e-12));
    CHECK(a.metrics->xi_rx == Approx(2.7320508075688772).epsilon(1e-12));
    CHECK(a.metrics->xi_ry == Approx(0.7320508075688772).epsilon(1e-12));
  }
  SUBCASE("GHZ-type state is degenerate") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto a = analyze(DickeState::from_coefficients(2, {r, 0.0, r}));
    CHECK(a.classification == Classification::DegenerateFrame);
    CHECK_FALSE(a.frame);
    CHECK_FALSE(a.metrics);
  }
  SUBCASE("Dicke m = 0 is degenerate") {
    CHECK(analyze(dicke_state(2, 0.0)).classification == Classification::DegenerateFrame);
    CHECK(analyze(dicke_state(6, 0.0)).classification == Classification::DegenerateFrame);
  }
  SUBCASE("a looser epsilon turns a tiny mean spin degenerate") {
    const auto s = DickeState::from_coefficients(2, {std::sqrt(0.5 + 1e-8), 0.0,
                                                     std::sqrt(0.5 - 1e-8)});
    CHECK(analyze(s).classification != Classification::DegenerateFrame);
    AnalysisOptions loose;
    loose.frame_epsilon = 1e-6;
    CHECK(analyze(s, loose).classification == Classification::DegenerateFrame);
  }
  CHECK_THROWS_AS(analyze(dicke_state(1, 0.5)), InsufficientAtoms);
}

TEST_CASE("Dicke states follow the closed form") {
  for (int n = 2; n <= 12; ++n) {
    const double j = 0.5 * n;
    for (double m = j; m >= -j; m -= 1.0) {
      if (std::abs(m) < 1e-9) continue;
      const auto a = analyze(dicke_state(n, m));
      REQUIRE(a.metrics);
      const double expected = std::pow((j * (j + 1) - m * m) / 2 - 0.25 * n, 2);
      CHECK(std::abs(a.metrics->s_param - expected) < 1e-10);
      if (std::abs(std::abs(m) - j) < 1e-9) {
        CHECK(a.classification == Classification::Unentangled);
      } else {
        CHECK(a.classification == Classification::Entangled);
      }
    }
  }
}

TEST_CASE("separable states have S = 0") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> pick_n(2, 50);
    const auto spec = random_coherent_spec(pick_n(rng), rng);
    const auto a = analyze(coherent_state(spec));
    REQUIRE(a.metrics);
    CHECK(a.metrics->s_param <= 1e-10);
    CHECK(std::abs(a.metrics->q_x - 1.0) < 1e-9);
    CHECK(std::abs(a.metrics->q_y - 1.0) < 1e-9);
    CHECK(std::abs(a.metrics->xi_rx - 1.0) < 1e-9);
    CHECK(a.classification == Classification::Unentangled);
  }
}

TEST_CASE("properties on random states") {
  std::mt19937_64 rng(77);
  int stronger_form_violations = 0;
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 19;
    const auto s = random_state(n, rng);
    const auto a = analyze(s);
    if (!a.metrics) continue;
    ++checked;
    const auto& r = *a.metrics;
    const double magnitude = a.mean.magnitude;

    CHECK(r.corr_x == r.var_xp - 0.25 * n);
    CHECK(r.corr_y == r.var_yp - 0.25 * n);
    CHECK(r.s_param == 0.5 * (r.corr_x * r.corr_x + r.corr_y * r.corr_y));
    CHECK(r.var_xp * r.var_yp >= magnitude * magnitude / 4 - 1e-9);

    // Route identities: absolute 1e-12 up to N = 10, relative beyond, where S
    // itself reaches the hundreds.
    const TransverseVariances v{r.var_xp, r.var_yp};
    const double route_tol = 1e-12 * (n <= 10 ? 1.0 : std::max(1.0, r.s_param));
    CHECK(std::abs(s_from_variances(v, n) - r.s_param) < route_tol);
    CHECK(std::abs(s_from_q({r.q_x, r.q_y}, n) - r.s_param) < route_tol);
    CHECK(std::abs(s_from_xi({r.xi_rx, r.xi_ry}, magnitude, n) - r.s_param) < route_tol);

    if (r.corr_x < -1e-12) CHECK(r.corr_y > 0.0);
    if (r.corr_y < -1e-12) CHECK(r.corr_x > 0.0);

    if (std::min(r.q_x, r.q_y) < 1.0 - 1e-9) CHECK(r.s_param > 1e-10);

    if (r.q_x * r.q_y < 1.0 - 1e-12) ++stronger_form_violations;
  }
  CHECK(checked > 1900);
  // Only the Robertson form is a theorem; Q_x Q_y >= 1 is reported, not enforced.
  MESSAGE("Q_x Q_y < 1 on " << stronger_form_violations << " of " << checked << " random states");
}

TEST_CASE("spin squeezing implies S > 0 along twisting sweeps") {
  const double pi = std::numbers::pi;
  int squeezed = 0;
  for (double theta : {pi / 2, pi / 3, pi / 4}) {
    for (int i = 1; i <= 50; ++i) {
      const double mu = 0.5 * i / 50;
      const auto a = analyze(twisted_state({10, theta, 0.0}, mu));
      REQUIRE(a.metrics);
      if (std::min(a.metrics->q_x, a.metrics->q_y) < 1.0 - 1e-9) {
        ++squeezed;
        CHECK(a.metrics->s_param > 1e-10);
      }
    }
  }
  CHECK(squeezed > 0);
}

TEST_CASE("entanglement without squeezing") {
  const auto a = analyze(dicke_state(6, 1.0));
  REQUIRE(a.metrics);
  CHECK(a.metrics->s_param == Approx(16.0).epsilon(1e-12));
  CHECK(std::min(a.metrics->q_x, a.metrics->q_y) >= 1.0);
  CHECK(a.classification == Classification::Entangled);
}
