#include <doctest.h>

#include <cmath>
#include <random>

#include "spinent/dicke.hpp"
#include "spinent/error.hpp"
#include "spinent/oracle.hpp"
#include "spinent/states.hpp"

using namespace spinent;
using doctest::Approx;

namespace {

DickeState basis(int n, std::size_t k) {
  CoefficientVector c(static_cast<std::size_t>(n) + 1);
  c[k] = 1.0;
  return DickeState::from_coefficients(n, c);
}

void check_vector(const CoefficientVector& got, const CoefficientVector& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    CHECK(std::abs(got[k] - want[k]) < tol);
  }
}

// Embeds a Dicke coefficient vector into the full space and back-projects the
// oracle's collective operator onto the symmetric sector.
CoefficientVector oracle_collective(const DickeState& s, oracle::Axis axis) {
  const auto full = oracle::dicke_to_full(s);
  const auto applied = oracle::apply_collective(full.amplitudes(), s.n_atoms(), axis);
  const int n = s.n_atoms();
  CoefficientVector out(static_cast<std::size_t>(n) + 1);
  // Symmetric output: every amplitude of weight k equals c'_k / sqrt(C(N,k)).
  for (int k = 0; k <= n; ++k) {
    const std::size_t idx = k == 0 ? 0 : ((std::size_t{1} << k) - 1);
    double binom = 1.0;
    for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
    out[k] = applied[idx] * std::sqrt(binom);
  }
  return out;
}

}  // namespace

TEST_CASE("state construction validates length and normalization") {
  CHECK_THROWS_AS(DickeState::from_coefficients(2, {1.0, 0.0}), LengthMismatch);
  CHECK_THROWS_AS(DickeState::from_coefficients(2, {1.0, 1.0, 1.0}), NormalizationError);
  CHECK_THROWS_AS(DickeState::from_coefficients(0, {1.0}), InvalidParameter);
  // Tolerated drift below 1e-6 is kept as given.
  const auto s = DickeState::from_coefficients(1, {std::sqrt(1.0 + 4e-7), 0.0});
  CHECK(s.norm_squared() == Approx(1.0 + 4e-7).epsilon(1e-12));
  CHECK(s.renormalized().norm_squared() == Approx(1.0).epsilon(1e-15));
  const auto r = DickeState::from_coefficients(2, {1.0, 1.0, 1.0}, true);
  CHECK(std::abs(r.coefficients()[1] - Complex(1.0 / std::sqrt(3.0))) < 1e-15);
  CHECK_THROWS_AS(DickeState::from_coefficients(2, {0.0, 0.0, 0.0}, true), NormalizationError);
}

TEST_CASE("apply_jz") {
  check_vector(apply_jz(basis(2, 0)), {1.0, 0.0, 0.0}, 1e-15);
  check_vector(apply_jz(basis(2, 1)), {0.0, 0.0, 0.0}, 1e-15);

  std::mt19937_64 rng(7);
  const auto s = random_state(4, rng);
  check_vector(apply_jz(s), oracle_collective(s, oracle::Axis::Z), 1e-12);
}

TEST_CASE("ladder operators") {
  const double r2 = std::sqrt(2.0);
  check_vector(apply_jplus(basis(2, 2)), {0.0, r2, 0.0}, 1e-15);
  check_vector(apply_jplus(basis(2, 0)), {0.0, 0.0, 0.0}, 1e-15);
  check_vector(apply_jplus(basis(3, 1)), {std::sqrt(3.0), 0.0, 0.0, 0.0}, 1e-15);
  check_vector(apply_jminus(basis(2, 0)), {0.0, r2, 0.0}, 1e-15);
  check_vector(apply_jminus(basis(2, 2)), {0.0, 0.0, 0.0}, 1e-15);

  SUBCASE("J+ and J- match the oracle's J_x +/- i J_y") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 3, 5, 8}) {
      const auto s = random_state(n, rng);
      const auto x = oracle_collective(s, oracle::Axis::X);
      const auto y = oracle_collective(s, oracle::Axis::Y);
      CoefficientVector plus(x.size()), minus(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) {
        plus[k] = x[k] + Complex(0, 1) * y[k];
        minus[k] = x[k] - Complex(0, 1) * y[k];
      }
      check_vector(apply_jplus(s), plus, 1e-12);
      check_vector(apply_jminus(s), minus, 1e-12);
    }
  }

  SUBCASE("adjoint consistency <phi|J+|psi> = conj(<psi|J-|phi>)") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + trial % 12;
      const auto psi = random_state(n, rng);
      const auto phi = random_state(n, rng);
      const Complex lhs = detail::inner(phi.coefficients(), apply_jplus(psi));
      const Complex rhs = std::conj(detail::inner(psi.coefficients(), apply_jminus(phi)));
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("collective moments of simple states") {
  SUBCASE("|1,1>") {
    const auto m = collective_moments(basis(2, 0));
    CHECK(m.jz == Approx(1.0));
    CHECK(m.jx == Approx(0.0));
    CHECK(m.jy == Approx(0.0));
    CHECK(m.jx2 == Approx(0.5));
    CHECK(m.jy2 == Approx(0.5));
    CHECK(m.jz2 == Approx(1.0));
    CHECK(m.sym_xy == Approx(0.0));
    CHECK(m.sym_xz == Approx(0.0));
    CHECK(m.sym_yz == Approx(0.0));
  }
  SUBCASE("(sqrt3/2)|1,1> + (1/2)|1,-1>") {
    const auto s = DickeState::from_coefficients(2, {std::sqrt(3.0) / 2, 0.0, 0.5});
    const auto m = collective_moments(s);
    CHECK(m.jz == Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(m.jx) < 1e-15);
    CHECK(std::abs(m.jy) < 1e-15);
    CHECK(m.jx2 == Approx((1 + std::sqrt(3.0) / 2) / 2).epsilon(1e-14));
    CHECK(m.jy2 == Approx((1 - std::sqrt(3.0) / 2) / 2).epsilon(1e-14));
  }
  SUBCASE("drift within tolerance is accepted") {
    CHECK_NOTHROW(collective_moments(DickeState::from_coefficients(1, {std::sqrt(1.0 + 9e-7), 0.0})));
  }
}

TEST_CASE("Casimir and commutator identities on random states") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 40;
    const auto s = random_state(n, rng);
    const auto m = collective_moments(s);
    CHECK(m.jx2 + m.jy2 + m.jz2 == Approx(casimir(n)).epsilon(1e-12));
    CHECK(m.jx2 >= m.jx * m.jx - 1e-12);
    CHECK(m.jy2 >= m.jy * m.jy - 1e-12);
    CHECK(m.jz2 >= m.jz * m.jz - 1e-12);

    // <[Jx, Jy]> = i <Jz>
    const auto psi = s.coefficients();
    const auto xy = detail::jx(detail::jy(psi, n), n);
    const auto yx = detail::jy(detail::jx(psi, n), n);
    const Complex comm = detail::inner(psi, xy) - detail::inner(psi, yx);
    CHECK(std::abs(comm - Complex(0.0, m.jz)) < 1e-10);
  }
}

TEST_CASE("pairwise correlators") {
  SUBCASE("|1,1>") {
    const auto c = pairwise_correlators(basis(2, 0));
    CHECK(c.zz == Approx(0.25));
    CHECK(c.xx == Approx(0.0));
    CHECK(c.yy == Approx(0.0));
  }
  SUBCASE("symmetric product state factorizes") {
    const auto s = coherent_state({2, 1.1, 0.4});
    const auto c = pairwise_correlators(s);
    const auto a = single_atom_means(collective_moments(s), 2);
    CHECK(c.xx == Approx(a.x * a.x).epsilon(1e-12));
    CHECK(c.yy == Approx(a.y * a.y).epsilon(1e-12));
    CHECK(c.zz == Approx(a.z * a.z).epsilon(1e-12));
    CHECK(c.xy == Approx(a.x * a.y).epsilon(1e-12));
    CHECK(c.xz == Approx(a.x * a.z).epsilon(1e-12));
    CHECK(c.yz == Approx(a.y * a.z).epsilon(1e-12));
  }
  SUBCASE("matches direct two-site evaluation, both orderings of mixed pairs") {
    std::mt19937_64 rng(19);
    for (int n : {2, 3, 4, 6, 9}) {
      const auto s = random_state(n, rng);
      const auto c = pairwise_correlators(s);
      const oracle::Evaluator ev(oracle::dicke_to_full(s));
      using oracle::Axis;
      CHECK(std::abs(c.xx - ev.pair(0, Axis::X, 1, Axis::X)) < 1e-10);
      CHECK(std::abs(c.yy - ev.pair(0, Axis::Y, 1, Axis::Y)) < 1e-10);
      CHECK(std::abs(c.zz - ev.pair(0, Axis::Z, 1, Axis::Z)) < 1e-10);
      CHECK(std::abs(c.xy - ev.pair(0, Axis::X, 1, Axis::Y)) < 1e-10);
      CHECK(std::abs(c.xy - ev.pair(0, Axis::Y, 1, Axis::X)) < 1e-10);
      CHECK(std::abs(c.xz - ev.pair(0, Axis::X, 1, Axis::Z)) < 1e-10);
      CHECK(std::abs(c.xz - ev.pair(0, Axis::Z, 1, Axis::X)) < 1e-10);
      CHECK(std::abs(c.yz - ev.pair(0, Axis::Y, 1, Axis::Z)) < 1e-10);
      CHECK(std::abs(c.yz - ev.pair(0, Axis::Z, 1, Axis::Y)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(pairwise_correlators(basis(1, 0)), InsufficientAtoms);
}

TEST_CASE("moments agree with the tensor oracle for N <= 10") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto s = random_state(n, rng);
      const auto a = collective_moments(s);
      const auto b = oracle::Evaluator(oracle::dicke_to_full(s)).moments();
      CHECK(std::abs(a.jx - b.jx) < 1e-10);
      CHECK(std::abs(a.jy - b.jy) < 1e-10);
      CHECK(std::abs(a.jz - b.jz) < 1e-10);
      CHECK(std::abs(a.jx2 - b.jx2) < 1e-10);
      CHECK(std::abs(a.jy2 - b.jy2) < 1e-10);
      CHECK(std::abs(a.jz2 - b.jz2) < 1e-10);
      CHECK(std::abs(a.sym_xy - b.sym_xy) < 1e-10);
      CHECK(std::abs(a.sym_xz - b.sym_xz) < 1e-10);
      CHECK(std::abs(a.sym_yz - b.sym_yz) < 1e-10);
    }
  }
}
