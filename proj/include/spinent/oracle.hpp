#pragma once

// Brute-force reference engine over the full 2^N product space.
//
// Basis index bits: atom 0 is the most significant bit; a 0 bit means the atom
// is in its upper level |u> (m_i = +1/2), a 1 bit means |l> (m_i = -1/2).
// Operators act matrix-free through bit manipulation and are never stored as
// 2^N x 2^N matrices. Nothing here goes through the Dicke-basis ladder
// algebra; collective quantities are sums of single-atom actions.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spinent/dicke.hpp"
#include "spinent/metrics.hpp"

namespace spinent::oracle {

enum class Axis { X = 0, Y = 1, Z = 2 };
inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

inline constexpr int kDefaultDimensionCap = 14;

class FullState {
 public:
  /// Validates 2^N length, N <= cap and unit norm.
  static FullState from_amplitudes(int n_atoms, std::vector<Complex> amplitudes,
                                   int cap = kDefaultDimensionCap);

  int n_atoms() const noexcept { return n_atoms_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

 private:
  FullState(int n_atoms, std::vector<Complex> amplitudes)
      : n_atoms_(n_atoms), amplitudes_(std::move(amplitudes)) {}

  int n_atoms_;
  std::vector<Complex> amplitudes_;
};

/// Basis state of Hamming weight k gets c_{j-k} / sqrt(C(N,k)).
FullState dicke_to_full(const DickeState& state, int cap = kDefaultDimensionCap);

/// Inverse map; throws NotSymmetric if amplitudes differ within a
/// fixed-weight orbit by more than `tolerance`.
DickeState full_to_dicke(const FullState& state, double tolerance = 1e-12);

/// Tensor product of single-atom spinors (amplitude of |u>, amplitude of |l>).
FullState product_state(std::span<const std::array<Complex, 2>> spinors,
                        int cap = kDefaultDimensionCap);

/// J_{atom, axis} applied to an arbitrary 2^N vector (identity on other atoms).
std::vector<Complex> apply_single(std::span<const Complex> amplitudes, int n_atoms, int atom,
                                  Axis axis);

/// Sum over atoms of J_{i, axis}.
std::vector<Complex> apply_collective(std::span<const Complex> amplitudes, int n_atoms,
                                      Axis axis);

/// Caches J_{i,a}|psi> for every atom and axis so that single-atom and
/// two-atom expectation values are plain inner products.
class Evaluator {
 public:
  explicit Evaluator(const FullState& state);

  int n_atoms() const noexcept { return n_atoms_; }
  double atom_mean(int atom, Axis axis) const;
  /// <J_{i,a} J_{l,b}> for i != l (a real number: the operators commute).
  double pair(int atom_i, Axis a, int atom_l, Axis b) const;
  double collective_mean(Axis axis) const;
  /// <J_a J_b + J_b J_a> / 2
  double collective_second(Axis a, Axis b) const;
  CollectiveMoments moments() const;

  /// Delta J^2 of the component of atom i along `direction`.
  double atom_variance(int atom, const std::array<double, 3>& direction) const;
  /// Delta J^2 of the collective component along `direction`, taken directly
  /// as <(n.J)^2> - <n.J>^2.
  double collective_variance(const std::array<double, 3>& direction) const;

 private:
  const std::vector<Complex>& single(int atom, Axis axis) const {
    return single_[static_cast<std::size_t>(atom) * 3 + static_cast<std::size_t>(axis)];
  }

  int n_atoms_;
  std::vector<Complex> psi_;
  std::vector<std::vector<Complex>> single_;
  std::array<std::vector<Complex>, 3> collective_;
};

struct OracleReport {
  Analysis analysis;
  /// Per-atom Delta J^2_{i x'} and Delta J^2_{i y'} (empty if the frame is degenerate).
  std::vector<double> atom_var_xp;
  std::vector<double> atom_var_yp;
  /// <J_{0a} J_{1b}> indexed [a][b]; N >= 2.
  std::array<std::array<double, 3>, 3> pair01{};
  /// Sum of per-atom variances plus the i != l correlation sums, term by term.
  std::optional<TransverseVariances> decomposed;
};

OracleReport oracle_metrics(const FullState& state, const AnalysisOptions& options = {});

/// 1 if the 2x2 amplitude matrix has a singular value below 1e-10, else 2.
int schmidt_rank_two_atoms(const FullState& state);

}  // namespace spinent::oracle
