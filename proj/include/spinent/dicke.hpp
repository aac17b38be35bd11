#pragma once

// Symmetric (j = N/2) sector of N two-level atoms in the Dicke basis |j,m>.
//
// Coefficients are stored with m descending: index k holds c_m for
// m = j - k, so index 0 is |j,+j> (all atoms up) and index N is |j,-j>.
// Ladder operators use the Condon-Shortley phase:
//   J+|j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>
//   J-|j,m> = sqrt(j(j+1) - m(m-1)) |j,m-1>

#include <complex>
#include <span>
#include <vector>

namespace spinent {

using Complex = std::complex<double>;
using CoefficientVector = std::vector<Complex>;

/// States whose squared norm deviates from one by more than this are rejected.
inline constexpr double kNormalizationTolerance = 1e-6;

class DickeState {
 public:
  /// Validates length (N+1) and normalization. With `renormalize` set the
  /// coefficients are rescaled to unit norm instead of being rejected; a zero
  /// vector is still an error.
  static DickeState from_coefficients(int n_atoms, CoefficientVector coefficients,
                                      bool renormalize = false);

  int n_atoms() const noexcept { return n_atoms_; }
  double j() const noexcept { return 0.5 * n_atoms_; }
  /// Magnetic quantum number stored at index k.
  double m_at(std::size_t k) const noexcept { return j() - static_cast<double>(k); }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  double norm_squared() const noexcept;

  /// Copy rescaled to exactly unit norm. Never applied implicitly.
  DickeState renormalized() const;

 private:
  DickeState(int n_atoms, CoefficientVector coefficients)
      : n_atoms_(n_atoms), coefficients_(std::move(coefficients)) {}

  int n_atoms_;
  CoefficientVector coefficients_;
};

/// First and second moments of the collective operators J_x, J_y, J_z.
struct CollectiveMoments {
  double jx = 0, jy = 0, jz = 0;
  double jx2 = 0, jy2 = 0, jz2 = 0;
  /// <J_a J_b + J_b J_a>
  double sym_xy = 0, sym_xz = 0, sym_yz = 0;
};

/// Two-atom correlators <J_{1a} J_{2b}> of an exchange-symmetric state.
/// Mixed pairs are symmetric: xy = <J_1x J_2y> = <J_1y J_2x>, likewise xz, yz.
struct PairCorrelators {
  double xx = 0, yy = 0, zz = 0;
  double xy = 0, xz = 0, yz = 0;
};

/// Single-atom first moments <J_{1a}> = <J_a> / N.
struct SingleAtomMeans {
  double x = 0, y = 0, z = 0;
};

CoefficientVector apply_jz(const DickeState& state);
CoefficientVector apply_jplus(const DickeState& state);
CoefficientVector apply_jminus(const DickeState& state);

namespace detail {
// Raw actions on unnormalized coefficient vectors of length N+1.
CoefficientVector jz(std::span<const Complex> v, int n_atoms);
CoefficientVector jplus(std::span<const Complex> v, int n_atoms);
CoefficientVector jminus(std::span<const Complex> v, int n_atoms);
CoefficientVector jx(std::span<const Complex> v, int n_atoms);
CoefficientVector jy(std::span<const Complex> v, int n_atoms);
Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);
}  // namespace detail

/// Throws NormalizationError if the state drifted beyond the tolerance.
CollectiveMoments collective_moments(const DickeState& state);

/// Casimir value j(j+1) for the symmetric sector of `n_atoms`.
double casimir(int n_atoms) noexcept;

/// Throws InsufficientAtoms for N < 2.
PairCorrelators pairwise_correlators(const CollectiveMoments& moments, int n_atoms);
PairCorrelators pairwise_correlators(const DickeState& state);

SingleAtomMeans single_atom_means(const CollectiveMoments& moments, int n_atoms);

}  // namespace spinent
