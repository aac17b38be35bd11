#pragma once

#include <random>

#include "spinent/dicke.hpp"

namespace spinent {

/// Atomic coherent state: every atom in cos(theta/2)|u> + e^{i phi} sin(theta/2)|l>,
/// so that <J> = (N/2)(sin theta cos phi, sin theta sin phi, cos theta).
/// Angles in radians, theta in [0, pi], phi in [0, 2 pi).
struct CoherentSpec {
  int n_atoms = 1;
  double theta = 0.0;
  double phi = 0.0;
};

/// Throws InvalidParameter on N < 1 or angles out of range.
void validate(const CoherentSpec& spec);

DickeState coherent_state(const CoherentSpec& spec);

/// One-hot |j, m>. m must lie in {-j, ..., j} in integer steps from j
/// (within 1e-9); otherwise InvalidQuantumNumber.
DickeState dicke_state(int n_atoms, double m);

/// Coherent state evolved under exp(-i mu J_z^2): c_m -> c_m e^{-i mu m^2}.
DickeState twisted_state(const CoherentSpec& spec, double mu);

/// Validated user-supplied coefficients (index 0 <-> m = +j).
DickeState custom_state(int n_atoms, CoefficientVector coefficients, bool renormalize = false);

/// Haar-like random symmetric state: i.i.d. complex Gaussian coefficients,
/// normalized. Deterministic for a given engine state.
DickeState random_state(int n_atoms, std::mt19937_64& rng);

/// Random spec with theta = arccos(u), u uniform in [-1, 1], phi uniform in [0, 2 pi).
CoherentSpec random_coherent_spec(int n_atoms, std::mt19937_64& rng);

}  // namespace spinent
