#pragma once

#include <optional>

#include "gcs/grassmann.hpp"

namespace gcs {

/// <a|b> for bosonic coherent states: exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
Complex coherent_overlap(Complex a, Complex b);

/// mu |alpha>|beta> + nu |gamma>|delta> on two bosonic modes.
struct BosonSuperposition {
  Complex mu, nu;
  Complex alpha, beta, gamma, delta;
};

/// Wootters concurrence of the superposition in the 2x2 subspace spanned
/// by its coherent components. Throws std::domain_error when the state is
/// degenerate (squared norm below 1e-12).
double boson_concurrence(const BosonSuperposition& z);

enum class QuadSign { kPlus, kMinus };

/// |k1 a>|k2 a> +/- |k3 a>|k4 a> with a common base amplitude alpha.
struct KQuad {
  Complex k1, k2, k3, k4;
  QuadSign sign = QuadSign::kMinus;
  Complex alpha = 1.0;
};

/// Closed-form concurrence of the quad via f_ij = |k_i|^2 + |k_j|^2
/// - 2 conj(k_i) k_j. Throws std::domain_error when the state vanishes
/// (minus sign with k1 = k3 and k2 = k4).
double kquad_concurrence(const KQuad& q);

Complex f_coefficient(Complex ki, Complex kj);

/// (modulus condition, phase condition) for bosonic maximality of the
/// quad. Modulus: |k1 - k3| = |k2 - k4|. Phase: |alpha|^2 (Im(k4* k2)
/// - Im(k1* k3)) congruent to 0 (minus sign) or pi (plus sign) mod 2 pi.
/// Tolerance 1e-9; throws std::domain_error when alpha = 0.
std::pair<bool, bool> boson_maximality(const KQuad& q);

struct FermionCounterpart {
  bool maximal = false;
  std::optional<Complex> m;     // k1 -/+ k3 when maximal
  std::optional<double> phi;    // arg(d1) - arg(d2) in (-pi, pi]
};

/// Fermionic maximality of the same quad with theta in place of alpha:
/// maximal iff |k1 -/+ k3| = |k2 -/+ k4| != 0 (sign matching the quad),
/// in which case the weight theta* / (m sqrt 2) integrates the product to
/// a maximally entangled two-qubit state.
FermionCounterpart fermion_counterpart_max(const KQuad& q);

/// Everything boson-check reports for one quad.
struct MaximalityReport {
  double concurrence = 0.0;
  Complex f13, f24;
  bool boson_modulus_condition = false;
  bool boson_phase_condition = false;
  std::optional<Complex> fermion_m;
  std::optional<double> fermion_phi;
  bool fermion_maximal = false;
  Complex alpha;
  /// Cross-validation through the Grassmann engine: concurrence of the
  /// integrated fermionic counterpart (present only when maximal).
  std::optional<double> fermion_integrated_concurrence;
};

/// Assembles the full report, including the integration cross-check.
MaximalityReport boson_fermion_report(const KQuad& q);

}  // namespace gcs
