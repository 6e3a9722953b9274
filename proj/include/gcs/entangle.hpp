#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcs/qubit.hpp"

namespace gcs {

/// Two-qubit concurrence C = |<z|sigma_y x sigma_y|z*>| of the internally
/// normalized state, i.e. 2|ad - bc|. Throws unless the state has exactly
/// two qubits and a nonzero norm.
double concurrence2(const QubitState& s);

/// Schmidt data of one bipartition. `partition` holds 0-based qubit
/// indices of one block.
struct BipartitionReport {
  std::vector<int> partition;
  int schmidt_rank = 0;
  std::vector<double> schmidt_values;  // nonincreasing, nonnegative
};

/// Singular values of the amplitude matrix reshaped by the bipartition.
/// Values below 1e-9 times the largest do not count towards the rank.
/// Throws on an empty or full partition or a zero state.
BipartitionReport schmidt_profile(const QubitState& s, const std::vector<int>& partition);

enum class EntanglementCategory { kProduct, kBiseparable, kGenuinelyEntangled };

struct NamedMatch {
  std::string name;
  double fidelity = 0.0;
  double phase = 0.0;
};

struct ClassificationReport {
  EntanglementCategory category = EntanglementCategory::kProduct;
  /// Canonical separating blocks (0-based, the smaller side; ties resolved
  /// to the side containing qubit 0), sorted lexicographically.
  std::vector<std::vector<int>> separating;
  std::optional<NamedMatch> named_match;
};

/// Classifies by Schmidt ranks of every bipartition and reports the best
/// canonical-state match when its global-phase fidelity reaches 1 - 1e-9.
/// Requires 2..8 qubits and a nonzero state.
ClassificationReport classify(const QubitState& s);

std::string to_string(EntanglementCategory c);

/// Canonical named states. W(n) for n in 3..8, GHZ(n) for n in 2..8.
QubitState bell_psi_plus();
QubitState bell_psi_minus();
QubitState bell_phi_plus();
QubitState bell_phi_minus();
QubitState bell_like_plus();
QubitState bell_like_minus();
QubitState w_state(int n);
QubitState ghz_state(int n);

/// (name, state) pairs of every named state, in table order.
const std::vector<std::pair<std::string, QubitState>>& named_state_table();

/// Looks up a named target ("PsiPlus", "W3", "GHZ5", ...). Returns nothing
/// for unknown names.
std::optional<QubitState> named_state(const std::string& name);

}  // namespace gcs
