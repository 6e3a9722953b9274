#include "gcs/entangle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcs {

double concurrence2(const QubitState& s) {
  if (s.qubits() != 2) throw std::invalid_argument("concurrence2 needs a two-qubit state");
  const QubitState z = s.normalized();
  return 2.0 * std::abs(z[0] * z[3] - z[1] * z[2]);
}

BipartitionReport schmidt_profile(const QubitState& s, const std::vector<int>& partition) {
  const int n = s.qubits();
  std::vector<int> part = partition;
  std::sort(part.begin(), part.end());
  if (part.empty() || static_cast<int>(part.size()) >= n)
    throw std::invalid_argument("partition must be a nonempty proper subset");
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] < 0 || part[i] >= n) throw std::out_of_range("partition index out of range");
    if (i > 0 && part[i] == part[i - 1])
      throw std::invalid_argument("partition repeats a qubit");
  }
  if (s.is_zero()) throw std::domain_error("schmidt_profile of the zero state");

  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (!std::binary_search(part.begin(), part.end(), q)) rest.push_back(q);

  const int rows = 1 << part.size();
  const int cols = 1 << rest.size();
  Eigen::MatrixXcd m(rows, cols);
  m.setZero();
  for (unsigned ket = 0; ket < s.dimension(); ++ket) {
    int r = 0, c = 0;
    for (std::size_t i = 0; i < part.size(); ++i)
      r |= ((ket >> (n - 1 - part[i])) & 1u) << (part.size() - 1 - i);
    for (std::size_t i = 0; i < rest.size(); ++i)
      c |= ((ket >> (n - 1 - rest[i])) & 1u) << (rest.size() - 1 - i);
    m(r, c) = s[ket];
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  BipartitionReport report;
  report.partition = part;
  const auto& sv = svd.singularValues();
  report.schmidt_values.assign(sv.data(), sv.data() + sv.size());
  const double cutoff = 1e-9 * (sv.size() > 0 ? sv(0) : 0.0);
  report.schmidt_rank = 0;
  for (double v : report.schmidt_values)
    if (v > cutoff) ++report.schmidt_rank;
  return report;
}

namespace {

// Canonical representative of the bipartition {S, complement}: the smaller
// side, ties resolved to the side containing qubit 0.
std::vector<int> canonical_block(unsigned subset, int n) {
  const unsigned full = (1u << n) - 1;
  const unsigned comp = full & ~subset;
  unsigned chosen = subset;
  const int size_s = std::popcount(subset), size_c = std::popcount(comp);
  if (size_c < size_s || (size_c == size_s && (comp & 1u) != 0 && (subset & 1u) == 0))
    chosen = comp;
  std::vector<int> block;
  for (int q = 0; q < n; ++q)
    if (chosen & (1u << q)) block.push_back(q);
  return block;
}

}  // namespace

ClassificationReport classify(const QubitState& s) {
  const int n = s.qubits();
  if (n < 2 || n > 8) throw std::invalid_argument("classify needs 2..8 qubits");
  if (s.is_zero()) throw std::domain_error("classify of the zero state");

  ClassificationReport report;
  bool all_single_rank1 = true;
  std::vector<std::vector<int>> separating;
  // Enumerate each bipartition once via subsets containing qubit 0.
  for (unsigned subset = 1; subset < (1u << n); subset += 2) {
    if (subset == (1u << n) - 1) continue;
    std::vector<int> block;
    for (int q = 0; q < n; ++q)
      if (subset & (1u << q)) block.push_back(q);
    const BipartitionReport bp = schmidt_profile(s, block);
    if (bp.schmidt_rank == 1)
      separating.push_back(canonical_block(subset, n));
    else if (block.size() == 1 || block.size() == static_cast<std::size_t>(n - 1))
      all_single_rank1 = false;
  }
  // Single-qubit blocks not containing qubit 0 are covered by their
  // complements above, so all_single_rank1 is already complete.
  std::sort(separating.begin(), separating.end());
  report.separating = std::move(separating);
  if (report.separating.empty())
    report.category = EntanglementCategory::kGenuinelyEntangled;
  else if (all_single_rank1)
    report.category = EntanglementCategory::kProduct;
  else
    report.category = EntanglementCategory::kBiseparable;

  NamedMatch best;
  for (const auto& [name, state] : named_state_table()) {
    if (state.qubits() != n) continue;
    const auto [fid, phase] = fidelity_up_to_phase(state, s);
    if (fid > best.fidelity) best = NamedMatch{name, fid, phase};
  }
  if (best.fidelity >= 1.0 - 1e-9) report.named_match = best;
  return report;
}

std::string to_string(EntanglementCategory c) {
  switch (c) {
    case EntanglementCategory::kProduct: return "product";
    case EntanglementCategory::kBiseparable: return "biseparable";
    case EntanglementCategory::kGenuinelyEntangled: return "genuinely_entangled";
  }
  return "?";
}

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

QubitState bell_psi_plus() {
  return QubitState(2, {0.0, kInvSqrt2, kInvSqrt2, 0.0});
}
QubitState bell_psi_minus() {
  return QubitState(2, {0.0, kInvSqrt2, -kInvSqrt2, 0.0});
}
QubitState bell_phi_plus() {
  return QubitState(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2});
}
QubitState bell_phi_minus() {
  return QubitState(2, {kInvSqrt2, 0.0, 0.0, -kInvSqrt2});
}
QubitState bell_like_plus() {
  const Complex e = std::polar(kInvSqrt2, std::numbers::pi / 4.0);
  return QubitState(2, {0.0, e, std::conj(e), 0.0});
}
QubitState bell_like_minus() {
  const Complex e = std::polar(kInvSqrt2, std::numbers::pi / 4.0);
  return QubitState(2, {0.0, e, -std::conj(e), 0.0});
}

QubitState w_state(int n) {
  if (n < 3 || n > 8) throw std::out_of_range("W(n) needs n in 3..8");
  QubitState s(n);
  const double a = 1.0 / std::sqrt(double(n));
  for (int i = 0; i < n; ++i) s[1u << i] = a;
  return s;
}

QubitState ghz_state(int n) {
  if (n < 2 || n > 8) throw std::out_of_range("GHZ(n) needs n in 2..8");
  QubitState s(n);
  s[0] = kInvSqrt2;
  s[(1u << n) - 1] = kInvSqrt2;
  return s;
}

const std::vector<std::pair<std::string, QubitState>>& named_state_table() {
  static const std::vector<std::pair<std::string, QubitState>> table = [] {
    std::vector<std::pair<std::string, QubitState>> t;
    t.emplace_back("PsiPlus", bell_psi_plus());
    t.emplace_back("PsiMinus", bell_psi_minus());
    t.emplace_back("PhiPlus", bell_phi_plus());
    t.emplace_back("PhiMinus", bell_phi_minus());
    t.emplace_back("BellLikePlus", bell_like_plus());
    t.emplace_back("BellLikeMinus", bell_like_minus());
    for (int n = 3; n <= 8; ++n) t.emplace_back("W" + std::to_string(n), w_state(n));
    for (int n = 2; n <= 8; ++n) t.emplace_back("GHZ" + std::to_string(n), ghz_state(n));
    return t;
  }();
  return table;
}

std::optional<QubitState> named_state(const std::string& name) {
  for (const auto& [n, s] : named_state_table())
    if (n == name) return s;
  return std::nullopt;
}

}  // namespace gcs
