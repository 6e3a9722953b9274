#pragma once

#include <string>
#include <vector>

#include "gcs/grassmann.hpp"

namespace gcs {

/// Ordinary complex amplitude vector over n-qubit basis kets. Basis order:
/// |q1 q2 .. qn> at index q1 q2 .. qn read as a big-endian binary integer.
/// The norm is reported, never enforced.
class QubitState {
 public:
  explicit QubitState(int qubits);
  QubitState(int qubits, std::vector<Complex> amplitudes);

  int qubits() const { return qubits_; }
  unsigned dimension() const { return 1u << qubits_; }

  Complex operator[](unsigned ket) const { return amp_[ket]; }
  Complex& operator[](unsigned ket) { return amp_[ket]; }
  const std::vector<Complex>& amplitudes() const { return amp_; }

  double norm() const;
  bool is_zero(double tol = kCoeffEpsilon) const;
  QubitState normalized() const;  // throws std::domain_error on zero state

 private:
  int qubits_;
  std::vector<Complex> amp_;
};

QubitState operator+(const QubitState& a, const QubitState& b);
QubitState operator-(const QubitState& a, const QubitState& b);
QubitState operator*(Complex c, const QubitState& s);
Complex inner(const QubitState& a, const QubitState& b);  // <a|b>

/// (|<u|v>| / (|u||v|), arg<u|v>). Throws on mismatched counts or a zero
/// state.
std::pair<double, double> fidelity_up_to_phase(const QubitState& u, const QubitState& v);

/// Global-phase equality: norms match and |<u|v>| = |u||v|, each within
/// tol.
bool equal_up_to_global_phase(const QubitState& u, const QubitState& v, double tol = 1e-9);

double max_componentwise_diff(const QubitState& u, const QubitState& v);

/// "01" style bit string for a basis index.
std::string ket_bits(unsigned ket, int qubits);

}  // namespace gcs
