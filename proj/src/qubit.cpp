#include "gcs/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace gcs {

QubitState::QubitState(int qubits) : qubits_(qubits) {
  if (qubits < 1 || qubits > 8) throw std::out_of_range("qubit count must be in 1..8");
  amp_.assign(std::size_t{1} << qubits, Complex(0.0));
}

QubitState::QubitState(int qubits, std::vector<Complex> amplitudes) : QubitState(qubits) {
  if (amplitudes.size() != amp_.size())
    throw std::invalid_argument("amplitude vector has wrong length");
  amp_ = std::move(amplitudes);
}

double QubitState::norm() const {
  double s = 0.0;
  for (const Complex& c : amp_) s += std::norm(c);
  return std::sqrt(s);
}

bool QubitState::is_zero(double tol) const { return norm() < tol; }

QubitState QubitState::normalized() const {
  const double n = norm();
  if (n < kCoeffEpsilon) throw std::domain_error("cannot normalize the zero state");
  return Complex(1.0 / n) * *this;
}

QubitState operator+(const QubitState& a, const QubitState& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("qubit counts differ");
  QubitState out = a;
  for (unsigned k = 0; k < out.dimension(); ++k) out[k] += b[k];
  return out;
}

QubitState operator-(const QubitState& a, const QubitState& b) {
  return a + (Complex(-1.0) * b);
}

QubitState operator*(Complex c, const QubitState& s) {
  QubitState out = s;
  for (unsigned k = 0; k < out.dimension(); ++k) out[k] *= c;
  return out;
}

Complex inner(const QubitState& a, const QubitState& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("qubit counts differ");
  Complex s(0.0);
  for (unsigned k = 0; k < a.dimension(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

std::pair<double, double> fidelity_up_to_phase(const QubitState& u, const QubitState& v) {
  if (u.qubits() != v.qubits()) throw std::invalid_argument("qubit counts differ");
  const double nu = u.norm(), nv = v.norm();
  if (nu < kCoeffEpsilon || nv < kCoeffEpsilon)
    throw std::domain_error("fidelity of a zero state");
  const Complex ov = inner(u, v);
  return {std::abs(ov) / (nu * nv), std::arg(ov)};
}

bool equal_up_to_global_phase(const QubitState& u, const QubitState& v, double tol) {
  if (u.qubits() != v.qubits()) return false;
  const double nu = u.norm(), nv = v.norm();
  if (std::abs(nu - nv) > tol) return false;
  if (nu < kCoeffEpsilon && nv < kCoeffEpsilon) return true;
  return std::abs(std::abs(inner(u, v)) - nu * nv) <= tol;
}

double max_componentwise_diff(const QubitState& u, const QubitState& v) {
  if (u.qubits() != v.qubits()) throw std::invalid_argument("qubit counts differ");
  double worst = 0.0;
  for (unsigned k = 0; k < u.dimension(); ++k)
    worst = std::max(worst, std::abs(u[k] - v[k]));
  return worst;
}

std::string ket_bits(unsigned ket, int qubits) {
  std::string s(static_cast<std::size_t>(qubits), '0');
  for (int i = 0; i < qubits; ++i)
    if (ket & (1u << (qubits - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace gcs
