#include "gcs/fock.hpp"

#include <bit>
#include <stdexcept>

namespace gcs {

GrassmannState::GrassmannState(int qubits) : qubits_(qubits) {
  if (qubits < 1 || qubits > 8) throw std::out_of_range("qubit count must be in 1..8");
}

GrassmannState GrassmannState::basis_ket(int qubits, unsigned bits) {
  GrassmannState s(qubits);
  if (bits >= s.dimension()) throw std::out_of_range("basis ket out of range");
  s.accumulate(bits, GrassmannElement::scalar(1.0));
  return s;
}

GrassmannElement GrassmannState::amplitude(unsigned ket) const {
  const auto it = amps_.find(ket);
  return it == amps_.end() ? GrassmannElement{} : it->second;
}

void GrassmannState::accumulate(unsigned ket, const GrassmannElement& value) {
  if (ket >= dimension()) throw std::out_of_range("ket index out of range");
  auto [it, inserted] = amps_.try_emplace(ket, value);
  if (!inserted) it->second = it->second + value;
  if (it->second.is_zero()) amps_.erase(it);
}

GrassmannState coherent_ket(const FermionLabel& label) {
  const GeneratorId g = label.generator;
  const GrassmannElement theta = GrassmannElement::generator(g);
  const GrassmannElement pair = GrassmannElement::generator(g.starred()) * theta;
  const double k2 = std::norm(label.scale);

  GrassmannState s(1);
  const GrassmannElement envelope = exp_nilpotent(Complex(-k2 / 2.0) * pair);
  s.accumulate(0, envelope);
  s.accumulate(1, Complex(-label.scale) * (theta * envelope));
  return s;
}

GrassmannState tensor_product(const GrassmannState& a, const GrassmannState& b) {
  GrassmannState out(a.qubits() + b.qubits());
  for (const auto& [ka, va] : a.amplitudes()) {
    const bool flip = std::popcount(ka) % 2 != 0;
    for (const auto& [kb, vb] : b.amplitudes()) {
      const GrassmannElement moved = flip ? parity_flip(vb) : vb;
      out.accumulate((ka << b.qubits()) | kb, va * moved);
    }
  }
  return out;
}

GrassmannElement inner(const GrassmannState& a, const GrassmannState& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("inner: qubit counts differ");
  GrassmannElement sum;
  for (const auto& [ket, va] : a.amplitudes())
    sum = sum + conjugate(va) * b.amplitude(ket);
  return sum;
}

GrassmannState operator+(const GrassmannState& a, const GrassmannState& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("state sum: qubit counts differ");
  GrassmannState out = a;
  for (const auto& [ket, v] : b.amplitudes()) out.accumulate(ket, v);
  return out;
}

GrassmannState operator-(const GrassmannState& a, const GrassmannState& b) {
  return a + (Complex(-1.0) * b);
}

GrassmannState operator*(Complex c, const GrassmannState& s) {
  return GrassmannElement::scalar(c) * s;
}

GrassmannState operator*(const GrassmannElement& factor, const GrassmannState& s) {
  GrassmannState out(s.qubits());
  for (const auto& [ket, v] : s.amplitudes()) out.accumulate(ket, factor * v);
  return out;
}

bool approx_equal(const GrassmannState& a, const GrassmannState& b, double tol) {
  if (a.qubits() != b.qubits()) return false;
  for (unsigned k = 0; k < a.dimension(); ++k)
    if (!approx_equal(a.amplitude(k), b.amplitude(k), tol)) return false;
  return true;
}

ModeOperator ModeOperator::zero() { return {}; }

ModeOperator ModeOperator::identity() {
  ModeOperator op;
  op.e[0][0] = GrassmannElement::scalar(1.0);
  op.e[1][1] = GrassmannElement::scalar(1.0);
  return op;
}

ModeOperator ModeOperator::annihilation() {
  ModeOperator op;
  op.e[0][1] = GrassmannElement::scalar(1.0);
  return op;
}

ModeOperator ModeOperator::creation() {
  ModeOperator op;
  op.e[1][0] = GrassmannElement::scalar(1.0);
  return op;
}

bool ModeOperator::is_zero() const {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!e[r][c].is_zero()) return false;
  return true;
}

// (EF)_{rc} = sum_m E_{rm} F_{mc}, with F's entry parity-flipped when the
// inner transition |r><m| is fermionically odd (its Grassmann factor must
// cross that transition).
ModeOperator compose(const ModeOperator& lhs, const ModeOperator& rhs) {
  ModeOperator out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      GrassmannElement sum;
      for (int m = 0; m < 2; ++m) {
        const GrassmannElement& f = rhs.e[m][c];
        if (f.is_zero() || lhs.e[r][m].is_zero()) continue;
        const GrassmannElement adjusted = ((r + m) % 2 != 0) ? parity_flip(f) : f;
        sum = sum + lhs.e[r][m] * adjusted;
      }
      out.e[r][c] = sum;
    }
  }
  return out;
}

// (e |r><c|)+ = (-1)^{deg(e)(r+c)} e* |c><r|.
ModeOperator adjoint(const ModeOperator& op) {
  ModeOperator out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      GrassmannElement star = conjugate(op.e[r][c]);
      if ((r + c) % 2 != 0) star = parity_flip(star);
      out.e[c][r] = star;
    }
  }
  return out;
}

ModeOperator operator+(const ModeOperator& a, const ModeOperator& b) {
  ModeOperator out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.e[r][c] = a.e[r][c] + b.e[r][c];
  return out;
}

ModeOperator operator*(Complex c, const ModeOperator& a) {
  ModeOperator out;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) out.e[r][col] = c * a.e[r][col];
  return out;
}

bool approx_equal(const ModeOperator& a, const ModeOperator& b, double tol) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!approx_equal(a.e[r][c], b.e[r][c], tol)) return false;
  return true;
}

GrassmannState apply_mode_op(const ModeOperator& op, const GrassmannState& s, int slot) {
  if (slot < 0 || slot >= s.qubits()) throw std::out_of_range("apply_mode_op: bad slot");
  GrassmannState out(s.qubits());
  const int shift = s.qubits() - 1 - slot;
  for (const auto& [ket, amp] : s.amplitudes()) {
    const int c = (ket >> shift) & 1;
    // Number of excitations strictly to the left of the slot.
    const unsigned left_mask = (shift + 1 >= 32) ? 0u : (ket >> (shift + 1));
    const int p = std::popcount(left_mask);
    for (int r = 0; r < 2; ++r) {
      const GrassmannElement& entry = op.e[r][c];
      if (entry.is_zero()) continue;
      const unsigned new_ket = (ket & ~(1u << shift)) | (unsigned(r) << shift);
      const bool parity_changes = ((r + c) % 2) != 0;
      // Split the entry by Grassmann parity: crossing the amplitude flips
      // the amplitude's odd part when the combined entry parity is odd;
      // crossing the left excitations contributes (-1)^{p (r+c)}.
      for (int h = 0; h < 2; ++h) {
        GrassmannElement part;
        for (const auto& [m, coef] : entry.terms())
          if (monomial_degree(m) % 2 == h)
            part = part + GrassmannElement::monomial(monomial_generators(m), coef);
        if (part.is_zero()) continue;
        const bool entry_odd = ((h + r + c) % 2) != 0;
        GrassmannElement moved_amp = entry_odd ? parity_flip(amp) : amp;
        GrassmannElement contrib = moved_amp * part;
        if (parity_changes && (p % 2) != 0) contrib = -contrib;
        out.accumulate(new_ket, contrib);
      }
    }
  }
  return out;
}

ModeOperator displacement(const FermionLabel& label) {
  const GrassmannElement theta = GrassmannElement::generator(label.generator);
  const GrassmannElement theta_star = GrassmannElement::generator(label.generator.starred());

  // a+ k theta - conj(k) theta* a with the Grassmann factors moved left of
  // the transition operators: {a, theta} = {a+, theta} = 0.
  ModeOperator x;
  x.e[1][0] = Complex(-label.scale) * theta;
  x.e[0][1] = Complex(-std::conj(label.scale)) * theta_star;

  ModeOperator result = ModeOperator::identity();
  ModeOperator term = ModeOperator::identity();
  for (int k = 1; k <= 2 * kMaxModes + 2; ++k) {
    term = compose(term, x);
    term = Complex(1.0 / k) * term;
    if (term.is_zero()) break;
    result = result + term;
  }
  return result;
}

}  // namespace gcs
