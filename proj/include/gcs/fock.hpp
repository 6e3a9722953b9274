#pragma once

#include <array>
#include <map>
#include <string>

#include "gcs/grassmann.hpp"

namespace gcs {

/// Label of a fermionic coherent ket |k theta> (or |k theta*> when the
/// generator is conjugated).
struct FermionLabel {
  Complex scale;
  GeneratorId generator;
};

/// Multi-qubit ket with GrassmannElement amplitudes, kept in left-normal
/// form: every Grassmann factor stands to the left of the Fock ket, all
/// reordering signs absorbed. Basis kets are encoded big-endian: bit
/// (qubits-1-i) of the key holds slot i, so |q1 q2 .. qn> maps to the
/// integer q1 q2 .. qn read as binary.
class GrassmannState {
 public:
  explicit GrassmannState(int qubits);

  static GrassmannState basis_ket(int qubits, unsigned bits);

  int qubits() const { return qubits_; }
  unsigned dimension() const { return 1u << qubits_; }

  GrassmannElement amplitude(unsigned ket) const;
  const std::map<unsigned, GrassmannElement>& amplitudes() const { return amps_; }

  /// Adds `value` to the amplitude of `ket`, dropping the entry if the
  /// result vanishes.
  void accumulate(unsigned ket, const GrassmannElement& value);

  bool is_zero() const { return amps_.empty(); }
  int slot_bit(unsigned ket, int slot) const { return (ket >> (qubits_ - 1 - slot)) & 1u; }

 private:
  int qubits_;
  std::map<unsigned, GrassmannElement> amps_;
};

/// |k theta> = exp(-|k|^2 theta* theta / 2)(|0> - k theta |1>); theta and
/// theta* exchange roles when the label's generator is conjugated.
GrassmannState coherent_ket(const FermionLabel& label);

/// Concatenates kets; b's amplitudes move left past a's ket, odd-degree
/// parts picking up (-1)^(number of 1-bits in a's ket).
GrassmannState tensor_product(const GrassmannState& a, const GrassmannState& b);

/// <a|b> as a GrassmannElement; bra-side amplitudes are conjugated
/// (reversed) per the antiautomorphism. Throws on qubit-count mismatch.
GrassmannElement inner(const GrassmannState& a, const GrassmannState& b);

GrassmannState operator+(const GrassmannState& a, const GrassmannState& b);
GrassmannState operator-(const GrassmannState& a, const GrassmannState& b);
GrassmannState operator*(Complex c, const GrassmannState& s);
/// Left-multiplies every amplitude by a Grassmann factor (factor ends up
/// left of the existing amplitude; no ket is crossed).
GrassmannState operator*(const GrassmannElement& factor, const GrassmannState& s);

bool approx_equal(const GrassmannState& a, const GrassmannState& b, double tol = 1e-9);

/// 2x2 operator on one mode with GrassmannElement entries; entry (r, c)
/// multiplies the |r><c| transition. Composition and adjoint follow the
/// graded sign rules {a,theta} = {a+,theta} = 0.
struct ModeOperator {
  std::array<std::array<GrassmannElement, 2>, 2> e;

  static ModeOperator zero();
  static ModeOperator identity();
  static ModeOperator annihilation();
  static ModeOperator creation();

  bool is_zero() const;
};

ModeOperator compose(const ModeOperator& lhs, const ModeOperator& rhs);
ModeOperator adjoint(const ModeOperator& op);
ModeOperator operator+(const ModeOperator& a, const ModeOperator& b);
ModeOperator operator*(Complex c, const ModeOperator& a);
bool approx_equal(const ModeOperator& a, const ModeOperator& b, double tol = 1e-9);

/// Applies a mode operator to one tensor slot, restoring left-normal form.
/// Throws std::out_of_range when the slot index is invalid.
GrassmannState apply_mode_op(const ModeOperator& op, const GrassmannState& s, int slot);

/// Displacement operator D(k theta) = exp(a+ k theta - conj(k) theta* a)
/// as a terminating power series.
ModeOperator displacement(const FermionLabel& label);

}  // namespace gcs
