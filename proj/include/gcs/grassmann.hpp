#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gcs {

using Complex = std::complex<double>;

/// Coefficients with modulus below this are dropped after every operation,
/// and it doubles as the default tolerance for exact-identity checks.
inline constexpr double kCoeffEpsilon = 1e-12;

/// Hard cap on the number of Grassmann modes (theta_1 .. theta_6).
inline constexpr int kMaxModes = 6;

/// One anticommuting generator: theta_m (conjugated = false) or
/// theta_m^* (conjugated = true). Total order: t1 < t1' < t2 < t2' < ...
struct GeneratorId {
  int mode = 1;  // 1-based
  bool conjugated = false;

  GeneratorId() = default;
  GeneratorId(int m, bool conj);

  /// Dense key 2*(mode-1) + conjugated, the bit position in a MonomialMask.
  int key() const { return 2 * (mode - 1) + (conjugated ? 1 : 0); }
  static GeneratorId from_key(int key);

  /// theta <-> theta^*
  GeneratorId starred() const { return GeneratorId(mode, !conjugated); }

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

/// A canonical monomial is a strictly ascending product of generators,
/// encoded as a bitmask over generator keys. Bit k set means the generator
/// with key k is present. The empty mask is the scalar monomial.
using MonomialMask = std::uint32_t;

int monomial_degree(MonomialMask m);
std::vector<GeneratorId> monomial_generators(MonomialMask m);

/// Sparse polynomial over anticommuting generators with complex
/// coefficients. Always kept in canonical form: every monomial ascending,
/// reordering signs absorbed into coefficients, near-zero terms dropped.
/// Immutable value type; all operations are pure.
class GrassmannElement {
 public:
  GrassmannElement() = default;  // zero

  static GrassmannElement scalar(Complex c);
  static GrassmannElement generator(GeneratorId g);

  /// Builds coeff * g1*g2*...*gk from an arbitrarily ordered generator
  /// sequence; the reordering sign is absorbed, repeats give zero.
  static GrassmannElement monomial(std::span<const GeneratorId> gens, Complex coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;

  /// Scalar ("body") part: the coefficient of the empty monomial.
  Complex body() const;
  /// Element minus its body: the nilpotent ("soul") part.
  GrassmannElement soul() const;

  int degree() const;    // highest monomial degree, 0 for zero element
  int max_mode() const;  // largest mode index appearing, 0 for scalars

  Complex coefficient(MonomialMask m) const;
  const std::map<MonomialMask, Complex>& terms() const { return terms_; }

  /// True when every term has even degree (even elements commute with
  /// everything).
  bool is_even() const;

  GrassmannElement operator-() const;

  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  friend GrassmannElement multiply(const GrassmannElement&, const GrassmannElement&);
  friend GrassmannElement linear_combine(Complex, const GrassmannElement&, Complex,
                                         const GrassmannElement&);
  friend GrassmannElement conjugate(const GrassmannElement&);
  friend GrassmannElement left_derivative(const GrassmannElement&, GeneratorId);
  friend GrassmannElement parity_flip(const GrassmannElement&);

  void add_term(MonomialMask m, Complex c);
  void normalize();

  std::map<MonomialMask, Complex> terms_;
};

/// Canonical-form product with permutation-parity signs; repeated
/// generators vanish by nilpotency.
GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b);

/// alpha*a + beta*b in canonical form.
GrassmannElement linear_combine(Complex alpha, const GrassmannElement& a, Complex beta,
                                const GrassmannElement& b);

/// Antiautomorphism: coefficients conjugated, each monomial conjugated
/// generator-wise and reversed, then re-canonicalized. (xy)* = y* x*.
GrassmannElement conjugate(const GrassmannElement& a);

/// Finite exponential series of a nilpotent element. Throws
/// std::invalid_argument when the body is nonzero; the caller must factor
/// the scalar exponential out first.
GrassmannElement exp_nilpotent(const GrassmannElement& a);

/// d/dg acting from the left: g is anticommuted to the front of each
/// monomial (accumulating sign) and removed; terms without g vanish.
GrassmannElement left_derivative(const GrassmannElement& a, GeneratorId g);

/// Ordered integration measure, e.g. <t1', t1> for "d t1' d t1".
/// The rightmost factor is applied first (innermost integral).
class MeasureList {
 public:
  MeasureList() = default;
  explicit MeasureList(std::vector<GeneratorId> factors);  // throws on repeats

  const std::vector<GeneratorId>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  friend bool operator==(const MeasureList&, const MeasureList&) = default;

 private:
  std::vector<GeneratorId> factors_;
};

/// Iterated Berezin integral; identical to nested left derivatives,
/// rightmost measure factor innermost.
GrassmannElement berezin_integrate(const GrassmannElement& a, const MeasureList& m);

/// Negates every odd-degree term. This is the sign an element picks up
/// when moved past a single fermionic excitation.
GrassmannElement parity_flip(const GrassmannElement& a);

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator*(Complex c, const GrassmannElement& a);
GrassmannElement operator*(const GrassmannElement& a, Complex c);
GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);

bool approx_equal(const GrassmannElement& a, const GrassmannElement& b,
                  double tol = 1e-9);

/// Plain diagnostic form like "(1,-0.5) t1*t2'"; the DSL renderer in
/// parser.hpp produces the canonical external syntax.
std::string debug_string(const GrassmannElement& a);

}  // namespace gcs
