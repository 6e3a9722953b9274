#include "gcs/grassmann.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gcs {

namespace {

// Parity of the permutation that merges the ascending monomial `a` with the
// ascending monomial `b` (a to the left of b) back into ascending order:
// each generator of b crosses every generator of a with a larger key.
int merge_swaps(MonomialMask a, MonomialMask b) {
  int swaps = 0;
  while (b != 0) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    const MonomialMask above = ~((MonomialMask{2} << j) - 1);
    swaps += std::popcount(a & above);
  }
  return swaps;
}

}  // namespace

GeneratorId::GeneratorId(int m, bool conj) : mode(m), conjugated(conj) {
  if (m < 1 || m > kMaxModes)
    throw std::out_of_range("generator mode must be in 1.." + std::to_string(kMaxModes));
}

GeneratorId GeneratorId::from_key(int key) {
  if (key < 0 || key >= 2 * kMaxModes) throw std::out_of_range("generator key out of range");
  return GeneratorId(key / 2 + 1, (key & 1) != 0);
}

int monomial_degree(MonomialMask m) { return std::popcount(m); }

std::vector<GeneratorId> monomial_generators(MonomialMask m) {
  std::vector<GeneratorId> gens;
  while (m != 0) {
    const int k = std::countr_zero(m);
    m &= m - 1;
    gens.push_back(GeneratorId::from_key(k));
  }
  return gens;
}

void GrassmannElement::add_term(MonomialMask m, Complex c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void GrassmannElement::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = std::abs(it->second) < kCoeffEpsilon ? terms_.erase(it) : std::next(it);
}

GrassmannElement GrassmannElement::scalar(Complex c) {
  GrassmannElement e;
  e.add_term(0, c);
  e.normalize();
  return e;
}

GrassmannElement GrassmannElement::generator(GeneratorId g) {
  GrassmannElement e;
  e.add_term(MonomialMask{1} << g.key(), Complex(1.0));
  return e;
}

GrassmannElement GrassmannElement::monomial(std::span<const GeneratorId> gens, Complex coeff) {
  // Insertion sort, counting transpositions; a repeated generator kills
  // the monomial (nilpotency).
  std::vector<int> keys;
  keys.reserve(gens.size());
  int swaps = 0;
  for (const GeneratorId& g : gens) {
    const int k = g.key();
    std::size_t pos = keys.size();
    while (pos > 0 && keys[pos - 1] > k) --pos;
    if (pos > 0 && keys[pos - 1] == k) return {};
    swaps += static_cast<int>(keys.size() - pos);
    keys.insert(keys.begin() + static_cast<std::ptrdiff_t>(pos), k);
  }
  MonomialMask m = 0;
  for (int k : keys) m |= MonomialMask{1} << k;
  GrassmannElement e;
  e.add_term(m, (swaps % 2 == 0) ? coeff : -coeff);
  e.normalize();
  return e;
}

bool GrassmannElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Complex GrassmannElement::body() const {
  const auto it = terms_.find(0);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement e = *this;
  e.terms_.erase(0);
  return e;
}

int GrassmannElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

int GrassmannElement::max_mode() const {
  int mode = 0;
  for (const auto& [m, c] : terms_)
    if (m != 0) mode = std::max(mode, (static_cast<int>(std::bit_width(m)) - 1) / 2 + 1);
  return mode;
}

Complex GrassmannElement::coefficient(MonomialMask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

bool GrassmannElement::is_even() const {
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) % 2 != 0) return false;
  return true;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement e = *this;
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if ((ma & mb) != 0) continue;  // theta^2 = 0
      const Complex c = ca * cb;
      out.add_term(ma | mb, (merge_swaps(ma, mb) % 2 == 0) ? c : -c);
    }
  }
  out.normalize();
  return out;
}

GrassmannElement linear_combine(Complex alpha, const GrassmannElement& a, Complex beta,
                                const GrassmannElement& b) {
  GrassmannElement out;
  for (const auto& [m, c] : a.terms_) out.add_term(m, alpha * c);
  for (const auto& [m, c] : b.terms_) out.add_term(m, beta * c);
  out.normalize();
  return out;
}

GrassmannElement conjugate(const GrassmannElement& a) {
  GrassmannElement out;
  std::vector<GeneratorId> gens;
  for (const auto& [m, c] : a.terms_) {
    gens.clear();
    for (const GeneratorId& g : monomial_generators(m)) gens.push_back(g.starred());
    std::reverse(gens.begin(), gens.end());
    const GrassmannElement mono = GrassmannElement::monomial(gens, std::conj(c));
    for (const auto& [mm, cc] : mono.terms_) out.add_term(mm, cc);
  }
  out.normalize();
  return out;
}

GrassmannElement exp_nilpotent(const GrassmannElement& a) {
  if (std::abs(a.body()) > kCoeffEpsilon)
    throw std::invalid_argument("exp_nilpotent: nonzero scalar part; factor it out first");
  GrassmannElement result = GrassmannElement::scalar(1.0);
  GrassmannElement term = GrassmannElement::scalar(1.0);
  for (int k = 1; k <= 2 * kMaxModes; ++k) {
    term = multiply(term, a);
    term = linear_combine(Complex(1.0 / k), term, Complex(0.0), {});
    if (term.is_zero()) break;
    result = linear_combine(Complex(1.0), result, Complex(1.0), term);
  }
  return result;
}

GrassmannElement left_derivative(const GrassmannElement& a, GeneratorId g) {
  const int key = g.key();
  const MonomialMask bit = MonomialMask{1} << key;
  const MonomialMask below = bit - 1;
  GrassmannElement out;
  for (const auto& [m, c] : a.terms_) {
    if ((m & bit) == 0) continue;
    const int crossings = std::popcount(m & below);
    out.add_term(m & ~bit, (crossings % 2 == 0) ? c : -c);
  }
  out.normalize();
  return out;
}

MeasureList::MeasureList(std::vector<GeneratorId> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (factors_[i] == factors_[j])
        throw std::invalid_argument("measure list has a repeated factor");
}

GrassmannElement berezin_integrate(const GrassmannElement& a, const MeasureList& m) {
  GrassmannElement r = a;
  const auto& fs = m.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = left_derivative(r, *it);
  return r;
}

GrassmannElement parity_flip(const GrassmannElement& a) {
  GrassmannElement e = a;
  for (auto& [m, c] : e.terms_)
    if (monomial_degree(m) % 2 != 0) c = -c;
  return e;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  return multiply(a, b);
}
GrassmannElement operator*(Complex c, const GrassmannElement& a) {
  return linear_combine(c, a, Complex(0.0), {});
}
GrassmannElement operator*(const GrassmannElement& a, Complex c) { return c * a; }
GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  return linear_combine(Complex(1.0), a, Complex(1.0), b);
}
GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
  return linear_combine(Complex(1.0), a, Complex(-1.0), b);
}

bool approx_equal(const GrassmannElement& a, const GrassmannElement& b, double tol) {
  const GrassmannElement d = a - b;
  for (const auto& [m, c] : d.terms())
    if (std::abs(c) > tol) return false;
  return true;
}

std::string debug_string(const GrassmannElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << "," << c.imag() << ")";
    for (const GeneratorId& g : monomial_generators(m))
      os << " t" << g.mode << (g.conjugated ? "'" : "");
  }
  return os.str();
}

}  // namespace gcs
