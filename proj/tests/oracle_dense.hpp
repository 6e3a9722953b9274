#pragma once

// Dense bitmask oracle for the Grassmann algebra, independent of the sparse
// engine: elements are flat coefficient arrays indexed by generator subset,
// and every sign is computed by explicitly counting permutation inversions
// on generator-key lists. Test-only code.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "gcs/grassmann.hpp"

namespace gcs::testing {

class DenseElement {
 public:
  explicit DenseElement(int modes) : modes_(modes), coef_(std::size_t{1} << (2 * modes)) {}

  int modes() const { return modes_; }
  std::size_t size() const { return coef_.size(); }
  Complex& at(std::uint32_t mask) { return coef_[mask]; }
  const Complex& at(std::uint32_t mask) const { return coef_[mask]; }

  static std::vector<int> keys_of(std::uint32_t mask) {
    std::vector<int> keys;
    for (int k = 0; k < 32; ++k)
      if (mask & (1u << k)) keys.push_back(k);
    return keys;
  }

  // Sign of the permutation sorting `keys` ascending; 0 if a key repeats.
  static int sort_sign(std::vector<int> keys) {
    int inversions = 0;
    for (std::size_t i = 0; i < keys.size(); ++i)
      for (std::size_t j = i + 1; j < keys.size(); ++j) {
        if (keys[i] == keys[j]) return 0;
        if (keys[i] > keys[j]) ++inversions;
      }
    return (inversions % 2 == 0) ? 1 : -1;
  }

  DenseElement multiply(const DenseElement& rhs) const {
    DenseElement out(modes_);
    for (std::uint32_t ma = 0; ma < coef_.size(); ++ma) {
      if (coef_[ma] == Complex(0.0)) continue;
      for (std::uint32_t mb = 0; mb < rhs.coef_.size(); ++mb) {
        if (rhs.coef_[mb] == Complex(0.0)) continue;
        std::vector<int> joined = keys_of(ma);
        const std::vector<int> bk = keys_of(mb);
        joined.insert(joined.end(), bk.begin(), bk.end());
        const int sign = sort_sign(joined);
        if (sign == 0) continue;
        out.coef_[ma | mb] += double(sign) * coef_[ma] * rhs.coef_[mb];
      }
    }
    return out;
  }

  DenseElement add(const DenseElement& rhs, Complex alpha = 1.0, Complex beta = 1.0) const {
    DenseElement out(modes_);
    for (std::uint32_t m = 0; m < coef_.size(); ++m)
      out.coef_[m] = alpha * coef_[m] + beta * rhs.coef_[m];
    return out;
  }

  DenseElement conjugate() const {
    DenseElement out(modes_);
    for (std::uint32_t m = 0; m < coef_.size(); ++m) {
      if (coef_[m] == Complex(0.0)) continue;
      std::vector<int> keys = keys_of(m);
      for (int& k : keys) k ^= 1;  // theta <-> theta*
      std::reverse(keys.begin(), keys.end());
      std::uint32_t mm = 0;
      for (int k : keys) mm |= 1u << k;
      out.coef_[mm] += double(sort_sign(keys)) * std::conj(coef_[m]);
    }
    return out;
  }

  DenseElement left_derivative(int key) const {
    DenseElement out(modes_);
    for (std::uint32_t m = 0; m < coef_.size(); ++m) {
      if (coef_[m] == Complex(0.0) || (m & (1u << key)) == 0) continue;
      // Move `key` to the front of the ascending list, then drop it.
      std::vector<int> keys = keys_of(m);
      int crossings = 0;
      for (int k : keys) {
        if (k == key) break;
        ++crossings;
      }
      out.coef_[m & ~(1u << key)] +=
          (crossings % 2 == 0 ? 1.0 : -1.0) * coef_[m];
    }
    return out;
  }

  DenseElement berezin(const std::vector<int>& measure_keys) const {
    DenseElement r = *this;
    for (auto it = measure_keys.rbegin(); it != measure_keys.rend(); ++it)
      r = r.left_derivative(*it);
    return r;
  }

  double max_abs_diff(const gcs::GrassmannElement& e) const {
    double worst = 0.0;
    for (std::uint32_t m = 0; m < coef_.size(); ++m)
      worst = std::max(worst, std::abs(coef_[m] - e.coefficient(m)));
    return worst;
  }

 private:
  int modes_;
  std::vector<Complex> coef_;
};

// Builds the same random element in both representations. Terms are placed
// on canonical (ascending) monomials so no sign convention is exercised at
// construction time.
struct ElementPair {
  DenseElement dense;
  gcs::GrassmannElement sparse;
};

inline ElementPair random_element(std::mt19937& rng, int modes, int max_terms = 6) {
  std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << (2 * modes)) - 1);
  std::uniform_real_distribution<double> coef_dist(-2.0, 2.0);
  std::uniform_int_distribution<int> count_dist(1, max_terms);

  ElementPair p{DenseElement(modes), {}};
  const int terms = count_dist(rng);
  for (int t = 0; t < terms; ++t) {
    const std::uint32_t mask = mask_dist(rng);
    const Complex c(coef_dist(rng), coef_dist(rng));
    p.dense.at(mask) += c;
    const auto gens = gcs::monomial_generators(mask);
    p.sparse = p.sparse + gcs::GrassmannElement::monomial(gens, c);
  }
  return p;
}

}  // namespace gcs::testing
