#include "gcs/entangle.hpp"

#include <random>

#include "doctest.h"

using namespace gcs;

namespace {

QubitState random_state(std::mt19937& rng, int qubits) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  QubitState s(qubits);
  for (unsigned k = 0; k < s.dimension(); ++k) s[k] = Complex(u(rng), u(rng));
  return s;
}

// Random 2x2 unitary via Gram-Schmidt on a random complex matrix.
std::array<std::array<Complex, 2>, 2> random_unitary(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
  const double n1 = std::sqrt(std::norm(a) + std::norm(c));
  a /= n1;
  c /= n1;
  const Complex proj = std::conj(a) * b + std::conj(c) * d;
  b -= proj * a;
  d -= proj * c;
  const double n2 = std::sqrt(std::norm(b) + std::norm(d));
  b /= n2;
  d /= n2;
  return {{{a, b}, {c, d}}};
}

QubitState apply_local(const std::array<std::array<Complex, 2>, 2>& u1,
                       const std::array<std::array<Complex, 2>, 2>& u2,
                       const QubitState& s) {
  QubitState out(2);
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 2; ++r2)
      for (int c1 = 0; c1 < 2; ++c1)
        for (int c2 = 0; c2 < 2; ++c2)
          out[unsigned(r1 * 2 + r2)] += u1[r1][c1] * u2[r2][c2] * s[unsigned(c1 * 2 + c2)];
  return out;
}

}  // namespace

TEST_CASE("concurrence2 on reference states") {
  CHECK(concurrence2(bell_psi_plus()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence2(QubitState(2, {1, 0, 0, 0})) == doctest::Approx(0.0));
  CHECK(concurrence2(QubitState(2, {0, 0.6, 0.8, 0})) == doctest::Approx(0.96));
  CHECK_THROWS_AS(concurrence2(QubitState(3)), std::invalid_argument);
  CHECK_THROWS_AS(concurrence2(QubitState(2)), std::domain_error);
}

TEST_CASE("concurrence2 bounds and local-unitary invariance") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 200; ++i) {
    QubitState s = random_state(rng, 2);
    if (s.is_zero()) continue;
    const double c = concurrence2(s);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0 + 1e-12);
    const double c2 = concurrence2(apply_local(random_unitary(rng), random_unitary(rng), s));
    CHECK(c2 == doctest::Approx(c).epsilon(1e-9));
  }
}

TEST_CASE("schmidt_profile examples") {
  // |0> (x) |Psi+>: the first qubit splits off.
  QubitState s(3);
  s[0b001] = 1.0 / std::sqrt(2.0);
  s[0b010] = 1.0 / std::sqrt(2.0);
  CHECK(schmidt_profile(s, {0}).schmidt_rank == 1);
  CHECK(schmidt_profile(s, {1}).schmidt_rank == 2);

  const BipartitionReport ghz = schmidt_profile(ghz_state(3), {0});
  CHECK(ghz.schmidt_rank == 2);
  CHECK(ghz.schmidt_values[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(ghz.schmidt_values[1] == doctest::Approx(1.0 / std::sqrt(2.0)));

  QubitState product(3);
  product[0] = 1.0;
  for (const auto& part : std::vector<std::vector<int>>{{0}, {1}, {2}, {0, 1}, {0, 2}})
    CHECK(schmidt_profile(product, part).schmidt_rank == 1);

  CHECK_THROWS_AS(schmidt_profile(s, {}), std::invalid_argument);
  CHECK_THROWS_AS(schmidt_profile(s, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("schmidt values square-sum to squared norm") {
  std::mt19937 rng(777);
  for (int i = 0; i < 50; ++i) {
    const QubitState s = random_state(rng, 4);
    const BipartitionReport bp = schmidt_profile(s, {0, 2});
    double sum = 0.0;
    for (double v : bp.schmidt_values) sum += v * v;
    CHECK(sum == doctest::Approx(s.norm() * s.norm()).epsilon(1e-9));
  }
}

TEST_CASE("classify: named, biseparable, product") {
  const ClassificationReport w3 = classify(w_state(3));
  CHECK(w3.category == EntanglementCategory::kGenuinelyEntangled);
  REQUIRE(w3.named_match.has_value());
  CHECK(w3.named_match->name == "W3");

  QubitState bi(3);  // |0> (x) |Phi+>
  bi[0b000] = 1.0 / std::sqrt(2.0);
  bi[0b011] = 1.0 / std::sqrt(2.0);
  const ClassificationReport r = classify(bi);
  CHECK(r.category == EntanglementCategory::kBiseparable);
  REQUIRE(r.separating.size() == 1);
  CHECK(r.separating[0] == std::vector<int>{0});

  QubitState p01(2);
  p01[0b01] = 1.0;
  CHECK(classify(p01).category == EntanglementCategory::kProduct);

  for (int n = 3; n <= 5; ++n) {
    CHECK(classify(ghz_state(n)).category == EntanglementCategory::kGenuinelyEntangled);
    CHECK(classify(w_state(n)).category == EntanglementCategory::kGenuinelyEntangled);
  }

  CHECK_THROWS_AS(classify(QubitState(3)), std::domain_error);
}

TEST_CASE("named match distinguishes Bell from Bell-like") {
  const ClassificationReport bl = classify(bell_like_plus());
  REQUIRE(bl.named_match.has_value());
  CHECK(bl.named_match->name == "BellLikePlus");
  const ClassificationReport psi = classify(bell_psi_plus());
  REQUIRE(psi.named_match.has_value());
  CHECK(psi.named_match->name == "PsiPlus");
}

TEST_CASE("fidelity_up_to_phase") {
  const QubitState u = bell_psi_plus();
  const auto [f, phase] = fidelity_up_to_phase(u, std::polar(1.0, 0.7) * u);
  CHECK(f == doctest::Approx(1.0));
  CHECK(phase == doctest::Approx(0.7));
  CHECK(fidelity_up_to_phase(bell_psi_plus(), bell_psi_minus()).first ==
        doctest::Approx(0.0));
  QubitState k00(2), k11(2);
  k00[0] = 1.0;
  k11[3] = 1.0;
  CHECK(fidelity_up_to_phase(k00, k11).first == doctest::Approx(0.0));
  CHECK_THROWS_AS(fidelity_up_to_phase(k00, QubitState(3)), std::invalid_argument);
  CHECK_THROWS_AS(fidelity_up_to_phase(k00, QubitState(2)), std::domain_error);
}
