#include "gcs/fock.hpp"

#include <random>

#include "doctest.h"

using namespace gcs;

namespace {

GeneratorId t(int mode) { return GeneratorId(mode, false); }
GeneratorId ts(int mode) { return GeneratorId(mode, true); }

GrassmannElement gen(GeneratorId g) { return GrassmannElement::generator(g); }

GrassmannElement mono(std::initializer_list<GeneratorId> gens, Complex c = 1.0) {
  std::vector<GeneratorId> v(gens);
  return GrassmannElement::monomial(v, c);
}

GrassmannState ket_theta(Complex k, int mode = 1) { return coherent_ket({k, t(mode)}); }

}  // namespace

TEST_CASE("coherent_ket: |theta>, vacuum, conjugated label") {
  const GrassmannState s = ket_theta(1.0);
  CHECK(approx_equal(s.amplitude(0),
                     GrassmannElement::scalar(1.0) + mono({ts(1), t(1)}, -0.5), 1e-12));
  CHECK(approx_equal(s.amplitude(1), Complex(-1.0) * gen(t(1)), 1e-12));

  const GrassmannState vac = ket_theta(0.0);
  CHECK(approx_equal(vac.amplitude(0), GrassmannElement::scalar(1.0), 1e-12));
  CHECK(vac.amplitude(1).is_zero());

  // |theta*>: theta and theta* swap roles; exp(-theta theta*/2) = 1 + theta'*theta/2.
  const GrassmannState sc = coherent_ket({1.0, ts(1)});
  CHECK(approx_equal(sc.amplitude(0),
                     GrassmannElement::scalar(1.0) + mono({ts(1), t(1)}, 0.5), 1e-12));
  CHECK(approx_equal(sc.amplitude(1), Complex(-1.0) * gen(ts(1)), 1e-12));
}

TEST_CASE("tensor_product reproduces the one-mode pair expansion") {
  // |theta>|theta> = e^{-theta* theta}(|00> - theta|01> - theta|10>).
  const GrassmannState s = tensor_product(ket_theta(1.0), ket_theta(1.0));
  const GrassmannElement envelope = exp_nilpotent(mono({ts(1), t(1)}, -1.0));
  CHECK(approx_equal(s.amplitude(0b00), envelope, 1e-12));
  CHECK(approx_equal(s.amplitude(0b01), Complex(-1.0) * gen(t(1)), 1e-12));
  CHECK(approx_equal(s.amplitude(0b10), Complex(-1.0) * gen(t(1)), 1e-12));
  CHECK(s.amplitude(0b11).is_zero());
}

TEST_CASE("tensor_product reproduces the two-mode expansion") {
  // |t1>|t2> = e^{-(t1' t1 + t2' t2)/2}(|00> - t2|01> - t1|10> - t1 t2|11>).
  const GrassmannState s = tensor_product(ket_theta(1.0, 1), ket_theta(1.0, 2));
  const GrassmannElement envelope =
      exp_nilpotent(mono({ts(1), t(1)}, -0.5) + mono({ts(2), t(2)}, -0.5));
  CHECK(approx_equal(s.amplitude(0b00), envelope, 1e-12));
  CHECK(approx_equal(s.amplitude(0b01), Complex(-1.0) * (gen(t(2)) * envelope), 1e-12));
  CHECK(approx_equal(s.amplitude(0b10), Complex(-1.0) * (gen(t(1)) * envelope), 1e-12));
  CHECK(approx_equal(s.amplitude(0b11), mono({t(1), t(2)}, -1.0), 1e-12));
}

TEST_CASE("tensor with trivial factors") {
  const GrassmannState zero0 = GrassmannState::basis_ket(1, 0);
  const GrassmannState s = tensor_product(zero0, zero0);
  CHECK(approx_equal(s.amplitude(0), GrassmannElement::scalar(1.0), 1e-12));
  CHECK(s.amplitudes().size() == 1);
}

TEST_CASE("moving an odd factor past p excitations gives (-1)^p") {
  const GrassmannState theta_ket = gen(t(1)) * GrassmannState::basis_ket(1, 0);
  for (int p = 0; p <= 2; ++p) {
    GrassmannState front = GrassmannState::basis_ket(p == 0 ? 1 : p, p == 0 ? 0 : (1u << p) - 1);
    if (p == 0) front = GrassmannState::basis_ket(1, 0);
    const GrassmannState prod = tensor_product(front, theta_ket);
    const unsigned ket = (p == 0 ? 0u : (1u << p) - 1) << 1;
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    CHECK(approx_equal(prod.amplitude(ket), Complex(sign) * gen(t(1)), 1e-12));
  }
}

TEST_CASE("inner products") {
  CHECK(approx_equal(inner(ket_theta(1.0), ket_theta(1.0)), GrassmannElement::scalar(1.0),
                     1e-12));
  const GrassmannState vac = GrassmannState::basis_ket(1, 0);
  CHECK(approx_equal(inner(vac, ket_theta(1.0)),
                     GrassmannElement::scalar(1.0) + mono({ts(1), t(1)}, -0.5), 1e-12));
  const GrassmannState k00 = GrassmannState::basis_ket(2, 0);
  CHECK(approx_equal(inner(k00, k00), GrassmannElement::scalar(1.0), 1e-12));
  CHECK_THROWS_AS(inner(vac, k00), std::invalid_argument);
}

TEST_CASE("normalization <k theta|k theta> = 1 for several k") {
  for (const Complex k : {Complex(1), Complex(-1), Complex(0, 1), Complex(3), Complex(-2)}) {
    const GrassmannState s = ket_theta(k);
    CHECK(approx_equal(inner(s, s), GrassmannElement::scalar(1.0), 1e-12));
  }
}

TEST_CASE("annihilation eigenvalue identity a|k theta> = k theta |k theta>") {
  for (const Complex k : {Complex(1), Complex(-1), Complex(0, 1), Complex(3), Complex(-2)}) {
    const GrassmannState s = ket_theta(k);
    const GrassmannState lhs = apply_mode_op(ModeOperator::annihilation(), s, 0);
    const GrassmannState rhs = (k * gen(t(1))) * s;
    CHECK(approx_equal(lhs, rhs, 1e-12));
  }
}

TEST_CASE("annihilation kills the vacuum; creation raises the coherent ket") {
  const GrassmannState vac = GrassmannState::basis_ket(1, 0);
  CHECK(apply_mode_op(ModeOperator::annihilation(), vac, 0).is_zero());

  const GrassmannState raised = apply_mode_op(ModeOperator::creation(), ket_theta(1.0), 0);
  CHECK(raised.amplitude(0).is_zero());
  CHECK(approx_equal(raised.amplitude(1),
                     GrassmannElement::scalar(1.0) + mono({ts(1), t(1)}, -0.5), 1e-12));
}

TEST_CASE("mode operator algebra: {a, a+} = 1, nilpotency") {
  const ModeOperator a = ModeOperator::annihilation();
  const ModeOperator ad = ModeOperator::creation();
  CHECK(approx_equal(compose(a, ad) + compose(ad, a), ModeOperator::identity(), 1e-12));
  CHECK(compose(a, a).is_zero());
  CHECK(compose(ad, ad).is_zero());
}

TEST_CASE("displacement: D(theta)|0> = |theta>, D(0) = I, unitarity") {
  const FermionLabel label{1.0, t(1)};
  const ModeOperator d = displacement(label);
  const GrassmannState displaced = apply_mode_op(d, GrassmannState::basis_ket(1, 0), 0);
  CHECK(approx_equal(displaced, coherent_ket(label), 1e-12));

  CHECK(approx_equal(displacement({0.0, t(1)}), ModeOperator::identity(), 1e-12));

  CHECK(approx_equal(compose(d, adjoint(d)), ModeOperator::identity(), 1e-12));
  CHECK(approx_equal(compose(adjoint(d), d), ModeOperator::identity(), 1e-12));
}

TEST_CASE("displacement unitarity for random complex scales") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 25; ++i) {
    const FermionLabel label{Complex(u(rng), u(rng)), t(1)};
    const ModeOperator d = displacement(label);
    CHECK(approx_equal(compose(d, adjoint(d)), ModeOperator::identity(), 1e-9));
    CHECK(approx_equal(compose(adjoint(d), d), ModeOperator::identity(), 1e-9));
    const GrassmannState displaced = apply_mode_op(d, GrassmannState::basis_ket(1, 0), 0);
    CHECK(approx_equal(displaced, coherent_ket(label), 1e-9));
  }
}

TEST_CASE("tensor_product associativity on coherent factors") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 30; ++i) {
    const GrassmannState a = coherent_ket({Complex(u(rng), u(rng)), t(1)});
    const GrassmannState b = coherent_ket({Complex(u(rng), u(rng)), t(2)});
    const GrassmannState c = coherent_ket({Complex(u(rng), u(rng)), ts(3)});
    CHECK(approx_equal(tensor_product(tensor_product(a, b), c),
                       tensor_product(a, tensor_product(b, c)), 1e-9));
  }
}

TEST_CASE("apply_mode_op slot handling") {
  const GrassmannState s = tensor_product(ket_theta(1.0, 1), ket_theta(1.0, 2));
  CHECK_THROWS_AS(apply_mode_op(ModeOperator::annihilation(), s, 2), std::out_of_range);
  // Composition against sequential application on slot 1.
  const ModeOperator d = displacement({Complex(0.5, -0.25), t(2)});
  const GrassmannState seq =
      apply_mode_op(d, apply_mode_op(adjoint(d), s, 1), 1);
  CHECK(approx_equal(seq, s, 1e-9));
}
