#include "gcs/boson.hpp"

#include <numbers>
#include <random>

#include "doctest.h"
#include "oracle_boson.hpp"

using namespace gcs;
using gcs::testing::embedded_wootters_concurrence;

TEST_CASE("coherent_overlap") {
  CHECK(std::abs(coherent_overlap(1.0, 1.0) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(coherent_overlap(1.0, -1.0) - Complex(std::exp(-2.0))) < 1e-12);
  CHECK(std::abs(coherent_overlap(0.0, Complex(0.5, 0.5)) -
                 Complex(std::exp(-0.25))) < 1e-12);
}

TEST_CASE("boson_concurrence reference values") {
  // |a>|-a> - |-a>|a> is maximally entangled for any a != 0.
  CHECK(boson_concurrence({1.0, -1.0, 1.0, -1.0, -1.0, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // A single product term has no entanglement.
  CHECK(boson_concurrence({1.0, 0.0, 1.0, -1.0, -1.0, 1.0}) == doctest::Approx(0.0));
  // |ia>|ia> - |a>|a> at a = 1: entangled but strictly below maximal.
  const BosonSuperposition z{1.0, -1.0, Complex(0, 1), Complex(0, 1), 1.0, 1.0};
  CHECK(boson_concurrence(z) == doctest::Approx(embedded_wootters_concurrence(z)));
  CHECK(boson_concurrence(z) == doctest::Approx(0.8186).epsilon(1e-3));
  CHECK(boson_concurrence(z) < 1.0);
}

TEST_CASE("boson_concurrence matches the embedded Wootters oracle") {
  std::mt19937 rng(1414);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int checked = 0;
  while (checked < 300) {
    const BosonSuperposition z{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                               Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                               Complex(u(rng), u(rng)), Complex(u(rng), u(rng))};
    double direct;
    try {
      direct = boson_concurrence(z);
    } catch (const std::domain_error&) {
      continue;  // degenerate draw
    }
    CHECK(std::abs(direct - embedded_wootters_concurrence(z)) < 1e-9);
    ++checked;
  }
}

TEST_CASE("boson_concurrence rejects degenerate states") {
  // mu = -nu with identical components: the state vanishes.
  CHECK_THROWS_AS(boson_concurrence({1.0, -1.0, 0.3, 0.4, 0.3, 0.4}), std::domain_error);
}

TEST_CASE("kquad_concurrence reference values") {
  CHECK(kquad_concurrence({1.0, -1.0, -1.0, -3.0, QuadSign::kMinus, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const double c = kquad_concurrence({Complex(0, 1), Complex(0, 1), 1.0, 1.0,
                                      QuadSign::kMinus, 1.0});
  CHECK(c < 1.0);
  CHECK(c == doctest::Approx(0.8186).epsilon(1e-3));
  CHECK_THROWS_AS(kquad_concurrence({1.0, 1.0, 1.0, 1.0, QuadSign::kMinus, 1.0}),
                  std::domain_error);
}

TEST_CASE("kquad agrees with the general superposition formula") {
  std::mt19937 rng(9090);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int i = 0; i < 100; ++i) {
    const Complex alpha(u(rng), u(rng));
    if (std::abs(alpha) < 0.2) continue;
    const KQuad q{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                  Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                  (i % 2 == 0) ? QuadSign::kMinus : QuadSign::kPlus, alpha};
    const BosonSuperposition z{1.0, q.sign == QuadSign::kMinus ? -1.0 : 1.0,
                               q.k1 * alpha, q.k2 * alpha, q.k3 * alpha, q.k4 * alpha};
    double reference;
    try {
      reference = boson_concurrence(z);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(kquad_concurrence(q) == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("kquad symmetry under swapping the two terms (minus sign)") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 60; ++i) {
    const KQuad q{Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                  Complex(u(rng), u(rng)), Complex(u(rng), u(rng)),
                  QuadSign::kMinus, Complex(1.0)};
    const KQuad swapped{q.k3, q.k4, q.k1, q.k2, QuadSign::kMinus, q.alpha};
    try {
      CHECK(kquad_concurrence(q) == doctest::Approx(kquad_concurrence(swapped)));
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("boson_maximality reference cases") {
  CHECK(boson_maximality({1.0, -1.0, -1.0, -3.0, QuadSign::kMinus, 1.0}) ==
        std::pair{true, true});
  // Im(k1* k3) = -1 while Im(k4* k2) = 1.
  CHECK(boson_maximality({Complex(0, 1), Complex(0, 1), 1.0, 1.0, QuadSign::kMinus, 1.0}) ==
        std::pair{true, false});
  const Complex k = Complex(0, std::numbers::pi / 2.0);
  CHECK(boson_maximality({k, k, 1.0, 1.0, QuadSign::kPlus, 1.0}) == std::pair{true, true});
  CHECK_THROWS_AS(boson_maximality({1.0, 1.0, 2.0, 2.0, QuadSign::kMinus, 0.0}),
                  std::domain_error);
}

TEST_CASE("every reference maximal quad has concurrence 1 and a fermionic counterpart") {
  const std::vector<KQuad> quads = {
      {1.0, -1.0, -1.0, -3.0, QuadSign::kMinus, 1.0},
      {1.0, -1.0, -1.0, 1.0, QuadSign::kMinus, 1.0},
      {1.0, 1.0, Complex(0, 1), Complex(0, -1), QuadSign::kMinus, 1.0},
      {1.0, -1.0, Complex(0, 1), Complex(0, 1), QuadSign::kMinus, 1.0},
  };
  for (const KQuad& q : quads) {
    CHECK(boson_maximality(q) == std::pair{true, true});
    CHECK(kquad_concurrence(q) == doctest::Approx(1.0).epsilon(1e-9));
    const FermionCounterpart fc = fermion_counterpart_max(q);
    CHECK(fc.maximal);
    const MaximalityReport report = boson_fermion_report(q);
    REQUIRE(report.fermion_integrated_concurrence.has_value());
    CHECK(*report.fermion_integrated_concurrence == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("fermion counterpart reference cases") {
  const FermionCounterpart a =
      fermion_counterpart_max({Complex(0, 1), Complex(0, 1), 1.0, 1.0, QuadSign::kMinus, 1.0});
  CHECK(a.maximal);
  CHECK(std::abs(*a.m - Complex(-1, 1)) < 1e-12);
  CHECK(*a.phi == doctest::Approx(0.0));

  // m = 3: |theta>|theta> - |-2 theta>|-2 theta>.
  const FermionCounterpart b =
      fermion_counterpart_max({1.0, 1.0, -2.0, -2.0, QuadSign::kMinus, 1.0});
  CHECK(b.maximal);
  CHECK(std::abs(*b.m - Complex(3.0)) < 1e-12);

  // Example 2, Case 2: bosonic maximality without a fermionic counterpart.
  const double half_pi = std::numbers::pi / 2.0;
  const KQuad case2{Complex(half_pi, 1.0), Complex(std::numbers::pi, 1.0),
                    Complex(half_pi, -1.0), Complex(std::numbers::pi, -1.0),
                    QuadSign::kPlus, 1.0};
  CHECK(boson_maximality(case2) == std::pair{true, true});
  CHECK(kquad_concurrence(case2) == doctest::Approx(1.0).epsilon(1e-9));
  const FermionCounterpart fc2 = fermion_counterpart_max(case2);
  CHECK_FALSE(fc2.maximal);
}

TEST_CASE("forward maximality: conditioned random quads reach concurrence 1") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const double alpha : {0.5, 1.0, 2.0}) {
    for (int i = 0; i < 60; ++i) {
      const QuadSign sign = (i % 2 == 0) ? QuadSign::kMinus : QuadSign::kPlus;
      // k1 = k3 + u0, k2 = k4 + v with |v| = |u0| and the phase residue
      // fixed by choosing arg(v) against k4.
      const Complex k3(u(rng), u(rng));
      const Complex k4_dir = std::polar(1.0, u(rng));
      Complex u0(u(rng), u(rng));
      if (std::abs(u0) < 0.3) u0 += Complex(0.5, 0.5);
      const double target_im =
          std::imag(std::conj(u0) * k3) +
          (sign == QuadSign::kPlus ? std::numbers::pi / (alpha * alpha) : 0.0);
      const double vlen = std::abs(u0);
      const double k4len = std::abs(target_im) / vlen + 0.5;
      const Complex k4 = k4len * k4_dir;
      // Solve Im(conj(k4) v) = target_im with |v| = vlen.
      const double s = target_im / (k4len * vlen);
      const Complex v = std::polar(vlen, std::arg(k4) + std::asin(s));
      const KQuad quad{k3 + u0, k4 + v, k3, k4, sign, alpha};
      const auto [mod_ok, phase_ok] = boson_maximality(quad);
      REQUIRE(mod_ok);
      REQUIRE(phase_ok);
      CHECK(std::abs(kquad_concurrence(quad) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("Case 3 family |k t>|l t> + |l t>|k t>: fermion-maximal, never boson-maximal") {
  // The concurrence deficit of this family is 2 exp(-|alpha(k-l)|^2), so
  // the sweep is kept where doubles still resolve it; the exact statement
  // is carried by the phase condition, which fails identically because
  // Im(k4* k2) = Im(k1* k3) for (k, l, l, k).
  std::mt19937 rng(13);
  for (const double alpha : {0.5, 1.0, 2.0}) {
    std::uniform_real_distribution<double> u(-1.2 / alpha, 1.2 / alpha);
    for (int i = 0; i < 50; ++i) {
      const Complex k(u(rng), u(rng)), l(u(rng), u(rng));
      if (std::abs(k - l) < 0.1 / alpha) continue;  // degenerate toward a product
      const KQuad q{k, l, l, k, QuadSign::kPlus, alpha};
      const auto [mod_ok, phase_ok] = boson_maximality(q);
      CHECK(mod_ok);          // |k - l| = |l - k| trivially
      CHECK_FALSE(phase_ok);  // Im(k4* k2) - Im(k1* k3) = 0, never pi
      CHECK(kquad_concurrence(q) < 1.0 - 1e-6);
      const FermionCounterpart fc = fermion_counterpart_max(q);
      CHECK(fc.maximal == (std::abs(k + l) > 1e-9));
    }
  }
}
