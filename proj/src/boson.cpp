#include "gcs/boson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gcs/entangle.hpp"
#include "gcs/weights.hpp"

namespace gcs {

namespace {
constexpr double kTol = 1e-9;

double wrap_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a > std::numbers::pi) a -= two_pi;
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}
}  // namespace

Complex coherent_overlap(Complex a, Complex b) {
  return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

double boson_concurrence(const BosonSuperposition& z) {
  const Complex p1 = coherent_overlap(z.alpha, z.gamma);  // <alpha|gamma>
  const Complex p2 = coherent_overlap(z.beta, z.delta);   // <beta|delta>
  const double denom = std::norm(z.mu) + std::norm(z.nu) +
                       2.0 * std::real(std::conj(z.mu) * z.nu * p1 * p2);
  if (denom < 1e-12) throw std::domain_error("boson_concurrence: degenerate state");
  const double s1 = std::sqrt(std::max(0.0, 1.0 - std::norm(p1)));
  const double s2 = std::sqrt(std::max(0.0, 1.0 - std::norm(p2)));
  return 2.0 * std::abs(z.mu * z.nu) * s1 * s2 / denom;
}

Complex f_coefficient(Complex ki, Complex kj) {
  return Complex(std::norm(ki) + std::norm(kj)) - 2.0 * std::conj(ki) * kj;
}

double kquad_concurrence(const KQuad& q) {
  if (q.sign == QuadSign::kMinus && std::abs(q.k1 - q.k3) < kTol &&
      std::abs(q.k2 - q.k4) < kTol)
    throw std::domain_error("kquad_concurrence: the two terms cancel");

  const double a2 = std::norm(q.alpha);
  const Complex f13 = f_coefficient(q.k1, q.k3);
  const Complex f24 = f_coefficient(q.k2, q.k4);
  const double x13 = std::exp(-a2 * f13.real());  // e^{-|a|^2 (f13+f13*)/2}
  const double x24 = std::exp(-a2 * f24.real());
  const double numerator = 2.0 * std::sqrt(std::max(0.0, (1.0 - x13) * (1.0 - x24)));
  const Complex cross = std::exp(-0.5 * a2 * (f13 + f24));
  const double cross2 = 2.0 * cross.real();  // e^{-a(f13*+f24*)/2} + e^{-a(f13+f24)/2}
  const double denominator =
      q.sign == QuadSign::kMinus ? 2.0 - cross2 : 2.0 + cross2;
  if (std::abs(denominator) < 1e-12)
    throw std::domain_error("kquad_concurrence: degenerate state");
  return numerator / denominator;
}

std::pair<bool, bool> boson_maximality(const KQuad& q) {
  const double a2 = std::norm(q.alpha);
  if (a2 < kTol * kTol) throw std::domain_error("boson_maximality: alpha = 0");
  const bool modulus = std::abs(std::abs(q.k1 - q.k3) - std::abs(q.k2 - q.k4)) < kTol;
  const double delta =
      std::imag(std::conj(q.k4) * q.k2) - std::imag(std::conj(q.k1) * q.k3);
  // The denominator phase term is cos(|a|^2 delta): maximality needs the
  // cosine at +1 (minus sign) or -1 (plus sign), i.e. a 0 or pi residue.
  const double target = q.sign == QuadSign::kMinus ? 0.0 : std::numbers::pi;
  const bool phase = std::abs(wrap_angle(a2 * delta - target)) < kTol;
  return {modulus, phase};
}

FermionCounterpart fermion_counterpart_max(const KQuad& q) {
  const Complex d1 = q.sign == QuadSign::kMinus ? q.k1 - q.k3 : q.k1 + q.k3;
  const Complex d2 = q.sign == QuadSign::kMinus ? q.k2 - q.k4 : q.k2 + q.k4;
  FermionCounterpart out;
  out.maximal = std::abs(std::abs(d1) - std::abs(d2)) < kTol && std::abs(d1) > kTol;
  if (out.maximal) {
    out.m = d1;
    out.phi = wrap_angle(std::arg(d1) - std::arg(d2));
  }
  return out;
}

MaximalityReport boson_fermion_report(const KQuad& q) {
  MaximalityReport report;
  report.alpha = q.alpha;
  report.f13 = f_coefficient(q.k1, q.k3);
  report.f24 = f_coefficient(q.k2, q.k4);
  report.concurrence = kquad_concurrence(q);
  std::tie(report.boson_modulus_condition, report.boson_phase_condition) =
      boson_maximality(q);
  const FermionCounterpart fc = fermion_counterpart_max(q);
  report.fermion_maximal = fc.maximal;
  report.fermion_m = fc.m;
  report.fermion_phi = fc.phi;

  if (fc.maximal) {
    // Independent route: build |k1 t><k2 t| +/- |k3 t>|k4 t>, integrate with
    // theta*/(m sqrt 2), and measure the two-qubit concurrence.
    const GeneratorId theta(1, false);
    const GrassmannState first =
        tensor_product(coherent_ket({q.k1, theta}), coherent_ket({q.k2, theta}));
    const GrassmannState second =
        tensor_product(coherent_ket({q.k3, theta}), coherent_ket({q.k4, theta}));
    const GrassmannState s =
        q.sign == QuadSign::kMinus ? first - second : first + second;
    const Complex scale = 1.0 / (*fc.m * std::sqrt(2.0));
    const WeightFunction w = scale * GrassmannElement::generator(theta.starred());
    const MeasureList measure({theta.starred(), theta});
    const QubitState out = integrate_with_weight(w, s, measure);
    report.fermion_integrated_concurrence = concurrence2(out);
  }
  return report;
}

}  // namespace gcs
