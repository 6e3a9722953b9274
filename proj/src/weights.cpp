#include "gcs/weights.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace gcs {

namespace {
constexpr double kSingularCutoff = 1e-10;
}

QubitState integrate_with_weight(const WeightFunction& w, const GrassmannState& s,
                                 const MeasureList& m) {
  QubitState out(s.qubits());
  for (const auto& [ket, amp] : s.amplitudes()) {
    const GrassmannElement integrated = berezin_integrate(w * amp, m);
    if (!integrated.is_scalar())
      throw std::invalid_argument(
          "integrate_with_weight: measure does not exhaust the Grassmann content "
          "(residual " + debug_string(integrated.soul()) + ")");
    out[ket] = integrated.body();
  }
  return out;
}

WeightSolution solve_weight(const GrassmannState& s, const QubitState& target,
                            const MeasureList& m) {
  if (target.qubits() != s.qubits())
    throw std::invalid_argument("solve_weight: target qubit count mismatch");

  int modes = 0;
  for (const auto& [ket, amp] : s.amplitudes()) modes = std::max(modes, amp.max_mode());
  for (const GeneratorId& g : m.factors()) modes = std::max(modes, g.mode);
  modes = std::max(modes, 1);

  // Full weight basis: every subset of the 2*modes generators.
  const unsigned basis_size = 1u << (2 * modes);
  const unsigned rows = target.dimension();

  Eigen::MatrixXcd a(rows, basis_size);
  for (unsigned col = 0; col < basis_size; ++col) {
    const auto gens = monomial_generators(col);
    const WeightFunction w = GrassmannElement::monomial(gens, Complex(1.0));
    const QubitState image = integrate_with_weight(w, s, m);
    for (unsigned r = 0; r < rows; ++r) a(r, col) = image[r];
  }

  Eigen::VectorXcd b(rows);
  for (unsigned r = 0; r < rows; ++r) b(r) = target[r];

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const Eigen::MatrixXcd& u = svd.matrixU();
  const Eigen::MatrixXcd& v = svd.matrixV();

  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > kSingularCutoff) ++rank;

  // Minimum-norm solution over the retained singular directions.
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(basis_size);
  for (int i = 0; i < rank; ++i)
    x += v.col(i) * (u.col(i).adjoint() * b)(0) / sigma(i);

  WeightSolution solution;
  for (unsigned col = 0; col < basis_size; ++col) {
    if (std::abs(x(col)) < kCoeffEpsilon) continue;
    const auto gens = monomial_generators(col);
    solution.particular =
        solution.particular + GrassmannElement::monomial(gens, x(col));
  }
  for (Eigen::Index col = rank; col < v.cols(); ++col) {
    WeightFunction basis_vec;
    for (unsigned row = 0; row < basis_size; ++row) {
      if (std::abs(v(row, col)) < kCoeffEpsilon) continue;
      const auto gens = monomial_generators(row);
      basis_vec = basis_vec + GrassmannElement::monomial(gens, v(row, col));
    }
    solution.null_space.push_back(std::move(basis_vec));
  }
  solution.residual = (a * x - b).norm();
  return solution;
}

}  // namespace gcs
