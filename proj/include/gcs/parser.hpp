#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gcs/fock.hpp"
#include "gcs/qubit.hpp"
#include "gcs/weights.hpp"

namespace gcs {

/// Position-carrying parse diagnostic.
struct ParseError {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;
  std::string token;
};

class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(ParseError e);
  const ParseError& error() const { return error_; }

 private:
  ParseError error_;
};

/// One additive term of a state expression: coeff * |k1:g1> (x) |k2:g2> ...
struct StateTerm {
  Complex coeff;
  std::vector<FermionLabel> slots;
};

/// A named target ("PsiPlus", "GHZ4", ...) or an explicit ket list.
using TargetSpec = std::variant<std::string, QubitState>;

/// Parsed document. Sections are optional; consumers validate what they
/// need. Scalars are folded to complex numbers at parse time.
struct Document {
  int modes = 0;  // inferred from the generators when no modes: section
  std::vector<StateTerm> state_terms;
  std::optional<GrassmannElement> weight;
  std::optional<MeasureList> measure;
  std::optional<TargetSpec> target;
};

/// Parses the newline-delimited section format ("modes:", "state:",
/// "weight:", "measure:", "target:"). Throws ParseFailure with a source
/// position on any malformed input.
Document parse_document(const std::string& text);

/// Deterministic canonical rendering; parse(render(d)) is structurally
/// equal to d.
std::string render_document(const Document& d);

/// Canonical rendering of one element in the weight-expression syntax.
std::string render_element(const GrassmannElement& e);

std::string render_scalar(Complex c);

/// Expands the state terms into a GrassmannState (tensor products of
/// coherent kets, summed with their coefficients). Throws ParseFailure
/// when the document has no state or inconsistent slot counts.
GrassmannState build_state(const Document& d);

/// Materializes the target as a QubitState (named targets resolved via
/// the canonical table).
std::optional<QubitState> resolve_target(const Document& d);

/// Structural equality up to coefficient tolerance.
bool approx_equal(const Document& a, const Document& b, double tol = 1e-9);

}  // namespace gcs
