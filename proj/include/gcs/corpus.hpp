#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcs/parser.hpp"

namespace gcs {

enum class Comparison { kExact, kUpToGlobalPhase };

/// One built-in verification case: a self-contained document (state,
/// weight, measure, target) plus how to compare and what it certifies.
struct CorpusCase {
  std::string name;
  std::string source;  // DSL text including the target: section
  Comparison comparison = Comparison::kUpToGlobalPhase;
  std::string anchor;  // which construction this certifies
  std::string notes;   // conventions and recorded discrepancies
};

struct CaseResult {
  std::string name;
  bool passed = false;
  double fidelity = 0.0;
  double phase = 0.0;     // arg of <target|output>
  double residual = 0.0;  // inverse-solver residual for (state, target)
  std::string anchor;
  std::string notes;
};

struct CorpusReport {
  int passed = 0;
  int failed = 0;
  std::vector<CaseResult> cases;  // sorted by name
};

/// The full built-in corpus, in declaration order.
const std::vector<CorpusCase>& builtin_corpus();

/// --case filters that select nothing are a usage error, not a pass.
struct NoMatchingCases : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Runs every case whose name matches the filter ('*' wildcards; no filter
/// runs everything). Each case is parsed, tensored, integrated, compared
/// against its target, classified, and round-tripped through the inverse
/// solver. Throws NoMatchingCases when the filter matches nothing.
CorpusReport run_corpus(const std::optional<std::string>& filter = std::nullopt);

/// Simple '*' glob match used for --case filters.
bool glob_match(const std::string& pattern, const std::string& text);

std::string report_text(const CorpusReport& report);
std::string report_json(const CorpusReport& report);

}  // namespace gcs
