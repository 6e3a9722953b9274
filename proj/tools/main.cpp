// gcs: Grassmann coherent-state toolkit.
//
// Subcommands:
//   verify-corpus   run the built-in verification corpus
//   integrate       integrate a document's weighted state to a qubit state
//   solve-weight    recover weight functions for a stated target
//   concurrence     two-qubit concurrence of an integrated document
//   boson-check     bosonic vs fermionic maximality of |k1 a>|k2 a> +/- |k3 a>|k4 a>
//
// Exit codes: 0 success/pass, 1 verification failure, 2 parse error,
// 3 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcs/boson.hpp"
#include "gcs/corpus.hpp"
#include "gcs/entangle.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--input", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

gcs::Document load_document(const std::string& path) {
  return gcs::parse_document(read_file(path));
}

gcs::QubitState integrate_document(const gcs::Document& doc) {
  if (!doc.weight || !doc.measure)
    throw gcs::ParseFailure({1, 1, "document needs weight: and measure: sections", ""});
  return gcs::integrate_with_weight(*doc.weight, gcs::build_state(doc), *doc.measure);
}

ordered_json classification_json(const gcs::ClassificationReport& cls) {
  ordered_json j;
  j["category"] = gcs::to_string(cls.category);
  j["separating"] = ordered_json::array();
  for (const auto& block : cls.separating) {
    ordered_json b = ordered_json::array();
    for (int q : block) b.push_back(q + 1);  // 1-based in reports
    j["separating"].push_back(std::move(b));
  }
  if (cls.named_match) {
    j["named"] = {{"name", cls.named_match->name},
                  {"fidelity", cls.named_match->fidelity},
                  {"phase", cls.named_match->phase}};
  }
  return j;
}

std::string blocks_text(const std::vector<std::vector<int>>& blocks) {
  std::string s;
  for (const auto& block : blocks) {
    if (!s.empty()) s += " ";
    s += "{";
    for (std::size_t i = 0; i < block.size(); ++i)
      s += (i ? "," : "") + std::to_string(block[i] + 1);
    s += "}";
  }
  return s.empty() ? "-" : s;
}

int cmd_verify_corpus(const std::optional<std::string>& pattern, bool list, bool json) {
  if (list) {
    for (const gcs::CorpusCase& c : gcs::builtin_corpus())
      if (!pattern || gcs::glob_match(*pattern, c.name))
        std::cout << c.name << "  [" << c.anchor << "]\n";
    return kExitPass;
  }
  const gcs::CorpusReport report = gcs::run_corpus(pattern);
  std::cout << (json ? gcs::report_json(report) : gcs::report_text(report));
  return report.failed == 0 ? kExitPass : kExitFail;
}

int cmd_integrate(const std::string& input, bool json) {
  const gcs::Document doc = load_document(input);
  const gcs::QubitState out = integrate_document(doc);
  const gcs::ClassificationReport cls = gcs::classify(out);
  const bool two_qubit = out.qubits() == 2;
  const double conc = two_qubit ? gcs::concurrence2(out) : 0.0;

  if (json) {
    ordered_json j;
    j["qubits"] = out.qubits();
    j["amplitudes"] = ordered_json::array();
    for (unsigned k = 0; k < out.dimension(); ++k) {
      if (std::abs(out[k]) < gcs::kCoeffEpsilon) continue;
      j["amplitudes"].push_back({{"ket", gcs::ket_bits(k, out.qubits())},
                                 {"re", out[k].real()},
                                 {"im", out[k].imag()}});
    }
    j["norm"] = out.norm();
    j["classification"] = classification_json(cls);
    if (two_qubit) j["concurrence"] = conc;
    std::cout << j.dump(2) << "\n";
  } else {
    for (unsigned k = 0; k < out.dimension(); ++k) {
      if (std::abs(out[k]) < gcs::kCoeffEpsilon) continue;
      std::cout << "|" << gcs::ket_bits(k, out.qubits())
                << ">: " << gcs::render_scalar(out[k]) << "\n";
    }
    std::cout << "norm: " << out.norm() << "\n";
    std::cout << "classification: " << gcs::to_string(cls.category);
    if (cls.category == gcs::EntanglementCategory::kBiseparable)
      std::cout << " separating " << blocks_text(cls.separating);
    if (cls.named_match) std::cout << " (matches " << cls.named_match->name << ")";
    std::cout << "\n";
    if (two_qubit) std::cout << "concurrence: " << conc << "\n";
  }
  return kExitPass;
}

int cmd_solve_weight(const std::string& input, bool json) {
  const gcs::Document doc = load_document(input);
  if (!doc.measure)
    throw gcs::ParseFailure({1, 1, "document needs a measure: section", ""});
  const auto target = gcs::resolve_target(doc);
  if (!target)
    throw gcs::ParseFailure({1, 1, "document needs a target: section", ""});
  const gcs::GrassmannState state = gcs::build_state(doc);
  const gcs::WeightSolution sol = gcs::solve_weight(state, *target, *doc.measure);

  if (json) {
    ordered_json j;
    j["residual"] = sol.residual;
    j["particular"] = gcs::render_element(sol.particular);
    j["null_space_dimension"] = sol.null_space.size();
    j["null_space"] = ordered_json::array();
    for (const auto& w : sol.null_space) j["null_space"].push_back(gcs::render_element(w));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "residual: " << sol.residual << "\n";
    std::cout << "particular: " << gcs::render_element(sol.particular) << "\n";
    std::cout << "null space dimension: " << sol.null_space.size() << "\n";
    for (const auto& w : sol.null_space)
      std::cout << "  null: " << gcs::render_element(w) << "\n";
  }
  return kExitPass;
}

int cmd_concurrence(const std::string& input) {
  const gcs::Document doc = load_document(input);
  const gcs::QubitState out = integrate_document(doc);
  std::cout << gcs::concurrence2(out) << "\n";
  return kExitPass;
}

gcs::Complex parse_complex_scalar(const std::string& text) {
  const gcs::Document d = gcs::parse_document("weight: " + text + "\n");
  if (!d.weight || !d.weight->is_scalar())
    throw gcs::ParseFailure({1, 1, "expected a complex scalar", text});
  return d.weight->body();
}

int cmd_boson_check(const std::string& ks, const std::string& sign_text,
                    const std::string& alpha_text, bool json) {
  std::vector<gcs::Complex> k;
  std::stringstream ss(ks);
  std::string piece;
  while (std::getline(ss, piece, ',')) k.push_back(parse_complex_scalar(piece));
  if (k.size() != 4) throw CLI::ValidationError("--k", "expected K1,K2,K3,K4");

  gcs::QuadSign sign;
  if (sign_text == "plus")
    sign = gcs::QuadSign::kPlus;
  else if (sign_text == "minus")
    sign = gcs::QuadSign::kMinus;
  else
    throw CLI::ValidationError("--sign", "expected plus or minus");

  gcs::Complex alpha;
  const auto comma = alpha_text.find(',');
  if (comma == std::string::npos) {
    alpha = parse_complex_scalar(alpha_text);
  } else {
    alpha = gcs::Complex(std::stod(alpha_text.substr(0, comma)),
                         std::stod(alpha_text.substr(comma + 1)));
  }

  const gcs::KQuad quad{k[0], k[1], k[2], k[3], sign, alpha};
  const gcs::MaximalityReport report = gcs::boson_fermion_report(quad);

  if (json) {
    ordered_json j;
    j["alpha"] = {{"re", report.alpha.real()}, {"im", report.alpha.imag()}};
    j["concurrence"] = report.concurrence;
    j["f13"] = {{"re", report.f13.real()}, {"im", report.f13.imag()}};
    j["f24"] = {{"re", report.f24.real()}, {"im", report.f24.imag()}};
    j["boson_modulus_condition"] = report.boson_modulus_condition;
    j["boson_phase_condition"] = report.boson_phase_condition;
    j["fermion_maximal"] = report.fermion_maximal;
    if (report.fermion_m)
      j["fermion_m"] = {{"re", report.fermion_m->real()}, {"im", report.fermion_m->imag()}};
    if (report.fermion_phi) j["fermion_phi"] = *report.fermion_phi;
    if (report.fermion_integrated_concurrence)
      j["fermion_integrated_concurrence"] = *report.fermion_integrated_concurrence;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "boson concurrence: " << report.concurrence << "\n";
    std::cout << "f13: " << gcs::render_scalar(report.f13)
              << "  f24: " << gcs::render_scalar(report.f24) << "\n";
    std::cout << "boson modulus condition: " << (report.boson_modulus_condition ? "yes" : "no")
              << "\n";
    std::cout << "boson phase condition: " << (report.boson_phase_condition ? "yes" : "no")
              << "\n";
    std::cout << "fermion maximal: " << (report.fermion_maximal ? "yes" : "no") << "\n";
    if (report.fermion_m)
      std::cout << "fermion m: " << gcs::render_scalar(*report.fermion_m)
                << "  phi: " << *report.fermion_phi << "\n";
    if (report.fermion_integrated_concurrence)
      std::cout << "fermion integrated concurrence: "
                << *report.fermion_integrated_concurrence << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmann coherent-state toolkit"};
  app.require_subcommand(1);

  std::string pattern_raw;
  bool list = false, vc_json = false;
  CLI::App* verify = app.add_subcommand("verify-corpus", "run the built-in corpus");
  verify->add_option("--case", pattern_raw, "glob pattern selecting cases");
  verify->add_flag("--list", list, "list case names and anchors without running");
  verify->add_flag("--json", vc_json, "JSON report");

  std::string integrate_input;
  bool integrate_json = false;
  CLI::App* integrate = app.add_subcommand("integrate", "integrate a weighted state");
  integrate->add_option("--input", integrate_input, "document file")->required();
  integrate->add_flag("--json", integrate_json, "JSON output");

  std::string solve_input;
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand("solve-weight", "recover weights for a target");
  solve->add_option("--input", solve_input, "document file (state, measure, target)")
      ->required();
  solve->add_flag("--json", solve_json, "JSON output");

  std::string conc_input;
  CLI::App* conc = app.add_subcommand("concurrence", "two-qubit concurrence of the output");
  conc->add_option("--input", conc_input, "document file")->required();

  std::string ks, sign_text = "minus", alpha_text = "1";
  bool boson_json = false;
  CLI::App* boson = app.add_subcommand("boson-check", "bosonic vs fermionic maximality");
  boson->add_option("--k", ks, "K1,K2,K3,K4 (complex scalars)")->required();
  boson->add_option("--sign", sign_text, "plus or minus")->capture_default_str();
  boson->add_option("--alpha", alpha_text, "RE[,IM] base amplitude")->capture_default_str();
  boson->add_flag("--json", boson_json, "JSON output");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) {
      const std::optional<std::string> pattern =
          pattern_raw.empty() ? std::nullopt : std::optional(pattern_raw);
      return cmd_verify_corpus(pattern, list, vc_json);
    }
    if (integrate->parsed()) return cmd_integrate(integrate_input, integrate_json);
    if (solve->parsed()) return cmd_solve_weight(solve_input, solve_json);
    if (conc->parsed()) return cmd_concurrence(conc_input);
    if (boson->parsed()) return cmd_boson_check(ks, sign_text, alpha_text, boson_json);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gcs::NoMatchingCases& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gcs::ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    // Semantically invalid input documents (incomplete measures, mismatched
    // qubit counts) count as parse errors for exit-code purposes.
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
