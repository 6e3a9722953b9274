#include "gcs/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gcs/entangle.hpp"
#include "json.hpp"

namespace gcs {

namespace {

std::string measure_line(int modes) {
  std::string s = "measure: ";
  for (int m = 1; m <= modes; ++m) {
    if (m > 1) s += ", ";
    s += "d t" + std::to_string(m) + "', d t" + std::to_string(m);
  }
  return s + "\n";
}

struct PmProduct {
  std::string pattern;   // one '+'/'-' per slot: |theta> + sign |-theta>
  std::string coeff;     // scalar text applied to the whole product, "" = 1
  int overall_sign = 1;  // sign of the product in the enclosing sum
};

// Expands sums of products of (|theta> +/- |-theta>) factors, all on
// generator t1, into explicit signed tensor terms.
std::string pm_product_state(const std::vector<PmProduct>& products) {
  std::string out = "state: ";
  bool first = true;
  for (const auto& [pattern, coeff, overall] : products) {
    const std::size_t n = pattern.size();
    for (unsigned choice = 0; choice < (1u << n); ++choice) {
      int sign = overall;
      std::string kets;
      for (std::size_t slot = 0; slot < n; ++slot) {
        const bool minus_branch = (choice >> (n - 1 - slot)) & 1u;
        if (minus_branch && pattern[slot] == '-') sign = -sign;
        if (!kets.empty()) kets += " (x) ";
        kets += minus_branch ? "|-1:t1>" : "|1:t1>";
      }
      if (first)
        out += (sign < 0 ? "- " : "");
      else
        out += (sign < 0 ? " - " : " + ");
      first = false;
      if (!coeff.empty()) out += coeff + "*";
      out += kets;
    }
  }
  return out + "\n";
}

std::vector<CorpusCase> make_corpus() {
  std::vector<CorpusCase> cases;
  const auto add = [&](std::string name, std::string source, Comparison cmp,
                       std::string anchor, std::string notes = "") {
    cases.push_back({std::move(name), std::move(source), cmp, std::move(anchor),
                     std::move(notes)});
  };
  const std::string m1 = measure_line(1);
  const std::string m2 = measure_line(2);
  const std::string m3 = measure_line(3);
  const std::string m4 = measure_line(4);

  // --- Bell states from one Grassmann mode -------------------------------

  add("bell-pair-diff-psi-plus",
      "state: |1:t1> (x) |1:t1> - |-1:t1> (x) |-1:t1>\n"
      "weight: (1/(2*sqrt(2)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "difference of equal-sign coherent pairs, weight +(1/(2 sqrt2)) t1' -> Psi+");

  add("bell-pair-diff-psi-minus",
      "state: |1:t1> (x) |-1:t1> - |-1:t1> (x) |1:t1>\n"
      "weight: -(1/(2*sqrt(2)))*t1'\n" + m1 + "target: PsiMinus\n",
      Comparison::kExact,
      "difference of opposite-sign coherent pairs, weight -(1/(2 sqrt2)) t1' -> Psi-");

  add("bell-pair-sum-sep00-plus",
      "state: |1:t1> (x) |1:t1> + |-1:t1> (x) |-1:t1>\n"
      "weight: 1/2\n" + m1 + "target: |00>\n",
      Comparison::kExact, "sum of equal-sign coherent pairs, constant weight 1/2 -> |00>");

  add("bell-pair-sum-sep00-minus",
      "state: |1:t1> (x) |-1:t1> + |-1:t1> (x) |1:t1>\n"
      "weight: -1/2\n" + m1 + "target: |00>\n",
      Comparison::kUpToGlobalPhase,
      "sum of opposite-sign coherent pairs, constant weight -1/2 -> |00>",
      "lower-sign branch lands on -|00>");

  add("bell-single-pair-psi-minus-a",
      "state: |1:t1> (x) |-1:t1>\n"
      "weight: (1/sqrt(2))*t1'\n" + m1 + "target: PsiMinus\n",
      Comparison::kUpToGlobalPhase,
      "single coherent pair with weight t1'/sqrt2 -> Psi-",
      "equal-sign pairs integrate to Psi+ under these conventions; the "
      "stated Psi- requires opposite-sign labels");

  add("bell-single-pair-psi-minus-b",
      "state: |-1:t1> (x) |1:t1>\n"
      "weight: -(1/sqrt(2))*t1'\n" + m1 + "target: PsiMinus\n",
      Comparison::kUpToGlobalPhase,
      "single coherent pair with weight -t1'/sqrt2 -> Psi-",
      "equal-sign pairs integrate to Psi+ under these conventions; the "
      "stated Psi- requires opposite-sign labels");

  add("bell-pm-combo-psi-plus",
      pm_product_state({{"+-", "", 1}, {"-+", "", 1}}) +
          "weight: (1/(4*sqrt(2)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "plus/minus coherent combinations, symmetric sum, weight t1'/(4 sqrt2) -> Psi+",
      "one weight serves both Bell signs of this construction");

  add("bell-pm-combo-psi-minus",
      pm_product_state({{"+-", "", 1}, {"-+", "", -1}}) +
          "weight: (1/(4*sqrt(2)))*t1'\n" + m1 + "target: PsiMinus\n",
      Comparison::kExact,
      "plus/minus coherent combinations, antisymmetric sum, weight t1'/(4 sqrt2) -> Psi-",
      "one weight serves both Bell signs of this construction");

  add("bell-conjpair-phi-plus",
      "state: |1:t1'> (x) |1:t1>\n"
      "weight: (1/sqrt(2))*exp(t1*t1')\n" + m1 + "target: PhiPlus\n",
      Comparison::kExact,
      "conjugate-label pair with weight exp(+t1 t1')/sqrt2 -> Phi+");

  add("bell-conjpair-phi-minus",
      "state: |1:t1'> (x) |1:t1>\n"
      "weight: (-1/sqrt(2))*exp(-t1*t1')\n" + m1 + "target: PhiMinus\n",
      Comparison::kExact,
      "conjugate-label pair with weight -exp(-t1 t1')/sqrt2 -> Phi-");

  add("bell-conjpair-psi-minus",
      "state: |1:t1'> (x) |1:t1>\n"
      "weight: (1/sqrt(2))*(t1' + t1)\n" + m1 + "target: PsiMinus\n",
      Comparison::kExact,
      "conjugate-label pair with weight (t1' + t1)/sqrt2",
      "stated +/- pairing is swapped under these conventions: the plus "
      "weight yields Psi-");

  add("bell-conjpair-psi-plus",
      "state: |1:t1'> (x) |1:t1>\n"
      "weight: (1/sqrt(2))*(t1' - t1)\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "conjugate-label pair with weight (t1' - t1)/sqrt2",
      "stated +/- pairing is swapped under these conventions: the minus "
      "weight yields Psi+");

  // --- Bell states from two Grassmann modes ------------------------------

  add("bell-twomode-phi-minus",
      "modes: 2\nstate: |1:t1> (x) |1:t2>\n"
      "weight: (1/sqrt(2))*(t1'*t1*t2'*t2 - t1'*t2')\n" + m2 + "target: PhiMinus\n",
      Comparison::kExact,
      "two-mode pair with quartic-minus-corner weight",
      "stated +/- pairing is swapped under these conventions: the minus "
      "weight yields Phi-");

  add("bell-twomode-phi-plus",
      "modes: 2\nstate: |1:t1> (x) |1:t2>\n"
      "weight: (1/sqrt(2))*(t1'*t1*t2'*t2 + t1'*t2')\n" + m2 + "target: PhiPlus\n",
      Comparison::kExact,
      "two-mode pair with quartic-plus-corner weight",
      "stated +/- pairing is swapped under these conventions: the plus "
      "weight yields Phi+");

  add("bell-twomode-psi-plus",
      "modes: 2\nstate: |1:t1> (x) |1:t2>\n"
      "weight: (-1/sqrt(2))*(t1'*t1*t2' + t1'*t2'*t2)\n" + m2 + "target: PsiPlus\n",
      Comparison::kExact,
      "two-mode pair with odd cubic weight -> Psi+",
      "stated as reaching both Bell signs; this weight reaches Psi+ only, "
      "Psi- needs the second term negated (solver-checked)");

  add("lambda-psi-plus",
      "modes: 2\nstate: |1:t1> (x) |1:t2> + |1:t2> (x) |1:t1>\n"
      "weight: (2/sqrt(2))*t1'\n" + m2 + "target: PsiPlus\n",
      Comparison::kExact,
      "symmetric two-mode combination with weight 2 t1'/sqrt2 -> Psi+");

  add("lambda-psi-minus",
      "modes: 2\nstate: |1:t1> (x) |1:t2> - |1:t2> (x) |1:t1>\n"
      "weight: (2/sqrt(2))*t1'\n" + m2 + "target: PsiMinus\n",
      Comparison::kUpToGlobalPhase,
      "antisymmetric two-mode combination with weight 2 t1'/sqrt2 -> Psi-",
      "");

  add("lambda-sep00",
      "modes: 2\nstate: |1:t1> (x) |1:t2> + |1:t2> (x) |1:t1>\n"
      "weight: (1/2)*(t1'*t1*t2'*t2)\n" + m2 + "target: |00>\n",
      Comparison::kExact,
      "symmetric two-mode combination, quartic weight -> |00>",
      "the two separable-output weights are stated crosswise: the quartic "
      "weight extracts |00> (from the symmetric combination) and t1' t2' "
      "extracts |11> (from the antisymmetric one)");

  add("lambda-sep11",
      "modes: 2\nstate: |1:t1> (x) |1:t2> - |1:t2> (x) |1:t1>\n"
      "weight: (1/2)*(t1'*t2')\n" + m2 + "target: |11>\n",
      Comparison::kExact,
      "antisymmetric two-mode combination, weight t1' t2' / 2 -> |11>",
      "the two separable-output weights are stated crosswise: the quartic "
      "weight extracts |00> (from the symmetric combination) and t1' t2' "
      "extracts |11> (from the antisymmetric one)");

  // --- Bell-like states --------------------------------------------------

  add("belllike-conjpair-minus",
      "state: |1:t1'> (x) |1:t1>\n"
      "weight: (1/sqrt(2))*(exp(i*pi/4)*t1' + exp(-i*pi/4)*t1)\n" + m1 +
          "target: BellLikeMinus\n",
      Comparison::kExact,
      "conjugate-label pair, phased weight with plus sign",
      "stated +/- pairing is swapped under these conventions");

  add("belllike-conjpair-plus",
      "state: |1:t1'> (x) |1:t1>\n"
      "weight: (1/sqrt(2))*(exp(i*pi/4)*t1' - exp(-i*pi/4)*t1)\n" + m1 +
          "target: BellLikePlus\n",
      Comparison::kExact,
      "conjugate-label pair, phased weight with minus sign",
      "stated +/- pairing is swapped under these conventions");

  add("belllike-twomode-plus",
      "modes: 2\nstate: |1:t1> (x) |1:t2>\n"
      "weight: (1/sqrt(2))*(exp(i*pi/4)*t1*t1'*t2' + exp(-i*pi/4)*t1'*t2*t2')\n" + m2 +
          "target: BellLikePlus\n",
      Comparison::kExact, "two-mode pair, phased cubic weight, plus sign -> BellLike+");

  add("belllike-twomode-minus",
      "modes: 2\nstate: |1:t1> (x) |1:t2>\n"
      "weight: (1/sqrt(2))*(exp(i*pi/4)*t1*t1'*t2' - exp(-i*pi/4)*t1'*t2*t2')\n" + m2 +
          "target: BellLikeMinus\n",
      Comparison::kExact, "two-mode pair, phased cubic weight, minus sign -> BellLike-");

  // --- W states -----------------------------------------------------------

  add("w3-from-triple",
      "state: |1:t1> (x) |1:t1> (x) |1:t1>\n"
      "weight: (1/sqrt(3))*t1'\n" + m1 + "target: W3\n",
      Comparison::kExact, "triple equal coherent product, weight t1'/sqrt3 -> W(3)");

  add("w4-general",
      "state: |1:t1> (x) |1:t1> (x) |1:t1> (x) |1:t1>\n"
      "weight: (1/sqrt(4))*t1'\n" + m1 + "target: W4\n",
      Comparison::kExact, "n-fold equal coherent product, weight t1'/sqrt(n) -> W(n), n = 4");

  add("w5-general",
      "state: |1:t1> (x) |1:t1> (x) |1:t1> (x) |1:t1> (x) |1:t1>\n"
      "weight: (1/sqrt(5))*t1'\n" + m1 + "target: W5\n",
      Comparison::kExact, "n-fold equal coherent product, weight t1'/sqrt(n) -> W(n), n = 5");

  add("w3-pm-combination",
      pm_product_state({{"++-", "", 1}, {"+-+", "", 1}, {"-++", "", 1}}) +
          "weight: (1/(8*sqrt(3)))*t1'\n" + m1 + "target: W3\n",
      Comparison::kExact,
      "sum of plus/minus combination products, weight t1'/(2^n sqrt n) -> W(n), n = 3");

  add("w4-pm-combination",
      pm_product_state(
          {{"+++-", "", 1}, {"++-+", "", 1}, {"+-++", "", 1}, {"-+++", "", 1}}) +
          "weight: (1/(16*sqrt(4)))*t1'\n" + m1 + "target: W4\n",
      Comparison::kExact,
      "sum of plus/minus combination products, weight t1'/(2^n sqrt n) -> W(n), n = 4");

  // --- GHZ states ---------------------------------------------------------

  add("ghz3-three-modes",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1'*t2'*t3' - t1'*t1*t2'*t2*t3'*t3)\n" + m3 +
          "target: GHZ3\n",
      Comparison::kExact,
      "three distinct modes, corner + full-pair weight -> GHZ(3)",
      "with both weight terms positive the |000> component integrates to "
      "-1/sqrt2 (odd mode count), giving a state orthogonal to GHZ(3); the "
      "full-pair term is negated here");

  add("ghz4-general",
      "modes: 4\nstate: |1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>\n"
      "weight: (1/sqrt(2))*(t1'*t1*t2'*t2*t3'*t3*t4'*t4 + t1'*t2'*t3'*t4')\n" + m4 +
          "target: GHZ4\n",
      Comparison::kExact,
      "n distinct modes, full-pair + corner weight -> GHZ(n), n = 4 (even n "
      "needs no sign fix)");

  // --- Three-qubit biseparable outputs ------------------------------------

  add("bisep3-a-psi-plus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1'*t1*t2'*t3*t3' + t1'*t1*t2*t2'*t3')\n" + m3 +
          "target: (1/sqrt(2))|001> + (1/sqrt(2))|010>\n",
      Comparison::kUpToGlobalPhase,
      "first qubit separated: |0> (x) Psi+ on qubits 2,3",
      "");

  add("bisep3-a-psi-minus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1'*t1*t2'*t3*t3' - t1'*t1*t2*t2'*t3')\n" + m3 +
          "target: (1/sqrt(2))|001> - (1/sqrt(2))|010>\n",
      Comparison::kExact, "first qubit separated: |0> (x) Psi- on qubits 2,3");

  add("bisep3-b-psi-plus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1'*t2*t2'*t3*t3' - t1'*t1*t2'*t3*t3')\n" + m3 +
          "target: (1/sqrt(2))|010> + (1/sqrt(2))|100>\n",
      Comparison::kExact,
      "third qubit separated: Psi+ on qubits 1,2 (x) |0>",
      "the stated weight contains the full-pair monomial and integrates to "
      "the product state (|000> -/+ |010>)/sqrt2; this weight was re-derived "
      "with the inverse solver to reach the stated output");

  add("bisep3-b-psi-minus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (-1/sqrt(2))*(t1'*t2*t2'*t3*t3' + t1'*t1*t2'*t3*t3')\n" + m3 +
          "target: (1/sqrt(2))|010> - (1/sqrt(2))|100>\n",
      Comparison::kExact,
      "third qubit separated: Psi- on qubits 1,2 (x) |0>",
      "the stated weight contains the full-pair monomial and integrates to "
      "the product state (|000> -/+ |010>)/sqrt2; this weight was re-derived "
      "with the inverse solver to reach the stated output");

  add("bisep3-c-psi-plus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1'*t2*t2'*t3*t3' - t1'*t1*t2*t2'*t3')\n" + m3 +
          "target: (1/sqrt(2))|001> + (1/sqrt(2))|100>\n",
      Comparison::kExact,
      "second qubit separated: |0>_2 with Psi+ on qubits 1,3",
      "stated +/- pairing is swapped under these conventions: the minus "
      "weight yields the symmetric output");

  add("bisep3-c-psi-minus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1'*t2*t2'*t3*t3' + t1'*t1*t2*t2'*t3')\n" + m3 +
          "target: (1/sqrt(2))|001> - (1/sqrt(2))|100>\n",
      Comparison::kUpToGlobalPhase,
      "second qubit separated: |0>_2 with Psi- on qubits 1,3",
      "stated +/- pairing is swapped under these conventions");

  add("bisep3-d-phi-minus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1*t1'*t2*t2'*t3*t3' + t1*t1'*t3'*t2')\n" + m3 +
          "target: (1/sqrt(2))|000> - (1/sqrt(2))|011>\n",
      Comparison::kExact,
      "first qubit separated: |0> (x) Phi- on qubits 2,3",
      "stated +/- pairing is swapped under these conventions: the plus "
      "weight yields Phi-");

  add("bisep3-d-phi-plus",
      "modes: 3\nstate: |1:t1> (x) |1:t2> (x) |1:t3>\n"
      "weight: (1/sqrt(2))*(t1*t1'*t2*t2'*t3*t3' - t1*t1'*t3'*t2')\n" + m3 +
          "target: (1/sqrt(2))|000> + (1/sqrt(2))|011>\n",
      Comparison::kExact,
      "first qubit separated: |0> (x) Phi+ on qubits 2,3",
      "stated +/- pairing is swapped under these conventions: the minus "
      "weight yields Phi+");

  // --- Four-qubit biseparable outputs --------------------------------------

  add("bisep4-w3",
      "modes: 4\nstate: |1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>\n"
      "weight: (1/sqrt(3))*(t1*t1'*t2'*t3*t3'*t4*t4' + t1*t1'*t2*t2'*t3'*t4*t4' + "
      "t1*t1'*t2*t2'*t3*t3'*t4')\n" + m4 +
          "target: (1/sqrt(3))|0100> + (1/sqrt(3))|0010> + (1/sqrt(3))|0001>\n",
      Comparison::kExact, "first qubit separated: |0> (x) W(3) on qubits 2,3,4");

  add("bisep4-ghz3",
      "modes: 4\nstate: |1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>\n"
      "weight: (1/sqrt(2))*(t1*t1'*t2*t2'*t3*t3'*t4*t4' + t1*t1'*t2'*t3'*t4')\n" + m4 +
          "target: (1/sqrt(2))|0000> + (1/sqrt(2))|0111>\n",
      Comparison::kExact, "first qubit separated: |0> (x) GHZ(3) on qubits 2,3,4");

  add("bisep4-phi-plus",
      "modes: 4\nstate: |1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>\n"
      "weight: (1/sqrt(2))*(t1*t1'*t2*t2'*t3*t3'*t4*t4' + t1*t1'*t2*t2'*t3'*t4')\n" + m4 +
          "target: (1/sqrt(2))|0000> + (1/sqrt(2))|0011>\n",
      Comparison::kExact, "qubits 1,2 separated: |00> (x) Phi+ on qubits 3,4");

  add("bisep4-phi-minus",
      "modes: 4\nstate: |1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>\n"
      "weight: (1/sqrt(2))*(t1*t1'*t2*t2'*t3*t3'*t4*t4' - t1*t1'*t2*t2'*t3'*t4')\n" + m4 +
          "target: (1/sqrt(2))|0000> - (1/sqrt(2))|0011>\n",
      Comparison::kExact, "qubits 1,2 separated: |00> (x) Phi- on qubits 3,4");

  add("bisep4-psiplus-phiplus",
      "modes: 4\nstate: |1:t1> (x) |1:t2> (x) |1:t3> (x) |1:t4>\n"
      "weight: (1/2)*(t1'*t2*t2'*t3*t3'*t4*t4' + t1*t1'*t2'*t3*t3'*t4*t4' + "
      "t1'*t2*t2'*t3'*t4' + t1*t1'*t2'*t3'*t4')\n" + m4 +
          "target: (1/2)|0100> + (1/2)|1000> + (1/2)|0111> + (1/2)|1011>\n",
      Comparison::kExact, "pairwise entangled blocks: Psi+ on qubits 1,2 with Phi+ on 3,4");

  // --- Maximal coherent-pair constructions --------------------------------

  add("maxfcs-i-i-1-1",
      "state: |i:t1> (x) |i:t1> - |1:t1> (x) |1:t1>\n"
      "weight: (1/(sqrt(2)*(i-1)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "difference of i-scaled and unit coherent pairs, weight t1'/(m sqrt2), "
      "m = i-1 -> Psi+ (fermion-maximal; boson counterpart is not)");

  add("maxfcs-1-m1-m1-m3",
      "state: |1:t1> (x) |-1:t1> - |-1:t1> (x) |-3:t1>\n"
      "weight: (1/(2*sqrt(2)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "scaled-pair difference with (1,-1,-1,-3), weight t1'/(m sqrt2), m = 2 -> Psi+");

  add("maxfcs-1-m1-m1-1",
      "state: |1:t1> (x) |-1:t1> - |-1:t1> (x) |1:t1>\n"
      "weight: (-1/(2*sqrt(2)))*t1'\n" + m1 + "target: PsiMinus\n",
      Comparison::kExact,
      "scaled-pair difference with (1,-1,-1,1), weight t1'/(m sqrt2), m = -2 -> Psi-");

  add("maxfcs-1-1-i-mi",
      "state: |1:t1> (x) |1:t1> - |i:t1> (x) |-i:t1>\n"
      "weight: (1/2)*t1'\n" + m1 + "target: BellLikePlus\n",
      Comparison::kExact,
      "scaled-pair difference with (1,1,i,-i), weight t1'/(m sqrt2), m = sqrt2 -> BellLike+");

  add("maxfcs-1-m1-i-i",
      "state: |1:t1> (x) |-1:t1> - |i:t1> (x) |i:t1>\n"
      "weight: (-1/2)*t1'\n" + m1 + "target: BellLikeMinus\n",
      Comparison::kExact,
      "scaled-pair difference with (1,-1,i,i), weight t1'/(m sqrt2), m = -sqrt2 -> BellLike-");

  add("maxfcs-pm-combo",
      "state: sqrt(2)*|1:t1> (x) |1:t1> - sqrt(2)*|-1:t1> (x) |-1:t1>\n"
      "weight: (1/4)*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "normalized symmetric plus/minus combination with weight t1'/4 -> Psi+",
      "the 1/sqrt2 normalization is read as multiplying the whole two-term "
      "combination; the expanded product sum equals sqrt2 (|t,t> - |-t,-t>)");

  add("maxfcs-3-m1-1-m3",
      "state: |3:t1> (x) |-1:t1> - |1:t1> (x) |-3:t1>\n"
      "weight: (1/(2*sqrt(2)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "scaled-pair difference with (3,-1,1,-3), weight t1'/(m sqrt2), m = 2 -> Psi+");

  add("maxfcs-1-1-m2-m2",
      "state: |1:t1> (x) |1:t1> - |-2:t1> (x) |-2:t1>\n"
      "weight: (1/(3*sqrt(2)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "scaled-pair difference with (1,1,-2,-2), weight t1'/(m sqrt2), m = 3 -> Psi+");

  add("maxfcs-plus-ipihalf",
      "state: |i*pi/2:t1> (x) |i*pi/2:t1> + |1:t1> (x) |1:t1>\n"
      "weight: (1/((1+i*pi/2)*sqrt(2)))*t1'\n" + m1 + "target: PsiPlus\n",
      Comparison::kExact,
      "plus-sign pair sum with k = i pi/2 at unit base amplitude, weight "
      "t1'/(m sqrt2), m = 1 + i pi/2 -> Psi+ (boson counterpart also maximal)");

  return cases;
}

std::string signed_fmt(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

}  // namespace

const std::vector<CorpusCase>& builtin_corpus() {
  static const std::vector<CorpusCase> corpus = make_corpus();
  return corpus;
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

CaseResult evaluate_case(const CorpusCase& c) {
  CaseResult result;
  result.name = c.name;
  result.anchor = c.anchor;
  result.notes = c.notes;
  try {
    const Document doc = parse_document(c.source);
    const GrassmannState state = build_state(doc);
    if (!doc.weight || !doc.measure || !doc.target)
      throw std::invalid_argument("corpus case is missing a section");
    const QubitState out = integrate_with_weight(*doc.weight, state, *doc.measure);
    const QubitState target = resolve_target(doc).value();

    const auto [fid, phase] = fidelity_up_to_phase(target, out);
    result.fidelity = fid;
    result.phase = phase;
    bool ok = equal_up_to_global_phase(out, target, 1e-9);
    if (c.comparison == Comparison::kExact)
      ok = ok && max_componentwise_diff(out, target) < 1e-12;

    // Inverse round trip: the stated target must be reachable and the
    // recovered weight must reproduce it.
    const WeightSolution sol = solve_weight(state, target, *doc.measure);
    result.residual = sol.residual;
    ok = ok && sol.residual < 1e-9;
    const QubitState refit = integrate_with_weight(sol.particular, state, *doc.measure);
    ok = ok && fidelity_up_to_phase(target, refit).first >= 1.0 - 1e-9;

    // End-to-end classification (and concurrence where it applies).
    const ClassificationReport cls = classify(out);
    if (out.qubits() == 2) {
      const double conc = concurrence2(out);
      (void)conc;
    }
    (void)cls;

    if (std::abs(phase) > 1e-9) {
      result.notes += (result.notes.empty() ? "" : "; ");
      result.notes += "achieved global phase " + signed_fmt(phase, "%+.6f") + " rad";
    }
    result.passed = ok;
  } catch (const std::exception& e) {
    result.passed = false;
    result.notes += (result.notes.empty() ? "" : "; ");
    result.notes += std::string("error: ") + e.what();
  }
  return result;
}

}  // namespace

CorpusReport run_corpus(const std::optional<std::string>& filter) {
  std::vector<const CorpusCase*> selected;
  for (const CorpusCase& c : builtin_corpus())
    if (!filter || glob_match(*filter, c.name)) selected.push_back(&c);
  if (selected.empty())
    throw NoMatchingCases("no corpus case matches '" + filter.value_or("") + "'");

  CorpusReport report;
  for (const CorpusCase* c : selected) report.cases.push_back(evaluate_case(*c));
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  for (const CaseResult& r : report.cases) (r.passed ? report.passed : report.failed)++;
  return report;
}

std::string report_text(const CorpusReport& report) {
  std::ostringstream os;
  for (const CaseResult& r : report.cases) {
    os << (r.passed ? "PASS" : "FAIL") << " " << r.name
       << " fidelity=" << signed_fmt(r.fidelity, "%.12f")
       << " phase=" << signed_fmt(r.phase, "%+.6f")
       << " residual=" << signed_fmt(r.residual, "%.3e") << " anchor=\"" << r.anchor << "\"";
    if (!r.notes.empty()) os << " notes=\"" << r.notes << "\"";
    os << "\n";
  }
  os << "passed " << report.passed << " failed " << report.failed << "\n";
  return os.str();
}

std::string report_json(const CorpusReport& report) {
  nlohmann::ordered_json j;
  j["summary"]["passed"] = report.passed;
  j["summary"]["failed"] = report.failed;
  j["cases"] = nlohmann::ordered_json::array();
  for (const CaseResult& r : report.cases) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["status"] = r.passed ? "pass" : "fail";
    c["fidelity"] = r.fidelity;
    c["phase"] = r.phase;
    c["residual"] = r.residual;
    c["anchor"] = r.anchor;
    c["notes"] = r.notes;
    j["cases"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace gcs
