#include "gcs/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gcs/entangle.hpp"

namespace gcs {

ParseFailure::ParseFailure(ParseError e)
    : std::runtime_error("parse error at " + std::to_string(e.line) + ":" +
                         std::to_string(e.column) + ": " + e.message +
                         (e.token.empty() ? "" : " (near '" + e.token + "')")),
      error_(std::move(e)) {}

namespace {

enum class Tok {
  kWord,    // identifiers: t1, exp, sqrt, pi, i, d, x, PsiPlus, ...
  kNumber,  // integer or decimal literal; raw text kept for ket bits
  kPunct,   // one of | > : ' ( ) * / + - ,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  double value = 0.0;
  int line = 1, column = 1;
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseFailure({at.line, at.column, message, at.text});
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  const auto peek = [&]() { return i < text.size() ? text[i] : '\0'; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++i, ++col;
      if (peek() == '.') {
        ++i, ++col;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++i, ++col;
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t save = i;
        int save_col = col;
        ++i, ++col;
        if (peek() == '+' || peek() == '-') ++i, ++col;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          while (std::isdigit(static_cast<unsigned char>(peek()))) ++i, ++col;
        } else {
          i = save;
          col = save_col;
        }
      }
      t.kind = Tok::kNumber;
      t.text = text.substr(start, i - start);
      t.value = std::strtod(t.text.c_str(), nullptr);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++i, ++col;
      t.kind = Tok::kWord;
      t.text = text.substr(start, i - start);
    } else if (std::string("|>:'()*/+-,").find(c) != std::string::npos) {
      t.kind = Tok::kPunct;
      t.text = std::string(1, c);
      ++i, ++col;
    } else {
      fail({Tok::kPunct, std::string(1, c), 0.0, line, col}, "unexpected character");
    }
    tokens.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::kEnd;
  if (tokens.empty()) {
    end.line = line;
    end.column = col;
  } else {
    // Point at the truncation spot: just past the last real token.
    const Token& last = tokens.back();
    end.line = last.line;
    end.column = last.column + static_cast<int>(last.text.size());
  }
  tokens.push_back(end);
  return tokens;
}

bool is_section_word(const std::string& w) {
  return w == "modes" || w == "state" || w == "weight" || w == "measure" || w == "target";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  const Token& peek(int ahead = 0) const {
    const std::size_t idx = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[idx];
  }
  const Token& advance() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_punct(const char* p, int ahead = 0) const {
    return peek(ahead).kind == Tok::kPunct && peek(ahead).text == p;
  }
  void expect_punct(const char* p, const std::string& what) {
    if (!at_punct(p)) fail(peek(), "expected '" + std::string(p) + "' " + what);
    advance();
  }

  /// True when the current token starts a new section header (first token
  /// of its line, known word, followed by ':').
  bool at_section_header() const {
    const Token& t = peek();
    if (t.kind != Tok::kWord || !is_section_word(t.text)) return false;
    if (!(peek(1).kind == Tok::kPunct && peek(1).text == ":")) return false;
    return pos_ == 0 || toks_[pos_ - 1].line < t.line;
  }

  bool at_end_of_section() const { return peek().kind == Tok::kEnd || at_section_header(); }

  GeneratorId parse_generator(int* max_mode) {
    const Token& t = peek();
    if (t.kind != Tok::kWord || t.text.size() < 2 || t.text[0] != 't')
      fail(t, "expected a generator like t1 or t2'");
    for (std::size_t k = 1; k < t.text.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t.text[k])))
        fail(t, "expected a generator like t1 or t2'");
    const int mode = std::atoi(t.text.c_str() + 1);
    if (mode < 1 || mode > kMaxModes) fail(t, "generator index out of range (1..6)");
    advance();
    bool conj = false;
    if (at_punct("'")) {
      advance();
      conj = true;
    }
    if (max_mode) *max_mode = std::max(*max_mode, mode);
    return GeneratorId(mode, conj);
  }

  // Grassmann-valued expression grammar (scalars are degree-0 elements):
  //   expr   := ['+'|'-'] term { ('+'|'-') term }
  //   term   := factor { '*' factor | '/' factor }   (divisor must be scalar)
  //   factor := NUMBER | 'i' | 'pi' | generator | 'sqrt(' expr ')'
  //           | 'exp(' expr ')' | '(' expr ')'
  // `stop_at_ket` ends a term before a '*' that introduces a ket, so
  // state sections can write 2*|1:t1>(x)|1:t1>.
  GrassmannElement parse_expr(int* max_mode, bool stop_at_ket = false) {
    bool negate = false;
    if (at_punct("-")) {
      negate = true;
      advance();
    } else if (at_punct("+")) {
      advance();
    }
    GrassmannElement acc = parse_term(max_mode, stop_at_ket);
    if (negate) acc = -acc;
    while ((at_punct("+") || at_punct("-")) && !at_end_of_section()) {
      const bool minus = peek().text == "-";
      advance();
      const GrassmannElement rhs = parse_term(max_mode, stop_at_ket);
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  GrassmannElement parse_term(int* max_mode, bool stop_at_ket) {
    GrassmannElement acc = parse_factor(max_mode, stop_at_ket);
    while (at_punct("*") || at_punct("/")) {
      if (stop_at_ket && at_punct("*") && at_punct("|", 1)) break;
      const bool divide = peek().text == "/";
      const Token op = advance();
      const GrassmannElement rhs = parse_factor(max_mode, stop_at_ket);
      if (divide) {
        if (!rhs.is_scalar()) fail(op, "cannot divide by a Grassmann element");
        if (std::abs(rhs.body()) < kCoeffEpsilon) fail(op, "division by zero");
        acc = Complex(1.0) / rhs.body() * acc;
      } else {
        acc = acc * rhs;
      }
    }
    return acc;
  }

  GrassmannElement parse_factor(int* max_mode, bool stop_at_ket) {
    const Token& t = peek();
    if (at_punct("-")) {
      advance();
      return -parse_factor(max_mode, stop_at_ket);
    }
    if (at_punct("+")) {
      advance();
      return parse_factor(max_mode, stop_at_ket);
    }
    if (t.kind == Tok::kNumber) {
      advance();
      return GrassmannElement::scalar(t.value);
    }
    if (at_punct("(")) {
      advance();
      GrassmannElement inner = parse_expr(max_mode, stop_at_ket);
      expect_punct(")", "to close the parenthesis");
      return inner;
    }
    if (t.kind == Tok::kWord) {
      if (t.text == "i") {
        advance();
        return GrassmannElement::scalar(Complex(0, 1));
      }
      if (t.text == "pi") {
        advance();
        return GrassmannElement::scalar(std::numbers::pi);
      }
      if (t.text == "sqrt" || t.text == "exp") {
        const Token name = advance();
        expect_punct("(", "after " + name.text);
        GrassmannElement arg = parse_expr(max_mode, false);
        expect_punct(")", "to close " + name.text + "(...)");
        if (name.text == "sqrt") {
          if (!arg.is_scalar()) fail(name, "sqrt needs a scalar argument");
          return GrassmannElement::scalar(std::sqrt(arg.body()));
        }
        // exp: factor the scalar part out, expand the nilpotent rest.
        const Complex body = arg.body();
        return std::exp(body) * exp_nilpotent(arg.soul());
      }
      return GrassmannElement::generator(parse_generator(max_mode));
    }
    fail(t, "expected a scalar, generator, or parenthesized expression");
  }

  Complex parse_scalar(int* max_mode, bool stop_at_ket = false) {
    const Token& at = peek();
    const GrassmannElement e = parse_expr(max_mode, stop_at_ket);
    if (!e.is_scalar()) fail(at, "expected a scalar expression");
    return e.body();
  }

  std::vector<StateTerm> parse_state(int* max_mode) {
    std::vector<StateTerm> terms;
    bool negate = false;
    if (at_punct("-")) {
      negate = true;
      advance();
    } else if (at_punct("+")) {
      advance();
    }
    terms.push_back(parse_state_term(max_mode, negate));
    while ((at_punct("+") || at_punct("-")) && !at_end_of_section()) {
      const bool minus = peek().text == "-";
      advance();
      terms.push_back(parse_state_term(max_mode, minus));
    }
    return terms;
  }

  StateTerm parse_state_term(int* max_mode, bool negate) {
    StateTerm term;
    term.coeff = 1.0;
    if (!at_punct("|")) {
      term.coeff = parse_scalar(max_mode, /*stop_at_ket=*/true);
      if (at_punct("*") && at_punct("|", 1)) advance();
    }
    if (negate) term.coeff = -term.coeff;
    term.slots.push_back(parse_ket(max_mode));
    while (at_punct("(") && peek(1).kind == Tok::kWord && peek(1).text == "x" &&
           at_punct(")", 2)) {
      advance();
      advance();
      advance();
      term.slots.push_back(parse_ket(max_mode));
    }
    return term;
  }

  FermionLabel parse_ket(int* max_mode) {
    expect_punct("|", "to open a ket");
    const Complex scale = parse_scalar(max_mode);
    expect_punct(":", "between the ket scalar and its generator");
    const GeneratorId g = parse_generator(max_mode);
    expect_punct(">", "to close the ket");
    return FermionLabel{scale, g};
  }

  MeasureList parse_measure(int* max_mode) {
    std::vector<GeneratorId> factors;
    while (true) {
      const Token& t = peek();
      if (t.kind != Tok::kWord || t.text != "d") fail(t, "expected 'd' before a measure factor");
      advance();
      factors.push_back(parse_generator(max_mode));
      if (at_punct(",")) {
        advance();
        continue;
      }
      break;
    }
    try {
      return MeasureList(std::move(factors));
    } catch (const std::invalid_argument& e) {
      fail(peek(), e.what());
    }
  }

  TargetSpec parse_target() {
    const Token& t = peek();
    if (t.kind == Tok::kWord && named_state(t.text).has_value()) {
      advance();
      return t.text;
    }
    // Explicit ket list: [coef] |bits> { +/- [coef] |bits> }.
    std::vector<std::pair<Complex, std::string>> kets;
    bool negate = false;
    if (at_punct("-")) {
      negate = true;
      advance();
    } else if (at_punct("+")) {
      advance();
    }
    kets.push_back(parse_target_term(negate));
    while ((at_punct("+") || at_punct("-")) && !at_end_of_section()) {
      const bool minus = peek().text == "-";
      advance();
      kets.push_back(parse_target_term(minus));
    }
    const std::size_t qubits = kets.front().second.size();
    if (qubits < 1 || qubits > 8) fail(t, "target kets must have 1..8 qubits");
    QubitState state(static_cast<int>(qubits));
    for (const auto& [coef, bits] : kets) {
      if (bits.size() != qubits) fail(t, "target kets have inconsistent qubit counts");
      unsigned ket = 0;
      for (char b : bits) ket = (ket << 1) | unsigned(b - '0');
      state[ket] += coef;
    }
    return state;
  }

  std::pair<Complex, std::string> parse_target_term(bool negate) {
    Complex coef = 1.0;
    if (!at_punct("|")) {
      int dummy = 0;
      coef = parse_scalar(&dummy, /*stop_at_ket=*/true);
      if (at_punct("*") && at_punct("|", 1)) advance();
    }
    if (negate) coef = -coef;
    expect_punct("|", "to open a target ket");
    const Token& bits = peek();
    if (bits.kind != Tok::kNumber) fail(bits, "expected a bit string like 01");
    for (char b : bits.text)
      if (b != '0' && b != '1') fail(bits, "target kets use only bits 0 and 1");
    advance();
    expect_punct(">", "to close the target ket");
    return {coef, bits.text};
  }

  std::size_t position() const { return pos_; }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Document parse_document(const std::string& text) {
  const std::vector<Token> tokens = lex(text);
  Parser p(tokens);
  Document doc;
  int max_mode = 0;
  bool modes_given = false;
  bool saw_any = false;

  while (p.peek().kind != Tok::kEnd) {
    if (!p.at_section_header())
      fail(p.peek(), saw_any ? "expected a section header"
                             : "document must start with a section like 'state:'");
    const Token header = p.advance();
    p.advance();  // ':'
    saw_any = true;
    if (header.text == "modes") {
      const Token& n = p.peek();
      if (n.kind != Tok::kNumber || n.text.find('.') != std::string::npos)
        fail(n, "modes: needs an integer");
      doc.modes = static_cast<int>(n.value);
      if (doc.modes < 1 || doc.modes > kMaxModes) fail(n, "modes must be in 1..6");
      modes_given = true;
      p.advance();
    } else if (header.text == "state") {
      doc.state_terms = p.parse_state(&max_mode);
    } else if (header.text == "weight") {
      doc.weight = p.parse_expr(&max_mode);
    } else if (header.text == "measure") {
      doc.measure = p.parse_measure(&max_mode);
    } else {
      doc.target = p.parse_target();
    }
    if (!p.at_end_of_section())
      fail(p.peek(), "trailing input after the " + header.text + " section");
  }

  if (!modes_given)
    doc.modes = std::max(max_mode, 1);
  else if (max_mode > doc.modes)
    throw ParseFailure(
        {1, 1, "a generator index exceeds the declared modes count", "t" + std::to_string(max_mode)});

  // Slot-count consistency across state terms.
  if (!doc.state_terms.empty()) {
    const std::size_t slots = doc.state_terms.front().slots.size();
    for (const StateTerm& t : doc.state_terms)
      if (t.slots.size() != slots)
        throw ParseFailure({1, 1, "state terms have different slot counts", ""});
  }
  return doc;
}

std::string render_scalar(Complex c) {
  const auto render_real = [](double x) -> std::string {
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-12 * std::max(1.0, std::abs(x)) && std::abs(r) < 1e15) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.0f", r);
      return buf;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  };
  const double scale = std::max(std::abs(c.real()), std::abs(c.imag()));
  const bool re_zero = std::abs(c.real()) < 1e-12 * std::max(1.0, scale);
  const bool im_zero = std::abs(c.imag()) < 1e-12 * std::max(1.0, scale);
  if (im_zero || (re_zero && im_zero)) return render_real(re_zero ? 0.0 : c.real());
  const auto imag_part = [&](double im) -> std::string {
    if (std::abs(im - 1.0) < 1e-12) return "i";
    if (std::abs(im + 1.0) < 1e-12) return "-i";
    return render_real(im) + "*i";
  };
  if (re_zero) return imag_part(c.imag());
  return "(" + render_real(c.real()) + (c.imag() < 0 ? " - " : " + ") +
         (std::abs(std::abs(c.imag()) - 1.0) < 1e-12 ? std::string("i")
                                                     : render_real(std::abs(c.imag())) + "*i") +
         ")";
}

namespace {

std::string render_generator(GeneratorId g) {
  return "t" + std::to_string(g.mode) + (g.conjugated ? "'" : "");
}

std::string render_monomial(MonomialMask m) {
  std::string s;
  for (const GeneratorId& g : monomial_generators(m)) {
    if (!s.empty()) s += "*";
    s += render_generator(g);
  }
  return s;
}

// Appends "sign magnitude" sequences: real coefficients fold their sign
// into the +/- separator, other coefficients render parenthesized.
void append_signed(std::ostream& os, bool first, Complex coeff, const std::string& body) {
  const bool real = std::abs(coeff.imag()) < 1e-12 * std::max(1.0, std::abs(coeff));
  const bool negative = real && coeff.real() < 0;
  const Complex magnitude = negative ? -coeff : coeff;
  if (first)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
  const bool unit = std::abs(magnitude - Complex(1.0)) < 1e-12;
  if (body.empty()) {
    os << render_scalar(magnitude);
  } else if (unit) {
    os << body;
  } else {
    os << render_scalar(magnitude) << "*" << body;
  }
}

}  // namespace

std::string render_element(const GrassmannElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    append_signed(os, first, c, render_monomial(m));
    first = false;
  }
  return os.str();
}

std::string render_document(const Document& d) {
  std::ostringstream os;
  os << "modes: " << d.modes << "\n";
  if (!d.state_terms.empty()) {
    os << "state: ";
    bool first = true;
    for (const StateTerm& t : d.state_terms) {
      std::string body;
      for (const FermionLabel& label : t.slots) {
        if (!body.empty()) body += " (x) ";
        body += "|" + render_scalar(label.scale) + ":" + render_generator(label.generator) + ">";
      }
      append_signed(os, first, t.coeff, body);
      first = false;
    }
    os << "\n";
  }
  if (d.weight) os << "weight: " << render_element(*d.weight) << "\n";
  if (d.measure) {
    os << "measure: ";
    bool first = true;
    for (const GeneratorId& g : d.measure->factors()) {
      os << (first ? "" : ", ") << "d " << render_generator(g);
      first = false;
    }
    os << "\n";
  }
  if (d.target) {
    os << "target: ";
    if (std::holds_alternative<std::string>(*d.target)) {
      os << std::get<std::string>(*d.target);
    } else {
      const QubitState& s = std::get<QubitState>(*d.target);
      bool first = true;
      bool any = false;
      for (unsigned k = 0; k < s.dimension(); ++k) {
        if (std::abs(s[k]) < kCoeffEpsilon) continue;
        append_signed(os, first, s[k], "|" + ket_bits(k, s.qubits()) + ">");
        first = false;
        any = true;
      }
      if (!any) os << "0*|" << ket_bits(0, s.qubits()) << ">";
    }
    os << "\n";
  }
  return os.str();
}

GrassmannState build_state(const Document& d) {
  if (d.state_terms.empty()) throw ParseFailure({1, 1, "document has no state section", ""});
  const int slots = static_cast<int>(d.state_terms.front().slots.size());
  GrassmannState acc(slots);
  for (const StateTerm& term : d.state_terms) {
    GrassmannState factor = coherent_ket(term.slots.front());
    for (std::size_t s = 1; s < term.slots.size(); ++s)
      factor = tensor_product(factor, coherent_ket(term.slots[s]));
    acc = acc + term.coeff * factor;
  }
  return acc;
}

std::optional<QubitState> resolve_target(const Document& d) {
  if (!d.target) return std::nullopt;
  if (std::holds_alternative<QubitState>(*d.target)) return std::get<QubitState>(*d.target);
  return named_state(std::get<std::string>(*d.target));
}

bool approx_equal(const Document& a, const Document& b, double tol) {
  if (a.modes != b.modes) return false;
  if (a.state_terms.empty() != b.state_terms.empty()) return false;
  if (!a.state_terms.empty() && !approx_equal(build_state(a), build_state(b), tol))
    return false;
  if (a.weight.has_value() != b.weight.has_value()) return false;
  if (a.weight && !approx_equal(*a.weight, *b.weight, tol)) return false;
  if (a.measure.has_value() != b.measure.has_value()) return false;
  if (a.measure && !(*a.measure == *b.measure)) return false;
  if (a.target.has_value() != b.target.has_value()) return false;
  if (a.target) {
    const auto ta = resolve_target(a), tb = resolve_target(b);
    if (ta.has_value() != tb.has_value()) return false;
    if (ta && (ta->qubits() != tb->qubits() || max_componentwise_diff(*ta, *tb) > tol))
      return false;
  }
  return true;
}

}  // namespace gcs
