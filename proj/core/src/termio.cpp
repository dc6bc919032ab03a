#include "dendrifam/termio.hpp"

#include <cctype>
#include <sstream>

namespace dendrifam {

namespace {

void print_bin(std::string& out, const BinTree& t, const Signature& sig) {
  if (t.is_leaf()) {
    out += '|';
    return;
  }
  out += "B[";
  out += sig.alphabet.name(t.decoration());
  out += ';';
  out += sig.omega.format(t.left_type());
  out += ':';
  print_bin(out, t.left(), sig);
  out += ',';
  out += sig.omega.format(t.right_type());
  out += ':';
  print_bin(out, t.right(), sig);
  out += ']';
}

void print_sch(std::string& out, const SchroderTree& t, const Signature& sig) {
  if (t.is_leaf()) {
    out += '|';
    return;
  }
  out += "S[";
  const auto& decs = t.decorations();
  for (std::size_t i = 0; i < decs.size(); ++i) {
    if (i) out += ',';
    out += sig.alphabet.name(decs[i]);
  }
  out += ';';
  for (std::size_t i = 0; i < t.breadth(); ++i) {
    if (i) out += ',';
    out += sig.omega.format(t.type(i));
    out += ':';
    print_sch(out, t.child(i), sig);
  }
  out += ']';
}

template <class Tree>
std::string print_span_impl(const LinComb<Tree>& s, const Signature& sig) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& term : s) {
    if (!out.empty()) out += " + ";
    out += term.coeff.str();
    out += '*';
    out += print_tree(term.basis, sig);
  }
  return out;
}

void print_expr_impl(std::string& out, const Expr& e, const Signature& sig) {
  switch (e.op()) {
    case Expr::Op::Gen:
      out += "gen(" + sig.alphabet.name(e.symbol()) + ")";
      return;
    case Expr::Op::Prec:
    case Expr::Op::Succ:
      out += e.op() == Expr::Op::Prec ? "prec[" : "succ[";
      out += sig.omega.format(e.omega());
      out += "](";
      break;
    case Expr::Op::Dot:
      out += "dot(";
      break;
  }
  print_expr_impl(out, e.lhs(), sig);
  out += ',';
  print_expr_impl(out, e.rhs(), sig);
  out += ')';
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig) : text_(text), sig_(sig) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, col_); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) advance();
    if (start == pos_) fail("expected a token" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  Symbol symbol() {
    const auto l = line_, c = col_after_ws();
    const std::string tok = word();
    try {
      return sig_->alphabet.symbol(tok);
    } catch (const InvalidElement&) {
      throw SyntaxError("undeclared symbol '" + tok + "'", l, c);
    }
  }

  ExtElem edge_type() {
    const auto l = line_, c = col_after_ws();
    const std::string tok = word();
    if (tok == "1") return ExtElem::identity();
    return omega_token(tok, l, c);
  }

  OmegaElem omega_elem() {
    const auto l = line_, c = col_after_ws();
    const std::string tok = word();
    if (tok == "1") throw SyntaxError("the identity 1 is not a family index", l, c);
    return omega_token(tok, l, c);
  }

  BinTree bin_tree() {
    if (accept('|')) return BinTree::leaf();
    expect_word("B");
    expect('[');
    const Symbol x = symbol();
    expect(';');
    const ExtElem a = edge_type();
    expect(':');
    BinTree left = bin_tree();
    expect(',');
    const ExtElem b = edge_type();
    expect(':');
    BinTree right = bin_tree();
    expect(']');
    return BinTree::graft(std::move(left), x, a, b, std::move(right));
  }

  SchroderTree sch_tree() {
    if (accept('|')) return SchroderTree::leaf();
    expect_word("S");
    expect('[');
    std::vector<Symbol> decs{symbol()};
    while (accept(',')) decs.push_back(symbol());
    expect(';');
    std::vector<ExtElem> types;
    std::vector<SchroderTree> children;
    do {
      types.push_back(edge_type());
      expect(':');
      children.push_back(sch_tree());
    } while (accept(','));
    expect(']');
    if (children.size() != decs.size() + 1) {
      throw ArityMismatch("a vertex with " + std::to_string(decs.size()) + " decorations needs " +
                          std::to_string(decs.size() + 1) + " children, got " + std::to_string(children.size()));
    }
    return SchroderTree::graft(std::move(children), std::move(decs), std::move(types));
  }

  Coefficient coefficient() {
    skip_ws();
    const auto l = line_, c = col_;
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
      advance();
    }
    try {
      return Coefficient::parse(text_.substr(start, pos_ - start));
    } catch (const ValidationError& e) {
      throw SyntaxError(e.what(), l, c);
    }
  }

  template <class Tree, class ParseTree>
  LinComb<Tree> span(const ParseTree& parse_tree) {
    if (peek() == '0') {
      // `0` alone is the empty span; `0*T` is a zero term.
      Parser probe = *this;
      probe.advance();
      if (probe.at_end()) {
        advance();
        return {};
      }
    }
    std::vector<typename LinComb<Tree>::Term> terms;
    do {
      Coefficient c(1);
      const char p = peek();
      if (p != 'B' && p != 'S' && p != '|') {
        c = coefficient();
        expect('*');
      }
      const auto l = line_, col = col_after_ws();
      Tree t = parse_tree();
      if (t.is_leaf()) throw SyntaxError("the leaf | cannot appear in a span", l, col);
      terms.push_back({std::move(c), std::move(t)});
    } while (accept('+'));
    finish();
    return LinComb<Tree>::from_terms(std::move(terms));
  }

  Expr expr() {
    const std::string head = word();
    if (head == "gen") {
      expect('(');
      const Symbol x = symbol();
      expect(')');
      return Expr::gen(x);
    }
    if (head == "prec" || head == "succ") {
      expect('[');
      OmegaElem w = omega_elem();
      expect(']');
      expect('(');
      Expr lhs = expr();
      expect(',');
      Expr rhs = expr();
      expect(')');
      return head == "prec" ? Expr::prec(std::move(w), std::move(lhs), std::move(rhs))
                            : Expr::succ(std::move(w), std::move(lhs), std::move(rhs));
    }
    if (head == "dot") {
      expect('(');
      Expr lhs = expr();
      expect(',');
      Expr rhs = expr();
      expect(')');
      return Expr::dot(std::move(lhs), std::move(rhs));
    }
    fail("unknown operator '" + head + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::size_t col_after_ws() {
    skip_ws();
    return col_;
  }

  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  void expect_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "['" + found());
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }

  OmegaElem omega_token(const std::string& tok, std::size_t l, std::size_t c) const {
    try {
      return sig_->omega.parse_element(tok);
    } catch (const InvalidElement&) {
      throw SyntaxError("undeclared semigroup element '" + tok + "'", l, c);
    }
  }

  std::string_view text_;
  const Signature* sig_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::string print_tree(const BinTree& t, const Signature& sig) {
  std::string out;
  print_bin(out, t, sig);
  return out;
}

std::string print_tree(const SchroderTree& t, const Signature& sig) {
  std::string out;
  print_sch(out, t, sig);
  return out;
}

std::string print_span(const SpanB& s, const Signature& sig) { return print_span_impl(s, sig); }
std::string print_span(const SpanS& s, const Signature& sig) { return print_span_impl(s, sig); }

std::string print_expr(const Expr& e, const Signature& sig) {
  std::string out;
  print_expr_impl(out, e, sig);
  return out;
}

BinTree parse_bin_tree(std::string_view text, const Signature& sig) {
  Parser p(text, &sig);
  BinTree t = p.bin_tree();
  p.finish();
  return t;
}

SchroderTree parse_sch_tree(std::string_view text, const Signature& sig) {
  Parser p(text, &sig);
  SchroderTree t = p.sch_tree();
  p.finish();
  return t;
}

SpanB parse_bin_span(std::string_view text, const Signature& sig) {
  Parser p(text, &sig);
  return p.span<BinTree>([&] { return p.bin_tree(); });
}

SpanS parse_sch_span(std::string_view text, const Signature& sig) {
  Parser p(text, &sig);
  return p.span<SchroderTree>([&] { return p.sch_tree(); });
}

Expr parse_expr(std::string_view text, const Signature& sig) {
  Parser p(text, &sig);
  Expr e = p.expr();
  p.finish();
  return e;
}

TermKind detect_kind(std::string_view text) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if ((c == 'B' || c == 'S') && i + 1 < text.size() && text[i + 1] == '[') {
      return c == 'B' ? TermKind::Binary : TermKind::Schroder;
    }
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw SyntaxError("no tree found in term", line, col);
}

std::vector<CorpusEntry> read_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back({n, line.substr(first, last - first + 1)});
  }
  return out;
}

}  // namespace dendrifam
