#include "tcd/dsl.hpp"

#include <cctype>
#include <set>

#include "tcd/errors.hpp"

namespace tcd {

const Term* Program::find(const std::string& name) const {
  for (const auto& [n, t] : diagrams)
    if (n == name) return &t;
  return nullptr;
}

namespace {

enum class Tok { Ident, Colon, Arrow, Equals, Semi, Star, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

const std::set<std::string>& reserved() {
  static const std::set<std::string> r{"wire", "comp", "diagram", "id",     "braid", "unbraid", "mul",
                                       "comul", "unit", "counit", "cup",    "cap",   "I"};
  return r;
}

bool is_wire_builtin(const std::string& s) {
  return s == "mul" || s == "comul" || s == "unit" || s == "counit" || s == "cup" || s == "cap";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", l, cl});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case ':': k = Tok::Colon; break;
      case '=': k = Tok::Equals; break;
      case ';': k = Tok::Semi; break;
      case '*': k = Tok::Star; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", l, cl);
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

struct NameRef {
  std::string name;
  bool is_wire;
  std::size_t line, col;
};

struct DiagramDecl {
  std::string name;
  Term term;
  std::size_t line, col;
};

struct CompDecl {
  std::string name;
  Word dom, cod;
  std::size_t line, col;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program run() {
    while (peek().kind != Tok::End) decl();
    return finish();
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw SyntaxError(msg + " (found '" + t.text + "')", t.line, t.col);
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    return next();
  }

  bool at_keyword(const char* kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

  const Token& fresh_name(const char* what) {
    const Token& t = expect(Tok::Ident, what);
    if (reserved().count(t.text)) fail(t, std::string("reserved word cannot be used as ") + what);
    return t;
  }

  void decl() {
    const Token& kw = peek();
    if (at_keyword("wire")) {
      next();
      const Token& n = fresh_name("a wire name");
      if (!declared_.insert(n.text).second) fail(n, "name declared twice");
      wires_.push_back(n.text);
    } else if (at_keyword("comp")) {
      next();
      const Token& n = fresh_name("a component name");
      if (!declared_.insert(n.text).second) fail(n, "name declared twice");
      expect(Tok::Colon, "':'");
      Word dom = word();
      expect(Tok::Arrow, "'->'");
      Word cod = word();
      comps_.push_back({n.text, std::move(dom), std::move(cod), n.line, n.col});
    } else if (at_keyword("diagram")) {
      next();
      const Token& n = fresh_name("a diagram name");
      for (const auto& d : diagrams_)
        if (d.name == n.text) fail(n, "diagram declared twice");
      expect(Tok::Equals, "'='");
      Term t = expr();
      diagrams_.push_back({n.text, std::move(t), n.line, n.col});
    } else {
      fail(kw, "expected 'wire', 'comp' or 'diagram'");
    }
  }

  Word word() {
    if (at_keyword("I")) {
      next();
      return {};
    }
    Word w;
    for (;;) {
      const Token& t = expect(Tok::Ident, "a wire name or I");
      if (reserved().count(t.text)) fail(t, "reserved word is not a wire name");
      refs_.push_back({t.text, true, t.line, t.col});
      w.push_back(t.text);
      if (peek().kind != Tok::Comma) break;
      next();
    }
    return w;
  }

  Term expr() {
    std::vector<Term> parts{term()};
    while (peek().kind == Tok::Semi) {
      next();
      parts.push_back(term());
    }
    return Term::compose_all(parts);
  }

  Term term() {
    std::vector<Term> parts{factor()};
    while (peek().kind == Tok::Star) {
      next();
      parts.push_back(factor());
    }
    return Term::tensor_all(parts);
  }

  Term factor() {
    if (peek().kind == Tok::LParen) {
      next();
      Term t = expr();
      expect(Tok::RParen, "')'");
      return t;
    }
    const Token& t = expect(Tok::Ident, "a component, builtin or '('");
    if (!reserved().count(t.text)) {
      refs_.push_back({t.text, false, t.line, t.col});
      return Term::gen(t.text);
    }
    const std::string& b = t.text;
    if (b == "id") {
      expect(Tok::LParen, "'(' after id");
      Word w = word();
      expect(Tok::RParen, "')'");
      return Term::id(std::move(w));
    }
    if (b == "braid" || b == "unbraid") {
      expect(Tok::LParen, "'(' after braid");
      Word a = word();
      expect(Tok::Semi, "';' between the two braid words");
      Word c = word();
      expect(Tok::RParen, "')'");
      return b == "braid" ? Term::braid(std::move(a), std::move(c))
                          : Term::braid_inv(std::move(a), std::move(c));
    }
    if (is_wire_builtin(b)) {
      expect(Tok::LParen, "'('");
      const Token& w = expect(Tok::Ident, "a wire name");
      if (reserved().count(w.text)) fail(w, "reserved word is not a wire name");
      refs_.push_back({w.text, true, w.line, w.col});
      expect(Tok::RParen, "')'");
      if (b == "mul") return Term::mul(w.text);
      if (b == "comul") return Term::comul(w.text);
      if (b == "unit") return Term::unit(w.text);
      if (b == "counit") return Term::counit(w.text);
      if (b == "cup") return Term::cup(w.text);
      return Term::cap(w.text);
    }
    fail(t, "keyword cannot start an expression");
  }

  Program finish() {
    Program p;
    for (const auto& w : wires_) p.multigraph.add_wire(w);
    std::set<std::string> comp_names;
    for (const auto& c : comps_) comp_names.insert(c.name);
    for (const auto& r : refs_) {
      const bool ok = r.is_wire ? p.multigraph.has_wire(r.name) : comp_names.count(r.name) > 0;
      if (!ok)
        throw UnknownName(std::to_string(r.line) + ":" + std::to_string(r.col) + ": unknown " +
                          (r.is_wire ? "wire type '" : "component '") + r.name + "'");
    }
    for (const auto& c : comps_) p.multigraph.add_component(c.name, c.dom, c.cod);
    for (const auto& d : diagrams_) {
      try {
        typecheck(d.term, p.multigraph);
      } catch (const InterfaceMismatch& e) {
        throw InterfaceMismatch(std::to_string(d.line) + ":" + std::to_string(d.col) +
                                ": in diagram '" + d.name + "': " + e.what());
      }
      p.diagrams.emplace_back(d.name, d.term);
    }
    return p;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> declared_;
  std::vector<std::string> wires_;
  std::vector<CompDecl> comps_;
  std::vector<DiagramDecl> diagrams_;
  std::vector<NameRef> refs_;
};

std::string word_text(const Word& w) {
  if (w.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i];
  return s;
}

std::string print_rec(const Term& t) {
  switch (t.kind()) {
    case TermKind::Gen: return t.name();
    case TermKind::Id: return "id(" + word_text(t.word()) + ")";
    case TermKind::Braid: return "braid(" + word_text(t.word()) + "; " + word_text(t.word2()) + ")";
    case TermKind::BraidInv:
      return "unbraid(" + word_text(t.word()) + "; " + word_text(t.word2()) + ")";
    case TermKind::Mul: return "mul(" + t.name() + ")";
    case TermKind::Comul: return "comul(" + t.name() + ")";
    case TermKind::Unit: return "unit(" + t.name() + ")";
    case TermKind::Counit: return "counit(" + t.name() + ")";
    case TermKind::Cup: return "cup(" + t.name() + ")";
    case TermKind::Cap: return "cap(" + t.name() + ")";
    case TermKind::Compose: {
      std::string r = print_rec(t.rhs());
      if (t.rhs().kind() == TermKind::Compose) r = "(" + r + ")";
      return print_rec(t.lhs()) + " ; " + r;
    }
    case TermKind::Tensor: {
      std::string l = print_rec(t.lhs());
      std::string r = print_rec(t.rhs());
      if (t.lhs().kind() == TermKind::Compose) l = "(" + l + ")";
      if (!t.rhs().is_leaf()) r = "(" + r + ")";
      return l + " * " + r;
    }
  }
  return "?";
}

}  // namespace

Program parse_program(const std::string& text) { return Parser(lex(text)).run(); }

std::string print_term(const Term& term) { return print_rec(term); }

std::string print_program(const Program& p) {
  std::string out;
  for (const auto& w : p.multigraph.wires()) out += "wire " + w + "\n";
  for (const auto& c : p.multigraph.components())
    out += "comp " + c.name + " : " + word_text(c.dom) + " -> " + word_text(c.cod) + "\n";
  for (const auto& [name, t] : p.diagrams) out += "diagram " + name + " = " + print_term(t) + "\n";
  return out;
}

}  // namespace tcd
