#include "tcd/diagram.hpp"

#include <algorithm>

#include "tcd/errors.hpp"

namespace tcd {

std::string to_string(const Word& w) {
  if (w.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += w[i];
  }
  return out;
}

void Multigraph::add_wire(const std::string& name) {
  if (has_wire(name)) throw Error("wire '" + name + "' declared twice");
  wires_.push_back(name);
}

void Multigraph::add_component(const std::string& name, Word dom, Word cod) {
  if (find_component(name)) throw Error("component '" + name + "' declared twice");
  check_word(dom);
  check_word(cod);
  components_.push_back({name, std::move(dom), std::move(cod)});
}

bool Multigraph::has_wire(const std::string& name) const {
  return std::find(wires_.begin(), wires_.end(), name) != wires_.end();
}

const ComponentDecl* Multigraph::find_component(const std::string& name) const {
  for (const auto& c : components_)
    if (c.name == name) return &c;
  return nullptr;
}

void Multigraph::check_word(const Word& w) const {
  for (const auto& x : w)
    if (!has_wire(x)) throw UnknownName("unknown wire type '" + x + "'");
}

struct Term::Node {
  TermKind kind;
  std::string name;
  Word w1, w2;
  std::vector<Term> kids;
};

Term Term::make(TermKind kind, std::string name, Word w1, Word w2, std::vector<Term> kids) {
  return Term(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(w1), std::move(w2), std::move(kids)}));
}

Term Term::gen(std::string name) { return make(TermKind::Gen, std::move(name), {}, {}, {}); }
Term Term::id(Word w) { return make(TermKind::Id, {}, std::move(w), {}, {}); }
Term Term::compose(Term first, Term second) {
  return make(TermKind::Compose, {}, {}, {}, {std::move(first), std::move(second)});
}
Term Term::tensor(Term left, Term right) {
  return make(TermKind::Tensor, {}, {}, {}, {std::move(left), std::move(right)});
}
Term Term::braid(Word a, Word b) { return make(TermKind::Braid, {}, std::move(a), std::move(b), {}); }
Term Term::braid_inv(Word a, Word b) {
  return make(TermKind::BraidInv, {}, std::move(a), std::move(b), {});
}
Term Term::mul(std::string wire) { return make(TermKind::Mul, std::move(wire), {}, {}, {}); }
Term Term::comul(std::string wire) { return make(TermKind::Comul, std::move(wire), {}, {}, {}); }
Term Term::unit(std::string wire) { return make(TermKind::Unit, std::move(wire), {}, {}, {}); }
Term Term::counit(std::string wire) { return make(TermKind::Counit, std::move(wire), {}, {}, {}); }
Term Term::cup(std::string wire) { return make(TermKind::Cup, std::move(wire), {}, {}, {}); }
Term Term::cap(std::string wire) { return make(TermKind::Cap, std::move(wire), {}, {}, {}); }

Term Term::compose_all(const std::vector<Term>& terms) {
  if (terms.empty()) throw Error("compose_all of an empty list");
  Term acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = compose(acc, terms[i]);
  return acc;
}

Term Term::tensor_all(const std::vector<Term>& terms) {
  if (terms.empty()) throw Error("tensor_all of an empty list");
  Term acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = tensor(acc, terms[i]);
  return acc;
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Word& Term::word() const { return node_->w1; }
const Word& Term::word2() const { return node_->w2; }
const Term& Term::lhs() const { return node_->kids.at(0); }
const Term& Term::rhs() const { return node_->kids.at(1); }

bool Term::is_leaf() const {
  return node_->kind != TermKind::Compose && node_->kind != TermKind::Tensor;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  return a.kind == b.kind && a.name == b.name && a.w1 == b.w1 && a.w2 == b.w2 && a.kids == b.kids;
}

namespace {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Interface of a leaf given a way to look up components. Gen is handled by
// the caller.
Interface leaf_interface(const Term& t) {
  const std::string& x = t.name();
  switch (t.kind()) {
    case TermKind::Id: return {t.word(), t.word()};
    case TermKind::Braid:
    case TermKind::BraidInv: return {concat(t.word(), t.word2()), concat(t.word2(), t.word())};
    case TermKind::Mul: return {{x, x}, {x}};
    case TermKind::Comul: return {{x}, {x, x}};
    case TermKind::Unit: return {{}, {x}};
    case TermKind::Counit: return {{x}, {}};
    case TermKind::Cup: return {{}, {x, x}};
    case TermKind::Cap: return {{x, x}, {}};
    default: throw Error("not a structure leaf");
  }
}

template <class GenLookup>
Interface infer(const Term& t, const GenLookup& gen) {
  switch (t.kind()) {
    case TermKind::Gen: return gen(t.name());
    case TermKind::Compose: {
      Interface a = infer(t.lhs(), gen);
      Interface b = infer(t.rhs(), gen);
      if (a.cod != b.dom)
        throw InterfaceMismatch("cannot compose: codomain " + to_string(a.cod) +
                                " does not match domain " + to_string(b.dom));
      return {a.dom, b.cod};
    }
    case TermKind::Tensor: {
      Interface a = infer(t.lhs(), gen);
      Interface b = infer(t.rhs(), gen);
      return {concat(a.dom, b.dom), concat(a.cod, b.cod)};
    }
    default: return leaf_interface(t);
  }
}

void check_names(const Term& t, const Multigraph& mg) {
  switch (t.kind()) {
    case TermKind::Gen:
      if (!mg.find_component(t.name()))
        throw UnknownName("unknown component '" + t.name() + "'");
      return;
    case TermKind::Compose:
    case TermKind::Tensor:
      check_names(t.lhs(), mg);
      check_names(t.rhs(), mg);
      return;
    case TermKind::Id: mg.check_word(t.word()); return;
    case TermKind::Braid:
    case TermKind::BraidInv:
      mg.check_word(t.word());
      mg.check_word(t.word2());
      return;
    default:
      if (!mg.has_wire(t.name())) throw UnknownName("unknown wire type '" + t.name() + "'");
  }
}

// τ_{A,B} as single-wire crossings.
Term expand_braid(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) return Term::id(concat(a, b));
  if (a.size() == 1 && b.size() == 1) return Term::braid(a, b);
  if (a.size() == 1) {
    Word b1{b.front()};
    Word rest(b.begin() + 1, b.end());
    return Term::compose(Term::tensor(expand_braid(a, b1), Term::id(rest)),
                         Term::tensor(Term::id(b1), expand_braid(a, rest)));
  }
  Word head(a.begin(), a.end() - 1);
  Word last{a.back()};
  return Term::compose(Term::tensor(Term::id(head), expand_braid(last, b)),
                       Term::tensor(expand_braid(head, b), Term::id(last)));
}

// Inverse of a term built from Id, single-wire Braid/BraidInv, Compose and
// Tensor.
Term invert(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id: return t;
    case TermKind::Braid: return Term::braid_inv(t.word2(), t.word());
    case TermKind::BraidInv: return Term::braid(t.word2(), t.word());
    case TermKind::Compose: return Term::compose(invert(t.rhs()), invert(t.lhs()));
    case TermKind::Tensor: return Term::tensor(invert(t.lhs()), invert(t.rhs()));
    default: throw Error("term is not invertible");
  }
}

void flatten(const Term& t, TermKind k, std::vector<Term>& out) {
  if (t.kind() == k) {
    flatten(t.lhs(), k, out);
    flatten(t.rhs(), k, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

Interface typecheck(const Term& term, const Multigraph& mg) {
  check_names(term, mg);
  return infer(term, [&](const std::string& name) {
    const ComponentDecl* c = mg.find_component(name);
    return Interface{c->dom, c->cod};
  });
}

Interface structural_interface(const Term& term) {
  return infer(term, [](const std::string& name) -> Interface {
    throw HasComponents("diagram contains component '" + name + "'");
  });
}

Term desugar(const Term& term) {
  switch (term.kind()) {
    case TermKind::Compose: return Term::compose(desugar(term.lhs()), desugar(term.rhs()));
    case TermKind::Tensor: return Term::tensor(desugar(term.lhs()), desugar(term.rhs()));
    case TermKind::Cup: return Term::compose(Term::unit(term.name()), Term::comul(term.name()));
    case TermKind::Cap: return Term::compose(Term::mul(term.name()), Term::counit(term.name()));
    case TermKind::Braid: return expand_braid(term.word(), term.word2());
    case TermKind::BraidInv:
      if (term.word().size() == 1 && term.word2().size() == 1) return term;
      return invert(expand_braid(term.word2(), term.word()));
    default: return term;
  }
}

std::map<std::string, std::size_t> generator_census(const Term& term) {
  std::map<std::string, std::size_t> out;
  std::vector<const Term*> stack{&term};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (t->kind() == TermKind::Gen) {
      ++out[t->name()];
    } else if (!t->is_leaf()) {
      stack.push_back(&t->rhs());
      stack.push_back(&t->lhs());
    }
  }
  return out;
}

bool is_structure_only(const Term& term) { return generator_census(term).empty(); }

Term normalize(const Term& term) {
  if (term.kind() == TermKind::Compose) {
    std::vector<Term> parts;
    flatten(term, TermKind::Compose, parts);
    for (auto& p : parts) p = normalize(p);
    return Term::compose_all(parts);
  }
  if (term.kind() == TermKind::Tensor) {
    std::vector<Term> raw;
    flatten(term, TermKind::Tensor, raw);
    std::vector<Term> parts;
    for (auto& p : raw) {
      Term n = normalize(p);
      if (n.kind() == TermKind::Tensor) {
        flatten(n, TermKind::Tensor, parts);
        continue;
      }
      if (n.kind() == TermKind::Id) {
        if (n.word().empty()) continue;
        if (!parts.empty() && parts.back().kind() == TermKind::Id) {
          parts.back() = Term::id(concat(parts.back().word(), n.word()));
          continue;
        }
      }
      parts.push_back(n);
    }
    if (parts.empty()) return Term::id({});
    return Term::tensor_all(parts);
  }
  return term;
}

bool structurally_equal(const Term& a, const Term& b) { return normalize(a) == normalize(b); }

}  // namespace tcd
