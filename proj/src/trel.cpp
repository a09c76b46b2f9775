#include "tcd/trel.hpp"

#include <algorithm>
#include <functional>

#include "tcd/errors.hpp"

namespace tcd {

const Alphabet& plain_alphabet() {
  static const Alphabet a{""};
  return a;
}

GRelation::GRelation(GroupPtr group, std::vector<Alphabet> in, std::vector<Alphabet> out)
    : group_(std::move(group)), in_(std::move(in)), out_(std::move(out)) {
  rows_.width = in_.size() + out_.size();
}

GRelation GRelation::from_rows(GroupPtr group, std::vector<Alphabet> in, std::vector<Alphabet> out,
                               const std::vector<CodeTuple>& rows) {
  GRelation r(std::move(group), std::move(in), std::move(out));
  for (const auto& t : rows) {
    if (t.size() != r.rows_.width)
      throw WidthMismatch("tuple of width " + std::to_string(t.size()) + " in relation of width " +
                          std::to_string(r.rows_.width));
    r.rows_.data.insert(r.rows_.data.end(), t.begin(), t.end());
    ++r.rows_.rows;
  }
  kernels::sort_unique(r.rows_);
  return r;
}

GRelation GRelation::plain(GroupPtr group, std::size_t in_width, std::size_t out_width,
                           const std::vector<GroupTuple>& rows) {
  std::vector<CodeTuple> codes(rows.begin(), rows.end());
  return from_rows(std::move(group), std::vector<Alphabet>(in_width, plain_alphabet()),
                   std::vector<Alphabet>(out_width, plain_alphabet()), codes);
}

CodeTuple GRelation::row(std::size_t i) const {
  const Code* p = rows_.row(i);
  return CodeTuple(p, p + rows_.width);
}

bool GRelation::contains(const CodeTuple& t) const {
  if (t.size() != rows_.width) return false;
  if (rows_.width == 0) return rows_.rows > 0;
  std::size_t lo = 0, hi = rows_.rows;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const Code* p = rows_.row(mid);
    if (std::lexicographical_compare(p, p + rows_.width, t.begin(), t.end())) lo = mid + 1;
    else hi = mid;
  }
  return lo < rows_.rows && std::equal(t.begin(), t.end(), rows_.row(lo));
}

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || *a == *b; }

std::size_t code_count(const FiniteGroup& g, const Alphabet& a) { return a.size() * g.order(); }

// Calls f on every tuple over the given coordinate alphabets.
void for_each_tuple(const FiniteGroup& g, const std::vector<Alphabet>& coords,
                    const std::function<void(const CodeTuple&)>& f) {
  CodeTuple t(coords.size(), 0);
  for (;;) {
    f(t);
    std::size_t k = coords.size();
    while (k > 0) {
      --k;
      if (++t[k] < code_count(g, coords[k])) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (coords.empty()) return;
  }
}

template <class T>
std::vector<T> concat(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

bool GRelation::operator==(const GRelation& other) const {
  return same_group(group_, other.group_) && in_ == other.in_ && out_ == other.out_ &&
         rows_ == other.rows_;
}

GRelation identity_relation(GroupPtr group, std::vector<Alphabet> coords) {
  std::vector<CodeTuple> rows;
  for_each_tuple(*group, coords, [&](const CodeTuple& t) { rows.push_back(concat(t, t)); });
  return GRelation::from_rows(group, coords, coords, rows);
}

GRelation identity_relation(GroupPtr group, std::size_t width) {
  return identity_relation(std::move(group), std::vector<Alphabet>(width, plain_alphabet()));
}

GRelation structure_relation(StructureKind kind, GroupPtr group, const Alphabet& data) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  auto code = [&](std::size_t d, std::size_t e) { return static_cast<Code>(d * n + e); };
  std::vector<CodeTuple> rows;
  switch (kind) {
    case StructureKind::Mul:
    case StructureKind::Comul:
      for (std::size_t d = 0; d < data.size(); ++d)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            rows.push_back({code(d, a), code(d, b),
                            code(d, g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))});
      if (kind == StructureKind::Mul) return GRelation::from_rows(group, {data, data}, {data}, rows);
      for (auto& r : rows) std::rotate(r.begin(), r.begin() + 2, r.end());
      return GRelation::from_rows(group, {data}, {data, data}, rows);
    case StructureKind::Unit:
    case StructureKind::Counit:
      for (std::size_t d = 0; d < data.size(); ++d) rows.push_back({code(d, 0)});
      if (kind == StructureKind::Unit) return GRelation::from_rows(group, {}, {data}, rows);
      return GRelation::from_rows(group, {data}, {}, rows);
    case StructureKind::Cup:
    case StructureKind::Cap:
      for (std::size_t d = 0; d < data.size(); ++d)
        for (std::size_t a = 0; a < n; ++a)
          rows.push_back({code(d, a), code(d, g.inv(static_cast<Elem>(a)))});
      if (kind == StructureKind::Cup) return GRelation::from_rows(group, {}, {data, data}, rows);
      return GRelation::from_rows(group, {data, data}, {}, rows);
  }
  throw Error("unknown structure kind");
}

GRelation braid_relation(GroupPtr group, const std::vector<Alphabet>& a,
                         const std::vector<Alphabet>& b, int sign) {
  if (sign < 0) return converse(braid_relation(group, b, a, +1));
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  const std::size_t m = a.size();
  std::vector<CodeTuple> rows;
  for_each_tuple(g, concat(a, b), [&](const CodeTuple& t) {
    Elem xbar = 0;
    for (std::size_t k = 0; k < m; ++k) xbar = g.mul(xbar, static_cast<Elem>(t[k] % n));
    CodeTuple row = t;
    for (std::size_t k = m; k < t.size(); ++k) {
      const std::size_t d = t[k] / n;
      row.push_back(static_cast<Code>(d * n + g.conj(static_cast<Elem>(t[k] % n), xbar)));
    }
    row.insert(row.end(), t.begin(), t.begin() + static_cast<long>(m));
    rows.push_back(std::move(row));
  });
  return GRelation::from_rows(group, concat(a, b), concat(b, a), rows);
}

GRelation braid_relation(GroupPtr group, std::size_t m, std::size_t n, int sign) {
  return braid_relation(group, std::vector<Alphabet>(m, plain_alphabet()),
                        std::vector<Alphabet>(n, plain_alphabet()), sign);
}

GRelation compose_relations(const GRelation& r, const GRelation& s) {
  if (!same_group(r.group_, s.group_)) throw GroupMismatch("relations over different groups");
  if (r.out_ != s.in_)
    throw InterfaceMismatch("cannot compose relation with " + std::to_string(r.out_width()) +
                            " outputs into relation with " + std::to_string(s.in_width()) +
                            " inputs (or data alphabets differ)");
  GRelation out(r.group_, r.in_, s.out_);
  out.rows_ = kernels::join(r.rows_, r.in_width(), s.rows_);
  out.validated_ = r.validated_ && s.validated_;
  return out;
}

GRelation tensor_relations(const GRelation& r, const GRelation& s) {
  if (!same_group(r.group_, s.group_)) throw GroupMismatch("relations over different groups");
  GRelation out(r.group_, concat(r.in_, s.in_), concat(r.out_, s.out_));
  const std::size_t ri = r.in_width(), si = s.in_width();
  kernels::FlatRows& f = out.rows_;
  f.data.reserve(r.size() * s.size() * f.width);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Code* x = r.rows_.row(i);
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Code* y = s.rows_.row(j);
      f.data.insert(f.data.end(), x, x + ri);
      f.data.insert(f.data.end(), y, y + si);
      f.data.insert(f.data.end(), x + ri, x + r.rows_.width);
      f.data.insert(f.data.end(), y + si, y + s.rows_.width);
      ++f.rows;
    }
  }
  kernels::sort_unique(f);
  out.validated_ = r.validated_ && s.validated_;
  return out;
}

GRelation converse(const GRelation& r) {
  std::vector<CodeTuple> rows;
  const std::size_t ri = r.in_width();
  for (std::size_t i = 0; i < r.size(); ++i) {
    CodeTuple t = r.row(i);
    std::rotate(t.begin(), t.begin() + static_cast<long>(ri), t.end());
    rows.push_back(std::move(t));
  }
  GRelation c = GRelation::from_rows(r.group_ptr(), r.out_alphabets(), r.in_alphabets(), rows);
  if (r.validated()) c.mark_validated();
  return c;
}

std::optional<Violation> validate_relation(const GRelation& r) {
  const FiniteGroup& g = r.group();
  const std::size_t w = r.rows().width;
  const std::size_t in = r.in_width();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Code* t = r.rows().row(i);
    Elem a = 0, b = 0;
    for (std::size_t k = 0; k < in; ++k) a = g.mul(a, r.element(t[k]));
    for (std::size_t k = in; k < w; ++k) b = g.mul(b, r.element(t[k]));
    Elem q = g.mul(a, g.inv(b));
    if (!g.is_central(q))
      return Violation{2, r.row(i), std::nullopt,
                       "tuple " + tuple_string(r, i) + ": input product times inverse output product " +
                           g.name(q) + " is not central"};
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    const CodeTuple t = r.row(i);
    for (std::size_t h = 1; h < g.order(); ++h) {
      CodeTuple c(w);
      for (std::size_t k = 0; k < w; ++k)
        c[k] = r.code(r.symbol(t[k]), g.conj(r.element(t[k]), static_cast<Elem>(h)));
      if (!r.contains(c))
        return Violation{1, t, static_cast<Elem>(h),
                         "tuple " + tuple_string(r, i) + " conjugated by " +
                             g.name(static_cast<Elem>(h)) + " is missing"};
    }
  }
  return std::nullopt;
}

Scalar scalar_of(const GRelation& r) {
  if (r.in_width() != 0 || r.out_width() != 0)
    throw NotScalar("relation has " + std::to_string(r.in_width()) + " inputs and " +
                    std::to_string(r.out_width()) + " outputs");
  return r.empty() ? Scalar::Empty : Scalar::Point;
}

std::string to_string(Scalar s) { return s == Scalar::Empty ? "empty" : "point"; }

std::string coord_string(const GRelation& r, const Alphabet& alphabet, Code c) {
  const std::string& el = r.group().name(r.element(c));
  if (alphabet.size() == 1) return el;
  return alphabet[r.symbol(c)] + ":" + el;
}

std::string tuple_string(const GRelation& r, std::size_t i) {
  const Code* t = r.rows().row(i);
  auto side = [&](const std::vector<Alphabet>& alph, const Code* p) {
    if (alph.empty()) return std::string("*");
    std::string s;
    for (std::size_t k = 0; k < alph.size(); ++k) s += (k ? ", " : "") + coord_string(r, alph[k], p[k]);
    return s;
  };
  return side(r.in_alphabets(), t) + " → " + side(r.out_alphabets(), t + r.in_width());
}

std::string render(const GRelation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) out += tuple_string(r, i) + "\n";
  return out;
}

const Alphabet& TrelModel::alphabet(const std::string& wire) const {
  auto it = data.find(wire);
  return it == data.end() ? plain_alphabet() : it->second;
}

std::vector<Alphabet> TrelModel::alphabets(const Word& w) const {
  std::vector<Alphabet> out;
  for (const auto& x : w) out.push_back(alphabet(x));
  return out;
}

TrelModel make_trel_model(const TrelBindings& b, const Multigraph& mg) {
  TrelModel m;
  m.group = b.group;
  for (const auto& [wire, alph] : b.data) {
    if (!mg.has_wire(wire)) throw UnknownName("data alphabet for undeclared wire '" + wire + "'");
    if (alph.size() * b.group->order() > 65535)
      throw InvalidBinding("data alphabet for '" + wire + "' is too large for this group");
    m.data.emplace(wire, alph);
  }
  for (const auto& [name, spec] : b.components) {
    const ComponentDecl* decl = mg.find_component(name);
    if (!decl) throw UnknownName("binding for undeclared component '" + name + "'");
    const auto in = m.alphabets(decl->dom);
    const auto out = m.alphabets(decl->cod);
    const std::size_t width = in.size() + out.size();
    const auto coords = concat(in, out);
    std::vector<CodeTuple> rows;
    for (const auto& lit : spec.tuples) {
      if (lit.size() != width)
        throw WidthMismatch("component " + name + " has interface " + to_string(decl->dom) +
                            " -> " + to_string(decl->cod) + " (" + std::to_string(width) +
                            " coordinates) but a tuple has " + std::to_string(lit.size()));
      CodeTuple t;
      for (std::size_t k = 0; k < width; ++k) {
        std::size_t sym = 0;
        if (lit[k].symbol) {
          auto it = std::find(coords[k].begin(), coords[k].end(), *lit[k].symbol);
          if (it == coords[k].end())
            throw UnknownName("component " + name + ": unknown data symbol '" + *lit[k].symbol + "'");
          sym = static_cast<std::size_t>(it - coords[k].begin());
        } else if (coords[k].size() != 1) {
          throw InvalidBinding("component " + name + ": coordinate " + std::to_string(k + 1) +
                               " needs a data symbol");
        }
        t.push_back(static_cast<Code>(sym * b.group->order() + lit[k].element));
      }
      rows.push_back(std::move(t));
    }
    if (spec.mode == RelationSpec::Mode::ConjClosure) {
      const std::size_t n = b.group->order();
      std::vector<CodeTuple> closed;
      for (const auto& t : rows) {
        GroupTuple elems(t.size());
        for (std::size_t k = 0; k < t.size(); ++k) elems[k] = static_cast<Elem>(t[k] % n);
        for (const auto& c : conjugacy_orbit(*b.group, elems)) {
          CodeTuple u(t.size());
          for (std::size_t k = 0; k < t.size(); ++k) u[k] = static_cast<Code>((t[k] / n) * n + c[k]);
          closed.push_back(std::move(u));
        }
      }
      rows = std::move(closed);
    }
    GRelation rel = GRelation::from_rows(b.group, in, out, rows);
    if (auto v = validate_relation(rel))
      throw InvalidBinding("component " + name + " violates condition " +
                           std::to_string(v->condition) + ": " + v->message);
    rel.mark_validated();
    m.components.emplace(name, std::move(rel));
  }
  return m;
}

GRelation eval_trel(const Term& t, const TrelModel& m) {
  switch (t.kind()) {
    case TermKind::Gen: {
      auto it = m.components.find(t.name());
      if (it == m.components.end())
        throw UnboundComponent("component '" + t.name() + "' has no binding");
      return it->second;
    }
    case TermKind::Id: return identity_relation(m.group, m.alphabets(t.word()));
    case TermKind::Compose: return compose_relations(eval_trel(t.lhs(), m), eval_trel(t.rhs(), m));
    case TermKind::Tensor: return tensor_relations(eval_trel(t.lhs(), m), eval_trel(t.rhs(), m));
    case TermKind::Braid:
      return braid_relation(m.group, m.alphabets(t.word()), m.alphabets(t.word2()), +1);
    case TermKind::BraidInv:
      return braid_relation(m.group, m.alphabets(t.word()), m.alphabets(t.word2()), -1);
    case TermKind::Mul: return structure_relation(StructureKind::Mul, m.group, m.alphabet(t.name()));
    case TermKind::Comul:
      return structure_relation(StructureKind::Comul, m.group, m.alphabet(t.name()));
    case TermKind::Unit: return structure_relation(StructureKind::Unit, m.group, m.alphabet(t.name()));
    case TermKind::Counit:
      return structure_relation(StructureKind::Counit, m.group, m.alphabet(t.name()));
    case TermKind::Cup: return structure_relation(StructureKind::Cup, m.group, m.alphabet(t.name()));
    case TermKind::Cap: return structure_relation(StructureKind::Cap, m.group, m.alphabet(t.name()));
  }
  throw Error("unknown term kind");
}

}  // namespace tcd
