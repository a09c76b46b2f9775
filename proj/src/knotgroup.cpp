#include "tcd/knotgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>

#include "tcd/errors.hpp"
#include "tcd/kernels.hpp"

namespace tcd {

PresentationCospan structure_cospan(CospanKind kind) {
  PresentationCospan c;
  auto gens = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) c.presentation.generators.push_back(generator_name(i));
  };
  switch (kind) {
    case CospanKind::Id:
      gens(1);
      c.left = {{1}};
      c.right = {{1}};
      break;
    case CospanKind::Cup:
      gens(2);
      c.presentation.relators = {{1, 2}};
      c.right = {{1}, {2}};
      break;
    case CospanKind::Cap:
      gens(2);
      c.presentation.relators = {{1, 2}};
      c.left = {{1}, {2}};
      break;
    case CospanKind::BraidPos:
      gens(2);
      c.left = {{1}, {2}};
      c.right = {{1, 2, -1}, {1}};
      break;
    case CospanKind::BraidNeg:
      gens(2);
      c.left = {{1}, {2}};
      c.right = {{2}, {-2, 1, 2}};
      break;
    case CospanKind::Mul:
      gens(2);
      c.left = {{1}, {2}};
      c.right = {{1, 2}};
      break;
    case CospanKind::Comul:
      gens(2);
      c.left = {{1, 2}};
      c.right = {{1}, {2}};
      break;
    case CospanKind::Unit:
      c.right = {{}};
      break;
    case CospanKind::Counit:
      gens(1);
      c.presentation.relators = {{1}};
      c.left = {{1}};
      break;
  }
  return c;
}

namespace {

GroupWord shifted(const GroupWord& w, int by) {
  GroupWord out;
  for (int x : w) out.push_back(x > 0 ? x + by : x - by);
  return out;
}

std::vector<GroupWord> shifted(const std::vector<GroupWord>& ws, int by) {
  std::vector<GroupWord> out;
  for (const auto& w : ws) out.push_back(shifted(w, by));
  return out;
}

// Disjoint union of presentations; b's generators come after a's.
Presentation disjoint_union(const Presentation& a, const Presentation& b) {
  Presentation p = a;
  p.generators.insert(p.generators.end(), b.generators.begin(), b.generators.end());
  auto rel = shifted(b.relators, static_cast<int>(a.generators.size()));
  p.relators.insert(p.relators.end(), rel.begin(), rel.end());
  return p;
}

void rename_generators(Presentation& p) {
  for (std::size_t i = 0; i < p.generators.size(); ++i) p.generators[i] = generator_name(i);
}

}  // namespace

PresentationCospan compose_cospans(const PresentationCospan& a, const PresentationCospan& b) {
  if (a.right.size() != b.left.size())
    throw InterfaceMismatch("cannot glue " + std::to_string(a.right.size()) + " boundary wires to " +
                            std::to_string(b.left.size()));
  const int shift = static_cast<int>(a.presentation.generators.size());
  PresentationCospan c;
  c.presentation = disjoint_union(a.presentation, b.presentation);
  for (std::size_t k = 0; k < a.right.size(); ++k) {
    GroupWord r = a.right[k];
    GroupWord l = inverse_word(shifted(b.left[k], shift));
    r.insert(r.end(), l.begin(), l.end());
    c.presentation.relators.push_back(free_reduce(r));
  }
  c.left = a.left;
  c.right = shifted(b.right, shift);
  rename_generators(c.presentation);
  return c;
}

PresentationCospan tensor_cospans(const PresentationCospan& a, const PresentationCospan& b) {
  const int shift = static_cast<int>(a.presentation.generators.size());
  PresentationCospan c;
  c.presentation = disjoint_union(a.presentation, b.presentation);
  c.left = a.left;
  auto bl = shifted(b.left, shift);
  c.left.insert(c.left.end(), bl.begin(), bl.end());
  c.right = a.right;
  auto br = shifted(b.right, shift);
  c.right.insert(c.right.end(), br.begin(), br.end());
  rename_generators(c.presentation);
  return c;
}

PresentationCospan eval_cospan(const Term& t) {
  switch (t.kind()) {
    case TermKind::Gen: throw HasComponents("diagram contains component '" + t.name() + "'");
    case TermKind::Compose: return compose_cospans(eval_cospan(t.lhs()), eval_cospan(t.rhs()));
    case TermKind::Tensor: return tensor_cospans(eval_cospan(t.lhs()), eval_cospan(t.rhs()));
    case TermKind::Id: {
      PresentationCospan c;
      for (std::size_t i = 0; i < t.word().size(); ++i)
        c = i == 0 ? structure_cospan(CospanKind::Id)
                   : tensor_cospans(c, structure_cospan(CospanKind::Id));
      return c;
    }
    case TermKind::Braid:
    case TermKind::BraidInv:
      if (t.word().size() != 1 || t.word2().size() != 1) return eval_cospan(desugar(t));
      return structure_cospan(t.kind() == TermKind::Braid ? CospanKind::BraidPos : CospanKind::BraidNeg);
    case TermKind::Mul: return structure_cospan(CospanKind::Mul);
    case TermKind::Comul: return structure_cospan(CospanKind::Comul);
    case TermKind::Unit: return structure_cospan(CospanKind::Unit);
    case TermKind::Counit: return structure_cospan(CospanKind::Counit);
    case TermKind::Cup: return structure_cospan(CospanKind::Cup);
    case TermKind::Cap: return structure_cospan(CospanKind::Cap);
  }
  throw Error("unknown term kind");
}

Presentation eval_presentation(const Term& term) {
  if (auto census = generator_census(term); !census.empty())
    throw HasComponents("diagram contains component '" + census.begin()->first + "'");
  Interface i = structural_interface(term);
  if (!i.dom.empty() || !i.cod.empty())
    throw NotClosed("diagram has interface " + to_string(i.dom) + " -> " + to_string(i.cod) +
                    ", expected I -> I");
  return eval_cospan(term).presentation;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t b = 0, e = r.size();
  while (e - b >= 2 && r[b] == -r[e - 1]) {
    ++b;
    --e;
  }
  return GroupWord(r.begin() + static_cast<long>(b), r.begin() + static_cast<long>(e));
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

bool cyclically_equivalent(const GroupWord& a, const GroupWord& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (const GroupWord& c : {a, inverse_word(a)}) {
    GroupWord doubled = c;
    doubled.insert(doubled.end(), c.begin(), c.end());
    for (std::size_t s = 0; s < c.size(); ++s)
      if (std::equal(b.begin(), b.end(), doubled.begin() + static_cast<long>(s))) return true;
  }
  return false;
}

namespace {

// Reduces relators, drops trivial ones and duplicates up to rotation and
// inversion.
void tidy(Presentation& p) {
  std::vector<GroupWord> kept;
  for (const auto& r : p.relators) {
    GroupWord c = cyclic_reduce(r);
    if (c.empty()) continue;
    bool dup = std::any_of(kept.begin(), kept.end(),
                           [&](const GroupWord& k) { return cyclically_equivalent(k, c); });
    if (!dup) kept.push_back(std::move(c));
  }
  p.relators = std::move(kept);
}

std::size_t occurrences(const GroupWord& w, int gen) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [&](int x) { return std::abs(x) == gen; }));
}

// Removes generator gen (1-based) from the numbering.
void drop_generator(Presentation& p, int gen) {
  p.generators.erase(p.generators.begin() + (gen - 1));
  for (auto& r : p.relators)
    for (int& x : r)
      if (std::abs(x) > gen) x += x > 0 ? -1 : 1;
}

bool eliminate_one(Presentation& p) {
  const int n = static_cast<int>(p.generators.size());
  for (int gen = 1; gen <= n; ++gen) {
    std::size_t best = p.relators.size();
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (occurrences(p.relators[i], gen) == 1 &&
          (best == p.relators.size() || p.relators[i].size() < p.relators[best].size()))
        best = i;
    if (best == p.relators.size()) continue;

    // rel = u g^s v, so g^s = u^-1 v^-1.
    const GroupWord rel = p.relators[best];
    std::size_t pos = 0;
    while (std::abs(rel[pos]) != gen) ++pos;
    GroupWord u(rel.begin(), rel.begin() + static_cast<long>(pos));
    GroupWord v(rel.begin() + static_cast<long>(pos) + 1, rel.end());
    GroupWord value = inverse_word(u);
    GroupWord vi = inverse_word(v);
    value.insert(value.end(), vi.begin(), vi.end());
    if (rel[pos] < 0) value = inverse_word(value);
    value = free_reduce(value);
    const GroupWord value_inv = inverse_word(value);

    p.relators.erase(p.relators.begin() + static_cast<long>(best));
    for (auto& r : p.relators) {
      GroupWord out;
      for (int x : r) {
        if (x == gen) out.insert(out.end(), value.begin(), value.end());
        else if (x == -gen) out.insert(out.end(), value_inv.begin(), value_inv.end());
        else out.push_back(x);
      }
      r = free_reduce(out);
    }
    drop_generator(p, gen);
    return true;
  }
  return false;
}

}  // namespace

Presentation tietze_simplify(const Presentation& input, std::size_t max_passes) {
  Presentation p = input;
  tidy(p);
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    if (!eliminate_one(p)) break;
    tidy(p);
  }
  rename_generators(p);
  return p;
}

std::uint64_t hom_count(const Presentation& p, const FiniteGroup& g, std::uint64_t budget) {
  return kernels::hom_count(g, p.generators.size(), p.relators, budget);
}

std::string generator_name(std::size_t index) {
  std::string s(1, static_cast<char>('a' + index % 26));
  if (index >= 26) s += std::to_string(index / 26);
  return s;
}

std::string word_string(const Presentation& p, const GroupWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::string name = p.generators.at(static_cast<std::size_t>(std::abs(w[i]) - 1));
    if (w[i] < 0)
      for (char& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    s += (i ? " " : "") + name;
  }
  return s;
}

std::string render(const Presentation& p) {
  std::string s = "⟨ ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ", " : "") + p.generators[i];
  s += p.generators.empty() ? "| " : " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) s += (i ? ", " : "") + word_string(p, p.relators[i]);
  s += p.relators.empty() ? "⟩" : " ⟩";
  return s;
}

Presentation parse_presentation(const std::string& raw) {
  std::string text = raw;
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t at = text.find(from); at != std::string::npos; at = text.find(from, at + to.size()))
      text.replace(at, from.size(), to);
  };
  replace_all("⟨", "<");
  replace_all("⟩", ">");
  const std::size_t open = text.find('<'), bar = text.find('|'), close = text.rfind('>');
  if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
      !(open < bar && bar < close))
    throw SyntaxError("presentation must look like < gens | relators >");

  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
      if (ch == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto tokens = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  };

  Presentation p;
  std::map<std::string, int> index;
  for (const auto& part : split(text.substr(open + 1, bar - open - 1), ',')) {
    auto t = tokens(part);
    if (t.empty()) continue;
    if (t.size() != 1) throw SyntaxError("bad generator list entry '" + part + "'");
    for (char ch : t[0])
      if (std::isupper(static_cast<unsigned char>(ch)))
        throw SyntaxError("generator names must be lower case: '" + t[0] + "'");
    if (index.count(t[0])) throw SyntaxError("generator '" + t[0] + "' listed twice");
    p.generators.push_back(t[0]);
    index[t[0]] = static_cast<int>(p.generators.size());
  }
  for (const auto& part : split(text.substr(bar + 1, close - bar - 1), ',')) {
    auto t = tokens(part);
    if (t.empty()) continue;
    GroupWord w;
    for (const auto& letter : t) {
      std::string lower = letter;
      for (char& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      auto it = index.find(lower);
      if (it == index.end()) throw UnknownName("unknown generator '" + letter + "'");
      w.push_back(std::isupper(static_cast<unsigned char>(letter[0])) ? -it->second : it->second);
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

}  // namespace tcd
