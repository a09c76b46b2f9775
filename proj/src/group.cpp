#include "tcd/group.hpp"

#include <map>

#include "tcd/errors.hpp"
#include "tcd/kernels.hpp"

namespace tcd {

Elem FiniteGroup::product(const Elem* first, std::size_t n) const {
  Elem acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = mul(acc, first[i]);
  return acc;
}

Elem FiniteGroup::parse_element(const std::string& text, PermutationSyntax syntax) const {
  if (text == "e") return 0;
  if (is_permutation_group()) {
    Permutation p = parse_permutation(text, degree_, syntax);
    auto it = by_name_.find(cycle_string(p));
    if (it == by_name_.end())
      throw BadPermutation("permutation '" + text + "' is not an element of the group");
    return it->second;
  }
  auto it = by_name_.find(text);
  if (it == by_name_.end()) throw BadPermutation("unknown group element '" + text + "'");
  return it->second;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) rows[a][b] = mul(static_cast<Elem>(a), static_cast<Elem>(b));
  return rows;
}

void FiniteGroup::finish() {
  const std::size_t n = order_;
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a * n + b] == 0) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
  central_.assign(n, true);
  center_.clear();
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t g = 0; g < n && central_[z]; ++g)
      if (table_[z * n + g] != table_[g * n + z]) central_[z] = false;
    if (central_[z]) center_.push_back(static_cast<Elem>(z));
  }
  by_name_.clear();
  for (std::size_t a = 0; a < n; ++a) by_name_.emplace(names_[a], static_cast<Elem>(a));
}

GroupPtr make_table_group(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  if (n > kDefaultClosureCap) throw ClosureTooLarge("table of order " + std::to_string(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw NotAGroup("multiplication table is not square");
    for (int v : rows[a])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw NotAGroup("closure fails: entry " + std::to_string(v) + " out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(rows[a][b]); };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("identity law fails: no two-sided identity");

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = at(a, b) == e && at(b, a) == e;
    if (!found) throw NotAGroup("inverse law fails for element " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");

  // Relabel by swapping e and 0.
  auto relabel = [&](std::size_t x) -> std::size_t {
    if (x == e) return 0;
    if (x == 0) return e;
    return x;
  };
  auto g = std::make_shared<FiniteGroup>();
  g->order_ = n;
  g->table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g->table_[relabel(a) * n + relabel(b)] = static_cast<Elem>(relabel(at(a, b)));
  for (std::size_t a = 0; a < n; ++a) g->names_.push_back(std::to_string(a));
  g->finish();
  return g;
}

GroupPtr make_permutation_group(int degree, const std::vector<Permutation>& generators,
                                std::size_t cap) {
  if (degree < 1 || degree > 255) throw BadPermutation("degree out of range");
  for (const auto& p : generators)
    if (static_cast<int>(p.size()) != degree) throw BadPermutation("generator has wrong degree");

  std::vector<Permutation> elems{identity_permutation(degree)};
  std::map<Permutation, std::size_t> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation y = multiply(elems[head], gen);
      if (index.count(y)) continue;
      if (elems.size() >= cap)
        throw ClosureTooLarge("permutation group exceeds " + std::to_string(cap) + " elements");
      index.emplace(y, elems.size());
      elems.push_back(std::move(y));
    }
  }

  auto g = std::make_shared<FiniteGroup>();
  const std::size_t n = elems.size();
  g->order_ = n;
  g->degree_ = degree;
  g->table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g->table_[a * n + b] = static_cast<Elem>(index.at(multiply(elems[a], elems[b])));
  for (const auto& p : elems) g->names_.push_back(cycle_string(p));
  g->perms_ = std::move(elems);
  g->finish();
  return g;
}

GroupPtr make_permutation_group(int degree, const std::vector<std::string>& generators,
                                PermutationSyntax syntax, std::size_t cap) {
  std::vector<Permutation> perms;
  for (const auto& s : generators) perms.push_back(parse_permutation(s, degree, syntax));
  return make_permutation_group(degree, perms, cap);
}

namespace {

std::string cycle_through(int n) {
  std::string s = "(";
  for (int i = 1; i <= n; ++i) s += (i > 1 ? " " : "") + std::to_string(i);
  return s + ")";
}

}  // namespace

std::vector<std::string> builtin_group_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) out.push_back("S" + std::to_string(n));
  out.push_back("D3");
  out.push_back("D4");
  return out;
}

GroupPtr make_builtin_group(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S')) {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits[0] != '0') {
      int n = std::stoi(digits);
      if (name[0] == 'C' && n >= 2 && n <= 12)
        return make_permutation_group(n, std::vector<std::string>{cycle_through(n)});
      if (name[0] == 'S' && n >= 2 && n <= 5) {
        std::vector<std::string> gens;
        for (int k = 2; k <= n; ++k) gens.push_back("(1 " + std::to_string(k) + ")");
        return make_permutation_group(n, gens);
      }
    }
  }
  if (name == "D3") return make_builtin_group("S3");
  if (name == "D4") return make_permutation_group(4, std::vector<std::string>{"(1 2 3 4)", "(1 3)"});
  throw UnknownGroup("unknown builtin group '" + name + "'");
}

std::vector<GroupTuple> conjugacy_closure(const FiniteGroup& g,
                                          const std::vector<GroupTuple>& seeds) {
  return kernels::conjugacy_closure(g, seeds);
}

std::vector<GroupTuple> conjugacy_orbit(const FiniteGroup& g, const GroupTuple& t) {
  return kernels::serial::conjugacy_closure(g, {t});
}

std::string tuple_string(const FiniteGroup& g, const GroupTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + g.name(t[i]);
  return s + ")";
}

}  // namespace tcd
