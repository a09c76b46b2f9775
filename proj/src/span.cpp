#include "tcd/span.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tcd/errors.hpp"

namespace tcd {

std::uint64_t FiniteSpan::apex_size() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

// Sorts by pair and merges repeated pairs, summing their counts.
void canonicalize(FiniteSpan& s) {
  const std::size_t w = s.pairs.width;
  const std::size_t n = s.counts.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto row = [&](std::size_t i) { return s.pairs.data.data() + i * w; };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(row(a), row(a) + w, row(b), row(b) + w);
  });
  kernels::FlatRows out;
  out.width = w;
  std::vector<std::uint64_t> counts;
  for (std::size_t i : idx) {
    if (s.counts[i] == 0) continue;
    if (!counts.empty() && std::equal(row(i), row(i) + w, out.data.data() + (out.rows - 1) * w)) {
      counts.back() += s.counts[i];
      continue;
    }
    out.data.insert(out.data.end(), row(i), row(i) + w);
    ++out.rows;
    counts.push_back(s.counts[i]);
  }
  s.pairs = std::move(out);
  s.counts = std::move(counts);
}

FiniteSpan empty_span(std::size_t l, std::size_t r) {
  FiniteSpan s;
  s.left_width = l;
  s.right_width = r;
  s.pairs.width = l + r;
  return s;
}

void push(FiniteSpan& s, const GroupTuple& t, std::uint64_t count) {
  s.pairs.data.insert(s.pairs.data.end(), t.begin(), t.end());
  ++s.pairs.rows;
  s.counts.push_back(count);
}

void for_each_tuple(const FiniteGroup& g, std::size_t width,
                    const std::function<void(const GroupTuple&)>& f) {
  GroupTuple t(width, 0);
  for (;;) {
    f(t);
    std::size_t k = width;
    for (;;) {
      if (k == 0) return;
      --k;
      if (++t[k] < g.order()) break;
      t[k] = 0;
    }
  }
}

// Graph of a function G^m -> G^n as a span.
FiniteSpan function_span(const FiniteGroup& g, std::size_t m, std::size_t n,
                         const std::function<GroupTuple(const GroupTuple&)>& f) {
  FiniteSpan s = empty_span(m, n);
  for_each_tuple(g, m, [&](const GroupTuple& x) {
    GroupTuple row = x;
    GroupTuple y = f(x);
    row.insert(row.end(), y.begin(), y.end());
    push(s, row, 1);
  });
  canonicalize(s);
  return s;
}

FiniteSpan converse_span(const FiniteSpan& s) {
  FiniteSpan c = empty_span(s.right_width, s.left_width);
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    const Elem* p = s.pairs.row(i);
    GroupTuple row(p + s.left_width, p + s.pairs.width);
    row.insert(row.end(), p, p + s.left_width);
    push(c, row, s.counts[i]);
  }
  canonicalize(c);
  return c;
}

// τ on G^m ⊗ G^n: (x, y) ↦ (y^x̄, x).
GroupTuple twist(const FiniteGroup& g, std::size_t m, const GroupTuple& t) {
  Elem xbar = g.product(t.data(), m);
  GroupTuple out;
  for (std::size_t k = m; k < t.size(); ++k) out.push_back(g.conj(t[k], xbar));
  out.insert(out.end(), t.begin(), t.begin() + static_cast<long>(m));
  return out;
}

// {(x, x^-1)} as a span I -> G^2 or G^2 -> I.
FiniteSpan inverse_pairs(const FiniteGroup& g, std::size_t l, std::size_t r) {
  FiniteSpan s = empty_span(l, r);
  for (std::size_t a = 0; a < g.order(); ++a)
    push(s, {static_cast<Elem>(a), g.inv(static_cast<Elem>(a))}, 1);
  canonicalize(s);
  return s;
}

}  // namespace

FiniteSpan make_span(std::size_t left_width, std::size_t right_width,
                     const std::vector<std::pair<GroupTuple, std::uint64_t>>& entries) {
  FiniteSpan s = empty_span(left_width, right_width);
  for (const auto& [t, c] : entries) {
    if (t.size() != left_width + right_width) throw WidthMismatch("span entry has wrong width");
    push(s, t, c);
  }
  canonicalize(s);
  return s;
}

FiniteSpan compose_spans(const FiniteSpan& s, const FiniteSpan& t) {
  if (s.right_width != t.left_width)
    throw InterfaceMismatch("cannot compose span with right width " + std::to_string(s.right_width) +
                            " and span with left width " + std::to_string(t.left_width));
  const std::size_t mid = s.right_width;
  const std::size_t l = s.left_width;
  FiniteSpan out = empty_span(l, t.right_width);
  // t is sorted, so pairs sharing a left tuple are contiguous.
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    const Elem* x = s.pairs.row(i);
    const Elem* key = x + l;
    std::size_t lo = 0, hi = t.counts.size();
    while (lo < hi) {
      std::size_t m = (lo + hi) / 2;
      if (std::lexicographical_compare(t.pairs.row(m), t.pairs.row(m) + mid, key, key + mid))
        lo = m + 1;
      else
        hi = m;
    }
    for (std::size_t j = lo; j < t.counts.size() && std::equal(key, key + mid, t.pairs.row(j)); ++j) {
      out.pairs.data.insert(out.pairs.data.end(), x, x + l);
      out.pairs.data.insert(out.pairs.data.end(), t.pairs.row(j) + mid, t.pairs.row(j) + t.pairs.width);
      ++out.pairs.rows;
      out.counts.push_back(s.counts[i] * t.counts[j]);
    }
  }
  canonicalize(out);
  return out;
}

FiniteSpan tensor_spans(const FiniteSpan& s, const FiniteSpan& t) {
  FiniteSpan out = empty_span(s.left_width + t.left_width, s.right_width + t.right_width);
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    const Elem* x = s.pairs.row(i);
    for (std::size_t j = 0; j < t.counts.size(); ++j) {
      const Elem* y = t.pairs.row(j);
      auto& d = out.pairs.data;
      d.insert(d.end(), x, x + s.left_width);
      d.insert(d.end(), y, y + t.left_width);
      d.insert(d.end(), x + s.left_width, x + s.pairs.width);
      d.insert(d.end(), y + t.left_width, y + t.pairs.width);
      ++out.pairs.rows;
      out.counts.push_back(s.counts[i] * t.counts[j]);
    }
  }
  canonicalize(out);
  return out;
}

FiniteSpan eval_span(const Term& term, const FiniteGroup& g) {
  switch (term.kind()) {
    case TermKind::Gen: throw HasComponents("diagram contains component '" + term.name() + "'");
    case TermKind::Compose: return compose_spans(eval_span(term.lhs(), g), eval_span(term.rhs(), g));
    case TermKind::Tensor: return tensor_spans(eval_span(term.lhs(), g), eval_span(term.rhs(), g));
    case TermKind::Id: {
      const std::size_t w = term.word().size();
      return function_span(g, w, w, [](const GroupTuple& x) { return x; });
    }
    case TermKind::Braid: {
      const std::size_t m = term.word().size(), n = term.word2().size();
      return function_span(g, m + n, m + n, [&](const GroupTuple& x) { return twist(g, m, x); });
    }
    case TermKind::BraidInv: {
      // Converse of the twist on the swapped words.
      const std::size_t m = term.word().size(), n = term.word2().size();
      return converse_span(
          function_span(g, m + n, m + n, [&](const GroupTuple& x) { return twist(g, n, x); }));
    }
    case TermKind::Mul:
      return function_span(g, 2, 1, [&](const GroupTuple& x) { return GroupTuple{g.mul(x[0], x[1])}; });
    case TermKind::Comul:
      return converse_span(
          function_span(g, 2, 1, [&](const GroupTuple& x) { return GroupTuple{g.mul(x[0], x[1])}; }));
    case TermKind::Unit: return make_span(0, 1, {{GroupTuple{0}, 1}});
    case TermKind::Counit: return make_span(1, 0, {{GroupTuple{0}, 1}});
    case TermKind::Cup: return inverse_pairs(g, 0, 2);
    case TermKind::Cap: return inverse_pairs(g, 2, 0);
  }
  throw Error("unknown term kind");
}

std::optional<std::string> validate_span(const FiniteSpan& s, const FiniteGroup& g) {
  const std::size_t w = s.pairs.width;
  auto count_of = [&](const GroupTuple& t) -> std::uint64_t {
    std::size_t lo = 0, hi = s.counts.size();
    while (lo < hi) {
      std::size_t m = (lo + hi) / 2;
      if (std::lexicographical_compare(s.pairs.row(m), s.pairs.row(m) + w, t.begin(), t.end()))
        lo = m + 1;
      else
        hi = m;
    }
    if (lo < s.counts.size() && std::equal(t.begin(), t.end(), s.pairs.row(lo))) return s.counts[lo];
    return 0;
  };
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    const Elem* p = s.pairs.row(i);
    GroupTuple t(p, p + w);
    Elem a = g.product(p, s.left_width);
    Elem b = g.product(p + s.left_width, s.right_width);
    if (!g.is_central(g.mul(a, g.inv(b))))
      return "pair " + tuple_string(g, t) + " fails the center condition";
    for (std::size_t h = 1; h < g.order(); ++h) {
      GroupTuple c(w);
      for (std::size_t k = 0; k < w; ++k) c[k] = g.conj(t[k], static_cast<Elem>(h));
      if (count_of(c) != s.counts[i])
        return "fiber over " + tuple_string(g, t) + " differs from its conjugate by " +
               g.name(static_cast<Elem>(h));
    }
  }
  return std::nullopt;
}

namespace {

Interface closed_interface(const Term& term) {
  if (auto census = generator_census(term); !census.empty())
    throw HasComponents("diagram contains component '" + census.begin()->first + "'");
  Interface i = structural_interface(term);
  if (!i.dom.empty() || !i.cod.empty())
    throw NotClosed("diagram has interface " + to_string(i.dom) + " -> " + to_string(i.cod) +
                    ", expected I -> I");
  return i;
}

using Seg = std::vector<std::size_t>;

Seg walk(const Term& t, const Seg& in, SegmentModel& m) {
  using K = SegmentModel::Kind;
  auto fresh = [&] { return m.segments++; };
  switch (t.kind()) {
    case TermKind::Gen: throw HasComponents("diagram contains component '" + t.name() + "'");
    case TermKind::Id: return in;
    case TermKind::Compose: return walk(t.rhs(), walk(t.lhs(), in, m), m);
    case TermKind::Tensor: {
      const std::size_t split = structural_interface(t.lhs()).dom.size();
      Seg left(in.begin(), in.begin() + static_cast<long>(split));
      Seg right(in.begin() + static_cast<long>(split), in.end());
      Seg out = walk(t.lhs(), left, m);
      Seg r = walk(t.rhs(), right, m);
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case TermKind::Braid:
    case TermKind::BraidInv: {
      if (t.word().size() != 1 || t.word2().size() != 1) return walk(desugar(t), in, m);
      std::size_t c = fresh(), d = fresh();
      m.constraints.push_back({t.kind() == TermKind::Braid ? K::Twist : K::TwistInverse, in[0], in[1], c, d});
      return {c, d};
    }
    case TermKind::Mul: {
      std::size_t c = fresh();
      m.constraints.push_back({K::Product, in[0], in[1], c, 0});
      return {c};
    }
    case TermKind::Comul: {
      std::size_t a = fresh(), b = fresh();
      m.constraints.push_back({K::Product, a, b, in[0], 0});
      return {a, b};
    }
    case TermKind::Unit: {
      std::size_t a = fresh();
      m.constraints.push_back({K::Identity, a, 0, 0, 0});
      return {a};
    }
    case TermKind::Counit:
      m.constraints.push_back({K::Identity, in[0], 0, 0, 0});
      return {};
    case TermKind::Cup: {
      std::size_t a = fresh(), b = fresh();
      m.constraints.push_back({K::Inverse, a, b, 0, 0});
      return {a, b};
    }
    case TermKind::Cap:
      m.constraints.push_back({K::Inverse, in[0], in[1], 0, 0});
      return {};
  }
  throw Error("unknown term kind");
}

std::size_t last_segment(const SegmentModel::Constraint& c) {
  using K = SegmentModel::Kind;
  switch (c.kind) {
    case K::Identity: return c.a;
    case K::Inverse: return std::max(c.a, c.b);
    case K::Product: return std::max({c.a, c.b, c.c});
    default: return std::max({c.a, c.b, c.c, c.d});
  }
}

bool holds(const SegmentModel::Constraint& c, const GroupTuple& x, const FiniteGroup& g) {
  using K = SegmentModel::Kind;
  switch (c.kind) {
    case K::Identity: return x[c.a] == 0;
    case K::Inverse: return g.mul(x[c.a], x[c.b]) == 0;
    case K::Product: return x[c.c] == g.mul(x[c.a], x[c.b]);
    case K::Twist: return x[c.c] == g.conj(x[c.b], x[c.a]) && x[c.d] == x[c.a];
    case K::TwistInverse: return x[c.a] == g.conj(x[c.d], x[c.c]) && x[c.b] == x[c.c];
  }
  return false;
}

}  // namespace

std::uint64_t eval_colorings(const Term& term, const FiniteGroup& g) {
  closed_interface(term);
  return eval_span(term, g).apex_size();
}

SegmentModel segment_model(const Term& term) {
  closed_interface(term);
  SegmentModel m;
  walk(term, {}, m);
  return m;
}

std::vector<GroupTuple> enumerate_colorings(const Term& term, const FiniteGroup& g) {
  const SegmentModel m = segment_model(term);
  std::vector<std::vector<const SegmentModel::Constraint*>> due(m.segments + 1);
  for (const auto& c : m.constraints) due[last_segment(c)].push_back(&c);

  std::vector<GroupTuple> out;
  if (m.segments == 0) {
    out.push_back({});
    return out;
  }
  GroupTuple x(m.segments, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == m.segments) {
      out.push_back(x);
      return;
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
      x[k] = static_cast<Elem>(v);
      bool ok = true;
      for (const auto* c : due[k])
        if (!holds(*c, x, g)) {
          ok = false;
          break;
        }
      if (ok) assign(k + 1);
    }
  };
  assign(0);
  return out;
}

std::uint64_t brute_force_colorings(const Term& term, const FiniteGroup& g) {
  return enumerate_colorings(term, g).size();
}

}  // namespace tcd
