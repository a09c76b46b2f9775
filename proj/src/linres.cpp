#include "tcd/linres.hpp"

#include <numeric>

#include "tcd/errors.hpp"

namespace tcd {

std::size_t rref(std::vector<Row>& rows, const std::vector<std::size_t>& column_order) {
  std::size_t rank = 0;
  for (std::size_t col : column_order) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

LinearSystem::LinearSystem(std::size_t in_ports, std::size_t out_ports, std::size_t states,
                           std::vector<Row> rows, std::size_t latent)
    : in_(in_ports), out_(out_ports), states_(states) {
  const std::size_t n = variable_count();
  for (const auto& r : rows)
    if (r.size() != n + latent) throw WidthMismatch("linear equation has the wrong number of terms");
  // Latent columns first: rows pivoting on them are dropped, and every
  // remaining row is zero on all latent columns.
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < latent; ++c) order.push_back(n + c);
  for (std::size_t c = 0; c < n; ++c) order.push_back(c);
  rref(rows, order);
  for (auto& r : rows) {
    bool latent_pivot = false;
    for (std::size_t c = 0; c < latent; ++c) latent_pivot = latent_pivot || r[n + c] != 0;
    if (latent_pivot) continue;
    r.resize(n);
    rows_.push_back(std::move(r));
  }
  std::vector<std::size_t> natural(n);
  std::iota(natural.begin(), natural.end(), 0);
  rref(rows_, natural);
}

std::string LinearSystem::variable_name(std::size_t var) const {
  const std::size_t ports = 2 * (in_ + out_);
  if (var < 2 * in_) return std::string(var % 2 ? "v" : "i") + "_in" + std::to_string(var / 2 + 1);
  if (var < ports)
    return std::string(var % 2 ? "v" : "i") + "_out" + std::to_string((var - 2 * in_) / 2 + 1);
  if (var < ports + states_) return "q" + std::to_string(var - ports + 1) + "'";
  return "q" + std::to_string(var - ports - states_ + 1);
}

bool LinearSystem::operator==(const LinearSystem& o) const {
  return in_ == o.in_ && out_ == o.out_ && states_ == o.states_ && rows_ == o.rows_;
}

namespace {

// Builder for a system over the standard layout.
struct Eqs {
  std::size_t in, out, states;
  std::vector<Row> rows;

  Eqs(std::size_t i, std::size_t o, std::size_t s) : in(i), out(o), states(s) {}
  std::size_t n() const { return 2 * (in + out) + 2 * states; }
  std::size_t i_in(std::size_t k) const { return 2 * k; }
  std::size_t v_in(std::size_t k) const { return 2 * k + 1; }
  std::size_t i_out(std::size_t k) const { return 2 * (in + k); }
  std::size_t v_out(std::size_t k) const { return 2 * (in + k) + 1; }
  std::size_t deriv(std::size_t k) const { return 2 * (in + out) + k; }
  std::size_t state(std::size_t k) const { return 2 * (in + out) + states + k; }

  void add(std::initializer_list<std::pair<std::size_t, Rational>> terms) {
    Row r(n(), Rational(0));
    for (const auto& [var, c] : terms) r[var] += c;
    rows.push_back(std::move(r));
  }
  LinearSystem build() { return LinearSystem(in, out, states, std::move(rows)); }
};

}  // namespace

LinearSystem component_system(LinresKind kind, const Rational& value) {
  if (value <= 0) throw BadParam(kind_name(kind) + " parameter must be positive");
  const Rational one(1);
  switch (kind) {
    case LinresKind::Resistor: {
      Eqs e(1, 1, 0);
      e.add({{e.i_in(0), one}, {e.i_out(0), -one}});
      e.add({{e.v_in(0), one}, {e.v_out(0), -one}, {e.i_in(0), -value}});
      return e.build();
    }
    case LinresKind::Capacitor: {
      Eqs e(1, 1, 1);
      e.add({{e.i_in(0), one}, {e.i_out(0), -one}});
      e.add({{e.v_in(0), one}, {e.v_out(0), -one}, {e.state(0), Rational(-one / value)}});
      e.add({{e.deriv(0), one}, {e.i_in(0), -one}});
      return e.build();
    }
    case LinresKind::Inductor: {
      Eqs e(1, 1, 1);
      e.add({{e.i_in(0), one}, {e.i_out(0), -one}});
      e.add({{e.v_in(0), one}, {e.v_out(0), -one}, {e.deriv(0), -value}});
      e.add({{e.state(0), one}, {e.i_in(0), -one}});
      return e.build();
    }
  }
  throw Error("unknown component kind");
}

LinearSystem wiring_system(WiringKind kind) {
  const Rational one(1);
  switch (kind) {
    case WiringKind::Comul: {
      Eqs e(1, 2, 0);
      e.add({{e.i_in(0), one}, {e.i_out(0), -one}, {e.i_out(1), -one}});
      e.add({{e.v_in(0), one}, {e.v_out(0), -one}});
      e.add({{e.v_in(0), one}, {e.v_out(1), -one}});
      return e.build();
    }
    case WiringKind::Mul: {
      Eqs e(2, 1, 0);
      e.add({{e.i_in(0), one}, {e.i_in(1), one}, {e.i_out(0), -one}});
      e.add({{e.v_in(0), one}, {e.v_out(0), -one}});
      e.add({{e.v_in(1), one}, {e.v_out(0), -one}});
      return e.build();
    }
    case WiringKind::Unit: {
      Eqs e(0, 1, 0);
      e.add({{e.i_out(0), one}});
      return e.build();
    }
    case WiringKind::Counit: {
      Eqs e(1, 0, 0);
      e.add({{e.i_in(0), one}});
      return e.build();
    }
    case WiringKind::Cup: {
      Eqs e(0, 2, 0);
      e.add({{e.i_out(0), one}, {e.i_out(1), one}});
      e.add({{e.v_out(0), one}, {e.v_out(1), -one}});
      return e.build();
    }
    case WiringKind::Cap: {
      Eqs e(2, 0, 0);
      e.add({{e.i_in(0), one}, {e.i_in(1), one}});
      e.add({{e.v_in(0), one}, {e.v_in(1), -one}});
      return e.build();
    }
  }
  throw Error("unknown wiring kind");
}

namespace {

LinearSystem permutation_system(const std::vector<std::size_t>& target) {
  const std::size_t w = target.size();
  Eqs e(w, w, 0);
  const Rational one(1);
  for (std::size_t k = 0; k < w; ++k) {
    e.add({{e.i_in(k), one}, {e.i_out(target[k]), -one}});
    e.add({{e.v_in(k), one}, {e.v_out(target[k]), -one}});
  }
  return e.build();
}

}  // namespace

LinearSystem identity_system(std::size_t ports) {
  std::vector<std::size_t> t(ports);
  std::iota(t.begin(), t.end(), 0);
  return permutation_system(t);
}

LinearSystem swap_system(std::size_t m, std::size_t n) {
  std::vector<std::size_t> t;
  for (std::size_t k = 0; k < m; ++k) t.push_back(n + k);
  for (std::size_t k = 0; k < n; ++k) t.push_back(k);
  return permutation_system(t);
}

LinearSystem compose_systems(const LinearSystem& a, const LinearSystem& b) {
  if (a.out_ports() != b.in_ports())
    throw InterfaceMismatch("cannot compose system with " + std::to_string(a.out_ports()) +
                            " outputs into system with " + std::to_string(b.in_ports()) + " inputs");
  const std::size_t mid = a.out_ports();
  const std::size_t sa = a.states(), sb = b.states();
  Eqs e(a.in_ports(), b.out_ports(), sa + sb);
  const std::size_t n = e.n();
  const std::size_t latent = 4 * mid;  // a's outputs then b's inputs, (i, v) each
  auto a_col = [&](std::size_t var) -> std::size_t {
    if (var < 2 * a.in_ports()) return var;
    if (var < 2 * (a.in_ports() + mid)) return n + (var - 2 * a.in_ports());
    if (var < 2 * (a.in_ports() + mid) + sa) return e.deriv(var - 2 * (a.in_ports() + mid));
    return e.state(var - 2 * (a.in_ports() + mid) - sa);
  };
  auto b_col = [&](std::size_t var) -> std::size_t {
    if (var < 2 * mid) return n + 2 * mid + var;
    if (var < 2 * (mid + b.out_ports())) return e.i_out(0) + (var - 2 * mid);
    if (var < 2 * (mid + b.out_ports()) + sb) return e.deriv(sa + var - 2 * (mid + b.out_ports()));
    return e.state(sa + var - 2 * (mid + b.out_ports()) - sb);
  };
  std::vector<Row> rows;
  auto embed = [&](const LinearSystem& s, auto col) {
    for (const auto& r : s.rows()) {
      Row out(n + latent, Rational(0));
      for (std::size_t v = 0; v < r.size(); ++v)
        if (r[v] != 0) out[col(v)] = r[v];
      rows.push_back(std::move(out));
    }
  };
  embed(a, a_col);
  embed(b, b_col);
  for (std::size_t c = 0; c < 2 * mid; ++c) {
    Row r(n + latent, Rational(0));
    r[n + c] = 1;
    r[n + 2 * mid + c] = -1;
    rows.push_back(std::move(r));
  }
  return LinearSystem(a.in_ports(), b.out_ports(), sa + sb, std::move(rows), latent);
}

LinearSystem tensor_systems(const LinearSystem& a, const LinearSystem& b) {
  Eqs e(a.in_ports() + b.in_ports(), a.out_ports() + b.out_ports(), a.states() + b.states());
  auto a_col = [&](std::size_t var) -> std::size_t {
    const std::size_t ai = a.in_ports(), ao = a.out_ports(), s = a.states();
    if (var < 2 * ai) return var;
    if (var < 2 * (ai + ao)) return e.i_out(0) + (var - 2 * ai);
    if (var < 2 * (ai + ao) + s) return e.deriv(var - 2 * (ai + ao));
    return e.state(var - 2 * (ai + ao) - s);
  };
  auto b_col = [&](std::size_t var) -> std::size_t {
    const std::size_t bi = b.in_ports(), bo = b.out_ports(), s = b.states();
    if (var < 2 * bi) return e.i_in(a.in_ports()) + var;
    if (var < 2 * (bi + bo)) return e.i_out(a.out_ports()) + (var - 2 * bi);
    if (var < 2 * (bi + bo) + s) return e.deriv(a.states() + var - 2 * (bi + bo));
    return e.state(a.states() + var - 2 * (bi + bo) - s);
  };
  auto embed = [&](const LinearSystem& s, auto col) {
    for (const auto& r : s.rows()) {
      Row out(e.n(), Rational(0));
      for (std::size_t v = 0; v < r.size(); ++v)
        if (r[v] != 0) out[col(v)] = r[v];
      e.rows.push_back(std::move(out));
    }
  };
  embed(a, a_col);
  embed(b, b_col);
  return e.build();
}

std::string render(const LinearSystem& s) {
  std::string out;
  for (const auto& r : s.rows()) {
    std::string line;
    for (std::size_t v = 0; v < r.size(); ++v) {
      if (r[v] == 0) continue;
      const bool neg = r[v] < 0;
      const Rational mag = neg ? Rational(-r[v]) : r[v];
      if (line.empty()) line += neg ? "-" : "";
      else line += neg ? " - " : " + ";
      if (mag != 1) line += format_rational(mag) + "*";
      line += s.variable_name(v);
    }
    out += line + " = 0\n";
  }
  return out;
}

LinearSystem eval_linres(const Term& t, const Multigraph& mg, const LinresBindings& b) {
  switch (t.kind()) {
    case TermKind::Gen: {
      auto it = b.components.find(t.name());
      if (it == b.components.end())
        throw UnboundComponent("component '" + t.name() + "' has no binding");
      const ComponentDecl* decl = mg.find_component(t.name());
      if (decl && (decl->dom.size() != 1 || decl->cod.size() != 1))
        throw InterfaceMismatch("component '" + t.name() + "' is bound to a " +
                                kind_name(it->second.kind) + " but has interface " +
                                to_string(decl->dom) + " -> " + to_string(decl->cod));
      return component_system(it->second.kind, it->second.value);
    }
    case TermKind::Id: return identity_system(t.word().size());
    case TermKind::Compose: return compose_systems(eval_linres(t.lhs(), mg, b), eval_linres(t.rhs(), mg, b));
    case TermKind::Tensor: return tensor_systems(eval_linres(t.lhs(), mg, b), eval_linres(t.rhs(), mg, b));
    case TermKind::Braid:
    case TermKind::BraidInv: return swap_system(t.word().size(), t.word2().size());
    case TermKind::Mul: return wiring_system(WiringKind::Mul);
    case TermKind::Comul: return wiring_system(WiringKind::Comul);
    case TermKind::Unit: return wiring_system(WiringKind::Unit);
    case TermKind::Counit: return wiring_system(WiringKind::Counit);
    case TermKind::Cup: return wiring_system(WiringKind::Cup);
    case TermKind::Cap: return wiring_system(WiringKind::Cap);
  }
  throw Error("unknown term kind");
}

}  // namespace tcd
