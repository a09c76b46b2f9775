#include "tcd/axioms.hpp"

#include <functional>

#include "tcd/span.hpp"
#include "tcd/trel.hpp"

namespace tcd {

namespace {

struct Laws {
  GroupPtr g;
  std::vector<LawResult> out;

  GRelation id(std::size_t w) const { return identity_relation(g, w); }
  GRelation tau(std::size_t m, std::size_t n) const { return braid_relation(g, m, n, +1); }
  GRelation tau_inv(std::size_t m, std::size_t n) const { return braid_relation(g, m, n, -1); }
  GRelation s(StructureKind k) const { return structure_relation(k, g); }

  static GRelation seq(std::initializer_list<GRelation> rs) {
    auto it = rs.begin();
    GRelation acc = *it++;
    for (; it != rs.end(); ++it) acc = compose_relations(acc, *it);
    return acc;
  }
  static GRelation par(const GRelation& a, const GRelation& b) { return tensor_relations(a, b); }

  void check(const std::string& name, const std::function<std::string()>& body) {
    const std::string failure = body();
    out.push_back({name, failure.empty(), failure});
  }
};

}  // namespace

std::vector<LawResult> run_axioms(const GroupPtr& group) {
  Laws L{group, {}};
  using K = StructureKind;

  L.check("hexagon B1 (widths <= 2)", [&]() -> std::string {
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t p = 0; p <= 2; ++p) {
          GRelation lhs = L.tau(m, n + p);
          GRelation rhs = Laws::seq({Laws::par(L.tau(m, n), L.id(p)), Laws::par(L.id(n), L.tau(m, p))});
          if (!(lhs == rhs))
            return "fails at widths (" + std::to_string(m) + ", " + std::to_string(n) + ", " +
                   std::to_string(p) + ")";
        }
    return "";
  });

  L.check("hexagon B2 (widths <= 2)", [&]() -> std::string {
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; n <= 2; ++n)
        for (std::size_t p = 0; p <= 2; ++p) {
          GRelation lhs = L.tau(m + n, p);
          GRelation rhs = Laws::seq({Laws::par(L.id(m), L.tau(n, p)), Laws::par(L.tau(m, p), L.id(n))});
          if (!(lhs == rhs))
            return "fails at widths (" + std::to_string(m) + ", " + std::to_string(n) + ", " +
                   std::to_string(p) + ")";
        }
    return "";
  });

  L.check("Yang-Baxter", [&]() -> std::string {
    GRelation a = Laws::par(L.tau(1, 1), L.id(1));
    GRelation b = Laws::par(L.id(1), L.tau(1, 1));
    return Laws::seq({a, b, a}) == Laws::seq({b, a, b}) ? "" : "braid words differ";
  });

  L.check("Frobenius (D)", [&]() -> std::string {
    GRelation left = Laws::seq({Laws::par(L.s(K::Comul), L.id(1)), Laws::par(L.id(1), L.s(K::Mul))});
    GRelation mid = Laws::seq({L.s(K::Mul), L.s(K::Comul)});
    GRelation right = Laws::seq({Laws::par(L.id(1), L.s(K::Comul)), Laws::par(L.s(K::Mul), L.id(1))});
    if (!(left == mid)) return "(1 x mul)(comul x 1) differs from comul mul";
    if (!(right == mid)) return "(mul x 1)(1 x comul) differs from comul mul";
    return "";
  });

  L.check("commutativity mul tau = mul", [&]() -> std::string {
    return Laws::seq({L.tau(1, 1), L.s(K::Mul)}) == L.s(K::Mul) ? "" : "differs";
  });
  L.check("cocommutativity tau comul = comul", [&]() -> std::string {
    return Laws::seq({L.s(K::Comul), L.tau(1, 1)}) == L.s(K::Comul) ? "" : "differs";
  });

  L.check("monoid laws", [&]() -> std::string {
    if (!(Laws::seq({Laws::par(L.s(K::Mul), L.id(1)), L.s(K::Mul)}) ==
          Laws::seq({Laws::par(L.id(1), L.s(K::Mul)), L.s(K::Mul)})))
      return "associativity fails";
    if (!(Laws::seq({Laws::par(L.s(K::Unit), L.id(1)), L.s(K::Mul)}) == L.id(1)) ||
        !(Laws::seq({Laws::par(L.id(1), L.s(K::Unit)), L.s(K::Mul)}) == L.id(1)))
      return "unit law fails";
    return "";
  });
  L.check("comonoid laws", [&]() -> std::string {
    if (!(Laws::seq({L.s(K::Comul), Laws::par(L.s(K::Comul), L.id(1))}) ==
          Laws::seq({L.s(K::Comul), Laws::par(L.id(1), L.s(K::Comul))})))
      return "coassociativity fails";
    if (!(Laws::seq({L.s(K::Comul), Laws::par(L.s(K::Counit), L.id(1))}) == L.id(1)) ||
        !(Laws::seq({L.s(K::Comul), Laws::par(L.id(1), L.s(K::Counit))}) == L.id(1)))
      return "counit law fails";
    return "";
  });

  L.check("cup and cap from the Frobenius structure", [&]() -> std::string {
    if (!(L.s(K::Cup) == Laws::seq({L.s(K::Unit), L.s(K::Comul)}))) return "cup differs from unit comul";
    if (!(L.s(K::Cap) == Laws::seq({L.s(K::Mul), L.s(K::Counit)}))) return "cap differs from mul counit";
    return "";
  });

  L.check("snake", [&]() -> std::string {
    GRelation a = Laws::seq({Laws::par(L.id(1), L.s(K::Cup)), Laws::par(L.s(K::Cap), L.id(1))});
    GRelation b = Laws::seq({Laws::par(L.s(K::Cup), L.id(1)), Laws::par(L.id(1), L.s(K::Cap))});
    if (!(a == L.id(1))) return "(cap x 1)(1 x cup) differs from id";
    if (!(b == L.id(1))) return "(1 x cap)(cup x 1) differs from id";
    return "";
  });

  L.check("cap tau = cap", [&]() -> std::string {
    return Laws::seq({L.tau(1, 1), L.s(K::Cap)}) == L.s(K::Cap) ? "" : "differs";
  });
  L.check("tau cup = cup", [&]() -> std::string {
    return Laws::seq({L.s(K::Cup), L.tau(1, 1)}) == L.s(K::Cup) ? "" : "differs";
  });

  L.check("tau with the unit object is the identity", [&]() -> std::string {
    for (std::size_t m = 0; m <= 2; ++m) {
      if (!(L.tau(m, 0) == L.id(m))) return "tau_{" + std::to_string(m) + ",0} differs from id";
      if (!(L.tau(0, m) == L.id(m))) return "tau_{0," + std::to_string(m) + "} differs from id";
    }
    return "";
  });

  L.check("tau then its inverse is the identity", [&]() -> std::string {
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; n <= 2; ++n) {
        if (!(Laws::seq({L.tau(m, n), L.tau_inv(n, m)}) == L.id(m + n)))
          return "fails at widths (" + std::to_string(m) + ", " + std::to_string(n) + ")";
        if (!(Laws::seq({L.tau_inv(m, n), L.tau(n, m)}) == L.id(m + n)))
          return "inverse first fails at widths (" + std::to_string(m) + ", " + std::to_string(n) + ")";
      }
    return "";
  });

  // Relations cannot see loops: comul;mul is the identity relation. The
  // span model counts the |G| ways round the loop.
  L.check("non-separability witness", [&]() -> std::string {
    GRelation loop = Laws::seq({L.s(K::Mul), L.s(K::Comul)});
    if (loop == L.id(2)) return "mul;comul equals id(X,X)";
    const FiniteSpan bubble = eval_span(Term::compose(Term::comul("X"), Term::mul("X")), *group);
    const FiniteSpan id = eval_span(Term::id({"X"}), *group);
    if (bubble == id && group->order() > 1) return "comul;mul span equals the identity span";
    return "";
  });

  return L.out;
}

}  // namespace tcd
