#include <catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "support/circuits.hpp"
#include "support/random_tangles.hpp"
#include "tcd/errors.hpp"
#include "tcd/knotgroup.hpp"
#include "tcd/span.hpp"

using namespace tcd;

namespace {

// Counts homomorphisms by trying every assignment of the generators.
std::uint64_t brute_hom_count(const Presentation& p, const FiniteGroup& g) {
  const std::size_t n = p.generators.size();
  std::vector<Elem> x(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      for (const auto& r : p.relators) {
        Elem v = 0;
        for (int letter : r) {
          const Elem e = x[static_cast<std::size_t>(std::abs(letter)) - 1];
          v = g.mul(v, letter > 0 ? e : g.inv(e));
        }
        if (v != 0) return;
      }
      ++count;
      return;
    }
    for (std::size_t a = 0; a < g.order(); ++a) {
      x[k] = static_cast<Elem>(a);
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

Presentation trefoil() { return eval_presentation(test::circuit_term("trefoil.tcd")); }

// The hand-derived Wirtinger-style listing for the trefoil drawing.
Presentation hand_trefoil() {
  return parse_presentation(
      "< a, b, c, d, e, f, g, h, j, k | a b, b F, b e F C, c H, c g H D, a d, e j, j G, f j K G, h k >");
}

}  // namespace

TEST_CASE("structure cospans") {
  const auto pos = structure_cospan(CospanKind::BraidPos);
  CHECK(pos.left == std::vector<GroupWord>{{1}, {2}});
  CHECK(pos.right == std::vector<GroupWord>{{1, 2, -1}, {1}});
  const auto neg = structure_cospan(CospanKind::BraidNeg);
  CHECK(neg.right == std::vector<GroupWord>{{2}, {-2, 1, 2}});
  const auto cup = structure_cospan(CospanKind::Cup);
  CHECK(cup.left.empty());
  CHECK(cup.presentation.relators == std::vector<GroupWord>{{1, 2}});
  const auto unknot = compose_cospans(cup, structure_cospan(CospanKind::Cap));
  CHECK(unknot.left.empty());
  CHECK(unknot.right.empty());
  const GroupPtr s3 = make_builtin_group("S3");
  CHECK(hom_count(unknot.presentation, *s3) == 6);
  const auto two = tensor_cospans(pos, neg);
  CHECK(two.presentation.generators.size() == 4);
  CHECK(two.left.size() == 4);
}

TEST_CASE("word reductions") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == GroupWord{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == GroupWord{2, 3});
  CHECK(inverse_word({1, -2, 3}) == GroupWord{-3, 2, -1});
  CHECK(cyclically_equivalent({1, 2, 3}, {3, 1, 2}));
  CHECK(cyclically_equivalent({1, 2, 3}, {-2, -1, -3}));
  CHECK_FALSE(cyclically_equivalent({1, 2, 3}, {1, 3, 2}));
}

TEST_CASE("presentation text round trip") {
  const Presentation p = parse_presentation("⟨ a, b | a b A B, a a ⟩");
  CHECK(p.generators == std::vector<std::string>{"a", "b"});
  CHECK(p.relators == std::vector<GroupWord>{{1, 2, -1, -2}, {1, 1}});
  CHECK(parse_presentation(render(p)) == p);
  CHECK(render(parse_presentation("<a|>")) == "⟨ a | ⟩");
  CHECK_THROWS_AS(parse_presentation("a, b | a"), SyntaxError);
  CHECK_THROWS_AS(parse_presentation("< a | q >"), UnknownName);
}

TEST_CASE("trefoil presentation agrees with the hand listing") {
  const Presentation raw = trefoil();
  const Presentation hand = hand_trefoil();
  CHECK(hand.generators.size() == 10);
  for (const char* name : {"C2", "C3", "S3", "D4", "S4"}) {
    const GroupPtr g = make_builtin_group(name);
    INFO(name);
    CHECK(hom_count(raw, *g) == hom_count(hand, *g));
  }
  const GroupPtr s3 = make_builtin_group("S3");
  CHECK(hom_count(raw, *s3) == 12);
  CHECK(hom_count(hand, *s3) == 12);
}

TEST_CASE("trefoil simplifies to the two-generator form") {
  const Presentation s = tietze_simplify(trefoil());
  REQUIRE(s.generators.size() == 2);
  REQUIRE(s.relators.size() == 1);
  // aba = bab, up to rotation, inversion and swapping the generators.
  const GroupWord braid_rel{1, 2, 1, -2, -1, -2};
  const GroupWord swapped{2, 1, 2, -1, -2, -1};
  CHECK((cyclically_equivalent(s.relators[0], braid_rel) || cyclically_equivalent(s.relators[0], swapped)));
  const GroupPtr s3 = make_builtin_group("S3"), c2 = make_builtin_group("C2");
  CHECK(hom_count(s, *s3) == 12);
  CHECK(brute_hom_count(s, *s3) == 12);
  CHECK(hom_count(s, *c2) == 2);
  CHECK(hom_count(trefoil(), *c2) == 2);
}

TEST_CASE("unknot and unlink simplify to free groups") {
  const Presentation u = tietze_simplify(eval_presentation(test::circuit_term("unknot.tcd")));
  CHECK(u.generators.size() == 1);
  CHECK(u.relators.empty());
  CHECK(hom_count(u, *make_builtin_group("S3")) == 6);
  const Presentation two = tietze_simplify(eval_presentation(test::circuit_term("two_unknots.tcd")));
  CHECK(two.generators.size() == 2);
  CHECK(two.relators.empty());
}

TEST_CASE("a single generator eliminated by x y") {
  const Presentation s = tietze_simplify(parse_presentation("< x, y | x y >"));
  CHECK(s.generators.size() == 1);
  CHECK(s.relators.empty());
}

TEST_CASE("abelian targets see only the components") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const GroupPtr g = make_builtin_group("C" + std::to_string(n));
    INFO(n);
    CHECK(hom_count(trefoil(), *g) == n);
    CHECK(hom_count(eval_presentation(test::circuit_term("unknot.tcd")), *g) == n);
    CHECK(hom_count(eval_presentation(test::circuit_term("two_unknots.tcd")), *g) == n * n);
  }
}

TEST_CASE("hom counts match brute force on simplified presentations") {
  std::mt19937 rng(41);
  const GroupPtr s3 = make_builtin_group("S3");
  for (int i = 0; i < 30; ++i) {
    const Presentation s = tietze_simplify(eval_presentation(test::random_tangle(rng, 8)));
    if (s.generators.size() > 4) continue;
    CHECK(hom_count(s, *s3) == brute_hom_count(s, *s3));
  }
}

TEST_CASE("simplification preserves hom counts") {
  std::mt19937 rng(42);
  for (int i = 0; i < 30; ++i) {
    const Presentation raw = eval_presentation(test::random_tangle(rng, 8));
    const Presentation s = tietze_simplify(raw);
    CHECK(s.generators.size() <= raw.generators.size());
    for (const char* name : {"C2", "C3", "S3"}) {
      const GroupPtr g = make_builtin_group(name);
      REQUIRE(hom_count(raw, *g) == hom_count(s, *g));
    }
  }
}

TEST_CASE("hom counts equal coloring counts") {
  std::mt19937 rng(43);
  for (const char* name : {"S3", "D4"}) {
    const GroupPtr g = make_builtin_group(name);
    for (const char* file : test::kKnotFiles) {
      const Term t = test::circuit_term(file);
      CHECK(hom_count(eval_presentation(t), *g) == eval_colorings(t, *g));
    }
    for (int i = 0; i < 20; ++i) {
      const Term t = test::random_tangle(rng, 6, 6);
      REQUIRE(hom_count(eval_presentation(t), *g) == eval_colorings(t, *g));
    }
  }
}

TEST_CASE("a cancelling twist pair leaves the counts alone") {
  const Term base = test::circuit_term("unknot.tcd");
  const Term twisted = Term::compose_all({Term::cup("X"), Term::braid({"X"}, {"X"}),
                                          Term::braid_inv({"X"}, {"X"}), Term::cap("X")});
  for (const char* name : {"C3", "S3", "D4"}) {
    const GroupPtr g = make_builtin_group(name);
    CHECK(hom_count(eval_presentation(twisted), *g) == hom_count(eval_presentation(base), *g));
  }
  const Presentation s = tietze_simplify(eval_presentation(twisted));
  CHECK(s.generators.size() == 1);
  CHECK(s.relators.empty());
}

TEST_CASE("search budget and input errors") {
  const GroupPtr s3 = make_builtin_group("S3");
  CHECK_THROWS_AS(hom_count(parse_presentation("< a, b, c, d, e | >"), *s3, 100), BudgetExceeded);
  CHECK(hom_count(parse_presentation("< a, b, c | >"), *s3) == 216);
  CHECK_THROWS_AS(eval_presentation(Term::cup("X")), NotClosed);
  CHECK_THROWS_AS(eval_presentation(Term::compose(Term::gen("R"), Term::gen("S"))), HasComponents);
}
