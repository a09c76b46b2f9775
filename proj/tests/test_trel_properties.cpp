#include <catch_amalgamated.hpp>

#include <random>

#include "support/braid_words.hpp"
#include "support/random_relations.hpp"
#include "tcd/trel.hpp"

using namespace tcd;
using namespace tcd::test;

namespace {

GRelation seq(std::initializer_list<GRelation> rs) {
  auto it = rs.begin();
  GRelation acc = *it++;
  for (; it != rs.end(); ++it) acc = compose_relations(acc, *it);
  return acc;
}

GRelation par(std::initializer_list<GRelation> rs) {
  auto it = rs.begin();
  GRelation acc = *it++;
  for (; it != rs.end(); ++it) acc = tensor_relations(acc, *it);
  return acc;
}

GRelation id(const GroupPtr& g, std::size_t n) { return identity_relation(g, n); }
GRelation tau(const GroupPtr& g, std::size_t m, std::size_t n) { return braid_relation(g, m, n, +1); }
GRelation tau_inv(const GroupPtr& g) { return braid_relation(g, 1, 1, -1); }

const std::vector<GroupPtr>& groups() {
  static const std::vector<GroupPtr> gs{make_builtin_group("S3"), make_builtin_group("D4")};
  return gs;
}

}  // namespace

TEST_CASE("naturality of the braid in validated relations") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> width(0, 2);
  for (const auto& g : groups()) {
    for (int i = 0; i < 100; ++i) {
      const std::size_t a = width(rng), b = width(rng);
      const GRelation r = random_relation(g, a, b, rng);
      // τ_{X,A} ; (R ⊗ 1) = (1 ⊗ R) ; τ_{X,B}
      REQUIRE(seq({tau(g, 1, a), par({r, id(g, 1)})}) == seq({par({id(g, 1), r}), tau(g, 1, b)}));
      // (R ⊗ 1) ; τ_{B,X} = τ_{A,X} ; (1 ⊗ R)
      REQUIRE(seq({par({r, id(g, 1)}), tau(g, b, 1)}) == seq({tau(g, a, 1), par({id(g, 1), r})}));
    }
  }
}

TEST_CASE("a single twist into a component can be reversed") {
  std::mt19937 rng(202);
  for (const auto& g : groups())
    for (int i = 0; i < 100; ++i) {
      const GRelation r = random_relation(g, 2, 0, rng);
      REQUIRE(seq({tau(g, 1, 1), r}) == seq({tau_inv(g), r}));
    }
}

TEST_CASE("an even number of twists between two components vanishes") {
  std::mt19937 rng(303);
  for (const auto& g : groups())
    for (int i = 0; i < 100; ++i) {
      const GRelation r = random_relation(g, 0, 2, rng);
      const GRelation s = random_relation(g, 2, 0, rng);
      const GRelation plain = seq({r, s});
      GRelation twisted = r;
      for (int n = 1; n <= 3; ++n) {
        twisted = seq({twisted, tau(g, 1, 1), tau(g, 1, 1)});
        REQUIRE(seq({twisted, s}) == plain);
      }
    }
}

TEST_CASE("flash example: loops through cups equal a double twist") {
  std::mt19937 rng(404);
  for (const auto& g : groups())
    for (int i = 0; i < 50; ++i) {
      const GRelation r = random_relation(g, 0, 2, rng);
      const GRelation s = random_relation(g, 2, 0, rng);
      const GRelation cup = structure_relation(StructureKind::Cup, g);
      const GRelation cap = structure_relation(StructureKind::Cap, g);
      const GRelation lhs = seq({r, par({id(g, 2), cup, cup}), par({id(g, 1), tau_inv(g), tau_inv(g), id(g, 1)}),
                                 par({cap, cap, id(g, 2)}), s});
      const GRelation rhs = seq({r, tau(g, 1, 1), tau(g, 1, 1), s});
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("three wires: the composite depends only on the permutation") {
  std::mt19937 rng(505);
  const GroupPtr g = make_builtin_group("S3");
  for (int i = 0; i < 100; ++i) {
    const GRelation r = random_relation(g, 0, 3, rng);
    const GRelation s = random_relation(g, 3, 0, rng);
    for (int j = 0; j < 10; ++j) {
      const BraidWord w1 = random_word(rng, 6);
      const BraidWord w2 = same_permutation(w1, rng);
      REQUIRE(permutation_of(w1) == permutation_of(w2));
      REQUIRE(seq({r, word_relation(g, w1), s}) == seq({r, word_relation(g, w2), s}));
    }
  }
}

TEST_CASE("different permutations can differ") {
  std::mt19937 rng(808);
  const GroupPtr g = make_builtin_group("S3");
  bool found = false;
  for (int i = 0; i < 200 && !found; ++i) {
    const GRelation r = random_relation(g, 0, 3, rng);
    const GRelation s = random_relation(g, 3, 0, rng);
    found = seq({r, s}) != seq({r, word_relation(g, {1}), s});
  }
  CHECK(found);
}

TEST_CASE("composites and tensors of validated relations are validated") {
  std::mt19937 rng(606);
  std::uniform_int_distribution<std::size_t> width(0, 2);
  for (const auto& g : groups())
    for (int i = 0; i < 100; ++i) {
      const std::size_t a = width(rng), b = width(rng), c = width(rng);
      const GRelation r = random_relation(g, a, b, rng);
      const GRelation s = random_relation(g, b, c, rng);
      REQUIRE_FALSE(validate_relation(r));
      REQUIRE_FALSE(validate_relation(compose_relations(r, s)));
      REQUIRE_FALSE(validate_relation(tensor_relations(r, s)));
      REQUIRE_FALSE(validate_relation(tau(g, a, b)));
    }
}

TEST_CASE("composition is associative") {
  std::mt19937 rng(707);
  std::uniform_int_distribution<std::size_t> width(0, 2);
  for (const auto& g : groups())
    for (int i = 0; i < 100; ++i) {
      const std::size_t a = width(rng), b = width(rng), c = width(rng), d = width(rng);
      const GRelation r = random_relation(g, a, b, rng);
      const GRelation s = random_relation(g, b, c, rng);
      const GRelation t = random_relation(g, c, d, rng);
      REQUIRE(seq({seq({r, s}), t}) == seq({r, seq({s, t})}));
    }
}

TEST_CASE("a one-symbol data alphabet agrees with plain mode") {
  const Alphabet single{"x"};
  for (const auto& g : groups()) {
    for (auto k : {StructureKind::Mul, StructureKind::Comul, StructureKind::Unit, StructureKind::Counit,
                   StructureKind::Cup, StructureKind::Cap})
      CHECK(structure_relation(k, g, single).rows() == structure_relation(k, g).rows());
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; n <= 2; ++n)
        for (int sign : {+1, -1}) {
          const std::vector<Alphabet> am(m, single), an(n, single);
          CHECK(braid_relation(g, am, an, sign).rows() == braid_relation(g, m, n, sign).rows());
        }
  }
}

TEST_CASE("decorated relations satisfy the braided laws") {
  const Alphabet ab{"a", "b"};
  const GroupPtr g = make_builtin_group("S3");
  const std::vector<Alphabet> one{ab}, two{ab, ab};
  const GRelation t11 = braid_relation(g, one, one, +1);
  const GRelation i1 = identity_relation(g, one);
  // Yang-Baxter
  const GRelation x = tensor_relations(t11, i1), y = tensor_relations(i1, t11);
  CHECK(seq({x, y, x}) == seq({y, x, y}));
  // B1 at widths (1, 1, 1)
  CHECK(braid_relation(g, one, two, +1) == seq({x, y}));
  // Inverse
  CHECK(compose_relations(t11, braid_relation(g, one, one, -1)) == identity_relation(g, two));
  CHECK_FALSE(validate_relation(t11));
  CHECK_FALSE(validate_relation(structure_relation(StructureKind::Cup, g, ab)));
  // Commutativity of mul with data
  const GRelation mul = structure_relation(StructureKind::Mul, g, ab);
  CHECK(compose_relations(t11, mul) == mul);
}
