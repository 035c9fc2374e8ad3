#include <doctest.h>

#include "cocharlab/character.hpp"

using namespace cocharlab;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
CharacterSum irr(std::vector<int> v) {
  return CharacterSum::irreducible(P(std::move(v)));
}

}  // namespace

TEST_CASE("single-box LR products") {
  CharacterSum r = lr_product(irr({1}), irr({1}));
  CHECK(r.multiplicity(P({2})) == 1);
  CHECK(r.multiplicity(P({1, 1})) == 1);
  CHECK(r.terms().size() == 2);
}

TEST_CASE("horizontal-strip products") {
  // (1,1)*(2): (2,2) excluded, the added boxes would share a column
  CharacterSum r = lr_product(irr({1, 1}), irr({2}));
  CHECK(r.multiplicity(P({3, 1})) == 1);
  CHECK(r.multiplicity(P({2, 1, 1})) == 1);
  CHECK(r.terms().size() == 2);

  CharacterSum s = lr_product(irr({2}), irr({2}));
  CHECK(s.multiplicity(P({4})) == 1);
  CHECK(s.multiplicity(P({3, 1})) == 1);
  CHECK(s.multiplicity(P({2, 2})) == 1);
  CHECK(s.terms().size() == 3);
}

TEST_CASE("induce_product_chain") {
  std::vector<CharacterSum> two{irr({1}), irr({1})};
  CharacterSum r2 = induce_product_chain(two);
  CHECK(r2.multiplicity(P({2})) == 1);
  CHECK(r2.multiplicity(P({1, 1})) == 1);

  // degree-3 regular representation: multiplicities are hook dimensions
  std::vector<CharacterSum> three{irr({1}), irr({1}), irr({1})};
  CharacterSum r3 = induce_product_chain(three);
  CHECK(r3.multiplicity(P({3})) == 1);
  CHECK(r3.multiplicity(P({2, 1})) == 2);
  CHECK(r3.multiplicity(P({1, 1, 1})) == 1);

  // unit element
  CharacterSum x = lr_product(CharacterSum::unit(), irr({3, 1}));
  CHECK(x == irr({3, 1}));
}

TEST_CASE("regular character has hook-dimension multiplicities") {
  for (int k = 0; k <= 6; ++k) {
    CharacterSum reg = regular_character(k);
    for (const Partition& lam : partitions_of(k))
      CHECK(reg.multiplicity(lam) == hook_dimension(lam));
  }
}

TEST_CASE("Pieri fast path equals the general LR rule") {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (int k = 0; k <= 4; ++k) {
        CHECK(pieri_row(lam, k) == lr_expand_general(lam, Partition::row(k)));
        CHECK(pieri_column(lam, k) ==
              lr_expand_general(lam, Partition::column(k)));
      }
    }
  }
}

TEST_CASE("LR dimension multiplicativity") {
  // dim(a*b) = C(p+q,p) dim(a) dim(b) on a spread of shapes
  std::vector<Partition> shapes{P({2, 1}), P({3, 2}), P({2, 2, 1}), P({1, 1, 1}),
                                P({4}), P({3, 1, 1})};
  for (const Partition& a : shapes)
    for (const Partition& b : shapes) {
      CharacterSum prod =
          lr_product(CharacterSum::irreducible(a), CharacterSum::irreducible(b));
      Int expect = binomial(a.weight() + b.weight(), a.weight()) *
                   hook_dimension(a) * hook_dimension(b);
      CHECK(prod.total_dimension() == expect);
    }
}

TEST_CASE("LR associativity on a sample") {
  std::vector<Partition> shapes{P({2, 1}), P({1, 1}), P({2})};
  for (const Partition& a : shapes)
    for (const Partition& b : shapes)
      for (const Partition& c : shapes) {
        CharacterSum ab_c = lr_product(
            lr_product(CharacterSum::irreducible(a), CharacterSum::irreducible(b)),
            CharacterSum::irreducible(c));
        CharacterSum a_bc = lr_product(
            CharacterSum::irreducible(a),
            lr_product(CharacterSum::irreducible(b), CharacterSum::irreducible(c)));
        CHECK(ab_c == a_bc);
      }
}

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(mn_character_value(P({4}), P({2, 1, 1})) == 1);
  CHECK(mn_character_value(P({1, 1}), P({2})) == -1);
  CHECK(mn_character_value(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK_THROWS_AS(mn_character_value(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("MN at the identity equals the hook dimension") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lam : partitions_of(n))
      CHECK(mn_character_value(lam, Partition::column(n)) ==
            hook_dimension(lam));
}

TEST_CASE("MN orthogonality up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    auto classes = partitions_of(n);
    for (const Partition& a : classes)
      for (const Partition& b : classes) {
        Int total = 0;
        for (const Partition& mu : classes)
          total += conjugacy_class_size(mu) * mn_character_value(a, mu) *
                   mn_character_value(b, mu);
        CHECK(total == (a == b ? factorial(n) : Int(0)));
      }
  }
}

TEST_CASE("decompose_class_function") {
  // regular representation of degree 2
  std::map<CycleType, Rat> reg2{{P({1, 1}), Rat(2)}, {P({2}), Rat(0)}};
  CharacterSum r = decompose_class_function(2, reg2);
  CHECK(r.multiplicity(P({2})) == 1);
  CHECK(r.multiplicity(P({1, 1})) == 1);

  // the MN values of chi_(2,1)
  std::map<CycleType, Rat> v{{P({1, 1, 1}), Rat(2)}, {P({2, 1}), Rat(0)},
                             {P({3}), Rat(-1)}};
  CharacterSum s = decompose_class_function(3, v);
  CHECK(s == CharacterSum::irreducible(P({2, 1})));

  std::map<CycleType, Rat> zero{{P({1, 1}), Rat(0)}, {P({2}), Rat(0)}};
  CHECK(decompose_class_function(2, zero).is_zero());

  // a non-character must be rejected
  std::map<CycleType, Rat> bad{{P({1, 1}), Rat(1)}, {P({2}), Rat(0)}};
  CHECK_THROWS_AS(decompose_class_function(2, bad), NotACharacter);
}

TEST_CASE("decompose inverts class-function construction for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    auto classes = partitions_of(n);
    // a mildly lumpy character sum: multiplicity = 1 + (index mod 3)
    CharacterSum c(n);
    int i = 0;
    for (const Partition& lam : partitions_of(n)) c.add(lam, 1 + (i++ % 3));
    std::map<CycleType, Rat> values;
    for (const Partition& mu : classes) {
      Rat v = 0;
      for (const auto& [lam, mult] : c.terms())
        v += Rat(mult * mn_character_value(lam, mu));
      values[mu] = v;
    }
    CHECK(decompose_class_function(n, values) == c);
  }
}

TEST_CASE("lemma-4.1-shaped LR sums stay nonnegative") {
  for (int n = 2; n <= 12; ++n) {
    CharacterSum acc(n);
    for (int l = 1; l <= n - 1; ++l)
      acc += lr_product(CharacterSum::irreducible(P({l, 1})),
                        CharacterSum::irreducible(Partition::row(n - l - 1)));
    for (const auto& [lam, mult] : acc.terms()) CHECK(mult > 0);
  }
}
