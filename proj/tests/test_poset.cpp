#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tbt/poset.hpp"
#include "tbt/sampling.hpp"

using namespace tbt;

namespace {
const ActionPtr kTwo = make_action("trivial:2");

Element x(int color) { return make_splitter(kTwo, Color(color)); }
Element id(int m) { return identity_elem(kTwo, m); }

bool coset_eq(const Element& a, const Element& b) {
  return coset_leq(a, b) && coset_leq(b, a);
}
}  // namespace

TEST_CASE("coset order on small forests") {
  Element deep = compose(direct_sum(x(1), x(2)), x(1));
  CHECK(coset_leq(x(1), x(1)));
  CHECK(coset_leq(id(1), x(1)));
  CHECK(coset_leq(x(1), deep));
  CHECK_FALSE(coset_leq(deep, x(1)));
  CHECK_FALSE(coset_leq(x(2), deep));

  // Ranks decide nothing by themselves: same partition, different leaf order.
  Element shuffled = compose(make_perm(kTwo, {2, 1}), x(1));
  CHECK(coset_eq(x(1), shuffled));
}

TEST_CASE("the coset order ignores twists") {
  auto a = make_action("c2");
  Element f = make_splitter(a, Color(1));
  Element tw = compose(twisted_perm_element(
                           a, {{2, 1}, {a->generators()[0], a->identity()}}),
                       f);
  CHECK(coset_leq(f, tw));
  CHECK(coset_leq(tw, f));
}

TEST_CASE("mixed-color full splits give the same partition through different trees") {
  Element by1 = compose(direct_sum(x(2), x(2)), x(1));
  Element by2 = compose(direct_sum(x(1), x(1)), x(2));
  CHECK(coset_eq(by1, by2));
}

TEST_CASE("elementary intervals cut each color at most once per leaf") {
  Element deep = compose(direct_sum(x(1), id(1)), x(1));
  CHECK(is_elementary_interval(x(1), deep));
  CHECK(is_elementary_interval(id(1), x(1)));
  CHECK_FALSE(is_elementary_interval(id(1), deep));
  CHECK(is_elementary_interval(x(1), x(1)));
  CHECK_FALSE(is_elementary_interval(deep, x(1)));

  // The full relative cross is elementary, one extra same-color cut is not.
  Element cross_below = compose(direct_sum(compose(direct_sum(x(2), x(2)), x(1)), x(2)), x(1));
  CHECK(is_elementary_interval(x(1), cross_below));
  Element twice = compose(direct_sum(deep, id(1)), x(1));
  CHECK_FALSE(is_elementary_interval(x(1), twice));
}

TEST_CASE("forest join is the common refinement") {
  Element j = forest_join(x(1), x(2));
  CHECK(j.rank() == 4);
  CHECK(coset_leq(x(1), j));
  CHECK(coset_leq(x(2), j));
  CHECK(coset_eq(j, compose(direct_sum(x(2), x(2)), x(1))));

  // Comparable pairs join to the finer one.
  Element deep = compose(direct_sum(x(1), x(2)), x(1));
  CHECK(coset_eq(forest_join(x(1), deep), deep));
  CHECK(coset_eq(forest_join(deep, deep), deep));
  CHECK(coset_eq(forest_join(id(1), x(2)), x(2)));
}

TEST_CASE("elementary core of an interval") {
  Element deep = compose(direct_sum(x(1), x(2)), x(1));
  // The right half of deep is cut once per color, so the core keeps that
  // whole subtree; only the left half's second color-1 cut is deferred.
  Element lshape = compose(direct_sum(id(1), x(2)), x(1));
  Element core = elementary_core(id(1), deep);
  CHECK(coset_eq(core, lshape));
  CHECK_FALSE(coset_eq(core, id(1)));
  CHECK_FALSE(coset_eq(core, x(1)));

  // From x(1), both children may take their one allowed split.
  Element core2 = elementary_core(x(1), deep);
  CHECK(coset_eq(core2, deep));
  CHECK_THROWS_AS(elementary_core(deep, deep), std::invalid_argument);
  CHECK_THROWS_AS(elementary_core(deep, x(1)), std::invalid_argument);
}

TEST_CASE("coset stabilizer detects twisted permutations only") {
  auto a = make_action("c2");
  Element f = make_splitter(a, Color(1));
  CHECK(stabilizes_coset(identity_elem(a, 1), f));

  // The half-swap conjugates to a plain permutation of the leaf cubes.
  Element half_swap = compose(invert(f), compose(make_perm(a, {2, 1}), f));
  CHECK(stabilizes_coset(half_swap, f));

  // The shift 00 -> 0, 01 -> 10, 1 -> 11 moves the breakpoint across the
  // halves, so its conjugate is no permutation of them.
  Element l = compose(direct_sum(make_splitter(a, Color(1)), identity_elem(a, 1)), f);
  Element r = compose(direct_sum(identity_elem(a, 1), make_splitter(a, Color(1))), f);
  Element shift = compose(invert(r), l);
  CHECK_FALSE(stabilizes_coset(shift, f));
  CHECK_THROWS_AS(stabilizes_coset(f, f), std::invalid_argument);
}

TEST_CASE("join and order are consistent on random forest pairs") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const int corank = 1 + int(rng() % 2);
    Element f = random_forest(kTwo, corank, corank + int(rng() % 4), rng);
    Element g = random_forest(kTwo, corank, corank + int(rng() % 4), rng);
    Element j = forest_join(f, g);
    CHECK(coset_leq(f, j));
    CHECK(coset_leq(g, j));
    CHECK(coset_eq(forest_join(g, f), j));
    CHECK(coset_eq(forest_join(f, f), f));
    if (coset_leq(f, g)) CHECK(coset_eq(j, g));
  }
}

TEST_CASE("order is transitive and antisymmetric on random chains") {
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    Element f = random_forest(kTwo, 1, 1 + int(rng() % 3), rng);
    Element j1 = forest_join(f, random_forest(kTwo, 1, 1 + int(rng() % 4), rng));
    Element j2 = forest_join(j1, random_forest(kTwo, 1, 1 + int(rng() % 4), rng));
    CHECK(coset_leq(f, j2));
    if (coset_leq(j2, f)) {
      CHECK(coset_eq(f, j1));
      CHECK(coset_eq(j1, j2));
    }
  }
}
