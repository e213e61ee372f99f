#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "tbt/element.hpp"
#include "tbt/poset.hpp"
#include "tbt/sampling.hpp"

using namespace tbt;

namespace {
PointPrefix pt(std::vector<std::pair<int, const char*>> entries, int cube = 1) {
  std::vector<std::pair<Color, BinaryWord>> es;
  for (const auto& [c, w] : entries) es.emplace_back(Color(c), BinaryWord(w));
  return PointPrefix(cube, std::move(es));
}
}  // namespace

TEST_CASE("basic constructors have the right shapes") {
  auto a = make_action("trivial:2");
  Element id2 = identity_elem(a, 2);
  CHECK(id2.rank() == 2);
  CHECK(id2.corank() == 2);
  CHECK(equal(id2, id2));

  Element x1 = make_splitter(a, Color(1));
  CHECK(x1.rank() == 2);
  CHECK(x1.corank() == 1);
  CHECK(is_forest(x1));
  CHECK(is_very_elementary_forest(x1));

  Element p = make_perm(a, {2, 1});
  CHECK(p.rank() == 2);
  CHECK(equal(compose(p, p), id2));
  CHECK_THROWS_AS(make_perm(a, {1, 1}), std::invalid_argument);

  auto c2 = make_action("c2");
  Element t = make_twist(c2, c2->generators()[0]);
  CHECK(t.rank() == 1);
  CHECK_FALSE(is_untwisted(t));
  CHECK(equal(compose(t, t), identity_elem(c2, 1)));
}

TEST_CASE("composition needs matching interfaces") {
  auto a = make_action("trivial:2");
  Element x1 = make_splitter(a, Color(1));
  CHECK_THROWS_AS(compose(x1, x1), std::invalid_argument);
  CHECK(equal(compose(invert(x1), x1), identity_elem(a, 1)));
  CHECK(equal(compose(x1, invert(x1)), identity_elem(a, 2)));
}

TEST_CASE("direct sum is a block map and distributes over composition") {
  auto a = make_action("trivial:2");
  Element x1 = make_splitter(a, Color(1)), x2 = make_splitter(a, Color(2));
  Element sum = direct_sum(x1, x2);
  CHECK(sum.rank() == 4);
  CHECK(sum.corank() == 2);
  Element lhs = compose(direct_sum(invert(x1), invert(x2)), sum);
  CHECK(equal(lhs, identity_elem(a, 2)));
}

TEST_CASE("equality sees through representation refinements") {
  auto a = make_action("trivial:2");
  Element id1 = identity_elem(a, 1);
  Element refined = compose(invert(make_splitter(a, Color(1))), make_splitter(a, Color(1)));
  CHECK(equal(id1, refined));
  CHECK(reduce(refined).str() == id1.str());
  Element x1 = make_splitter(a, Color(1));
  CHECK_FALSE(equal(x1, make_splitter(a, Color(2))));
  CHECK(equal(reduce(x1), x1));
}

TEST_CASE("random element round trips over every action") {
  for (const char* sel : {"trivial:3", "c2", "F", "houghton:3"}) {
    CAPTURE(sel);
    auto a = make_action(sel);
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
      Element h = random_element(a, 1 + int(rng() % 3), 1 + int(rng() % 3),
                                 4 + int(rng() % 3), rng);
      CHECK(equal(compose(invert(h), h), identity_elem(a, h.corank())));
      CHECK(equal(compose(h, invert(h)), identity_elem(a, h.rank())));
      Element back = Element::parse(a, h.str());
      CHECK(equal(back, h));
      CHECK(equal(reduce(h), h));
    }
  }
}

TEST_CASE("twisted permutation decomposition round trips") {
  auto a = make_action("c2");
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    TwistedPermutation t = random_twisted_perm(a, 1 + int(rng() % 4), rng);
    Element h = twisted_perm_element(a, t);
    auto back = as_twisted_permutation(h);
    REQUIRE(back.has_value());
    CHECK(back->perm == t.perm);
    CHECK(back->twists == t.twists);
  }
  CHECK_FALSE(as_twisted_permutation(make_splitter(a, Color(1))).has_value());
}

TEST_CASE("germinal twists of a localized twist") {
  auto a = make_action("c2");
  GroupElem s = a->generators()[0];
  Element x1 = make_splitter(a, Color(1));
  Element loc = compose(invert(x1), compose(direct_sum(identity_elem(a, 1), make_twist(a, s)), x1));
  CHECK(germinal_twist(loc, pt({{1, "0"}})) == a->identity());
  CHECK(germinal_twist(loc, pt({{1, "1"}})) == s);
  CHECK(germinal_twist(loc, pt({{1, "11"}, {2, "0"}})) == s);
  auto set = germinal_twist_set(loc);
  CHECK(set.size() == 2);
  CHECK(std::count(set.begin(), set.end(), s) == 1);
  CHECK_FALSE(is_untwisted(loc));
  CHECK(is_untwisted(x1));
}

TEST_CASE("germinal twist is a cocycle over composition") {
  for (const char* sel : {"c2", "F", "houghton:3"}) {
    CAPTURE(sel);
    auto a = make_action(sel);
    Rng rng(17);
    for (int i = 0; i < 60; ++i) {
      Element h1 = random_group_element(a, rng), h2 = random_group_element(a, rng);
      PointPrefix kappa =
          PointPrefix(1, {{a->random_color(rng), BinaryWord("10")}});
      GroupElem left = germinal_twist(compose(h2, h1), kappa);
      GroupElem right =
          a->multiply(germinal_twist(h2, apply_point(h1, kappa)), germinal_twist(h1, kappa));
      CHECK(left == right);
    }
  }
}

TEST_CASE("points travel with the element") {
  auto a = make_action("trivial:2");
  Element x1 = make_splitter(a, Color(1));
  PointPrefix zero = pt({});
  PointPrefix image = apply_point(x1, zero);
  CHECK(image.cube == 1);
  CHECK(same_point(image, pt({})));
  PointPrefix one = apply_point(x1, pt({{1, "1"}}));
  CHECK(one.cube == 2);
  PointPrefix back = apply_point(invert(x1), one);
  CHECK(back.cube == 1);
  CHECK(same_point(back, pt({{1, "1"}})));
}

TEST_CASE("spectrum is the least color support") {
  auto a = make_action("trivial:4");
  Element x1 = make_splitter(a, Color(1)), x2 = make_splitter(a, Color(2));
  Element x3 = make_splitter(a, Color(3)), x4 = make_splitter(a, Color(4));
  CHECK(spectrum(identity_elem(a, 1)).empty());
  CHECK(spectrum(x1) == std::vector<Color>{Color(1)});
  Element mid = direct_sum(compose(direct_sum(x1, identity_elem(a, 1)), x2), x3);
  Element h = compose(make_perm(a, {1, 3, 5, 4, 2}), compose(mid, x4));
  CHECK(spectrum(h) == std::vector<Color>{Color(1), Color(2), Color(3), Color(4)});
  // A redundant split and its unsplit both leave the support.
  Element noisy = compose(invert(x2), x2);
  CHECK(spectrum(noisy).empty());
  CHECK_THROWS_AS(spectrum(make_twist(make_action("c2"), make_action("c2")->generators()[0])),
                  std::invalid_argument);
}

TEST_CASE("special spectrum keeps only the everywhere-altered colors") {
  auto a = make_action("trivial:2");
  Element x1 = make_splitter(a, Color(1)), x2 = make_splitter(a, Color(2));
  CHECK(special_spectrum(x1) == std::vector<Color>{Color(1)});
  // Split by 1, then only the left child by 2: color 2 is not altered on the
  // right leaf, color 1 is altered on every leaf.
  Element f = compose(direct_sum(x2, identity_elem(a, 1)), x1);
  CHECK(special_spectrum(f) == std::vector<Color>{Color(1)});
  CHECK(spectrum(f) == std::vector<Color>{Color(1), Color(2)});
}

TEST_CASE("weight bookkeeping of a forest") {
  auto a = make_action("trivial:2");
  Element x1 = make_splitter(a, Color(1)), x2 = make_splitter(a, Color(2));
  Element f = direct_sum(compose(direct_sum(x2, identity_elem(a, 1)), x1), identity_elem(a, 1));
  // Cube 1 carries three leaves, cube 2 carries one.
  CHECK(weight_multiplicities(f, 4) == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("element parser rejects malformed serializations") {
  auto a = make_action("trivial:2");
  CHECK_THROWS_AS(Element::parse(a, "EL{1;1;}"), std::invalid_argument);
  CHECK_THROWS_AS(Element::parse(a, "nonsense"), std::invalid_argument);
  // Overlapping domain bricks do not form a partition.
  CHECK_THROWS_AS(
      Element::parse(a, "EL{2;1; (B[1]{} -> B[1]{} : e), (B[1]{1=0} -> B[2]{} : e)}"),
      std::invalid_argument);
}
