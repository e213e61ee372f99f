#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "tbt/action.hpp"

using namespace tbt;

namespace {
Color dy(std::int64_t n, int e) { return Color(Dyadic(n, e)); }

// Group laws plus compatibility of apply with multiplication, on random data.
void check_action_laws(const ActionPtr& a, int trials) {
  Rng rng(42);
  for (int i = 0; i < trials; ++i) {
    GroupElem g = a->random_elem(rng), h = a->random_elem(rng), k = a->random_elem(rng);
    CHECK(a->multiply(a->multiply(g, h), k) == a->multiply(g, a->multiply(h, k)));
    CHECK(a->multiply(g, a->invert(g)) == a->identity());
    CHECK(a->multiply(a->invert(g), g) == a->identity());
    CHECK(a->invert(a->invert(g)) == g);
    Color s = a->random_color(rng);
    CHECK(a->apply(a->multiply(g, h), s) == a->apply(g, a->apply(h, s)));
    CHECK(a->apply(a->invert(g), a->apply(g, s)) == s);
    CHECK(a->contains_color(s));
  }
}

void check_text_round_trips(const ActionPtr& a, int trials) {
  Rng rng(7);
  for (int i = 0; i < trials; ++i) {
    GroupElem g = a->random_elem(rng);
    auto back = a->parse_elem(a->format_elem(g));
    REQUIRE(back.has_value());
    CHECK(*back == g);
    auto tagged = a->parse_elem_tagged(a->format_elem_tagged(g));
    REQUIRE(tagged.has_value());
    CHECK(*tagged == g);
    Color s = a->random_color(rng);
    auto sc = a->parse_color(a->format_color(s));
    REQUIRE(sc.has_value());
    CHECK(*sc == s);
  }
}
}  // namespace

TEST_CASE("action factory selectors") {
  CHECK(make_action("trivial:3")->name() == "trivial:3");
  CHECK(make_action("c2")->name() == "c2");
  CHECK(make_action("F")->name() == "F");
  CHECK(make_action("houghton:3")->name() == "houghton:3");
  CHECK_THROWS_AS(make_action("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_action("trivial:0"), std::invalid_argument);
}

TEST_CASE("group laws and apply compatibility for every bundled action") {
  for (const char* sel : {"trivial:3", "c2", "F", "houghton:3"}) {
    CAPTURE(sel);
    check_action_laws(make_action(sel), 60);
    check_text_round_trips(make_action(sel), 30);
  }
}

TEST_CASE("trivial action fixes every color") {
  auto a = make_action("trivial:4");
  Rng rng(1);
  CHECK(a->identity() == a->random_elem(rng));
  for (int i = 1; i <= 4; ++i) CHECK(a->apply(a->identity(), Color(i)) == Color(i));
  CHECK(a->orbit_representatives().size() == 4);
  CHECK(a->generators().empty());
  CHECK_FALSE(a->contains_color(Color(5)));
}

TEST_CASE("order-two action swaps the two colors") {
  auto a = make_action("c2");
  GroupElem s = a->generators().at(0);
  CHECK(a->apply(s, Color(1)) == Color(2));
  CHECK(a->apply(s, Color(2)) == Color(1));
  CHECK(a->multiply(s, s) == a->identity());
  CHECK(a->invert(s) == s);
  CHECK(a->format_elem(s) == "s");
  CHECK(a->format_elem(a->identity()) == "e");
  CHECK(a->orbit_representatives() == std::vector<Color>{Color(1)});
}

TEST_CASE("piecewise dyadic generators act by the standard slopes") {
  auto a = make_action("F");
  GroupElem x0 = a->generators().at(0), x1 = a->generators().at(1);
  CHECK(a->apply(x0, dy(1, 1)) == dy(1, 2));
  CHECK(a->apply(x0, dy(3, 2)) == dy(1, 1));
  CHECK(a->apply(x0, dy(7, 3)) == dy(3, 2));
  CHECK(a->apply(x1, dy(1, 1)) == dy(1, 1));
  CHECK(a->apply(x1, dy(3, 2)) == dy(5, 3));
  CHECK(a->apply(x1, dy(7, 3)) == dy(3, 2));
  CHECK(a->apply(a->invert(x0), dy(1, 2)) == dy(1, 1));
  CHECK(a->orbit_representatives() == std::vector<Color>{dy(1, 1)});
}

TEST_CASE("piecewise dyadic arithmetic survives interval-straddling products") {
  // Regression: a breakpoint-free affine piece may carry a standard dyadic
  // interval onto a non-standard one, which the tree-pair rebuild must split.
  auto a = make_action("F");
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    GroupElem g = a->random_elem(rng), h = a->random_elem(rng);
    GroupElem p = a->multiply(g, h);
    CHECK(a->multiply(p, a->invert(h)) == g);
    CHECK(a->multiply(a->identity(), p) == p);
  }
}

TEST_CASE("ray translations and their exceptional points") {
  auto a = make_action("houghton:3");
  auto gens = a->generators();
  REQUIRE(gens.size() == 3);
  GroupElem g2 = gens[0], t = gens[2];
  auto ray = [](int r, std::int64_t i) { return Color(RayPoint{r, i}); };
  CHECK(a->apply(g2, ray(1, 0)) == ray(2, 0));
  CHECK(a->apply(g2, ray(1, 5)) == ray(1, 4));
  CHECK(a->apply(g2, ray(2, 0)) == ray(2, 1));
  CHECK(a->apply(g2, ray(3, 2)) == ray(3, 2));
  CHECK(a->apply(t, ray(1, 0)) == ray(1, 1));
  CHECK(a->apply(t, ray(1, 1)) == ray(1, 0));
  CHECK(a->multiply(t, t) == a->identity());

  // Offsets of any product sum to zero and the exceptional list stays
  // canonical, so structural equality is group equality.
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    GroupElem g = a->multiply(a->random_elem(rng), a->random_elem(rng));
    const auto& he = g.as<HoughtonElem>();
    std::int64_t total = 0;
    for (auto o : he.offsets) total += o;
    CHECK(total == 0);
    for (std::size_t j = 1; j < he.except.size(); ++j)
      CHECK(he.except[j - 1].first < he.except[j].first);
  }
}

TEST_CASE("payloads are rejected across actions") {
  auto c2 = make_action("c2");
  auto f = make_action("F");
  Rng rng(3);
  GroupElem g = f->random_elem(rng);
  CHECK_THROWS_AS(g.as<HoughtonElem>(), std::invalid_argument);
  CHECK_FALSE(c2->parse_elem("nope").has_value());
  CHECK_FALSE(c2->parse_color("0").has_value());
  CHECK_FALSE(f->parse_color("5/3").has_value());
}
