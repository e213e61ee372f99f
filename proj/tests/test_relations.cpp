#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tbt/partition.hpp"
#include "tbt/relations.hpp"
#include "tbt/sampling.hpp"

using namespace tbt;

TEST_CASE("the eight relation families hold over every bundled action") {
  for (const char* sel : {"trivial:3", "c2", "F", "houghton:3"}) {
    CAPTURE(sel);
    auto results = run_relation_suite(make_action(sel), 120, 99);
    REQUIRE(results.size() == 8);
    for (const auto& r : results) {
      CAPTURE(r.name);
      CHECK(r.trials == 120);
      CHECK(r.failures == 0);
    }
  }
}

TEST_CASE("the relation suite is reproducible from its seed") {
  auto a = make_action("houghton:3");
  auto r1 = run_relation_suite(a, 40, 5);
  auto r2 = run_relation_suite(a, 40, 5);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].name == r2[i].name);
    CHECK(r1[i].failures == r2[i].failures);
  }
}

TEST_CASE("samplers respect their requested shapes") {
  for (const char* sel : {"trivial:2", "c2", "F"}) {
    CAPTURE(sel);
    auto a = make_action(sel);
    Rng rng(61);
    for (int i = 0; i < 30; ++i) {
      Partition p = random_dyadic_partition(a, 2, 6, rng);
      CHECK(p.size() == 6);
      CHECK(is_partition(p));
      CHECK(is_dyadic_partition(p));

      Element f = random_forest(a, 2, 5, rng);
      CHECK(is_forest(f));
      CHECK(f.corank() == 2);
      CHECK(f.rank() == 5);

      Element h = random_element(a, 2, 3, 5, rng);
      CHECK(h.corank() == 2);
      CHECK(h.rank() == 3);

      Element g = random_group_element(a, rng);
      CHECK(g.rank() == 1);
      CHECK(g.corank() == 1);
      CHECK(is_untwisted(random_untwisted_group_element(a, rng)));
    }
  }
  Rng bad(1);
  CHECK_THROWS_AS(random_element(make_action("c2"), 3, 2, 2, bad), std::invalid_argument);
}
