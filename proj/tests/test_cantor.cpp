#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "tbt/element.hpp"
#include "tbt/partition.hpp"

using namespace tbt;

namespace {
Brick brick(std::vector<std::pair<int, const char*>> entries, int cube = 1) {
  std::vector<Brick::Entry> es;
  for (const auto& [c, w] : entries) es.emplace_back(Color(c), BinaryWord(w));
  return Brick(cube, std::move(es));
}
}  // namespace

TEST_CASE("binary word prefix algebra") {
  BinaryWord w("0110");
  CHECK(w.size() == 4);
  CHECK(w.parent() == BinaryWord("011"));
  CHECK(w.append('1') == BinaryWord("01101"));
  CHECK(BinaryWord("01").is_prefix_of(w));
  CHECK_FALSE(BinaryWord("10").is_prefix_of(w));
  CHECK(w.strip_prefix(BinaryWord("01")) == BinaryWord("10"));
  CHECK(w.strip_suffix(BinaryWord("10")) == BinaryWord("01"));
  CHECK(BinaryWord::zeros(3) == BinaryWord("000"));
  CHECK(BinaryWord().is_prefix_of(w));
  CHECK_THROWS_AS(BinaryWord("012"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord().parent(), std::logic_error);
}

TEST_CASE("dyadic lowest terms and ordering") {
  CHECK(Dyadic(2, 2) == Dyadic(1, 1));
  CHECK(Dyadic(4, 2) == Dyadic(1, 0));
  CHECK(Dyadic(0, 5) == Dyadic(0, 0));
  CHECK(Dyadic(1, 2) < Dyadic(1, 1));
  CHECK(Dyadic(3, 2) + Dyadic(1, 2) == Dyadic(1, 0));
  CHECK(Dyadic(1, 0) - Dyadic(1, 3) == Dyadic(7, 3));
  CHECK(Dyadic(3, 3).times_pow2(1) == Dyadic(3, 2));
  CHECK(Dyadic(3, 0).times_pow2(-2) == Dyadic(3, 2));
  CHECK_THROWS_AS(Dyadic(1, 63), std::invalid_argument);
}

TEST_CASE("brick words, subsets, intersections") {
  Brick b = brick({{1, "01"}, {3, "1"}});
  CHECK(b.word_at(Color(1)) == BinaryWord("01"));
  CHECK(b.word_at(Color(2)).empty());
  CHECK(b.constrains(Color(3)));
  CHECK_FALSE(b.constrains(Color(2)));
  CHECK(b.with_word(Color(2), BinaryWord("0")).constrains(Color(2)));
  CHECK(b.with_word(Color(1), BinaryWord()) == brick({{3, "1"}}));
  CHECK(b.depth() == 3);

  CHECK(brick_subset(brick({{1, "010"}, {3, "1"}}), b));
  CHECK(brick_subset(b, b));
  CHECK_FALSE(brick_subset(b, brick({{1, "010"}, {3, "1"}})));
  CHECK_FALSE(brick_subset(brick({{1, "01"}}, 2), b));

  auto meet = brick_intersection(brick({{1, "0"}}), brick({{2, "1"}}));
  REQUIRE(meet.has_value());
  CHECK(*meet == brick({{1, "0"}, {2, "1"}}));
  CHECK(brick_intersection(brick({{1, "01"}}), brick({{1, "0"}})) == brick({{1, "01"}}));
  CHECK_FALSE(brick_intersection(brick({{1, "0"}}), brick({{1, "1"}})).has_value());

  CHECK(sibling_color(brick({{1, "00"}}), brick({{1, "01"}})) == Color(1));
  CHECK_FALSE(sibling_color(brick({{1, "00"}}), brick({{1, "1"}})).has_value());
  CHECK_FALSE(sibling_color(brick({{1, "0"}, {2, "0"}}), brick({{1, "1"}, {2, "1"}}))
                  .has_value());
}

TEST_CASE("brick serialization round trip") {
  for (const Brick& b :
       {Brick(2), brick({{1, "01"}, {3, "1"}}), brick({{2, "0"}}, 5)}) {
    auto back = Brick::parse(b.str());
    REQUIRE(back.has_value());
    CHECK(*back == b);
  }
  CHECK_FALSE(Brick::parse("B[0]{}").has_value());
  CHECK_FALSE(Brick::parse("B[1]{1=2}").has_value());
}

TEST_CASE("partition predicate and trivial cases") {
  CHECK(is_partition(Partition::trivial(3)));
  CHECK(is_partition(Partition(1, {brick({{1, "0"}}), brick({{1, "1"}})})));
  CHECK_FALSE(is_partition(Partition(1, {brick({{1, "0"}})})));
  CHECK_FALSE(is_partition(Partition(1, {brick({{1, "0"}}), brick({{1, "01"}}),
                                         brick({{1, "1"}})})));
  CHECK_FALSE(is_partition(Partition(2, {brick({{1, "0"}}), brick({{1, "1"}})})));
}

TEST_CASE("a five-brick partition over three colors that is not dyadic") {
  Partition p(1, {brick({{1, "0"}, {2, "0"}, {3, "0"}}),
                  brick({{1, "1"}, {2, "1"}, {3, "1"}}),
                  brick({{1, "0"}, {2, "1"}}),
                  brick({{2, "0"}, {3, "1"}}),
                  brick({{1, "1"}, {3, "0"}})});
  CHECK(is_partition(p));
  CHECK_FALSE(is_dyadic_partition(p));

  Partition r = refine_to_dyadic(p);
  CHECK(is_partition(r));
  CHECK(is_dyadic_partition(r));
  CHECK(refines(r, p));
  CHECK(r.size() > p.size());
}

TEST_CASE("two-color partitions into dyadic bricks are always dyadic") {
  Partition cross(1, {brick({{1, "0"}, {2, "0"}}), brick({{1, "0"}, {2, "1"}}),
                      brick({{1, "1"}, {2, "0"}}), brick({{1, "1"}, {2, "1"}})});
  CHECK(is_partition(cross));
  CHECK(is_dyadic_partition(cross));
  CHECK(refine_to_dyadic(cross).sorted() == cross.sorted());
}

TEST_CASE("merge residue does not depend on the merge order") {
  Partition p(1, {brick({{1, "00"}}), brick({{1, "01"}}), brick({{1, "10"}, {2, "0"}}),
                  brick({{1, "10"}, {2, "1"}}), brick({{1, "11"}})});
  auto base = merge_residue(p, 0);
  std::sort(base.begin(), base.end());
  CHECK(base == std::vector<Brick>{Brick(1)});
  for (std::uint64_t seed : {1u, 2u, 17u, 255u}) {
    auto other = merge_residue(p, seed);
    std::sort(other.begin(), other.end());
    CHECK(other == base);
  }
}

TEST_CASE("common refinement refines both inputs") {
  Partition p(1, {brick({{1, "0"}}), brick({{1, "1"}})});
  Partition q(1, {brick({{2, "0"}}), brick({{2, "1"}})});
  Partition r = common_refinement(p, q);
  CHECK(is_partition(r));
  CHECK(r.size() == 4);
  CHECK(refines(r, p));
  CHECK(refines(r, q));
  CHECK_FALSE(refines(p, q));
}

TEST_CASE("complement bricks tile the rest of the cube") {
  Brick b = brick({{1, "10"}, {2, "1"}});
  auto rest = complement_bricks(b);
  std::vector<Brick> all = rest;
  all.push_back(b);
  CHECK(is_partition(Partition(1, all)));
  CHECK(complement_bricks(Brick(1)).empty());
}

TEST_CASE("point prefixes read as zero-extended points") {
  PointPrefix p(1, {{Color(1), BinaryWord("1")}});
  CHECK(point_in_brick(p, brick({{1, "1"}})));
  CHECK(point_in_brick(p, brick({{1, "10"}})));
  CHECK(point_in_brick(p, brick({{2, "0"}})));
  CHECK_FALSE(point_in_brick(p, brick({{1, "11"}})));
  CHECK_FALSE(point_in_brick(p, brick({{2, "1"}})));
  CHECK(same_point(p, PointPrefix(1, {{Color(1), BinaryWord("100")},
                                      {Color(2), BinaryWord("00")}})));
  CHECK_FALSE(same_point(p, PointPrefix(1, {{Color(1), BinaryWord("101")}})));
  CHECK_FALSE(same_point(p, PointPrefix(2, {{Color(1), BinaryWord("1")}})));
}
