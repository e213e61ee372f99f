#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "tbt/complex.hpp"
#include "tbt/poset.hpp"

using namespace tbt;

namespace {
const ActionPtr kOne = make_action("trivial:1");
const ActionPtr kTwo = make_action("trivial:2");

long long rank_of(const DegreeHomology& h) { return h.rank; }

bool reduced_trivial(const DegreeHomology& h) { return h.rank == 0 && h.torsion.empty(); }
}  // namespace

TEST_CASE("connectivity threshold function") {
  CHECK(nu(0) == -1);
  CHECK(nu(1) == -1);
  CHECK(nu(2) == 0);
  CHECK(nu(4) == 0);
  CHECK(nu(5) == 1);
  CHECK(nu(8) == 2);
  CHECK(nu(9) == 2);
  CHECK(nu(11) == 3);
}

TEST_CASE("complex construction validates its input") {
  CHECK_THROWS_AS(Complex::make({"a", "a"}, {{0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Complex::make({"a", "b"}, {{0}}), std::invalid_argument);
  // Non-maximal entries are dropped, not rejected.
  Complex dropped = Complex::make({"a", "b"}, {{0, 1}, {0}});
  CHECK(dropped.facet_count() == 1);
  CHECK(dropped.dimension() == 1);
  Complex c = Complex::make({"a", "b", "c"}, {{0, 1}, {2}});
  CHECK(c.vertex_count() == 3);
  CHECK(c.facet_count() == 2);
  CHECK(c.dimension() == 1);
  CHECK(c.face_counts() == std::vector<std::size_t>{3, 1});
}

TEST_CASE("homology of tiny fixtures") {
  Complex point = Complex::make({"a"}, {{0}});
  auto h = homology(point, 0);
  CHECK(reduced_trivial(h[0]));

  Complex two = Complex::make({"a", "b"}, {{0}, {1}});
  CHECK(rank_of(homology(two, 0)[0]) == 1);

  Complex hollow = Complex::make({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  auto hh = homology(hollow, 1);
  CHECK(reduced_trivial(hh[0]));
  CHECK(hh[1].rank == 1);
  CHECK(hh[1].torsion.empty());

  Complex filled = Complex::make({"a", "b", "c"}, {{0, 1, 2}});
  auto fh = homology(filled, 2);
  CHECK(reduced_trivial(fh[0]));
  CHECK(reduced_trivial(fh[1]));
  CHECK(reduced_trivial(fh[2]));
}

TEST_CASE("matching complexes of small complete graphs") {
  CHECK(matching_complex(2).vertex_count() == 1);
  CHECK(matching_complex(3).vertex_count() == 3);
  CHECK(rank_of(homology(matching_complex(3), 0)[0]) == 2);

  Complex m4 = matching_complex(4);
  CHECK(m4.vertex_count() == 6);
  CHECK(m4.facet_count() == 3);
  CHECK(rank_of(homology(m4, 0)[0]) == 2);

  Complex m5 = matching_complex(5);
  auto h5 = homology(m5, 1);
  CHECK(reduced_trivial(h5[0]));
  CHECK(h5[1].rank == 6);

  Complex m6 = matching_complex(6);
  CHECK(m6.vertex_count() == 15);
  CHECK(m6.faces_of_dim(1).size() == 45);
  CHECK(m6.facet_count() == 15);
  auto h6 = homology(m6, 1);
  CHECK(reduced_trivial(h6[0]));
  CHECK(h6[1].rank == 16);
}

TEST_CASE("matching complex torsion at seven vertices") {
  Complex m7 = matching_complex(7);
  CHECK(m7.vertex_count() == 21);
  CHECK(m7.faces_of_dim(1).size() == 105);
  CHECK(m7.faces_of_dim(2).size() == 105);
  auto h = homology(m7, 2);
  CHECK(reduced_trivial(h[0]));
  CHECK(h[1].rank == 0);
  CHECK(h[1].torsion == std::vector<long long>{3});
  CHECK(h[2].rank == 20);
}

TEST_CASE("larger matching complexes are connected and simply shaped") {
  Complex m8 = matching_complex(8);
  CHECK(m8.vertex_count() == 28);
  CHECK(m8.face_counts() == std::vector<std::size_t>{28, 210, 420, 105});
  auto h8 = homology(m8, 2);
  CHECK(reduced_trivial(h8[0]));
  CHECK(reduced_trivial(h8[1]));
  CHECK(h8[2].rank == 132);

  Complex m9 = matching_complex(9);
  CHECK(m9.vertex_count() == 36);
  CHECK(m9.face_counts() == std::vector<std::size_t>{36, 378, 1260, 945});
  auto h9 = homology(m9, 2);
  CHECK(reduced_trivial(h9[0]));
  CHECK(reduced_trivial(h9[1]));
  CHECK(h9[2].rank == 42);
  CHECK(h9[2].torsion == std::vector<long long>(8, 3));
}

TEST_CASE("vertex posets of descending links at one color") {
  // With one color, elementary and very elementary coincide.
  const int expected[] = {2, 6, 24, 80, 330};
  for (int m = 2; m <= 6; ++m) {
    CAPTURE(m);
    Complex ve = build_VE(m, kOne);
    Complex e = build_E(m, kOne);
    CHECK(ve.vertex_count() == expected[m - 2]);
    CHECK(e.vertex_count() == expected[m - 2]);
    CHECK(complexes_equal(ve, e));
  }
}

TEST_CASE("vertex counts of descending links at two colors") {
  CHECK(build_VE(2, kTwo).vertex_count() == 4);
  CHECK(build_E(2, kTwo).vertex_count() == 4);
  CHECK(build_E(3, kTwo).vertex_count() == 36);
  CHECK(build_E(4, kTwo).vertex_count() == 192);
  CHECK(build_E(5, kTwo).vertex_count() == 1600);

  Complex ve5 = build_VE(5, kTwo);
  CHECK(ve5.vertex_count() == 280);
  CHECK(ve5.faces_of_dim(1).size() == 480);

  Complex ve6 = build_VE(6, kTwo);
  CHECK(ve6.vertex_count() == 1740);
  CHECK(ve6.faces_of_dim(1).size() == 7200);
  CHECK(ve6.facet_count() == 5760);

  Complex e6 = build_E(6, kTwo);
  CHECK(e6.vertex_count() == 15540);
  CHECK(e6.facet_count() == 57600);
  CHECK(e6.dimension() == 3);
}

TEST_CASE("the very elementary complex is the morse sublevel set") {
  for (int m : {4, 5, 6}) {
    CAPTURE(m);
    Complex e = build_E(m, kTwo);
    std::vector<int> v(std::size_t(m) - 1, 0);
    v.back() = m - 1;
    CHECK(complexes_equal(sublevel(e, MorseValue{v}), build_VE(m, kTwo)));
  }
}

TEST_CASE("sublevel sets grow with the bound") {
  Complex e = build_E(4, kTwo);
  int prev = 0;
  for (MorseValue bound : {MorseValue{{0, 0, 2}}, MorseValue{{0, 0, 3}}, MorseValue{{1, 0, 3}}}) {
    Complex s = sublevel(e, bound);
    CHECK(s.vertex_count() >= prev);
    prev = s.vertex_count();
  }
  CHECK(prev == e.vertex_count());
}

TEST_CASE("morse values are graded by total weight") {
  const int m = 4;
  Complex e = build_E(m, kTwo);
  REQUIRE(e.has_morse());
  const auto& verts = e.em_vertices();
  const auto& values = e.morse_values();
  REQUIRE(verts.size() == values.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto w = verts[i].weights();
    CHECK(int(w.size()) == verts[i].rank());
    int total = 0;
    std::vector<int> mu(std::size_t(m), 0);
    for (int k : w) {
      total += k;
      ++mu[std::size_t(k) - 1];
    }
    CHECK(total == m);
    MorseValue expect;
    for (int k = m; k >= 3; --k) expect.vals.push_back(mu[std::size_t(k) - 1]);
    expect.vals.push_back(verts[i].rank());
    CHECK(morse_value(verts[i], m) == values[i]);
    CHECK(values[i] == expect);
  }
}

TEST_CASE("poset order agrees with the coset order on descending-link vertices") {
  Complex e = build_E(3, kTwo);
  const auto& verts = e.em_vertices();
  int strict = 0;
  for (const auto& v : verts)
    for (const auto& w : verts) {
      Element ve = v.as_element(kTwo), we = w.as_element(kTwo);
      bool em = em_leq(v, w);
      CHECK(em == coset_leq(ve, we));
      if (em && !(coset_leq(we, ve))) {
        ++strict;
        CHECK(is_elementary_interval(ve, we));
      }
    }
  CHECK(strict == 24);
}

TEST_CASE("canonical coset representatives are unique") {
  Complex e = build_E(3, kTwo);
  const auto& verts = e.em_vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Element a = verts[i].as_element(kTwo), b = verts[j].as_element(kTwo);
      CHECK_FALSE((coset_leq(a, b) && coset_leq(b, a)));
    }
}

TEST_CASE("homology interface guards") {
  Complex e = build_E(2, kTwo);
  CHECK_THROWS_AS(homology(e, 5), std::invalid_argument);
  CHECK_THROWS_AS(homology(e, -1), std::invalid_argument);
  CHECK_THROWS_AS(matching_complex(1), std::invalid_argument);
  CHECK_THROWS_AS(build_E(0, kTwo), std::invalid_argument);
  Complex m5 = matching_complex(5);
  CHECK_THROWS_AS(sublevel(m5, MorseValue{{0}}), std::logic_error);
}
