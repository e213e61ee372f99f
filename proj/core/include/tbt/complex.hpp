#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tbt/element.hpp"

namespace tbt {

// Connectivity control function floor((k-2)/3); negative below k = 2.
int nu(int k);

// Morse tuple (mu_m, ..., mu_3, phi), compared lexicographically.  mu_2 and
// mu_1 are deliberately absent; phi is the vertex rank.
struct MorseValue {
  std::vector<int> vals;

  friend bool operator==(const MorseValue&, const MorseValue&) = default;
  friend std::strong_ordering operator<=>(const MorseValue& a, const MorseValue& b);

  // "(0,1,3)"
  std::string str() const;
};

// Vertex of the elementary merge complex on m cubes: slot i holds the image
// brick of cube i.  Target cube indices are renumbered by first occurrence
// over slots 1..m, so two tuples are equal exactly when they present the same
// coset of twisted permutations.
struct EmVertex {
  std::vector<Brick> slots;

  int rank() const;                   // number of target cubes
  std::vector<int> weights() const;   // slots landing in each target cube
  // The unordered side of the data: image bricks as a partition.
  Partition merge_partition() const;
  // The denoted groupoid element: cube i maps canonically onto slots[i-1].
  Element as_element(ActionPtr a) const;

  friend bool operator==(const EmVertex&, const EmVertex&) = default;

  // "[B[1]{1=0}, B[1]{1=1}, B[2]{}]"
  std::string str() const;
};

// Coset expansion order: v <= w iff each w-cube's slots sit in a single
// v-cube and tile one brick there, with matching relative addresses.
bool em_leq(const EmVertex& v, const EmVertex& w);

// (mu_m, ..., mu_3, phi) for a vertex built over ambient m.
MorseValue morse_value(const EmVertex& v, int m);

// Finite simplicial complex on labeled vertices, stored by its facet list.
// Every facet is an ascending index list; no stored facet contains another;
// every vertex lies in some facet.
class Complex {
 public:
  Complex() = default;

  // Accepts any simplex list: sorts each simplex, validates indices, drops
  // duplicates and non-maximal entries.  Every vertex must be covered.
  static Complex make(std::vector<std::string> labels,
                      std::vector<std::vector<int>> simplices);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t facet_count() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  std::vector<int> facet(std::size_t i) const;
  // Largest facet size minus one; -1 for the empty complex.
  int dimension() const;

  // All d-faces, each ascending, lexicographically sorted, deduplicated.
  std::vector<std::vector<int>> faces_of_dim(int d) const;
  // Face counts per dimension 0..dimension().
  std::vector<std::size_t> face_counts() const;

  // Present only on complexes produced by build_E / build_VE / sublevel.
  bool has_morse() const { return !morse_.empty(); }
  const std::vector<EmVertex>& em_vertices() const;
  const std::vector<MorseValue>& morse_values() const;
  int ambient_m() const { return ambient_m_; }

 private:
  friend Complex build_em_complex(int, const ActionPtr&, bool, std::size_t);
  friend Complex sublevel(const Complex&, const MorseValue&);

  // Trusted: facets already normalized (each ascending, mutually
  // incomparable, covering all vertices).
  void set_facets(const std::vector<std::vector<int>>& facets);

  std::vector<std::string> labels_;
  std::vector<std::int32_t> flat_;     // facet vertex ids, concatenated
  std::vector<std::uint64_t> offsets_; // facet i = flat_[offsets_[i], offsets_[i+1])

  // Em payload; parallel to labels_ when present.
  std::vector<EmVertex> em_;
  std::vector<MorseValue> morse_;
  std::vector<std::vector<std::int32_t>> succ_;  // strict coset order, ascending ids
  int ambient_m_ = 0;
};

// Matching complex of the complete graph on m vertices: a vertex per edge,
// a simplex per nonempty matching.
Complex matching_complex(int m);

// Merge complexes over a finite color set with trivial twists, desk scale.
// Vertices are all EmVertex values on m cubes (build_VE: every target cube
// split at most once; build_E: each brick cut at most once per color);
// simplices are the chains of the coset order.  Throws when the vertex count
// would exceed max_vertices.
Complex build_VE(int m, const ActionPtr& a, std::size_t max_vertices = 200000);
Complex build_E(int m, const ActionPtr& a, std::size_t max_vertices = 200000);

// Induced subcomplex on the vertices with morse_value <= bound.  Requires a
// complex carrying Morse data; the result keeps it.
Complex sublevel(const Complex& c, const MorseValue& bound);

// Reduced integral homology of one degree: free rank plus invariant factors
// (each > 1, chained by divisibility).
struct DegreeHomology {
  long long rank = 0;
  std::vector<long long> torsion;
};

// Degrees 0..top_dim via integer Smith normal form on boundary matrices.
// Degree 0 is computed by components; every eliminated matrix is cross
// checked against GF(2) and GF(3) ranks, and the full-range call checks the
// Euler characteristic.  Throws when top_dim exceeds the dimension.
std::vector<DegreeHomology> homology(const Complex& c, int top_dim);

// Same complex up to vertex relabeling by identical label strings.
bool complexes_equal(const Complex& a, const Complex& b);

}  // namespace tbt
