#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbt/action.hpp"
#include "tbt/partition.hpp"

namespace tbt {

// One matched brick pair: the element maps `dom` onto `ran` by the prefix
// substitution that routes the tail at color c to color twist*c.
struct Piece {
  Brick dom, ran;
  GroupElem twist;
};

// Element of the twisted groupoid: a bijection C^S(corank) -> C^S(rank) given
// by finitely many twisted brick substitutions.  Invariants: the dom bricks
// form a dyadic partition of C^S(corank), the ran bricks a dyadic partition of
// C^S(rank), and pieces are sorted by dom brick.  Structural data is not
// canonical (refinements denote the same map); use equal() for semantics.
class Element {
 public:
  // Validating constructor: checks both sides are partitions and refines the
  // pair until both are dyadic.  Throws std::invalid_argument.
  static Element make(ActionPtr action, int rank, int corank, std::vector<Piece> pieces);

  const ActionPtr& action() const { return action_; }
  int rank() const { return rank_; }
  int corank() const { return corank_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  Partition dom_partition() const;
  Partition ran_partition() const;

  // "EL{rank;corank; (dom -> ran : g), ...}" with bare group elements.
  std::string str() const;
  static Element parse(ActionPtr action, std::string_view text);

 private:
  friend Element compose(const Element&, const Element&);
  friend Element invert(const Element&);
  friend Element direct_sum(const Element&, const Element&);
  // Trusted: pieces already satisfy the invariants.
  Element(ActionPtr action, int rank, int corank, std::vector<Piece> pieces);

  ActionPtr action_;
  int rank_, corank_;
  std::vector<Piece> pieces_;
};

Element identity_elem(ActionPtr action, int m);
// tau_gamma: C^S(1) -> C^S(1), trivial partitions, single twist.
Element make_twist(ActionPtr action, const GroupElem& g);
// p_sigma: cube i maps canonically onto cube sigma[i-1]; sigma is 1-based.
Element make_perm(ActionPtr action, const std::vector<int>& sigma);
// x_s: C^S(1) -> C^S(2), sending the s=0 half to cube 1 and the s=1 half to
// cube 2 canonically.
Element make_splitter(ActionPtr action, const Color& s);
// Untwisted element mapping brick i of `dom` canonically onto cube
// to_cube[i] (1-based; a bijection onto 1..size).  Bricks are indexed in the
// sorted order of `dom`.  Omitted to_cube means the identity assignment.
Element make_forest(ActionPtr action, const Partition& dom, std::vector<int> to_cube = {});

// h2 after h1; requires rank(h1) == corank(h2) and a shared action.
Element compose(const Element& h2, const Element& h1);
Element invert(const Element& h);
// Block map: h1 on the first cubes, h2 on the rest.
Element direct_sum(const Element& h1, const Element& h2);
// True iff the two elements denote the same homeomorphism.
bool equal(const Element& h1, const Element& h2);

// The point denoted by a PointPrefix is its entries extended by zeros on
// every color.  Containment and images follow that reading.
bool point_in_brick(const PointPrefix& p, const Brick& b);
// Equality of the denoted points, not of the stored prefixes.
bool same_point(const PointPrefix& a, const PointPrefix& b);
GroupElem germinal_twist(const Element& h, const PointPrefix& p);
PointPrefix apply_point(const Element& h, const PointPrefix& p);

// Distinct twist labels over the domain bricks; independent of the chosen
// representation.
std::vector<GroupElem> germinal_twist_set(const Element& h);
// True iff every germinal twist is the identity.
bool is_untwisted(const Element& h);

// Greedy simultaneous merge of sibling piece pairs until none applies.
// Semantics-preserving; not a canonical form.
Element reduce(const Element& h);

// Smallest color set T with a representation of h constrained to T.
// Defined for untwisted elements only; throws on twisted input.
std::vector<Color> spectrum(const Element& h);

// For a corank-1 forest: the colors altered at every point, i.e. the colors
// with a nonempty word in every leaf brick.
std::vector<Color> special_spectrum(const Element& f);

// Forest: untwisted element whose ran bricks are whole cubes, one per cube.
bool is_forest(const Element& h);
bool is_elementary_brick(const Brick& b);
bool is_elementary_forest(const Element& h);
bool is_very_elementary_forest(const Element& h);

// t * p_sigma: cube i maps onto cube perm[i-1], then the target cube j is
// twisted by twists[j-1].
struct TwistedPermutation {
  std::vector<int> perm;
  std::vector<GroupElem> twists;
};

Element twisted_perm_element(ActionPtr action, const TwistedPermutation& t);
std::optional<TwistedPermutation> as_twisted_permutation(const Element& h);

// h = f2^-1 * t * f1 with t a pure twist (identity permutation).
struct FtfForm {
  Element f2;
  TwistedPermutation t;
  Element f1;
};
FtfForm forest_twist_forest_form(const Element& h);

// Factorization u = g * f with g a twisted permutation and f a forest, when
// one exists.  Unique up to the cube order chosen for f (canonical here).
struct ForestPermFactorization {
  TwistedPermutation g;
  Element f;
};
std::optional<ForestPermFactorization> split_forest_perm(const Element& u);

// fg = g'f': pushes a twisted permutation through a forest from the right.
std::pair<TwistedPermutation, Element> swap_forest_perm(const Element& f,
                                                        const TwistedPermutation& g);

}  // namespace tbt
