#include "tbt/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbt {
namespace {

void require_same_corank(const Element& v, const Element& w) {
  if (!v.action()->same_as(*w.action()))
    throw std::invalid_argument("coset comparison: actions differ");
  if (v.corank() != w.corank())
    throw std::invalid_argument("coset comparison: coranks differ");
}

}  // namespace

bool coset_leq(const Element& v, const Element& w) {
  require_same_corank(v, w);
  return split_forest_perm(compose(w, invert(v))).has_value();
}

bool is_elementary_interval(const Element& v, const Element& w) {
  require_same_corank(v, w);
  auto fac = split_forest_perm(compose(w, invert(v)));
  return fac && is_elementary_forest(fac->f);
}

Element forest_join(const Element& f1, const Element& f2) {
  require_same_corank(f1, f2);
  if (!is_forest(f1) || !is_forest(f2))
    throw std::invalid_argument("forest_join: inputs must be forests");
  Partition joined = common_refinement(f1.dom_partition(), f2.dom_partition());
  Element out = make_forest(f1.action(), joined);
  if (is_elementary_forest(f1) && is_elementary_forest(f2) && !is_elementary_forest(out))
    throw std::logic_error("forest_join: join of elementary forests came out non-elementary");
  return out;
}

Element elementary_core(const Element& v, const Element& w) {
  if (!coset_leq(v, w) || coset_leq(w, v))
    throw std::invalid_argument("elementary_core: requires v < w");
  auto fac = split_forest_perm(compose(w, invert(v)));
  Partition target = fac->f.dom_partition();

  // Grow an elementary partition from the trivial one: a brick may split
  // along an uncut color as long as the target still refines the result,
  // i.e. every target brick inside it constrains that color.
  std::vector<Brick> bricks;
  for (int i = 1; i <= target.ambient(); ++i) bricks.emplace_back(i);
  bool split = true;
  while (split) {
    split = false;
    for (std::size_t i = 0; i < bricks.size() && !split; ++i) {
      const Brick& b = bricks[i];
      for (const Brick& t : target.bricks()) {
        if (!brick_subset(t, b)) continue;
        for (const auto& entry : t.entries()) {
          const Color& c = entry.first;
          if (!b.word_at(c).empty()) continue;
          bool everywhere = true;
          for (const Brick& t2 : target.bricks())
            if (brick_subset(t2, b) && t2.word_at(c).empty()) { everywhere = false; break; }
          if (!everywhere) continue;
          Brick b1 = b.with_word(c, BinaryWord("1"));
          bricks[i] = b.with_word(c, BinaryWord("0"));
          bricks.push_back(b1);
          split = true;
          break;
        }
        if (split) break;
      }
    }
  }
  Element core_forest = make_forest(v.action(), Partition(target.ambient(), std::move(bricks)));
  return compose(core_forest, v);
}

std::vector<int> weight_multiplicities(const Element& f, int kmax) {
  if (!is_elementary_forest(f))
    throw std::invalid_argument("weight_multiplicities: input must be an elementary forest");
  if (kmax < 1) throw std::invalid_argument("weight_multiplicities: kmax must be >= 1");
  std::vector<int> leaves_per_root(f.corank(), 0);
  for (const Piece& p : f.pieces()) ++leaves_per_root[p.dom.cube() - 1];
  std::vector<int> mu(kmax, 0);
  for (int k : leaves_per_root) {
    if (k > kmax) throw std::invalid_argument("weight_multiplicities: weight exceeds kmax");
    ++mu[k - 1];
  }
  return mu;
}

bool stabilizes_coset(const Element& a, const Element& h) {
  if (a.rank() != a.corank() || a.corank() != h.corank())
    throw std::invalid_argument("stabilizes_coset: dimensions do not match");
  return as_twisted_permutation(compose(h, compose(a, invert(h)))).has_value();
}

}  // namespace tbt
