#include "tbt/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tbt {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Partition random_dyadic_partition(const ActionPtr& a, int m, int bricks, Rng& rng) {
  if (m < 1 || bricks < m)
    throw std::invalid_argument("random_dyadic_partition: need bricks >= m >= 1");
  std::vector<Brick> bs;
  bs.reserve(bricks);
  for (int i = 1; i <= m; ++i) bs.emplace_back(i);
  while (static_cast<int>(bs.size()) < bricks) {
    const int i = uniform_int(rng, 0, static_cast<int>(bs.size()) - 1);
    const Color s = a->random_color(rng);
    const Brick b = bs[i];
    const BinaryWord w = b.word_at(s);
    bs[i] = b.with_word(s, w.append('0'));
    bs.push_back(b.with_word(s, w.append('1')));
  }
  return Partition(m, std::move(bs));
}

Element random_forest(const ActionPtr& a, int corank, int leaves, Rng& rng) {
  Partition dom = random_dyadic_partition(a, corank, leaves, rng);
  std::vector<int> to_cube(leaves);
  std::iota(to_cube.begin(), to_cube.end(), 1);
  std::shuffle(to_cube.begin(), to_cube.end(), rng);
  return make_forest(a, dom, std::move(to_cube));
}

TwistedPermutation random_twisted_perm(const ActionPtr& a, int n, Rng& rng) {
  TwistedPermutation t;
  t.perm.resize(n);
  std::iota(t.perm.begin(), t.perm.end(), 1);
  std::shuffle(t.perm.begin(), t.perm.end(), rng);
  t.twists.reserve(n);
  for (int i = 0; i < n; ++i) t.twists.push_back(a->random_elem(rng));
  return t;
}

Element random_element(const ActionPtr& a, int corank, int rank, int leaves, Rng& rng) {
  if (leaves < corank || leaves < rank)
    throw std::invalid_argument("random_element: need leaves >= corank and rank");
  Element f1 = random_forest(a, corank, leaves, rng);
  Element f2 = random_forest(a, rank, leaves, rng);
  Element t = twisted_perm_element(a, random_twisted_perm(a, leaves, rng));
  return compose(invert(f2), compose(t, f1));
}

Element random_group_element(const ActionPtr& a, Rng& rng) {
  const int leaves = uniform_int(rng, 1, 6);
  return random_element(a, 1, 1, leaves, rng);
}

Element random_untwisted_group_element(const ActionPtr& a, Rng& rng) {
  const int leaves = uniform_int(rng, 1, 6);
  Element f1 = random_forest(a, 1, leaves, rng);
  Element f2 = random_forest(a, 1, leaves, rng);
  TwistedPermutation t = random_twisted_perm(a, leaves, rng);
  for (auto& g : t.twists) g = a->identity();
  return compose(invert(f2), compose(twisted_perm_element(a, t), f1));
}

}  // namespace tbt
