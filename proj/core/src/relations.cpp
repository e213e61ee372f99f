#include "tbt/relations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tbt/sampling.hpp"

namespace tbt {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> random_perm(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Element small_random_element(const ActionPtr& a, Rng& rng) {
  const int corank = uniform_int(rng, 1, 3);
  const int rank = uniform_int(rng, 1, 3);
  const int leaves = uniform_int(rng, std::max(corank, rank), 5);
  return random_element(a, corank, rank, leaves, rng);
}

Element small_random_element_with_corank(const ActionPtr& a, int corank, Rng& rng) {
  const int rank = uniform_int(rng, 1, 3);
  const int leaves = uniform_int(rng, std::max(corank, rank), corank + 4);
  return random_element(a, corank, rank, leaves, rng);
}

// (1) p_sigma p_sigma' = p_{sigma o sigma'}
bool rel_perm_product(const ActionPtr& a, Rng& rng) {
  const int n = uniform_int(rng, 1, 6);
  const auto s1 = random_perm(n, rng);
  const auto s2 = random_perm(n, rng);
  std::vector<int> s12(n);
  for (int i = 0; i < n; ++i) s12[i] = s1[s2[i] - 1];
  return equal(compose(make_perm(a, s1), make_perm(a, s2)), make_perm(a, s12));
}

// (2) p_sigma + p_sigma' is the block permutation
bool rel_perm_sum(const ActionPtr& a, Rng& rng) {
  const int n = uniform_int(rng, 1, 4);
  const int n2 = uniform_int(rng, 1, 4);
  const auto s1 = random_perm(n, rng);
  const auto s2 = random_perm(n2, rng);
  std::vector<int> block(n + n2);
  for (int i = 0; i < n; ++i) block[i] = s1[i];
  for (int i = 0; i < n2; ++i) block[n + i] = n + s2[i];
  return equal(direct_sum(make_perm(a, s1), make_perm(a, s2)), make_perm(a, block));
}

// (3) tau_g tau_g' = tau_{gg'}
bool rel_twist_product(const ActionPtr& a, Rng& rng) {
  const GroupElem g = a->random_elem(rng);
  const GroupElem g2 = a->random_elem(rng);
  return equal(compose(make_twist(a, g), make_twist(a, g2)),
               make_twist(a, a->multiply(g, g2)));
}

// (4) (h + h') + h'' = h + (h' + h'')
bool rel_sum_assoc(const ActionPtr& a, Rng& rng) {
  const Element h1 = small_random_element(a, rng);
  const Element h2 = small_random_element(a, rng);
  const Element h3 = small_random_element(a, rng);
  return equal(direct_sum(direct_sum(h1, h2), h3), direct_sum(h1, direct_sum(h2, h3)));
}

// (5) (h1 + h2)(h1' + h2') = (h1 h1') + (h2 h2')
bool rel_sum_product(const ActionPtr& a, Rng& rng) {
  const Element h1p = small_random_element(a, rng);
  const Element h2p = small_random_element(a, rng);
  const Element h1 = small_random_element_with_corank(a, h1p.rank(), rng);
  const Element h2 = small_random_element_with_corank(a, h2p.rank(), rng);
  return equal(compose(direct_sum(h1, h2), direct_sum(h1p, h2p)),
               direct_sum(compose(h1, h1p), compose(h2, h2p)));
}

// (6) (h_1 + ... + h_n) p_sigma = p_sigma (h_sigma(1) + ... + h_sigma(n))
bool rel_perm_shuffle(const ActionPtr& a, Rng& rng) {
  const int n = uniform_int(rng, 1, 4);
  std::vector<Element> hs;
  for (int i = 0; i < n; ++i) hs.push_back(random_group_element(a, rng));
  const auto sigma = random_perm(n, rng);
  Element lhs_sum = hs[0];
  for (int i = 1; i < n; ++i) lhs_sum = direct_sum(lhs_sum, hs[i]);
  Element rhs_sum = hs[sigma[0] - 1];
  for (int i = 1; i < n; ++i) rhs_sum = direct_sum(rhs_sum, hs[sigma[i] - 1]);
  const Element p = make_perm(a, sigma);
  return equal(compose(lhs_sum, p), compose(p, rhs_sum));
}

// (7) x_{gs} tau_g = (tau_g + tau_g) x_s
bool rel_twisted_split(const ActionPtr& a, Rng& rng) {
  const GroupElem g = a->random_elem(rng);
  const Color s = a->random_color(rng);
  const Element lhs = compose(make_splitter(a, a->apply(g, s)), make_twist(a, g));
  const Element rhs =
      compose(direct_sum(make_twist(a, g), make_twist(a, g)), make_splitter(a, s));
  return equal(lhs, rhs);
}

// (8) (x_t + x_t) x_s = p_(2 3) (x_s + x_s) x_t for s != t
bool rel_split_exchange(const ActionPtr& a, Rng& rng) {
  const Color s = a->random_color(rng);
  Color t = a->random_color(rng);
  for (int tries = 0; t == s && tries < 64; ++tries) t = a->random_color(rng);
  if (t == s) return true;  // single-color action; relation is vacuous
  const Element lhs =
      compose(direct_sum(make_splitter(a, t), make_splitter(a, t)), make_splitter(a, s));
  const Element rhs = compose(
      make_perm(a, {1, 3, 2, 4}),
      compose(direct_sum(make_splitter(a, s), make_splitter(a, s)), make_splitter(a, t)));
  return equal(lhs, rhs);
}

}  // namespace

std::vector<RelationResult> run_relation_suite(const ActionPtr& a, int trials,
                                               std::uint64_t seed) {
  using Check = bool (*)(const ActionPtr&, Rng&);
  const std::pair<const char*, Check> checks[] = {
      {"perm-product", rel_perm_product},   {"perm-direct-sum", rel_perm_sum},
      {"twist-product", rel_twist_product}, {"sum-associativity", rel_sum_assoc},
      {"sum-composition", rel_sum_product}, {"perm-shuffle", rel_perm_shuffle},
      {"twisted-split", rel_twisted_split}, {"split-exchange", rel_split_exchange},
  };
  std::vector<RelationResult> out;
  Rng rng(seed);
  for (const auto& [name, check] : checks) {
    RelationResult r;
    r.name = name;
    r.trials = trials;
    for (int i = 0; i < trials; ++i)
      if (!check(a, rng)) ++r.failures;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tbt
