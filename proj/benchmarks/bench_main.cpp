#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "tbt/complex.hpp"
#include "tbt/poset.hpp"
#include "tbt/sampling.hpp"
#include "tbt/words.hpp"

using namespace tbt;

namespace {

constexpr std::size_t kPool = 64;

static void BM_compose(benchmark::State& state) {
  auto a = make_action("c2");
  Rng rng(1);
  std::vector<std::pair<Element, Element>> in;
  for (std::size_t i = 0; i < kPool; ++i)
    in.emplace_back(random_element(a, 2, 1, 5, rng), random_element(a, 1, 2, 5, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [h2, h1] = in[i++ % kPool];
    benchmark::DoNotOptimize(compose(h2, h1));
  }
}
BENCHMARK(BM_compose);

static void BM_invert(benchmark::State& state) {
  auto a = make_action("houghton:3");
  Rng rng(2);
  std::vector<Element> in;
  for (std::size_t i = 0; i < kPool; ++i) in.push_back(random_element(a, 1, 2, 6, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(invert(in[i++ % kPool]));
}
BENCHMARK(BM_invert);

static void BM_equal(benchmark::State& state) {
  auto a = make_action("c2");
  Rng rng(3);
  std::vector<std::pair<Element, Element>> in;
  for (std::size_t i = 0; i < kPool; ++i) {
    Element h = random_group_element(a, rng);
    in.emplace_back(h, compose(identity_elem(a, 1), h));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [h, g] = in[i++ % kPool];
    benchmark::DoNotOptimize(equal(h, g));
  }
}
BENCHMARK(BM_equal);

static void BM_coset_leq(benchmark::State& state) {
  auto a = make_action("trivial:2");
  Rng rng(4);
  std::vector<std::pair<Element, Element>> in;
  for (std::size_t i = 0; i < kPool; ++i) {
    Element f = random_forest(a, 1, 5, rng);
    in.emplace_back(f, forest_join(f, random_forest(a, 1, 5, rng)));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [v, w] = in[i++ % kPool];
    benchmark::DoNotOptimize(coset_leq(v, w));
  }
}
BENCHMARK(BM_coset_leq);

static void BM_forest_join(benchmark::State& state) {
  auto a = make_action("trivial:2");
  Rng rng(5);
  std::vector<std::pair<Element, Element>> in;
  for (std::size_t i = 0; i < kPool; ++i)
    in.emplace_back(random_forest(a, 1, 8, rng), random_forest(a, 1, 8, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = in[i++ % kPool];
    benchmark::DoNotOptimize(forest_join(f, g));
  }
}
BENCHMARK(BM_forest_join);

static void BM_factorize(benchmark::State& state) {
  auto a = make_action("c2");
  Rng rng(6);
  std::vector<Element> in;
  for (std::size_t i = 0; i < kPool; ++i) in.push_back(random_group_element(a, rng));
  Color s = a->orbit_representatives().front();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(in[i++ % kPool], s));
}
BENCHMARK(BM_factorize);

static void BM_rho(benchmark::State& state) {
  auto a = make_action("houghton:3");
  Rng rng(7);
  std::vector<Element> in;
  for (std::size_t i = 0; i < kPool; ++i) in.push_back(random_group_element(a, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rho(in[i++ % kPool]));
}
BENCHMARK(BM_rho);

static void BM_matching_homology(benchmark::State& state) {
  int m = int(state.range(0));
  for (auto _ : state) {
    Complex c = matching_complex(m);
    benchmark::DoNotOptimize(homology(c, std::max(0, nu(m) - 1)));
  }
}
BENCHMARK(BM_matching_homology)->Arg(6)->Arg(7)->Arg(8);

static void BM_build_VE(benchmark::State& state) {
  auto a = make_action("trivial:2");
  int m = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_VE(m, a));
}
BENCHMARK(BM_build_VE)->DenseRange(4, 6);

static void BM_build_E(benchmark::State& state) {
  auto a = make_action("trivial:2");
  int m = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_E(m, a));
}
BENCHMARK(BM_build_E)->DenseRange(4, 6);

}  // namespace

BENCHMARK_MAIN();
