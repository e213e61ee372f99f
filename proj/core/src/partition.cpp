#include "tbt/partition.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace tbt {

Partition::Partition(int m, std::vector<Brick> bricks) : m_(m), bricks_(std::move(bricks)) {
  if (m < 1) throw std::invalid_argument("Partition: ambient count must be >= 1");
  for (const auto& b : bricks_)
    if (b.cube() > m)
      throw std::invalid_argument("Partition: brick cube index exceeds ambient count");
}

Partition Partition::sorted() const {
  std::vector<Brick> out = bricks_;
  std::sort(out.begin(), out.end());
  return Partition(m_, std::move(out));
}

Partition Partition::trivial(int m) {
  std::vector<Brick> out;
  out.reserve(m);
  for (int i = 1; i <= m; ++i) out.emplace_back(i);
  return Partition(m, std::move(out));
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < bricks_.size(); ++i) {
    if (i) out += ", ";
    out += bricks_[i].str();
  }
  return out;
}

namespace {

// Colors constrained by any of the bricks, in canonical order.
std::vector<Color> used_colors(const std::vector<const Brick*>& bricks) {
  std::set<Color> s;
  for (const Brick* b : bricks)
    for (const auto& [c, w] : b->entries()) s.insert(c);
  return {s.begin(), s.end()};
}

// Recursive halving of `region` against the bricks that meet it.  Returns
// false as soon as an uncovered sliver appears.  When `leaves` is non-null the
// leaf regions (each inside exactly one brick) are collected; they form a
// dyadic refinement because the recursion itself is a sequence of very
// elementary expansions starting from the whole cube.
bool cover(const Brick& region, const std::vector<const Brick*>& bricks,
           std::vector<Brick>* leaves) {
  std::vector<const Brick*> live;
  for (const Brick* b : bricks)
    if (brick_intersection(region, *b)) live.push_back(b);
  if (live.empty()) return false;
  for (const Brick* b : live) {
    if (brick_subset(region, *b)) {
      if (leaves) leaves->push_back(region);
      return true;
    }
  }
  // Split color choice: prefer a color where every live brick's word properly
  // extends the region's word.  On dyadic input that choice walks back down
  // the partition's own expansion tree, so the leaves reproduce the bricks.
  const Color* all_extend = nullptr;
  const Color* some_extend = nullptr;
  std::vector<Color> colors = used_colors(live);
  for (const Color& c : colors) {
    BinaryWord r = region.word_at(c);
    bool all = true, some = false;
    for (const Brick* b : live) {
      BinaryWord w = b->word_at(c);
      bool ext = r.is_prefix_of(w) && w.size() > r.size();
      all = all && ext;
      some = some || ext;
    }
    if (all) { all_extend = &c; break; }
    if (some && !some_extend) some_extend = &c;
  }
  const Color* split = all_extend ? all_extend : some_extend;
  if (!split) {
    // No brick extends the region anywhere, yet none contains it: impossible
    // for bricks that all intersect the region.
    throw std::logic_error("Partition cover: inconsistent brick state");
  }
  BinaryWord r = region.word_at(*split);
  return cover(region.with_word(*split, r.append('0')), live, leaves) &&
         cover(region.with_word(*split, r.append('1')), live, leaves);
}

bool pairwise_disjoint(const std::vector<Brick>& bricks) {
  for (std::size_t i = 0; i < bricks.size(); ++i)
    for (std::size_t j = i + 1; j < bricks.size(); ++j)
      if (brick_intersection(bricks[i], bricks[j])) return false;
  return true;
}

}  // namespace

bool is_partition(const Partition& p) {
  if (!pairwise_disjoint(p.bricks())) return false;
  for (int cube = 1; cube <= p.ambient(); ++cube) {
    std::vector<const Brick*> in_cube;
    for (const Brick& b : p.bricks())
      if (b.cube() == cube) in_cube.push_back(&b);
    if (!cover(Brick(cube), in_cube, nullptr)) return false;
  }
  return true;
}

std::vector<Brick> merge_residue(const Partition& p, std::uint64_t seed) {
  std::vector<Brick> work = p.bricks();
  std::mt19937_64 rng(seed);

  auto mergeable = [](const Brick& a, const Brick& b) -> std::optional<Brick> {
    auto c = sibling_color(a, b);
    if (!c) return std::nullopt;
    return a.with_word(*c, a.word_at(*c).parent());
  };

  bool merged = true;
  while (merged && work.size() > 1) {
    merged = false;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j) pairs.emplace_back(i, j);
    if (seed) std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [i, j] : pairs) {
      if (auto m = mergeable(work[i], work[j])) {
        work[i] = *m;
        work.erase(work.begin() + j);
        merged = true;
        break;
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

bool is_dyadic_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("is_dyadic_partition: not a partition");
  return merge_residue(p) == Partition::trivial(p.ambient()).sorted().bricks();
}

Partition refine_to_dyadic(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("refine_to_dyadic: not a partition");
  std::vector<Brick> out;
  for (int cube = 1; cube <= p.ambient(); ++cube) {
    std::vector<const Brick*> in_cube;
    for (const Brick& b : p.bricks())
      if (b.cube() == cube) in_cube.push_back(&b);
    cover(Brick(cube), in_cube, &out);
  }
  return Partition(p.ambient(), std::move(out));
}

Partition common_refinement(const Partition& p, const Partition& q) {
  if (p.ambient() != q.ambient())
    throw std::invalid_argument("common_refinement: ambient count mismatch");
  std::vector<Brick> out;
  for (const Brick& a : p.bricks())
    for (const Brick& b : q.bricks())
      if (auto m = brick_intersection(a, b)) out.push_back(*m);
  return Partition(p.ambient(), std::move(out));
}

bool refines(const Partition& q, const Partition& p) {
  if (p.ambient() != q.ambient()) return false;
  for (const Brick& b : q.bricks()) {
    bool inside = false;
    for (const Brick& a : p.bricks())
      if (brick_subset(b, a)) { inside = true; break; }
    if (!inside) return false;
  }
  return true;
}

std::vector<Brick> complement_bricks(const Brick& b) {
  std::vector<Brick> out;
  Brick base(b.cube());
  for (const auto& [c, w] : b.entries()) {
    BinaryWord prefix;
    for (std::size_t l = 0; l < w.size(); ++l) {
      out.push_back(base.with_word(c, prefix.append(w.bit(l) ? '0' : '1')));
      prefix = prefix.append(w.bit(l) ? '1' : '0');
    }
    base = base.with_word(c, w);
  }
  return out;
}

}  // namespace tbt
