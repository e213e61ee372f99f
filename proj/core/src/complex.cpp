#include "tbt/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "tbt/actions.hpp"

namespace tbt {

namespace {

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

int nu(int k) {
  int n = k - 2;
  if (n >= 0) return n / 3;
  return -((-n + 2) / 3);
}

std::strong_ordering operator<=>(const MorseValue& a, const MorseValue& b) {
  if (a.vals.size() != b.vals.size())
    throw std::invalid_argument("MorseValue: comparing values of different ambients");
  return a.vals <=> b.vals;
}

std::string MorseValue::str() const {
  std::string out = "(";
  out += join_ints(vals, ',');
  out += ")";
  return out;
}

int EmVertex::rank() const {
  int q = 0;
  for (const Brick& b : slots) q = std::max(q, b.cube());
  return q;
}

std::vector<int> EmVertex::weights() const {
  std::vector<int> w(rank(), 0);
  for (const Brick& b : slots) ++w[b.cube() - 1];
  return w;
}

Partition EmVertex::merge_partition() const {
  return Partition(rank(), slots).sorted();
}

Element EmVertex::as_element(ActionPtr a) const {
  std::vector<Piece> pieces;
  pieces.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i)
    pieces.push_back({Brick(static_cast<int>(i) + 1), slots[i], a->identity()});
  return Element::make(a, rank(), static_cast<int>(slots.size()), std::move(pieces));
}

std::string EmVertex::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i) out += ", ";
    out += slots[i].str();
  }
  out += "]";
  return out;
}

namespace {

// Per-vertex view used by the order predicate: target cube per slot and the
// slot list of each target cube.
struct VData {
  std::vector<int> cube_of;
  std::vector<std::vector<int>> fibers;
};

VData vdata_of(const EmVertex& v) {
  VData d;
  d.cube_of.reserve(v.slots.size());
  d.fibers.resize(v.rank());
  for (std::size_t i = 0; i < v.slots.size(); ++i) {
    int c = v.slots[i].cube();
    d.cube_of.push_back(c);
    d.fibers[c - 1].push_back(static_cast<int>(i));
  }
  return d;
}

// v <= w: each w-fiber lies in one v-cube, and the v-bricks of the fiber are
// the w-bricks re-rooted at their common prefix brick.
bool leq_impl(const EmVertex& v, const VData& vd, const EmVertex& w, const VData& wd) {
  for (const auto& fiber : wd.fibers) {
    int cube = vd.cube_of[fiber[0]];
    for (int i : fiber)
      if (vd.cube_of[i] != cube) return false;
  }
  std::vector<std::pair<Color, std::string>> root;
  for (const auto& fiber : wd.fibers) {
    root.clear();
    for (const auto& e : v.slots[fiber[0]].entries())
      root.emplace_back(e.first, e.second.str());
    for (std::size_t fi = 1; fi < fiber.size() && !root.empty(); ++fi) {
      const Brick& b = v.slots[fiber[fi]];
      std::size_t keep = 0;
      for (std::size_t ei = 0; ei < root.size(); ++ei) {
        const std::string other = b.word_at(root[ei].first).str();
        std::size_t len = 0;
        while (len < root[ei].second.size() && len < other.size() &&
               root[ei].second[len] == other[len])
          ++len;
        if (len == 0) continue;
        root[ei].second.resize(len);
        if (keep != ei) root[keep] = std::move(root[ei]);
        ++keep;
      }
      root.resize(keep);
    }
    auto root_word = [&](const Color& c) -> const std::string* {
      for (const auto& entry : root)
        if (entry.first == c) return &entry.second;
      return nullptr;
    };
    for (int i : fiber) {
      const Brick& beta = v.slots[i];
      const Brick& gamma = w.slots[i];
      for (const auto& e : gamma.entries())
        if (!beta.constrains(e.first)) return false;
      for (const auto& e : beta.entries()) {
        const std::string* pre = root_word(e.first);
        std::string expected = pre ? *pre : std::string();
        expected += gamma.word_at(e.first).str();
        if (e.second.str() != expected) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool em_leq(const EmVertex& v, const EmVertex& w) {
  if (v.slots.size() != w.slots.size())
    throw std::invalid_argument("em_leq: vertices of different ambients");
  return leq_impl(v, vdata_of(v), w, vdata_of(w));
}

MorseValue morse_value(const EmVertex& v, int m) {
  if (static_cast<int>(v.slots.size()) != m)
    throw std::invalid_argument("morse_value: vertex does not live on " + std::to_string(m) +
                                " cubes");
  std::vector<int> weights = v.weights();
  std::vector<int> mu(m + 1, 0);
  for (int w : weights) ++mu[w];
  MorseValue out;
  for (int k = m; k >= 3; --k) out.vals.push_back(mu[k]);
  out.vals.push_back(static_cast<int>(weights.size()));
  return out;
}

void Complex::set_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::size_t> order(facets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return facets[a] < facets[b]; });
  flat_.clear();
  offsets_.assign(1, 0);
  for (std::size_t i : order) {
    for (int v : facets[i]) flat_.push_back(v);
    offsets_.push_back(flat_.size());
  }
  if (facets.empty()) offsets_.clear();
}

Complex Complex::make(std::vector<std::string> labels,
                      std::vector<std::vector<int>> simplices) {
  const int n = static_cast<int>(labels.size());
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("Complex: duplicate vertex label");
  }
  if (simplices.size() > 500000)
    throw std::invalid_argument("Complex: simplex list too large for normalization");
  for (auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("Complex: empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("Complex: repeated vertex in a simplex");
    if (s.front() < 0 || s.back() >= n)
      throw std::invalid_argument("Complex: vertex index out of range");
  }
  std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::vector<std::vector<int>> facets;
  for (auto& s : simplices) {
    bool contained = false;
    for (const auto& f : facets) {
      if (f.size() <= s.size()) continue;
      if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) facets.push_back(std::move(s));
  }
  std::vector<bool> covered(n, false);
  for (const auto& f : facets)
    for (int v : f) covered[v] = true;
  for (int v = 0; v < n; ++v)
    if (!covered[v])
      throw std::invalid_argument("Complex: vertex " + std::to_string(v) +
                                  " lies in no simplex");
  Complex out;
  out.labels_ = std::move(labels);
  out.set_facets(facets);
  return out;
}

std::vector<int> Complex::facet(std::size_t i) const {
  if (i >= facet_count()) throw std::out_of_range("Complex::facet");
  return std::vector<int>(flat_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                          flat_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
}

int Complex::dimension() const {
  int dim = -1;
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
    dim = std::max(dim, static_cast<int>(offsets_[i + 1] - offsets_[i]) - 1);
  return dim;
}

std::vector<std::vector<int>> Complex::faces_of_dim(int d) const {
  std::vector<std::vector<int>> out;
  if (d < 0 || d > dimension()) return out;
  const std::size_t k = static_cast<std::size_t>(d) + 1;
  std::vector<std::int32_t> buf;
  std::vector<std::size_t> pick(k);
  for (std::size_t f = 0; f + 1 < offsets_.size(); ++f) {
    const std::int32_t* base = flat_.data() + offsets_[f];
    const std::size_t len = offsets_[f + 1] - offsets_[f];
    if (len < k) continue;
    // ascending index combinations
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      for (std::size_t i = 0; i < k; ++i) buf.push_back(base[pick[i]]);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == len - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  const std::size_t cnt = buf.size() / k;
  std::vector<std::uint32_t> idx(cnt);
  std::iota(idx.begin(), idx.end(), 0u);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    const std::int32_t* pa = buf.data() + static_cast<std::size_t>(a) * k;
    const std::int32_t* pb = buf.data() + static_cast<std::size_t>(b) * k;
    for (std::size_t i = 0; i < k; ++i)
      if (pa[i] != pb[i]) return pa[i] < pb[i];
    return false;
  };
  std::sort(idx.begin(), idx.end(), less);
  auto same = [&](std::uint32_t a, std::uint32_t b) {
    const std::int32_t* pa = buf.data() + static_cast<std::size_t>(a) * k;
    const std::int32_t* pb = buf.data() + static_cast<std::size_t>(b) * k;
    for (std::size_t i = 0; i < k; ++i)
      if (pa[i] != pb[i]) return false;
    return true;
  };
  out.reserve(cnt);
  for (std::size_t i = 0; i < cnt; ++i) {
    if (i > 0 && same(idx[i - 1], idx[i])) continue;
    const std::int32_t* p = buf.data() + static_cast<std::size_t>(idx[i]) * k;
    out.emplace_back(p, p + k);
  }
  return out;
}

std::vector<std::size_t> Complex::face_counts() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= dimension(); ++d) out.push_back(faces_of_dim(d).size());
  return out;
}

const std::vector<EmVertex>& Complex::em_vertices() const {
  if (!has_morse()) throw std::logic_error("Complex: no merge-vertex payload");
  return em_;
}

const std::vector<MorseValue>& Complex::morse_values() const {
  if (!has_morse()) throw std::logic_error("Complex: no Morse payload");
  return morse_;
}

Complex matching_complex(int m) {
  if (m < 2) throw std::invalid_argument("matching_complex: need m >= 2");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      edges.emplace_back(i, j);
      labels.push_back(std::to_string(i) + "-" + std::to_string(j));
    }
  std::vector<std::vector<int>> matchings;
  std::vector<int> current;
  std::vector<bool> used(m + 1, false);
  auto rec = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t e = from; e < edges.size(); ++e) {
      if (used[edges[e].first] || used[edges[e].second]) continue;
      used[edges[e].first] = used[edges[e].second] = true;
      current.push_back(static_cast<int>(e));
      matchings.push_back(current);
      self(self, e + 1);
      current.pop_back();
      used[edges[e].first] = used[edges[e].second] = false;
    }
  };
  rec(rec, 0);
  return Complex::make(std::move(labels), std::move(matchings));
}

namespace {

// Elementary partitions of one cube over the given colors, each a sorted
// brick list rooted at cube 1.  Dedup handles split orders that commute.
std::vector<std::vector<Brick>> elementary_shapes(const std::vector<Color>& colors) {
  const int k = static_cast<int>(colors.size());
  if (k > 12) throw std::invalid_argument("build: color set too large");
  const unsigned full = (1u << k) - 1;
  std::vector<std::vector<std::vector<Brick>>> memo(full + 1);
  std::vector<bool> done(full + 1, false);
  auto gen = [&](auto&& self, unsigned mask) -> const std::vector<std::vector<Brick>>& {
    if (done[mask]) return memo[mask];
    std::set<std::vector<Brick>> out;
    out.insert({Brick(1)});
    for (int i = 0; i < k; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const auto& subs = self(self, mask & ~(1u << i));
      for (const auto& l0 : subs)
        for (const auto& l1 : subs) {
          std::vector<Brick> shape;
          shape.reserve(l0.size() + l1.size());
          for (const Brick& b : l0) shape.push_back(b.with_word(colors[i], BinaryWord("0")));
          for (const Brick& b : l1) shape.push_back(b.with_word(colors[i], BinaryWord("1")));
          std::sort(shape.begin(), shape.end());
          out.insert(std::move(shape));
          if (out.size() > 500000)
            throw std::runtime_error("build: resource limit exceeded enumerating brick shapes");
        }
    }
    memo[mask].assign(out.begin(), out.end());
    done[mask] = true;
    return memo[mask];
  };
  return gen(gen, full);
}

std::vector<std::vector<Brick>> very_elementary_shapes(const std::vector<Color>& colors) {
  std::vector<std::vector<Brick>> out;
  out.push_back({Brick(1)});
  for (const Color& s : colors) {
    std::vector<Brick> shape = {Brick(1).with_word(s, BinaryWord("0")),
                                Brick(1).with_word(s, BinaryWord("1"))};
    std::sort(shape.begin(), shape.end());
    out.push_back(std::move(shape));
  }
  return out;
}

void enumerate_vertices(int m, const std::vector<std::vector<std::vector<Brick>>>& by_size,
                        std::size_t cap, std::vector<EmVertex>& out) {
  std::size_t max_block = 1;
  for (std::size_t w = 1; w < by_size.size(); ++w)
    if (!by_size[w].empty()) max_block = w;
  std::vector<Brick> slots(m, Brick(1));
  const unsigned full = (1u << m) - 1;

  auto emit_blocks = [&](auto&& self, unsigned used, int next_cube, bool nontrivial) -> void {
    if (used == full) {
      if (nontrivial) {
        if (out.size() >= cap)
          throw std::runtime_error("build: resource limit exceeded (vertex cap " +
                                   std::to_string(cap) + ")");
        out.push_back(EmVertex{slots});
      }
      return;
    }
    const int lead = std::countr_one(used);
    // per-level block state: the recursion below re-enters this lambda
    std::vector<int> members(1, lead);
    auto grow = [&](auto&& gself, int from) -> void {
      const std::size_t w = members.size();
      if (w < by_size.size()) {
        unsigned block = 0;
        for (int p : members) block |= 1u << p;
        for (const auto& shape : by_size[w]) {
          std::vector<std::size_t> perm(w);
          std::iota(perm.begin(), perm.end(), std::size_t{0});
          do {
            for (std::size_t j = 0; j < w; ++j)
              slots[members[j]] = shape[perm[j]].with_cube(next_cube);
            self(self, used | block, next_cube + 1, nontrivial || w > 1);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
      if (w >= max_block) return;
      for (int p = from; p < m; ++p) {
        if ((used >> p) & 1u) continue;
        members.push_back(p);
        gself(gself, p + 1);
        members.pop_back();
      }
    };
    grow(grow, lead + 1);
  };
  emit_blocks(emit_blocks, 0u, 1, false);
}

}  // namespace

Complex build_em_complex(int m, const ActionPtr& a, bool very_elementary,
                         std::size_t max_vertices) {
  if (m < 1 || m > 20) throw std::invalid_argument("build: m out of range");
  const auto* trivial = dynamic_cast<const TrivialAction*>(a.get());
  if (!trivial || trivial->size() < 1)
    throw std::invalid_argument("build: requires a finite color set with trivial twists");
  std::vector<Color> colors;
  for (int i = 1; i <= trivial->size(); ++i) colors.push_back(Color(i));

  std::vector<std::vector<std::vector<Brick>>> by_size(std::size_t(1) << colors.size());
  {
    auto shapes = very_elementary ? very_elementary_shapes(colors) : elementary_shapes(colors);
    std::size_t max_w = 0;
    for (const auto& s : shapes) max_w = std::max(max_w, s.size());
    by_size.assign(max_w + 1, {});
    for (auto& s : shapes) by_size[s.size()].push_back(std::move(s));
  }

  std::vector<EmVertex> verts;
  enumerate_vertices(m, by_size, max_vertices, verts);
  std::sort(verts.begin(), verts.end(), [](const EmVertex& x, const EmVertex& y) {
    int rx = x.rank(), ry = y.rank();
    if (rx != ry) return rx < ry;
    return x.slots < y.slots;
  });
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (verts[i - 1] == verts[i])
      throw std::logic_error("build: canonical vertex collision");

  const std::size_t n = verts.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  std::vector<MorseValue> morse;
  morse.reserve(n);
  std::vector<int> rank_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(verts[i].str());
    morse.push_back(morse_value(verts[i], m));
    rank_of[i] = verts[i].rank();
    // weight bookkeeping: sum k*mu_k = m, sum mu_k = rank
    const auto w = verts[i].weights();
    int total = 0;
    for (int x : w) total += x;
    if (total != m || static_cast<int>(w.size()) != rank_of[i])
      throw std::logic_error("build: inconsistent vertex weights");
  }

  // strata boundaries by rank: ids are rank-sorted
  std::vector<std::size_t> first(m + 2, n);
  for (std::size_t i = n; i-- > 0;) first[rank_of[i]] = i;
  for (int q = m; q >= 1; --q)
    if (first[q] == n) first[q] = first[q + 1];

  std::vector<VData> data;
  data.reserve(n);
  for (const auto& v : verts) data.push_back(vdata_of(v));

  // covers: order relations between adjacent ranks generate the rest
  std::vector<std::vector<std::int32_t>> covers(n);
  for (int q = 1; q + 1 <= m - 1; ++q) {
    for (std::size_t vi = first[q]; vi < first[q + 1]; ++vi)
      for (std::size_t wi = first[q + 1]; wi < first[q + 2]; ++wi)
        if (leq_impl(verts[vi], data[vi], verts[wi], data[wi]))
          covers[vi].push_back(static_cast<std::int32_t>(wi));
  }

  // full strict order by closure, descending ids
  std::vector<std::vector<std::int32_t>> succ(n);
  const std::size_t words = (n + 63) / 64;
  if (n > 0 && words * n <= (std::size_t(512) << 20) / 8) {
    std::vector<std::uint64_t> bits(words * n, 0);
    for (std::size_t v = n; v-- > 0;) {
      std::uint64_t* row = bits.data() + v * words;
      for (std::int32_t w : covers[v]) {
        const std::uint64_t* other = bits.data() + static_cast<std::size_t>(w) * words;
        for (std::size_t k = 0; k < words; ++k) row[k] |= other[k];
        row[static_cast<std::size_t>(w) / 64] |= std::uint64_t(1) << (w % 64);
      }
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t chunk = row[k];
        while (chunk) {
          int b = std::countr_zero(chunk);
          chunk &= chunk - 1;
          succ[v].push_back(static_cast<std::int32_t>(k * 64 + b));
        }
      }
    }
  } else {
    for (std::size_t v = n; v-- > 0;) {
      std::vector<std::int32_t> acc;
      for (std::int32_t w : covers[v]) {
        std::vector<std::int32_t> merged;
        merged.reserve(acc.size() + succ[w].size() + 1);
        std::merge(acc.begin(), acc.end(), succ[w].begin(), succ[w].end(),
                   std::back_inserter(merged));
        merged.insert(std::lower_bound(merged.begin(), merged.end(), w), w);
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        acc = std::move(merged);
      }
      succ[v] = std::move(acc);
    }
  }

  // facets: maximal chains, walked along covers from the minimal vertices
  std::vector<bool> has_pred(n, false);
  for (std::size_t v = 0; v < n; ++v)
    for (std::int32_t w : covers[v]) has_pred[w] = true;
  {
    // entry-count guard before materializing
    std::vector<std::uint64_t> cnt(n, 0), entries(n, 0);
    for (std::size_t v = n; v-- > 0;) {
      if (covers[v].empty()) {
        cnt[v] = 1;
        entries[v] = 1;
      } else {
        for (std::int32_t w : covers[v]) {
          cnt[v] += cnt[w];
          entries[v] += entries[w] + cnt[w];
        }
      }
    }
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (!has_pred[v]) total += entries[v];
    if (total > (std::uint64_t(1) << 26))
      throw std::runtime_error("build: resource limit exceeded enumerating chains");
  }
  std::vector<std::vector<int>> facets;
  {
    std::vector<int> path;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
      path.push_back(static_cast<int>(v));
      if (covers[v].empty())
        facets.push_back(path);
      else
        for (std::int32_t w : covers[v]) self(self, static_cast<std::size_t>(w));
      path.pop_back();
    };
    for (std::size_t v = 0; v < n; ++v)
      if (!has_pred[v]) dfs(dfs, v);
  }

  Complex out;
  out.labels_ = std::move(labels);
  out.set_facets(facets);
  out.em_ = std::move(verts);
  out.morse_ = std::move(morse);
  out.succ_ = std::move(succ);
  out.ambient_m_ = m;
  return out;
}

Complex build_VE(int m, const ActionPtr& a, std::size_t max_vertices) {
  return build_em_complex(m, a, true, max_vertices);
}

Complex build_E(int m, const ActionPtr& a, std::size_t max_vertices) {
  return build_em_complex(m, a, false, max_vertices);
}

Complex sublevel(const Complex& c, const MorseValue& bound) {
  if (!c.has_morse()) throw std::invalid_argument("sublevel: complex carries no Morse data");
  const std::size_t n = c.labels_.size();
  std::vector<int> to_new(n, -1);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (c.morse_[i] <= bound) {
      to_new[i] = static_cast<int>(kept.size());
      kept.push_back(i);
    }

  // order restricted to the kept vertices
  std::vector<std::vector<std::int32_t>> succ_k(kept.size());
  for (std::size_t ki = 0; ki < kept.size(); ++ki)
    for (std::int32_t w : c.succ_[kept[ki]])
      if (to_new[w] >= 0) succ_k[ki].push_back(w);  // old ids for now

  // covers within the restriction: no kept vertex strictly between
  auto in_succ = [&](std::size_t old_v, std::int32_t old_w) {
    const auto& s = c.succ_[old_v];
    return std::binary_search(s.begin(), s.end(), old_w);
  };
  std::vector<std::vector<std::int32_t>> covers(kept.size());
  for (std::size_t ki = 0; ki < kept.size(); ++ki)
    for (std::int32_t w : succ_k[ki]) {
      bool cover = true;
      for (std::int32_t u : succ_k[ki]) {
        if (u == w) continue;
        if (in_succ(static_cast<std::size_t>(u), w)) {
          cover = false;
          break;
        }
      }
      if (cover) covers[ki].push_back(to_new[w]);
    }

  std::vector<bool> has_pred(kept.size(), false);
  for (const auto& cs : covers)
    for (std::int32_t w : cs) has_pred[w] = true;
  std::vector<std::vector<int>> facets;
  {
    std::vector<int> path;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
      path.push_back(static_cast<int>(v));
      if (covers[v].empty())
        facets.push_back(path);
      else
        for (std::int32_t w : covers[v]) self(self, static_cast<std::size_t>(w));
      path.pop_back();
    };
    for (std::size_t v = 0; v < kept.size(); ++v)
      if (!has_pred[v]) dfs(dfs, v);
  }

  Complex out;
  for (std::size_t old : kept) {
    out.labels_.push_back(c.labels_[old]);
    out.em_.push_back(c.em_[old]);
    out.morse_.push_back(c.morse_[old]);
  }
  out.succ_.resize(kept.size());
  for (std::size_t ki = 0; ki < kept.size(); ++ki)
    for (std::int32_t w : succ_k[ki]) out.succ_[ki].push_back(to_new[w]);
  out.ambient_m_ = c.ambient_m_;
  out.set_facets(facets);
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  int comps;
  explicit UnionFind(int n) : parent(n), comps(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
};

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("homology: integer overflow in elimination");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("homology: integer overflow in elimination");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("homology: integer overflow in elimination");
  return r;
}

// Nonzero invariant factors of an integer matrix, ascending; consumes the
// entries.  Unit pivots are taken first, cheapest fill-in first, which keeps
// coefficient growth down on sparse inputs; the residue is finished with
// smallest-pivot elimination and remainder swaps.  The pivot is made to
// divide the residual block before it is frozen, so the divisor chain needs
// no fixup.
std::vector<long long> smith_divisors(std::vector<long long> a, std::size_t rows,
                                      std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> long long& { return a[i * cols + j]; };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t t = 0; t < cols; ++t) std::swap(at(i, t), at(j, t));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t t = 0; t < rows; ++t) std::swap(at(t, i), at(t, j));
  };
  std::vector<long long> diag;
  std::vector<std::size_t> nnz_row(rows), nnz_col(cols);
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::fill(nnz_row.begin() + static_cast<std::ptrdiff_t>(t), nnz_row.end(), 0);
    std::fill(nnz_col.begin() + static_cast<std::ptrdiff_t>(t), nnz_col.end(), 0);
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (at(i, j) != 0) {
          ++nnz_row[i];
          ++nnz_col[j];
        }
    std::size_t pi = rows, pj = cols;
    long long best = 0;
    std::size_t best_fill = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        long long v = at(i, j);
        if (v == 0) continue;
        if (v < 0) v = -v;
        const std::size_t fill = (nnz_row[i] - 1) * (nnz_col[j] - 1);
        const bool better = best == 0 || v < best || (v == best && fill < best_fill);
        if ((v == 1 || best != 1) && better) {
          best = v;
          best_fill = fill;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool again = true;
      while (again) {
        again = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (at(i, t) == 0) continue;
          long long q = at(i, t) / at(t, t);
          if (q != 0)
            for (std::size_t j = t; j < cols; ++j)
              at(i, j) = checked_sub(at(i, j), checked_mul(q, at(t, j)));
          if (at(i, t) != 0) {
            swap_rows(i, t);
            again = true;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (at(t, j) == 0) continue;
          long long q = at(t, j) / at(t, t);
          if (q != 0)
            for (std::size_t i = t; i < rows; ++i)
              at(i, j) = checked_sub(at(i, j), checked_mul(q, at(i, t)));
          if (at(t, j) != 0) {
            swap_cols(j, t);
            again = true;
          }
        }
      }
      bool folded = false;
      for (std::size_t i = t + 1; i < rows && !folded; ++i)
        for (std::size_t j = t + 1; j < cols && !folded; ++j)
          if (at(i, j) % at(t, t) != 0) {
            for (std::size_t jj = t; jj < cols; ++jj)
              at(t, jj) = checked_add(at(t, jj), at(i, jj));
            folded = true;
          }
      if (!folded) break;
    }
    diag.push_back(at(t, t) < 0 ? -at(t, t) : at(t, t));
  }
  for (std::size_t i = 1; i < diag.size(); ++i)
    if (diag[i] % diag[i - 1] != 0)
      throw std::logic_error("homology: broken divisor chain");
  return diag;
}

std::size_t gf_rank(const std::vector<long long>& entries, std::size_t rows, std::size_t cols,
                    int p) {
  std::vector<int> a(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    a[i] = static_cast<int>(((entries[i] % p) + p) % p);
  auto at = [&](std::size_t i, std::size_t j) -> int& { return a[i * cols + j]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    int inv = 1;
    while ((at(rank, col) * inv) % p != 1) ++inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || at(i, col) == 0) continue;
      int f = (at(i, col) * inv) % p;
      for (std::size_t j = col; j < cols; ++j)
        at(i, j) = ((at(i, j) - f * at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<DegreeHomology> homology(const Complex& c, int top_dim) {
  if (c.vertex_count() == 0) throw std::invalid_argument("homology: empty complex");
  const int dim = c.dimension();
  if (top_dim < 0) throw std::invalid_argument("homology: negative degree");
  if (top_dim > dim) throw std::invalid_argument("homology: degree exceeds complex dimension");

  const int need = std::min(top_dim + 1, dim);
  std::vector<std::vector<std::vector<int>>> faces(need + 1);
  for (int d = 0; d <= need; ++d) faces[d] = c.faces_of_dim(d);
  if (faces[0].size() != static_cast<std::size_t>(c.vertex_count()))
    throw std::logic_error("homology: vertex enumeration mismatch");

  const long long n0 = c.vertex_count();
  UnionFind uf(static_cast<int>(n0));
  if (need >= 1)
    for (const auto& e : faces[1]) uf.unite(e[0], e[1]);

  std::vector<long long> r(static_cast<std::size_t>(top_dim) + 2, 0);
  r[0] = 1;
  if (dim >= 1) r[1] = n0 - uf.comps;
  std::vector<std::vector<long long>> torsion(static_cast<std::size_t>(top_dim) + 1);

  for (int d = 1; d <= top_dim; ++d) {
    if (d + 1 > dim) break;
    const auto& rows_faces = faces[d];
    const auto& cols_faces = faces[d + 1];
    const std::size_t rows = rows_faces.size();
    const std::size_t cols = cols_faces.size();
    std::vector<long long> mat(rows * cols, 0);
    std::vector<int> sub;
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& s = cols_faces[j];
      for (std::size_t p = 0; p < s.size(); ++p) {
        sub.clear();
        for (std::size_t q = 0; q < s.size(); ++q)
          if (q != p) sub.push_back(s[q]);
        auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
        if (it == rows_faces.end() || *it != sub)
          throw std::logic_error("homology: missing face");
        const std::size_t i = static_cast<std::size_t>(it - rows_faces.begin());
        mat[i * cols + j] = (p % 2 == 0) ? 1 : -1;
      }
    }
    std::vector<long long> divisors = smith_divisors(mat, rows, cols);
    for (int p : {2, 3}) {
      std::size_t expected = 0;
      for (long long dv : divisors)
        if (dv % p != 0) ++expected;
      if (gf_rank(mat, rows, cols, p) != expected)
        throw std::logic_error("homology: modular rank cross-check failed");
    }
    r[static_cast<std::size_t>(d) + 1] = static_cast<long long>(divisors.size());
    for (long long dv : divisors)
      if (dv > 1) torsion[static_cast<std::size_t>(d)].push_back(dv);
  }

  std::vector<DegreeHomology> out(static_cast<std::size_t>(top_dim) + 1);
  for (int d = 0; d <= top_dim; ++d) {
    const long long nd = (d <= dim) ? static_cast<long long>(faces[d].size()) : 0;
    DegreeHomology& h = out[static_cast<std::size_t>(d)];
    h.rank = nd - r[static_cast<std::size_t>(d)] - r[static_cast<std::size_t>(d) + 1];
    h.torsion = torsion[static_cast<std::size_t>(d)];
    if (h.rank < 0) throw std::logic_error("homology: negative rank");
  }

  if (top_dim == dim) {
    long long lhs = -1;
    for (int d = 0; d <= dim; ++d) {
      const long long nd = static_cast<long long>(faces[d].size());
      lhs += (d % 2 == 0) ? nd : -nd;
    }
    long long rhs = 0;
    for (int d = 0; d <= top_dim; ++d)
      rhs += (d % 2 == 0) ? out[static_cast<std::size_t>(d)].rank
                          : -out[static_cast<std::size_t>(d)].rank;
    if (lhs != rhs) throw std::logic_error("homology: Euler characteristic mismatch");
  }
  return out;
}

bool complexes_equal(const Complex& a, const Complex& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  std::map<std::string, int> index;
  for (int i = 0; i < b.vertex_count(); ++i)
    if (!index.emplace(b.labels()[i], i).second)
      throw std::invalid_argument("complexes_equal: duplicate label");
  std::vector<std::vector<int>> fa;
  for (std::size_t i = 0; i < a.facet_count(); ++i) {
    std::vector<int> f = a.facet(i);
    for (int& v : f) {
      auto it = index.find(a.labels()[static_cast<std::size_t>(v)]);
      if (it == index.end()) return false;
      v = it->second;
    }
    std::sort(f.begin(), f.end());
    fa.push_back(std::move(f));
  }
  std::sort(fa.begin(), fa.end());
  std::vector<std::vector<int>> fb;
  for (std::size_t i = 0; i < b.facet_count(); ++i) fb.push_back(b.facet(i));
  std::sort(fb.begin(), fb.end());
  return fa == fb;
}

}  // namespace tbt
