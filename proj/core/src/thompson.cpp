#include <algorithm>
#include <stdexcept>

#include "tbt/actions.hpp"

namespace tbt {
namespace {

// Piecewise dyadic affine map on [0,1]: graph vertices (xs[i], ys[i]) with
// power-of-two slopes in between.  Tree pair diagrams convert to and from
// this form; all group arithmetic happens here.
struct PwMap {
  std::vector<Dyadic> xs, ys;
};

void leaf_boundaries(const FTreePtr& t, const Dyadic& lo, const Dyadic& hi,
                     std::vector<Dyadic>& out) {
  if (t->is_leaf()) { out.push_back(lo); return; }
  Dyadic mid = (lo + hi).times_pow2(-1);
  leaf_boundaries(t->left, lo, mid, out);
  leaf_boundaries(t->right, mid, hi, out);
}

PwMap pw_from_pair(const FElem& f) {
  PwMap m;
  leaf_boundaries(f.dom, Dyadic(0, 0), Dyadic(1, 0), m.xs);
  leaf_boundaries(f.ran, Dyadic(0, 0), Dyadic(1, 0), m.ys);
  m.xs.push_back(Dyadic(1, 0));
  m.ys.push_back(Dyadic(1, 0));
  return m;
}

// Slope of the segment, as an exponent: dy = dx * 2^k.  Tree pair pieces and
// their composites always have power-of-two slopes.
int slope_exp(const Dyadic& dx, const Dyadic& dy) {
  if (dx.num != dy.num)
    throw std::logic_error("Thompson map: non power-of-two slope");
  return dx.exp - dy.exp;
}

Dyadic pw_eval(const PwMap& m, const Dyadic& x) {
  if (x < m.xs.front() || x > m.xs.back())
    throw std::invalid_argument("Thompson map: point outside [0,1]");
  std::size_t i = 1;
  while (x > m.xs[i]) ++i;
  int k = slope_exp(m.xs[i] - m.xs[i - 1], m.ys[i] - m.ys[i - 1]);
  return m.ys[i - 1] + (x - m.xs[i - 1]).times_pow2(k);
}

PwMap pw_invert(const PwMap& m) { return PwMap{m.ys, m.xs}; }

// a after b.  Breakpoints: those of b plus b-preimages of those of a.
PwMap pw_compose(const PwMap& a, const PwMap& b) {
  PwMap binv = pw_invert(b);
  std::vector<Dyadic> xs = b.xs;
  for (const Dyadic& t : a.xs) xs.push_back(pw_eval(binv, t));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  PwMap out;
  for (const Dyadic& x : xs) {
    out.xs.push_back(x);
    out.ys.push_back(pw_eval(a, pw_eval(b, x)));
  }
  // Drop interior vertices where the slope does not change.
  PwMap min;
  for (std::size_t i = 0; i < out.xs.size(); ++i) {
    if (i > 0 && i + 1 < out.xs.size()) {
      int kl = slope_exp(out.xs[i] - out.xs[i - 1], out.ys[i] - out.ys[i - 1]);
      int kr = slope_exp(out.xs[i + 1] - out.xs[i], out.ys[i + 1] - out.ys[i]);
      if (kl == kr) continue;
    }
    min.xs.push_back(out.xs[i]);
    min.ys.push_back(out.ys[i]);
  }
  return min;
}

// [lo, hi] is standard when its length is 2^-n and lo is a multiple of 2^-n.
bool standard_interval(const Dyadic& lo, const Dyadic& hi) {
  Dyadic len = hi - lo;
  return len.num == 1 && (lo.num == 0 || lo.exp <= len.exp);
}

// Smallest tree whose leaf boundaries include every interior breakpoint and
// whose leaf images are standard intervals.  An affine piece can carry a
// standard interval onto a non-standard one, so cutting at breakpoints alone
// is not enough.
FTreePtr dom_tree_for(const PwMap& m, const Dyadic& lo, const Dyadic& hi,
                      std::vector<std::pair<Dyadic, Dyadic>>& leaves) {
  bool cut = false;
  for (const Dyadic& x : m.xs)
    if (lo < x && x < hi) { cut = true; break; }
  if (!cut && standard_interval(pw_eval(m, lo), pw_eval(m, hi))) {
    leaves.emplace_back(lo, hi);
    return ftree_leaf();
  }
  Dyadic mid = (lo + hi).times_pow2(-1);
  FTreePtr l = dom_tree_for(m, lo, mid, leaves);
  FTreePtr r = dom_tree_for(m, mid, hi, leaves);
  return ftree_node(std::move(l), std::move(r));
}

// Unique binary tree whose ordered leaves are exactly the given dyadic
// intervals tiling [lo,hi].  Exists because no dyadic interval straddles the
// midpoint of an enclosing dyadic interval.
FTreePtr ran_tree_for(const std::vector<std::pair<Dyadic, Dyadic>>& iv, std::size_t s,
                      std::size_t e, const Dyadic& lo, const Dyadic& hi) {
  if (e - s == 1) {
    if (iv[s].first != lo || iv[s].second != hi)
      throw std::logic_error("Thompson map: image intervals are not aligned");
    return ftree_leaf();
  }
  Dyadic mid = (lo + hi).times_pow2(-1);
  std::size_t j = s + 1;
  while (j < e && iv[j].first != mid) ++j;
  if (j == e) throw std::logic_error("Thompson map: no split at midpoint");
  return ftree_node(ran_tree_for(iv, s, j, lo, mid), ran_tree_for(iv, j, e, mid, hi));
}

// Collapses leaves i and i+1 when they are two halves of one caret.
FTreePtr collapse(const FTreePtr& t, int i) {
  if (t->is_leaf()) return nullptr;
  int left_leaves = ftree_leaves(t->left);
  if (i + 1 < left_leaves) {
    FTreePtr l = collapse(t->left, i);
    return l ? ftree_node(std::move(l), t->right) : nullptr;
  }
  if (i >= left_leaves) {
    FTreePtr r = collapse(t->right, i - left_leaves);
    return r ? ftree_node(t->left, std::move(r)) : nullptr;
  }
  if (t->left->is_leaf() && t->right->is_leaf()) return ftree_leaf();
  return nullptr;
}

FElem reduce_pair(FElem f) {
  bool again = true;
  while (again) {
    again = false;
    int n = ftree_leaves(f.dom);
    for (int i = 0; i + 1 < n; ++i) {
      FTreePtr d = collapse(f.dom, i);
      if (!d) continue;
      FTreePtr r = collapse(f.ran, i);
      if (!r) continue;
      f = FElem{std::move(d), std::move(r)};
      again = true;
      break;
    }
  }
  return f;
}

FElem pair_from_pw(const PwMap& m) {
  std::vector<std::pair<Dyadic, Dyadic>> dom_leaves;
  FTreePtr dom = dom_tree_for(m, Dyadic(0, 0), Dyadic(1, 0), dom_leaves);
  std::vector<std::pair<Dyadic, Dyadic>> images;
  images.reserve(dom_leaves.size());
  for (const auto& [lo, hi] : dom_leaves)
    images.emplace_back(pw_eval(m, lo), pw_eval(m, hi));
  FTreePtr ran = ran_tree_for(images, 0, images.size(), Dyadic(0, 0), Dyadic(1, 0));
  return reduce_pair(FElem{std::move(dom), std::move(ran)});
}

FTreePtr random_tree(Rng& rng, int leaves) {
  if (leaves == 1) return ftree_leaf();
  int k = 1 + int(rng() % (leaves - 1));
  return ftree_node(random_tree(rng, k), random_tree(rng, leaves - k));
}

}  // namespace

FElem ThompsonFAction::make(FTreePtr dom, FTreePtr ran) {
  if (ftree_leaves(dom) != ftree_leaves(ran))
    throw std::invalid_argument("ThompsonFAction: tree pair leaf counts differ");
  return reduce_pair(FElem{std::move(dom), std::move(ran)});
}

FElem ThompsonFAction::x0() {
  return FElem{ftree_node(ftree_leaf(), ftree_node(ftree_leaf(), ftree_leaf())),
               ftree_node(ftree_node(ftree_leaf(), ftree_leaf()), ftree_leaf())};
}

FElem ThompsonFAction::x1() {
  FElem g = x0();
  return FElem{ftree_node(ftree_leaf(), g.dom), ftree_node(ftree_leaf(), g.ran)};
}

Dyadic ThompsonFAction::evaluate(const FElem& f, const Dyadic& x) {
  return pw_eval(pw_from_pair(f), x);
}

GroupElem ThompsonFAction::identity() const {
  return GroupElem(GroupElem::Payload(FElem{ftree_leaf(), ftree_leaf()}));
}

GroupElem ThompsonFAction::multiply(const GroupElem& a, const GroupElem& b) const {
  PwMap m = pw_compose(pw_from_pair(a.as<FElem>()), pw_from_pair(b.as<FElem>()));
  return GroupElem(GroupElem::Payload(pair_from_pw(m)));
}

GroupElem ThompsonFAction::invert(const GroupElem& a) const {
  const FElem& f = a.as<FElem>();
  return GroupElem(GroupElem::Payload(FElem{f.ran, f.dom}));
}

Color ThompsonFAction::apply(const GroupElem& a, const Color& s) const {
  if (!contains_color(s)) throw std::invalid_argument("ThompsonFAction: color not in S");
  return Color(evaluate(a.as<FElem>(), s.dyadic()));
}

std::string ThompsonFAction::format_elem(const GroupElem& a) const {
  const FElem& f = a.as<FElem>();
  return "(" + ftree_str(f.dom) + "|" + ftree_str(f.ran) + ")";
}

std::optional<GroupElem> ThompsonFAction::parse_elem(std::string_view text) const {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
  std::string_view body = text.substr(1, text.size() - 2);
  int depth = 0;
  std::size_t bar = std::string_view::npos;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == '|' && depth == 0) { bar = i; break; }
  }
  if (bar == std::string_view::npos) return std::nullopt;
  auto dom = ftree_parse(body.substr(0, bar));
  auto ran = ftree_parse(body.substr(bar + 1));
  if (!dom || !ran || ftree_leaves(*dom) != ftree_leaves(*ran)) return std::nullopt;
  FElem f{*dom, *ran};
  if (!(reduce_pair(f) == f)) return std::nullopt;  // canonical form only
  return GroupElem(GroupElem::Payload(std::move(f)));
}

std::string ThompsonFAction::format_elem_tagged(const GroupElem& a) const {
  return "F:" + format_elem(a);
}

std::optional<GroupElem> ThompsonFAction::parse_elem_tagged(std::string_view text) const {
  if (text.substr(0, 2) != "F:") return std::nullopt;
  return parse_elem(text.substr(2));
}

std::vector<Color> ThompsonFAction::orbit_representatives() const {
  return {Color(Dyadic(1, 1))};
}

std::vector<GroupElem> ThompsonFAction::generators() const {
  return {GroupElem(GroupElem::Payload(x0())), GroupElem(GroupElem::Payload(x1()))};
}

GroupElem ThompsonFAction::random_elem(Rng& rng) const {
  int n = 1 + int(rng() % 6);
  FTreePtr dom = random_tree(rng, n);
  FTreePtr ran = random_tree(rng, n);
  return GroupElem(GroupElem::Payload(reduce_pair(FElem{std::move(dom), std::move(ran)})));
}

Color ThompsonFAction::random_color(Rng& rng) const {
  int e = 1 + int(rng() % 6);
  std::int64_t num = 2 * (rng() % (std::uint64_t(1) << (e - 1))) + 1;
  return Color(Dyadic(num, e));
}

}  // namespace tbt
