#include "tbt/element.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tbt {
namespace {

bool piece_dom_less(const Piece& a, const Piece& b) { return a.dom < b.dom; }

// Image of a sub-brick of p.dom: append each extra suffix at the twisted
// color on the ran side.
Brick transplant(const Action& act, const Piece& p, const Brick& sub) {
  Brick out = p.ran;
  for (const auto& [c, w] : sub.entries()) {
    BinaryWord suffix = w.strip_prefix(p.dom.word_at(c));
    if (suffix.empty()) continue;
    Color u = act.apply(p.twist, c);
    out = out.with_word(u, out.word_at(u).concat(suffix));
  }
  return out;
}

// Preimage of a sub-brick of p.ran.
Brick pull_back(const Action& act, const Piece& p, const Brick& sub) {
  GroupElem inv = act.invert(p.twist);
  Brick out = p.dom;
  for (const auto& [u, w] : sub.entries()) {
    BinaryWord suffix = w.strip_prefix(p.ran.word_at(u));
    if (suffix.empty()) continue;
    Color c = act.apply(inv, u);
    out = out.with_word(c, out.word_at(c).concat(suffix));
  }
  return out;
}

const Piece& piece_with_dom_over(const Element& h, const Brick& sub) {
  for (const Piece& p : h.pieces())
    if (brick_subset(sub, p.dom)) return p;
  throw std::logic_error("Element: brick not inside any domain brick");
}

const Piece& piece_with_ran_over(const Element& h, const Brick& sub) {
  for (const Piece& p : h.pieces())
    if (brick_subset(sub, p.ran)) return p;
  throw std::logic_error("Element: brick not inside any range brick");
}

std::vector<Color> colors_of(const std::vector<Piece>& pieces, bool dom_side, bool ran_side) {
  std::set<Color> s;
  for (const Piece& p : pieces) {
    if (dom_side)
      for (const auto& [c, w] : p.dom.entries()) s.insert(c);
    if (ran_side)
      for (const auto& [c, w] : p.ran.entries()) s.insert(c);
  }
  return {s.begin(), s.end()};
}

// Splits text on the separator at brace/bracket/paren depth zero.
std::vector<std::string_view> split_nested(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[' || ch == '{') ++depth;
    else if (ch == ')' || ch == ']' || ch == '}') --depth;
    else if (ch == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Element::Element(ActionPtr action, int rank, int corank, std::vector<Piece> pieces)
    : action_(std::move(action)), rank_(rank), corank_(corank), pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(), piece_dom_less);
}

Partition Element::dom_partition() const {
  std::vector<Brick> bricks;
  bricks.reserve(pieces_.size());
  for (const Piece& p : pieces_) bricks.push_back(p.dom);
  return Partition(corank_, std::move(bricks));
}

Partition Element::ran_partition() const {
  std::vector<Brick> bricks;
  bricks.reserve(pieces_.size());
  for (const Piece& p : pieces_) bricks.push_back(p.ran);
  return Partition(rank_, std::move(bricks));
}

Element Element::make(ActionPtr action, int rank, int corank, std::vector<Piece> pieces) {
  if (!action) throw std::invalid_argument("Element: null action");
  if (rank < 1 || corank < 1) throw std::invalid_argument("Element: rank and corank must be >= 1");
  if (pieces.empty()) throw std::invalid_argument("Element: no pieces");
  for (const Piece& p : pieces) {
    if (p.dom.cube() > corank) throw std::invalid_argument("Element: domain brick outside corank");
    if (p.ran.cube() > rank) throw std::invalid_argument("Element: range brick outside rank");
    action->invert(p.twist);  // rejects payloads from another action
    for (const auto& [c, w] : p.dom.entries())
      if (!action->contains_color(c)) throw std::invalid_argument("Element: color not in S");
    for (const auto& [c, w] : p.ran.entries())
      if (!action->contains_color(c)) throw std::invalid_argument("Element: color not in S");
  }
  Element h(action, rank, corank, std::move(pieces));
  if (!is_partition(h.dom_partition()))
    throw std::invalid_argument("Element: domain bricks do not form a partition");
  if (!is_partition(h.ran_partition()))
    throw std::invalid_argument("Element: range bricks do not form a partition");

  // Both sides must be dyadic.  Refining the domain to dyadic and pushing the
  // refinement through keeps a partition on the range side; refining that
  // range to dyadic and pulling back then leaves the domain dyadic, because a
  // pulled-back refinement splits the bricks of an already dyadic partition
  // dyadically in place.
  if (!is_dyadic_partition(h.dom_partition())) {
    Partition fine = refine_to_dyadic(h.dom_partition());
    std::vector<Piece> next;
    next.reserve(fine.bricks().size());
    for (const Brick& b : fine.bricks()) {
      const Piece& p = piece_with_dom_over(h, b);
      next.push_back(Piece{b, transplant(*action, p, b), p.twist});
    }
    h = Element(action, rank, corank, std::move(next));
  }
  if (!is_dyadic_partition(h.ran_partition())) {
    Partition fine = refine_to_dyadic(h.ran_partition());
    std::vector<Piece> next;
    next.reserve(fine.bricks().size());
    for (const Brick& b : fine.bricks()) {
      const Piece& p = piece_with_ran_over(h, b);
      next.push_back(Piece{pull_back(*action, p, b), b, p.twist});
    }
    h = Element(action, rank, corank, std::move(next));
  }
  return h;
}

std::string Element::str() const {
  std::ostringstream os;
  os << "EL{" << rank_ << ";" << corank_ << "; ";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << pieces_[i].dom.str() << " -> " << pieces_[i].ran.str() << " : "
       << action_->format_elem(pieces_[i].twist) << ")";
  }
  os << "}";
  return os.str();
}

Element Element::parse(ActionPtr action, std::string_view text) {
  text = trim(text);
  if (text.size() < 4 || text.substr(0, 3) != "EL{" || text.back() != '}')
    throw std::invalid_argument("Element::parse: expected EL{...}");
  std::string_view body = text.substr(3, text.size() - 4);
  std::vector<std::string_view> parts = split_nested(body, ';');
  if (parts.size() != 3) throw std::invalid_argument("Element::parse: expected rank;corank;pieces");
  auto to_int = [](std::string_view s) {
    s = trim(s);
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9' || v > 100000)
        throw std::invalid_argument("Element::parse: bad integer");
      v = v * 10 + (c - '0');
    }
    if (s.empty()) throw std::invalid_argument("Element::parse: bad integer");
    return v;
  };
  int rank = to_int(parts[0]), corank = to_int(parts[1]);
  std::vector<Piece> pieces;
  for (std::string_view piece_text : split_nested(parts[2], ',')) {
    piece_text = trim(piece_text);
    if (piece_text.size() < 2 || piece_text.front() != '(' || piece_text.back() != ')')
      throw std::invalid_argument("Element::parse: expected (dom -> ran : g)");
    std::string_view inner = piece_text.substr(1, piece_text.size() - 2);
    std::size_t arrow = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
      char ch = inner[i];
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      else if (ch == ')' || ch == ']' || ch == '}') --depth;
      else if (ch == '-' && inner[i + 1] == '>' && depth == 0) { arrow = i; break; }
    }
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("Element::parse: missing ->");
    std::string_view ran_and_twist = inner.substr(arrow + 2);
    std::size_t colon = std::string_view::npos;
    depth = 0;
    for (std::size_t i = 0; i < ran_and_twist.size(); ++i) {
      char ch = ran_and_twist[i];
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      else if (ch == ')' || ch == ']' || ch == '}') --depth;
      else if (ch == ':' && depth == 0) colon = i;
    }
    if (colon == std::string_view::npos)
      throw std::invalid_argument("Element::parse: missing twist");
    auto dom = Brick::parse(trim(inner.substr(0, arrow)));
    auto ran = Brick::parse(trim(ran_and_twist.substr(0, colon)));
    auto twist = action->parse_elem(trim(ran_and_twist.substr(colon + 1)));
    if (!dom || !ran) throw std::invalid_argument("Element::parse: bad brick");
    if (!twist) throw std::invalid_argument("Element::parse: bad group element");
    pieces.push_back(Piece{*dom, *ran, *twist});
  }
  return make(std::move(action), rank, corank, std::move(pieces));
}

Element identity_elem(ActionPtr action, int m) {
  std::vector<Piece> pieces;
  for (int i = 1; i <= m; ++i) pieces.push_back(Piece{Brick(i), Brick(i), action->identity()});
  return Element::make(std::move(action), m, m, std::move(pieces));
}

Element make_twist(ActionPtr action, const GroupElem& g) {
  std::vector<Piece> pieces{Piece{Brick(1), Brick(1), g}};
  return Element::make(std::move(action), 1, 1, std::move(pieces));
}

Element make_perm(ActionPtr action, const std::vector<int>& sigma) {
  int n = int(sigma.size());
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("make_perm: not a permutation of 1..n");
    seen[v - 1] = 1;
  }
  std::vector<Piece> pieces;
  for (int i = 1; i <= n; ++i)
    pieces.push_back(Piece{Brick(i), Brick(sigma[i - 1]), action->identity()});
  return Element::make(std::move(action), n, n, std::move(pieces));
}

Element make_splitter(ActionPtr action, const Color& s) {
  if (!action->contains_color(s)) throw std::invalid_argument("make_splitter: color not in S");
  BinaryWord zero("0"), one("1");
  std::vector<Piece> pieces{
      Piece{Brick(1, {{s, zero}}), Brick(1), action->identity()},
      Piece{Brick(1, {{s, one}}), Brick(2), action->identity()},
  };
  return Element::make(std::move(action), 2, 1, std::move(pieces));
}

Element make_forest(ActionPtr action, const Partition& dom, std::vector<int> to_cube) {
  int n = int(dom.bricks().size());
  if (to_cube.empty()) {
    to_cube.resize(n);
    std::iota(to_cube.begin(), to_cube.end(), 1);
  }
  if (int(to_cube.size()) != n) throw std::invalid_argument("make_forest: assignment size mismatch");
  std::vector<Brick> sorted = dom.sorted().bricks();
  std::vector<Piece> pieces;
  for (int i = 0; i < n; ++i)
    pieces.push_back(Piece{sorted[i], Brick(to_cube[i]), action->identity()});
  return Element::make(std::move(action), n, dom.ambient(), std::move(pieces));
}

Element compose(const Element& h2, const Element& h1) {
  if (!h1.action()->same_as(*h2.action()))
    throw std::invalid_argument("compose: actions differ");
  if (h1.rank() != h2.corank())
    throw std::invalid_argument("compose: rank of inner does not match corank of outer");
  const Action& act = *h1.action();
  Partition mid = common_refinement(h1.ran_partition(), h2.dom_partition());
  std::vector<Piece> pieces;
  pieces.reserve(mid.bricks().size());
  for (const Brick& b : mid.bricks()) {
    const Piece& p1 = piece_with_ran_over(h1, b);
    const Piece& p2 = piece_with_dom_over(h2, b);
    pieces.push_back(Piece{pull_back(act, p1, b), transplant(act, p2, b),
                           act.multiply(p2.twist, p1.twist)});
  }
  // Dyadic on both sides: the middle is a common refinement of dyadic
  // partitions, and transplants preserve dyadic refinement brick by brick.
  return Element(h1.action(), h2.rank(), h1.corank(), std::move(pieces));
}

Element invert(const Element& h) {
  const Action& act = *h.action();
  std::vector<Piece> pieces;
  pieces.reserve(h.pieces().size());
  for (const Piece& p : h.pieces())
    pieces.push_back(Piece{p.ran, p.dom, act.invert(p.twist)});
  return Element(h.action(), h.corank(), h.rank(), std::move(pieces));
}

Element direct_sum(const Element& h1, const Element& h2) {
  if (!h1.action()->same_as(*h2.action()))
    throw std::invalid_argument("direct_sum: actions differ");
  std::vector<Piece> pieces = h1.pieces();
  for (const Piece& p : h2.pieces())
    pieces.push_back(Piece{p.dom.with_cube(p.dom.cube() + h1.corank()),
                           p.ran.with_cube(p.ran.cube() + h1.rank()), p.twist});
  return Element(h1.action(), h1.rank() + h2.rank(), h1.corank() + h2.corank(),
                 std::move(pieces));
}

bool equal(const Element& h1, const Element& h2) {
  if (!h1.action()->same_as(*h2.action())) return false;
  if (h1.rank() != h2.rank() || h1.corank() != h2.corank()) return false;
  const Action& act = *h1.action();
  Partition common = common_refinement(h1.dom_partition(), h2.dom_partition());
  for (const Brick& b : common.bricks()) {
    const Piece& p1 = piece_with_dom_over(h1, b);
    const Piece& p2 = piece_with_dom_over(h2, b);
    if (!act.equal(p1.twist, p2.twist)) return false;
    if (!(transplant(act, p1, b) == transplant(act, p2, b))) return false;
  }
  return true;
}

bool point_in_brick(const PointPrefix& p, const Brick& b) {
  if (p.cube != b.cube()) return false;
  for (const auto& [c, w] : b.entries())
    if (!w.is_prefix_of(p.padded(c, w.size()))) return false;
  return true;
}

bool same_point(const PointPrefix& a, const PointPrefix& b) {
  if (a.cube != b.cube) return false;
  std::set<Color> colors;
  for (const auto& [c, w] : a.entries) colors.insert(c);
  for (const auto& [c, w] : b.entries) colors.insert(c);
  for (const Color& c : colors) {
    std::size_t n = std::max(a.word_at(c).size(), b.word_at(c).size());
    if (!(a.padded(c, n) == b.padded(c, n))) return false;
  }
  return true;
}

namespace {
const Piece& piece_at_point(const Element& h, const PointPrefix& p) {
  if (p.cube < 1 || p.cube > h.corank())
    throw std::invalid_argument("Element: point outside the domain");
  for (const Piece& piece : h.pieces())
    if (point_in_brick(p, piece.dom)) return piece;
  throw std::logic_error("Element: point not covered by the domain partition");
}
}  // namespace

GroupElem germinal_twist(const Element& h, const PointPrefix& p) {
  return piece_at_point(h, p).twist;
}

PointPrefix apply_point(const Element& h, const PointPrefix& p) {
  const Piece& piece = piece_at_point(h, p);
  const Action& act = *h.action();
  std::vector<std::pair<Color, BinaryWord>> entries(piece.ran.entries().begin(),
                                                    piece.ran.entries().end());
  for (const auto& [c, w] : p.entries) {
    std::size_t base = piece.dom.word_at(c).size();
    if (w.size() <= base) continue;
    BinaryWord suffix(std::string_view(w.str()).substr(base));
    Color u = act.apply(piece.twist, c);
    bool found = false;
    for (auto& [cu, wu] : entries)
      if (cu == u) {
        wu = wu.concat(suffix);
        found = true;
        break;
      }
    if (!found) entries.emplace_back(u, suffix);
  }
  return PointPrefix(piece.ran.cube(), std::move(entries));
}

std::vector<GroupElem> germinal_twist_set(const Element& h) {
  const Action& act = *h.action();
  std::vector<GroupElem> out;
  for (const Piece& p : h.pieces()) {
    bool seen = false;
    for (const GroupElem& g : out)
      if (act.equal(g, p.twist)) { seen = true; break; }
    if (!seen) out.push_back(p.twist);
  }
  return out;
}

bool is_untwisted(const Element& h) {
  for (const Piece& p : h.pieces())
    if (!h.action()->is_identity(p.twist)) return false;
  return true;
}

Element reduce(const Element& h) {
  const Action& act = *h.action();
  std::vector<Piece> work = h.pieces();
  bool merged = true;
  while (merged && work.size() > 1) {
    merged = false;
    for (std::size_t i = 0; i < work.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < work.size() && !merged; ++j) {
        const Piece& a = work[i];
        const Piece& b = work[j];
        if (!act.equal(a.twist, b.twist)) continue;
        auto c = sibling_color(a.dom, b.dom);
        if (!c) continue;
        auto u = sibling_color(a.ran, b.ran);
        if (!u || !(*u == act.apply(a.twist, *c))) continue;
        // Tails must realign after the merge: the final bits must agree
        // across the two sides of each piece.
        if (a.dom.word_at(*c).back() != a.ran.word_at(*u).back()) continue;
        work[i] = Piece{a.dom.with_word(*c, a.dom.word_at(*c).parent()),
                        a.ran.with_word(*u, a.ran.word_at(*u).parent()), a.twist};
        work.erase(work.begin() + j);
        merged = true;
      }
  }
  // Merging siblings can leave a non-dyadic side; make() refines it back.
  return Element::make(h.action(), h.rank(), h.corank(), std::move(work));
}

std::vector<Color> spectrum(const Element& h) {
  if (!is_untwisted(h)) throw std::invalid_argument("spectrum: defined for untwisted elements only");
  Element current = reduce(h);
  bool removed = true;
  while (removed) {
    removed = false;
    for (const Color& c : colors_of(current.pieces(), true, true)) {
      bool aligned = true;
      for (const Piece& p : current.pieces())
        if (!(p.dom.word_at(c) == p.ran.word_at(c))) { aligned = false; break; }
      if (!aligned) continue;
      std::vector<Piece> stripped;
      for (const Piece& p : current.pieces()) {
        Piece q{p.dom.with_word(c, BinaryWord()), p.ran.with_word(c, BinaryWord()), p.twist};
        bool dup = false;
        for (const Piece& r : stripped)
          if (r.dom == q.dom && r.ran == q.ran) { dup = true; break; }
        if (!dup) stripped.push_back(std::move(q));
      }
      try {
        Element candidate =
            Element::make(current.action(), current.rank(), current.corank(), std::move(stripped));
        if (equal(h, candidate)) {
          current = reduce(candidate);
          removed = true;
          break;
        }
      } catch (const std::invalid_argument&) {
        // stripping this color does not leave a partition
      }
    }
  }
  return colors_of(current.pieces(), true, true);
}

std::vector<Color> special_spectrum(const Element& f) {
  if (f.corank() != 1) throw std::invalid_argument("special_spectrum: corank must be 1");
  if (!is_forest(f)) throw std::invalid_argument("special_spectrum: input must be a forest");
  std::vector<Color> out;
  for (const Color& c : colors_of(f.pieces(), true, false)) {
    bool everywhere = true;
    for (const Piece& p : f.pieces())
      if (p.dom.word_at(c).empty()) { everywhere = false; break; }
    if (everywhere) out.push_back(c);
  }
  return out;
}

bool is_forest(const Element& h) {
  if (!is_untwisted(h)) return false;
  if (int(h.pieces().size()) != h.rank()) return false;
  std::vector<char> hit(h.rank(), 0);
  for (const Piece& p : h.pieces()) {
    if (!p.ran.entries().empty()) return false;
    if (hit[p.ran.cube() - 1]) return false;
    hit[p.ran.cube() - 1] = 1;
  }
  return true;
}

bool is_elementary_brick(const Brick& b) {
  for (const auto& [c, w] : b.entries())
    if (w.size() > 1) return false;
  return true;
}

bool is_elementary_forest(const Element& h) {
  if (!is_forest(h)) return false;
  for (const Piece& p : h.pieces())
    if (!is_elementary_brick(p.dom)) return false;
  return true;
}

bool is_very_elementary_forest(const Element& h) {
  if (!is_forest(h)) return false;
  for (const Piece& p : h.pieces())
    if (p.dom.depth() > 1) return false;
  return true;
}

Element twisted_perm_element(ActionPtr action, const TwistedPermutation& t) {
  int n = int(t.perm.size());
  if (int(t.twists.size()) != n)
    throw std::invalid_argument("twisted_perm_element: size mismatch");
  std::vector<Piece> pieces;
  for (int i = 1; i <= n; ++i) {
    int j = t.perm[i - 1];
    if (j < 1 || j > n) throw std::invalid_argument("twisted_perm_element: bad permutation");
    pieces.push_back(Piece{Brick(i), Brick(j), t.twists[j - 1]});
  }
  return Element::make(std::move(action), n, n, std::move(pieces));
}

std::optional<TwistedPermutation> as_twisted_permutation(const Element& h) {
  if (h.rank() != h.corank()) return std::nullopt;
  auto fac = split_forest_perm(h);
  if (!fac) return std::nullopt;
  for (const Piece& p : fac->f.pieces())
    if (!p.dom.entries().empty()) return std::nullopt;
  // The trivial forest is a cube relabeling; fold it into the permutation.
  TwistedPermutation out;
  out.perm.resize(h.rank());
  out.twists = fac->g.twists;
  for (const Piece& p : fac->f.pieces())
    out.perm[p.dom.cube() - 1] = fac->g.perm[p.ran.cube() - 1];
  return out;
}

FtfForm forest_twist_forest_form(const Element& h) {
  ActionPtr action = h.action();
  int r = int(h.pieces().size());
  std::vector<Piece> f1_pieces, f2_pieces;
  TwistedPermutation t;
  t.perm.resize(r);
  t.twists.reserve(r);
  for (int i = 0; i < r; ++i) {
    const Piece& p = h.pieces()[i];
    f1_pieces.push_back(Piece{p.dom, Brick(i + 1), action->identity()});
    f2_pieces.push_back(Piece{p.ran, Brick(i + 1), action->identity()});
    t.perm[i] = i + 1;
    t.twists.push_back(p.twist);
  }
  return FtfForm{Element::make(action, r, h.rank(), std::move(f2_pieces)), std::move(t),
                 Element::make(action, r, h.corank(), std::move(f1_pieces))};
}

std::optional<ForestPermFactorization> split_forest_perm(const Element& u) {
  const Action& act = *u.action();
  // Group the pieces by range cube; each group must pull back to one brick
  // with one twist.
  std::vector<Brick> roots;
  std::vector<GroupElem> twists;
  for (int j = 1; j <= u.rank(); ++j) {
    const Piece* first = nullptr;
    std::optional<Brick> root;
    for (const Piece& p : u.pieces()) {
      if (p.ran.cube() != j) continue;
      if (!first) first = &p;
      if (!act.equal(p.twist, first->twist)) return std::nullopt;
      // The domain brick must be root + ran-word suffixes routed through the
      // inverse twist; strip them to recover the candidate root.
      GroupElem inv = act.invert(p.twist);
      Brick candidate = p.dom;
      for (const auto& [v, w] : p.ran.entries()) {
        Color c = act.apply(inv, v);
        BinaryWord dw = candidate.word_at(c);
        if (!dw.ends_with(w)) return std::nullopt;
        candidate = candidate.with_word(c, dw.strip_suffix(w));
      }
      if (!root) root = candidate;
      else if (!(*root == candidate)) return std::nullopt;
    }
    if (!first) return std::nullopt;  // some cube is not hit
    roots.push_back(*root);
    twists.push_back(first->twist);
  }
  // The recovered bricks must tile the domain dyadically; the pinned pieces
  // only guarantee they tile it at all.
  Partition dom(u.corank(), roots);
  if (!is_partition(dom) || !is_dyadic_partition(dom)) return std::nullopt;

  // Forest on the sorted roots; permutation sends position to range cube j.
  std::vector<int> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return roots[a] < roots[b]; });
  std::vector<Piece> f_pieces;
  TwistedPermutation g;
  g.perm.resize(roots.size());
  g.twists = twists;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    int j = order[pos] + 1;
    f_pieces.push_back(Piece{roots[order[pos]], Brick(int(pos) + 1), act.identity()});
    g.perm[pos] = j;
  }
  Element f = Element::make(u.action(), int(roots.size()), u.corank(), std::move(f_pieces));
  return ForestPermFactorization{std::move(g), std::move(f)};
}

std::pair<TwistedPermutation, Element> swap_forest_perm(const Element& f,
                                                        const TwistedPermutation& g) {
  if (!is_forest(f)) throw std::invalid_argument("swap_forest_perm: first argument must be a forest");
  Element u = compose(f, twisted_perm_element(f.action(), g));
  auto fac = split_forest_perm(u);
  if (!fac) throw std::logic_error("swap_forest_perm: factorization failed");
  return {std::move(fac->g), std::move(fac->f)};
}

}  // namespace tbt
