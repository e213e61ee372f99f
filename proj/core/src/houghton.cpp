#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "tbt/actions.hpp"

namespace tbt {
namespace {

constexpr std::int64_t kMaxOffset = 1'000'000;
constexpr std::int64_t kMaxIndex = 1'000'000;
constexpr std::size_t kMaxExcept = 100'000;

std::int64_t max_abs_offset(const std::vector<std::int64_t>& t) {
  std::int64_t m = 0;
  for (std::int64_t v : t) if (std::int64_t a = v < 0 ? -v : v; a > m) m = a;
  return m;
}

std::int64_t max_except_index(const std::vector<std::pair<RayPoint, RayPoint>>& ex) {
  std::int64_t m = 0;
  for (const auto& [src, dst] : ex) m = std::max({m, src.index, dst.index});
  return m;
}

std::string ray_point_str(const RayPoint& p) {
  return "(" + std::to_string(p.ray) + "," + std::to_string(p.index) + ")";
}

std::optional<RayPoint> ray_point_parse(std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') return std::nullopt;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto num = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
  };
  auto r = num(body.substr(0, comma));
  auto k = num(body.substr(comma + 1));
  if (!r || !k) return std::nullopt;
  return RayPoint{int(*r), *k};
}

// Splits on the separator at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

HoughtonAction::HoughtonAction(int rays) : rays_(rays) {
  if (rays < 1 || rays > 64)
    throw std::invalid_argument("HoughtonAction: ray count must be in 1..64");
}

std::string HoughtonAction::name() const { return "houghton:" + std::to_string(rays_); }

RayPoint HoughtonAction::apply_raw(const HoughtonElem& e, const RayPoint& p) const {
  auto it = std::lower_bound(
      e.except.begin(), e.except.end(), p,
      [](const std::pair<RayPoint, RayPoint>& a, const RayPoint& b) { return a.first < b; });
  if (it != e.except.end() && it->first == p) return it->second;
  std::int64_t j = p.index + e.offsets[p.ray - 1];
  if (j < 0) throw std::logic_error("HoughtonAction: point escapes its ray");
  return RayPoint{p.ray, j};
}

HoughtonElem HoughtonAction::make(std::vector<std::int64_t> offsets,
                                  std::vector<std::pair<RayPoint, RayPoint>> except) const {
  if (int(offsets.size()) != rays_)
    throw std::invalid_argument("HoughtonAction: offset count must equal ray count");
  std::int64_t sum = 0;
  for (std::int64_t t : offsets) {
    if (std::llabs(t) > kMaxOffset)
      throw std::invalid_argument("HoughtonAction: offset out of range");
    sum += t;
  }
  if (sum != 0) throw std::invalid_argument("HoughtonAction: offsets must sum to zero");
  if (except.size() > kMaxExcept)
    throw std::invalid_argument("HoughtonAction: too many exceptional points");
  for (const auto& [src, dst] : except)
    for (const RayPoint& p : {src, dst})
      if (p.ray < 1 || p.ray > rays_ || p.index < 0 || p.index > kMaxIndex)
        throw std::invalid_argument("HoughtonAction: ray point out of range");

  std::sort(except.begin(), except.end());
  for (std::size_t i = 0; i + 1 < except.size(); ++i)
    if (except[i].first == except[i + 1].first)
      throw std::invalid_argument("HoughtonAction: duplicate exceptional source");

  // Drop entries already implied by the offsets.
  std::vector<std::pair<RayPoint, RayPoint>> kept;
  for (const auto& [src, dst] : except)
    if (!(dst.ray == src.ray && dst.index == src.index + offsets[src.ray - 1]))
      kept.emplace_back(src, dst);

  HoughtonElem e{std::move(offsets), std::move(kept)};

  // Bijectivity check on a window large enough that beyond it the map and
  // its inverse are pure translations.
  std::int64_t B = max_except_index(e.except);
  std::int64_t M = max_abs_offset(e.offsets);
  std::int64_t W = B + 2 * M + 1;
  std::set<RayPoint> images;
  for (int r = 1; r <= rays_; ++r)
    for (std::int64_t k = 0; k <= W; ++k) {
      RayPoint p{r, k};
      RayPoint q;
      auto it = std::lower_bound(
          e.except.begin(), e.except.end(), p,
          [](const std::pair<RayPoint, RayPoint>& a, const RayPoint& b) { return a.first < b; });
      if (it != e.except.end() && it->first == p) {
        q = it->second;
      } else {
        std::int64_t j = k + e.offsets[r - 1];
        if (j < 0) throw std::invalid_argument("HoughtonAction: map is not total");
        q = RayPoint{r, j};
      }
      if (!images.insert(q).second)
        throw std::invalid_argument("HoughtonAction: map is not injective");
    }
  for (int r = 1; r <= rays_; ++r)
    for (std::int64_t j = 0; j <= B + M; ++j)
      if (!images.count(RayPoint{r, j}))
        throw std::invalid_argument("HoughtonAction: map is not surjective");
  return e;
}

HoughtonElem HoughtonAction::transposition(const RayPoint& a, const RayPoint& b) const {
  if (a == b) return make(std::vector<std::int64_t>(rays_, 0), {});
  return make(std::vector<std::int64_t>(rays_, 0), {{a, b}, {b, a}});
}

GroupElem HoughtonAction::identity() const {
  return GroupElem(GroupElem::Payload(HoughtonElem{std::vector<std::int64_t>(rays_, 0), {}}));
}

GroupElem HoughtonAction::multiply(const GroupElem& a, const GroupElem& b) const {
  const auto& ea = a.as<HoughtonElem>();
  const auto& eb = b.as<HoughtonElem>();
  std::vector<std::int64_t> offsets(rays_);
  for (int r = 0; r < rays_; ++r) offsets[r] = ea.offsets[r] + eb.offsets[r];
  std::int64_t B = std::max(max_except_index(ea.except), max_except_index(eb.except));
  std::int64_t M = max_abs_offset(ea.offsets) + max_abs_offset(eb.offsets);
  std::int64_t W = B + 2 * M + 2;
  std::vector<std::pair<RayPoint, RayPoint>> except;
  for (int r = 1; r <= rays_; ++r)
    for (std::int64_t k = 0; k <= W; ++k) {
      RayPoint p{r, k};
      RayPoint q = apply_raw(ea, apply_raw(eb, p));
      if (!(q.ray == r && q.index == k + offsets[r - 1])) except.emplace_back(p, q);
    }
  return GroupElem(GroupElem::Payload(make(std::move(offsets), std::move(except))));
}

GroupElem HoughtonAction::invert(const GroupElem& a) const {
  const auto& ea = a.as<HoughtonElem>();
  std::vector<std::int64_t> offsets(rays_);
  for (int r = 0; r < rays_; ++r) offsets[r] = -ea.offsets[r];
  std::int64_t B = max_except_index(ea.except);
  std::int64_t M = max_abs_offset(ea.offsets);
  std::int64_t W = B + 2 * M + 2;
  std::vector<std::pair<RayPoint, RayPoint>> except;
  for (int r = 1; r <= rays_; ++r)
    for (std::int64_t k = 0; k <= W; ++k) {
      RayPoint p{r, k};
      RayPoint q = apply_raw(ea, p);
      if (!(p.ray == q.ray && p.index == q.index + offsets[q.ray - 1])) except.emplace_back(q, p);
    }
  return GroupElem(GroupElem::Payload(make(std::move(offsets), std::move(except))));
}

Color HoughtonAction::apply(const GroupElem& a, const Color& s) const {
  if (!contains_color(s)) throw std::invalid_argument("HoughtonAction: color not in S");
  return Color(apply_raw(a.as<HoughtonElem>(), s.ray()));
}

bool HoughtonAction::contains_color(const Color& s) const {
  return s.is_ray() && s.ray().ray <= rays_;
}

std::string HoughtonAction::format_elem(const GroupElem& a) const {
  const auto& e = a.as<HoughtonElem>();
  std::string out = "{";
  for (std::size_t i = 0; i < e.except.size(); ++i) {
    if (i) out += ",";
    out += ray_point_str(e.except[i].first) + "->" + ray_point_str(e.except[i].second);
  }
  out += "; ";
  for (int r = 0; r < rays_; ++r) {
    if (r) out += ",";
    out += std::to_string(e.offsets[r]);
  }
  out += "}";
  return out;
}

std::optional<GroupElem> HoughtonAction::parse_elem(std::string_view text) const {
  text = trimmed(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::string_view> parts = split_top(body, ';');
  if (parts.size() != 2) return std::nullopt;
  std::vector<std::pair<RayPoint, RayPoint>> except;
  std::string_view map_part = trimmed(parts[0]);
  if (!map_part.empty()) {
    for (std::string_view entry : split_top(map_part, ',')) {
      entry = trimmed(entry);
      std::size_t arrow = entry.find("->");
      if (arrow == std::string_view::npos) return std::nullopt;
      auto src = ray_point_parse(trimmed(entry.substr(0, arrow)));
      auto dst = ray_point_parse(trimmed(entry.substr(arrow + 2)));
      if (!src || !dst) return std::nullopt;
      except.emplace_back(*src, *dst);
    }
  }
  std::vector<std::int64_t> offsets;
  for (std::string_view tok : split_top(trimmed(parts[1]), ',')) {
    tok = trimmed(tok);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
    offsets.push_back(v);
  }
  try {
    return GroupElem(GroupElem::Payload(make(std::move(offsets), std::move(except))));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string HoughtonAction::format_elem_tagged(const GroupElem& a) const {
  std::string bare = format_elem(a);
  return "H{" + std::to_string(rays_) + "; " + bare.substr(1);
}

std::optional<GroupElem> HoughtonAction::parse_elem_tagged(std::string_view text) const {
  text = trimmed(text);
  if (text.substr(0, 2) != "H{" || text.back() != '}') return std::nullopt;
  std::string_view body = text.substr(2, text.size() - 3);
  std::vector<std::string_view> parts = split_top(body, ';');
  if (parts.size() != 3) return std::nullopt;
  std::string_view ntok = trimmed(parts[0]);
  std::int64_t n = 0;
  auto [p, ec] = std::from_chars(ntok.data(), ntok.data() + ntok.size(), n);
  if (ec != std::errc() || p != ntok.data() + ntok.size() || n != rays_) return std::nullopt;
  std::string rebuilt = "{";
  rebuilt.append(parts[1].begin(), parts[1].end());
  rebuilt += ";";
  rebuilt.append(parts[2].begin(), parts[2].end());
  rebuilt += "}";
  return parse_elem(rebuilt);
}

std::vector<Color> HoughtonAction::orbit_representatives() const {
  // Finitary permutations are available, so the action is transitive.
  return {Color(RayPoint{1, 0})};
}

std::vector<GroupElem> HoughtonAction::generators() const {
  std::vector<GroupElem> out;
  for (int i = 2; i <= rays_; ++i) {
    std::vector<std::int64_t> offsets(rays_, 0);
    offsets[0] = -1;
    offsets[i - 1] = 1;
    out.push_back(GroupElem(
        GroupElem::Payload(make(std::move(offsets), {{RayPoint{1, 0}, RayPoint{i, 0}}}))));
  }
  out.push_back(GroupElem(GroupElem::Payload(transposition(RayPoint{1, 0}, RayPoint{1, 1}))));
  if (rays_ == 1)
    out.push_back(GroupElem(GroupElem::Payload(transposition(RayPoint{1, 1}, RayPoint{1, 2}))));
  return out;
}

GroupElem HoughtonAction::random_elem(Rng& rng) const {
  std::vector<GroupElem> gens = generators();
  GroupElem g = identity();
  int len = 1 + int(rng() % 8);
  for (int i = 0; i < len; ++i) {
    switch (rng() % 3) {
      case 0: g = multiply(g, gens[rng() % gens.size()]); break;
      case 1: g = multiply(g, invert(gens[rng() % gens.size()])); break;
      default: {
        int r = 1 + int(rng() % rays_);
        std::int64_t u = std::int64_t(rng() % 5);
        std::int64_t v = std::int64_t(rng() % 5);
        if (u == v) v = (v + 1) % 5;
        g = multiply(g, GroupElem(GroupElem::Payload(
                            transposition(RayPoint{r, u}, RayPoint{r, v}))));
      }
    }
  }
  return g;
}

Color HoughtonAction::random_color(Rng& rng) const {
  return Color(RayPoint{1 + int(rng() % rays_), std::int64_t(rng() % 10)});
}

}  // namespace tbt
