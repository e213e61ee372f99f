#include "tbt/brick.hpp"

#include <algorithm>
#include <stdexcept>

namespace tbt {

Brick::Brick(int cube, std::vector<Entry> entries) : cube_(cube), entries_(std::move(entries)) {
  if (cube < 1) throw std::invalid_argument("Brick: cube index must be >= 1");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second.empty())
      throw std::invalid_argument("Brick: empty word stored for a color");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw std::invalid_argument("Brick: duplicate color");
  }
}

BinaryWord Brick::word_at(const Color& c) const {
  for (const auto& [col, w] : entries_)
    if (col == c) return w;
  return BinaryWord();
}

Brick Brick::with_word(const Color& c, const BinaryWord& w) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + 1);
  for (const auto& e : entries_)
    if (e.first != c) out.push_back(e);
  if (!w.empty()) out.emplace_back(c, w);
  return Brick(cube_, std::move(out));
}

std::size_t Brick::depth() const {
  std::size_t d = 0;
  for (const auto& [c, w] : entries_) d += w.size();
  return d;
}

std::string Brick::str() const {
  std::string out = "B[" + std::to_string(cube_) + "]{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].first.str() + "=" + entries_[i].second.str();
  }
  return out + "}";
}

std::optional<Brick> Brick::parse(std::string_view text) {
  if (text.size() < 5 || text.substr(0, 2) != "B[") return std::nullopt;
  auto rb = text.find(']');
  if (rb == std::string_view::npos) return std::nullopt;
  int cube = 0;
  for (char c : text.substr(2, rb - 2)) {
    if (c < '0' || c > '9') return std::nullopt;
    cube = cube * 10 + (c - '0');
    if (cube > 1'000'000) return std::nullopt;
  }
  if (cube < 1) return std::nullopt;
  if (rb + 1 >= text.size() || text[rb + 1] != '{' || text.back() != '}')
    return std::nullopt;
  std::string_view body = text.substr(rb + 2, text.size() - rb - 3);
  std::vector<Brick::Entry> entries;
  std::size_t pos = 0;
  while (pos < body.size()) {
    // Entry boundary: comma at parenthesis depth 0 (ray colors contain commas).
    int depth = 0;
    std::size_t end = pos;
    while (end < body.size() && (depth > 0 || body[end] != ',')) {
      if (body[end] == '(') ++depth;
      if (body[end] == ')') --depth;
      ++end;
    }
    std::string_view item = body.substr(pos, end - pos);
    auto eq = item.rfind('=');
    if (eq == std::string_view::npos) return std::nullopt;
    auto color = Color::parse(item.substr(0, eq));
    if (!color) return std::nullopt;
    try {
      BinaryWord w{item.substr(eq + 1)};
      if (w.empty()) return std::nullopt;
      entries.emplace_back(*color, w);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    pos = end + (end < body.size() ? 1 : 0);
    if (end < body.size() && pos == body.size()) return std::nullopt;  // trailing comma
  }
  try {
    return Brick(cube, std::move(entries));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

bool brick_subset(const Brick& a, const Brick& b) {
  if (a.cube() != b.cube()) return false;
  for (const auto& [c, w] : b.entries())
    if (!w.is_prefix_of(a.word_at(c))) return false;
  return true;
}

std::optional<Brick> brick_intersection(const Brick& a, const Brick& b) {
  if (a.cube() != b.cube()) return std::nullopt;
  std::vector<Brick::Entry> out = a.entries();
  for (const auto& [c, wb] : b.entries()) {
    bool found = false;
    for (auto& [ca, wa] : out) {
      if (ca != c) continue;
      found = true;
      if (wa.is_prefix_of(wb)) wa = wb;
      else if (!wb.is_prefix_of(wa)) return std::nullopt;
      break;
    }
    if (!found) out.emplace_back(c, wb);
  }
  return Brick(a.cube(), std::move(out));
}

std::optional<Color> sibling_color(const Brick& a, const Brick& b) {
  if (a.cube() != b.cube()) return std::nullopt;
  if (a.entries().size() != b.entries().size()) return std::nullopt;
  // Entries are sorted, so a single pass finds the one differing color.
  int diff = -1;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (a.entries()[k] == b.entries()[k]) continue;
    if (diff >= 0) return std::nullopt;
    diff = int(k);
  }
  if (diff < 0) return std::nullopt;  // identical bricks are not siblings
  const auto& [ca, wa] = a.entries()[diff];
  const auto& [cb, wb] = b.entries()[diff];
  if (ca != cb || wa.size() != wb.size()) return std::nullopt;
  if (wa.parent() != wb.parent() || wa.back() == wb.back()) return std::nullopt;
  return ca;
}

PointPrefix::PointPrefix(int cube, std::vector<std::pair<Color, BinaryWord>> e)
    : cube(cube), entries(std::move(e)) {
  if (cube < 1) throw std::invalid_argument("PointPrefix: cube index must be >= 1");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw std::invalid_argument("PointPrefix: duplicate color");
}

BinaryWord PointPrefix::word_at(const Color& c) const {
  for (const auto& [col, w] : entries)
    if (col == c) return w;
  return BinaryWord();
}

BinaryWord PointPrefix::padded(const Color& c, std::size_t n) const {
  BinaryWord w = word_at(c);
  return w.size() >= n ? w : w.concat(BinaryWord::zeros(n - w.size()));
}

PointPrefix PointPrefix::with_word(const Color& c, const BinaryWord& w) const {
  std::vector<std::pair<Color, BinaryWord>> out;
  out.reserve(entries.size() + 1);
  for (const auto& e : entries)
    if (e.first != c) out.push_back(e);
  if (!w.empty()) out.emplace_back(c, w);
  return PointPrefix(cube, std::move(out));
}

std::string PointPrefix::str() const {
  std::string out = "P[" + std::to_string(cube) + "]{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].first.str() + "=" + entries[i].second.str();
  }
  return out + "}";
}

}  // namespace tbt
