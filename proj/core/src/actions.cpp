#include "tbt/actions.hpp"

#include <charconv>

namespace tbt {

std::string Action::format_elem_tagged(const GroupElem& a) const {
  return name() + ":" + format_elem(a);
}

std::optional<GroupElem> Action::parse_elem_tagged(std::string_view text) const {
  std::string prefix = name() + ":";
  if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
  return parse_elem(text.substr(prefix.size()));
}

std::optional<Color> Action::parse_color(std::string_view text) const {
  auto c = Color::parse(text);
  if (!c || !contains_color(*c)) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------- trivial --

TrivialAction::TrivialAction(int size) : size_(size) {
  if (size < 0) throw std::invalid_argument("TrivialAction: negative size");
}

std::string TrivialAction::name() const {
  return size_ == 0 ? "trivial:inf" : "trivial:" + std::to_string(size_);
}

GroupElem TrivialAction::multiply(const GroupElem& a, const GroupElem& b) const {
  a.as<std::monostate>();
  b.as<std::monostate>();
  return GroupElem();
}

GroupElem TrivialAction::invert(const GroupElem& a) const {
  a.as<std::monostate>();
  return GroupElem();
}

Color TrivialAction::apply(const GroupElem& a, const Color& s) const {
  a.as<std::monostate>();
  if (!contains_color(s)) throw std::invalid_argument("TrivialAction: color not in S");
  return s;
}

bool TrivialAction::contains_color(const Color& s) const {
  return s.is_index() && (size_ == 0 || s.index() <= size_);
}

std::string TrivialAction::format_elem(const GroupElem& a) const {
  a.as<std::monostate>();
  return "e";
}

std::optional<GroupElem> TrivialAction::parse_elem(std::string_view text) const {
  if (text == "e") return GroupElem();
  return std::nullopt;
}

std::string TrivialAction::format_elem_tagged(const GroupElem& a) const {
  return "triv:" + format_elem(a);
}

std::optional<GroupElem> TrivialAction::parse_elem_tagged(std::string_view text) const {
  if (text.substr(0, 5) != "triv:") return std::nullopt;
  return parse_elem(text.substr(5));
}

std::vector<Color> TrivialAction::orbit_representatives() const {
  if (size_ == 0) throw std::logic_error("TrivialAction: countable S has no finite orbit list");
  std::vector<Color> out;
  for (int i = 1; i <= size_; ++i) out.emplace_back(i);
  return out;
}

Color TrivialAction::random_color(Rng& rng) const {
  int bound = size_ == 0 ? 8 : size_;
  return Color(int(rng() % bound) + 1);
}

// --------------------------------------------------------------------- c2 --

GroupElem Cyclic2Action::multiply(const GroupElem& a, const GroupElem& b) const {
  return GroupElem(GroupElem::Payload(a.as<bool>() != b.as<bool>()));
}

GroupElem Cyclic2Action::invert(const GroupElem& a) const {
  return GroupElem(GroupElem::Payload(a.as<bool>()));
}

Color Cyclic2Action::apply(const GroupElem& a, const Color& s) const {
  if (!contains_color(s)) throw std::invalid_argument("Cyclic2Action: color not in S");
  if (!a.as<bool>()) return s;
  return Color(s.index() == 1 ? 2 : 1);
}

bool Cyclic2Action::contains_color(const Color& s) const {
  return s.is_index() && s.index() <= 2;
}

std::string Cyclic2Action::format_elem(const GroupElem& a) const {
  return a.as<bool>() ? "s" : "e";
}

std::optional<GroupElem> Cyclic2Action::parse_elem(std::string_view text) const {
  if (text == "e") return identity();
  if (text == "s") return GroupElem(GroupElem::Payload(true));
  return std::nullopt;
}

std::string Cyclic2Action::format_elem_tagged(const GroupElem& a) const {
  return "c2:" + format_elem(a);
}

std::optional<GroupElem> Cyclic2Action::parse_elem_tagged(std::string_view text) const {
  if (text.substr(0, 3) != "c2:") return std::nullopt;
  return parse_elem(text.substr(3));
}

std::vector<GroupElem> Cyclic2Action::generators() const {
  return {GroupElem(GroupElem::Payload(true))};
}

GroupElem Cyclic2Action::random_elem(Rng& rng) const {
  return GroupElem(GroupElem::Payload(bool(rng() & 1)));
}

Color Cyclic2Action::random_color(Rng& rng) const { return Color(int(rng() % 2) + 1); }

// ---------------------------------------------------------------- factory --

ActionPtr make_action(std::string_view selector) {
  auto parse_suffix = [](std::string_view s) -> int {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 1 || v > 64)
      throw std::invalid_argument("make_action: bad numeric suffix '" + std::string(s) + "'");
    return v;
  };
  if (selector == "c2") return std::make_shared<Cyclic2Action>();
  if (selector == "F") return std::make_shared<ThompsonFAction>();
  if (selector.substr(0, 8) == "trivial:")
    return std::make_shared<TrivialAction>(parse_suffix(selector.substr(8)));
  if (selector.substr(0, 9) == "houghton:")
    return std::make_shared<HoughtonAction>(parse_suffix(selector.substr(9)));
  throw std::invalid_argument("make_action: unknown action '" + std::string(selector) +
                              "' (expected trivial:<k>, c2, F, houghton:<n>)");
}

}  // namespace tbt
