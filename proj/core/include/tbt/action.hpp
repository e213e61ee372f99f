#pragma once

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tbt/color.hpp"
#include "tbt/ftree.hpp"
#include "tbt/houghton_elem.hpp"

namespace tbt {

using Rng = std::mt19937_64;

// Value-type handle for an element of the acting group.  Every bundled action
// stores a canonical payload, so structural equality is group equality.
class GroupElem {
 public:
  using Payload = std::variant<std::monostate, bool, FElem, HoughtonElem>;

  GroupElem() = default;
  explicit GroupElem(Payload p) : p_(std::move(p)) {}

  const Payload& payload() const { return p_; }
  template <class T>
  const T& as() const {
    const T* v = std::get_if<T>(&p_);
    if (!v) throw std::invalid_argument("GroupElem: payload belongs to another action");
    return *v;
  }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;

 private:
  Payload p_;
};

// A group G with exact element arithmetic and a faithful action on the color
// set S.  multiply(a,b) composes as functions: apply(multiply(a,b), s) ==
// apply(a, apply(b, s)).
class Action {
 public:
  virtual ~Action() = default;

  // Stable identifier, e.g. "trivial:3", "c2", "F", "houghton:3".
  virtual std::string name() const = 0;

  virtual GroupElem identity() const = 0;
  virtual GroupElem multiply(const GroupElem& a, const GroupElem& b) const = 0;
  virtual GroupElem invert(const GroupElem& a) const = 0;
  bool equal(const GroupElem& a, const GroupElem& b) const { return a == b; }
  bool is_identity(const GroupElem& a) const { return a == identity(); }

  virtual Color apply(const GroupElem& a, const Color& s) const = 0;
  virtual bool contains_color(const Color& s) const = 0;

  // Bare textual element forms as used inside words and serialized elements.
  virtual std::string format_elem(const GroupElem& a) const = 0;
  virtual std::optional<GroupElem> parse_elem(std::string_view text) const = 0;
  // Self-describing forms, e.g. "c2:s", "F:(.|.)", "H{3; ...; 0,0,0}".
  virtual std::string format_elem_tagged(const GroupElem& a) const;
  virtual std::optional<GroupElem> parse_elem_tagged(std::string_view text) const;

  virtual std::string format_color(const Color& s) const { return s.str(); }
  std::optional<Color> parse_color(std::string_view text) const;

  // Generation metadata; empty when the action has none (infinite orbit sets
  // or groups without a bundled finite generating set).
  virtual bool has_metadata() const { return true; }
  virtual std::vector<Color> orbit_representatives() const = 0;
  virtual std::vector<GroupElem> generators() const = 0;

  virtual GroupElem random_elem(Rng& rng) const = 0;
  virtual Color random_color(Rng& rng) const = 0;

  bool same_as(const Action& other) const { return name() == other.name(); }
};

using ActionPtr = std::shared_ptr<const Action>;

// Factory for the bundled actions from a CLI-style selector:
// trivial:<k>, c2, F, houghton:<n>.  Throws on an unknown selector.
ActionPtr make_action(std::string_view selector);

}  // namespace tbt
