#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "tbt/dyadic.hpp"

namespace tbt {

// A point of a Houghton ray system: ray index (1-based) and position on the ray.
struct RayPoint {
  int ray = 1;
  std::int64_t index = 0;
  friend auto operator<=>(const RayPoint&, const RayPoint&) = default;
};

// An element of the color set S.  Three concrete shapes cover the bundled
// actions: integer index (finite S), dyadic rational in (0,1) (Thompson F),
// ray point (Houghton).  Ordered by shape, then value; the order fixes the
// canonical sort used everywhere bricks are serialized.
class Color {
 public:
  Color() : v_(1) {}
  explicit Color(int index) : v_(index) {
    if (index < 1) throw std::invalid_argument("Color: index must be >= 1");
  }
  explicit Color(const Dyadic& d) : v_(d) {
    if (d <= Dyadic(0, 0) || d >= Dyadic(1, 0) )
      throw std::invalid_argument("Color: dyadic must lie in (0,1)");
  }
  explicit Color(const RayPoint& p) : v_(p) {
    if (p.ray < 1 || p.index < 0) throw std::invalid_argument("Color: bad ray point");
  }

  bool is_index() const { return std::holds_alternative<int>(v_); }
  bool is_dyadic() const { return std::holds_alternative<Dyadic>(v_); }
  bool is_ray() const { return std::holds_alternative<RayPoint>(v_); }

  int index() const { return std::get<int>(v_); }
  const Dyadic& dyadic() const { return std::get<Dyadic>(v_); }
  const RayPoint& ray() const { return std::get<RayPoint>(v_); }

  friend bool operator==(const Color&, const Color&) = default;
  friend std::strong_ordering operator<=>(const Color& a, const Color& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
    if (a.is_index()) return a.index() <=> b.index();
    if (a.is_dyadic()) return a.dyadic() <=> b.dyadic();
    return a.ray() <=> b.ray();
  }

  // "3" | "3/8" | "(2,7)"
  std::string str() const;

  // Parses any of the textual color shapes; returns nothing on bad syntax.
  static std::optional<Color> parse(std::string_view text);

 private:
  std::variant<int, Dyadic, RayPoint> v_;
};

}  // namespace tbt
