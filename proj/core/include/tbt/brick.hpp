#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbt/binary_word.hpp"
#include "tbt/color.hpp"

namespace tbt {

// Dyadic brick B(psi) inside one cube of C^S(m): a finite map from colors to
// prefix words.  Colors with empty word are not stored, so B[k]{} is the whole
// k-th cube.  Entries are kept sorted by color; equality is structural.
class Brick {
 public:
  using Entry = std::pair<Color, BinaryWord>;

  explicit Brick(int cube = 1) : cube_(cube) {
    if (cube < 1) throw std::invalid_argument("Brick: cube index must be >= 1");
  }
  Brick(int cube, std::vector<Entry> entries);

  int cube() const { return cube_; }
  const std::vector<Entry>& entries() const { return entries_; }
  bool is_whole_cube() const { return entries_.empty(); }

  // Word at a color; the empty word if the color is unconstrained.
  BinaryWord word_at(const Color& c) const;
  bool constrains(const Color& c) const { return !word_at(c).empty(); }

  // Copy with the word at c replaced (entry dropped when the word is empty).
  Brick with_word(const Color& c, const BinaryWord& w) const;
  Brick with_cube(int cube) const { return Brick(cube, entries_); }

  // Total prefix depth, summed over colors.
  std::size_t depth() const;

  friend bool operator==(const Brick&, const Brick&) = default;
  friend std::strong_ordering operator<=>(const Brick&, const Brick&) = default;

  // "B[2]{1=01,3=1}"; whole cube prints as "B[2]{}".
  std::string str() const;
  static std::optional<Brick> parse(std::string_view text);

 private:
  int cube_;
  std::vector<Entry> entries_;
};

// a <= b as subsets of C^S(m): same cube and every constraint of b is a
// prefix of the corresponding constraint of a.
bool brick_subset(const Brick& a, const Brick& b);

// Meet of two bricks: per-color prefix merge; empty when the cubes differ or
// some color's words are prefix-incomparable.
std::optional<Brick> brick_intersection(const Brick& a, const Brick& b);

// When a and b are the two halves of one brick split along a single color,
// that color; empty otherwise.
std::optional<Color> sibling_color(const Brick& a, const Brick& b);

// Finite approximation of a point of C^S(m): stored coordinates are prefixes,
// and whenever a concrete point is needed the unstated tail (and every
// unstated color) reads as all zeros.
struct PointPrefix {
  int cube = 1;
  std::vector<std::pair<Color, BinaryWord>> entries;  // sorted by color

  PointPrefix() = default;
  PointPrefix(int cube, std::vector<std::pair<Color, BinaryWord>> e);

  BinaryWord word_at(const Color& c) const;
  // Coordinate prefix padded with zeros up to n bits.
  BinaryWord padded(const Color& c, std::size_t n) const;
  PointPrefix with_word(const Color& c, const BinaryWord& w) const;

  friend bool operator==(const PointPrefix&, const PointPrefix&) = default;
  std::string str() const;
};

}  // namespace tbt
