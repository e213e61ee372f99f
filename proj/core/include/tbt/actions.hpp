#pragma once

#include "tbt/action.hpp"

namespace tbt {

// Trivial group on colors {1,...,k}; size 0 means countably many colors
// {1,2,...}, which drops the generation metadata.
class TrivialAction final : public Action {
 public:
  explicit TrivialAction(int size);

  std::string name() const override;
  GroupElem identity() const override { return GroupElem(); }
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem invert(const GroupElem& a) const override;
  Color apply(const GroupElem& a, const Color& s) const override;
  bool contains_color(const Color& s) const override;
  std::string format_elem(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem(std::string_view text) const override;
  std::string format_elem_tagged(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem_tagged(std::string_view text) const override;
  bool has_metadata() const override { return size_ > 0; }
  std::vector<Color> orbit_representatives() const override;
  std::vector<GroupElem> generators() const override { return {}; }
  GroupElem random_elem(Rng&) const override { return GroupElem(); }
  Color random_color(Rng& rng) const override;

  int size() const { return size_; }

 private:
  int size_;
};

// Z/2 acting on S = {1,2} by the swap.
class Cyclic2Action final : public Action {
 public:
  std::string name() const override { return "c2"; }
  GroupElem identity() const override { return GroupElem(GroupElem::Payload(false)); }
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem invert(const GroupElem& a) const override;
  Color apply(const GroupElem& a, const Color& s) const override;
  bool contains_color(const Color& s) const override;
  std::string format_elem(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem(std::string_view text) const override;
  std::string format_elem_tagged(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem_tagged(std::string_view text) const override;
  std::vector<Color> orbit_representatives() const override { return {Color(1)}; }
  std::vector<GroupElem> generators() const override;
  GroupElem random_elem(Rng& rng) const override;
  Color random_color(Rng& rng) const override;
};

// Thompson's group F acting on the dyadic rationals in (0,1).  Elements are
// reduced tree pair diagrams; arithmetic goes through exact piecewise dyadic
// affine maps.
class ThompsonFAction final : public Action {
 public:
  std::string name() const override { return "F"; }
  GroupElem identity() const override;
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem invert(const GroupElem& a) const override;
  Color apply(const GroupElem& a, const Color& s) const override;
  bool contains_color(const Color& s) const override { return s.is_dyadic(); }
  std::string format_elem(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem(std::string_view text) const override;
  std::string format_elem_tagged(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem_tagged(std::string_view text) const override;
  std::vector<Color> orbit_representatives() const override;
  std::vector<GroupElem> generators() const override;
  GroupElem random_elem(Rng& rng) const override;
  Color random_color(Rng& rng) const override;

  // Evaluation of the piecewise dyadic affine map at any dyadic in [0,1].
  static Dyadic evaluate(const FElem& f, const Dyadic& x);
  // x_0 and x_1, the standard generators.
  static FElem x0();
  static FElem x1();
  // Validates leaf counts and reduces; the canonical constructor.
  static FElem make(FTreePtr dom, FTreePtr ran);
};

// Houghton's group H_n acting on n rays {1..n} x N by eventual translations.
class HoughtonAction final : public Action {
 public:
  explicit HoughtonAction(int rays);

  std::string name() const override;
  GroupElem identity() const override;
  GroupElem multiply(const GroupElem& a, const GroupElem& b) const override;
  GroupElem invert(const GroupElem& a) const override;
  Color apply(const GroupElem& a, const Color& s) const override;
  bool contains_color(const Color& s) const override;
  std::string format_elem(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem(std::string_view text) const override;
  std::string format_elem_tagged(const GroupElem& a) const override;
  std::optional<GroupElem> parse_elem_tagged(std::string_view text) const override;
  bool has_metadata() const override { return rays_ >= 2; }
  std::vector<Color> orbit_representatives() const override;
  std::vector<GroupElem> generators() const override;
  GroupElem random_elem(Rng& rng) const override;
  Color random_color(Rng& rng) const override;

  int rays() const { return rays_; }

  // Validated canonical constructor: strips default-agreeing exceptional
  // entries and checks the data denotes a bijection of the rays.
  HoughtonElem make(std::vector<std::int64_t> offsets,
                    std::vector<std::pair<RayPoint, RayPoint>> except) const;
  // Swap of two ray points (a finitary permutation).
  HoughtonElem transposition(const RayPoint& a, const RayPoint& b) const;

 private:
  RayPoint apply_raw(const HoughtonElem& e, const RayPoint& p) const;
  int rays_;
};

}  // namespace tbt
