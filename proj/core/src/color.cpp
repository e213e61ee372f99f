#include "tbt/color.hpp"

#include <cstdlib>

namespace tbt {
namespace {

bool parse_int64(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    if (__builtin_mul_overflow(v, 10, &v)) return false;
    if (__builtin_add_overflow(v, s[i] - '0', &v)) return false;
  }
  out = s[0] == '-' ? -v : v;
  return true;
}

}  // namespace

std::string Color::str() const {
  if (is_index()) return std::to_string(index());
  if (is_dyadic()) return dyadic().str();
  return "(" + std::to_string(ray().ray) + "," + std::to_string(ray().index) + ")";
}

std::optional<Color> Color::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '(') {
    if (text.back() != ')') return std::nullopt;
    auto body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    std::int64_t ray = 0, idx = 0;
    if (!parse_int64(body.substr(0, comma), ray)) return std::nullopt;
    if (!parse_int64(body.substr(comma + 1), idx)) return std::nullopt;
    if (ray < 1 || ray > 1'000'000 || idx < 0) return std::nullopt;
    return Color(RayPoint{int(ray), idx});
  }
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::int64_t num = 0, den = 0;
    if (!parse_int64(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int64(text.substr(slash + 1), den)) return std::nullopt;
    if (num <= 0 || den <= 0 || (den & (den - 1)) != 0) return std::nullopt;
    int exp = 0;
    while ((std::int64_t(1) << exp) < den) ++exp;
    Dyadic d(num, exp);
    if (d <= Dyadic(0, 0) || d >= Dyadic(1, 0)) return std::nullopt;
    if (d.num != num || d.exp != exp) return std::nullopt;  // demand lowest terms
    return Color(d);
  }
  std::int64_t idx = 0;
  if (!parse_int64(text, idx) || idx < 1 || idx > 1'000'000'000) return std::nullopt;
  return Color(int(idx));
}

}  // namespace tbt
