#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tbt {

// Exact dyadic rational num / 2^exp, kept in lowest terms (num odd or zero,
// exp minimal, exp >= 0).  Arithmetic throws on overflow rather than wrap.
struct Dyadic {
  std::int64_t num = 0;
  int exp = 0;

  Dyadic() = default;
  Dyadic(std::int64_t n, int e) : num(n), exp(e) {
    if (e < 0 || e > 62) throw std::invalid_argument("Dyadic: exponent out of range");
    normalize();
  }
  static Dyadic from_int(std::int64_t n) { return Dyadic(n, 0); }

  void normalize() {
    if (num == 0) { exp = 0; return; }
    while (exp > 0 && num % 2 == 0) { num /= 2; --exp; }
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return Dyadic(shifted(a.num, e - a.exp) + shifted(b.num, e - b.exp), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return Dyadic(shifted(a.num, e - a.exp) - shifted(b.num, e - b.exp), e);
  }

  // Multiplication by a (signed) power of two: x * 2^k.
  Dyadic times_pow2(int k) const {
    if (num == 0) return Dyadic();
    if (k >= 0) {
      int drop = exp < k ? exp : k;
      return Dyadic(shifted(num, k - drop), exp - drop);
    }
    return Dyadic(num, exp - k);
  }

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return shifted(a.num, e - a.exp) <=> shifted(b.num, e - b.exp);
  }
  friend bool operator==(const Dyadic&, const Dyadic&) = default;

  // "0", "1", "3/8" with power-of-two denominator.
  std::string str() const {
    if (exp == 0) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(std::int64_t(1) << exp);
  }

 private:
  static std::int64_t shifted(std::int64_t v, int k) {
    if (k < 0 || k > 62) throw std::overflow_error("Dyadic: shift overflow");
    std::int64_t r;
    if (__builtin_mul_overflow(v, std::int64_t(1) << k, &r))
      throw std::overflow_error("Dyadic: overflow");
    return r;
  }
};

}  // namespace tbt
