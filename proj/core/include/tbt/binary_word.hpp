#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tbt {

// Finite word over {0,1}, used as a prefix address along one color.
// The empty word is the whole axis.
class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::string_view bits) : bits_(bits) {
    for (char c : bits_)
      if (c != '0' && c != '1')
        throw std::invalid_argument("BinaryWord: invalid character '" +
                                    std::string(1, c) + "'");
  }

  static BinaryWord zeros(std::size_t n) { return BinaryWord(std::string(n, '0'), 0); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  const std::string& str() const { return bits_; }

  bool bit(std::size_t i) const { return bits_.at(i) == '1'; }
  char back() const { return bits_.back(); }

  bool is_prefix_of(const BinaryWord& other) const {
    return other.bits_.compare(0, bits_.size(), bits_) == 0 &&
           bits_.size() <= other.bits_.size();
  }

  BinaryWord append(char bit) const {
    if (bit != '0' && bit != '1') throw std::invalid_argument("BinaryWord::append");
    return BinaryWord(bits_ + bit, 0);
  }
  BinaryWord concat(const BinaryWord& w) const { return BinaryWord(bits_ + w.bits_, 0); }

  // Word with the final bit removed.
  BinaryWord parent() const {
    if (empty()) throw std::logic_error("BinaryWord::parent on empty word");
    return BinaryWord(bits_.substr(0, bits_.size() - 1), 0);
  }

  // Suffix after removing the given prefix.
  BinaryWord strip_prefix(const BinaryWord& prefix) const {
    if (!prefix.is_prefix_of(*this))
      throw std::logic_error("BinaryWord::strip_prefix: not a prefix");
    return BinaryWord(bits_.substr(prefix.size()), 0);
  }

  // Prefix after removing the given suffix.
  BinaryWord strip_suffix(const BinaryWord& suffix) const {
    if (suffix.size() > size() ||
        bits_.compare(size() - suffix.size(), suffix.size(), suffix.bits_) != 0)
      throw std::logic_error("BinaryWord::strip_suffix: not a suffix");
    return BinaryWord(bits_.substr(0, size() - suffix.size()), 0);
  }

  bool ends_with(const BinaryWord& suffix) const {
    return suffix.size() <= size() &&
           bits_.compare(size() - suffix.size(), suffix.size(), suffix.bits_) == 0;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  BinaryWord(std::string bits, int) : bits_(std::move(bits)) {}
  std::string bits_;
};

}  // namespace tbt
