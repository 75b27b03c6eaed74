#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace geomgroup {

/// A finite 0/1 string locating a subtree: 0 forks left, 1 forks right, and
/// the empty address is the root.
class Address {
 public:
  Address() = default;

  /// Bare binary string; "e" (CLI spelling) and "" both denote the root.
  static Address parse(std::string_view text) {
    if (text == "e") return {};
    Address a;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '0' && text[i] != '1') throw ParseError("address must be a binary string", i);
      a.bits_.push_back(text[i]);
    }
    return a;
  }

  static Address right_branch(std::size_t length) {
    Address a;
    a.bits_.assign(length, '1');
    return a;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }

  const std::string& bits() const noexcept { return bits_; }

  /// Text form; the root prints as "e".
  std::string str() const { return bits_.empty() ? "e" : bits_; }

  Address child(int bit) const {
    Address a = *this;
    a.bits_.push_back(bit ? '1' : '0');
    return a;
  }

  Address concat(const Address& tail) const {
    Address a = *this;
    a.bits_ += tail.bits_;
    return a;
  }

  Address drop_front(std::size_t n) const {
    Address a;
    a.bits_ = bits_.substr(n);
    return a;
  }

  Address prefix(std::size_t n) const {
    Address a;
    a.bits_ = bits_.substr(0, n);
    return a;
  }

  /// True when `*this` is a (not necessarily strict) prefix of `other`.
  bool is_prefix_of(const Address& other) const {
    return other.bits_.size() >= bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
  }

  /// Neither address is a prefix of the other.
  bool incompatible_with(const Address& other) const {
    return !is_prefix_of(other) && !other.is_prefix_of(*this);
  }

  bool all_ones() const { return bits_.find('0') == std::string::npos; }

  friend bool operator==(const Address&, const Address&) = default;
  friend std::strong_ordering operator<=>(const Address& a, const Address& b) {
    if (a.bits_.size() != b.bits_.size()) return a.bits_.size() <=> b.bits_.size();
    return a.bits_.compare(b.bits_) <=> 0;
  }

 private:
  std::string bits_;
};

inline Address operator+(const Address& a, const Address& b) { return a.concat(b); }

/// Every address of length at most `max_length`, shortest first.
inline std::vector<Address> addresses_up_to(std::size_t max_length) {
  std::vector<Address> out{Address{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() < max_length) {
      out.push_back(out[i].child(0));
      out.push_back(out[i].child(1));
    }
  }
  return out;
}

}  // namespace geomgroup

template <>
struct std::hash<geomgroup::Address> {
  std::size_t operator()(const geomgroup::Address& a) const noexcept {
    return std::hash<std::string>{}(a.bits()) ^ a.size();
  }
};
