#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "address.hpp"
#include "errors.hpp"

namespace geomgroup {

/// Reduced word in the free group on generators x_γ indexed by addresses.
/// A generator is stored as a positive code (1 followed by the bits of γ);
/// its inverse as the negated code.
class FreeWord {
 public:
  static constexpr std::size_t max_depth = 62;

  FreeWord() = default;

  static std::int64_t code(const Address& a) {
    if (a.size() > max_depth) throw BudgetExhausted(max_depth);
    std::int64_t c = 1;
    for (std::size_t i = 0; i < a.size(); ++i) c = (c << 1) | a[i];
    return c;
  }

  static Address address_of(std::int64_t code) {
    if (code < 0) code = -code;
    std::string bits;
    while (code > 1) {
      bits.insert(bits.begin(), static_cast<char>('0' + (code & 1)));
      code >>= 1;
    }
    return Address::parse(bits);
  }

  static FreeWord generator(const Address& a, bool inverse = false) {
    FreeWord w;
    w.letters_.push_back(inverse ? -code(a) : code(a));
    return w;
  }

  static FreeWord from_letters(const std::vector<std::int64_t>& letters) {
    FreeWord w;
    for (auto x : letters) w.push(x);
    return w;
  }

  const std::vector<std::int64_t>& letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept { return letters_.size(); }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (auto& x : w.letters_) x = -x;
    return w;
  }

  FreeWord& operator*=(const FreeWord& o) {
    for (auto x : o.letters_) push(x);
    return *this;
  }

  friend FreeWord operator*(FreeWord x, const FreeWord& y) { return x *= y; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

  /// Replaces every x_γ by image(γ) (a group homomorphism on the free group).
  template <class Image>
  FreeWord substitute(Image&& image) const {
    FreeWord out;
    for (auto x : letters_) {
      const FreeWord& img = image(x > 0 ? x : -x);
      if (x > 0) {
        out *= img;
      } else {
        for (auto it = img.letters_.rbegin(); it != img.letters_.rend(); ++it) out.push(-*it);
      }
    }
    return out;
  }

 private:
  void push(std::int64_t x) {
    if (!letters_.empty() && letters_.back() == -x) letters_.pop_back();
    else letters_.push_back(x);
  }

  std::vector<std::int64_t> letters_;
};

/// Factors `x:γ` (γ binary, or `e` for the root) with optional `'`, joined by '.';
/// the identity is "1".
inline std::string print_free_word(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (auto x : w.letters()) {
    if (!out.empty()) out += '.';
    out += "x:" + FreeWord::address_of(x).str();
    if (x < 0) out += '\'';
  }
  return out;
}

inline FreeWord parse_free_word(std::string_view text, std::size_t offset = 0) {
  if (text == "1") return {};
  FreeWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, 2, "x:") != 0) throw ParseError("expected 'x:'", offset + i);
    i += 2;
    std::size_t start = i;
    while (i < text.size() && text[i] != '.' && text[i] != '\'') ++i;
    Address a;
    try {
      a = Address::parse(text.substr(start, i - start));
    } catch (const ParseError& e) {
      throw ParseError("bad generator address", offset + start + e.offset());
    }
    bool inv = false;
    if (i < text.size() && text[i] == '\'') {
      inv = true;
      ++i;
    }
    w *= FreeWord::generator(a, inv);
    if (i < text.size()) {
      if (text[i] != '.') throw ParseError("expected '.'", offset + i);
      ++i;
      if (i == text.size()) throw ParseError("trailing '.'", offset + i);
    }
  }
  if (text.empty()) throw ParseError("empty free-group word", offset);
  return w;
}

}  // namespace geomgroup
