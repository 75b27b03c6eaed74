#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "address.hpp"
#include "errors.hpp"

namespace geomgroup {

/// Address-indexed letters A, C, S and index-based aliases a, c, s, sigma.
enum class Letter { A, C, S, a, c, s, sigma };

inline bool is_indexed(Letter l) { return l == Letter::a || l == Letter::c || l == Letter::s || l == Letter::sigma; }

struct Generator {
  Letter letter = Letter::A;
  Address address;  // for A, C, S
  int index = 1;    // for a, c, s, sigma (>= 1)
  bool inverse = false;

  static Generator at(Letter l, Address a, bool inv = false) { return {l, std::move(a), 1, inv}; }
  static Generator indexed(Letter l, int i, bool inv = false) { return {l, Address{}, i, inv}; }

  /// The address the letter acts at (1^{i-1} for aliases).
  Address site() const { return is_indexed(letter) ? Address::right_branch(index - 1) : address; }

  Generator inverted() const {
    Generator g = *this;
    g.inverse = !g.inverse;
    return g;
  }

  friend bool operator==(const Generator& x, const Generator& y) {
    if (x.letter != y.letter || x.inverse != y.inverse) return false;
    return is_indexed(x.letter) ? x.index == y.index : x.address == y.address;
  }
};

using Word = std::vector<Generator>;

/// Short constructors, e.g. `using namespace geomgroup::letters; Word w{A("1"), a(2, true)};`
namespace letters {

inline Generator A(std::string_view bits = "", bool inv = false) { return Generator::at(Letter::A, Address::parse(bits), inv); }
inline Generator C(std::string_view bits = "", bool inv = false) { return Generator::at(Letter::C, Address::parse(bits), inv); }
inline Generator S(std::string_view bits = "", bool inv = false) { return Generator::at(Letter::S, Address::parse(bits), inv); }
inline Generator a(int i, bool inv = false) { return Generator::indexed(Letter::a, i, inv); }
inline Generator c(int i, bool inv = false) { return Generator::indexed(Letter::c, i, inv); }
inline Generator s(int i, bool inv = false) { return Generator::indexed(Letter::s, i, inv); }
inline Generator sigma(int i, bool inv = false) { return Generator::indexed(Letter::sigma, i, inv); }

}  // namespace letters

inline Word operator+(Word x, const Word& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

inline Word& operator+=(Word& x, const Word& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

inline Word power(const Generator& g, int e) {
  Word w;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) w.push_back(e < 0 ? g.inverted() : g);
  return w;
}

/// Reversed sequence with every sign flipped.
inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

/// Cancels adjacent x x^{-1} pairs.
inline Word free_reduce(const Word& w) {
  Word out;
  for (const auto& g : w) {
    if (!out.empty() && out.back() == g.inverted()) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

/// Prefixes alpha to every address; aliases must be expanded first.
inline Word shift_word(const Word& w, const Address& alpha) {
  Word out;
  out.reserve(w.size());
  for (const auto& g : w) {
    if (is_indexed(g.letter)) throw UnexpandedAlias();
    out.push_back(Generator::at(g.letter, alpha + g.address, g.inverse));
  }
  return out;
}

/// The shift endomorphism applied k times: indices grow by k, addresses gain 1^k.
inline Word shift(const Word& w, int k = 1) {
  Word out;
  out.reserve(w.size());
  for (auto g : w) {
    if (is_indexed(g.letter)) g.index += k;
    else g.address = Address::right_branch(k) + g.address;
    out.push_back(g);
  }
  return out;
}

/// Replaces a_i, c_i, s_i by A, C, S at 1^{i-1}; sigma letters are kept.
inline Word expand_indices(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& g : w) {
    switch (g.letter) {
      case Letter::a: out.push_back(Generator::at(Letter::A, g.site(), g.inverse)); break;
      case Letter::c: out.push_back(Generator::at(Letter::C, g.site(), g.inverse)); break;
      case Letter::s: out.push_back(Generator::at(Letter::S, g.site(), g.inverse)); break;
      default: out.push_back(g);
    }
  }
  return out;
}

inline int max_index(const Word& w) {
  int m = 0;
  for (const auto& g : w) {
    int i = is_indexed(g.letter) ? g.index : static_cast<int>(g.address.size()) + 1;
    m = std::max(m, i);
  }
  return m;
}

// ---- text ----

inline std::string letter_name(Letter l) {
  switch (l) {
    case Letter::A: return "A";
    case Letter::C: return "C";
    case Letter::S: return "S";
    case Letter::a: return "a";
    case Letter::c: return "c";
    case Letter::s: return "s";
    case Letter::sigma: return "b";
  }
  return "?";
}

inline std::string print_generator(const Generator& g) {
  std::string out = letter_name(g.letter);
  if (is_indexed(g.letter)) out += std::to_string(g.index);
  else out += "[" + g.address.bits() + "]";
  if (g.inverse) out += "'";
  return out;
}

/// Tokens separated by spaces; the empty word prints as "1".
inline std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& g : w) {
    if (!out.empty()) out += ' ';
    out += print_generator(g);
  }
  return out;
}

/// Generator grammar: `A[bits]`, `C[bits]`, `S[bits]`, `a<i>`, `c<i>`, `s<i>`,
/// `b<i>` (sigma), each optionally followed by `'`. "1" or blank is the empty word.
inline Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == text.size()) return w;
  }
  while (skip(), i < text.size()) {
    std::size_t start = i;
    char name = text[i++];
    Generator g;
    switch (name) {
      case 'A': case 'C': case 'S': {
        g.letter = name == 'A' ? Letter::A : name == 'C' ? Letter::C : Letter::S;
        if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' after " + std::string(1, name), i);
        std::size_t close = text.find(']', i);
        if (close == std::string_view::npos) throw ParseError("missing ']'", i);
        auto bits = text.substr(i + 1, close - i - 1);
        for (std::size_t k = 0; k < bits.size(); ++k)
          if (bits[k] != '0' && bits[k] != '1' && !(bits == "e"))
            throw ParseError("address must be a binary string", i + 1 + k);
        g.address = Address::parse(bits);
        i = close + 1;
        break;
      }
      case 'a': case 'c': case 's': case 'b': {
        g.letter = name == 'a' ? Letter::a : name == 'c' ? Letter::c : name == 's' ? Letter::s : Letter::sigma;
        std::size_t digits = i;
        long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          if (value > 1'000'000) throw ParseError("index too large", digits);
          ++i;
        }
        if (i == digits) throw ParseError("expected an index after " + std::string(1, name), i);
        if (value < 1) throw ParseError("indices start at 1", digits);
        g.index = static_cast<int>(value);
        break;
      }
      default:
        throw ParseError("unknown generator", start);
    }
    if (i < text.size() && text[i] == '\'') {
      g.inverse = true;
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '.' &&
        !std::isalpha(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character", i);
    w.push_back(g);
  }
  return w;
}

}  // namespace geomgroup
