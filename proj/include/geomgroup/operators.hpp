#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "generator.hpp"
#include "ld.hpp"
#include "tree.hpp"

namespace geomgroup {

/// Why a word did not act: the first letter whose pattern did not match.
struct ActionFailure {
  Generator generator;
  Address address;
  std::size_t prefix = 0;  // length of the shortest undefined prefix
  std::string reason;
};

inline std::string describe(const ActionFailure& f) {
  return "undefined action: " + print_generator(f.generator) + " at address " + f.address.str() +
         " (prefix " + std::to_string(f.prefix) + "): " + f.reason;
}

/// Either a value or the reason a partial operation was undefined.
template <class T>
class Partial {
 public:
  Partial(T value) : v_(std::move(value)) {}
  Partial(ActionFailure failure) : v_(std::move(failure)) {}

  bool defined() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return defined(); }
  const T& value() const { return std::get<0>(v_); }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  const ActionFailure& failure() const { return std::get<1>(v_); }

 private:
  std::variant<T, ActionFailure> v_;
};

class SigmaNeedsLD : public Error {
 public:
  SigmaNeedsLD() : Error("sigma letters act only through an LD system") {}
};

namespace detail {

template <class L>
Partial<BasicTree<L>> mismatch(const Generator& g, const std::string& why) {
  return ActionFailure{g, g.site(), 1, why};
}

}  // namespace detail

/// One generator on one tree; C and S (and sigma) are twisted by `ld`.
template <class LD>
Partial<BasicTree<typename LD::label_type>> apply_generator(const BasicTree<typename LD::label_type>& t,
                                                            const Generator& g, const LD& ld) {
  using T = BasicTree<typename LD::label_type>;
  const Address site = g.site();
  auto sub = try_subtree(t, site);
  if (!sub) return detail::mismatch<typename LD::label_type>(g, "address outside skeleton");
  const T& u = *sub;
  std::optional<T> image;
  switch (g.letter) {
    case Letter::A:
    case Letter::a:
      if (!g.inverse) {
        if (u.is_leaf() || u.right().is_leaf()) return detail::mismatch<typename LD::label_type>(g, "subtree is not of the form t1(t2t3)");
        image = (u.left() * u.right().left()) * u.right().right();
      } else {
        if (u.is_leaf() || u.left().is_leaf()) return detail::mismatch<typename LD::label_type>(g, "subtree is not of the form (t1t2)t3");
        image = u.left().left() * (u.left().right() * u.right());
      }
      break;
    case Letter::C:
    case Letter::c:
      if (u.is_leaf()) return detail::mismatch<typename LD::label_type>(g, "subtree is a leaf");
      if (!g.inverse) image = tree_bracket(u.left(), u.right(), ld) * u.left();
      else image = u.right() * tree_unbracket(u.right(), u.left(), ld);
      break;
    case Letter::S:
    case Letter::s:
    case Letter::sigma:
      if (u.is_leaf() || u.right().is_leaf()) return detail::mismatch<typename LD::label_type>(g, "subtree is not of the form t1(t2t3)");
      if (!g.inverse) {
        const T& t1 = u.left();
        image = tree_bracket(t1, u.right().left(), ld) * (t1 * u.right().right());
      } else {
        const T& v = u.right().left();
        image = v * (tree_unbracket(v, u.left(), ld) * u.right().right());
      }
      break;
  }
  return graft(t, site, *image);
}

/// Plain (untwisted) action; sigma letters are rejected.
template <class L>
Partial<BasicTree<L>> apply_generator(const BasicTree<L>& t, const Generator& g) {
  if (g.letter == Letter::sigma) throw SigmaNeedsLD();
  return apply_generator(t, g, TrivialLD<L>{});
}

/// Left-to-right action; undefined as soon as some prefix is.
template <class LD>
Partial<BasicTree<typename LD::label_type>> apply_word(const BasicTree<typename LD::label_type>& t,
                                                       const Word& w, const LD& ld) {
  BasicTree<typename LD::label_type> cur = t;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto next = apply_generator(cur, w[k], ld);
    if (!next) {
      ActionFailure f = next.failure();
      f.prefix = k + 1;
      return f;
    }
    cur = *next;
  }
  return cur;
}

template <class L>
Partial<BasicTree<L>> apply_word(const BasicTree<L>& t, const Word& w) {
  for (const auto& g : w)
    if (g.letter == Letter::sigma) throw SigmaNeedsLD();
  return apply_word(t, w, TrivialLD<L>{});
}

/// Where the subtree at `gamma` sits after `g` acts (with a trivial bracket), if
/// it survives as a whole.
inline std::optional<Address> try_heir(const Generator& g, const Address& gamma) {
  const Address alpha = g.site();
  if (gamma.incompatible_with(alpha)) return gamma;
  if (!alpha.is_prefix_of(gamma)) return std::nullopt;
  const std::string rest = gamma.drop_front(alpha.size()).bits();
  auto starts = [&](const char* p) { return rest.rfind(p, 0) == 0; };
  auto tail = [&](std::size_t n) { return Address::parse(rest.substr(n)); };
  auto out = [&](const char* head, std::size_t n) { return alpha + Address::parse(head) + tail(n); };
  switch (g.letter) {
    case Letter::A:
    case Letter::a:
      if (!g.inverse) {
        if (starts("0")) return out("00", 1);
        if (starts("10")) return out("01", 2);
        if (starts("11")) return out("1", 2);
      } else {
        if (starts("00")) return out("0", 2);
        if (starts("01")) return out("10", 2);
        if (starts("1")) return out("11", 1);
      }
      return std::nullopt;
    case Letter::C:
    case Letter::c:
      if (starts("0")) return out("1", 1);
      if (starts("1")) return out("0", 1);
      return std::nullopt;
    case Letter::S:
    case Letter::s:
    case Letter::sigma:
      if (starts("0")) return out("10", 1);
      if (starts("10")) return out("0", 2);
      if (starts("11")) return out("11", 2);
      return std::nullopt;
  }
  return std::nullopt;
}

inline Address heir(const Generator& g, const Address& gamma) {
  auto h = try_heir(g, gamma);
  if (!h) throw NoHeir(gamma.str());
  return *h;
}

// ---- orbits ----

struct OrbitEdge {
  std::size_t from, to;
  Generator generator;
};

template <class L>
struct Orbit {
  std::vector<BasicTree<L>> trees;  // breadth-first discovery order
  std::vector<OrbitEdge> edges;     // positive letters only
};

/// Breadth-first closure of `start` under the letters in `families` (at every
/// address, both signs). Throws CapExceeded once more than `cap` trees are found.
template <class LD>
Orbit<typename LD::label_type> orbit(const BasicTree<typename LD::label_type>& start,
                                     const std::vector<Letter>& families, std::size_t cap, const LD& ld,
                                     bool with_edges = false) {
  using L = typename LD::label_type;
  auto key = [](const BasicTree<L>& t) {
    return print_tree_with(t, [](const L& x) { return std::to_string(x); });
  };
  Orbit<L> out;
  std::unordered_map<std::string, std::size_t> seen;
  out.trees.push_back(start);
  seen.emplace(key(start), 0);
  for (std::size_t i = 0; i < out.trees.size(); ++i) {
    const auto t = out.trees[i];
    for (const auto& alpha : internal_addresses(t)) {
      for (Letter l : families) {
        for (bool inv : {false, true}) {
          Generator g = Generator::at(l, alpha, inv);
          auto image = apply_generator(t, g, ld);
          if (!image) continue;
          auto [it, fresh] = seen.emplace(key(*image), out.trees.size());
          if (fresh) {
            if (out.trees.size() >= cap) throw CapExceeded(out.trees.size());
            out.trees.push_back(*image);
          }
          if (with_edges && !inv) out.edges.push_back({i, it->second, g});
        }
      }
    }
  }
  return out;
}

template <class L>
Orbit<L> orbit(const BasicTree<L>& start, const std::vector<Letter>& families, std::size_t cap,
               bool with_edges = false) {
  return orbit(start, families, cap, TrivialLD<L>{}, with_edges);
}

}  // namespace geomgroup
