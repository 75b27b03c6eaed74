#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "generator.hpp"
#include "tree.hpp"

namespace geomgroup {

/// A pair of injective trees (source, target) standing for the operator
/// mapping every source^σ to target^σ.
struct Seed {
  Tree source = bullet(1);
  Tree target = bullet(1);
  friend bool operator==(const Seed&, const Seed&) = default;
};

inline std::string print_seed(const Seed& s) {
  return print_tree(s.source) + " -> " + print_tree(s.target);
}

/// Relabels so the source reads 1..n left to right.
inline Seed canonical(const Seed& s) {
  std::map<int, int> rename;
  int next = 1;
  for (int x : labels(s.source)) rename[x] = next++;
  auto f = [&](int x) {
    auto it = rename.find(x);
    if (it == rename.end()) throw UnboundLabel(x);
    return it->second;
  };
  return {map_labels(s.source, f), map_labels(s.target, f)};
}

namespace detail {

inline Tree embed_at(Tree pattern, const Address& alpha, int first_fresh) {
  int fresh = first_fresh;
  for (std::size_t i = alpha.size(); i-- > 0;)
    pattern = alpha[i] ? bullet(fresh++) * pattern : pattern * bullet(fresh++);
  return pattern;
}

}  // namespace detail

/// Seed of a single A/C/S letter (aliases allowed), embedded below its address.
inline Seed generator_seed(const Generator& g) {
  if (g.letter == Letter::sigma) throw TwistedNotSupported();
  const Tree p123 = bullet(1) * (bullet(2) * bullet(3));
  Tree src, tgt;
  switch (g.letter) {
    case Letter::A:
    case Letter::a:
      src = p123;
      tgt = (bullet(1) * bullet(2)) * bullet(3);
      if (g.inverse) std::swap(src, tgt);
      break;
    case Letter::C:
    case Letter::c:
      src = bullet(1) * bullet(2);
      tgt = bullet(2) * bullet(1);
      break;
    default:
      src = p123;
      tgt = bullet(2) * (bullet(1) * bullet(3));
      break;
  }
  const Address alpha = g.site();
  return canonical({detail::embed_at(src, alpha, 100), detail::embed_at(tgt, alpha, 100)});
}

/// s1 then s2.
inline Seed compose(const Seed& s1, const Seed& s2) {
  auto u = unify_injective(s1.target, s2.source);
  return canonical({apply_substitution(s1.source, u.first), apply_substitution(s2.target, u.second)});
}

inline Seed word_seed(const Word& w) {
  Seed acc;
  for (const auto& g : w) acc = compose(acc, generator_seed(g));
  return acc;
}

namespace detail {

inline void caret_pairs(const Tree& t, std::set<std::pair<int, int>>& out) {
  if (t.is_leaf()) return;
  if (t.left().is_leaf() && t.right().is_leaf()) out.emplace(t.left().label(), t.right().label());
  caret_pairs(t.left(), out);
  caret_pairs(t.right(), out);
}

inline Tree collapse(const Tree& t, int x, int y) {
  if (t.is_leaf()) return t;
  if (t.left().is_leaf() && t.right().is_leaf() && t.left().label() == x && t.right().label() == y)
    return bullet(x);
  return collapse(t.left(), x, y) * collapse(t.right(), x, y);
}

}  // namespace detail

/// Removes every caret (leaf pair x·y) present in both trees, repeatedly; the
/// result is the unique smallest seed of the operator, canonically labelled.
inline Seed reduced(Seed s) {
  for (;;) {
    std::set<std::pair<int, int>> in_source, in_target;
    detail::caret_pairs(s.source, in_source);
    detail::caret_pairs(s.target, in_target);
    std::optional<std::pair<int, int>> common;
    for (const auto& p : in_source)
      if (in_target.count(p)) {
        common = p;
        break;
      }
    if (!common) return canonical(s);
    s = {detail::collapse(s.source, common->first, common->second),
         detail::collapse(s.target, common->first, common->second)};
  }
}

inline bool equal_in_group(const Word& w1, const Word& w2) {
  return reduced(word_seed(w1)) == reduced(word_seed(w2));
}

inline bool is_identity(const Word& w) { return equal_in_group(w, {}); }

/// σ with t = pattern^σ, when t is an instance of the injective `pattern`.
inline std::optional<Substitution> match(const Tree& pattern, const Tree& t) {
  Substitution sigma;
  for (const auto& a : leaf_addresses(pattern)) {
    auto sub = try_subtree(t, a);
    if (!sub) return std::nullopt;
    sigma[subtree(pattern, a).label()] = *sub;
  }
  return sigma;
}

/// The operator of a seed evaluated on one tree.
inline std::optional<Tree> seed_apply(const Seed& s, const Tree& t) {
  auto sigma = match(s.source, t);
  if (!sigma) return std::nullopt;
  return apply_substitution(s.target, *sigma);
}

// ---- regimes ----

/// F: associativity; V: plus commutativity; S: plus semi-commutativity; BV: braided.
enum class Regime { F, V, S, BV };

inline std::string regime_name(Regime r) {
  switch (r) {
    case Regime::F: return "F";
    case Regime::V: return "V";
    case Regime::S: return "S";
    case Regime::BV: return "BV";
  }
  return "?";
}

inline bool regime_allows(Regime r, Letter l) {
  switch (r) {
    case Regime::F: return l == Letter::A || l == Letter::a;
    case Regime::V: return l != Letter::sigma;
    case Regime::S: return l == Letter::A || l == Letter::a || l == Letter::S || l == Letter::s;
    case Regime::BV: return l == Letter::a || l == Letter::sigma;
  }
  return false;
}

inline void check_regime(Regime r, const Word& w) {
  for (const auto& g : w)
    if (!regime_allows(r, g.letter)) throw IllegalGenerator(print_generator(g), regime_name(r));
}

}  // namespace geomgroup
