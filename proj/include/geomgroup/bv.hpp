#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "free_word.hpp"
#include "generator.hpp"
#include "ld.hpp"
#include "operators.hpp"
#include "seeds.hpp"
#include "tree.hpp"

namespace geomgroup {

// Words over a_i and sigma_i (letters b_i in text) stand for elements of B.

using BvTree = BasicTree<Word>;

/// Lowers every index by one; nullopt if some index is 1.
inline std::optional<Word> unshift(const Word& w) {
  Word out;
  for (auto g : w) {
    if (g.index < 2) return std::nullopt;
    --g.index;
    out.push_back(g);
  }
  return out;
}

/// x[y] = x · ∂y · σ1 · ∂x^{-1}, literally.
inline Word bv_bracket(const Word& x, const Word& y) {
  return x + shift(y) + Word{letters::sigma(1)} + shift(inverse(x));
}

/// x∘y = x · ∂y · a1, literally.
inline Word bv_circle(const Word& x, const Word& y) { return x + shift(y) + Word{letters::a(1)}; }

/// e(•x) = x, e(t1 t2) = e(t1)∘e(t2).
inline Word e_eval(const BvTree& t) {
  if (t.is_leaf()) return t.label();
  return bv_circle(e_eval(t.left()), e_eval(t.right()));
}

/// f(•x) = 1, f(t1 t2) = e(t1) · ∂f(t2).
inline Word f_eval(const BvTree& t) {
  if (t.is_leaf()) return {};
  return e_eval(t.left()) + shift(f_eval(t.right()));
}

/// f(t) = e(t1) · ∂e(t2) ··· ∂^{n-1}e(tn) for t = t1(t2(...(tn •))).
inline Word f_eval_explicit(BvTree t) {
  Word out;
  for (int k = 0; !t.is_leaf(); ++k, t = t.right()) out += shift(e_eval(t.left()), k);
  return out;
}

inline std::string format_label(const Word& w) { return "\"" + print_word(w) + "\""; }

inline BvTree parse_bv_tree(std::string_view text) {
  return parse_tree_with<Word>(text, [](std::string_view token, std::size_t offset) {
    try {
      return parse_word(token);
    } catch (const ParseError& e) {
      throw ParseError("bad word label", offset + e.offset());
    }
  });
}

// ---- natural trees ----

/// Smallest shape whose skeleton contains every given address.
inline Tree covering_shape(const std::set<Address>& addrs, const Address& at = {}) {
  for (const auto& a : addrs)
    if (a.size() > at.size() && at.is_prefix_of(a))
      return covering_shape(addrs, at.child(0)) * covering_shape(addrs, at.child(1));
  return bullet();
}

/// Label of the leaf at `beta` in a natural tree.
inline FreeWord natural_label(const Address& beta) {
  const std::string& bits = beta.bits();
  FreeWord w;
  std::size_t k = 0;
  while (k < bits.size() && bits[bits.size() - 1 - k] == '1') ++k;
  if (k == bits.size()) {  // 1^k
    for (std::size_t j = k; j-- > 0;) w *= FreeWord::generator(Address::right_branch(j), true);
    return w;
  }
  Address alpha0 = beta.prefix(bits.size() - k);  // α0
  for (std::size_t j = k; j-- > 0;) w *= FreeWord::generator(alpha0 + Address::right_branch(j), true);
  return w * FreeWord::generator(alpha0.prefix(alpha0.size() - 1));
}

namespace detail {

inline BasicTree<FreeWord> natural_tree_at(const Tree& shape, const Address& at) {
  if (shape.is_leaf()) return BasicTree<FreeWord>::leaf(natural_label(at));
  return natural_tree_at(shape.left(), at.child(0)) * natural_tree_at(shape.right(), at.child(1));
}

inline Tree refine_all(const Tree& t) {
  if (t.is_leaf()) return bullet() * bullet();
  return refine_all(t.left()) * refine_all(t.right());
}

inline std::size_t height(const Tree& t) {
  return t.is_leaf() ? 0 : 1 + std::max(height(t.left()), height(t.right()));
}

}  // namespace detail

inline BasicTree<FreeWord> natural_tree(const Tree& shape) { return detail::natural_tree_at(shape, {}); }

/// Product of the labels of the subtree at `alpha`, left to right.
inline FreeWord subtree_product(const BasicTree<FreeWord>& t, const Address& alpha) {
  FreeWord w;
  for (const auto& x : labels(subtree(t, alpha))) w *= x;
  return w;
}

/// ψ(w)(x_γ) straight from the definition: act on a natural tree large enough
/// for w and for γ0, with conjugation-twisted operators, and read the product
/// of labels below γ0.
inline FreeWord psi_direct(const Word& w, const Address& gamma, std::size_t budget = 24) {
  Word sh = w;
  for (auto& g : sh)
    if (g.letter == Letter::sigma) g.letter = Letter::s;
  std::set<Address> addrs;
  for (const auto& a : internal_addresses(word_seed(sh).source)) {
    addrs.insert(a.child(0));
    addrs.insert(a.child(1));
  }
  addrs.insert(gamma.child(0));
  Address back = gamma.child(0);  // where γ0 comes from, while it moves as a whole
  for (std::size_t k = w.size(); k-- > 0;) {
    auto h = try_heir(w[k].inverted(), back);
    if (!h) break;
    back = *h;
    addrs.insert(back);
  }
  Tree shape = covering_shape(addrs);
  const ConjFreeLD conj;
  for (;;) {
    if (detail::height(shape) > budget) throw BudgetExhausted(budget);
    auto image = apply_word(natural_tree(shape), w, conj);
    if (image && in_skeleton(*image, gamma.child(0))) return subtree_product(*image, gamma.child(0));
    shape = detail::refine_all(shape);
  }
}

/// ψ with per-letter images cached; ψ(w1 w2) = ψ(w1) ∘ ψ(w2), so the word is
/// processed from its last letter, substituting letter images into the result.
class PsiEvaluator {
 public:
  explicit PsiEvaluator(std::size_t budget = 24) : budget_(budget) {}

  const FreeWord& letter_image(const Generator& g, std::int64_t code) {
    auto key = std::make_tuple(static_cast<int>(g.letter), g.index, g.inverse, code);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, psi_direct({g}, FreeWord::address_of(code), budget_)).first->second;
  }

  FreeWord image(const Word& w, const Address& gamma) {
    FreeWord cur = FreeWord::generator(gamma);
    for (std::size_t k = w.size(); k-- > 0;)
      cur = cur.substitute([&](std::int64_t code) -> const FreeWord& { return letter_image(w[k], code); });
    return cur;
  }

  std::size_t cached() const { return cache_.size(); }

 private:
  std::size_t budget_;
  std::map<std::tuple<int, int, bool, std::int64_t>, FreeWord> cache_;
};

struct BvComparison {
  bool equal = false;
  bool stable = true;         // false if the verdict changed at depth + 1
  std::size_t depth = 0;      // probe depth d
  std::optional<Address> witness;
  FreeWord lhs, rhs;          // images of the witness generator

  explicit operator bool() const { return equal; }
};

/// Compares ψ(w1), ψ(w2) on all x_γ with |γ| <= d, d = 2 + max index, then on
/// the generators of length d + 1.
inline BvComparison bv_compare(const Word& w1, const Word& w2, PsiEvaluator& psi) {
  BvComparison out;
  out.depth = 2 + static_cast<std::size_t>(std::max(max_index(w1), max_index(w2)));
  for (const auto& g : addresses_up_to(out.depth + 1)) {
    FreeWord l = psi.image(w1, g), r = psi.image(w2, g);
    if (l != r) {
      out.witness = g;
      out.lhs = l;
      out.rhs = r;
      out.stable = g.size() <= out.depth;
      return out;
    }
  }
  out.equal = true;
  return out;
}

inline bool bv_equal(const Word& w1, const Word& w2, PsiEvaluator& psi) { return bv_compare(w1, w2, psi).equal; }

inline bool bv_equal(const Word& w1, const Word& w2) {
  PsiEvaluator psi;
  return bv_equal(w1, w2, psi);
}

/// B with the bracket x[y] = x·∂y·σ1·∂x^{-1}; equality through ψ. Division is
/// syntactic: it succeeds when x^{-1}·z·∂x·σ1^{-1} reduces to a word with all
/// indices >= 2.
class BvLD {
 public:
  using label_type = Word;

  BvLD() : psi_(std::make_shared<PsiEvaluator>()) {}

  Word bracket(const Word& x, const Word& y) const { return free_reduce(bv_bracket(x, y)); }
  std::optional<Word> unbracket(const Word& x, const Word& z) const {
    return unshift(free_reduce(inverse(x) + z + shift(x) + Word{letters::sigma(1, true)}));
  }
  bool equal(const Word& x, const Word& y) const { return bv_equal(x, y, *psi_); }
  std::string name() const { return "bv"; }

  PsiEvaluator& psi() const { return *psi_; }

 private:
  std::shared_ptr<PsiEvaluator> psi_;
};

}  // namespace geomgroup
