#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "generator.hpp"
#include "tree.hpp"

namespace geomgroup {

/// Which block-sorting word: the c-variant ends with a c letter, the s-variant
/// uses s letters only.
enum class SortKind { c, s };

namespace detail {

inline Word s_run(int p) {
  Word w;
  for (int i = 1; i <= p; ++i) w.push_back(letters::s(i));
  return w;
}

inline Word sorting_word(std::set<int> I, std::set<int> J, SortKind kind) {
  if (I.empty()) return {};
  int l = std::min(*I.begin(), J.empty() ? *I.begin() : *J.begin());
  if (I.count(l)) {
    I.erase(l);
    return shift(sorting_word(std::move(I), std::move(J), kind));
  }
  J.erase(l);
  int p = static_cast<int>(I.size());
  if (J.empty()) {
    if (kind == SortKind::s) return s_run(p);
    Word w = s_run(p - 1);
    w.push_back(letters::c(p));
    return w;
  }
  return shift(sorting_word(std::move(I), std::move(J), kind)) + s_run(p);
}

}  // namespace detail

/// Word taking the vine on I∪J to the vine listing I then J.
inline Word sorting_word(const std::set<int>& I, const std::set<int>& J, SortKind kind) {
  for (int x : I)
    if (J.count(x)) throw OverlappingSets();
  return detail::sorting_word(I, J, kind);
}

inline Word c_word(const std::set<int>& I, const std::set<int>& J) { return sorting_word(I, J, SortKind::c); }
inline Word s_word(const std::set<int>& I, const std::set<int>& J) { return sorting_word(I, J, SortKind::s); }

/// Exchange of a block of p leaves with the q leaves before it.
inline Word block_word(int p, int q, SortKind kind) {
  std::set<int> I, J;
  for (int k = 1; k <= q; ++k) J.insert(k);
  for (int k = q + 1; k <= q + p; ++k) I.insert(k);
  return sorting_word(I, J, kind);
}

struct ConstructionWords {
  Word w;       // builds t from the base vine
  Word w_star;  // builds ⟨t, t'⟩ from the base vine followed by t'
};

/// Uncoloured construction words; labels are ignored.
template <class L>
ConstructionWords construction_words(const BasicTree<L>& t) {
  if (t.is_leaf()) return {};
  auto left = construction_words(t.left());
  auto right = construction_words(t.right());
  ConstructionWords out;
  out.w = left.w_star + shift(right.w);
  out.w_star = left.w_star + shift(right.w_star);
  out.w_star.push_back(letters::a(1));
  return out;
}

/// Coloured construction words; labels must be pairwise distinct.
inline ConstructionWords coloured_construction_words(const Tree& t) {
  if (!is_injective(t)) throw NonInjectiveLabels();
  if (t.is_leaf()) return {};
  auto left = coloured_construction_words(t.left());
  auto right = coloured_construction_words(t.right());
  auto l = labels(t.left()), r = labels(t.right());
  std::set<int> I1(l.begin(), l.end()), I2(r.begin(), r.end());
  ConstructionWords out;
  out.w = c_word(I1, I2) + left.w_star + shift(right.w);
  out.w_star = s_word(I1, I2) + left.w_star + shift(right.w_star);
  out.w_star.push_back(letters::a(1));
  return out;
}

/// Both words read off the Polish expression: each node symbol of defect i
/// contributes a_{i+1}; trailing node symbols are left out of w.
template <class L>
ConstructionWords construction_words_via_polish(const BasicTree<L>& t) {
  auto symbols = polish_encode(t);
  auto defect = defect_profile(symbols);
  std::size_t last_leaf = 0;
  for (std::size_t p = 0; p < symbols.size(); ++p)
    if (symbols[p] == PolishSymbol::leaf) last_leaf = p;
  ConstructionWords out;
  for (std::size_t p = 0; p < symbols.size(); ++p) {
    if (symbols[p] != PolishSymbol::node) continue;
    auto g = letters::a(defect[p + 1] + 1);
    out.w_star.push_back(g);
    if (p < last_leaf) out.w.push_back(g);
  }
  return out;
}

/// Number of edges on the rightmost branch.
template <class L>
int right_height(BasicTree<L> t) {
  int h = 0;
  while (!t.is_leaf()) {
    t = t.right();
    ++h;
  }
  return h;
}

/// w* = w · a_h ... a_2 a_1 with h the rightmost-branch height, as exact words.
template <class L>
bool star_suffix_identity(const BasicTree<L>& t) {
  auto words = construction_words(t);
  Word expected = words.w;
  for (int i = right_height(t); i >= 1; --i) expected.push_back(letters::a(i));
  return expected == words.w_star;
}

}  // namespace geomgroup
