#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "address.hpp"
#include "errors.hpp"

namespace geomgroup {

/// Immutable binary tree with labelled leaves. Copies share structure.
template <class Label>
class BasicTree {
  struct Node {
    Label label{};
    std::shared_ptr<const Node> left, right;
    std::size_t size = 1;
  };

 public:
  using label_type = Label;

  BasicTree() : BasicTree(leaf(Label{})) {}

  static BasicTree leaf(Label label) {
    auto n = std::make_shared<Node>();
    n->label = std::move(label);
    return BasicTree(std::move(n));
  }

  static BasicTree node(const BasicTree& left, const BasicTree& right) {
    auto n = std::make_shared<Node>();
    n->left = left.root_;
    n->right = right.root_;
    n->size = left.size() + right.size();
    return BasicTree(std::move(n));
  }

  bool is_leaf() const noexcept { return !root_->left; }
  const Label& label() const { return root_->label; }
  BasicTree left() const { return BasicTree(root_->left); }
  BasicTree right() const { return BasicTree(root_->right); }
  std::size_t size() const noexcept { return root_->size; }

  friend bool operator==(const BasicTree& a, const BasicTree& b) {
    if (a.root_ == b.root_) return true;
    if (a.size() != b.size() || a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.label() == b.label();
    return a.left() == b.left() && a.right() == b.right();
  }

 private:
  explicit BasicTree(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  std::shared_ptr<const Node> root_;
};

using Tree = BasicTree<int>;

template <class L>
BasicTree<L> operator*(const BasicTree<L>& a, const BasicTree<L>& b) {
  return BasicTree<L>::node(a, b);
}

inline Tree bullet(int label = 1) { return Tree::leaf(label); }

template <class L>
std::optional<BasicTree<L>> try_subtree(const BasicTree<L>& t, const Address& a) {
  BasicTree<L> cur = t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cur.is_leaf()) return std::nullopt;
    cur = a[i] ? cur.right() : cur.left();
  }
  return cur;
}

template <class L>
BasicTree<L> subtree(const BasicTree<L>& t, const Address& a) {
  auto s = try_subtree(t, a);
  if (!s) throw AddressOutsideSkeleton(a.str());
  return *s;
}

template <class L>
bool in_skeleton(const BasicTree<L>& t, const Address& a) {
  return try_subtree(t, a).has_value();
}

template <class L>
BasicTree<L> graft(const BasicTree<L>& t, const Address& a, const BasicTree<L>& s,
                   std::size_t depth = 0) {
  if (depth == a.size()) return s;
  if (t.is_leaf()) throw AddressOutsideSkeleton(a.str());
  if (a[depth]) return BasicTree<L>::node(t.left(), graft(t.right(), a, s, depth + 1));
  return BasicTree<L>::node(graft(t.left(), a, s, depth + 1), t.right());
}

template <class L>
std::set<Address> skeleton(const BasicTree<L>& t) {
  std::set<Address> out;
  std::function<void(const BasicTree<L>&, const Address&)> walk = [&](const BasicTree<L>& s,
                                                                      const Address& a) {
    out.insert(a);
    if (!s.is_leaf()) {
      walk(s.left(), a.child(0));
      walk(s.right(), a.child(1));
    }
  };
  walk(t, Address{});
  return out;
}

/// Addresses of the leaves, left to right.
template <class L>
std::vector<Address> leaf_addresses(const BasicTree<L>& t) {
  std::vector<Address> out;
  std::function<void(const BasicTree<L>&, const Address&)> walk = [&](const BasicTree<L>& s,
                                                                      const Address& a) {
    if (s.is_leaf()) {
      out.push_back(a);
      return;
    }
    walk(s.left(), a.child(0));
    walk(s.right(), a.child(1));
  };
  walk(t, Address{});
  return out;
}

/// Addresses of the internal nodes, in prefix order.
template <class L>
std::vector<Address> internal_addresses(const BasicTree<L>& t) {
  std::vector<Address> out;
  std::function<void(const BasicTree<L>&, const Address&)> walk = [&](const BasicTree<L>& s,
                                                                      const Address& a) {
    if (s.is_leaf()) return;
    out.push_back(a);
    walk(s.left(), a.child(0));
    walk(s.right(), a.child(1));
  };
  walk(t, Address{});
  return out;
}

template <class L>
void collect_labels(const BasicTree<L>& t, std::vector<L>& out) {
  if (t.is_leaf()) {
    out.push_back(t.label());
    return;
  }
  collect_labels(t.left(), out);
  collect_labels(t.right(), out);
}

/// Labels in left-to-right order.
template <class L>
std::vector<L> labels(const BasicTree<L>& t) {
  std::vector<L> out;
  out.reserve(t.size());
  collect_labels(t, out);
  return out;
}

template <class L>
L rightmost_label(BasicTree<L> t) {
  while (!t.is_leaf()) t = t.right();
  return t.label();
}

template <class From, class F>
auto map_labels(const BasicTree<From>& t, F&& f) -> BasicTree<decltype(f(t.label()))> {
  using To = decltype(f(t.label()));
  if (t.is_leaf()) return BasicTree<To>::leaf(f(t.label()));
  auto left = map_labels(t.left(), f);  // left first: f may be stateful
  return BasicTree<To>::node(left, map_labels(t.right(), f));
}

/// Same shape, every label set to 1.
template <class L>
Tree shape(const BasicTree<L>& t) {
  return map_labels(t, [](const L&) { return 1; });
}

template <class L>
bool is_injective(const BasicTree<L>& t) {
  auto ls = labels(t);
  std::sort(ls.begin(), ls.end());
  return std::adjacent_find(ls.begin(), ls.end()) == ls.end();
}

/// Labels leaves 1..n from left to right.
template <class L>
Tree label_left_to_right(const BasicTree<L>& t, int first = 1) {
  int next = first;
  return map_labels(t, [&](const L&) { return next++; });
}

/// Right comb t1(t2(...(t_{n-1} t_n))).
template <class L>
BasicTree<L> vine(const std::vector<BasicTree<L>>& items) {
  if (items.empty()) throw EmptyInput();
  BasicTree<L> acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = BasicTree<L>::node(items[i], acc);
  return acc;
}

/// Uncoloured right vine with n leaves.
inline Tree vine(std::size_t n) {
  if (n == 0) throw EmptyInput();
  return vine(std::vector<Tree>(n, bullet()));
}

/// Vine whose leaves carry `label_blocks` flattened, each block sorted increasingly.
inline Tree coloured_vine(const std::vector<std::set<int>>& label_blocks) {
  std::vector<Tree> items;
  for (const auto& block : label_blocks)
    for (int x : block) items.push_back(bullet(x));
  return vine(items);
}

/// Vine ⟨I_1, ..., I_k, t⟩ with a trailing tree.
inline Tree coloured_vine(const std::vector<std::set<int>>& label_blocks, const Tree& tail) {
  std::vector<Tree> items;
  for (const auto& block : label_blocks)
    for (int x : block) items.push_back(bullet(x));
  items.push_back(tail);
  return vine(items);
}

// ---- textual form ----

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

/// Raw leaf token: quoted string or a maximal run without spaces and parentheses.
inline std::string_view leaf_token(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && s[i] == '"') {
    std::size_t close = s.find('"', i + 1);
    if (close == std::string_view::npos) throw ParseError("unterminated quoted label", i);
    i = close + 1;
    return s.substr(start + 1, close - start - 1);
  }
  while (i < s.size() && s[i] != '(' && s[i] != ')' &&
         !std::isspace(static_cast<unsigned char>(s[i])))
    ++i;
  if (i == start) throw ParseError("expected a leaf or '('", i);
  return s.substr(start, i - start);
}

template <class L, class LabelParser>
BasicTree<L> parse_tree_at(std::string_view s, std::size_t& i, LabelParser& parse_label) {
  skip_ws(s, i);
  if (i >= s.size()) throw ParseError("unexpected end of tree", i);
  if (s[i] == '(') {
    ++i;
    auto left = parse_tree_at<L>(s, i, parse_label);
    std::size_t before = i;
    skip_ws(s, i);
    if (i == before) throw ParseError("expected whitespace between subtrees", i);
    auto right = parse_tree_at<L>(s, i, parse_label);
    skip_ws(s, i);
    if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
    ++i;
    return BasicTree<L>::node(left, right);
  }
  if (s[i] == ')') throw ParseError("unexpected ')'", i);
  std::size_t start = i;
  auto token = leaf_token(s, i);
  return BasicTree<L>::leaf(parse_label(token, start));
}

}  // namespace detail

/// Parses `tree := leaf | "(" tree WS tree ")"`; `parse_label(token, offset)`
/// converts a leaf token.
template <class L, class LabelParser>
BasicTree<L> parse_tree_with(std::string_view text, LabelParser parse_label) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i >= text.size()) throw ParseError("empty tree", i);
  auto t = detail::parse_tree_at<L>(text, i, parse_label);
  detail::skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters after tree", i);
  return t;
}

inline int parse_int_label(std::string_view token, std::size_t offset) {
  if (token == "*") return 1;
  int value = 0;
  for (std::size_t k = 0; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k])))
      throw ParseError("label must be '*' or a positive integer", offset + k);
    value = value * 10 + (token[k] - '0');
    if (value > 1'000'000'000) throw ParseError("label too large", offset);
  }
  if (value < 1) throw ParseError("labels are positive integers", offset);
  return value;
}

inline Tree parse_tree(std::string_view text) { return parse_tree_with<int>(text, parse_int_label); }

template <class L, class LabelPrinter>
void print_tree_to(const BasicTree<L>& t, std::string& out, LabelPrinter& print_label) {
  if (t.is_leaf()) {
    out += print_label(t.label());
    return;
  }
  out += '(';
  print_tree_to(t.left(), out, print_label);
  out += ' ';
  print_tree_to(t.right(), out, print_label);
  out += ')';
}

template <class L, class LabelPrinter>
std::string print_tree_with(const BasicTree<L>& t, LabelPrinter print_label) {
  std::string out;
  print_tree_to(t, out, print_label);
  return out;
}

/// Uncoloured trees (all labels 1) print with '*', others with numbers.
inline std::string print_tree(const Tree& t) {
  auto ls = labels(t);
  bool uncoloured = std::all_of(ls.begin(), ls.end(), [](int x) { return x == 1; });
  return print_tree_with(t, [uncoloured](int x) {
    return uncoloured ? std::string("*") : std::to_string(x);
  });
}

// ---- Polish notation ----

enum class PolishSymbol { leaf, node };

template <class L>
void polish_encode_to(const BasicTree<L>& t, std::vector<PolishSymbol>& out) {
  if (t.is_leaf()) {
    out.push_back(PolishSymbol::leaf);
    return;
  }
  polish_encode_to(t.left(), out);
  polish_encode_to(t.right(), out);
  out.push_back(PolishSymbol::node);
}

template <class L>
std::vector<PolishSymbol> polish_encode(const BasicTree<L>& t) {
  std::vector<PolishSymbol> out;
  polish_encode_to(t, out);
  return out;
}

/// Running defect after each symbol; entry 0 is the initial -1.
inline std::vector<int> defect_profile(const std::vector<PolishSymbol>& w) {
  std::vector<int> d{-1};
  for (auto s : w) d.push_back(d.back() + (s == PolishSymbol::node ? -1 : 1));
  return d;
}

/// Uncoloured tree from a Polish word. Position in MalformedPolish is 1-based.
inline Tree polish_decode(const std::vector<PolishSymbol>& w) {
  std::vector<Tree> stack;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p] == PolishSymbol::leaf) {
      stack.push_back(bullet());
      continue;
    }
    if (stack.size() < 2) throw MalformedPolish(p + 1);
    Tree right = stack.back();
    stack.pop_back();
    Tree left = stack.back();
    stack.pop_back();
    stack.push_back(left * right);
  }
  if (stack.size() != 1) throw MalformedPolish(w.size());
  return stack.back();
}

inline std::string print_polish(const std::vector<PolishSymbol>& w) {
  std::string out;
  for (auto s : w) out += s == PolishSymbol::leaf ? '*' : 'o';
  return out;
}

inline std::vector<PolishSymbol> parse_polish(std::string_view text) {
  std::vector<PolishSymbol> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '*') out.push_back(PolishSymbol::leaf);
    else if (c == 'o') out.push_back(PolishSymbol::node);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("Polish symbols are '*' and 'o'", i);
  }
  return out;
}

// ---- substitutions and unification ----

using Substitution = std::map<int, Tree>;

inline Tree apply_substitution(const Tree& t, const Substitution& sigma) {
  if (t.is_leaf()) {
    auto it = sigma.find(t.label());
    if (it == sigma.end()) throw UnboundLabel(t.label());
    return it->second;
  }
  return apply_substitution(t.left(), sigma) * apply_substitution(t.right(), sigma);
}

struct Unifier {
  Tree common;
  Substitution first, second;
};

namespace detail {

inline Tree union_shape(const Tree& a, const Tree& b) {
  if (a.is_leaf()) return shape(b);
  if (b.is_leaf()) return shape(a);
  return union_shape(a.left(), b.left()) * union_shape(a.right(), b.right());
}

inline Substitution read_substitution(const Tree& t, const Tree& common) {
  Substitution s;
  for (const auto& a : leaf_addresses(t)) s[subtree(t, a).label()] = subtree(common, a);
  return s;
}

}  // namespace detail

/// Most general common instance of two injective trees: its skeleton is the
/// union of both skeletons and its leaves are labelled 1..n left to right.
inline Unifier unify_injective(const Tree& t1, const Tree& t2) {
  if (!is_injective(t1) || !is_injective(t2)) throw NonInjectiveLabels();
  Unifier u;
  u.common = label_left_to_right(detail::union_shape(t1, t2));
  u.first = detail::read_substitution(t1, u.common);
  u.second = detail::read_substitution(t2, u.common);
  return u;
}

}  // namespace geomgroup
