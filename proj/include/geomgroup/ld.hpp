#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "free_word.hpp"
#include "tree.hpp"

namespace geomgroup {

// An LD system is any type providing
//   using label_type = L;
//   L bracket(const L& x, const L& y) const;              // x[y]
//   std::optional<L> unbracket(const L& x, const L& z) const;  // y with x[y] = z
//   bool equal(const L&, const L&) const;
//   std::string name() const;

template <class L>
struct TrivialLD {
  using label_type = L;
  L bracket(const L&, const L& y) const { return y; }
  std::optional<L> unbracket(const L&, const L& z) const { return z; }
  bool equal(const L& x, const L& y) const { return x == y; }
  std::string name() const { return "trivial"; }
};

/// Conjugation in a free group: x[y] = x y x^{-1}.
struct ConjFreeLD {
  using label_type = FreeWord;
  FreeWord bracket(const FreeWord& x, const FreeWord& y) const { return x * y * x.inverse(); }
  std::optional<FreeWord> unbracket(const FreeWord& x, const FreeWord& z) const {
    return x.inverse() * z * x;
  }
  bool equal(const FreeWord& x, const FreeWord& y) const { return x == y; }
  std::string name() const { return "conj"; }
};

/// Deliberately not self-distributive: x[y] = y + x on integers. Left
/// cancellative, so twisted inverses exist, but (LD) fails.
struct ShiftLD {
  using label_type = long;
  long bracket(long x, long y) const { return y + x; }
  std::optional<long> unbracket(long x, long z) const { return z - x; }
  bool equal(long x, long y) const { return x == y; }
  std::string name() const { return "negative"; }
};

/// t1[t2]: every label y of t2 becomes x1[x2[...xn[y]...]], (x1..xn) the labels of t1.
template <class LD>
BasicTree<typename LD::label_type> tree_bracket(const BasicTree<typename LD::label_type>& t1,
                                                const BasicTree<typename LD::label_type>& t2,
                                                const LD& ld) {
  using L = typename LD::label_type;
  auto xs = labels(t1);
  return map_labels(t2, [&](const L& y) {
    L v = y;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) v = ld.bracket(*it, v);
    return v;
  });
}

/// Left division by a tree: the u' with t1[u'] = u. Throws NonCancellativeBracket
/// when some label has no quotient.
template <class LD>
BasicTree<typename LD::label_type> tree_unbracket(const BasicTree<typename LD::label_type>& t1,
                                                  const BasicTree<typename LD::label_type>& u,
                                                  const LD& ld) {
  using L = typename LD::label_type;
  auto xs = labels(t1);
  return map_labels(u, [&](const L& z) {
    L v = z;
    for (const auto& x : xs) {
      auto q = ld.unbracket(x, v);
      if (!q) throw NonCancellativeBracket();
      v = *q;
    }
    return v;
  });
}

template <class LD>
bool trees_equal(const BasicTree<typename LD::label_type>& s, const BasicTree<typename LD::label_type>& t,
                 const LD& ld) {
  if (s.is_leaf() != t.is_leaf()) return false;
  if (s.is_leaf()) return ld.equal(s.label(), t.label());
  return trees_equal(s.left(), t.left(), ld) && trees_equal(s.right(), t.right(), ld);
}

// ---- law checks ----

enum class Law { left_self_distributive, left_cancellative, involutory };

inline std::string law_name(Law law) {
  switch (law) {
    case Law::left_self_distributive: return "ld";
    case Law::left_cancellative: return "cancel";
    case Law::involutory: return "involutory";
  }
  return "?";
}

template <class L>
struct LawVerdict {
  Law law;
  bool holds = true;
  std::size_t tested = 0;
  std::vector<L> witness;  // the sampled x, y (, z) on failure
  L lhs{}, rhs{};          // both sides of the failing instance
};

namespace detail {

template <class LD>
bool law_instance(const LD& ld, Law law, const std::vector<typename LD::label_type>& v,
                  LawVerdict<typename LD::label_type>& out) {
  using L = typename LD::label_type;
  L lhs{}, rhs{};
  switch (law) {
    case Law::left_self_distributive:
      lhs = ld.bracket(v[0], ld.bracket(v[1], v[2]));
      rhs = ld.bracket(ld.bracket(v[0], v[1]), ld.bracket(v[0], v[2]));
      break;
    case Law::left_cancellative: {
      lhs = v[1];
      auto q = ld.unbracket(v[0], ld.bracket(v[0], v[1]));
      if (!q) {
        out.holds = false;
        out.witness = {v[0], v[1]};
        out.lhs = lhs;
        return false;
      }
      rhs = *q;
      break;
    }
    case Law::involutory:
      lhs = ld.bracket(v[0], ld.bracket(v[0], v[1]));
      rhs = v[1];
      break;
  }
  if (ld.equal(lhs, rhs)) return true;
  out.holds = false;
  out.witness = law == Law::left_self_distributive ? v : std::vector<L>{v[0], v[1]};
  out.lhs = lhs;
  out.rhs = rhs;
  return false;
}

}  // namespace detail

/// Property check over `fixed` instances first, then `samples` random ones
/// drawn with `draw(rng)`.
template <class LD, class Draw>
LawVerdict<typename LD::label_type> check_law(const LD& ld, Law law,
                                              const std::vector<std::vector<typename LD::label_type>>& fixed,
                                              Draw&& draw, std::size_t samples, std::uint64_t seed = 1) {
  using L = typename LD::label_type;
  LawVerdict<L> out;
  out.law = law;
  for (const auto& v : fixed) {
    ++out.tested;
    if (!detail::law_instance(ld, law, v, out)) return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<L> v{draw(rng), draw(rng), draw(rng)};
    ++out.tested;
    if (!detail::law_instance(ld, law, v, out)) return out;
  }
  return out;
}

/// Random reduced word of length 1..max_len over x_γ with |γ| <= depth.
inline FreeWord random_free_word(std::mt19937_64& rng, std::size_t max_len = 3, std::size_t depth = 2) {
  auto addrs = addresses_up_to(depth);
  std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, addrs.size() - 1);
  std::bernoulli_distribution inv(0.5);
  FreeWord w;
  while (w.is_identity()) {
    std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) w *= FreeWord::generator(addrs[pick(rng)], inv(rng));
  }
  return w;
}

/// Distinct single generators: the generic instances of each law.
inline std::vector<std::vector<FreeWord>> generic_free_instances() {
  auto g = [](const char* bits) { return FreeWord::generator(Address::parse(bits)); };
  return {{g("0"), g("1"), g("e")}, {g("e"), g("0"), g("1")}};
}

}  // namespace geomgroup
