#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "generator.hpp"
#include "ld.hpp"
#include "operators.hpp"
#include "seeds.hpp"

namespace geomgroup {

struct Relation {
  Word lhs, rhs;
  std::string family;
  std::string params;  // e.g. "rel=commute;X=A;Y=C;g=1;a=0;b=e"
};

struct Bounds {
  std::size_t max_addr_len = 2;
  int max_index = 4;
};

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "R_A", "R_a", "R_AC", "R_ac", "R_ACS", "R_acs", "R_AS", "R_as", "R_asigma",
      "T_C", "T_S", "T_c", "T_s", "T_sigma", "derived", "sorting", "blocks", "variants"};
  return names;
}

namespace detail {

using namespace letters;

inline Generator at(Letter l, const Address& a, bool inv = false) { return Generator::at(l, a, inv); }
inline Address addr(const char* bits) { return Address::parse(bits); }

struct FamilyBuilder {
  std::string family;
  Bounds bounds;
  std::vector<Relation> out;

  void add(const Word& lhs, const Word& rhs, const std::string& params) { out.push_back({lhs, rhs, family, params}); }

  /// Adds every translated copy ∂_γ(lhs = rhs) with |γ| <= bound.
  void translated(const Word& lhs, const Word& rhs, const std::string& params) {
    for (const auto& g : addresses_up_to(bounds.max_addr_len))
      add(shift_word(lhs, g), shift_word(rhs, g), params + ";g=" + g.str());
  }

  std::vector<Address> addrs() const { return addresses_up_to(bounds.max_addr_len); }

  void commute(const std::vector<Letter>& xs, const std::vector<Letter>& ys, bool need_s = false) {
    for (Letter X : xs)
      for (Letter Y : ys) {
        if (need_s && X != Letter::S && Y != Letter::S) continue;
        for (const auto& al : addrs())
          for (const auto& be : addrs()) {
            Word l{at(X, addr("0") + al), at(Y, addr("1") + be)};
            Word r{l[1], l[0]};
            translated(l, r, "rel=commute;X=" + letter_name(X) + ";Y=" + letter_name(Y) + ";a=" + al.str() + ";b=" + be.str());
          }
      }
  }

  /// X_{pre α} · base = base · X_{post α}
  void geometric(Letter base, const std::vector<Letter>& xs, const char* pre, const char* post, const std::string& tag) {
    for (Letter X : xs)
      for (const auto& al : addrs()) {
        Word l{at(X, addr(pre) + al), at(base, {})};
        Word r{at(base, {}), at(X, addr(post) + al)};
        translated(l, r, "rel=" + tag + ";X=" + letter_name(X) + ";a=" + al.str());
      }
  }

  void geometric_A(const std::vector<Letter>& xs) {
    geometric(Letter::A, xs, "11", "1", "geomA11");
    geometric(Letter::A, xs, "10", "01", "geomA10");
    geometric(Letter::A, xs, "0", "00", "geomA0");
  }
  void geometric_C(const std::vector<Letter>& xs) {
    geometric(Letter::C, xs, "0", "1", "geomC0");
    geometric(Letter::C, xs, "1", "0", "geomC1");
  }
  void geometric_S(const std::vector<Letter>& xs) {
    geometric(Letter::S, xs, "11", "11", "geomS11");
    geometric(Letter::S, xs, "10", "0", "geomS10");
    geometric(Letter::S, xs, "0", "10", "geomS0");
  }

  void pentagon() { translated({A(), A()}, {A("1"), A(), A("0")}, "rel=pentagon"); }
  void hexagons() {
    translated({A(), C(), A()}, {C("1"), A(), C("0")}, "rel=hexagon");
    translated({A("", true), C(), A("", true)}, {C("0"), A("", true), C("1")}, "rel=hexagon-inverse");
  }
  void s_definition() { translated({S()}, {C(), A("", true), C("1", true)}, "rel=S-definition"); }
  void semi_commutation() {
    translated({S(), A("1"), A()}, {A("1"), A(), S("0")}, "rel=SA1A");
    translated({S("1"), S(), A("1")}, {A(), S()}, "rel=S1SA1");
    translated({S(), S("1"), A()}, {A("1"), S()}, "rel=SS1A");
    translated({S(), S("1"), S()}, {S("1"), S(), S("1")}, "rel=SS1S");
  }

  // ---- index families; every index involved is <= max_index ----

  int N() const { return bounds.max_index; }

  static Generator ix(Letter l, int i, bool inv = false) { return Generator::indexed(l, i, inv); }
  static std::string p2(const std::string& rel, int i, int j) {
    return "rel=" + rel + ";i=" + std::to_string(i) + ";j=" + std::to_string(j);
  }

  /// a_i x_{j-1} = x_j a_i for j >= i+2.
  void a_shift(const std::vector<Letter>& xs, const char* tag) {
    for (Letter x : xs)
      for (int i = 1; i <= N(); ++i)
        for (int j = i + 2; j <= N(); ++j)
          add({a(i), ix(x, j - 1)}, {ix(x, j), a(i)}, p2(tag, i, j) + ";x=" + letter_name(x));
  }

  /// y_i x_j = x_j y_i for j >= i+2.
  void far_commute(Letter y, const std::vector<Letter>& xs, const char* tag) {
    for (Letter x : xs)
      for (int i = 1; i <= N(); ++i)
        for (int j = i + 2; j <= N(); ++j)
          add({ix(y, i), ix(x, j)}, {ix(x, j), ix(y, i)}, p2(tag, i, j) + ";x=" + letter_name(x));
  }

  void braid_like(Letter sl, const std::vector<Letter>& xs, const char* tag) {
    for (Letter x : xs)
      for (int i = 1; i + 1 <= N(); ++i)
        add({ix(sl, i), ix(x, i + 1), ix(sl, i)}, {ix(x, i + 1), ix(sl, i), ix(x, i + 1)},
            p2(tag, i, i + 1) + ";x=" + letter_name(x));
  }

  void mixed(Letter sl, const char* tag) {
    for (int i = 1; i + 1 <= N(); ++i) {
      add({ix(sl, i), ix(sl, i + 1), a(i)}, {a(i + 1), ix(sl, i)}, p2(std::string(tag) + "-up", i, i + 1));
      add({ix(sl, i + 1), ix(sl, i), a(i + 1)}, {a(i), ix(sl, i)}, p2(std::string(tag) + "-down", i, i + 1));
    }
  }
};

}  // namespace detail

/// Every instance of a family within the bounds, in a deterministic order.
inline std::vector<Relation> relations(const std::string& family, const Bounds& bounds) {
  using namespace letters;
  detail::FamilyBuilder b{family, bounds, {}};
  const std::vector<Letter> AC{Letter::A, Letter::C}, AS{Letter::A, Letter::S},
      ACS{Letter::A, Letter::C, Letter::S};
  const int N = bounds.max_index;
  if (family == "R_A") {
    b.commute({Letter::A}, {Letter::A});
    b.geometric_A({Letter::A});
    b.pentagon();
  } else if (family == "R_AC" || family == "R_ACS") {
    b.commute(AC, AC);
    b.geometric_A(AC);
    b.geometric_C(AC);
    b.pentagon();
    b.hexagons();
    if (family == "R_ACS") b.s_definition();
  } else if (family == "R_AS") {
    b.commute(AS, AS);
    b.geometric_A(AS);
    b.geometric_S(AS);
    b.pentagon();
    b.semi_commutation();
  } else if (family == "R_a") {
    b.a_shift({Letter::a}, "a-shift");
  } else if (family == "R_ac") {
    b.a_shift({Letter::a, Letter::c}, "a-shift");
    for (Letter x : {Letter::a, Letter::c})
      for (int i = 1; i <= N; ++i)
        for (int j = i + 2; j <= N; ++j) {
          Word core{c(i), a(i, true), c(i + 1, true)};
          auto xj = Generator::indexed(x, j);
          b.add(core + Word{xj}, Word{xj} + core, detail::FamilyBuilder::p2("s-commute", i, j) + ";x=" + letter_name(x));
        }
    for (int i = 1; i + 1 <= N; ++i) {
      for (bool inv : {false, true})
        b.add({a(i + 1), a(i), c(i, inv), a(i + 1)}, {a(i), a(i), c(i, inv)},
              detail::FamilyBuilder::p2("pentagon-c", i, i + 1) + (inv ? ";e=-1" : ";e=1"));
      b.add({a(i), c(i), c(i + 1), a(i)}, {c(i + 1), c(i)}, detail::FamilyBuilder::p2("hexagon", i, i + 1));
      b.add({c(i + 1), c(i), a(i, true), c(i + 1)}, {c(i), a(i, true), c(i), a(i, true)},
            detail::FamilyBuilder::p2("hexagon-inverse", i, i + 1));
    }
  } else if (family == "R_acs") {
    b.a_shift({Letter::a, Letter::c, Letter::s}, "a-shift");
    b.far_commute(Letter::s, {Letter::a, Letter::c, Letter::s}, "s-commute");
    b.mixed(Letter::s, "semi");
    b.braid_like(Letter::s, {Letter::s, Letter::c}, "braid");
  } else if (family == "R_as") {
    b.a_shift({Letter::a, Letter::s}, "a-shift");
    b.far_commute(Letter::s, {Letter::a, Letter::s}, "s-commute");
    b.braid_like(Letter::s, {Letter::s}, "braid");
    b.mixed(Letter::s, "semi");
  } else if (family == "R_asigma") {
    b.a_shift({Letter::a, Letter::sigma}, "a-shift");
    b.far_commute(Letter::sigma, {Letter::a, Letter::sigma}, "b-commute");
    b.braid_like(Letter::sigma, {Letter::sigma}, "braid");
    b.mixed(Letter::sigma, "semi");
  } else if (family == "T_C" || family == "T_S") {
    Letter l = family == "T_C" ? Letter::C : Letter::S;
    for (const auto& al : b.addrs()) b.add({Generator::at(l, al), Generator::at(l, al)}, {}, "rel=torsion;a=" + al.str());
  } else if (family == "T_c" || family == "T_s" || family == "T_sigma") {
    Letter l = family == "T_c" ? Letter::c : family == "T_s" ? Letter::s : Letter::sigma;
    for (int i = 1; i <= N; ++i)
      b.add({Generator::indexed(l, i), Generator::indexed(l, i)}, {}, "rel=torsion;i=" + std::to_string(i));
  } else if (family == "derived") {
    // Consequences of R_ACS involving S.
    b.commute(ACS, ACS, true);
    b.geometric_A({Letter::S});
    b.geometric_C({Letter::S});
    b.geometric_S(ACS);
    b.translated({S(), A()}, {A(), C("0")}, "rel=SA");
    b.semi_commutation();
  } else if (family == "sorting") {
    // x_{I∪J,K} · s_{I,J} = x_{I,J∪K} · ∂^p x_{J,K}, with I∪J∪K = {1..m}.
    for (int m = 1; m <= N; ++m) {
      int total = 1;
      for (int k = 0; k < m; ++k) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::set<int> I, J, K;
        int v = code;
        for (int x = 1; x <= m; ++x, v /= 3) (v % 3 == 0 ? I : v % 3 == 1 ? J : K).insert(x);
        if (I.empty() || I.size() > 3 || J.size() > 3 || K.size() > 3) continue;
        std::set<int> IJ = I, JK = J;
        IJ.insert(J.begin(), J.end());
        JK.insert(K.begin(), K.end());
        int p = static_cast<int>(I.size());
        auto name = [](const std::set<int>& s) {
          std::string out;
          for (int x : s) out += (out.empty() ? "" : ",") + std::to_string(x);
          return "{" + out + "}";
        };
        std::string params = ";I=" + name(I) + ";J=" + name(J) + ";K=" + name(K);
        for (SortKind kind : {SortKind::c, SortKind::s}) {
          // with K empty the c form would claim s_{I,J} = c_{I,J}
          if (kind == SortKind::c && K.empty() && !J.empty()) continue;
          b.add(sorting_word(IJ, K, kind) + s_word(I, J),
                sorting_word(I, JK, kind) + shift(sorting_word(J, K, kind), p),
                std::string("rel=sorting-") + (kind == SortKind::c ? "c" : "s") + params);
        }
      }
    }
  } else if (family == "blocks") {
    // Block exchanges, p, q, r in 1..min(3, max_index).
    int M = std::min(3, N);
    auto P = [](const char* rel, int p, int q, int r) {
      return std::string("rel=") + rel + ";p=" + std::to_string(p) + ";q=" + std::to_string(q) + ";r=" + std::to_string(r);
    };
    for (int p = 1; p <= M; ++p)
      for (int q = 1; q <= M; ++q)
        for (int r = 1; r <= M; ++r)
          for (SortKind kind : {SortKind::c, SortKind::s}) {
            const char* k = kind == SortKind::c ? "c" : "s";
            b.add(block_word(p + q, r, kind), block_word(p, r, SortKind::s) + shift(block_word(q, r, kind), p),
                  P((std::string("split-top-") + k).c_str(), p, q, r));
            b.add(block_word(p, q + r, kind), shift(block_word(p, r, kind), q) + block_word(p, q, SortKind::s),
                  P((std::string("split-bottom-") + k).c_str(), p, q, r));
          }
    for (int p = 0; p <= M; ++p)
      for (int q = 0; q <= M; ++q)
        b.add(Word{a(q + 1)} + block_word(p + 1, q, SortKind::s), block_word(p + 2, q, SortKind::s) + Word{a(1)},
              P("a-through", p, q, 0));
  } else if (family == "variants") {
    // Alternative printings of relations; each is reported on its own.
    b.translated({A(), C(), A()}, {C("0"), A(), C("1")}, "rel=hexagon-mirrored");
    b.translated({A("0"), A(), A("1")}, {A(), A()}, "rel=pentagon-mirrored");
    b.translated({S(), A("0")}, {A(), C("0")}, "rel=SA0");
    for (const auto& al : b.addrs())
      b.translated({detail::at(Letter::A, Address::parse("10") + al), A()},
                   {A(), detail::at(Letter::A, Address::parse("10") + al)}, "rel=geomA10-unshifted;a=" + al.str());
  } else {
    throw Error("unknown relation family: " + family);
  }
  return b.out;
}

// ---- verification ----

enum class VerdictKind { seed_equal, action_equal, failed };

struct Verdict {
  VerdictKind kind = VerdictKind::failed;
  std::size_t samples = 0;   // trees compared (sampled method)
  std::string witness;       // tree on which the sides differ
  std::string lhs_image, rhs_image;

  bool ok() const { return kind != VerdictKind::failed; }
};

inline std::string verdict_name(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::seed_equal: return "seed-equal";
    case VerdictKind::action_equal: return "action-equal(" + std::to_string(v.samples) + ")";
    case VerdictKind::failed: return "FAILED";
  }
  return "?";
}

namespace detail {

/// The shape-level word: sigma letters act on shapes like s letters.
inline Word shape_word(const Word& w) {
  Word out = w;
  for (auto& g : out)
    if (g.letter == Letter::sigma) g.letter = Letter::s;
  return out;
}

/// Smallest injective tree on which both words act.
inline Tree common_domain(const Word& lhs, const Word& rhs) {
  auto l = word_seed(shape_word(lhs)), r = word_seed(shape_word(rhs));
  return unify_injective(l.source, r.source).common;
}

}  // namespace detail

/// Exact check through canonical seeds (A/C/S words only).
inline Verdict verify_by_seed(const Relation& rel) {
  Verdict v;
  if (reduced(word_seed(rel.lhs)) == reduced(word_seed(rel.rhs))) {
    v.kind = VerdictKind::seed_equal;
    return v;
  }
  Tree t = detail::common_domain(rel.lhs, rel.rhs);
  v.witness = print_tree(t);
  v.lhs_image = print_tree(*apply_word(t, rel.lhs));
  v.rhs_image = print_tree(*apply_word(t, rel.rhs));
  return v;
}

inline std::string format_label(int x) { return std::to_string(x); }
inline std::string format_label(long x) { return std::to_string(x); }
inline std::string format_label(const FreeWord& w) { return print_free_word(w); }

template <class L>
std::string format_tree(const BasicTree<L>& t) {
  return print_tree_with(t, [](const L& x) { return format_label(x); });
}

/// Random refinement of a shape: each leaf grows into a random tree of size 1..3.
inline Tree refine_randomly(const Tree& t, std::mt19937_64& rng) {
  if (!t.is_leaf()) return refine_randomly(t.left(), rng) * refine_randomly(t.right(), rng);
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return bullet() * bullet();
    case 1: return bullet() * (bullet() * bullet());
    case 2: return (bullet() * bullet()) * bullet();
    default: return bullet();
  }
}

/// Both sides applied to `samples` trees whose leaves carry pairwise-distinct
/// labels `make_label(k, rng)`; the first sample is the bare common domain.
template <class LD, class MakeLabel>
Verdict verify_by_action(const Relation& rel, const LD& ld, std::size_t samples, std::uint64_t seed,
                         MakeLabel make_label) {
  std::mt19937_64 rng(seed);
  const Tree domain = detail::common_domain(rel.lhs, rel.rhs);
  Verdict v;
  std::size_t compared = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    Tree sh = k == 0 ? domain : refine_randomly(domain, rng);
    std::size_t next = 0;
    auto t = map_labels(sh, [&](int) { return make_label(next++, rng); });
    auto l = apply_word(t, rel.lhs, ld);
    auto r = apply_word(t, rel.rhs, ld);
    if (!l || !r) continue;
    ++compared;
    if (!trees_equal(*l, *r, ld)) {
      v.kind = VerdictKind::failed;
      v.samples = compared;
      v.witness = format_tree(t);
      v.lhs_image = format_tree(*l);
      v.rhs_image = format_tree(*r);
      return v;
    }
  }
  if (compared == 0) throw DomainNeverIntersects();
  v.kind = VerdictKind::action_equal;
  v.samples = compared;
  return v;
}

/// Distinct free generators x_γ, γ running through addresses in order.
inline FreeWord nth_free_generator(std::size_t k) {
  std::size_t len = 0;
  while (k >= (std::size_t{1} << len)) {
    k -= std::size_t{1} << len;
    ++len;
  }
  std::string bits;
  for (std::size_t i = len; i-- > 0;) bits += ((k >> i) & 1) ? '1' : '0';
  return FreeWord::generator(Address::parse(bits));
}

// ---- index/address translations ----

/// A_α as a word in the a_i, seed-equal to A_α under left-to-right action.
/// For α = 1^p 0^{e0} 1 0^{e1} ... 1 0^{eq} with P = a_{p+q+1}^{eq+1} ...
/// a_{p+2}^{e1+1} a_{p+1}^{e0}, this is P^{-1} a_{p+q+2}^{-1} a_{p+q+1} P, the
/// usual right-to-left formula with its letters mirrored.
inline Word translate_A_to_a(const Address& alpha) {
  using namespace letters;
  const std::string& bits = alpha.bits();
  if (alpha.all_ones()) return {a(static_cast<int>(alpha.size()) + 1)};
  std::size_t i = 0;
  int p = 0;
  while (bits[i] == '1') ++p, ++i;
  std::vector<int> e{0};
  for (; i < bits.size(); ++i) {
    if (bits[i] == '0') ++e.back();
    else e.push_back(0);
  }
  const int q = static_cast<int>(e.size()) - 1;
  Word P;
  for (int k = q; k >= 0; --k) P += power(a(p + k + 1), e[k] + (k == 0 ? 0 : 1));
  return inverse(P) + Word{a(p + q + 2, true), a(p + q + 1)} + P;
}

/// Reverses letter order without inverting; converts between left-to-right and
/// right-to-left readings of a word.
inline Word mirror(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

/// Replaces a_i, c_i, s_i by address letters and, when asked, S by its
/// definition C A^{-1} C_1^{-1}.
inline Word alias_expand(const Word& w, bool expand_s = false) {
  Word out;
  for (const auto& g : expand_indices(w)) {
    if (g.letter == Letter::sigma) throw SigmaHasNoLinearExpansion();
    if (g.letter != Letter::S || !expand_s) {
      out.push_back(g);
      continue;
    }
    Word def{Generator::at(Letter::C, g.address), Generator::at(Letter::A, g.address, true),
             Generator::at(Letter::C, g.address.child(1), true)};
    out += g.inverse ? inverse(def) : def;
  }
  return out;
}

}  // namespace geomgroup
