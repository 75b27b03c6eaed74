// One PASS/FAIL line per acceptance criterion. Exit status is 0 when every
// criterion passes, or when the only failures are listed with --allow-red.
// --only N restricts the run to criterion N (repeatable).
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "geomgroup.hpp"

using namespace geomgroup;
using namespace geomgroup::letters;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no runtime limit
  std::function<Outcome()> run;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// 1
Outcome catalan_orbits() {
  const std::size_t expected[] = {1, 1, 2, 5, 14, 42, 132};
  std::ostringstream sizes;
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t got = orbit(vine(n), {Letter::A}, 100000).trees.size();
    sizes << got << (n < 7 ? "," : "");
    if (got != expected[n - 1] || got != all_shapes(n).size())
      return fail("orbit of size-" + std::to_string(n) + " vine has " + std::to_string(got) + " trees");
  }
  return {true, "sizes " + sizes.str()};
}

// 2
Outcome coloured_orbits() {
  std::ostringstream out;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<int> I;
    for (int k = 1; k <= static_cast<int>(n); ++k) I.insert(k);
    Tree v = coloured_vine({I});
    auto vo = orbit(v, {Letter::A, Letter::C}, 1000000);
    std::size_t brute_v = 0, brute_s = 0;
    for (const auto& sh : all_shapes(n))
      for (const auto& t : all_labellings(sh)) {
        ++brute_v;
        if (rightmost_label(t) == static_cast<int>(n)) ++brute_s;
      }
    if (vo.trees.size() != catalan(n - 1) * factorial(n) || vo.trees.size() != brute_v)
      return fail("V orbit at n=" + std::to_string(n) + " has " + std::to_string(vo.trees.size()));
    auto so = orbit(v, {Letter::A, Letter::S}, 1000000);
    if (so.trees.size() != catalan(n - 1) * factorial(n - 1) || so.trees.size() != brute_s)
      return fail("S orbit at n=" + std::to_string(n) + " has " + std::to_string(so.trees.size()));
    for (const auto& t : so.trees)
      if (rightmost_label(t) != static_cast<int>(n)) return fail("rightmost label moved: " + print_tree(t));
    out << vo.trees.size() << "/" << so.trees.size() << " ";
  }
  return {true, "V/S orbit sizes " + out.str()};
}

// 3
Outcome relation_sweep() {
  std::size_t total = 0;
  const Bounds b{2, 4};
  for (const char* fam : {"R_A", "R_AC", "R_ACS", "R_AS", "R_a", "R_ac", "R_acs", "R_as"})
    for (const auto& r : relations(fam, b)) {
      ++total;
      if (verify_by_seed(r).kind != VerdictKind::seed_equal)
        return fail(std::string(fam) + " " + r.params + ": " + print_word(r.lhs) + " = " + print_word(r.rhs));
    }
  for (const char* fam : {"T_C", "T_S", "T_c", "T_s"})
    for (const auto& r : relations(fam, b)) {
      ++total;
      if (!r.rhs.empty() || !(reduced(word_seed(r.lhs)) == Seed{}))
        return fail(std::string(fam) + " " + r.params + " is not an identity seed");
    }
  return {true, std::to_string(total) + " relations, zero failures"};
}

// 4
Outcome construction_lemmas() {
  std::size_t trees = 0;
  // 1430 trees means 8 carets, i.e. 9 leaves; running to 9 leaves covers
  // both readings of "size 8".
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& t : all_shapes(n)) {
      ++trees;
      auto built = apply_word(vine(n), construction_words(t).w);
      if (!built || !(*built == t)) return fail("w_t misses " + print_tree(t));
    }
  if (all_shapes(9).size() != 1430) return fail("enumeration with 8 carets is not 1430 trees");
  const Tree tail = bullet(100) * bullet(101);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& sh : all_shapes(n))
      for (const auto& t : all_labellings(sh)) {
        ++trees;
        auto ls = labels(t);
        std::set<int> I(ls.begin(), ls.end());
        auto cw = coloured_construction_words(t);
        auto built = apply_word(coloured_vine({I}), cw.w);
        if (!built || !(*built == t)) return fail("coloured w_t misses " + print_tree(t));
        auto starred = apply_word(coloured_vine({I}, tail), cw.w_star);
        if (!starred || !(*starred == t * tail)) return fail("coloured w_t* misses " + print_tree(t));
      }
  return {true, std::to_string(trees) + " trees"};
}

// 5
Outcome polish_agreement() {
  std::size_t trees = 0;
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& t : all_shapes(n)) {
      ++trees;
      auto x = construction_words(t), y = construction_words_via_polish(t);
      if (!(x.w == y.w) || !(x.w_star == y.w_star)) return fail("Polish words differ on " + print_tree(t));
      if (!star_suffix_identity(t)) return fail("suffix identity fails on " + print_tree(t));
    }
  auto ex = construction_words_via_polish(parse_tree("(* ((* *) *))"));
  if (print_word(alias_expand(ex.w_star)) != "A[1] A[1] A[]" || print_word(alias_expand(ex.w)) != "A[1]")
    return fail("worked example gives " + print_word(ex.w_star) + " / " + print_word(ex.w));
  return {true, std::to_string(trees) + " trees; worked example A[1] A[1] A[] / A[1]"};
}

// 6
Outcome exact_words() {
  std::string c = print_word(c_word({2, 5, 6}, {1, 3, 4}));
  std::string s = print_word(s_word({2, 5, 6}, {1, 3, 4}));
  if (c != "s4 c5 s3 s4 s1 s2 s3") return fail("c word is " + c);
  if (s != "s4 s5 s3 s4 s1 s2 s3") return fail("s word is " + s);
  for (const auto& alpha : addresses_up_to(4))
    if (!equal_in_group(translate_A_to_a(alpha), {Generator::at(Letter::A, alpha)}))
      return fail("translation of A[" + alpha.bits() + "] is not seed-equal");
  const Word printed = parse_word("a1 a2 a3 a3 a3 a3 a4' a3' a3' a3' a2' a1'");
  const Word target{Generator::at(Letter::A, Address::parse("01100"))};
  Word ours = translate_A_to_a(Address::parse("01100"));
  bool byte_exact = ours == printed;
  bool printed_equal = equal_in_group(printed, target);
  if (byte_exact && printed_equal) return {true, "all words exact and seed-equal"};
  return fail("sorting words exact and all |alpha|<=4 translations seed-equal, but the required word " +
              print_word(printed) + " is " + (printed_equal ? "" : "not ") +
              "seed-equal to A[01100] under left-to-right action; the seed-equal translation is " +
              print_word(ours) + " (its mirror is byte-exact)");
}

// 7
Outcome rewriting_lemma() {
  std::unordered_map<std::string, std::pair<Seed, Seed>> memo;
  auto seeds_of = [&](const Tree& t) -> const std::pair<Seed, Seed>& {
    auto key = print_tree(t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto cw = coloured_construction_words(t);
    return memo.emplace(key, std::make_pair(word_seed(cw.w), word_seed(cw.w_star))).first->second;
  };
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& sh : all_shapes(n))
      for (const auto& t : all_labellings(sh))
        for (const auto& alpha : addresses_up_to(2))
          for (Letter l : {Letter::A, Letter::C, Letter::S}) {
            Generator x = Generator::at(l, alpha);
            auto image = apply_generator(t, x);
            if (!image) continue;
            ++cases;
            const auto& [w, ws] = seeds_of(t);
            const auto& [w2, ws2] = seeds_of(*image);
            if (!(reduced(w2) == reduced(compose(w, generator_seed(x)))))
              return fail("w_t' vs w_t X on " + print_tree(t) + " with " + print_generator(x));
            Generator x0 = Generator::at(l, Address::parse("0") + alpha);
            if (!(reduced(ws2) == reduced(compose(ws, generator_seed(x0)))))
              return fail("w_t'* vs w_t* X_0 on " + print_tree(t) + " with " + print_generator(x));
          }
  return {true, std::to_string(cases) + " (tree, operator) cases"};
}

// 8
Outcome twisted_operators() {
  const std::size_t samples = 1000;
  std::size_t rels = 0;
  auto free_label = [](std::size_t k, std::mt19937_64&) { return nth_free_generator(k); };
  for (const char* fam : {"R_AS", "R_ACS"})
    for (const auto& r : relations(fam, Bounds{2, 4})) {
      ++rels;
      auto v = verify_by_action(r, ConjFreeLD{}, samples, 1000 + rels, free_label);
      if (v.kind != VerdictKind::action_equal || v.samples < samples)
        return fail(std::string(fam) + " " + r.params + " fails under conjugation on " + v.witness);
    }
  // Equivalences between the LD law and the braid-like relations of S.
  std::vector<Relation> equivalences{
      {{A("1"), S()}, {S(), S("1"), A()}, "S-LD", "rel=A1S"},
      {{A(), S()}, {S("1"), S(), A("1")}, "S-LD", "rel=AS"},
      {{S(), S("1"), S()}, {S("1"), S(), S("1")}, "S-LD", "rel=braid"}};
  for (const auto& r : equivalences)
    if (verify_by_action(r, ConjFreeLD{}, 200, 5, free_label).kind != VerdictKind::action_equal)
      return fail(r.params + " fails under conjugation");
  auto shift_label = [](std::size_t, std::mt19937_64& rng) { return static_cast<long>(rng() >> 24); };
  auto neg = verify_by_action(equivalences[2], ShiftLD{}, 200, 5, shift_label);
  if (neg.ok()) return fail("non-LD bracket satisfies the braid-like relation");
  auto trivial_torsion = verify_by_action(Relation{{C(), C()}, {}, "T", "C2"}, TrivialLD<int>{}, 200, 3,
                                          [](std::size_t k, std::mt19937_64&) { return static_cast<int>(k); });
  auto conj_torsion = verify_by_action(Relation{{C(), C()}, {}, "T", "C2"}, ConjFreeLD{}, 200, 3, free_label);
  if (!trivial_torsion.ok()) return fail("C^2 is not trivial for the trivial bracket");
  if (conj_torsion.ok()) return fail("C^2 is trivial under conjugation");
  auto inv = check_law(ConjFreeLD{}, Law::involutory, generic_free_instances(),
                       [](std::mt19937_64& rng) { return random_free_word(rng); }, 0);
  const FreeWord X = inv.witness.empty() ? FreeWord{} : inv.witness[0];
  const FreeWord Y = inv.witness.size() < 2 ? FreeWord{} : inv.witness[1];
  if (inv.holds || !(inv.lhs == X * X * Y * X.inverse() * X.inverse()))
    return fail("involutory witness is not x^2 y x^-2");
  return {true, std::to_string(rels) + " relations x " + std::to_string(samples) +
                    " trees under conjugation; non-LD witness " + neg.witness + " -> " + neg.lhs_image + " vs " +
                    neg.rhs_image + "; C^2 under conjugation differs on " + conj_torsion.witness +
                    "; x[x[y]] = " + print_free_word(inv.lhs)};
}

// 9
Outcome braided_suite() {
  BvLD bv;
  PsiEvaluator& psi = bv.psi();
  auto x = [](const char* bits, bool inv = false) { return FreeWord::generator(Address::parse(bits), inv); };
  if (!(psi.image({sigma(1)}, {}) == x("e") * x("1") * x("e", true)) ||
      !(psi.image({sigma(1)}, Address::parse("1")) == x("e")))
    return fail("psi(sigma1) has the wrong images");
  std::size_t rels = 0;
  for (const auto& r : relations("R_asigma", Bounds{2, 4})) {
    ++rels;
    if (!bv_equal(r.lhs, r.rhs, psi)) return fail("relation " + r.params + " fails");
  }
  auto torsion = bv_compare({sigma(1), sigma(1)}, {}, psi);
  if (torsion.equal) return fail("sigma1^2 is trivial");
  std::vector<Word> ws{{}};
  const Generator gs[] = {a(1), a(2), sigma(1), sigma(2)};
  for (const auto& g : gs) ws.push_back({g});
  for (const auto& g : gs)
    for (const auto& h : gs) ws.push_back({g, h});
  std::size_t triples = 0;
  for (const auto& X : ws)
    for (const auto& Y : ws)
      for (const auto& Z : ws) {
        ++triples;
        Word lhs = bv.bracket(X, bv.bracket(Y, Z));
        if (!bv_equal(lhs, bv.bracket(bv.bracket(X, Y), bv.bracket(X, Z)), psi))
          return fail("LD law fails on " + print_word(X) + " | " + print_word(Y) + " | " + print_word(Z));
        if (!bv_equal(lhs, bv.bracket(bv_circle(X, Y), Z), psi))
          return fail("x[y[z]] = (x o y)[z] fails");
        if (!bv_equal(bv.bracket(X, bv_circle(Y, Z)), bv_circle(bv.bracket(X, Y), bv.bracket(X, Z)), psi))
          return fail("x[y o z] = x[y] o x[z] fails");
      }
  const std::vector<Word> ls{{}, {a(1)}, {a(2)}, {sigma(1)}, {sigma(2)}};
  std::size_t lemma = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& sh : all_shapes(n)) {
      std::size_t total = 1;
      for (std::size_t k = 0; k < n; ++k) total *= ls.size();
      for (std::size_t m = 0; m < total; ++m) {
        std::size_t code = m;
        BvTree t = map_labels(sh, [&](int) {
          Word w = ls[code % ls.size()];
          code /= ls.size();
          return w;
        });
        for (int i = 1; i <= 3; ++i)
          for (Letter l : {Letter::a, Letter::sigma}) {
            Generator g = Generator::indexed(l, i);
            auto image = apply_word(t, {g}, bv);
            if (!image) continue;
            ++lemma;
            if (!bv_equal(f_eval(*image), f_eval(t) + Word{g}, psi))
              return fail("f not equivariant on " + format_tree(t) + " with " + print_generator(g));
          }
      }
    }
  return {true, std::to_string(rels) + " relations, " + std::to_string(triples) + " bracket triples, " +
                    std::to_string(lemma) + " equivariance cases; sigma1^2 differs on x:" + torsion.witness->str()};
}

// 10
Outcome realization() {
  if (print_pl(pl_of_seed(word_seed({A()}))) != "(0,0) (1/2,1/4) (3/4,1/2) (1,1)")
    return fail("seed(A) realizes as " + print_pl(pl_of_seed(word_seed({A()}))));
  std::mt19937_64 rng(2024);
  auto addrs = addresses_up_to(2);
  auto random_word = [&](std::vector<Letter> ls) {
    Word w;
    for (int n = 1 + rng() % 5; n > 0; --n)
      w.push_back(Generator::at(ls[rng() % ls.size()], addrs[rng() % addrs.size()], rng() % 2));
    return w;
  };
  std::vector<std::pair<Word, Word>> f_pairs, v_pairs;
  for (int k = 0; k < 500; ++k) f_pairs.emplace_back(random_word({Letter::A}), random_word({Letter::A}));
  for (int k = 0; k < 500; ++k)
    v_pairs.emplace_back(random_word({Letter::A, Letter::C, Letter::S}), random_word({Letter::A, Letter::C, Letter::S}));
  auto pf = homomorphism_check(f_pairs, pl_of_word);
  if (!pf.holds) return fail("PL homomorphism fails on " + print_word(pf.w1) + " | " + print_word(pf.w2));
  auto pv = homomorphism_check(v_pairs, vmap_of_word);
  if (!pv.holds) return fail("interval homomorphism fails on " + print_word(pv.w1) + " | " + print_word(pv.w2));
  for (const auto& [w1, w2] : f_pairs) pl_of_word(w1 + w2).slope_exponents();
  for (const auto& [w1, w2] : v_pairs) {
    auto f = vmap_of_word(w1 + w2);
    for (const auto& p : f.pieces())
      if (!log2_ratio(p.target.length(), p.source.length())) return fail("slope is not a power of two");
  }
  return {true, std::to_string(pf.tested) + " PL pairs, " + std::to_string(pv.tested) + " interval pairs"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed_red, only;
  for (int i = 1; i + 1 < argc; ++i) {
    std::string flag = argv[i];
    if (flag == "--allow-red") allowed_red.insert(std::atoi(argv[++i]));
    else if (flag == "--only") only.insert(std::atoi(argv[++i]));
  }

  const std::vector<Criterion> criteria{
      {1, "Catalan orbits", 10, catalan_orbits},
      {2, "V and S orbits", 60, coloured_orbits},
      {3, "relation soundness sweep", 120, relation_sweep},
      {4, "construction lemmas", 0, construction_lemmas},
      {5, "Polish agreement", 0, polish_agreement},
      {6, "exact words", 0, exact_words},
      {7, "rewriting lemma", 0, rewriting_lemma},
      {8, "twisted operators", 0, twisted_operators},
      {9, "braided group suite", 300, braided_suite},
      {10, "dyadic realization", 0, realization},
  };
  bool ok = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit)";
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " [" << secs
         << " s]: " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.pass && !allowed_red.count(c.id)) ok = false;
  }
  if (!allowed_red.empty()) {
    std::cout << "known red:";
    for (int id : allowed_red) std::cout << ' ' << id;
    std::cout << '\n';
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
