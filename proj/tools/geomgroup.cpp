#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "geomgroup.hpp"

using namespace geomgroup;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, undefined = 3 };

struct UndefinedAction : Error {
  explicit UndefinedAction(const ActionFailure& f) : Error(describe(f)) {}
};

Regime parse_regime(const std::string& s) {
  if (s == "F") return Regime::F;
  if (s == "V") return Regime::V;
  if (s == "S") return Regime::S;
  if (s == "BV") return Regime::BV;
  throw Error("unknown regime: " + s);
}

Regime default_regime(const Word& w1, const Word& w2) {
  for (const auto* w : {&w1, &w2})
    for (const auto& g : *w)
      if (g.letter == Letter::sigma) return Regime::BV;
  return Regime::V;
}

std::vector<Letter> parse_families(const std::string& s) {
  std::vector<Letter> out;
  for (char ch : s) {
    switch (ch) {
      case 'A': out.push_back(Letter::A); break;
      case 'C': out.push_back(Letter::C); break;
      case 'S': out.push_back(Letter::S); break;
      case ',': case ' ': break;
      default: throw Error(std::string("unknown generator family '") + ch + "'");
    }
  }
  if (out.empty()) throw Error("no generator family given");
  return out;
}

std::set<int> parse_set(const std::string& s) {
  std::set<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(parse_int_label(item, 0));
  return out;
}

Tree checked_tree(const std::string& text, std::size_t max_size) {
  Tree t = parse_tree(text);
  if (t.size() > max_size) throw Error("tree exceeds the size cap of " + std::to_string(max_size) + " leaves");
  return t;
}

template <class T>
T defined_or_throw(const Partial<T>& p) {
  if (!p) throw UndefinedAction(p.failure());
  return *p;
}

BasicTree<FreeWord> parse_free_tree(const std::string& text) {
  return parse_tree_with<FreeWord>(text, [](std::string_view token, std::size_t offset) {
    return parse_free_word(token, offset);
  });
}

BasicTree<long> parse_long_tree(const std::string& text) {
  return parse_tree_with<long>(text, [](std::string_view token, std::size_t offset) {
    try {
      return std::stol(std::string(token));
    } catch (const std::exception&) {
      throw ParseError("expected an integer label", offset);
    }
  });
}

// ---- verify ----

struct VerifyOptions {
  std::string family = "R_A";
  std::size_t addr_len = 2;
  int index = 4;
  std::string ld;
  std::size_t samples = 100;
  std::uint64_t rng = 1;
  bool porcelain = false;
};

bool needs_ld(const std::string& family) { return family == "R_asigma" || family == "T_sigma"; }

Verdict verify_one(const Relation& rel, const VerifyOptions& o, std::uint64_t seed) {
  std::string ld = o.ld.empty() && needs_ld(o.family) ? "conj" : o.ld;
  if (ld.empty()) return verify_by_seed(rel);
  if (ld == "conj")
    return verify_by_action(rel, ConjFreeLD{}, o.samples, seed,
                            [](std::size_t k, std::mt19937_64&) { return nth_free_generator(k); });
  if (ld == "trivial")
    return verify_by_action(rel, TrivialLD<int>{}, o.samples, seed,
                            [](std::size_t k, std::mt19937_64&) { return static_cast<int>(k) + 1; });
  if (ld == "negative")
    return verify_by_action(rel, ShiftLD{}, o.samples, seed, [](std::size_t, std::mt19937_64& rng) {
      return static_cast<long>(rng() >> 24);
    });
  if (ld == "bv") {
    static BvLD bv;
    return verify_by_action(rel, bv, o.samples, seed, [](std::size_t k, std::mt19937_64&) {
      return Word{letters::a(static_cast<int>(k) + 1)};
    });
  }
  throw Error("unknown LD system: " + ld);
}

int run_verify(const VerifyOptions& o) {
  auto rels = relations(o.family, Bounds{o.addr_len, o.index});
  std::size_t failures = 0;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto& rel = rels[i];
    Verdict v = verify_one(rel, o, o.rng + i);
    if (!v.ok()) ++failures;
    if (o.porcelain) {
      std::cout << rel.family << ';' << rel.params << ';' << verdict_name(v) << '\n';
    } else if (!v.ok()) {
      std::cout << "FAILED " << rel.params << ": " << print_word(rel.lhs) << " = " << print_word(rel.rhs) << '\n'
                << "  on " << v.witness << '\n'
                << "  lhs " << v.lhs_image << '\n'
                << "  rhs " << v.rhs_image << '\n';
    }
  }
  if (!o.porcelain)
    std::cout << o.family << ": " << rels.size() << " relations, " << rels.size() - failures << " verified, "
              << failures << " failed\n";
  return failures == 0 ? ok : failed;
}

// ---- ld check ----

template <class L>
int report_law(const LawVerdict<L>& v) {
  if (v.holds) {
    std::cout << law_name(v.law) << " holds on " << v.tested << " instances\n";
    return ok;
  }
  std::cout << law_name(v.law) << " FAILED after " << v.tested << " instances\n  witness:";
  for (const auto& x : v.witness) std::cout << ' ' << format_label(x);
  std::cout << "\n  lhs " << format_label(v.lhs) << "\n  rhs " << format_label(v.rhs) << '\n';
  return failed;
}

Law parse_law(const std::string& s) {
  if (s == "ld") return Law::left_self_distributive;
  if (s == "cancel") return Law::left_cancellative;
  if (s == "involutory") return Law::involutory;
  throw Error("unknown law: " + s);
}

Word random_bv_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 2), pick(0, 3);
  std::bernoulli_distribution inv(0.5);
  Word w;
  for (int n = len(rng), k = 0; k < n; ++k) {
    int p = pick(rng);
    w.push_back(Generator::indexed(p < 2 ? Letter::a : Letter::sigma, 1 + p % 2, inv(rng)));
  }
  return free_reduce(w);
}

int run_ld_check(const std::string& system, const std::string& law_text, std::size_t samples, std::uint64_t seed) {
  Law law = parse_law(law_text);
  if (system == "conj") {
    return report_law(check_law(ConjFreeLD{}, law, generic_free_instances(),
                                [](std::mt19937_64& rng) { return random_free_word(rng); }, samples, seed));
  }
  if (system == "trivial") {
    return report_law(check_law(TrivialLD<int>{}, law, {{1, 2, 3}},
                                [](std::mt19937_64& rng) { return static_cast<int>(rng() % 100) + 1; }, samples, seed));
  }
  if (system == "negative") {
    return report_law(check_law(ShiftLD{}, law, {{1, 2, 3}},
                                [](std::mt19937_64& rng) { return static_cast<long>(rng() % 1000); }, samples, seed));
  }
  if (system == "bv") {
    return report_law(check_law(BvLD{}, law, {{{letters::a(1)}, {letters::sigma(1)}, {}}}, random_bv_word, samples, seed));
  }
  throw Error("unknown LD system: " + system);
}

// ---- orbits ----

template <class L>
std::string dot_of(const Orbit<L>& orb) {
  std::string out = "digraph orbit {\n";
  for (std::size_t i = 0; i < orb.trees.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + print_tree(orb.trees[i]) + "\"];\n";
  for (const auto& e : orb.edges)
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           print_generator(e.generator) + "\"];\n";
  return out + "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial actions of Thompson-like groups on binary trees"};
  app.require_subcommand(1);
  std::size_t max_size = 1u << 16;
  app.add_option("--max-size", max_size, "Largest tree accepted, in leaves")->capture_default_str();

  // apply
  std::string tree_text, word_text, ld_name = "trivial";
  auto* apply = app.add_subcommand("apply", "Act on a tree with a word (left to right)");
  apply->add_option("--tree", tree_text, "Tree, e.g. \"(* (* *))\"")->required();
  apply->add_option("--word", word_text, "Word, e.g. \"A[] C[1]'\"")->required();
  apply->add_option("--ld", ld_name, "Bracket for C/S/sigma: trivial|conj|negative|bv")->capture_default_str();

  // seed / eq / id
  std::string w1_text, w2_text, regime_text;
  bool reduced_seed = false;
  auto* seed = app.add_subcommand("seed", "Canonical seed of an A/C/S word");
  seed->add_option("word", w1_text)->required();
  seed->add_flag("--reduced", reduced_seed, "Remove common carets first");

  bool porcelain = false;
  auto* eq = app.add_subcommand("eq", "Decide equality of two words in a group");
  eq->add_option("w1", w1_text)->required();
  eq->add_option("w2", w2_text)->required();
  eq->add_option("--regime", regime_text, "F|V|S|BV");
  eq->add_flag("--porcelain", porcelain);

  auto* id = app.add_subcommand("id", "Decide whether a word is the identity");
  id->add_option("word", w1_text)->required();
  id->add_option("--regime", regime_text, "F|V|S|BV");

  // orbit / render
  std::string gens = "A";
  std::size_t cap = 100000;
  bool count_only = false, dot = false;
  auto* orbit_cmd = app.add_subcommand("orbit", "Enumerate the orbit of a tree");
  orbit_cmd->add_option("--tree", tree_text)->required();
  orbit_cmd->add_option("--gens", gens, "Families among A, C, S")->capture_default_str();
  orbit_cmd->add_option("--cap", cap, "Exploration cap")->capture_default_str();
  orbit_cmd->add_flag("--count", count_only, "Print only the orbit size");
  orbit_cmd->add_flag("--dot", dot, "Print the orbit graph in DOT");

  auto* render = app.add_subcommand("render", "Orbit graph in DOT");
  render->add_option("--tree", tree_text)->required();
  render->add_option("--gens", gens)->capture_default_str();
  render->add_option("--cap", cap)->capture_default_str();

  // wt / cword / translate
  bool coloured = false, star = false, polish = false;
  auto* wt = app.add_subcommand("wt", "Construction word of a tree");
  wt->add_option("--tree", tree_text)->required();
  wt->add_flag("--colored,--coloured", coloured, "Coloured variant (injective labels)");
  wt->add_flag("--star", star, "Print w* instead of w");
  wt->add_flag("--polish", polish, "Compute through the Polish expression");

  std::string set_i, set_j, kind_text = "c", block_text;
  auto* cword = app.add_subcommand("cword", "Label-sorting and block words");
  cword->add_option("--I", set_i, "First set, e.g. 2,5,6");
  cword->add_option("--J", set_j, "Second set, e.g. 1,3,4");
  cword->add_option("--block", block_text, "p,q for the block word instead of sets");
  cword->add_option("--kind", kind_text, "c|s")->capture_default_str();

  std::string address_text;
  bool printed = false;
  auto* translate = app.add_subcommand("translate", "A_alpha as a word in the a_i");
  translate->add_option("address", address_text)->required();
  translate->add_flag("--mirrored", printed, "Print the letters in right-to-left order");

  // verify
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Check a relation family");
  verify->add_option("--family", vo.family)->required();
  verify->add_option("--addr-len", vo.addr_len)->capture_default_str();
  verify->add_option("--index", vo.index)->capture_default_str();
  verify->add_option("--ld", vo.ld, "Sampled action with conj|trivial|negative|bv");
  verify->add_option("--samples", vo.samples)->capture_default_str();
  verify->add_option("--rng", vo.rng)->capture_default_str();
  verify->add_flag("--porcelain", vo.porcelain, "FAMILY;PARAMS;VERDICT lines");

  // ld check
  std::string system = "conj", law_text = "ld";
  std::size_t samples = 200;
  std::uint64_t rng_seed = 1;
  auto* ld = app.add_subcommand("ld", "LD-system law checks");
  auto* ld_check = ld->add_subcommand("check", "Property-test a law");
  ld->require_subcommand(1);
  ld_check->add_option("--system", system)->capture_default_str();
  ld_check->add_option("--law", law_text)->capture_default_str();
  ld_check->add_option("--samples", samples)->capture_default_str();
  ld_check->add_option("--rng", rng_seed)->capture_default_str();

  // bv
  auto* bv = app.add_subcommand("bv", "The braided group through its free-group representation");
  bv->require_subcommand(1);
  auto* bv_eq = bv->add_subcommand("eq", "Equality of two words");
  bv_eq->add_option("w1", w1_text)->required();
  bv_eq->add_option("w2", w2_text)->required();
  std::string gen_text = "e";
  auto* bv_psi = bv->add_subcommand("psi", "Image of a free generator");
  bv_psi->add_option("word", w1_text)->required();
  bv_psi->add_option("--gen", gen_text, "Address of the generator")->capture_default_str();
  bool circle = false;
  auto* bv_bracket_cmd = bv->add_subcommand("bracket", "x[y] (or x∘y)");
  bv_bracket_cmd->add_option("x", w1_text)->required();
  bv_bracket_cmd->add_option("y", w2_text)->required();
  bv_bracket_cmd->add_flag("--circle", circle);
  bool e_only = false, explicit_f = false;
  auto* bv_f = bv->add_subcommand("f", "f (or e) of a tree labelled by words");
  bv_f->add_option("tree", tree_text)->required();
  bv_f->add_flag("--e", e_only);
  bv_f->add_flag("--explicit", explicit_f, "Use the product along the right branch");

  // plmap
  bool tsv = false, vmap = false;
  auto* plmap = app.add_subcommand("plmap", "Dyadic realization of a word");
  plmap->add_option("word", w1_text)->required();
  plmap->add_flag("--tsv", tsv, "x<TAB>y lines");
  plmap->add_flag("--vmap", vmap, "Interval bijection (A/C/S words)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*apply) {
      Word w = parse_word(word_text);
      if (ld_name == "conj") {
        std::cout << format_tree(defined_or_throw(apply_word(parse_free_tree(tree_text), w, ConjFreeLD{}))) << '\n';
      } else if (ld_name == "negative") {
        std::cout << format_tree(defined_or_throw(apply_word(parse_long_tree(tree_text), w, ShiftLD{}))) << '\n';
      } else if (ld_name == "bv") {
        std::cout << format_tree(defined_or_throw(apply_word(parse_bv_tree(tree_text), w, BvLD{}))) << '\n';
      } else if (ld_name == "trivial") {
        std::cout << print_tree(defined_or_throw(apply_word(checked_tree(tree_text, max_size), w))) << '\n';
      } else {
        throw Error("unknown LD system: " + ld_name);
      }
      return ok;
    }
    if (*seed) {
      Seed s = word_seed(parse_word(w1_text));
      std::cout << print_seed(reduced_seed ? reduced(s) : s) << '\n';
      return ok;
    }
    if (*eq || *id) {
      Word w1 = parse_word(w1_text), w2 = *eq ? parse_word(w2_text) : Word{};
      Regime r = regime_text.empty() ? default_regime(w1, w2) : parse_regime(regime_text);
      check_regime(r, w1);
      check_regime(r, w2);
      bool same;
      if (r == Regime::BV) {
        PsiEvaluator psi;
        auto c = bv_compare(w1, w2, psi);
        same = c.equal;
        if (!same && !porcelain)
          std::cout << "differ on x:" << c.witness->str() << ": " << print_free_word(c.lhs) << " vs "
                    << print_free_word(c.rhs) << '\n';
      } else {
        same = equal_in_group(w1, w2);
      }
      if (porcelain) std::cout << (same ? "EQUAL" : "DIFFERENT") << '\n';
      else std::cout << (same ? "equal" : "not equal") << " in " << regime_name(r) << '\n';
      return same ? ok : failed;
    }
    if (*orbit_cmd || *render) {
      auto orb = orbit(checked_tree(tree_text, max_size), parse_families(gens), cap, dot || *render);
      if (count_only) std::cout << orb.trees.size() << '\n';
      else if (dot || *render) std::cout << dot_of(orb);
      else
        for (const auto& t : orb.trees) std::cout << print_tree(t) << '\n';
      return ok;
    }
    if (*wt) {
      Tree t = checked_tree(tree_text, max_size);
      ConstructionWords cw = coloured ? coloured_construction_words(t)
                             : polish ? construction_words_via_polish(t)
                                      : construction_words(t);
      std::cout << print_word(star ? cw.w_star : cw.w) << '\n';
      return ok;
    }
    if (*cword) {
      SortKind kind = kind_text == "s" ? SortKind::s : SortKind::c;
      if (kind_text != "s" && kind_text != "c") throw Error("kind must be c or s");
      if (!block_text.empty()) {
        auto comma = block_text.find(',');
        if (comma == std::string::npos) throw Error("--block expects p,q");
        std::cout << print_word(block_word(std::stoi(block_text.substr(0, comma)),
                                           std::stoi(block_text.substr(comma + 1)), kind))
                  << '\n';
      } else {
        std::cout << print_word(sorting_word(parse_set(set_i), parse_set(set_j), kind)) << '\n';
      }
      return ok;
    }
    if (*translate) {
      Word w = translate_A_to_a(Address::parse(address_text));
      std::cout << print_word(printed ? mirror(w) : w) << '\n';
      return ok;
    }
    if (*verify) return run_verify(vo);
    if (*ld_check) return run_ld_check(system, law_text, samples, rng_seed);
    if (*bv_eq) {
      Word w1 = parse_word(w1_text), w2 = parse_word(w2_text);
      check_regime(Regime::BV, w1);
      check_regime(Regime::BV, w2);
      PsiEvaluator psi;
      auto c = bv_compare(w1, w2, psi);
      if (c.equal) {
        std::cout << "equal (probe depth " << c.depth << ", checked to " << c.depth + 1 << ")\n";
        return ok;
      }
      std::cout << "not equal: x:" << c.witness->str() << " goes to " << print_free_word(c.lhs) << " and "
                << print_free_word(c.rhs) << (c.stable ? "" : " (only at depth + 1)") << '\n';
      return failed;
    }
    if (*bv_psi) {
      Word w = parse_word(w1_text);
      check_regime(Regime::BV, w);
      PsiEvaluator psi;
      std::cout << print_free_word(psi.image(w, Address::parse(gen_text))) << '\n';
      return ok;
    }
    if (*bv_bracket_cmd) {
      Word x = parse_word(w1_text), y = parse_word(w2_text);
      std::cout << print_word(circle ? bv_circle(x, y) : bv_bracket(x, y)) << '\n';
      return ok;
    }
    if (*bv_f) {
      BvTree t = parse_bv_tree(tree_text);
      std::cout << print_word(e_only ? e_eval(t) : explicit_f ? f_eval_explicit(t) : f_eval(t)) << '\n';
      return ok;
    }
    if (*plmap) {
      Word w = parse_word(w1_text);
      if (vmap) {
        auto f = vmap_of_word(w);
        if (tsv)
          for (const auto& p : f.pieces())
            std::cout << p.source.lo.str() << '\t' << p.source.hi.str() << '\t' << p.target.lo.str() << '\t'
                      << p.target.hi.str() << '\n';
        else
          std::cout << print_vmap(f) << '\n';
      } else {
        check_regime(Regime::F, w);
        auto f = pl_of_word(w);
        if (tsv)
          for (const auto& [x, y] : f.breakpoints()) std::cout << x.str() << '\t' << y.str() << '\n';
        else
          std::cout << print_pl(f) << '\n';
      }
      return ok;
    }
  } catch (const UndefinedAction& e) {
    std::cerr << e.what() << '\n';
    return undefined;
  } catch (const BudgetExhausted& e) {
    std::cerr << e.what() << '\n';
    return undefined;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << '\n';
    return undefined;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number\n";
    return usage;
  }
  return usage;
}
