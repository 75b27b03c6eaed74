#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "geomgroup/enumerate.hpp"
#include "geomgroup/tree.hpp"

using namespace geomgroup;

namespace {

std::set<Address> addrs(std::initializer_list<const char*> bits) {
  std::set<Address> out;
  for (auto b : bits) out.insert(Address::parse(b));
  return out;
}

// Naive skeleton: walk every address up to the tree's size and ask subtree().
template <class L>
std::set<Address> skeleton_by_probing(const BasicTree<L>& t) {
  std::set<Address> out;
  for (const auto& a : addresses_up_to(t.size())) {
    try {
      subtree(t, a);
      out.insert(a);
    } catch (const AddressOutsideSkeleton&) {
    }
  }
  return out;
}

Tree random_tree(std::mt19937_64& rng, std::size_t n) {
  if (n == 1) return bullet();
  std::size_t k = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
  return random_tree(rng, k) * random_tree(rng, n - k);
}

}  // namespace

TEST_CASE("addresses: prefix order and incompatibility") {
  auto a = Address::parse("01"), b = Address::parse("011"), c = Address::parse("10");
  CHECK(a.is_prefix_of(b));
  CHECK_FALSE(b.is_prefix_of(a));
  CHECK(a.incompatible_with(c));
  CHECK(c.incompatible_with(a));
  CHECK_FALSE(a.incompatible_with(b));
  CHECK(Address{}.is_prefix_of(c));
  CHECK(Address::parse("e").empty());
  CHECK(Address::right_branch(3).bits() == "111");
  CHECK(addresses_up_to(2).size() == 7);
  CHECK_THROWS_AS(Address::parse("012"), ParseError);
}

TEST_CASE("parse and print round trip") {
  Tree t = parse_tree("(* (((* *) *) (* *)))");
  CHECK(t.size() == 6);
  CHECK(print_tree(t) == "(* (((* *) *) (* *)))");
  CHECK(print_tree(parse_tree("*")) == "*");
  CHECK(parse_tree("*").label() == 1);
  Tree u = parse_tree("((1 2) 3)");
  CHECK(u == (bullet(1) * bullet(2)) * bullet(3));
  CHECK(print_tree(u) == "((1 2) 3)");
  CHECK_THROWS_AS(parse_tree("(* *"), ParseError);
  CHECK_THROWS_AS(parse_tree("(* * *)"), ParseError);
  CHECK_THROWS_AS(parse_tree(""), Error);
}

TEST_CASE("subtrees and skeletons") {
  Tree t = parse_tree("(* ((* *) *))");
  CHECK(print_tree(subtree(t, Address::parse("10"))) == "(* *)");
  CHECK_THROWS_AS(subtree(t, Address::parse("01")), AddressOutsideSkeleton);
  CHECK_THROWS_AS(subtree(t, Address::parse("111")), AddressOutsideSkeleton);
  CHECK(subtree(t, {}) == t);
  CHECK(skeleton(t) == addrs({"", "0", "1", "10", "100", "101", "11"}));
  CHECK(skeleton(bullet()) == addrs({""}));
  CHECK(skeleton(bullet() * bullet()) == addrs({"", "0", "1"}));
}

TEST_CASE("skeleton agrees with probing and is prefix closed") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    Tree t = random_tree(rng, 1 + rng() % 9);
    auto sk = skeleton(t);
    CHECK(sk == skeleton_by_probing(t));
    for (const auto& a : sk)
      if (!a.empty()) CHECK(sk.count(a.prefix(a.size() - 1)));
    CHECK(leaf_addresses(t).size() == t.size());
    CHECK(internal_addresses(t).size() == t.size() - 1);
  }
}

TEST_CASE("grafting") {
  Tree t = parse_tree("(* (* *))");
  CHECK(print_tree(graft(t, Address::parse("1"), parse_tree("((* *) *)"))) == "(* ((* *) *))");
  CHECK(graft(t, {}, bullet()) == bullet());
  CHECK(print_tree(graft(parse_tree("(* ((* *) *))"), Address::parse("10"), bullet())) == "(* (* *))");
  CHECK_THROWS_AS(graft(t, Address::parse("00"), bullet()), AddressOutsideSkeleton);
}

TEST_CASE("vines") {
  CHECK(print_tree(vine(4)) == "(* (* (* *)))");
  Tree v = coloured_vine({{2, 5, 6}, {1, 3, 4}});
  CHECK(labels(v) == std::vector<int>{2, 5, 6, 1, 3, 4});
  CHECK(print_tree(v) == "(2 (5 (6 (1 (3 4)))))");
  Tree w = coloured_vine({{1, 2, 3, 4, 5}});
  CHECK(labels(w) == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("Polish expressions") {
  Tree t = parse_tree("(* ((* *) *))");
  CHECK(print_polish(polish_encode(t)) == "***o*oo");
  CHECK(print_polish(polish_encode(bullet())) == "*");
  CHECK_THROWS_AS(polish_decode(parse_polish("*o")), MalformedPolish);
  CHECK_THROWS_AS(polish_decode(parse_polish("**")), MalformedPolish);
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& s : all_shapes(n)) {
      auto p = polish_encode(s);
      CHECK(polish_decode(p) == s);
      auto d = defect_profile(p);
      CHECK(d.back() == 0);
      for (std::size_t k = 1; k < d.size(); ++k) CHECK(d[k] >= 0);
    }
}

TEST_CASE("substitution") {
  Tree t = bullet(1) * bullet(2);
  Substitution s{{1, bullet(1)}, {2, bullet(2) * bullet(3)}};
  CHECK(print_tree(apply_substitution(t, s)) == "(1 (2 3))");
  Substitution id{{1, bullet(1)}, {2, bullet(2)}};
  CHECK(apply_substitution(t, id) == t);
  Tree u = parse_tree("(1 (2 3))");
  Substitution shapes{{1, parse_tree("(* *)")}, {2, bullet()}, {3, bullet()}};
  Tree image = apply_substitution(u, shapes);
  CHECK(image.size() == 4);
  CHECK(print_tree(image) == "((* *) (* *))");
  CHECK_THROWS_AS(apply_substitution(t, Substitution{{1, bullet()}}), UnboundLabel);
}

TEST_CASE("unification of injective trees") {
  auto check_unifier = [](const Tree& t1, const Tree& t2) {
    auto u = unify_injective(t1, t2);
    CHECK(apply_substitution(t1, u.first) == u.common);
    CHECK(apply_substitution(t2, u.second) == u.common);
    auto sk = skeleton(t1);
    auto sk2 = skeleton(t2);
    sk.insert(sk2.begin(), sk2.end());
    CHECK(skeleton(u.common) == sk);
    return u;
  };
  auto u = check_unifier(parse_tree("(1 2)"), parse_tree("(1 (2 3))"));
  CHECK(skeleton(u.common) == addrs({"", "0", "1", "10", "11"}));
  CHECK(u.first.at(2).size() == 2);
  auto same = check_unifier(parse_tree("((1 2) 3)"), parse_tree("((1 2) 3)"));
  CHECK(same.common.size() == 3);
  auto v = check_unifier(parse_tree("((1 2) 3)"), parse_tree("(1 (2 3))"));
  CHECK(print_tree(shape(v.common)) == "((* *) (* *))");
  CHECK_THROWS_AS(unify_injective(parse_tree("(1 1)"), parse_tree("(1 2)")), NonInjectiveLabels);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k)
    check_unifier(label_left_to_right(random_tree(rng, 1 + rng() % 7)),
                  label_left_to_right(random_tree(rng, 1 + rng() % 7)));
}

TEST_CASE("shape enumeration matches Catalan numbers") {
  for (std::size_t n = 1; n <= 9; ++n) {
    auto& shapes = all_shapes(n);
    CHECK(shapes.size() == catalan(n - 1));
    std::set<std::string> distinct;
    for (const auto& s : shapes) distinct.insert(print_tree(s));
    CHECK(distinct.size() == shapes.size());
  }
  CHECK(all_labellings(vine(3)).size() == 6);
}
