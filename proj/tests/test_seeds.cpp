#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "geomgroup/enumerate.hpp"
#include "geomgroup/operators.hpp"
#include "geomgroup/seeds.hpp"

using namespace geomgroup;
using namespace geomgroup::letters;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t len, std::vector<Letter> ls = {Letter::A, Letter::C, Letter::S}) {
  auto addrs = addresses_up_to(2);
  Word w;
  for (std::size_t k = 0; k < len; ++k)
    w.push_back(Generator::at(ls[rng() % ls.size()], addrs[rng() % addrs.size()], rng() % 2));
  return w;
}

}  // namespace

TEST_CASE("generator seeds") {
  CHECK(print_seed(generator_seed(A())) == "(1 (2 3)) -> ((1 2) 3)");
  CHECK(print_seed(generator_seed(C())) == "(1 2) -> (2 1)");
  CHECK(print_seed(generator_seed(S())) == "(1 (2 3)) -> (2 (1 3))");
}

TEST_CASE("composition of seeds") {
  CHECK(print_seed(word_seed({A(), A()})) == "(1 (2 (3 4))) -> (((1 2) 3) 4)");
  Seed id;
  CHECK(compose(generator_seed(A()), id) == generator_seed(A()));
  CHECK(compose(id, generator_seed(C("1"))) == generator_seed(C("1")));
  Seed back = word_seed({A(), A("", true)});
  CHECK(print_seed(back) == "(1 (2 3)) -> (1 (2 3))");
  CHECK(word_seed({}) == Seed{});
}

TEST_CASE("equality in the groups") {
  CHECK(equal_in_group({A(), A()}, {A("1"), A(), A("0")}));
  CHECK(equal_in_group({A(), C(), A()}, {C("1"), A(), C("0")}));
  CHECK(equal_in_group({C(), C()}, {}));
  CHECK(is_identity({S("1"), S("1")}));
  CHECK_FALSE(is_identity({A()}));
  CHECK_FALSE(equal_in_group({A(), C(), A()}, {C("0"), A(), C("1")}));
  CHECK(equal_in_group({a(1), a(2)}, {a(3), a(1)}));
}

TEST_CASE("seeds predict the action on every tree in the domain") {
  std::mt19937_64 rng(2);
  std::size_t checked = 0;
  for (int k = 0; k < 300; ++k) {
    Word w = random_word(rng, 1 + rng() % 4);
    Seed s = word_seed(w);
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& sh : all_shapes(n)) {
        Tree t = label_left_to_right(sh);
        auto direct = apply_word(t, w);
        auto predicted = seed_apply(s, t);
        CHECK(bool(direct) == bool(predicted));
        if (direct && predicted) {
          CHECK(*direct == *predicted);
          ++checked;
        }
      }
  }
  CHECK(checked > 500);
}

TEST_CASE("seed equality agrees with acting on a common tree") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    Word w1 = random_word(rng, 1 + rng() % 3, {Letter::A, Letter::C});
    Word w2 = random_word(rng, 1 + rng() % 3, {Letter::A, Letter::C});
    Seed s1 = word_seed(w1), s2 = word_seed(w2);
    auto u = unify_injective(s1.source, s2.source);
    Tree t = u.common;
    auto r1 = apply_word(t, w1), r2 = apply_word(t, w2);
    REQUIRE(r1);
    REQUIRE(r2);
    CHECK(equal_in_group(w1, w2) == (*r1 == *r2));
  }
}

TEST_CASE("reduced seeds are invariant under inserting cancelling pairs") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    Word w = random_word(rng, 3);
    Word padded = w;
    Generator g = random_word(rng, 1)[0];
    padded.insert(padded.begin() + rng() % (w.size() + 1), {g, g.inverted()});
    CHECK(equal_in_group(w, padded));
    CHECK(reduced(word_seed(w)) == reduced(word_seed(padded)));
  }
}

TEST_CASE("regimes") {
  CHECK_NOTHROW(check_regime(Regime::F, {A(), a(2)}));
  CHECK_THROWS_AS(check_regime(Regime::F, {C()}), IllegalGenerator);
  CHECK_THROWS_AS(check_regime(Regime::S, {C()}), IllegalGenerator);
  CHECK_NOTHROW(check_regime(Regime::S, {S(), A()}));
  CHECK_NOTHROW(check_regime(Regime::BV, {sigma(1), a(1)}));
}
