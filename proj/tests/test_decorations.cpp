#include <random>
#include <set>

#include "doctest.h"
#include "lietrees/decorations.hpp"
#include "lietrees/errors.hpp"
#include "lietrees/lie.hpp"
#include "test_support.hpp"

using namespace lietrees;

namespace {

FreeGroupWord w(std::string_view s) { return FreeGroupWord::parse(s); }

DecoratedVector dv(std::string_view text, std::string_view group) {
  return {std::get<DecoratedTreeVector>(parse_tree_vector(text)), GroupSpec::parse(group)};
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("group specs") {
  auto g = GroupSpec::parse("a, b");
  CHECK(g.generators() == std::vector<std::string>{"a", "b"});
  CHECK(g.contains(w("a b^-1 a")));
  CHECK_FALSE(g.contains(w("c")));
  CHECK_THROWS_AS(GroupSpec::parse("a,a"), DomainError);
  CHECK_THROWS_AS(GroupSpec::parse("a,1b"), DomainError);
}

TEST_CASE("decorated normal forms") {
  auto chords = dv("1*1{g} -1*1{h}", "g,h");
  auto nf = decorated_normal_form(chords);
  REQUIRE(nf.size() == 2);
  CHECK(nf.at({w("g")}) == std::vector<BigInt>{BigInt(1)});
  CHECK(nf.at({w("h")}) == std::vector<BigInt>{BigInt(-1)});

  CHECK(decorated_normal_form(dv("1*[1{a},2{b}] 1*[2{b},1{a}]", "a,b")).empty());
  CHECK_FALSE(decorated_normal_form(dv("1*[1{a},2{b}] 1*[2{a},1{b}]", "a,b")).empty());

  auto plain = std::get<TreeVector>(parse_tree_vector("2*[[1,2],3] 1*[3,[1,2]]"));
  DecoratedTreeVector lifted;
  for (const auto& [tr, c] : plain) lifted.add(DecoratedTree(tr, {{}, {}, {}}), c);
  auto lnf = decorated_normal_form({lifted, GroupSpec({"a"})});
  REQUIRE(lnf.size() == 1);
  CHECK(lnf.begin()->second == to_lyndon_coordinates(plain));

  CHECK_THROWS_AS(decorated_normal_form(dv("1*[1{c},2]", "a,b")), DomainError);
}

TEST_CASE("decorated ranks") {
  auto g = w("g");
  CHECK(decorated_rank(1, {{FreeGroupWord()}, {g}}).free_rank() == 2);
  auto r3 = decorated_rank(3, {{w("a"), w("b"), w("a b")}});
  CHECK(r3.free_rank() == 2);
  CHECK(r3.torsion_free());
  auto r2 = decorated_rank(2, {{w("a"), w("b")}, {w("b"), w("a")}, {w("a"), w("a")}});
  CHECK(r2.free_rank() == 3);
  CHECK_THROWS_AS(decorated_rank(2, {{w("a")}}), DomainError);
  CHECK_THROWS_AS(decorated_rank(2, {{w("a"), w("b")}, {w("a b b^-1"), w("b")}}), DomainError);
}

TEST_CASE("decorated ranks follow the tensor law") {
  std::mt19937 rng(testsupport::kSeed);
  auto random_word = [&] {
    std::vector<Letter> letters;
    std::size_t len = rng() % 3;
    for (std::size_t i = 0; i < len; ++i) letters.push_back({rng() % 2 ? "a" : "b", rng() % 2 ? 1 : -1});
    return FreeGroupWord(letters);
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      std::set<DecorationTuple> tuples;
      std::size_t want = 1 + rng() % 4;
      while (tuples.size() < want) {
        DecorationTuple t;
        for (std::size_t i = 0; i < n; ++i) t.push_back(random_word());
        tuples.insert(t);
      }
      auto r = decorated_rank(n, {tuples.begin(), tuples.end()});
      CHECK(r.free_rank() == factorial(n - 1) * tuples.size());
      CHECK(r.torsion_free());
    }
}

TEST_CASE("decoration tuples from json") {
  auto tuples = parse_decoration_tuples_json(R"([["a", "b^-1"], ["", "a b b^-1"]])");
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0] == DecorationTuple{w("a"), w("b^-1")});
  CHECK(tuples[1] == DecorationTuple{FreeGroupWord(), w("a")});
  CHECK_THROWS(parse_decoration_tuples_json("[1, 2]"));
  CHECK_THROWS(parse_decoration_tuples_json("not json"));
}
