#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lietrees/errors.hpp"
#include "lietrees/trees.hpp"
#include "test_support.hpp"

using namespace lietrees;

namespace {

Tree t(std::string_view s) { return parse_plain_tree(s); }

}  // namespace

TEST_CASE("enumeration counts for small degrees") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(1)[0].to_string() == "1");
  CHECK(enumerate_trees(2).size() == 2);
  CHECK(enumerate_trees(3).size() == 12);
  CHECK(enumerate_trees(4).size() == 120);
}

TEST_CASE("enumeration matches a subset-splitting brute force") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto brute = testsupport::brute_force_trees(testsupport::iota_labels(n));
    std::set<std::string> expected(brute.begin(), brute.end());
    CHECK(expected.size() == brute.size());
    std::set<std::string> got;
    for (const auto& tr : enumerate_trees(n)) got.insert(tr.to_string());
    CHECK(got == expected);
    CHECK(tree_count(n) == expected.size());
  }
}

TEST_CASE("tree_count closed form") {
  std::uint64_t expected[] = {1, 1, 2, 12, 120, 1680, 30240, 665280, 17297280, 518918400};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(tree_count(n) == expected[n]);
}

TEST_CASE("enumeration is strictly increasing in the serialization order") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == tree_count(n));
    for (std::size_t i = 1; i < trees.size(); ++i) {
      CHECK(trees[i - 1] < trees[i]);
      if (n <= 5) CHECK(trees[i - 1].to_string() < trees[i].to_string());
    }
  }
}

TEST_CASE("enumeration rejects degrees outside the cap") {
  CHECK_THROWS_AS(enumerate_trees(0), DomainError);
  CHECK_THROWS_AS(enumerate_trees(9), DomainError);
  CHECK_THROWS_AS(enumerate_trees(10, 10), DomainError);
  try {
    enumerate_trees(9);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find('8') != std::string::npos);
  }
}

TEST_CASE("graft") {
  Tree l1 = Tree::leaf(1), l2 = Tree::leaf(2), l3 = Tree::leaf(3);
  CHECK(graft(l1, l2).to_string() == "[1,2]");
  Tree comb = graft(graft(l1, l2), l3);
  CHECK(comb.to_string() == "[[1,2],3]");
  CHECK(comb.degree() == 3);
  CHECK(comb.left() == graft(l1, l2));
  CHECK(comb.right() == l3);
  CHECK_THROWS_AS(graft(t("[1,2]"), l2), DomainError);
  try {
    graft(t("[1,2]"), l2);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("graft is injective and every tree decomposes uniquely") {
  std::set<std::string> seen;
  auto trees = enumerate_trees(4);
  for (const auto& tr : trees) {
    Tree rebuilt = graft(tr.left(), tr.right());
    CHECK(rebuilt == tr);
    CHECK(seen.insert(tr.left().to_string() + "|" + tr.right().to_string()).second);
  }
}

TEST_CASE("parse round trip") {
  Tree a = t("[[1,2],3]");
  CHECK(a.degree() == 3);
  CHECK(a.left().to_string() == "[1,2]");
  CHECK(a.right().label() == 3);
  CHECK(t(" [ [1 , 2] ,3 ] ").to_string() == "[[1,2],3]");
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& tr : enumerate_trees(n)) CHECK(parse_plain_tree(tr.to_string()) == tr);
}

TEST_CASE("parse decorated trees") {
  auto parsed = parse_tree("[1{a},2{a^-1 b}]");
  REQUIRE(std::holds_alternative<DecoratedTree>(parsed));
  const auto& d = std::get<DecoratedTree>(parsed);
  CHECK(d.tree.to_string() == "[1,2]");
  CHECK(d.decorations[0] == FreeGroupWord::parse("a"));
  CHECK(d.decorations[1] == FreeGroupWord::parse("a^-1 b"));
  auto back = parse_tree(d.to_string());
  REQUIRE(std::holds_alternative<DecoratedTree>(back));
  CHECK(std::get<DecoratedTree>(back) == d);
  auto partial = std::get<DecoratedTree>(parse_tree("[1{a},2]"));
  CHECK(partial.decorations[1].is_identity());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_tree("[1,1]"), ParseError);
  CHECK_THROWS_AS(parse_tree("[1,2"), ParseError);
  CHECK_THROWS_AS(parse_tree("[1,3]"), ParseError);
  CHECK_THROWS_AS(parse_tree("[1,2]]"), ParseError);
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("[1{a a^-1},2]"), ParseError);
  CHECK_THROWS_AS(parse_plain_tree("[1{a},2]"), ParseError);
  try {
    parse_tree("[1,x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("swap_at") {
  CHECK(swap_at(t("[1,2]"), "").to_string() == "[2,1]");
  CHECK(swap_at(t("[[1,2],3]"), "").to_string() == "[3,[1,2]]");
  CHECK(swap_at(t("[[1,2],3]"), "L").to_string() == "[[2,1],3]");
  CHECK_THROWS_AS(swap_at(t("[[1,2],3]"), "R"), DomainError);
  CHECK_THROWS_AS(swap_at(t("[1,2]"), "LL"), DomainError);
  CHECK_THROWS_AS(swap_at(t("[1,2]"), "X"), DomainError);
}

TEST_CASE("swap_at is an involution on every internal vertex") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& tr : enumerate_trees(n)) {
      auto vs = internal_vertices(tr);
      CHECK(vs.size() == n - 1);
      for (const auto& v : vs) CHECK(swap_at(swap_at(tr, v), v) == tr);
    }
}

TEST_CASE("vertex addressing") {
  Tree a = t("[[1,2],[3,4]]");
  CHECK(internal_vertices(a) == std::vector<VertexPath>{"", "L", "R"});
  CHECK(is_internal_vertex(a, "R"));
  CHECK_FALSE(is_internal_vertex(a, "RL"));
  CHECK(subtree_at(a, "RL").label() == 3);
  CHECK(replace_at(a, "L", t("[2,1]")).to_string() == "[[2,1],[3,4]]");
  CHECK_THROWS_AS(subtree_at(a, "LLL"), DomainError);
}

TEST_CASE("json export") {
  CHECK(to_json(t("[1,2]")) == R"({"node":[{"leaf":1},{"leaf":2}]})");
  auto d = std::get<DecoratedTree>(parse_tree("[1{a},2]"));
  CHECK(to_json(d) == R"({"node":[{"dec":"a","leaf":1},{"dec":"","leaf":2}]})");
}

TEST_CASE("random trees round trip through swaps and text") {
  std::mt19937 rng(testsupport::kSeed);
  auto trees = enumerate_trees(6);
  for (int k = 0; k < 500; ++k) {
    const Tree& tr = trees[rng() % trees.size()];
    auto vs = internal_vertices(tr);
    Tree s = swap_at(tr, vs[rng() % vs.size()]);
    CHECK(s.degree() == 6);
    CHECK(s.is_standard());
    CHECK(parse_plain_tree(s.to_string()) == s);
    CHECK(std::binary_search(trees.begin(), trees.end(), s));
  }
}
