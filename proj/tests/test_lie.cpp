#include <algorithm>
#include <random>

#include "doctest.h"
#include "lietrees/errors.hpp"
#include "lietrees/lie.hpp"
#include "test_support.hpp"

using namespace lietrees;

namespace {

NcPoly poly(std::size_t n, std::initializer_list<std::pair<Word, long>> terms) {
  NcPoly p(n, n);
  for (const auto& [w, c] : terms) p.add(w, c);
  return p;
}

Tree t(std::string_view s) { return parse_plain_tree(s); }

bool is_lyndon(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (!(w < rot)) return false;
  }
  return true;
}

NcPoly combination(const std::vector<BigInt>& coords, std::size_t n) {
  NcPoly p(n, n);
  auto basis = lyndon_basis(n);
  for (std::size_t i = 0; i < coords.size(); ++i) p += coords[i] * expand(basis[i].bracketing);
  return p;
}

}  // namespace

TEST_CASE("commutator expansion") {
  CHECK(expand(Tree::leaf(1)) == poly(1, {{{1}, 1}}));
  CHECK(expand(t("[1,2]")) == poly(2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK(expand(t("[[1,2],3]")) ==
        poly(3, {{{1, 2, 3}, 1}, {{2, 1, 3}, -1}, {{3, 1, 2}, -1}, {{3, 2, 1}, 1}}));
  TreeVector v(t("[1,2]"));
  v += TreeVector(t("[2,1]"));
  CHECK(expand(v).is_zero());
}

TEST_CASE("expansions are multilinear with 2^(n-1) words") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& tr : enumerate_trees(n)) {
      auto p = expand(tr);
      CHECK(p.size() == (std::size_t{1} << (n - 1)));
      for (const auto& [w, c] : p.terms()) {
        REQUIRE(w.size() == n);
        Word sorted = w;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i + 1);
        CHECK((c == 1 || c == -1));
      }
    }
}

TEST_CASE("graded expansion") {
  GradedConfig even{2}, odd{1};
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& tr : enumerate_trees(n)) CHECK(expand_graded(tr, even) == expand(tr));
  CHECK(expand_graded(t("[1,2]"), odd) == poly(2, {{{1, 2}, 1}, {{2, 1}, 1}}));
  // |[1,2]| = 2m is even, so the outer bracket is an ordinary commutator.
  CHECK(expand_graded(t("[[1,2],3]"), odd) ==
        poly(3, {{{1, 2, 3}, 1}, {{2, 1, 3}, 1}, {{3, 1, 2}, -1}, {{3, 2, 1}, -1}}));
  CHECK(expansion_span_rank(3, odd) == 2);
}

TEST_CASE("expansion span ranks") {
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    if (n > 1) fact *= n - 1;
    CHECK(expansion_span_rank(n, std::nullopt) == fact);
    if (n <= 5) {
      CHECK(expansion_span_rank(n, GradedConfig{0}) == fact);
      CHECK(expansion_span_rank(n, GradedConfig{1}) == fact);
    }
  }
}

TEST_CASE("lyndon basis") {
  CHECK(lyndon_basis(1).size() == 1);
  auto b2 = lyndon_basis(2);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].word == Word{1, 2});
  auto b3 = lyndon_basis(3);
  REQUIRE(b3.size() == 2);
  CHECK(b3[0].word == Word{1, 2, 3});
  CHECK(b3[1].word == Word{1, 3, 2});
  CHECK(b3[0].bracketing.to_string() == "[1,[2,3]]");
  CHECK(b3[1].bracketing.to_string() == "[[1,3],2]");
  CHECK(lyndon_basis(5).size() == 24);
  CHECK(standard_bracketing(Word{1, 3, 2, 4}).to_string() == "[[1,3],[2,4]]");
}

TEST_CASE("lyndon basis matches a rotation test over all permutations") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Word> expected;
    Word w;
    for (unsigned i = 1; i <= n; ++i) w.push_back(static_cast<std::uint8_t>(i));
    do {
      if (is_lyndon(w)) expected.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    auto basis = lyndon_basis(n);
    REQUIRE(basis.size() == expected.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].word == expected[i]);
      // The standard bracketing has the word itself as its lex-least term.
      auto p = expand(basis[i].bracketing);
      CHECK(p.coefficient(basis[i].word) == 1);
      CHECK(p.terms().begin()->first == basis[i].word);
    }
  }
}

TEST_CASE("lyndon coordinates") {
  auto basis = lyndon_basis(4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto c = to_lyndon_coordinates(TreeVector(basis[i].bracketing));
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? 1 : 0));
  }
  for (const auto& r : as_relations(4).relations)
    for (const auto& c : to_lyndon_coordinates(r.vector())) CHECK(c == 0);
  auto c = to_lyndon_coordinates(TreeVector(t("[3,[1,2]]")));
  CHECK(c == std::vector<BigInt>{BigInt(-1), BigInt(-1)});
  CHECK(combination(c, 3) == expand(t("[3,[1,2]]")));
  CHECK_THROWS_AS(to_lyndon_coordinates(TreeVector(graft(Tree::leaf(1), Tree::leaf(3)))), DomainError);
}

TEST_CASE("lyndon coordinates reconstruct the expansion") {
  std::mt19937 rng(testsupport::kSeed);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto trees = enumerate_trees(n);
    for (int k = 0; k < 40; ++k) {
      TreeVector v;
      for (int i = 0; i < 3; ++i) v.add(trees[rng() % trees.size()], BigInt(static_cast<long>(rng() % 9) - 4));
      if (v.is_zero()) continue;
      CHECK(combination(to_lyndon_coordinates(v), n) == expand(v));
    }
  }
}

TEST_CASE("coordinate maps agree with exact coordinates") {
  for (std::size_t n = 1; n <= 5; ++n) {
    LieCoordinates lyndon(n, LieCoordinates::Basis::Lyndon);
    LieCoordinates comb(n, LieCoordinates::Basis::Comb);
    CHECK(lyndon.dimension() == lyndon_basis(n).size());
    for (const auto& tr : enumerate_trees(n)) {
      auto exact = to_lyndon_coordinates(TreeVector(tr));
      SparseRow expected;
      for (std::size_t j = 0; j < exact.size(); ++j)
        if (exact[j] != 0) expected.emplace_back(j, exact[j]);
      CHECK(lyndon.coordinates(tr) == expected);

      SparseRow words_from_one;
      auto p = expand(tr);
      for (const auto& [w, cf] : p.terms())
        if (w[0] == 1) words_from_one.emplace_back(tail_rank(w), cf);
      std::sort(words_from_one.begin(), words_from_one.end());
      CHECK(comb.coordinates(tr) == words_from_one);
    }
  }
  CHECK_THROWS_AS(LieCoordinates(3, LieCoordinates::Basis::Comb).coordinates(t("[1,2]")), DomainError);
}

TEST_CASE("tail_rank is the lexicographic rank of the tail") {
  CHECK(tail_rank(Word{1, 2, 3, 4}) == 0);
  CHECK(tail_rank(Word{1, 4, 3, 2}) == 5);
  CHECK(tail_rank(Word{1, 3, 2, 4}) == 2);
}
