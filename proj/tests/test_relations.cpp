#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "lietrees/errors.hpp"
#include "lietrees/intlinalg.hpp"
#include "lietrees/lie.hpp"
#include "lietrees/relations.hpp"
#include "test_support.hpp"

using namespace lietrees;

TEST_CASE("AS relations") {
  CHECK(as_relations(1).relations.empty());
  auto rs = as_relations(2);
  REQUIRE(rs.relations.size() == 2);
  CHECK(rs.relations[0].vector() == TreeVector(parse_plain_tree("[1,2]")) + TreeVector(parse_plain_tree("[2,1]")));
  CHECK(as_relations(3).relations.size() == 24);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto set = as_relations(n);
    CHECK(set.relations.size() == tree_count(n) * (n - 1));
    for (const auto& r : set.relations) {
      REQUIRE(r.terms.size() == 2);
      CHECK(r.terms[0].sign == 1);
      CHECK(r.terms[1].sign == 1);
    }
  }
}

TEST_CASE("IHX relations") {
  CHECK(ihx_relations(2).relations.empty());
  auto rs = ihx_relations(3);
  CHECK(rs.relations.size() == 12);
  for (const auto& r : rs.relations) {
    REQUIRE(r.terms.size() == 3);
    CHECK(r.terms[0].sign == 1);
    CHECK(r.terms[1].sign == -1);
    CHECK(r.terms[2].sign == -1);
  }
  TreeVector jacobi = TreeVector(parse_plain_tree("[1,[2,3]]"));
  jacobi -= TreeVector(parse_plain_tree("[[1,2],3]"));
  jacobi -= TreeVector(parse_plain_tree("[2,[1,3]]"));
  bool found = std::any_of(rs.relations.begin(), rs.relations.end(),
                           [&](const Relation& r) { return r.vector() == jacobi; });
  CHECK(found);
}

TEST_CASE("AS and IHX vectors expand to zero") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t count = 0;
    for (auto kind : {RelationKind::AS, RelationKind::IHX})
      for_each_relation(kind, n, [&](const Relation& r) {
        ++count;
        CHECK(expand(r.vector()).is_zero());
      });
    if (n == 5) CHECK(count > 1000);
  }
}

TEST_CASE("AS and IHX span the kernel of the expansion for small n") {
  // Same rank as the kernel and a torsion-free cokernel means the lattice is
  // saturated, hence equal to the kernel.
  for (std::size_t n = 2; n <= 4; ++n) {
    auto basis = tree_basis(n);
    auto snf = cokernel(testsupport::relations_of(n, {RelationKind::AS, RelationKind::IHX}), basis);
    std::size_t kernel_rank = basis.size() - expansion_span_rank(n, std::nullopt);
    CHECK(snf.rank == kernel_rank);
    CHECK(snf.torsion_free());
  }
}

TEST_CASE("STU-squared relations") {
  for (auto p : {Parity::Odd, Parity::Even}) {
    CHECK(stu2_relations(1, p).relations.empty());
    CHECK(stu2_relations(2, p).relations.empty());
    auto rs = stu2_relations(4, p);
    CHECK_FALSE(rs.relations.empty());
    for (const auto& r : rs.relations) {
      REQUIRE(r.terms.size() == 4);
      for (const auto& term : r.terms) {
        CHECK(term.tree.degree() == 4);
        CHECK(term.tree.is_standard());
        CHECK((term.sign == 1 || term.sign == -1));
      }
    }
  }
  auto odd = stu2_relations(3, Parity::Odd);
  for (const auto& r : odd.relations) {
    CHECK(r.terms[0].sign == 1);
    CHECK(r.terms[1].sign == -1);
    CHECK(r.terms[2].sign == -1);
    CHECK(r.terms[3].sign == 1);
  }
  auto even = stu2_relations(3, Parity::Even);
  for (const auto& r : even.relations) {
    CHECK(r.terms[0].sign == 1);
    CHECK(r.terms[1].sign == 1);
    CHECK(r.terms[2].sign == r.terms[3].sign);
  }
}

TEST_CASE("STU-squared quotient ranks at n = 3 and 4") {
  auto basis3 = tree_basis(3);
  auto odd3 = cokernel(testsupport::relations_of(3, {RelationKind::AS, RelationKind::IHX, RelationKind::STU2_ODD}),
                       basis3);
  CHECK(odd3.free_rank() == 1);
  auto basis4 = tree_basis(4);
  auto odd4 = cokernel(testsupport::relations_of(4, {RelationKind::AS, RelationKind::IHX, RelationKind::STU2_ODD}),
                       basis4);
  CHECK(odd4.free_rank() == 2);
  auto even4 = cokernel(
      testsupport::relations_of(4, {RelationKind::AS, RelationKind::IHX, RelationKind::STU2_EVEN}), basis4);
  CHECK(even4.free_rank() == 0);
}

TEST_CASE("relation dump format") {
  std::ostringstream out;
  write_relations(out, as_relations(2));
  CHECK(out.str() == "+1*[1,2] +1*[2,1]\n+1*[2,1] +1*[1,2]\n");
}

TEST_CASE("decorated relations") {
  auto a = FreeGroupWord::parse("a"), b = FreeGroupWord::parse("b");
  auto rs = as_relations(2);
  CHECK(decorate_relations(rs, {}).vectors.empty());
  auto d = decorate_relations(rs, {{a, b}});
  REQUIRE(d.vectors.size() == 2);
  DecoratedTreeVector expected(DecoratedTree(parse_plain_tree("[1,2]"), {a, b}));
  expected += DecoratedTreeVector(DecoratedTree(parse_plain_tree("[2,1]"), {a, b}));
  CHECK(d.vectors[0] == expected);
  CHECK(std::get<DecoratedTreeVector>(parse_tree_vector("1*[1{a},2{b}] 1*[2{b},1{a}]")) == expected);

  auto id = decorate_relations(rs, {{FreeGroupWord(), FreeGroupWord()}});
  for (std::size_t i = 0; i < rs.relations.size(); ++i) {
    TreeVector forgotten;
    for (const auto& [dt, c] : id.vectors[i]) forgotten.add(dt.tree, c);
    CHECK(forgotten == rs.relations[i].vector());
  }
  CHECK_THROWS_AS(decorate_relations(rs, {{a}}), DomainError);
}
