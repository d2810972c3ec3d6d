#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lietrees/tree_vector.hpp"
#include "lietrees/trees.hpp"

namespace lietrees {

enum class RelationKind { AS, IHX, STU2_ODD, STU2_EVEN };
enum class Parity { Odd, Even };

std::string to_string(RelationKind k);
std::string to_string(Parity p);
Parity parse_parity(std::string_view s);

struct SignedTree {
  int sign;  // +1 or -1
  Tree tree;
};

/// One generator of a relation lattice, kept as its raw signed terms so the
/// template shape (2, 3 or 4 terms) survives coincidences between trees.
struct Relation {
  std::vector<SignedTree> terms;

  TreeVector vector() const;
  /// "+1*TREE -1*TREE ..." in generation order.
  std::string to_string() const;
};

struct RelationSet {
  std::size_t degree = 0;
  RelationKind kind = RelationKind::AS;
  std::vector<Relation> relations;
};

using RelationVisitor = std::function<void(const Relation&)>;

/// AS: one vector  t + swap_at(t, v)  per tree t and internal vertex v.
void for_each_as_relation(std::size_t n, const RelationVisitor& visit);

/// IHX: one vector per tree and internal edge. With the child at the
/// lower end of the edge being internal, the templates are
///   right child:  [A,[B,C]] - [[A,B],C] - [B,[A,C]]
///   left child:   [[B,C],A] - [C,[A,B]] - [[A,C],B]
/// each the Jacobi identity with the I-tree first.
void for_each_ihx_relation(std::size_t n, const RelationVisitor& visit);

/// STU-squared relations, empty for n < 3.
///
/// A tree in Tree(n) is read as a unitrivalent tree attached to a line at
/// n+1 points: the root at point 0 and leaf i at point i; the cyclic order
/// at a trivalent vertex is (parent, left, right). Joining the legs at two
/// adjacent points p, p+1 through a new trivalent vertex v with a leg gives
/// a one-loop diagram T. Each trivalent vertex w on the loop that carries a
/// leg can be resolved: delete w and its leg, attach its two loop edges to
/// the line next to each other, in one order (S_w) or the other (U_w).
/// For every such w other than v:
///   odd:   S_v - U_v - S_w + U_w
///   even:  S_v + U_v - s (S_w + U_w),  s = (-1)^(a + o)
/// where a counts legs strictly between the legs of v and w, and o is 1
/// iff w meets the loop with the same orientation as v (v's cyclic order
/// is (leg, incoming, outgoing) when the loop is traversed leaving v
/// through the edge of the left-hand leg).
/// S_w is the resolution that places the edge following the leg in w's
/// cyclic order on the right.
void for_each_stu2_relation(std::size_t n, Parity parity, const RelationVisitor& visit);

void for_each_relation(RelationKind kind, std::size_t n, const RelationVisitor& visit);

RelationSet as_relations(std::size_t n);
RelationSet ihx_relations(std::size_t n);
RelationSet stu2_relations(std::size_t n, Parity parity);

/// decoration tuple: tuple[i - 1] decorates leaf label i.
using DecorationTuple = std::vector<FreeGroupWord>;

struct DecoratedRelationSet {
  std::size_t degree = 0;
  RelationKind kind = RelationKind::AS;
  std::vector<DecoratedTreeVector> vectors;
};

/// Lifts every relation once per decoration tuple; leaf labels keep their
/// decorations because relations never move labels.
DecoratedRelationSet decorate_relations(const RelationSet& rs,
                                        const std::vector<DecorationTuple>& tuples);

/// One relation per line.
void write_relations(std::ostream& out, const RelationSet& rs);

}  // namespace lietrees
