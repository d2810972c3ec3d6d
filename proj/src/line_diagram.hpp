#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "lietrees/trees.hpp"

namespace lietrees {

/// A unitrivalent graph whose univalent vertices (legs) sit at integer
/// positions on a line. Trivalent vertices carry a cyclic order of their
/// three edges.
///
/// from_tree places the root leg at 0 and leaf i at 4i; merged legs land at
/// 4i+2 and resolved legs at p-1, p+1, so positions never collide.
class LineDiagram {
 public:
  static LineDiagram from_tree(const Tree& t);

  /// Joins the legs at positions 4i and 4i+4 through a new trivalent vertex
  /// whose leg sits at 4i+2; its cyclic order is (leg, right edge, left
  /// edge). Returns the new vertex.
  int merge_adjacent(std::size_t i);

  /// Trivalent vertices on the (unique) loop that are adjacent to a leg.
  std::vector<int> loop_vertices_with_legs() const;

  /// (S_w, U_w) for a trivalent vertex w adjacent to a leg: w and its leg
  /// are removed and the other two edges become adjacent legs; S puts the
  /// edge after the leg in w's cyclic order on the right, U on the left.
  std::pair<Tree, Tree> resolve(int w) const;

  /// Reads the diagram as a tree rooted at its leftmost leg, labelling the
  /// other legs by their rank along the line.
  Tree to_tree() const;

  int leg_position(int w) const;
  std::size_t legs_strictly_between(int a, int b) const;

  /// For each loop vertex, the loop edge through which a walk leaving `v`
  /// by its left edge arrives (-1 off the loop).
  std::vector<int> arrival_edges(int v) const;

  /// Index of the leg edge in w's cyclic order.
  int leg_slot(int w) const;
  int cyclic_edge(int w, int slot) const { return vertices_[w].edges[slot % 3]; }

 private:
  struct Vertex {
    bool leg = false;
    bool alive = true;
    int position = 0;                 // legs only
    std::array<int, 3> edges{-1, -1, -1};  // legs use edges[0]
  };

  int add_vertex(bool leg, int position);
  int add_edge(int a, int b);
  int other(int e, int v) const { return ends_[e][0] == v ? ends_[e][1] : ends_[e][0]; }
  void redirect(int e, int from, int to);
  int build(const std::vector<std::uint8_t>& code, std::size_t& p);
  std::vector<bool> loop_mask() const;

  std::vector<Vertex> vertices_;
  std::vector<std::array<int, 2>> ends_;
};

}  // namespace lietrees
