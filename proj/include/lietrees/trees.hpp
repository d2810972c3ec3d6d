#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lietrees/free_group.hpp"

namespace lietrees {

/// Default and hard upper bounds on the degree accepted by tree enumeration.
/// |Tree(8)| = 17,297,280; labels beyond 9 would break the serialization order.
inline constexpr std::size_t kDefaultEnumerationCap = 8;
inline constexpr std::size_t kMaxEnumerationCap = 9;

/// Vertex address: a string over {L, R} read from the root. "" is the root.
using VertexPath = std::string;

/// Rooted planar binary tree with distinct positive leaf labels.
///
/// Stored as its preorder code: an internal node is 0, a leaf is its label.
/// Values are immutable; all operations return new trees.
class Tree {
 public:
  static Tree leaf(unsigned label);

  /// Builds from a preorder code; throws DomainError if malformed or if a
  /// label repeats.
  static Tree from_code(std::vector<std::uint8_t> code);

  std::size_t degree() const { return (code_.size() + 1) / 2; }
  bool is_leaf() const { return code_.size() == 1; }
  unsigned label() const;  // leaves only
  Tree left() const;       // internal nodes only
  Tree right() const;      // internal nodes only

  /// Leaf labels in planar (left-to-right) order.
  std::vector<unsigned> labels() const;

  /// True if the labels are exactly {1..degree()}.
  bool is_standard() const;

  std::span<const std::uint8_t> code() const { return code_; }

  /// Canonical bracket form, e.g. "[[1,2],3]".
  std::string to_string() const;

  /// Order of the canonical serialization (leaf digits sort before '[').
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
  friend bool operator==(const Tree&, const Tree&) = default;

  friend Tree graft(const Tree& left, const Tree& right);
  friend struct TreeAccess;

 private:
  explicit Tree(std::vector<std::uint8_t> code) : code_(std::move(code)) {}
  std::vector<std::uint8_t> code_;
};

/// New root with `left` and `right` as its subtrees. Throws DomainError
/// listing the duplicates if the label sets intersect.
Tree graft(const Tree& left, const Tree& right);

/// True if `path` addresses an internal node of `t`.
bool is_internal_vertex(const Tree& t, std::string_view path);

/// Paths of all internal nodes, in preorder.
std::vector<VertexPath> internal_vertices(const Tree& t);

/// Subtree rooted at `path`; throws DomainError if there is no such vertex.
Tree subtree_at(const Tree& t, std::string_view path);

/// Exchanges the two children of the internal node at `path`.
Tree swap_at(const Tree& t, std::string_view path);

/// Replaces the subtree at `path` by `replacement` (labels are not checked
/// against the rest of the tree; callers keep them disjoint).
Tree replace_at(const Tree& t, std::string_view path, const Tree& replacement);

/// |Tree(n)| = (2n-2)!/(n-1)!.
std::uint64_t tree_count(std::size_t n);

/// Streams Tree(n) in increasing canonical order.
void for_each_tree(std::size_t n, const std::function<void(const Tree&)>& visit,
                   std::size_t cap = kDefaultEnumerationCap);

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// A tree whose i-th leaf carries a free-group element.
struct DecoratedTree {
  Tree tree;
  /// decorations[i - 1] decorates leaf label i.
  std::vector<FreeGroupWord> decorations;

  DecoratedTree(Tree t, std::vector<FreeGroupWord> decs);

  std::size_t degree() const { return tree.degree(); }
  std::string to_string() const;

  friend auto operator<=>(const DecoratedTree&, const DecoratedTree&) = default;
};

/// Result of parsing tree text: plain unless some leaf carried braces.
using ParsedTree = std::variant<Tree, DecoratedTree>;

/// Parses the bracket grammar:
///   TREE := LEAF | "[" TREE "," TREE "]";  LEAF := INT ("{" WORD "}")?
/// Labels must be exactly 1..n. Leaves without braces in a decorated tree
/// carry the identity; "{}" is the identity as well.
ParsedTree parse_tree(std::string_view text);

/// parse_tree restricted to undecorated input.
Tree parse_plain_tree(std::string_view text);

std::string to_json(const Tree& t);
std::string to_json(const DecoratedTree& t);

struct TreeHash {
  std::size_t operator()(const Tree& t) const noexcept;
};

}  // namespace lietrees
