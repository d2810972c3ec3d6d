#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lietrees/bigint.hpp"
#include "lietrees/free_group.hpp"
#include "lietrees/intlinalg.hpp"
#include "lietrees/relations.hpp"
#include "lietrees/tree_vector.hpp"

namespace lietrees {

/// The free group on a list of distinct generator names.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::string> generators);
  /// Comma separated names, e.g. "a,b".
  static GroupSpec parse(std::string_view text);

  const std::vector<std::string>& generators() const { return generators_; }
  bool contains(const FreeGroupWord& w) const;
  bool operator==(const GroupSpec&) const = default;

 private:
  std::vector<std::string> generators_;
};

struct DecoratedVector {
  DecoratedTreeVector vector;
  GroupSpec group;
};

/// Nonzero Lyndon coordinate vectors keyed by decoration tuple.
using DecoratedCoordinates = std::map<DecorationTuple, std::vector<BigInt>>;

/// Groups v by decoration tuple and takes Lyndon coordinates of each part.
/// The result is empty iff v = 0 in Lie_G(n). Throws DomainError for a word
/// outside the group or a mismatched tuple length.
DecoratedCoordinates decorated_normal_form(const DecoratedVector& v);

/// Z[Tree(n) x tuples] / decorated (AS, IHX). Tuples must be distinct and
/// of length n.
SnfResult decorated_rank(std::size_t n, const std::vector<DecorationTuple>& tuples);

/// Parses a JSON array of tuples, each an array of word strings, e.g.
/// [["a", "b^-1"], ["", "a b"]]. Words are reduced on input.
std::vector<DecorationTuple> parse_decoration_tuples_json(std::string_view json);

std::string to_string(const DecorationTuple& tuple);

}  // namespace lietrees
