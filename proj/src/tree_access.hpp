#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lietrees/trees.hpp"

namespace lietrees {

/// Unchecked construction for code paths that build valid codes directly.
struct TreeAccess {
  static Tree make(std::vector<std::uint8_t> code) { return Tree(std::move(code)); }
  static const std::vector<std::uint8_t>& code(const Tree& t) { return t.code_; }
};

/// One past the end of the subtree whose code starts at `begin`.
inline std::size_t subtree_end(std::span<const std::uint8_t> code, std::size_t begin) {
  std::size_t need = 1;
  std::size_t i = begin;
  while (need > 0) {
    need = code[i] == 0 ? need + 1 : need - 1;
    ++i;
  }
  return i;
}

}  // namespace lietrees
