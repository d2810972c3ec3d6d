#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lietrees/bigint.hpp"
#include "lietrees/intlinalg.hpp"
#include "lietrees/nc_poly.hpp"
#include "lietrees/tree_vector.hpp"
#include "lietrees/trees.hpp"

namespace lietrees {

/// Degree m carried by every generator of the graded free Lie algebra.
/// Only its parity enters the Koszul signs.
struct GradedConfig {
  unsigned generator_degree = 0;
  bool odd() const { return generator_degree % 2 == 1; }
};

/// Commutator expansion: leaf i -> X_i, [a,b] -> ab - ba. Truncation = degree.
NcPoly expand(const Tree& t);
NcPoly expand(const TreeVector& v);

/// Graded commutator: [a,b] -> ab - (-1)^(|a||b|) ba with |a| = m * leaves(a).
NcPoly expand_graded(const Tree& t, GradedConfig cfg);
NcPoly expand_graded(const TreeVector& v, GradedConfig cfg);

/// Visits the 2^(n-1) words of expand(t) with their coefficients (+-1),
/// without building an NcPoly. `graded` selects odd generator degree.
void for_each_expansion_word(const Tree& t, bool graded,
                             const std::function<void(std::span<const std::uint8_t>, int)>& visit);

struct LyndonElement {
  Word word;
  Tree bracketing;  // standard bracketing
};

/// Multilinear Lyndon words on 1..n (exactly the words starting with 1),
/// increasing, with standard bracketings. (n-1)! elements.
std::vector<LyndonElement> lyndon_basis(std::size_t n);

/// Standard bracketing of a Lyndon word with distinct letters.
Tree standard_bracketing(const Word& lyndon_word);

/// Exact coordinates of an undecorated vector of degree n in lyndon_basis(n).
std::vector<BigInt> to_lyndon_coordinates(const TreeVector& v);

/// Rank of a permutation of {2..n} (the tail of a word starting with 1)
/// in lexicographic order; the common index of both Lie bases below.
std::size_t tail_rank(std::span<const std::uint8_t> word);

/// Precomputed coordinate map Tree(n) -> Z^((n-1)!).
///
/// Lyndon: coordinates in lyndon_basis(n). Comb: coordinates in the
/// left-normed combs [..[[x1,x_a],x_b]..], which are just the coefficients
/// of the words beginning with 1. The two bases differ by a unitriangular
/// change of basis, so cokernels agree.
class LieCoordinates {
 public:
  enum class Basis { Lyndon, Comb };

  LieCoordinates(std::size_t n, Basis basis);

  std::size_t degree() const { return n_; }
  std::size_t dimension() const { return dim_; }
  Basis basis() const { return basis_; }

  /// Sparse coordinates (machine-word arithmetic, promoted to exact
  /// arithmetic on overflow).
  SparseRow coordinates(const Tree& t) const;
  void accumulate(const Tree& t, std::int64_t scale,
                  std::vector<std::pair<std::size_t, std::int64_t>>& out) const;

 private:
  std::vector<std::int64_t> comb_coordinates(const Tree& t) const;

  std::size_t n_;
  std::size_t dim_;
  Basis basis_;
  // columns_[j]: (i, A[i][j]) for i > j, A = comb coordinates of Lyndon element j
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns_;
};

/// Rank of span{expand(t) : t in Tree(n)} (or expand_graded), modulo `prime`.
std::size_t expansion_span_rank(std::size_t n, std::optional<GradedConfig> graded,
                                std::uint32_t prime = kDefaultPrimes[0]);

}  // namespace lietrees
