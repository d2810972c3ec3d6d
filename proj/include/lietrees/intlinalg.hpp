#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lietrees/bigint.hpp"
#include "lietrees/errors.hpp"
#include "lietrees/tree_vector.hpp"

namespace lietrees {

/// Sparse integer row: (column, value) pairs, strictly increasing columns,
/// no zero values.
using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

/// Builds a SparseRow from unsorted entries, summing repeats and dropping zeros.
SparseRow make_sparse_row(std::vector<std::pair<std::size_t, BigInt>> entries);

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  BigInt value;
};

/// Row-major sparse matrix over Z.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  /// Appends a row; throws DomainError on an out-of-range column.
  void append_row(SparseRow row);
  /// Adds `value` to entry (i, j).
  void add(std::size_t i, std::size_t j, const BigInt& value);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  const SparseRow& row(std::size_t i) const { return rows_.at(i); }
  std::vector<SparseEntry> entries() const;

  static SparseIntMatrix diagonal(std::span<const BigInt> values);

 private:
  std::size_t cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Coordinate text dump: "rows cols nnz" then one "i j value" line per
/// entry, 0-based indices.
void write_matrix(std::ostream& out, const SparseIntMatrix& m);
SparseIntMatrix read_matrix(std::istream& in);

/// Smith normal form summary of a relation matrix M with `cols` columns.
/// The cokernel Z^cols / rowspace(M) is Z^(cols - rank) plus Z/d for the
/// invariant factors d > 1.
struct SnfResult {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... | d_rank, all > 0
  std::size_t rank = 0;
  std::size_t cols = 0;

  std::size_t free_rank() const { return cols - rank; }
  std::vector<BigInt> torsion() const;  // factors > 1
  bool torsion_free() const { return torsion().empty(); }
  /// "Z^3 + Z/2 + Z/4" style; "0" for the trivial group.
  std::string cokernel_string() const;

  friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

/// Fraction-free sparse elimination, pivoting on entries of least magnitude
/// (units first, short rows and columns preferred). Deterministic.
SnfResult smith_normal_form(const SparseIntMatrix& m);

/// Puts a list of nonzero diagonal entries into divisibility-chain order.
std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> diagonal);

/// Row Hermite basis of an integer lattice, built incrementally.
///
/// Rows are kept in echelon form keyed by pivot column with positive
/// pivots. `finalize()` reduces the entries above each pivot into
/// [0, pivot), which makes the basis, and `reduce()`, canonical.
///
/// For up to kSmallCols columns rows are held densely in 64-bit integers;
/// any overflow switches the whole basis to arbitrary precision.
class HermiteBasis {
 public:
  static constexpr std::size_t kSmallCols = 1024;

  explicit HermiteBasis(std::size_t cols);

  /// Adds `row` to the lattice. Returns true if the lattice changed.
  bool insert(const SparseRow& row);

  /// Exact membership test; needs no finalization.
  bool contains(const SparseRow& row) const;

  void finalize();
  bool finalized() const { return finalized_; }

  /// Canonical representative of `row` modulo the lattice (finalizes first).
  SparseRow reduce(const SparseRow& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return small_mode_ ? small_.size() : big_.size(); }
  /// Echelon rows keyed by pivot column.
  std::map<std::size_t, SparseRow> rows() const;
  /// True if every pivot is 1, i.e. the quotient is torsion-free.
  bool unit_pivots() const;
  /// True while the 64-bit representation is in use.
  bool small_mode() const { return small_mode_; }

  SnfResult snf() const;

 private:
  using Dense = std::vector<std::int64_t>;
  void promote();
  bool insert_small(Dense& row, bool& changed);
  bool insert_big(SparseRow row);
  bool finalize_small();

  std::size_t cols_;
  bool small_mode_;
  std::map<std::size_t, Dense> small_;
  std::map<std::size_t, SparseRow> big_;
  bool finalized_ = true;
};

/// Column index for a fixed ordered list of terms.
template <class Term>
class TermBasis {
 public:
  TermBasis() = default;
  explicit TermBasis(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
    if (index_.size() != terms_.size()) throw DomainError("basis contains a repeated term");
  }

  std::size_t size() const { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<Term>& terms() const { return terms_; }

  std::optional<std::size_t> find(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Throws DomainError naming the first term not in the basis.
  SparseRow coordinates(const LinearCombination<Term>& v) const {
    std::vector<std::pair<std::size_t, BigInt>> e;
    e.reserve(v.size());
    for (const auto& [t, c] : v) {
      auto i = find(t);
      if (!i) throw DomainError("vector term " + t.to_string() + " is not in the basis");
      e.emplace_back(*i, c);
    }
    return make_sparse_row(std::move(e));
  }

  LinearCombination<Term> vector(const SparseRow& row) const {
    LinearCombination<Term> v;
    for (const auto& [j, c] : row) v.add(terms_.at(j), c);
    return v;
  }

 private:
  std::vector<Term> terms_;
  std::map<Term, std::size_t> index_;
};

using TreeBasis = TermBasis<Tree>;

/// Basis Tree(n) in enumeration order.
TreeBasis tree_basis(std::size_t n);

template <class V>
using Source = std::function<void(const std::function<void(const V&)>&)>;
using TreeVectorSource = Source<TreeVector>;
using RowSource = Source<SparseRow>;

/// Exact cokernel of a row stream on `cols` columns. Rows are deduplicated;
/// small column counts use an incremental Hermite basis, large ones the
/// sparse Smith elimination.
SnfResult cokernel_of_rows(const RowSource& rows, std::size_t cols);

/// Z[basis] / <relations>.
SnfResult cokernel(const TreeVectorSource& relations, const TreeBasis& basis);

/// Defaults: two distinct 31-bit primes.
inline constexpr std::uint32_t kDefaultPrimes[2] = {2147483647u, 2147483629u};

struct ModularRank {
  std::vector<std::pair<std::uint32_t, std::size_t>> per_prime;
  bool agree = false;
  /// Set when all primes agree; the rank over Q with high probability.
  std::optional<std::size_t> probable_rank;
  /// Always true: the value is not a certificate.
  bool probabilistic = true;
};

/// Incremental rank of a row stream modulo a prime p > 2.
class ModularRankAccumulator {
 public:
  ModularRankAccumulator(std::size_t cols, std::uint32_t prime);
  ModularRankAccumulator(ModularRankAccumulator&&) noexcept;
  ModularRankAccumulator& operator=(ModularRankAccumulator&&) noexcept;
  ~ModularRankAccumulator();

  /// Adds a row given as (column, residue-or-integer) pairs.
  void add(std::span<const std::pair<std::size_t, std::int64_t>> row);
  void add(const SparseRow& row);
  std::size_t rank() const;
  std::size_t cols() const;
  std::uint32_t prime() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

ModularRank rank_modp(const RowSource& rows, std::size_t cols,
                      std::span<const std::uint32_t> primes);

ModularRank rank_modp(const TreeVectorSource& relations, const TreeBasis& basis,
                      std::span<const std::uint32_t> primes);

/// Canonical representative of v modulo the relation lattice, expressed in
/// the same basis. Zero iff v lies in the lattice.
TreeVector normal_form(const TreeVector& v, const TreeVectorSource& relations,
                       const TreeBasis& basis);

/// Reusable form of normal_form for many vectors against one lattice.
template <class Term>
class LatticeReducer {
 public:
  LatticeReducer(TermBasis<Term> basis, const Source<LinearCombination<Term>>& relations)
      : basis_(std::move(basis)), hermite_(basis_.size()) {
    relations([&](const LinearCombination<Term>& r) { hermite_.insert(basis_.coordinates(r)); });
    hermite_.finalize();
  }

  LinearCombination<Term> normal_form(const LinearCombination<Term>& v) {
    return basis_.vector(hermite_.reduce(basis_.coordinates(v)));
  }

  const TermBasis<Term>& basis() const { return basis_; }
  const HermiteBasis& lattice() const { return hermite_; }

 private:
  TermBasis<Term> basis_;
  HermiteBasis hermite_;
};

}  // namespace lietrees
