#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lietrees/bigint.hpp"

namespace lietrees {

/// A word in the letters X_1..X_n; letters are stored 1-based.
using Word = std::vector<std::uint8_t>;

/// Length-then-lexicographic order on words.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Noncommutative polynomial over Z in X_1..X_n, truncated above degree N.
///
/// Products drop every word longer than the truncation; sums never exceed
/// it by construction. Zero coefficients are not stored.
class NcPoly {
 public:
  using Terms = std::map<Word, BigInt, WordOrder>;

  NcPoly(std::size_t alphabet, std::size_t truncation)
      : alphabet_(alphabet), truncation_(truncation) {}

  static NcPoly constant(std::size_t alphabet, std::size_t truncation, const BigInt& c);
  static NcPoly letter(std::size_t alphabet, std::size_t truncation, unsigned i);

  std::size_t alphabet() const { return alphabet_; }
  std::size_t truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Throws DomainError if the word is too long or uses a letter > n.
  void add(const Word& w, const BigInt& c);
  BigInt coefficient(const Word& w) const;

  NcPoly homogeneous_part(std::size_t degree) const;
  /// Terms of degree in [lo, hi].
  NcPoly degree_range(std::size_t lo, std::size_t hi) const;

  /// Same terms, new truncation (drops words above it).
  NcPoly truncated(std::size_t truncation) const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const BigInt& s);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const BigInt& s, NcPoly a) { return a *= s; }
  /// Truncated product; the result keeps the smaller truncation.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  /// Equal terms; alphabet and truncation are not compared.
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  /// "+1·X1 X2 -1·X2 X1"; constants print without letters; zero is "0".
  std::string to_string() const;

 private:
  std::size_t alphabet_;
  std::size_t truncation_;
  Terms terms_;
};

}  // namespace lietrees
