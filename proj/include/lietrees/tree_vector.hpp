#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "lietrees/bigint.hpp"
#include "lietrees/errors.hpp"
#include "lietrees/trees.hpp"

namespace lietrees {

/// Formal Z-linear combination of trees (or decorated trees) of one degree.
/// Zero coefficients are never stored.
template <class Term>
class LinearCombination {
 public:
  using Terms = std::map<Term, BigInt>;

  LinearCombination() = default;
  LinearCombination(const Term& t, const BigInt& c = 1) { add(t, c); }

  void add(const Term& t, const BigInt& c) {
    if (c == 0) return;
    if (!terms_.empty() && terms_.begin()->first.degree() != t.degree())
      throw DomainError("mixed degrees in tree vector: " + std::to_string(degree()) + " and " +
                        std::to_string(t.degree()));
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  LinearCombination& operator*=(const BigInt& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= s;
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const BigInt& s, LinearCombination a) { return a *= s; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// 0 for the zero vector.
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  BigInt coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// "+1*[1,2] -1*[2,1]"; the zero vector prints as "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
      if (!out.empty()) out += ' ';
      out += (c > 0 ? "+" : "") + c.get_str() + "*" + t.to_string();
    }
    return out;
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  Terms terms_;
};

using TreeVector = LinearCombination<Tree>;
using DecoratedTreeVector = LinearCombination<DecoratedTree>;

/// Parses whitespace-separated terms "c*TREE" (c a signed integer, "+" optional).
/// The result is decorated iff some tree carries braces; mixing is an error.
std::variant<TreeVector, DecoratedTreeVector> parse_tree_vector(std::string_view text);

}  // namespace lietrees
