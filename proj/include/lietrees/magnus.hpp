#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lietrees/free_group.hpp"
#include "lietrees/nc_poly.hpp"
#include "lietrees/trees.hpp"

namespace lietrees {

/// Ordered generator names; generator k (0-based) maps to variable X_{k+1}.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);
  /// x1, ..., xn.
  static Alphabet standard(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<unsigned> variable(std::string_view generator) const;

 private:
  std::vector<std::string> names_;
};

/// leaf i -> x_i; [a,b] -> W_a W_b W_a^-1 W_b^-1 (freely reduced).
FreeGroupWord tree_to_word(const Tree& t);

/// Magnus expansion x -> 1 + X, x^-1 -> 1 - X + X^2 - ..., truncated at N.
/// Throws DomainError for a generator outside the alphabet or N = 0.
NcPoly magnus_expand(const FreeGroupWord& w, std::size_t truncation, const Alphabet& alphabet);

/// Uses the standard alphabet x1..xk, k the largest index among the word's
/// generators (which must all be named x<k>).
NcPoly magnus_expand(const FreeGroupWord& w, std::size_t truncation);

enum class LeadingTermRoute { Word, Lie };

/// Word: degree-n part of magnus_expand(tree_to_word(t), n). Lie: expand(t).
NcPoly leading_term(const Tree& t, LeadingTermRoute route);

}  // namespace lietrees
