#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lietrees {

/// One letter g^{+1} or g^{-1} of a free-group word.
struct Letter {
  std::string generator;
  int exponent = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in the free group on named generators.
///
/// Reduction is eager: every constructor and operation returns a reduced
/// word, so two words are equal as group elements iff they compare equal.
/// The empty word is the identity.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;

  /// Reduces `letters`; exponents must be +1 or -1.
  explicit FreeGroupWord(std::vector<Letter> letters);

  static FreeGroupWord generator(std::string name, int power = 1);

  /// Parses "x1 x2 x1^-1" (whitespace separated, optional signed exponent).
  /// The result is reduced. An empty or all-blank string is the identity.
  static FreeGroupWord parse(std::string_view text);

  /// As parse, but rejects text whose spelling is not already reduced.
  static FreeGroupWord parse_reduced(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FreeGroupWord inverse() const;

  /// Sum of exponents per generator; generators with sum 0 are included.
  std::map<std::string, int> exponent_sums() const;

  /// Canonical text with runs collapsed: "a^2 b^-1". Identity prints as "".
  std::string to_string() const;

  friend FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b);
  friend auto operator<=>(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// The group commutator [a,b] = a b a^-1 b^-1.
FreeGroupWord commutator(const FreeGroupWord& a, const FreeGroupWord& b);

/// True if `name` is a valid generator identifier ([A-Za-z_][A-Za-z0-9_]*).
bool is_generator_name(std::string_view name);

}  // namespace lietrees
