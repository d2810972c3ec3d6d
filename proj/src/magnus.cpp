#include "lietrees/magnus.hpp"

#include <algorithm>
#include <charconv>

#include "lietrees/errors.hpp"
#include "lietrees/lie.hpp"

namespace lietrees {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_generator_name(names_[i])) throw DomainError("invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw DomainError("generator '" + names_[i] + "' listed twice");
  }
  if (names_.size() > 255) throw DomainError("at most 255 generators are supported");
}

Alphabet Alphabet::standard(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names));
}

std::optional<unsigned> Alphabet::variable(std::string_view generator) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == generator) return static_cast<unsigned>(i + 1);
  return std::nullopt;
}

FreeGroupWord tree_to_word(const Tree& t) {
  if (t.is_leaf()) return FreeGroupWord::generator("x" + std::to_string(t.label()));
  return commutator(tree_to_word(t.left()), tree_to_word(t.right()));
}

namespace {

// p * X_i, dropping words beyond the truncation.
NcPoly times_letter(const NcPoly& p, unsigned i) {
  NcPoly out(p.alphabet(), p.truncation());
  for (const auto& [w, c] : p.terms()) {
    if (w.size() >= p.truncation()) continue;
    Word x = w;
    x.push_back(static_cast<std::uint8_t>(i));
    out.add(x, c);
  }
  return out;
}

}  // namespace

NcPoly magnus_expand(const FreeGroupWord& w, std::size_t truncation, const Alphabet& alphabet) {
  if (truncation == 0) throw DomainError("Magnus truncation must be at least 1");
  NcPoly p = NcPoly::constant(alphabet.size(), truncation, 1);
  for (const auto& l : w.letters()) {
    auto v = alphabet.variable(l.generator);
    if (!v) throw DomainError("generator '" + l.generator + "' is not in the alphabet");
    if (l.exponent > 0) {
      p += times_letter(p, *v);
    } else {
      NcPoly term = p;
      NcPoly sum = p;
      for (std::size_t k = 1; k <= truncation; ++k) {
        term = times_letter(term, *v);
        term *= BigInt(-1);
        if (term.is_zero()) break;
        sum += term;
      }
      p = std::move(sum);
    }
  }
  return p;
}

NcPoly magnus_expand(const FreeGroupWord& w, std::size_t truncation) {
  std::size_t n = 0;
  for (const auto& l : w.letters()) {
    const std::string& g = l.generator;
    unsigned k = 0;
    auto [ptr, ec] = std::from_chars(g.data() + 1, g.data() + g.size(), k);
    if (g.size() < 2 || g[0] != 'x' || ec != std::errc() || ptr != g.data() + g.size() || k == 0 || g[1] == '0')
      throw DomainError("generator '" + g + "' is not of the form x<k>; pass an alphabet");
    n = std::max<std::size_t>(n, k);
  }
  return magnus_expand(w, truncation, Alphabet::standard(n));
}

NcPoly leading_term(const Tree& t, LeadingTermRoute route) {
  if (route == LeadingTermRoute::Lie) return expand(t);
  std::size_t n = t.degree();
  return magnus_expand(tree_to_word(t), n).homogeneous_part(n);
}

}  // namespace lietrees
