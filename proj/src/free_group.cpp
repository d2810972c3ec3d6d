#include "lietrees/free_group.hpp"

#include <cctype>
#include <charconv>

#include "lietrees/errors.hpp"

namespace lietrees {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
    out.pop_back();
  else
    out.push_back(std::move(l));
}

struct Token {
  std::string generator;
  long power;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    std::size_t start = i;
    if (!(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      throw ParseError("expected generator name", i);
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    Token tok{std::string(text.substr(start, i - start)), 1, start};
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t num = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (digits == i) throw ParseError("expected exponent", num);
      std::string_view s = text.substr(digits, i - digits);
      long v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || v > 1000000) throw ParseError("exponent out of range", digits);
      tok.power = text[num] == '-' ? -v : v;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    out.push_back(std::move(tok));
    skip();
  }
  return out;
}

}  // namespace

bool is_generator_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

FreeGroupWord::FreeGroupWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("letter exponent must be +1 or -1");
    if (!is_generator_name(l.generator)) throw DomainError("invalid generator name '" + l.generator + "'");
    push_reduced(letters_, std::move(l));
  }
}

FreeGroupWord FreeGroupWord::generator(std::string name, int power) {
  if (!is_generator_name(name)) throw DomainError("invalid generator name '" + name + "'");
  std::vector<Letter> ls;
  int e = power < 0 ? -1 : 1;
  for (int k = 0; k < (power < 0 ? -power : power); ++k) ls.push_back({name, e});
  return FreeGroupWord(std::move(ls));
}

FreeGroupWord FreeGroupWord::parse(std::string_view text) {
  std::vector<Letter> ls;
  for (auto& tok : tokenize(text)) {
    int e = tok.power < 0 ? -1 : 1;
    for (long k = 0; k < (tok.power < 0 ? -tok.power : tok.power); ++k) ls.push_back({tok.generator, e});
  }
  return FreeGroupWord(std::move(ls));
}

FreeGroupWord FreeGroupWord::parse_reduced(std::string_view text) {
  auto toks = tokenize(text);
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (toks[k].power == 0) throw ParseError("word is not reduced (zero exponent)", toks[k].position);
    if (k > 0 && toks[k].generator == toks[k - 1].generator &&
        (toks[k].power < 0) != (toks[k - 1].power < 0))
      throw ParseError("word is not reduced (" + toks[k - 1].generator + " cancels)", toks[k].position);
  }
  return parse(text);
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  for (auto& l : w.letters_) l.exponent = -l.exponent;
  return w;
}

std::map<std::string, int> FreeGroupWord::exponent_sums() const {
  std::map<std::string, int> sums;
  for (const auto& l : letters_) sums[l.generator] += l.exponent;
  return sums;
}

std::string FreeGroupWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    long power = static_cast<long>(j - i) * letters_[i].exponent;
    if (!out.empty()) out += ' ';
    out += letters_[i].generator;
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b) {
  FreeGroupWord w = a;
  for (const auto& l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

FreeGroupWord commutator(const FreeGroupWord& a, const FreeGroupWord& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace lietrees
