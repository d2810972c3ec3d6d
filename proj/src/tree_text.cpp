#include <cctype>
#include <map>
#include <optional>
#include <utility>

#include "lietrees/errors.hpp"
#include "lietrees/tree_vector.hpp"
#include "lietrees/trees.hpp"
#include "tree_access.hpp"

namespace lietrees {

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : s_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= s_.size()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, s_[pos_]) + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  /// Reads an unsigned decimal at the cursor; nullopt if there is none.
  std::optional<unsigned long> number() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (v > 1000000000UL) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return v;
  }

  std::string_view digits_at(std::size_t start) const { return s_.substr(start, pos_ - start); }

  ParsedTree tree() {
    code_.clear();
    decs_.clear();
    braces_ = false;
    std::size_t start = (skip_ws(), pos_);
    node();
    std::size_t n = (code_.size() + 1) / 2;
    for (unsigned l = 1; l <= n; ++l)
      if (!decs_.count(l))
        throw ParseError("leaf labels must be 1.." + std::to_string(n) + "; label " +
                             std::to_string(l) + " is missing",
                         start);
    for (const auto& [l, w] : decs_)
      if (l > n)
        throw ParseError("leaf labels must be 1.." + std::to_string(n) + "; found " + std::to_string(l),
                         label_pos_.at(l));
    Tree t = TreeAccess::make(code_);
    if (!braces_) return t;
    std::vector<FreeGroupWord> words;
    for (unsigned l = 1; l <= n; ++l) words.push_back(decs_.at(l));
    return DecoratedTree(std::move(t), std::move(words));
  }

 private:
  void node() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      code_.push_back(0);
      node();
      expect(',');
      node();
      expect(']');
      return;
    }
    std::size_t at = pos_;
    auto v = number();
    if (!v) fail("expected '[' or a leaf label");
    if (*v < 1 || *v > 255) throw ParseError("leaf label must be in 1..255", at);
    unsigned l = static_cast<unsigned>(*v);
    if (decs_.count(l)) throw ParseError("duplicate leaf label " + std::to_string(l), at);
    label_pos_[l] = at;
    code_.push_back(static_cast<std::uint8_t>(l));
    FreeGroupWord w;
    if (peek() == '{') {
      braces_ = true;
      std::size_t open = pos_++;
      std::size_t close = s_.find('}', pos_);
      if (close == std::string_view::npos) throw ParseError("unterminated '{'", open);
      try {
        w = FreeGroupWord::parse_reduced(s_.substr(pos_, close - pos_));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), pos_ + e.position());
      }
      pos_ = close + 1;
    }
    decs_[l] = std::move(w);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::uint8_t> code_;
  std::map<unsigned, FreeGroupWord> decs_;
  std::map<unsigned, std::size_t> label_pos_;
  bool braces_ = false;
};

}  // namespace

ParsedTree parse_tree(std::string_view text) {
  TreeParser p(text);
  auto t = p.tree();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

Tree parse_plain_tree(std::string_view text) {
  auto t = parse_tree(text);
  if (auto* plain = std::get_if<Tree>(&t)) return *plain;
  throw ParseError("expected an undecorated tree", 0);
}

std::variant<TreeVector, DecoratedTreeVector> parse_tree_vector(std::string_view text) {
  TreeParser p(text);
  TreeVector plain;
  DecoratedTreeVector decorated;
  std::optional<bool> is_decorated;
  bool any = false;
  while (!p.at_end()) {
    std::size_t term_start = p.pos();
    BigInt c = 1;
    char sc = p.peek();
    bool has_sign = sc == '+' || sc == '-';
    if (has_sign) {
      p.expect(sc);
      if (sc == '-') c = -1;
    }
    std::size_t num_start = (p.skip_ws(), p.pos());
    if (auto v = p.number()) {
      c *= BigInt(std::string(p.digits_at(num_start)));
      if (!any && p.at_end() && *v == 0 && !has_sign) return plain;
      p.expect('*');
    }
    any = true;
    auto t = p.tree();
    bool dec = std::holds_alternative<DecoratedTree>(t);
    if (is_decorated && *is_decorated != dec)
      throw ParseError("decorated and undecorated trees mixed in one vector", term_start);
    is_decorated = dec;
    try {
      if (dec)
        decorated.add(std::get<DecoratedTree>(t), c);
      else
        plain.add(std::get<Tree>(t), c);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), term_start);
    }
  }
  if (is_decorated.value_or(false)) return decorated;
  return plain;
}

}  // namespace lietrees
