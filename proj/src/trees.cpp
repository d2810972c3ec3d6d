#include "lietrees/trees.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <string_view>

#include "json.hpp"
#include "lietrees/errors.hpp"
#include "tree_access.hpp"

namespace lietrees {

namespace {

// Internal nodes sort after every label, matching the serialization order
// for single-digit labels.
inline unsigned order_key(std::uint8_t c) { return c == 0 ? 256u : c; }

std::size_t locate(const std::vector<std::uint8_t>& code, std::string_view path) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (code[pos] != 0)
      throw DomainError("vertex path '" + std::string(path) + "' passes through a leaf");
    if (path[k] == 'L')
      pos = pos + 1;
    else if (path[k] == 'R')
      pos = subtree_end(code, pos + 1);
    else
      throw DomainError("vertex path '" + std::string(path) + "' contains a character other than L/R");
  }
  return pos;
}

void collect_internal(const std::vector<std::uint8_t>& code, std::size_t pos, std::string& path,
                      std::vector<VertexPath>& out) {
  if (code[pos] != 0) return;
  out.push_back(path);
  path.push_back('L');
  collect_internal(code, pos + 1, path, out);
  path.back() = 'R';
  collect_internal(code, subtree_end(code, pos + 1), path, out);
  path.pop_back();
}

void serialize(const std::vector<std::uint8_t>& code, std::size_t& pos, std::string& out) {
  if (code[pos] != 0) {
    out += std::to_string(code[pos++]);
    return;
  }
  ++pos;
  out += '[';
  serialize(code, pos, out);
  out += ',';
  serialize(code, pos, out);
  out += ']';
}

}  // namespace

Tree Tree::leaf(unsigned label) {
  if (label < 1 || label > 255) throw DomainError("leaf label must be in 1..255");
  return Tree({static_cast<std::uint8_t>(label)});
}

Tree Tree::from_code(std::vector<std::uint8_t> code) {
  if (code.empty()) throw DomainError("empty tree code");
  std::size_t need = 1;
  std::bitset<256> seen;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (need == 0) throw DomainError("tree code has trailing entries");
    if (code[i] == 0) {
      ++need;
    } else {
      if (seen[code[i]]) throw DomainError("duplicate leaf label " + std::to_string(code[i]));
      seen[code[i]] = true;
      --need;
    }
  }
  if (need != 0) throw DomainError("tree code is incomplete");
  return Tree(std::move(code));
}

unsigned Tree::label() const {
  if (!is_leaf()) throw DomainError("label() of an internal node");
  return code_[0];
}

Tree Tree::left() const {
  if (is_leaf()) throw DomainError("left() of a leaf");
  std::size_t e = subtree_end(code_, 1);
  return Tree(std::vector<std::uint8_t>(code_.begin() + 1, code_.begin() + e));
}

Tree Tree::right() const {
  if (is_leaf()) throw DomainError("right() of a leaf");
  std::size_t e = subtree_end(code_, 1);
  return Tree(std::vector<std::uint8_t>(code_.begin() + e, code_.end()));
}

std::vector<unsigned> Tree::labels() const {
  std::vector<unsigned> out;
  for (auto c : code_)
    if (c != 0) out.push_back(c);
  return out;
}

bool Tree::is_standard() const {
  auto ls = labels();
  std::sort(ls.begin(), ls.end());
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] != i + 1) return false;
  return true;
}

std::string Tree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  serialize(code_, pos, out);
  return out;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  std::size_t n = std::min(a.code_.size(), b.code_.size());
  for (std::size_t i = 0; i < n; ++i) {
    unsigned x = order_key(a.code_[i]);
    unsigned y = order_key(b.code_[i]);
    if (x != y) return x <=> y;
  }
  return a.code_.size() <=> b.code_.size();
}

Tree graft(const Tree& left, const Tree& right) {
  std::bitset<256> seen;
  for (auto c : left.code_)
    if (c != 0) seen[c] = true;
  std::string dups;
  for (auto c : right.code_)
    if (c != 0 && seen[c]) dups += (dups.empty() ? "" : ", ") + std::to_string(c);
  if (!dups.empty()) throw DomainError("graft of trees sharing leaf labels: " + dups);
  std::vector<std::uint8_t> code;
  code.reserve(left.code_.size() + right.code_.size() + 1);
  code.push_back(0);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return Tree(std::move(code));
}

bool is_internal_vertex(const Tree& t, std::string_view path) {
  const auto& code = TreeAccess::code(t);
  std::size_t pos = 0;
  for (char c : path) {
    if (code[pos] != 0) return false;
    if (c == 'L')
      pos = pos + 1;
    else if (c == 'R')
      pos = subtree_end(code, pos + 1);
    else
      return false;
  }
  return code[pos] == 0;
}

std::vector<VertexPath> internal_vertices(const Tree& t) {
  std::vector<VertexPath> out;
  std::string path;
  collect_internal(TreeAccess::code(t), 0, path, out);
  return out;
}

Tree subtree_at(const Tree& t, std::string_view path) {
  const auto& code = TreeAccess::code(t);
  std::size_t b = locate(code, path);
  std::size_t e = subtree_end(code, b);
  return TreeAccess::make(std::vector<std::uint8_t>(code.begin() + b, code.begin() + e));
}

Tree swap_at(const Tree& t, std::string_view path) {
  if (!is_internal_vertex(t, path))
    throw DomainError("'" + std::string(path) + "' is not an internal vertex of " + t.to_string());
  const auto& code = TreeAccess::code(t);
  std::size_t b = locate(code, path);
  std::size_t m = subtree_end(code, b + 1);
  std::size_t e = subtree_end(code, m);
  std::vector<std::uint8_t> out(code.begin(), code.begin() + b + 1);
  out.insert(out.end(), code.begin() + m, code.begin() + e);
  out.insert(out.end(), code.begin() + b + 1, code.begin() + m);
  out.insert(out.end(), code.begin() + e, code.end());
  return TreeAccess::make(std::move(out));
}

Tree replace_at(const Tree& t, std::string_view path, const Tree& replacement) {
  const auto& code = TreeAccess::code(t);
  std::size_t b = locate(code, path);
  std::size_t e = subtree_end(code, b);
  std::vector<std::uint8_t> out(code.begin(), code.begin() + b);
  const auto& r = TreeAccess::code(replacement);
  out.insert(out.end(), r.begin(), r.end());
  out.insert(out.end(), code.begin() + e, code.end());
  return Tree::from_code(std::move(out));
}

std::uint64_t tree_count(std::size_t n) {
  if (n == 0) return 0;
  std::uint64_t r = 1;
  for (std::size_t k = n; k <= 2 * n - 2; ++k) r *= k;
  return r;
}

namespace {

struct Enumerator {
  std::size_t n;
  const std::function<void(const Tree&)>& visit;
  std::vector<std::uint8_t> code;
  std::vector<bool> used;

  // slots: subtrees still to be written; remaining: labels not yet placed.
  void run(std::size_t slots, std::size_t remaining) {
    if (slots == 0) {
      visit(TreeAccess::make(code));
      return;
    }
    if (remaining >= slots && (slots > 1 || remaining == 1)) {
      for (std::size_t l = 1; l <= n; ++l) {
        if (used[l]) continue;
        used[l] = true;
        code.push_back(static_cast<std::uint8_t>(l));
        run(slots - 1, remaining - 1);
        code.pop_back();
        used[l] = false;
      }
    }
    if (remaining >= slots + 1) {
      code.push_back(0);
      run(slots + 1, remaining);
      code.pop_back();
    }
  }
};

}  // namespace

void for_each_tree(std::size_t n, const std::function<void(const Tree&)>& visit, std::size_t cap) {
  cap = std::min(cap, kMaxEnumerationCap);
  if (n == 0 || n > cap)
    throw DomainError("tree degree must be in 1.." + std::to_string(cap) + " (enumeration cap " +
                      std::to_string(cap) + "), got " + std::to_string(n));
  Enumerator e{n, visit, {}, std::vector<bool>(n + 1, false)};
  e.code.reserve(2 * n - 1);
  e.run(1, n);
}

std::vector<Tree> enumerate_trees(std::size_t n, std::size_t cap) {
  std::vector<Tree> out;
  if (n >= 1 && n <= std::min(cap, kMaxEnumerationCap)) out.reserve(tree_count(n));
  for_each_tree(n, [&](const Tree& t) { out.push_back(t); }, cap);
  return out;
}

DecoratedTree::DecoratedTree(Tree t, std::vector<FreeGroupWord> decs)
    : tree(std::move(t)), decorations(std::move(decs)) {
  if (!tree.is_standard()) throw DomainError("decorated tree labels must be 1..n: " + tree.to_string());
  if (decorations.size() != tree.degree())
    throw DomainError("decorated tree of degree " + std::to_string(tree.degree()) + " has " +
                      std::to_string(decorations.size()) + " decorations");
}

std::string DecoratedTree::to_string() const {
  std::string out;
  const auto& code = TreeAccess::code(tree);
  std::function<void(std::size_t&)> rec = [&](std::size_t& pos) {
    if (code[pos] != 0) {
      out += std::to_string(code[pos]) + "{" + decorations[code[pos] - 1].to_string() + "}";
      ++pos;
      return;
    }
    ++pos;
    out += '[';
    rec(pos);
    out += ',';
    rec(pos);
    out += ']';
  };
  std::size_t pos = 0;
  rec(pos);
  return out;
}

namespace {

nlohmann::json json_of(const std::vector<std::uint8_t>& code, std::size_t& pos,
                       const std::vector<FreeGroupWord>* decs) {
  if (code[pos] != 0) {
    nlohmann::json j{{"leaf", code[pos]}};
    if (decs) j["dec"] = (*decs)[code[pos] - 1].to_string();
    ++pos;
    return j;
  }
  ++pos;
  auto l = json_of(code, pos, decs);
  auto r = json_of(code, pos, decs);
  return nlohmann::json{{"node", nlohmann::json::array({l, r})}};
}

}  // namespace

std::string to_json(const Tree& t) {
  std::size_t pos = 0;
  return json_of(TreeAccess::code(t), pos, nullptr).dump();
}

std::string to_json(const DecoratedTree& t) {
  std::size_t pos = 0;
  return json_of(TreeAccess::code(t.tree), pos, &t.decorations).dump();
}

std::size_t TreeHash::operator()(const Tree& t) const noexcept {
  const auto& code = TreeAccess::code(t);
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(code.data()), code.size()));
}

}  // namespace lietrees
