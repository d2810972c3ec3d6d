#include "lietrees/lie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lietrees/errors.hpp"
#include "tree_access.hpp"

namespace lietrees {

namespace {

using Terms = std::vector<std::pair<Word, int>>;

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// Expansion of the subtree starting at code[pos]; advances pos.
Terms expansion(const std::vector<std::uint8_t>& code, std::size_t& pos, bool graded, std::size_t& leaves) {
  if (code[pos] != 0) {
    leaves = 1;
    return {{Word{code[pos++]}, 1}};
  }
  ++pos;
  std::size_t la = 0, lb = 0;
  Terms a = expansion(code, pos, graded, la);
  Terms b = expansion(code, pos, graded, lb);
  leaves = la + lb;
  int swap_sign = (graded && (la * lb) % 2 == 1) ? 1 : -1;
  Terms out;
  out.reserve(2 * a.size() * b.size());
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(std::move(w), ca * cb);
      w = wb;
      w.insert(w.end(), wa.begin(), wa.end());
      out.emplace_back(std::move(w), swap_sign * ca * cb);
    }
  return out;
}

// Packed words: 4 bits per letter, first letter most significant.
struct Packed {
  std::uint64_t word;
  std::int64_t coeff;
};

// Appends the expansion of the subtree at code[pos] to buf; returns its start.
std::size_t packed_expansion(const std::vector<std::uint8_t>& code, std::size_t& pos, std::vector<Packed>& buf,
                             unsigned& leaves) {
  if (code[pos] != 0) {
    buf.push_back({code[pos++], 1});
    leaves = 1;
    return buf.size() - 1;
  }
  ++pos;
  unsigned la = 0, lb = 0;
  std::size_t a0 = packed_expansion(code, pos, buf, la);
  std::size_t b0 = packed_expansion(code, pos, buf, lb);
  std::size_t na = b0 - a0, nb = buf.size() - b0;
  std::size_t out0 = buf.size();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Packed a = buf[a0 + i], b = buf[b0 + j];
      buf.push_back({(a.word << (4 * lb)) | b.word, a.coeff * b.coeff});
      buf.push_back({(b.word << (4 * la)) | a.word, -a.coeff * b.coeff});
    }
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(out0), buf.end(), buf.begin() + static_cast<std::ptrdiff_t>(a0));
  buf.resize(a0 + (buf.size() - out0));
  leaves = la + lb;
  return a0;
}

// As packed_expansion, keeping only words that begin with letter 1 (the
// subtree must contain leaf 1).
std::size_t packed_from_one(const std::vector<std::uint8_t>& code, std::size_t& pos, std::vector<Packed>& buf,
                            unsigned& leaves) {
  if (code[pos] != 0) {
    buf.push_back({code[pos++], 1});
    leaves = 1;
    return buf.size() - 1;
  }
  std::size_t start = pos + 1;
  std::size_t mid = subtree_end(code, start);
  bool left_has_one = std::find(code.begin() + static_cast<std::ptrdiff_t>(start),
                                code.begin() + static_cast<std::ptrdiff_t>(mid), 1) !=
                      code.begin() + static_cast<std::ptrdiff_t>(mid);
  pos = start;
  unsigned la = 0, lb = 0;
  std::size_t a0 = left_has_one ? packed_from_one(code, pos, buf, la) : packed_expansion(code, pos, buf, la);
  std::size_t b0 = left_has_one ? packed_expansion(code, pos, buf, lb) : packed_from_one(code, pos, buf, lb);
  std::size_t na = b0 - a0, nb = buf.size() - b0;
  std::size_t out0 = buf.size();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Packed a = buf[a0 + i], b = buf[b0 + j];
      if (left_has_one)
        buf.push_back({(a.word << (4 * lb)) | b.word, a.coeff * b.coeff});
      else
        buf.push_back({(b.word << (4 * la)) | a.word, -a.coeff * b.coeff});
    }
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(out0), buf.end(), buf.begin() + static_cast<std::ptrdiff_t>(a0));
  buf.resize(a0 + (buf.size() - out0));
  leaves = la + lb;
  return a0;
}

// Lexicographic rank of the tail of a packed multilinear word of length n.
std::size_t packed_tail_rank(std::uint64_t w, std::size_t n) {
  unsigned unused = 0;
  for (std::size_t k = 1; k < n; ++k) unused |= 1u << ((w >> (4 * (n - 1 - k))) & 15u);
  std::size_t rank = 0;
  for (std::size_t k = 1; k < n; ++k) {
    unsigned letter = (w >> (4 * (n - 1 - k))) & 15u;
    rank = rank * (n - k) + static_cast<std::size_t>(__builtin_popcount(unused & ((1u << letter) - 1)));
    unused &= ~(1u << letter);
  }
  return rank;
}

std::size_t max_label(const Tree& t) {
  auto ls = t.labels();
  return *std::max_element(ls.begin(), ls.end());
}

void require_standard(const Tree& t) {
  if (!t.is_standard()) throw DomainError("tree labels must be exactly 1..n: " + t.to_string());
}

// Lexicographic rank of a permutation given as distinct letters.
std::size_t permutation_rank(std::span<const std::uint8_t> w) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++smaller;
    rank = rank * (w.size() - i) + smaller;
  }
  return rank;
}

}  // namespace

void for_each_expansion_word(const Tree& t, bool graded,
                             const std::function<void(std::span<const std::uint8_t>, int)>& visit) {
  std::size_t pos = 0, leaves = 0;
  for (const auto& [w, c] : expansion(TreeAccess::code(t), pos, graded, leaves)) visit(w, c);
}

NcPoly expand(const Tree& t) { return expand_graded(t, GradedConfig{0}); }

NcPoly expand_graded(const Tree& t, GradedConfig cfg) {
  NcPoly p(max_label(t), t.degree());
  for_each_expansion_word(t, cfg.odd(), [&](std::span<const std::uint8_t> w, int c) {
    p.add(Word(w.begin(), w.end()), c);
  });
  return p;
}

NcPoly expand(const TreeVector& v) { return expand_graded(v, GradedConfig{0}); }

NcPoly expand_graded(const TreeVector& v, GradedConfig cfg) {
  std::size_t alphabet = 0;
  for (const auto& [t, c] : v) alphabet = std::max(alphabet, max_label(t));
  NcPoly p(alphabet, v.degree());
  for (const auto& [t, c] : v)
    for_each_expansion_word(t, cfg.odd(), [&](std::span<const std::uint8_t> w, int s) {
      p.add(Word(w.begin(), w.end()), c * s);
    });
  return p;
}

Tree standard_bracketing(const Word& w) {
  if (w.empty()) throw DomainError("empty word has no bracketing");
  if (w.size() == 1) return Tree::leaf(w[0]);
  // For distinct letters a suffix is Lyndon iff it starts with its minimum.
  std::size_t split = w.size() - 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (*std::min_element(w.begin() + i, w.end()) == w[i]) {
      split = i;
      break;
    }
  return graft(standard_bracketing(Word(w.begin(), w.begin() + split)),
               standard_bracketing(Word(w.begin() + split, w.end())));
}

std::vector<LyndonElement> lyndon_basis(std::size_t n) {
  if (n == 0) throw DomainError("lyndon_basis needs n >= 1");
  if (n > kMaxEnumerationCap) throw DomainError("lyndon_basis supports n <= " + std::to_string(kMaxEnumerationCap));
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<LyndonElement> out;
  do {
    out.push_back({w, standard_bracketing(w)});
  } while (std::next_permutation(w.begin() + 1, w.end()));
  return out;
}

std::size_t tail_rank(std::span<const std::uint8_t> word) { return permutation_rank(word.subspan(1)); }

LieCoordinates::LieCoordinates(std::size_t n, Basis basis) : n_(n), dim_(factorial(n - 1)), basis_(basis) {
  if (n == 0 || n > kMaxEnumerationCap) throw DomainError("LieCoordinates supports 1 <= n <= 9");
  if (basis_ == Basis::Comb) return;
  columns_.resize(dim_);
  auto elements = lyndon_basis(n);
  for (std::size_t j = 0; j < dim_; ++j) {
    auto x = comb_coordinates(elements[j].bracketing);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i < j && x[i] != 0) throw std::logic_error("Lyndon change of basis is not triangular");
      if (i == j && x[i] != 1) throw std::logic_error("Lyndon change of basis is not unitriangular");
      if (i > j && x[i] != 0) columns_[j].emplace_back(static_cast<std::uint32_t>(i), x[i]);
    }
  }
}

std::vector<std::int64_t> LieCoordinates::comb_coordinates(const Tree& t) const {
  if (t.degree() != n_) throw DomainError("tree degree does not match the coordinate map");
  std::vector<std::int64_t> x(dim_, 0);
  thread_local std::vector<Packed> buf;
  buf.clear();
  std::size_t pos = 0;
  unsigned leaves = 0;
  packed_from_one(TreeAccess::code(t), pos, buf, leaves);
  for (const auto& p : buf) x[packed_tail_rank(p.word, n_)] += p.coeff;
  return x;
}

void LieCoordinates::accumulate(const Tree& t, std::int64_t scale,
                                std::vector<std::pair<std::size_t, std::int64_t>>& out) const {
  if (t.degree() != n_) throw DomainError("tree degree does not match the coordinate map");
  thread_local std::vector<Packed> buf;
  buf.clear();
  std::size_t pos = 0;
  unsigned leaves = 0;
  packed_from_one(TreeAccess::code(t), pos, buf, leaves);
  if (basis_ == Basis::Comb) {
    // Each multilinear word occurs once in a tree expansion.
    for (const auto& p : buf) out.emplace_back(packed_tail_rank(p.word, n_), p.coeff * scale);
    return;
  }
  thread_local std::vector<std::int64_t> x;
  x.assign(dim_, 0);
  std::size_t lo = dim_;
  for (const auto& p : buf) {
    std::size_t r = packed_tail_rank(p.word, n_);
    x[r] += p.coeff;
    lo = std::min(lo, r);
  }
  for (std::size_t j = lo; j < dim_; ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, a] : columns_[j]) {
      std::int64_t prod, diff;
      if (__builtin_mul_overflow(a, x[j], &prod) || __builtin_sub_overflow(x[i], prod, &diff))
        throw ResourceLimitError("Lyndon coordinate overflow");
      x[i] = diff;
    }
    std::int64_t v;
    if (__builtin_mul_overflow(x[j], scale, &v)) throw ResourceLimitError("Lyndon coordinate overflow");
    out.emplace_back(j, v);
  }
}

SparseRow LieCoordinates::coordinates(const Tree& t) const {
  std::vector<std::pair<std::size_t, std::int64_t>> e;
  accumulate(t, 1, e);
  std::vector<std::pair<std::size_t, BigInt>> r;
  r.reserve(e.size());
  for (const auto& [j, v] : e) r.emplace_back(j, BigInt(static_cast<long>(v)));
  return make_sparse_row(std::move(r));
}

std::vector<BigInt> to_lyndon_coordinates(const TreeVector& v) {
  if (v.is_zero()) return {};
  std::size_t n = v.degree();
  for (const auto& [t, c] : v) require_standard(t);
  LieCoordinates lc(n, LieCoordinates::Basis::Lyndon);
  std::vector<BigInt> out(lc.dimension());
  std::vector<std::pair<std::size_t, std::int64_t>> e;
  for (const auto& [t, c] : v) {
    e.clear();
    lc.accumulate(t, 1, e);
    for (const auto& [j, x] : e) out[j] += c * BigInt(static_cast<long>(x));
  }
  return out;
}

std::size_t expansion_span_rank(std::size_t n, std::optional<GradedConfig> graded, std::uint32_t prime) {
  ModularRankAccumulator acc(factorial(n), prime);
  bool odd = graded && graded->odd();
  std::vector<std::pair<std::size_t, std::int64_t>> row;
  for_each_tree(n, [&](const Tree& t) {
    row.clear();
    for_each_expansion_word(t, odd, [&](std::span<const std::uint8_t> w, int c) {
      row.emplace_back(permutation_rank(w), c);
    });
    acc.add(row);
  });
  return acc.rank();
}

}  // namespace lietrees
