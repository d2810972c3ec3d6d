#include <algorithm>
#include <limits>

#include "lietrees/intlinalg.hpp"
#include "snf_detail.hpp"
#include "sparse_ops.hpp"

namespace lietrees {

namespace {

struct Overflow {};

using i128 = __int128;

inline std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max())
    throw Overflow{};
  return static_cast<std::int64_t>(v);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// g = s*a + t*b with g = gcd(a, b) > 0.
void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  i128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    i128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = narrow(r0);
  s = narrow(s0);
  t = narrow(t0);
}

// out[j] = s*a[j] + t*b[j] for j >= from; throws Overflow before writing.
// Entries of `out` before `from` are kept (zero-filled if `out` is empty),
// so `out` may alias `a` when s = 1.
void combine_dense(std::vector<std::int64_t>& out, std::int64_t s, const std::vector<std::int64_t>& a,
                   std::int64_t t, const std::vector<std::int64_t>& b, std::size_t from) {
  thread_local std::vector<std::int64_t> tmp;
  tmp.assign(a.size(), 0);
  for (std::size_t j = from; j < a.size(); ++j) {
    if (a[j] == 0 && b[j] == 0) continue;
    tmp[j] = narrow(static_cast<i128>(s) * a[j] + static_cast<i128>(t) * b[j]);
  }
  if (out.size() != a.size()) out.assign(a.size(), 0);
  for (std::size_t j = from; j < a.size(); ++j) out[j] = tmp[j];
}

std::vector<std::int64_t> to_dense(const SparseRow& row, std::size_t cols) {
  std::vector<std::int64_t> d(cols, 0);
  for (const auto& [j, v] : row) {
    if (j >= cols) throw DomainError("row column " + std::to_string(j) + " out of range");
    if (!v.fits_slong_p() || v == std::numeric_limits<long>::min()) throw Overflow{};
    d[j] = v.get_si();
  }
  return d;
}

SparseRow to_sparse(const std::vector<std::int64_t>& d) {
  SparseRow r;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d[j] != 0) r.emplace_back(j, BigInt(static_cast<long>(d[j])));
  return r;
}

std::size_t first_nonzero(const std::vector<std::int64_t>& d, std::size_t from) {
  while (from < d.size() && d[from] == 0) ++from;
  return from;
}

void check_row(const SparseRow& row, std::size_t cols) {
  for (const auto& [j, v] : row)
    if (j >= cols) throw DomainError("row column " + std::to_string(j) + " out of range");
}

bool contains_big(const std::map<std::size_t, SparseRow>& rows, SparseRow row) {
  while (!row.empty()) {
    auto it = rows.find(row.front().first);
    if (it == rows.end()) return false;
    const BigInt& b = it->second.front().second;
    if (!mpz_divisible_p(row.front().second.get_mpz_t(), b.get_mpz_t())) return false;
    BigInt q = row.front().second / b;
    row = detail::sub_scaled(row, q, it->second);
  }
  return true;
}

SparseRow reduce_big(const std::map<std::size_t, SparseRow>& rows, SparseRow row) {
  // Walk the row's columns in increasing order, reducing at pivots.
  std::size_t k = 0;
  while (k < row.size()) {
    std::size_t col = row[k].first;
    auto it = rows.find(col);
    if (it != rows.end()) {
      BigInt q = detail::fdiv(row[k].second, it->second.front().second);
      if (q != 0) row = detail::sub_scaled(row, q, it->second);
    }
    k = std::upper_bound(row.begin(), row.end(), col, [](std::size_t c, const auto& e) { return c < e.first; }) -
        row.begin();
  }
  return row;
}

}  // namespace

HermiteBasis::HermiteBasis(std::size_t cols) : cols_(cols), small_mode_(cols <= kSmallCols) {}

void HermiteBasis::promote() {
  for (const auto& [c, d] : small_) big_.emplace(c, to_sparse(d));
  small_.clear();
  small_mode_ = false;
}

bool HermiteBasis::insert(const SparseRow& row) {
  check_row(row, cols_);
  if (small_mode_) {
    Dense d;
    try {
      d = to_dense(row, cols_);
    } catch (const Overflow&) {
      promote();
      return insert_big(row);
    }
    bool changed = false;
    try {
      return insert_small(d, changed);
    } catch (const Overflow&) {
      // `d` and the basis are consistent after every committed step.
      promote();
      return insert_big(to_sparse(d)) || changed;
    }
  }
  return insert_big(row);
}

bool HermiteBasis::insert_small(Dense& row, bool& changed) {
  std::size_t c = first_nonzero(row, 0);
  while (c < cols_) {
    std::int64_t a = row[c];
    auto it = small_.find(c);
    if (it == small_.end()) {
      if (a < 0)
        for (auto& x : row) x = -x;
      small_.emplace(c, std::move(row));
      finalized_ = false;
      return true;
    }
    Dense& p = it->second;
    std::int64_t b = p[c];
    if (a % b == 0) {
      combine_dense(row, 1, row, -(a / b), p, c);
    } else {
      std::int64_t g, s, t;
      ext_gcd(b, a, g, s, t);
      Dense np, other;
      combine_dense(np, s, p, t, row, c);
      combine_dense(other, b / g, row, -(a / g), p, c);
      p = std::move(np);
      row = std::move(other);
      changed = true;
      finalized_ = false;
    }
    c = first_nonzero(row, c);
  }
  return changed;
}

bool HermiteBasis::insert_big(SparseRow row) {
  bool changed = false;
  while (!row.empty()) {
    std::size_t c = row.front().first;
    auto it = big_.find(c);
    if (it == big_.end()) {
      if (row.front().second < 0)
        for (auto& e : row) e.second = -e.second;
      big_.emplace(c, std::move(row));
      finalized_ = false;
      return true;
    }
    SparseRow& p = it->second;
    const BigInt a = row.front().second;
    const BigInt b = p.front().second;
    if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
      row = detail::sub_scaled(row, a / b, p);
    } else {
      BigInt g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
      SparseRow np = detail::combine(s, p, t, row);
      BigInt bg = b / g, ag = a / g;
      row = detail::combine(bg, row, -ag, p);
      p = std::move(np);
      changed = true;
      finalized_ = false;
    }
  }
  return changed;
}

bool HermiteBasis::contains(const SparseRow& row) const {
  check_row(row, cols_);
  if (!small_mode_) return contains_big(big_, row);
  try {
    Dense d = to_dense(row, cols_);
    std::size_t c = first_nonzero(d, 0);
    while (c < cols_) {
      auto it = small_.find(c);
      if (it == small_.end()) return false;
      std::int64_t b = it->second[c];
      if (d[c] % b != 0) return false;
      combine_dense(d, 1, d, -(d[c] / b), it->second, c);
      c = first_nonzero(d, c);
    }
    return true;
  } catch (const Overflow&) {
    return contains_big(rows(), row);
  }
}

bool HermiteBasis::finalize_small() {
  auto backup = small_;
  try {
    for (auto it = small_.begin(); it != small_.end(); ++it) {
      Dense& r = it->second;
      for (auto jt = std::next(it); jt != small_.end(); ++jt) {
        std::size_t j = jt->first;
        if (r[j] == 0) continue;
        std::int64_t q = floor_div(r[j], jt->second[j]);
        if (q != 0) combine_dense(r, 1, r, -q, jt->second, j);
      }
    }
    return true;
  } catch (const Overflow&) {
    small_ = std::move(backup);
    return false;
  }
}

void HermiteBasis::finalize() {
  if (finalized_) return;
  if (small_mode_ && finalize_small()) {
    finalized_ = true;
    return;
  }
  if (small_mode_) promote();
  for (auto it = big_.begin(); it != big_.end(); ++it) {
    auto& r = it->second;
    for (auto jt = std::next(it); jt != big_.end(); ++jt) {
      const BigInt* v = detail::find_entry(r, jt->first);
      if (!v) continue;
      BigInt q = detail::fdiv(*v, jt->second.front().second);
      if (q != 0) r = detail::sub_scaled(r, q, jt->second);
    }
  }
  finalized_ = true;
}

SparseRow HermiteBasis::reduce(const SparseRow& row) {
  check_row(row, cols_);
  finalize();
  if (small_mode_) {
    try {
      Dense d = to_dense(row, cols_);
      for (const auto& [c, p] : small_) {
        if (d[c] == 0) continue;
        std::int64_t q = floor_div(d[c], p[c]);
        if (q != 0) combine_dense(d, 1, d, -q, p, c);
      }
      return to_sparse(d);
    } catch (const Overflow&) {
      return reduce_big(rows(), row);
    }
  }
  return reduce_big(big_, row);
}

std::map<std::size_t, SparseRow> HermiteBasis::rows() const {
  if (!small_mode_) return big_;
  std::map<std::size_t, SparseRow> out;
  for (const auto& [c, d] : small_) out.emplace(c, to_sparse(d));
  return out;
}

bool HermiteBasis::unit_pivots() const {
  if (small_mode_) {
    for (const auto& [c, d] : small_)
      if (d[c] != 1) return false;
    return true;
  }
  for (const auto& [c, r] : big_)
    if (r.front().second != 1) return false;
  return true;
}

SnfResult HermiteBasis::snf() const {
  auto all = rows();
  std::map<std::size_t, const SparseRow*> units;
  std::vector<SparseRow> rest;
  for (const auto& [c, r] : all) {
    if (r.front().second == 1)
      units.emplace(c, &r);
    else
      rest.push_back(r);
  }
  // Clear unit-pivot columns from the remaining rows; the unit rows then
  // split off as factors 1 by column operations.
  std::map<std::size_t, std::size_t> colmap;
  for (auto& r : rest) {
    std::size_t k = 0;
    while (k < r.size()) {
      std::size_t col = r[k].first;
      auto u = units.find(col);
      if (u != units.end()) r = detail::sub_scaled(r, r[k].second, *u->second);
      k = std::upper_bound(r.begin(), r.end(), col, [](std::size_t c, const auto& e) { return c < e.first; }) -
          r.begin();
    }
    for (const auto& [j, v] : r) colmap.emplace(j, 0);
  }
  std::size_t idx = 0;
  for (auto& [j, k] : colmap) k = idx++;
  std::vector<std::vector<BigInt>> dense(rest.size(), std::vector<BigInt>(colmap.size()));
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (const auto& [j, v] : rest[i]) dense[i][colmap[j]] = v;
  std::vector<BigInt> diag(units.size(), BigInt(1));
  for (auto& d : detail::dense_snf_diagonal(std::move(dense))) diag.push_back(std::move(d));
  SnfResult res;
  res.invariant_factors = normalize_invariant_factors(std::move(diag));
  res.rank = res.invariant_factors.size();
  res.cols = cols_;
  return res;
}

}  // namespace lietrees
