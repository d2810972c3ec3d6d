#include <algorithm>
#include <set>

#include "lietrees/intlinalg.hpp"
#include "snf_detail.hpp"
#include "sparse_ops.hpp"

namespace lietrees {

namespace {

inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

std::vector<BigInt> SnfResult::torsion() const {
  std::vector<BigInt> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

std::string SnfResult::cokernel_string() const {
  std::string out;
  if (free_rank() > 0) out = free_rank() == 1 ? "Z" : "Z^" + std::to_string(free_rank());
  for (const auto& d : torsion()) out += (out.empty() ? "Z/" : " + Z/") + d.get_str();
  return out.empty() ? "0" : out;
}

std::vector<BigInt> normalize_invariant_factors(std::vector<BigInt> diagonal) {
  std::vector<BigInt> ones, rest;
  for (auto& d : diagonal) {
    d = abs(d);
    if (d == 0) continue;
    (d == 1 ? ones : rest).push_back(std::move(d));
  }
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      BigInt g = gcd(rest[i], rest[j]);
      BigInt l = rest[i] / g * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  for (auto& d : rest)
    if (d == 1)
      ones.push_back(d);
  rest.erase(std::remove(rest.begin(), rest.end(), BigInt(1)), rest.end());
  ones.insert(ones.end(), rest.begin(), rest.end());
  return ones;
}

namespace detail {

std::vector<BigInt> dense_snf_diagonal(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : m) std::swap(r[a], r[b]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block.
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (bi == rows || cmpabs(m[i][j], m[bi][bj]) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    std::swap(m[t], m[bi]);
    swap_cols(t, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
      // A remainder smaller than the pivot is left; move it to (t, t).
      std::size_t si = t, sj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m[i][t] != 0 && cmpabs(m[i][t], m[si][sj]) < 0) {
          si = i;
          sj = t;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[t][j] != 0 && cmpabs(m[t][j], m[si][sj]) < 0) {
          si = t;
          sj = j;
        }
      std::swap(m[t], m[si]);
      swap_cols(t, sj);
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace detail

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  const std::size_t ncols = m.cols();
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) rows.push_back(m.row(i));

  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<std::uint32_t> count(ncols, 0);
  for (std::uint32_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) {
      col_rows[j].push_back(i);
      ++count[j];
    }
  std::vector<bool> retired(ncols, false);
  std::set<std::pair<std::uint32_t, std::size_t>> queue;
  for (std::size_t j = 0; j < ncols; ++j)
    if (count[j] > 0) queue.emplace(count[j], j);

  auto set_count = [&](std::size_t j, std::uint32_t c) {
    if (!retired[j]) {
      if (count[j] > 0) queue.erase({count[j], j});
      if (c > 0) queue.emplace(c, j);
    }
    count[j] = c;
  };

  std::vector<bool> dead(rows.size(), false);
  std::size_t units = 0;
  // Eliminate on unit pivots, sparsest column first, shortest row within it.
  while (!queue.empty()) {
    auto [cnt, c] = *queue.begin();
    queue.erase(queue.begin());
    retired[c] = true;
    auto& list = col_rows[c];
    std::vector<std::uint32_t> live;
    std::int64_t best = -1;
    for (auto r : list) {
      if (dead[r]) continue;
      const BigInt* v = detail::find_entry(rows[r], c);
      if (!v) continue;
      if (!live.empty() && live.back() == r) continue;
      live.push_back(r);
      if (cmpabs(*v, BigInt(1)) == 0 && (best < 0 || rows[r].size() < rows[best].size())) best = r;
    }
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    list = live;
    if (best < 0) continue;
    const SparseRow pivot = rows[best];
    const BigInt a = *detail::find_entry(pivot, c);
    for (auto r : live) {
      if (r == static_cast<std::uint32_t>(best)) continue;
      BigInt q = *detail::find_entry(rows[r], c) * a;
      SparseRow updated = detail::sub_scaled(rows[r], q, pivot);
      // Track column counts from the symmetric difference of supports.
      const SparseRow& old = rows[r];
      std::size_t x = 0, y = 0;
      while (x < old.size() || y < updated.size()) {
        if (y == updated.size() || (x < old.size() && old[x].first < updated[y].first)) {
          set_count(old[x].first, count[old[x].first] - 1);
          ++x;
        } else if (x == old.size() || updated[y].first < old[x].first) {
          col_rows[updated[y].first].push_back(r);
          set_count(updated[y].first, count[updated[y].first] + 1);
          ++y;
        } else {
          ++x;
          ++y;
        }
      }
      rows[r] = std::move(updated);
    }
    dead[best] = true;
    for (const auto& [j, v] : pivot) set_count(j, count[j] - 1);
    rows[best].clear();
    ++units;
  }

  HermiteBasis residual(ncols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!dead[r] && !rows[r].empty()) residual.insert(rows[r]);
  SnfResult rest = residual.snf();
  std::vector<BigInt> diag(units, BigInt(1));
  diag.insert(diag.end(), rest.invariant_factors.begin(), rest.invariant_factors.end());
  SnfResult res;
  res.invariant_factors = normalize_invariant_factors(std::move(diag));
  res.rank = res.invariant_factors.size();
  res.cols = ncols;
  return res;
}

}  // namespace lietrees
