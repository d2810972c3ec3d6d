#pragma once

#include <algorithm>
#include <optional>

#include "lietrees/intlinalg.hpp"

namespace lietrees::detail {

/// s*a + t*b for sorted sparse rows.
inline SparseRow combine(const BigInt& s, const SparseRow& a, const BigInt& t, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  BigInt v;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      v = s * a[i].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      v = t * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      v = s * a[i].second + t * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

/// a - q*b.
inline SparseRow sub_scaled(const SparseRow& a, const BigInt& q, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  BigInt v;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      v = -q * b[j].second;
      out.emplace_back(b[j].first, v);
      ++j;
    } else {
      v = a[i].second - q * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

inline const BigInt* find_entry(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == r.end() || it->first != col) return nullptr;
  return &it->second;
}

/// Floor division.
inline BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace lietrees::detail
