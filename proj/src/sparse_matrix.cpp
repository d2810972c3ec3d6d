#include <algorithm>
#include <istream>
#include <ostream>

#include "lietrees/intlinalg.hpp"

namespace lietrees {

SparseRow make_sparse_row(std::vector<std::pair<std::size_t, BigInt>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  out.reserve(entries.size());
  for (auto& [j, v] : entries) {
    if (!out.empty() && out.back().first == j)
      out.back().second += v;
    else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(j, std::move(v));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

void SparseIntMatrix::append_row(SparseRow row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k].first >= cols_)
      throw DomainError("column " + std::to_string(row[k].first) + " out of range for " +
                        std::to_string(cols_) + " columns");
    if (row[k].second == 0 || (k > 0 && row[k - 1].first >= row[k].first)) {
      row = make_sparse_row(std::move(row));
      break;
    }
  }
  rows_.push_back(std::move(row));
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const BigInt& value) {
  if (i >= rows_.size() || j >= cols_) throw DomainError("matrix index out of range");
  auto& r = rows_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  } else if (value != 0) {
    r.insert(it, {j, value});
  }
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::vector<SparseEntry> SparseIntMatrix::entries() const {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, v] : rows_[i]) out.push_back({i, j, v});
  return out;
}

SparseIntMatrix SparseIntMatrix::diagonal(std::span<const BigInt> values) {
  SparseIntMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.add(i, i, values[i]);
  return m;
}

void write_matrix(std::ostream& out, const SparseIntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) out << i << ' ' << j << ' ' << v.get_str() << '\n';
}

SparseIntMatrix read_matrix(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw DomainError("matrix header must be 'rows cols nnz'");
  SparseIntMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t i = 0, j = 0;
    std::string v;
    if (!(in >> i >> j >> v)) throw DomainError("matrix entry " + std::to_string(k) + " is malformed");
    BigInt x;
    if (x.set_str(v, 10) != 0) throw DomainError("matrix entry " + std::to_string(k) + " is not an integer");
    m.add(i, j, x);
  }
  return m;
}

}  // namespace lietrees
