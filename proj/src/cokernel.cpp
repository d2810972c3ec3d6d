#include <set>

#include "lietrees/intlinalg.hpp"

namespace lietrees {

namespace {

constexpr std::size_t kHermiteCols = 256;

}  // namespace

TreeBasis tree_basis(std::size_t n) { return TreeBasis(enumerate_trees(n)); }

SnfResult cokernel_of_rows(const RowSource& rows, std::size_t cols) {
  if (cols <= kHermiteCols) {
    HermiteBasis h(cols);
    rows([&](const SparseRow& r) {
      if (!r.empty()) h.insert(r);
    });
    return h.snf();
  }
  std::set<SparseRow> distinct;
  rows([&](const SparseRow& r) {
    if (r.empty()) return;
    if (r.front().second < 0) {
      SparseRow neg = r;
      for (auto& e : neg) e.second = -e.second;
      distinct.insert(std::move(neg));
    } else {
      distinct.insert(r);
    }
  });
  SparseIntMatrix m(0, cols);
  for (const auto& r : distinct) m.append_row(r);
  return smith_normal_form(m);
}

SnfResult cokernel(const TreeVectorSource& relations, const TreeBasis& basis) {
  return cokernel_of_rows(
      [&](const std::function<void(const SparseRow&)>& emit) {
        relations([&](const TreeVector& v) { emit(basis.coordinates(v)); });
      },
      basis.size());
}

TreeVector normal_form(const TreeVector& v, const TreeVectorSource& relations, const TreeBasis& basis) {
  LatticeReducer<Tree> reducer(basis, relations);
  return reducer.normal_form(v);
}

}  // namespace lietrees
