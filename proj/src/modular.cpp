#include <algorithm>
#include <queue>
#include <set>

#include "lietrees/intlinalg.hpp"

namespace lietrees {

namespace {

constexpr std::size_t kDenseCols = 2048;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

struct ModularRankAccumulator::Impl {
  std::uint64_t p;
  std::size_t cols;
  std::size_t rank = 0;
  bool dense;

  // Dense mode: fully reduced echelon form; pivot rows are meaningful on
  // free columns only (1 at their own pivot, 0 at other pivots).
  std::vector<std::vector<std::uint32_t>> pivot_row;  // by column, empty if not a pivot
  std::vector<std::size_t> free_cols;
  std::vector<std::uint64_t> acc;

  // Sparse mode: echelon rows with leading 1.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> echelon;  // by pivot column

  Impl(std::size_t c, std::uint32_t prime) : p(prime), cols(c), dense(c <= kDenseCols), acc(c, 0) {
    if (dense) {
      pivot_row.resize(cols);
      free_cols.resize(cols);
      for (std::size_t j = 0; j < cols; ++j) free_cols[j] = j;
    } else {
      echelon.resize(cols);
    }
  }

  std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, p - 2, p); }

  void add_dense(std::span<const std::pair<std::size_t, std::uint64_t>> row) {
    for (auto f : free_cols) acc[f] = 0;
    for (const auto& [j, v] : row) {
      if (pivot_row[j].empty()) {
        acc[j] = (acc[j] + v) % p;
        continue;
      }
      const auto& pr = pivot_row[j];
      std::uint64_t neg = (p - v) % p;
      if (neg == 0) continue;
      for (auto f : free_cols) acc[f] = (acc[f] + neg * pr[f]) % p;
    }
    std::size_t f0 = cols;
    for (auto f : free_cols)
      if (acc[f] != 0) {
        f0 = f;
        break;
      }
    if (f0 == cols) return;
    std::uint64_t s = inv(acc[f0]);
    std::vector<std::uint32_t> nr(cols, 0);
    for (auto f : free_cols) nr[f] = static_cast<std::uint32_t>(acc[f] * s % p);
    free_cols.erase(std::find(free_cols.begin(), free_cols.end(), f0));
    for (auto& pr : pivot_row) {
      if (pr.empty() || pr[f0] == 0) continue;
      std::uint64_t neg = p - pr[f0];
      for (auto f : free_cols) pr[f] = static_cast<std::uint32_t>((pr[f] + neg * nr[f]) % p);
      pr[f0] = 0;
    }
    pivot_row[f0] = std::move(nr);
    ++rank;
  }

  void add_sparse(std::span<const std::pair<std::size_t, std::uint64_t>> row) {
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
    std::vector<std::size_t> touched;
    std::vector<bool>& queued = queued_;
    if (queued.size() != cols) queued.assign(cols, false);
    auto touch = [&](std::size_t j) {
      if (!queued[j]) {
        queued[j] = true;
        heap.push(j);
        touched.push_back(j);
      }
    };
    for (const auto& [j, v] : row) {
      acc[j] = (acc[j] + v) % p;
      touch(j);
    }
    while (!heap.empty()) {
      std::size_t c = heap.top();
      heap.pop();
      if (acc[c] == 0) continue;
      auto& e = echelon[c];
      if (!e.empty()) {
        std::uint64_t neg = p - acc[c];
        for (const auto& [j, v] : e) {
          acc[j] = (acc[j] + neg * v) % p;
          if (j != c) touch(j);
        }
        acc[c] = 0;
        continue;
      }
      std::uint64_t s = inv(acc[c]);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> nr;
      std::vector<std::size_t> rest;
      while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
      }
      nr.emplace_back(static_cast<std::uint32_t>(c), 1u);
      for (auto j : rest)
        if (acc[j] != 0) nr.emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(acc[j] * s % p));
      e = std::move(nr);
      ++rank;
      break;
    }
    for (auto j : touched) {
      acc[j] = 0;
      queued[j] = false;
    }
  }

  void add(std::span<const std::pair<std::size_t, std::uint64_t>> row) {
    if (rank == cols) return;
    for (const auto& [j, v] : row)
      if (j >= cols) throw DomainError("row column " + std::to_string(j) + " out of range");
    if (dense)
      add_dense(row);
    else
      add_sparse(row);
  }

  std::vector<bool> queued_;
};

ModularRankAccumulator::ModularRankAccumulator(std::size_t cols, std::uint32_t prime) {
  if (prime <= 2 || !is_prime(prime) || prime >= (1u << 31))
    throw DomainError("modulus must be an odd prime below 2^31, got " + std::to_string(prime));
  impl_ = std::make_unique<Impl>(cols, prime);
}

ModularRankAccumulator::ModularRankAccumulator(ModularRankAccumulator&&) noexcept = default;
ModularRankAccumulator& ModularRankAccumulator::operator=(ModularRankAccumulator&&) noexcept = default;
ModularRankAccumulator::~ModularRankAccumulator() = default;

void ModularRankAccumulator::add(std::span<const std::pair<std::size_t, std::int64_t>> row) {
  thread_local std::vector<std::pair<std::size_t, std::uint64_t>> tmp;
  tmp.clear();
  const std::int64_t p = static_cast<std::int64_t>(impl_->p);
  for (const auto& [j, v] : row) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    if (r != 0) tmp.emplace_back(j, static_cast<std::uint64_t>(r));
  }
  impl_->add(tmp);
}

void ModularRankAccumulator::add(const SparseRow& row) {
  thread_local std::vector<std::pair<std::size_t, std::uint64_t>> tmp;
  tmp.clear();
  for (const auto& [j, v] : row) {
    std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(impl_->p));
    if (r != 0) tmp.emplace_back(j, r);
  }
  impl_->add(tmp);
}

std::size_t ModularRankAccumulator::rank() const { return impl_->rank; }
std::size_t ModularRankAccumulator::cols() const { return impl_->cols; }
std::uint32_t ModularRankAccumulator::prime() const { return static_cast<std::uint32_t>(impl_->p); }

namespace {

std::vector<ModularRankAccumulator> accumulators(std::size_t cols, std::span<const std::uint32_t> primes) {
  if (primes.empty()) throw DomainError("at least one prime is required");
  std::set<std::uint32_t> seen(primes.begin(), primes.end());
  if (seen.size() != primes.size()) throw DomainError("primes must be distinct");
  std::vector<ModularRankAccumulator> acc;
  for (auto p : primes) acc.emplace_back(cols, p);
  return acc;
}

ModularRank summarize(const std::vector<ModularRankAccumulator>& acc) {
  ModularRank out;
  for (const auto& a : acc) out.per_prime.emplace_back(a.prime(), a.rank());
  out.agree = std::all_of(out.per_prime.begin(), out.per_prime.end(),
                          [&](const auto& e) { return e.second == out.per_prime.front().second; });
  if (out.agree) out.probable_rank = out.per_prime.front().second;
  return out;
}

}  // namespace

ModularRank rank_modp(const RowSource& rows, std::size_t cols, std::span<const std::uint32_t> primes) {
  auto acc = accumulators(cols, primes);
  rows([&](const SparseRow& r) {
    for (auto& a : acc) a.add(r);
  });
  return summarize(acc);
}

ModularRank rank_modp(const TreeVectorSource& relations, const TreeBasis& basis,
                      std::span<const std::uint32_t> primes) {
  auto acc = accumulators(basis.size(), primes);
  relations([&](const TreeVector& v) {
    SparseRow r = basis.coordinates(v);
    for (auto& a : acc) a.add(r);
  });
  return summarize(acc);
}

}  // namespace lietrees
