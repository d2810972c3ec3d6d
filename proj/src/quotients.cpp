#include "lietrees/quotients.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "lietrees/errors.hpp"
#include "lietrees/lie.hpp"

namespace lietrees {

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Snf: return "snf";
    case Method::Lyndon: return "lyndon";
    case Method::Modular: return "modular";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  if (s == "auto") return Method::Auto;
  if (s == "snf") return Method::Snf;
  if (s == "lyndon") return Method::Lyndon;
  if (s == "modular") return Method::Modular;
  throw DomainError("method must be one of auto, snf, lyndon, modular; got '" + std::string(s) + "'");
}

std::string to_string(Certification c) {
  return c == Certification::ExactOverZ ? "exact over Z" : "probabilistic over Q";
}

RelationSelection RelationSelection::parse(std::string_view list) {
  RelationSelection sel{false, false, false, Parity::Odd};
  std::size_t start = 0;
  bool any = false;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string_view part = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (part == "as")
      sel.as = true;
    else if (part == "ihx")
      sel.ihx = true;
    else if (part == "stu2")
      sel.stu2 = true;
    else
      throw DomainError("unknown relation kind '" + std::string(part) + "' (expected as, ihx, stu2)");
    any = true;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (!any) throw DomainError("empty relation list");
  return sel;
}

std::string RelationSelection::to_string() const {
  std::string out;
  auto put = [&](const std::string& s) { out += (out.empty() ? "" : ",") + s; };
  if (as) put("as");
  if (ihx) put("ihx");
  if (stu2) put("stu2(" + lietrees::to_string(parity) + ")");
  return out;
}

std::vector<BigInt> QuotientResult::torsion() const { return snf ? snf->torsion() : std::vector<BigInt>{}; }

Method resolve_method(std::size_t n, Method requested) {
  if (requested != Method::Auto) return requested;
  if (n <= 5) return Method::Snf;
  if (n == 6) return Method::Lyndon;
  return Method::Modular;
}

TreeVectorSource relation_source(std::size_t n, const RelationSelection& sel) {
  return [n, sel](const std::function<void(const TreeVector&)>& emit) {
    auto each = [&](const Relation& r) { emit(r.vector()); };
    if (sel.as) for_each_as_relation(n, each);
    if (sel.ihx) for_each_ihx_relation(n, each);
    if (sel.stu2) for_each_stu2_relation(n, sel.parity, each);
  };
}

namespace {

void stu2_rows(std::size_t n, Parity parity, const LieCoordinates& lc,
               const std::function<void(const std::vector<std::pair<std::size_t, std::int64_t>>&)>& emit) {
  // Consecutive relations share the merged-vertex pair (S_v, U_v); its
  // coordinates are computed once per pair.
  std::vector<std::pair<std::size_t, std::int64_t>> head, row;
  std::optional<Tree> last_s, last_u;
  int last_sign_s = 0, last_sign_u = 0;
  for_each_stu2_relation(n, parity, [&](const Relation& r) {
    const auto& ts = r.terms;
    if (!last_s || !(*last_s == ts[0].tree) || !(*last_u == ts[1].tree) || last_sign_s != ts[0].sign ||
        last_sign_u != ts[1].sign) {
      head.clear();
      lc.accumulate(ts[0].tree, ts[0].sign, head);
      lc.accumulate(ts[1].tree, ts[1].sign, head);
      last_s = ts[0].tree;
      last_u = ts[1].tree;
      last_sign_s = ts[0].sign;
      last_sign_u = ts[1].sign;
    }
    row = head;
    for (std::size_t k = 2; k < ts.size(); ++k) lc.accumulate(ts[k].tree, ts[k].sign, row);
    emit(row);
  });
}

SparseRow to_sparse_row(const std::vector<std::pair<std::size_t, std::int64_t>>& row) {
  std::vector<std::pair<std::size_t, BigInt>> e;
  e.reserve(row.size());
  for (const auto& [j, v] : row) e.emplace_back(j, BigInt(static_cast<long>(v)));
  return make_sparse_row(std::move(e));
}

}  // namespace

SnfResult lie_cokernel(std::size_t n, const RelationSelection& sel) {
  if (!sel.lie_complete()) throw DomainError("Lie-coordinate routes need both as and ihx relations");
  LieCoordinates lc(n, LieCoordinates::Basis::Lyndon);
  RowSource rows = [&](const std::function<void(const SparseRow&)>& emit) {
    if (!sel.stu2) return;
    stu2_rows(n, sel.parity, lc, [&](const auto& row) { emit(to_sparse_row(row)); });
  };
  return cokernel_of_rows(rows, lc.dimension());
}

QuotientResult compute_quotient(std::size_t n, const RelationSelection& sel, Method method,
                                const QuotientLimits& limits) {
  auto start = std::chrono::steady_clock::now();
  std::size_t cap = std::min(limits.enumeration_cap, kMaxEnumerationCap);
  if (n == 0 || n > cap)
    throw DomainError("degree must be in 1.." + std::to_string(cap) + " (enumeration cap), got " +
                      std::to_string(n));
  if (!sel.as && !sel.ihx && !sel.stu2) throw DomainError("no relations selected");
  QuotientResult res;
  res.n = n;
  res.relations = sel;
  res.method = resolve_method(n, method);
  if (res.method == Method::Snf && n > limits.exact_cap)
    throw DomainError("method snf is limited to n <= " + std::to_string(limits.exact_cap) +
                      "; use lyndon or modular");
  if ((res.method == Method::Lyndon || res.method == Method::Modular) && !sel.lie_complete())
    throw DomainError("method " + to_string(res.method) + " needs both as and ihx relations");

  if (n == 1 && sel.stu2) {
    // The chord is killed by convention: A^T_1 = 0.
    res.certification = Certification::ExactOverZ;
    res.snf = SnfResult{{BigInt(1)}, 1, 1};
    res.rank = 0;
  } else if (res.method == Method::Snf) {
    res.snf = cokernel(relation_source(n, sel), tree_basis(n));
    res.rank = res.snf->free_rank();
  } else if (res.method == Method::Lyndon) {
    res.snf = lie_cokernel(n, sel);
    res.rank = res.snf->free_rank();
  } else {
    res.certification = Certification::ProbabilisticOverQ;
    LieCoordinates lc(n, LieCoordinates::Basis::Comb);
    std::vector<ModularRankAccumulator> acc;
    for (auto p : limits.primes) acc.emplace_back(lc.dimension(), p);
    if (sel.stu2)
      stu2_rows(n, sel.parity, lc, [&](const auto& row) {
        for (auto& a : acc) a.add(row);
      });
    ModularRank mr;
    std::size_t best = 0;
    for (const auto& a : acc) {
      mr.per_prime.emplace_back(a.prime(), a.rank());
      best = std::max(best, a.rank());
    }
    mr.agree = std::all_of(mr.per_prime.begin(), mr.per_prime.end(),
                           [&](const auto& e) { return e.second == best; });
    if (mr.agree) mr.probable_rank = best;
    res.modular = mr;
    res.rank = lc.dimension() - best;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace lietrees
