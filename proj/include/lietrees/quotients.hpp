#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lietrees/intlinalg.hpp"
#include "lietrees/relations.hpp"

namespace lietrees {

enum class Method { Auto, Snf, Lyndon, Modular };
std::string to_string(Method m);
Method parse_method(std::string_view s);

enum class Certification { ExactOverZ, ProbabilisticOverQ };
/// "exact over Z" / "probabilistic over Q".
std::string to_string(Certification c);

/// Which relation families to impose. STU² needs a parity.
struct RelationSelection {
  bool as = true;
  bool ihx = true;
  bool stu2 = false;
  Parity parity = Parity::Odd;

  /// "as,ihx,stu2"; throws DomainError on an unknown or empty list.
  static RelationSelection parse(std::string_view list);
  /// "as,ihx" or "as,ihx,stu2(odd)".
  std::string to_string() const;
  bool lie_complete() const { return as && ihx; }
  friend bool operator==(const RelationSelection&, const RelationSelection&) = default;
};

struct QuotientLimits {
  std::size_t exact_cap = 6;  // largest n accepted by the snf method
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::vector<std::uint32_t> primes{kDefaultPrimes[0], kDefaultPrimes[1]};
};

/// Structure of Z[Tree(n)] / selected relations.
struct QuotientResult {
  std::size_t n = 0;
  RelationSelection relations;
  Method method = Method::Snf;
  Certification certification = Certification::ExactOverZ;
  std::size_t rank = 0;
  /// Exact methods only.
  std::optional<SnfResult> snf;
  /// Modular method only.
  std::optional<ModularRank> modular;
  double seconds = 0;

  std::vector<BigInt> torsion() const;
};

/// snf for n <= 5, lyndon for n = 6, modular beyond.
Method resolve_method(std::size_t n, Method requested);

/// Throws DomainError for a method that cannot serve the request (snf above
/// the exact cap, lyndon/modular without both AS and IHX) and
/// ResourceLimitError above the enumeration cap.
///
/// Convention: for n = 1 the STU² quotient is 0.
QuotientResult compute_quotient(std::size_t n, const RelationSelection& relations,
                                Method method = Method::Auto, const QuotientLimits& limits = {});

/// Relation vectors of the selection, streamed.
TreeVectorSource relation_source(std::size_t n, const RelationSelection& relations);

/// Cokernel of the selected relations presented on Lie coordinates:
/// AS and IHX are built in, STU² rows are mapped through the coordinates.
SnfResult lie_cokernel(std::size_t n, const RelationSelection& relations);

}  // namespace lietrees
