#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lietrees/bigint.hpp"
#include "lietrees/quotients.hpp"
#include "lietrees/relations.hpp"
#include "lietrees/trees.hpp"

namespace testsupport {

// Fixed seed for every randomized check in the suite.
inline constexpr std::uint32_t kSeed = 20240611u;

// All bracket strings over a label set, built by splitting the set into an
// ordered pair of nonempty parts. Independent of the library's enumerator.
inline std::vector<std::string> brute_force_trees(const std::vector<unsigned>& labels) {
  if (labels.size() == 1) return {std::to_string(labels[0])};
  std::vector<std::string> out;
  std::size_t k = labels.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<unsigned> a, b;
    for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? a : b).push_back(labels[i]);
    for (const auto& l : brute_force_trees(a))
      for (const auto& r : brute_force_trees(b)) out.push_back("[" + l + "," + r + "]");
  }
  return out;
}

inline std::vector<unsigned> iota_labels(std::size_t n) {
  std::vector<unsigned> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

inline lietrees::TreeVectorSource relations_of(std::size_t n, std::vector<lietrees::RelationKind> kinds) {
  return [n, kinds](const std::function<void(const lietrees::TreeVector&)>& emit) {
    for (auto k : kinds) lietrees::for_each_relation(k, n, [&](const lietrees::Relation& r) { emit(r.vector()); });
  };
}

}  // namespace testsupport
