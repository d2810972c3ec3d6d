#pragma once

#include <vector>

#include "lietrees/bigint.hpp"

namespace lietrees::detail {

/// Nonzero diagonal of a Smith form of a small dense matrix (absolute
/// values, not yet in divisibility order).
std::vector<BigInt> dense_snf_diagonal(std::vector<std::vector<BigInt>> m);

}  // namespace lietrees::detail
