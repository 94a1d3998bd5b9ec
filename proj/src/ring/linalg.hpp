#pragma once

#include <optional>
#include <vector>

#include "ring/ylaurent.hpp"

namespace refsev {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact solve of A x = b where b has YLaurent entries.
// A may be overdetermined; returns nullopt if the system is inconsistent.
// Throws kInvalidArgument if A has rank below its column count.
std::optional<std::vector<YLaurent>> solve_exact(const RationalMatrix& a,
                                                 const std::vector<YLaurent>& b);

// Rank of a rational matrix.
std::size_t rank(RationalMatrix a);

// Binomial coefficient C(n, k) for n >= 0; 0 when k is out of range.
Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace refsev
