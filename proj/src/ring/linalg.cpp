#include "ring/linalg.hpp"

#include <gmpxx.h>

#include "ring/error.hpp"

namespace refsev {

std::optional<std::vector<YLaurent>> solve_exact(
    const RationalMatrix& a, const std::vector<YLaurent>& b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) {
    fail(ErrorCode::kInvalidArgument, "matrix and right-hand side disagree");
  }
  if (rows == 0) return std::vector<YLaurent>{};
  const std::size_t cols = a[0].size();
  RationalMatrix m = a;
  std::vector<YLaurent> rhs = b;
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= rhs[r] * f;
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) {
    fail(ErrorCode::kInvalidArgument,
         "rank-deficient system: rank " + std::to_string(r) + " < " +
             std::to_string(cols) + " unknowns");
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!rhs[i].is_zero()) return std::nullopt;
  }
  std::vector<YLaurent> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::size_t rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace refsev
