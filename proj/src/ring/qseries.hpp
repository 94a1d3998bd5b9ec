#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ring/ylaurent.hpp"

namespace refsev {

// Truncated Laurent series in q with YLaurent coefficients:
//
//   q^(offset24/24) * sum_{n = lead}^{trunc-1} c_n q^n  +  O(q^trunc)
//
// offset24 is kept in [0, 24). The stored lead is always the valuation (first
// nonzero known coefficient); a series with no nonzero known coefficient has
// lead == trunc. A trunc of kExact marks a finite, exactly known series.
class QSeries {
 public:
  static constexpr int kExact = 1 << 28;

  QSeries() : lead_(kExact), trunc_(kExact) {}  // exact zero

  static QSeries from_coeffs(std::vector<YLaurent> coeffs, int first,
                             int trunc, int offset24 = 0);
  static QSeries constant(const YLaurent& c);
  static QSeries monomial(const YLaurent& c, int exponent, int offset24 = 0);
  // O(q^trunc).
  static QSeries big_o(int trunc, int offset24 = 0);
  // Coefficients produced by `fn(n)` for first <= n < trunc.
  static QSeries generate(int first, int trunc,
                          const std::function<YLaurent(int)>& fn,
                          int offset24 = 0);

  int offset24() const { return offset24_; }
  int lead() const { return lead_; }
  int trunc() const { return trunc_; }
  bool exact() const { return trunc_ >= kExact; }
  bool is_zero_to_precision() const { return coeffs_.empty(); }
  // Number of known coefficients past the valuation.
  int precision() const { return trunc_ - lead_; }
  // One past the last stored (possibly nonzero) coefficient.
  int stored_end() const { return lead_ + static_cast<int>(coeffs_.size()); }

  // Coefficient of q^(offset24/24 + n); n must be below trunc.
  YLaurent coeff(int n) const;
  // Coefficient at an arbitrary rational power of q; zero off the lattice.
  YLaurent coeff_at(const Rational& power) const;
  const YLaurent& lead_coeff() const;

  QSeries truncated(int trunc) const;
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator/=(const QSeries& other);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  QSeries scaled(const YLaurent& c) const;

  // Raises to an exact rational power; see qseries.cpp for the preconditions.
  QSeries pow(const Rational& r) const;
  QSeries log() const;
  QSeries exp() const;
  // D = q d/dq (acts on the fractional offset as well).
  QSeries d_q() const;
  // ' = y d/dy applied coefficientwise.
  QSeries d_y() const;
  // d/dq for an integral-offset series (used for t-series derivatives).
  QSeries derivative() const;
  // q -> q^k.
  QSeries substitute_power(int k) const;
  // Multiplies by q^(shift24/24).
  QSeries shifted24(int shift24) const;
  QSeries map_coeffs(const std::function<YLaurent(const YLaurent&)>& fn) const;

  // Evaluates this series at q = g, where g has valuation >= 1 and integral
  // offset. Negative powers of g are allowed when g's leading coefficient is
  // invertible.
  QSeries compose(const QSeries& g) const;
  // Compositional inverse of a = t + O(t^2).
  QSeries compose_inverse() const;

  // First exponent below min(trunc) where the two series differ.
  std::optional<int> first_difference(const QSeries& other) const;

  std::string to_string(int max_terms = 12) const;

 private:
  void canonicalize();
  static int clamp_trunc(long long t);

  int offset24_ = 0;
  int lead_ = 0;
  int trunc_ = 0;
  std::vector<YLaurent> coeffs_;  // coeffs_[i] is the coefficient of q^(lead_+i)
};

}  // namespace refsev
