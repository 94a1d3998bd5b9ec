#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace refsev {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);
// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

// Exact Laurent polynomial in y^(1/2) with rational coefficients.
//
// Exponents are stored doubled, so y^(n/2) has key n. Terms are kept sorted by
// exponent with no zero coefficients, which makes structural equality the
// same as mathematical equality.
class YLaurent {
 public:
  struct Term {
    int dexp;
    Rational coeff;
  };

  YLaurent() = default;
  YLaurent(long value);  // NOLINT: implicit constant embedding is intended
  YLaurent(const Rational& value);  // NOLINT
  static YLaurent monomial(const Rational& coeff, int dexp);
  // Builds from arbitrary (possibly repeated, possibly zero) terms.
  static YLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  bool is_integral() const;  // all exponents are whole powers of y
  bool is_palindromic() const;  // invariant under y -> 1/y
  bool has_integer_coefficients() const;
  bool has_nonnegative_coefficients() const;

  int min_dexp() const;
  int max_dexp() const;
  Rational coeff(int dexp) const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  YLaurent& operator+=(const YLaurent& other);
  YLaurent& operator-=(const YLaurent& other);
  YLaurent& operator*=(const YLaurent& other);
  YLaurent& operator*=(const Rational& scalar);
  YLaurent operator-() const;

  friend YLaurent operator+(YLaurent a, const YLaurent& b) { return a += b; }
  friend YLaurent operator-(YLaurent a, const YLaurent& b) { return a -= b; }
  friend YLaurent operator*(const YLaurent& a, const YLaurent& b);
  friend YLaurent operator*(YLaurent a, const Rational& s) { return a *= s; }
  friend YLaurent operator*(const Rational& s, YLaurent a) { return a *= s; }
  friend bool operator==(const YLaurent& a, const YLaurent& b);
  friend bool operator!=(const YLaurent& a, const YLaurent& b) {
    return !(a == b);
  }

  YLaurent pow(unsigned n) const;
  // Multiplies by y^(dshift/2).
  YLaurent shifted(int dshift) const;
  // Inverse of a monomial; throws kDomain otherwise.
  YLaurent monomial_inverse() const;
  // Exact quotient; throws kDomain if the division leaves a remainder.
  YLaurent divide_exact(const YLaurent& divisor) const;
  // y * d/dy.
  YLaurent y_derivative() const;
  // y -> 1/y.
  YLaurent reflected() const;

  Rational eval_at_one() const;
  // Defined only for integral elements.
  Rational eval_at_minus_one() const;
  // Evaluation with y^(1/2) = i; valid for every element whose value is real,
  // which is the case for quantum numbers and their products.
  Rational eval_at_minus_one_via_sqrt_i() const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<Term> terms_;
};

// The quantum number [n]_y; n >= 1.
YLaurent qnum(int n);
// [n]_y at y = 1 and y = -1 (with y^(1/2) = i).
long qnum_at_one(int n);
long qnum_at_minus_one(int n);

}  // namespace refsev
