#include "ring/ylaurent.hpp"

#include <algorithm>
#include <sstream>

#include "ring/error.hpp"

namespace refsev {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    fail(ErrorCode::kInvalidArgument, "not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

YLaurent::YLaurent(long value) {
  if (value != 0) terms_.push_back({0, Rational(value)});
}

YLaurent::YLaurent(const Rational& value) {
  if (value != 0) terms_.push_back({0, value});
}

YLaurent YLaurent::monomial(const Rational& coeff, int dexp) {
  YLaurent r;
  if (coeff != 0) r.terms_.push_back({dexp, coeff});
  return r;
}

YLaurent YLaurent::from_terms(std::vector<Term> terms) {
  YLaurent r;
  r.terms_ = std::move(terms);
  r.normalize();
  return r;
}

void YLaurent::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.dexp < b.dexp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().dexp == t.dexp) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

bool YLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].dexp == 0);
}

bool YLaurent::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.dexp % 2 == 0; });
}

bool YLaurent::is_palindromic() const {
  const std::size_t n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Term& a = terms_[i];
    const Term& b = terms_[n - 1 - i];
    if (a.dexp != -b.dexp || a.coeff != b.coeff) return false;
  }
  return true;
}

bool YLaurent::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff.get_den() == 1; });
}

bool YLaurent::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coeff > 0; });
}

int YLaurent::min_dexp() const {
  if (terms_.empty()) fail(ErrorCode::kDomain, "min_dexp of zero");
  return terms_.front().dexp;
}

int YLaurent::max_dexp() const {
  if (terms_.empty()) fail(ErrorCode::kDomain, "max_dexp of zero");
  return terms_.back().dexp;
}

Rational YLaurent::coeff(int dexp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), dexp,
      [](const Term& t, int e) { return t.dexp < e; });
  if (it != terms_.end() && it->dexp == dexp) return it->coeff;
  return 0;
}

YLaurent& YLaurent::operator+=(const YLaurent& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->dexp < b->dexp)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->dexp < a->dexp) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) out.push_back({a->dexp, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

YLaurent& YLaurent::operator-=(const YLaurent& other) {
  return *this += -other;
}

YLaurent YLaurent::operator-() const {
  YLaurent r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

YLaurent operator*(const YLaurent& a, const YLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    YLaurent r = a;
    for (auto& t : r.terms_) {
      t.dexp += b.terms_[0].dexp;
      t.coeff *= b.terms_[0].coeff;
    }
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_dexp() + b.min_dexp();
  const int hi = a.max_dexp() + b.max_dexp();
  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      acc[x.dexp + y.dexp - lo] += prod;
    }
  }
  YLaurent r;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) {
      r.terms_.push_back({lo + static_cast<int>(i), std::move(acc[i])});
    }
  }
  return r;
}

YLaurent& YLaurent::operator*=(const YLaurent& other) {
  *this = *this * other;
  return *this;
}

YLaurent& YLaurent::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

bool operator==(const YLaurent& a, const YLaurent& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].dexp != b.terms_[i].dexp ||
        a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

YLaurent YLaurent::pow(unsigned n) const {
  YLaurent result(1);
  YLaurent base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

YLaurent YLaurent::shifted(int dshift) const {
  YLaurent r = *this;
  for (auto& t : r.terms_) t.dexp += dshift;
  return r;
}

YLaurent YLaurent::monomial_inverse() const {
  if (!is_monomial()) {
    fail(ErrorCode::kDomain, "not invertible in Q[y^(+-1/2)]: " + to_string());
  }
  return monomial(1 / terms_[0].coeff, -terms_[0].dexp);
}

YLaurent YLaurent::divide_exact(const YLaurent& divisor) const {
  if (divisor.is_zero()) fail(ErrorCode::kDomain, "division by zero");
  if (divisor.is_monomial()) return *this * divisor.monomial_inverse();
  YLaurent rem = *this;
  std::vector<Term> quotient;
  const Term& lead = divisor.terms_.back();
  const int span = divisor.max_dexp() - divisor.min_dexp();
  while (!rem.is_zero()) {
    if (rem.max_dexp() - rem.min_dexp() < span) {
      fail(ErrorCode::kDomain, "inexact division of " + to_string() + " by " +
                                   divisor.to_string());
    }
    Term q{rem.max_dexp() - lead.dexp, rem.terms_.back().coeff / lead.coeff};
    rem -= divisor * monomial(q.coeff, q.dexp);
    quotient.push_back(std::move(q));
  }
  return from_terms(std::move(quotient));
}

YLaurent YLaurent::y_derivative() const {
  YLaurent r = *this;
  for (auto& t : r.terms_) t.coeff *= make_rational(t.dexp, 2);
  r.normalize();
  return r;
}

YLaurent YLaurent::reflected() const {
  YLaurent r = *this;
  for (auto& t : r.terms_) t.dexp = -t.dexp;
  std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

Rational YLaurent::eval_at_one() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Rational YLaurent::eval_at_minus_one() const {
  if (!is_integral()) {
    fail(ErrorCode::kDomain,
         "evaluation at y=-1 of non-integral element " + to_string());
  }
  Rational s = 0;
  for (const auto& t : terms_) {
    if ((t.dexp / 2) % 2 == 0) {
      s += t.coeff;
    } else {
      s -= t.coeff;
    }
  }
  return s;
}

Rational YLaurent::eval_at_minus_one_via_sqrt_i() const {
  // i^k for k = dexp: real part only; imaginary parts must cancel.
  Rational re = 0;
  Rational im = 0;
  for (const auto& t : terms_) {
    const int k = ((t.dexp % 4) + 4) % 4;
    if (k == 0) re += t.coeff;
    if (k == 1) im += t.coeff;
    if (k == 2) re -= t.coeff;
    if (k == 3) im -= t.coeff;
  }
  if (im != 0) {
    fail(ErrorCode::kDomain, "value at y^(1/2)=i is not real: " + to_string());
  }
  return re;
}

std::string YLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    const bool unit = (a == 1);
    if (it->dexp == 0) {
      os << a.get_str();
    } else {
      if (!unit) os << a.get_str() << "*";
      os << "y";
      if (it->dexp != 2) {
        if (it->dexp % 2 == 0) {
          os << "^" << (it->dexp / 2);
        } else {
          os << "^(" << it->dexp << "/2)";
        }
      }
    }
    first = false;
  }
  return os.str();
}

YLaurent qnum(int n) {
  if (n <= 0) {
    fail(ErrorCode::kInvalidArgument,
         "quantum number needs n >= 1, got " + std::to_string(n));
  }
  std::vector<YLaurent::Term> terms;
  for (int e = n - 1; e >= -(n - 1); e -= 2) terms.push_back({e, Rational(1)});
  return YLaurent::from_terms(std::move(terms));
}

long qnum_at_one(int n) { return n; }

long qnum_at_minus_one(int n) {
  if (n % 2 == 0) return 0;
  return ((n - 1) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace refsev
