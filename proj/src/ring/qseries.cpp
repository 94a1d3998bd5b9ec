#include "ring/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "ring/error.hpp"

namespace refsev {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace

int QSeries::clamp_trunc(long long t) {
  return t >= kExact ? kExact : static_cast<int>(t);
}

QSeries QSeries::from_coeffs(std::vector<YLaurent> coeffs, int first,
                             int trunc, int offset24) {
  QSeries s;
  s.offset24_ = offset24;
  s.lead_ = first;
  s.trunc_ = clamp_trunc(trunc);
  s.coeffs_ = std::move(coeffs);
  s.canonicalize();
  return s;
}

QSeries QSeries::constant(const YLaurent& c) { return monomial(c, 0); }

QSeries QSeries::monomial(const YLaurent& c, int exponent, int offset24) {
  return from_coeffs({c}, exponent, kExact, offset24);
}

QSeries QSeries::big_o(int trunc, int offset24) {
  return from_coeffs({}, trunc, trunc, offset24);
}

QSeries QSeries::generate(int first, int trunc,
                          const std::function<YLaurent(int)>& fn,
                          int offset24) {
  if (trunc >= kExact) {
    fail(ErrorCode::kInvalidArgument, "generate needs a finite truncation");
  }
  std::vector<YLaurent> coeffs;
  for (int n = first; n < trunc; ++n) coeffs.push_back(fn(n));
  return from_coeffs(std::move(coeffs), first, trunc, offset24);
}

void QSeries::canonicalize() {
  if (offset24_ < 0 || offset24_ >= 24) {
    const int carry = floor_div(offset24_, 24);
    offset24_ -= 24 * carry;
    lead_ += carry;
    if (!exact()) trunc_ += carry;
  }
  if (!exact()) {
    const long long keep = static_cast<long long>(trunc_) - lead_;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<long long>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  auto first_nz = std::find_if(coeffs_.begin(), coeffs_.end(),
                               [](const YLaurent& c) { return !c.is_zero(); });
  lead_ += static_cast<int>(first_nz - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first_nz);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) lead_ = trunc_;
}

YLaurent QSeries::coeff(int n) const {
  if (n >= trunc_) {
    fail(ErrorCode::kTruncation, "coefficient q^" + std::to_string(n) +
                                     " requested, series known below q^" +
                                     std::to_string(trunc_));
  }
  if (n < lead_ || n >= lead_ + static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(n - lead_)];
}

YLaurent QSeries::coeff_at(const Rational& power) const {
  Rational p24 = power * 24;
  if (!is_integer(p24)) return {};
  const long total = p24.get_num().get_si();
  if (((total - offset24_) % 24 + 24) % 24 != 0) return {};
  return coeff(static_cast<int>(floor_div(static_cast<int>(total - offset24_), 24)));
}

const YLaurent& QSeries::lead_coeff() const {
  if (coeffs_.empty()) {
    fail(ErrorCode::kTruncation, "series has no known nonzero coefficient");
  }
  return coeffs_.front();
}

QSeries QSeries::truncated(int trunc) const {
  if (trunc >= trunc_) return *this;
  QSeries s = *this;
  s.trunc_ = trunc;
  s.canonicalize();
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  if (other.offset24_ != offset24_) {
    if (other.coeffs_.empty() && other.exact()) return *this;
    if (coeffs_.empty() && exact()) return *this = other;
    fail(ErrorCode::kDomain, "adding series on different q^(1/24) lattices");
  }
  const int trunc = std::min(trunc_, other.trunc_);
  const int lo = std::min(lead_, other.lead_);
  int hi = std::max(lead_ + static_cast<int>(coeffs_.size()),
                    other.lead_ + static_cast<int>(other.coeffs_.size()));
  hi = std::min(hi, trunc);
  std::vector<YLaurent> out;
  if (hi > lo) out.resize(static_cast<std::size_t>(hi - lo));
  for (int n = lo; n < hi; ++n) {
    YLaurent& slot = out[static_cast<std::size_t>(n - lo)];
    if (n >= lead_ && n < lead_ + static_cast<int>(coeffs_.size())) {
      slot = std::move(coeffs_[static_cast<std::size_t>(n - lead_)]);
    }
    if (n >= other.lead_ &&
        n < other.lead_ + static_cast<int>(other.coeffs_.size())) {
      slot += other.coeffs_[static_cast<std::size_t>(n - other.lead_)];
    }
  }
  coeffs_ = std::move(out);
  lead_ = lo;
  trunc_ = trunc;
  canonicalize();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) { return *this += -other; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  if ((a.coeffs_.empty() && a.exact()) || (b.coeffs_.empty() && b.exact())) {
    return QSeries();
  }
  const long long lead = static_cast<long long>(a.lead_) + b.lead_;
  const int trunc = QSeries::clamp_trunc(
      std::min(static_cast<long long>(a.trunc_) + b.lead_,
               static_cast<long long>(b.trunc_) + a.lead_));
  const int na = static_cast<int>(a.coeffs_.size());
  const int nb = static_cast<int>(b.coeffs_.size());
  int len = na + nb - 1;
  if (len < 0) len = 0;
  if (trunc < QSeries::kExact) {
    len = static_cast<int>(std::min<long long>(len, trunc - lead));
  }
  std::vector<YLaurent> out(static_cast<std::size_t>(std::max(len, 0)));
  for (int i = 0; i < na; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < nb && i + j < len; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QSeries::from_coeffs(std::move(out), static_cast<int>(lead), trunc,
                              a.offset24_ + b.offset24_);
}

QSeries& QSeries::operator*=(const QSeries& other) {
  *this = *this * other;
  return *this;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  if (b.coeffs_.empty()) {
    if (b.exact()) fail(ErrorCode::kDomain, "division by zero series");
    fail(ErrorCode::kTruncation,
         "truncation underflow: divisor has no known coefficient");
  }
  const YLaurent inv = b.coeffs_.front().monomial_inverse();
  const int lead = a.lead_ - b.lead_;
  const int offset = a.offset24_ - b.offset24_;
  if (a.coeffs_.empty()) {
    if (a.exact()) return QSeries();
    return QSeries::big_o(a.trunc_ - b.lead_, offset);
  }
  long long prec = std::min<long long>(a.precision(), b.precision());
  if (prec >= QSeries::kExact / 2) {
    if (b.coeffs_.size() == 1) {
      std::vector<YLaurent> out;
      for (const auto& c : a.coeffs_) out.push_back(c * inv);
      return QSeries::from_coeffs(std::move(out), lead, QSeries::kExact, offset);
    }
    fail(ErrorCode::kTruncation,
         "quotient is an infinite series; truncate an operand first");
  }
  const int n = static_cast<int>(prec);
  std::vector<YLaurent> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    YLaurent acc = k < static_cast<int>(a.coeffs_.size()) ? a.coeffs_[k]
                                                         : YLaurent();
    for (int j = 1; j <= k && j < static_cast<int>(b.coeffs_.size()); ++j) {
      if (b.coeffs_[j].is_zero() || out[k - j].is_zero()) continue;
      acc -= b.coeffs_[j] * out[k - j];
    }
    out[k] = acc * inv;
  }
  return QSeries::from_coeffs(std::move(out), lead, lead + n, offset);
}

QSeries& QSeries::operator/=(const QSeries& other) {
  *this = *this / other;
  return *this;
}

QSeries QSeries::scaled(const YLaurent& c) const {
  if (c.is_zero()) return exact() ? QSeries() : big_o(trunc_, offset24_);
  QSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  s.canonicalize();
  return s;
}

// Preconditions:
//  * r a nonnegative integer: always defined (binary powering);
//  * r a negative integer: leading coefficient must be a monomial;
//  * r fractional: leading coefficient must be exactly 1 and the leading
//    q-power times r must land on the q^(1/24) lattice.
// Non-polynomial results of exact inputs need an explicit truncation.
QSeries QSeries::pow(const Rational& r) const {
  if (r == 0) return constant(1);
  if (is_integer(r) && r > 0) {
    unsigned long n = r.get_num().get_ui();
    QSeries result = constant(1);
    QSeries base = *this;
    while (n > 0) {
      if (n & 1UL) result *= base;
      n >>= 1UL;
      if (n > 0) base *= base;
    }
    return result;
  }
  if (coeffs_.empty()) {
    if (exact()) fail(ErrorCode::kDomain, "negative or fractional power of 0");
    fail(ErrorCode::kTruncation,
         "truncation underflow: power of a series with no known coefficient");
  }
  const YLaurent& lc = coeffs_.front();
  YLaurent lead_factor;
  if (is_integer(r)) {
    const long e = r.get_num().get_si();
    lead_factor = lc.monomial_inverse().pow(static_cast<unsigned>(-e));
  } else {
    if (lc != YLaurent(1)) {
      fail(ErrorCode::kDomain,
           "fractional power needs leading coefficient 1, got " +
               lc.to_string());
    }
    lead_factor = YLaurent(1);
  }
  const long total24 = 24L * lead_ + offset24_;
  Rational shifted = Rational(total24) * r;
  if (!is_integer(shifted)) {
    fail(ErrorCode::kDomain,
         "power leaves the q^(1/24) lattice: (q^(" +
             std::to_string(total24) + "/24))^" + r.get_str());
  }
  if (exact() && coeffs_.size() > 1) {
    fail(ErrorCode::kTruncation,
         "power is an infinite series; truncate the operand first");
  }
  const long new_total = shifted.get_num().get_si();
  const int n = exact() ? 1 : precision();
  const YLaurent inv = lc.monomial_inverse();
  std::vector<YLaurent> unit(static_cast<std::size_t>(n));
  for (int k = 0; k < n && k < static_cast<int>(coeffs_.size()); ++k) {
    unit[k] = coeffs_[k] * inv;
  }
  std::vector<YLaurent> g(static_cast<std::size_t>(n));
  g[0] = YLaurent(1);
  for (int m = 1; m < n; ++m) {
    YLaurent acc;
    for (int k = 1; k <= m; ++k) {
      if (unit[k].is_zero() || g[m - k].is_zero()) continue;
      Rational w = r * k - (m - k);
      if (w == 0) continue;
      acc += (unit[k] * g[m - k]) * w;
    }
    g[m] = acc * make_rational(1, m);
  }
  for (auto& c : g) c *= lead_factor;
  const int new_off = static_cast<int>(((new_total % 24) + 24) % 24);
  const int new_lead = static_cast<int>((new_total - new_off) / 24);
  return from_coeffs(std::move(g), new_lead, exact() ? kExact : new_lead + n,
                     new_off);
}

QSeries QSeries::log() const {
  if (offset24_ != 0 || lead_ != 0 || coeffs_.empty() ||
      coeffs_.front() != YLaurent(1)) {
    fail(ErrorCode::kDomain, "log needs constant term 1");
  }
  if (exact()) {
    if (coeffs_.size() == 1) return QSeries();
    fail(ErrorCode::kTruncation, "log of a polynomial is an infinite series");
  }
  const int n = trunc_;
  std::vector<YLaurent> f(static_cast<std::size_t>(n));
  for (int k = 0; k < n && k < static_cast<int>(coeffs_.size()); ++k) {
    f[k] = coeffs_[k];
  }
  std::vector<YLaurent> l(static_cast<std::size_t>(n));
  for (int m = 1; m < n; ++m) {
    YLaurent acc = f[m] * Rational(m);
    for (int k = 1; k < m; ++k) {
      if (l[k].is_zero() || f[m - k].is_zero()) continue;
      acc -= (l[k] * f[m - k]) * Rational(k);
    }
    l[m] = acc * make_rational(1, m);
  }
  return from_coeffs(std::move(l), 0, n);
}

QSeries QSeries::exp() const {
  if (offset24_ != 0 || (!coeffs_.empty() && lead_ < 1)) {
    fail(ErrorCode::kDomain, "exp needs constant term 0");
  }
  if (exact()) {
    if (coeffs_.empty()) return constant(1);
    fail(ErrorCode::kTruncation, "exp of a polynomial is an infinite series");
  }
  const int n = trunc_;
  std::vector<YLaurent> a(static_cast<std::size_t>(std::max(n, 1)));
  for (int k = 1; k < n; ++k) a[k] = coeff(k);
  std::vector<YLaurent> e(static_cast<std::size_t>(std::max(n, 1)));
  e[0] = YLaurent(1);
  for (int m = 1; m < n; ++m) {
    YLaurent acc;
    for (int k = 1; k <= m; ++k) {
      if (a[k].is_zero() || e[m - k].is_zero()) continue;
      acc += (a[k] * e[m - k]) * Rational(k);
    }
    e[m] = acc * make_rational(1, m);
  }
  return from_coeffs(std::move(e), 0, n);
}

QSeries QSeries::d_q() const {
  QSeries s = *this;
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
    const int n = lead_ + static_cast<int>(i);
    s.coeffs_[i] *= make_rational(24 * n + offset24_, 24);
  }
  s.canonicalize();
  return s;
}

QSeries QSeries::d_y() const {
  return map_coeffs([](const YLaurent& c) { return c.y_derivative(); });
}

QSeries QSeries::derivative() const {
  if (offset24_ != 0) {
    fail(ErrorCode::kDomain, "derivative of a fractional-offset series");
  }
  std::vector<YLaurent> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int n = lead_ + static_cast<int>(i);
    out.push_back(coeffs_[i] * Rational(n));
  }
  return from_coeffs(std::move(out), lead_ - 1,
                     exact() ? kExact : trunc_ - 1);
}

QSeries QSeries::substitute_power(int k) const {
  if (k < 1) fail(ErrorCode::kInvalidArgument, "q -> q^k needs k >= 1");
  std::vector<YLaurent> out;
  if (!coeffs_.empty()) {
    out.resize((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  }
  const long long total = (24LL * lead_ + offset24_) * k;
  const int off = static_cast<int>(((total % 24) + 24) % 24);
  const int lead = static_cast<int>((total - off) / 24);
  int trunc = kExact;
  if (!exact()) {
    // Known below q^(k*trunc) in absolute terms.
    trunc = static_cast<int>(floor_div(
        static_cast<int>((24LL * trunc_ + offset24_) * k - off + 23), 24));
  }
  if (coeffs_.empty()) return big_o(trunc, off);
  return from_coeffs(std::move(out), lead, trunc, off);
}

QSeries QSeries::shifted24(int shift24) const {
  QSeries s = *this;
  if (s.coeffs_.empty() && s.exact()) return s;
  s.offset24_ += shift24;
  s.canonicalize();
  return s;
}

QSeries QSeries::map_coeffs(
    const std::function<YLaurent(const YLaurent&)>& fn) const {
  QSeries s = *this;
  for (auto& c : s.coeffs_) c = fn(c);
  s.canonicalize();
  return s;
}

QSeries QSeries::compose(const QSeries& g) const {
  if (offset24_ != 0 || g.offset24_ != 0) {
    fail(ErrorCode::kDomain, "composition needs integral q-exponents");
  }
  if (g.coeffs_.empty() || g.lead_ < 1) {
    fail(ErrorCode::kDomain, "inner series must have valuation >= 1");
  }
  if (coeffs_.empty()) {
    if (exact()) return QSeries();
    return big_o(static_cast<int>(
        std::min<long long>(kExact, 1LL * trunc_ * g.lead_)));
  }
  const long long vg = g.lead_;
  long long target = kExact;
  if (!exact()) target = std::min<long long>(target, trunc_ * vg);
  if (!g.exact()) target = std::min<long long>(target, lead_ * vg + g.precision());
  const int t = clamp_trunc(target);
  if (t >= kExact && lead_ < 0) {
    fail(ErrorCode::kTruncation, "negative powers of an exact inner series");
  }
  // With lead < 0 the powers g^lead, g^(lead+1), ... start below q^0 and
  // need (1 - lead) * vg extra orders of g.
  const QSeries gt =
      lead_ < 0 && t < kExact ? g.truncated(clamp_trunc(t + (1LL - lead_) * vg)) : g.truncated(t);
  QSeries result = exact() ? QSeries() : big_o(t);
  QSeries power = gt.pow(Rational(lead_));
  if (t < kExact) power = power.truncated(t);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) result += power.scaled(coeffs_[i]);
    if (i + 1 < coeffs_.size()) {
      power *= gt;
      if (t < kExact) power = power.truncated(t);
    }
  }
  return result;
}

QSeries QSeries::compose_inverse() const {
  if (offset24_ != 0 || lead_ != 1 || coeffs_.front() != YLaurent(1)) {
    fail(ErrorCode::kDomain, "compositional inverse needs a = t + O(t^2)");
  }
  if (exact()) {
    if (coeffs_.size() == 1) return *this;
    fail(ErrorCode::kTruncation,
         "compositional inverse of a polynomial needs a truncation");
  }
  const int k = trunc_;
  // h = a/t, a unit; g_n = (1/n) [u^(n-1)] h^(-n).
  QSeries h = from_coeffs(coeffs_, 0, k - 1);
  std::vector<YLaurent> g(static_cast<std::size_t>(k));
  for (int n = 1; n < k; ++n) {
    QSeries hn = h.truncated(n).pow(Rational(-n));
    g[n] = hn.coeff(n - 1) * make_rational(1, n);
  }
  return from_coeffs(std::move(g), 0, k);
}

std::optional<int> QSeries::first_difference(const QSeries& other) const {
  const int trunc = std::min(trunc_, other.trunc_);
  if (offset24_ != other.offset24_) {
    if (coeffs_.empty() && other.coeffs_.empty()) return std::nullopt;
    return std::min(lead_, other.lead_);
  }
  const int lo = std::min(lead_, other.lead_);
  int hi = std::max(lead_ + static_cast<int>(coeffs_.size()),
                    other.lead_ + static_cast<int>(other.coeffs_.size()));
  hi = std::min(hi, trunc);
  for (int n = lo; n < hi; ++n) {
    if (coeff(n) != other.coeff(n)) return n;
  }
  return std::nullopt;
}

std::string QSeries::to_string(int max_terms) const {
  std::ostringstream os;
  if (offset24_ != 0) os << "q^(" << offset24_ << "/24)*(";
  int shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (shown > 0) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")*q^" << lead_ + static_cast<int>(i);
    ++shown;
  }
  if (shown == 0) os << "0";
  if (!exact()) os << " + O(q^" << trunc_ << ")";
  if (offset24_ != 0) os << ")";
  return os.str();
}

}  // namespace refsev
