#include "verify/node_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ring/error.hpp"
#include "ring/linalg.hpp"
#include "ring/qseries.hpp"

namespace refsev {

ParamPoly ParamPoly::constant(std::vector<std::string> vars, const YLaurent& c) {
  ParamPoly p(std::move(vars));
  p.add_term(Monomial(p.vars_.size(), 0), c);
  return p;
}

ParamPoly ParamPoly::variable(std::vector<std::string> vars, std::size_t i) {
  ParamPoly p(std::move(vars));
  Monomial mono(p.vars_.size(), 0);
  mono.at(i) = 1;
  p.add_term(mono, 1);
  return p;
}

void ParamPoly::add_term(const Monomial& mono, const YLaurent& c) {
  if (mono.size() != vars_.size()) fail(ErrorCode::kInternal, "monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  r += o;
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r(vars_.empty() ? o.vars_ : vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

ParamPoly ParamPoly::scaled(const YLaurent& c) const {
  ParamPoly r(vars_);
  for (const auto& [mono, v] : terms_) r.add_term(mono, v * c);
  return r;
}

YLaurent ParamPoly::eval(const std::vector<long>& point) const {
  if (point.size() != vars_.size()) fail(ErrorCode::kInvalidArgument, "point arity mismatch");
  YLaurent total;
  for (const auto& [mono, c] : terms_) {
    Integer w = 1;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(point[i]).get_mpz_t(), static_cast<unsigned long>(mono[i]));
      w *= p;
    }
    total += c * Rational(w);
  }
  return total;
}

int ParamPoly::degree_in(std::size_t i) const {
  int deg = 0;
  for (const auto& [mono, c] : terms_) deg = std::max(deg, mono.at(i));
  return deg;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      os << "*" << vars_[i];
      if (mono[i] > 1) os << "^" << mono[i];
    }
  }
  return os.str();
}

std::string to_string(NodeFamily f) {
  switch (f) {
    case NodeFamily::kP2:
      return "p2";
    case NodeFamily::kSigma:
      return "sigma";
    case NodeFamily::kP1xP1:
      return "p1xp1";
    case NodeFamily::kP11m:
      return "p11m";
  }
  return "?";
}

std::optional<NodeFamily> parse_node_family(const std::string& name) {
  for (NodeFamily f : {NodeFamily::kP2, NodeFamily::kSigma, NodeFamily::kP1xP1, NodeFamily::kP11m}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string> family_vars(NodeFamily f) {
  switch (f) {
    case NodeFamily::kP2:
      return {"d"};
    case NodeFamily::kSigma:
      return {"c", "m", "d"};
    case NodeFamily::kP1xP1:
      return {"c", "d"};
    case NodeFamily::kP11m:
      return {"m", "d"};
  }
  return {};
}

namespace {

ParamPoly mono_poly(NodeFamily f, std::vector<int> exps) {
  ParamPoly p(family_vars(f));
  p.add_term(exps, 1);
  return p;
}

}  // namespace

std::vector<ParamPoly> family_basis(NodeFamily f) {
  switch (f) {
    case NodeFamily::kP2:
      return {mono_poly(f, {0}), mono_poly(f, {1}), mono_poly(f, {2})};
    case NodeFamily::kSigma:
      // variables (c, m, d)
      return {mono_poly(f, {0, 0, 0}), mono_poly(f, {1, 0, 0}), mono_poly(f, {0, 0, 1}),
              mono_poly(f, {1, 0, 1}), mono_poly(f, {0, 1, 0}), mono_poly(f, {0, 1, 1}),
              mono_poly(f, {0, 1, 2})};
    case NodeFamily::kP1xP1:
      return {mono_poly(f, {0, 0}), mono_poly(f, {1, 0}) + mono_poly(f, {0, 1}),
              mono_poly(f, {1, 1})};
    case NodeFamily::kP11m:
      // variables (m, d)
      return {mono_poly(f, {0, 0}), mono_poly(f, {1, 0}), mono_poly(f, {0, 1}),
              mono_poly(f, {1, 1}), mono_poly(f, {1, 2})};
  }
  return {};
}

SurfaceBundle family_bundle(NodeFamily f, const std::vector<long>& p) {
  switch (f) {
    case NodeFamily::kP2:
      return SurfaceBundle::p2(p.at(0));
    case NodeFamily::kSigma:
      return SurfaceBundle::sigma(p.at(1), p.at(0), p.at(2));
    case NodeFamily::kP1xP1:
      return SurfaceBundle::sigma(0, p.at(0), p.at(1));
    case NodeFamily::kP11m:
      return SurfaceBundle::p11m(p.at(0), p.at(1));
  }
  fail(ErrorCode::kInternal, "unknown family");
}

Polygon family_polygon(NodeFamily f, const std::vector<long>& p) {
  return family_bundle(f, p).polygon();
}

std::vector<std::vector<long>> sample_points(NodeFamily f, int delta, const FitGrid& grid) {
  std::vector<std::vector<long>> pts;
  const long lo = std::max(delta, 1);
  switch (f) {
    case NodeFamily::kP2: {
      const int span = grid.span < 0 ? 5 : grid.span;
      for (long d = lo; d <= delta + span; ++d) pts.push_back({d});
      break;
    }
    case NodeFamily::kSigma: {
      const int span = grid.span < 0 ? 3 : grid.span;
      for (long m : grid.m_values) {
        for (long c = lo; c <= delta + span; ++c) {
          for (long d = lo; d <= delta + span; ++d) pts.push_back({c, m, d});
        }
      }
      break;
    }
    case NodeFamily::kP1xP1: {
      const int span = grid.span < 0 ? 3 : grid.span;
      for (long c = lo; c <= delta + span; ++c) {
        for (long d = lo; d <= delta + span; ++d) pts.push_back({c, d});
      }
      break;
    }
    case NodeFamily::kP11m: {
      const int span = grid.span < 0 ? 3 : grid.span;
      for (long m = lo; m <= delta + span; ++m) {
        for (long d = lo; d <= delta + span; ++d) pts.push_back({m, d});
      }
      break;
    }
  }
  return pts;
}

namespace {

// Q^{delta}(point) for delta <= upto, from the logarithm of sum_j N^j t^j.
class LogData {
 public:
  LogData(NodeFamily f, YMode mode, CHTable& table) : f_(f), mode_(mode), table_(table) {}

  YLaurent q_value(const std::vector<long>& point, int delta) {
    auto& vals = n_values_[point];
    const Polygon p = family_polygon(f_, point);
    while (static_cast<int>(vals.size()) <= delta) {
      vals.push_back(table_.severi_degree(p, static_cast<int>(vals.size()), mode_));
    }
    std::vector<YLaurent> head(vals.begin(), vals.begin() + delta + 1);
    return QSeries::from_coeffs(std::move(head), 0, delta + 1).log().coeff(delta);
  }

 private:
  NodeFamily f_;
  YMode mode_;
  CHTable& table_;
  std::map<std::vector<long>, std::vector<YLaurent>> n_values_;
};

std::string point_string(const std::vector<std::string>& vars, const std::vector<long>& pt) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << vars[i] << "=" << pt[i];
  return os.str();
}

Rational basis_value(const ParamPoly& b, const std::vector<long>& pt) {
  return b.eval(pt).coeff(0);
}

}  // namespace

std::vector<NodePolynomial> fit_node_polynomials(NodeFamily f, int delta_max, YMode mode,
                                                 CHTable& table, const FitGrid& grid) {
  if (delta_max < 0) fail(ErrorCode::kInvalidArgument, "delta_max must be >= 0");
  const auto vars = family_vars(f);
  const auto basis = family_basis(f);
  LogData data(f, mode, table);
  std::vector<NodePolynomial> out;

  NodePolynomial zero;
  zero.family = f;
  zero.delta = 0;
  zero.mode = mode;
  zero.q = ParamPoly(vars);
  zero.n = ParamPoly::constant(vars, 1);
  out.push_back(zero);

  bool all_valid = true;
  for (int delta = 1; delta <= delta_max; ++delta) {
    NodePolynomial np;
    np.family = f;
    np.delta = delta;
    np.mode = mode;
    const auto pts = sample_points(f, delta, grid);

    RationalMatrix a;
    std::vector<YLaurent> b;
    std::size_t next = 0;
    for (; next < pts.size() && a.size() < basis.size(); ++next) {
      std::vector<Rational> row;
      for (const auto& bp : basis) row.push_back(basis_value(bp, pts[next]));
      RationalMatrix trial = a;
      trial.push_back(row);
      if (rank(trial) == trial.size()) {
        a.push_back(std::move(row));
        b.push_back(data.q_value(pts[next], delta));
        np.fitted_on.push_back(pts[next]);
      }
    }
    if (a.size() < basis.size()) {
      fail(ErrorCode::kInvalidArgument,
           "insufficient samples to fit Q_" + std::to_string(delta) + " for " + to_string(f));
    }
    const auto x = solve_exact(a, b);
    if (!x) fail(ErrorCode::kInternal, "square fit system reported inconsistent");
    np.q = ParamPoly(vars);
    for (std::size_t j = 0; j < basis.size(); ++j) np.q += basis[j].scaled((*x)[j]);

    for (const auto& pt : pts) {
      if (std::find(np.fitted_on.begin(), np.fitted_on.end(), pt) != np.fitted_on.end()) continue;
      np.validated_on.push_back(pt);
      const YLaurent want = data.q_value(pt, delta);
      const YLaurent got = np.q.eval(pt);
      if (got != want && np.validated) {
        np.validated = false;
        np.detail = "Q_" + std::to_string(delta) + " mismatch at " + point_string(vars, pt) +
                    ": fit " + got.to_string() + ", engine " + want.to_string();
      }
    }
    if (np.validated_on.empty()) {
      np.validated = false;
      np.detail = "no held-out points";
    }
    if (!all_valid && np.validated) {
      np.validated = false;
      np.detail = "depends on an unvalidated lower Q";
    }
    all_valid = all_valid && np.validated;
    out.push_back(std::move(np));
  }

  // n N_n = sum_{k=1}^n k Q_k N_{n-k}
  for (int n = 1; n <= delta_max; ++n) {
    ParamPoly acc(vars);
    for (int k = 1; k <= n; ++k) {
      acc += (out[static_cast<std::size_t>(k)].q * out[static_cast<std::size_t>(n - k)].n)
                 .scaled(YLaurent(make_rational(k)));
    }
    out[static_cast<std::size_t>(n)].n = acc.scaled(YLaurent(make_rational(1, n)));
  }
  return out;
}

}  // namespace refsev
