#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caporaso/ch_recursion.hpp"

namespace refsev {

// Polynomial in a fixed list of integer parameters with YLaurent coefficients.
class ParamPoly {
 public:
  using Monomial = std::vector<int>;  // one exponent per variable

  ParamPoly() = default;
  explicit ParamPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static ParamPoly constant(std::vector<std::string> vars, const YLaurent& c);
  // The single variable vars[i].
  static ParamPoly variable(std::vector<std::string> vars, std::size_t i);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Monomial, YLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const YLaurent& c);
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scaled(const YLaurent& c) const;

  YLaurent eval(const std::vector<long>& point) const;
  // Total degree in variable i.
  int degree_in(std::size_t i) const;
  std::string to_string() const;

  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

 private:
  std::vector<std::string> vars_;
  std::map<Monomial, YLaurent> terms_;
};

// Families with a fitted shape for Q_delta on the region where it is
// polynomial:
//   P2      (d):      span {1, d, d^2}
//   Sigma   (c,m,d):  span {1, c, d, cd, m, md, md^2}
//   P1xP1   (c,d):    span {1, c + d, cd}
//   P11m    (m,d):    span {1, m, d, dm, d^2 m}
enum class NodeFamily { kP2, kSigma, kP1xP1, kP11m };

std::string to_string(NodeFamily f);
std::optional<NodeFamily> parse_node_family(const std::string& name);
std::vector<std::string> family_vars(NodeFamily f);
std::vector<ParamPoly> family_basis(NodeFamily f);
SurfaceBundle family_bundle(NodeFamily f, const std::vector<long>& point);
Polygon family_polygon(NodeFamily f, const std::vector<long>& point);

// Sample grid for one delta: training points come first in grid order, then
// the held-out points.
struct FitGrid {
  int span = -1;                    // extent beyond delta; -1 picks the family default
  std::vector<long> m_values{0, 1, 2};  // Sigma only
};

std::vector<std::vector<long>> sample_points(NodeFamily f, int delta, const FitGrid& grid);

struct NodePolynomial {
  NodeFamily family = NodeFamily::kP2;
  int delta = 0;
  YMode mode = YMode::kSymbolic;
  ParamPoly q;  // Q_delta
  ParamPoly n;  // N_delta
  std::vector<std::vector<long>> fitted_on;
  std::vector<std::vector<long>> validated_on;
  bool validated = true;
  std::string detail;  // first held-out mismatch, when any

  friend bool operator==(const NodePolynomial&, const NodePolynomial&) = default;
};

// Fits Q_0..Q_deltamax on their sample grids, checks each fit on its held-out
// points, and exponentiates to N_0..N_deltamax. A failed held-out check marks
// that entry (and all later N) as not validated.
std::vector<NodePolynomial> fit_node_polynomials(NodeFamily f, int delta_max, YMode mode,
                                                 CHTable& table, const FitGrid& grid = {});

}  // namespace refsev
