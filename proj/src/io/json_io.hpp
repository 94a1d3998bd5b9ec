#pragma once

#include <string>

#include <json.hpp>

#include "ring/qseries.hpp"
#include "ring/ylaurent.hpp"
#include "verify/node_polynomial.hpp"

namespace refsev {

using Json = nlohmann::json;

// YLaurent as [[num, den, dexp], ...] with num/den as decimal strings.
Json to_json(const YLaurent& v);
YLaurent laurent_from(const Json& j);

// QSeries as {offset24, lead, trunc, coeffs}; trunc is null for exact series.
Json to_json(const QSeries& s);
QSeries qseries_from(const Json& j);

// ParamPoly as {vars, terms: [{mono, coeff}]}.
Json to_json(const ParamPoly& p);
ParamPoly param_poly_from(const Json& j);

// NodePolynomial with family, delta, mode, Q, N and its sample points.
Json to_json(const NodePolynomial& np);
NodePolynomial node_polynomial_from(const Json& j);

// Compact single-line text forms.
std::string laurent_to_json(const YLaurent& v);
YLaurent laurent_from_json(const std::string& text);

}  // namespace refsev
