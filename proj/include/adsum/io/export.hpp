#pragma once

#include "adsum/asym/asym.hpp"
#include "adsum/euler/euler.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace adsum {

using Json = nlohmann::ordered_json;

// Reals travel as decimal strings so no digits are lost.
Real real_parse(const std::string& text);

Json to_json(const Jet2& j);
Jet2 jet_from_json(const Json& j);

Json to_json(const SingularSeries& s);
SingularSeries singular_series_from_json(const Json& j);

Json to_json(const AsymptoticPolynomial& p);
AsymptoticPolynomial polynomial_from_json(const Json& j);

// One row per polynomial: parameters then the coefficients of x log^d x.
std::string coefficient_csv(const std::vector<AsymptoticPolynomial>& polys);

}  // namespace adsum
