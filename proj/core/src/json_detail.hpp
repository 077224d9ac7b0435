#pragma once

// Internal json object builders shared by serialize.cpp and suites.cpp.
// nlohmann/json stays out of the public headers.

#include <json.hpp>

#include "jmaj/cone.hpp"
#include "jmaj/majorize.hpp"

namespace jm::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json algebra_json(const Algebra& alg);
Algebra algebra_from(const ordered_json& j);

ordered_json element_json(const Element& x);
Element element_from(const ordered_json& j);

ordered_json coeff_json(const CoeffMatrix& a);
CoeffMatrix coeff_from(const ordered_json& j);

ordered_json verdict_json(const MajorizationVerdict& v);

ordered_json matrix_json(const Eigen::MatrixXd& m);

}  // namespace jm::detail
