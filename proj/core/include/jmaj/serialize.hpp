#pragma once

#include <string>

#include "jmaj/cone.hpp"
#include "jmaj/majorize.hpp"

namespace jm {

// JSON text forms of the core types. Round-trips preserve coordinates to
// full printed precision (17 significant digits). indent < 0 = compact.

std::string algebra_to_json(const Algebra& alg, int indent = -1);
Algebra algebra_from_json(const std::string& text);

std::string element_to_json(const Element& x, int indent = -1);
Element element_from_json(const std::string& text);

std::string coeff_to_json(const CoeffMatrix& a, int indent = -1);
CoeffMatrix coeff_from_json(const std::string& text);

std::string frame_to_json(const JordanFrame& f, int indent = -1);
JordanFrame frame_from_json(const std::string& text);

std::string verdict_to_json(const MajorizationVerdict& v, int indent = -1);
std::string ttransform_chain_to_json(const TTransformChain& c, int indent = -1);
std::string birkhoff_to_json(const BirkhoffDecomposition& d, int indent = -1);
std::string cone_path_to_json(const ConePath& p, int indent = -1);

}  // namespace jm
