#include "jmaj/serialize.hpp"

#include "jmaj/errors.hpp"
#include "json_detail.hpp"

namespace jm {

namespace detail {

ordered_json algebra_json(const Algebra& alg) {
  ordered_json j;
  switch (alg.kind()) {
    case AlgebraKind::RealSym:
      j["kind"] = "realsym";
      j["n"] = alg.rank();
      break;
    case AlgebraKind::ComplexHerm:
      j["kind"] = "complexherm";
      j["n"] = alg.rank();
      break;
    case AlgebraKind::Spin:
      j["kind"] = "spin";
      j["d"] = alg.spin_dim();
      break;
    case AlgebraKind::DirectSum: {
      j["kind"] = "directsum";
      ordered_json parts = ordered_json::array();
      for (const Algebra& p : alg.parts()) parts.push_back(algebra_json(p));
      j["parts"] = parts;
      break;
    }
  }
  return j;
}

Algebra algebra_from(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "realsym") return Algebra::real_sym(j.at("n").get<int>());
  if (kind == "complexherm") return Algebra::complex_herm(j.at("n").get<int>());
  if (kind == "spin") return Algebra::spin(j.at("d").get<int>());
  if (kind == "directsum") {
    std::vector<Algebra> parts;
    for (const auto& p : j.at("parts")) parts.push_back(algebra_from(p));
    return Algebra::direct_sum(std::move(parts));
  }
  throw usage_error("algebra_from_json: unknown kind '" + kind + "'");
}

ordered_json element_json(const Element& x) {
  ordered_json j;
  j["algebra"] = algebra_json(x.algebra());
  j["coords"] = x.flat();
  return j;
}

Element element_from(const ordered_json& j) {
  const Algebra alg = algebra_from(j.at("algebra"));
  return Element::from_flat(alg, j.at("coords").get<std::vector<double>>());
}

ordered_json coeff_json(const CoeffMatrix& a) {
  ordered_json j;
  j["n"] = a.size();
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(a.size()) * a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < a.size(); ++k) entries.push_back(a(i, k));
  j["entries"] = entries;
  return j;
}

CoeffMatrix coeff_from(const ordered_json& j) {
  const int n = j.at("n").get<int>();
  const auto entries = j.at("entries").get<std::vector<double>>();
  if (entries.size() != static_cast<size_t>(n) * n)
    throw usage_error("coeff_from_json: entry count does not match n");
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = entries[static_cast<size_t>(i) * n + k];
  return CoeffMatrix(m);
}

ordered_json verdict_json(const MajorizationVerdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  std::vector<double> slacks(v.slacks.data(), v.slacks.data() + v.slacks.size());
  j["slacks"] = slacks;
  j["trace_gap"] = v.trace_gap;
  j["tol"] = v.tol_used;
  return j;
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

namespace {

std::string dump(const detail::ordered_json& j, int indent) { return j.dump(indent); }

detail::ordered_json parse(const std::string& text) {
  return detail::ordered_json::parse(text);
}

}  // namespace

std::string algebra_to_json(const Algebra& alg, int indent) {
  return dump(detail::algebra_json(alg), indent);
}

Algebra algebra_from_json(const std::string& text) { return detail::algebra_from(parse(text)); }

std::string element_to_json(const Element& x, int indent) {
  return dump(detail::element_json(x), indent);
}

Element element_from_json(const std::string& text) { return detail::element_from(parse(text)); }

std::string coeff_to_json(const CoeffMatrix& a, int indent) {
  return dump(detail::coeff_json(a), indent);
}

CoeffMatrix coeff_from_json(const std::string& text) { return detail::coeff_from(parse(text)); }

std::string frame_to_json(const JordanFrame& f, int indent) {
  detail::ordered_json arr = detail::ordered_json::array();
  for (const Element& c : f.idempotents()) arr.push_back(detail::element_json(c));
  return dump(arr, indent);
}

JordanFrame frame_from_json(const std::string& text) {
  const auto arr = parse(text);
  if (!arr.is_array() || arr.empty()) throw usage_error("frame_from_json: expected a nonempty array");
  std::vector<Element> idems;
  for (const auto& e : arr) idems.push_back(detail::element_from(e));
  const Algebra alg = idems.front().algebra();
  return JordanFrame(alg, std::move(idems));
}

std::string verdict_to_json(const MajorizationVerdict& v, int indent) {
  return dump(detail::verdict_json(v), indent);
}

std::string ttransform_chain_to_json(const TTransformChain& c, int indent) {
  detail::ordered_json j;
  detail::ordered_json factors = detail::ordered_json::array();
  for (const Eigen::MatrixXd& f : c.factors) factors.push_back(detail::matrix_json(f));
  j["factors"] = factors;
  j["product"] = detail::matrix_json(c.product);
  j["t_count"] = c.t_count;
  return dump(j, indent);
}

std::string birkhoff_to_json(const BirkhoffDecomposition& d, int indent) {
  detail::ordered_json arr = detail::ordered_json::array();
  for (const BirkhoffTerm& t : d.terms) {
    detail::ordered_json j;
    j["weight"] = t.weight;
    j["permutation"] = t.permutation;
    arr.push_back(j);
  }
  return dump(arr, indent);
}

std::string cone_path_to_json(const ConePath& p, int indent) {
  detail::ordered_json arr = detail::ordered_json::array();
  for (const PathSample& s : p.samples()) {
    detail::ordered_json j;
    j["t"] = s.t;
    j["point"] = detail::element_json(s.point);
    j["derivative"] = detail::element_json(s.derivative);
    arr.push_back(j);
  }
  return dump(arr, indent);
}

}  // namespace jm
