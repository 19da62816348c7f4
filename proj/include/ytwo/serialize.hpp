#ifndef YTWO_SERIALIZE_HPP
#define YTWO_SERIALIZE_HPP

// JSON encodings of scalars, matrices, Clifford elements, words and reports.

#include <nlohmann/json.hpp>

#include "ytwo/clifford.hpp"
#include "ytwo/spectool.hpp"

namespace ytwo {

using Json = nlohmann::ordered_json;

/// Sorted s-exponents.
inline Json to_json(const LaurentScalar& x) { return Json(x.exponents()); }

inline LaurentScalar laurent_from_json(const Json& j) {
  return LaurentScalar::from_exponents(j.get<std::vector<int>>());
}

/// [c0, c1] for c0 + c1 alpha.
inline Json to_json(const QEScalar& x) { return Json::array({to_json(x.c0()), to_json(x.c1())}); }

inline QEScalar qe_from_json(const Json& j) { return QEScalar(laurent_from_json(j.at(0)), laurent_from_json(j.at(1))); }

inline Json ff_to_json(const FiniteField& F, FFElement x) { return F.to_bits(x); }

template <class S>
Json to_json(const Vec<S>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

template <class S>
Json to_json(const RMatrix<S>& M) {
  Json out = Json::array();
  for (int i = 0; i < M.size(); ++i) out.push_back(to_json(M.row(i)));
  return out;
}

inline Json ff_to_json(const FiniteField& F, const FFMatrix& M) {
  Json out = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(F.to_bits(M(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

/// [[bitmask, scalar], ...] sorted by bitmask.
template <class S>
Json to_json(const CliffordElement<S>& x) {
  Json out = Json::array();
  for (const auto& [M, c] : x.terms()) out.push_back(Json::array({M, to_json(c)}));
  return out;
}

inline Json to_json(const Word& w) { return to_string(w); }

inline Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = std::string(status_name(c.status));
  j["expected"] = c.expected ? Json(*c.expected) : Json(nullptr);
  j["actual"] = c.actual ? Json(*c.actual) : Json(nullptr);
  j["detail"] = c.detail ? Json(*c.detail) : Json(nullptr);
  return j;
}

inline Json to_json(const GroupReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["field"] = r.field;
  j["orbit_reps"] = r.orbit_reps;
  j["group"] = r.group;
  j["expected_order"] = r.expected_order ? Json(*r.expected_order) : Json(nullptr);
  j["status"] = std::string(status_name(r.status()));
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace ytwo

#endif  // YTWO_SERIALIZE_HPP
