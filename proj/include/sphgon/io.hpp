#pragma once

// JSON serialization of solution documents and target descriptors.  Angles
// and exponents travel as exact rational strings; floating-point data uses
// the library's shortest round-trip formatting, so parse -> dump -> parse is
// byte-stable.

#include <nlohmann/json.hpp>

#include <sphgon/angles.hpp>
#include <sphgon/feasibility.hpp>
#include <sphgon/rational.hpp>
#include <sphgon/wronski.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphgon::io {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

inline const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + name);
  return *it;
}

inline json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex values are [re, im] number pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json poly_to_json(const Poly& p) {
  json coeffs = json::array();
  for (const Complex& c : p.coefficients()) coeffs.push_back(complex_to_json(c));
  return coeffs;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomials are arrays of [re, im] pairs");
  std::vector<Complex> coeffs;
  for (const json& c : j) coeffs.push_back(complex_from_json(c));
  return Poly(std::move(coeffs));
}

// Everything needed to rebuild the critical polynomial and the angle data of
// a solved equation: corner positions, the angle signature, and the degrees.
struct TargetSpec {
  std::vector<Complex> corners;
  AngleSignature signature;
  DegreeSolution degrees;

  std::vector<int> root_multiplicities() const {
    std::vector<int> mults(signature.interior.size());
    for (size_t j = 0; j < mults.size(); ++j) mults[j] = signature.interior[j] - 1;
    return mults;
  }
};

inline json target_to_json(const TargetSpec& target) {
  json corners = json::array();
  for (Complex c : target.corners) corners.push_back(complex_to_json(c));
  return json{{"corners", corners},
              {"interiorAngles", target.signature.interior},
              {"alpha0", sphgon::to_string(target.signature.alpha0)},
              {"alphaInf", sphgon::to_string(target.signature.alpha_inf)},
              {"p", target.degrees.p},
              {"q", target.degrees.q},
              {"p0", target.degrees.p0},
              {"q0", target.degrees.q0},
              {"alpha", sphgon::to_string(target.degrees.alpha)},
              {"caseId", target.degrees.case_id}};
}

inline TargetSpec target_from_json(const json& j) {
  TargetSpec target;
  for (const json& c : field(j, "corners")) target.corners.push_back(complex_from_json(c));
  target.signature.interior = field(j, "interiorAngles").get<std::vector<int>>();
  target.signature.alpha0 = parse_rational(field(j, "alpha0").get<std::string>());
  target.signature.alpha_inf = parse_rational(field(j, "alphaInf").get<std::string>());
  target.degrees.p = field(j, "p").get<int>();
  target.degrees.q = field(j, "q").get<int>();
  target.degrees.p0 = field(j, "p0").get<int>();
  target.degrees.q0 = field(j, "q0").get<int>();
  target.degrees.alpha = parse_rational(field(j, "alpha").get<std::string>());
  target.degrees.case_id = j.value("caseId", 0);
  return target;
}

struct SolutionDocument {
  double alpha = 0.0;
  Poly P;
  Poly Q;
  double residual = 0.0;
  bool is_real = false;
  Classification realized;
  unsigned long long seed = 0;
  SolverConfig tolerances;
  std::optional<TargetSpec> target;
};

inline json solution_to_json(const SolutionDocument& doc) {
  json j{{"schemaVersion", kSchemaVersion},
         {"alpha", doc.alpha},
         {"P", poly_to_json(doc.P)},
         {"Q", poly_to_json(doc.Q)},
         {"residual", doc.residual},
         {"isReal", doc.is_real},
         {"realized",
          json{{"p", doc.realized.degree_p},
               {"q", doc.realized.degree_q},
               {"p0", doc.realized.order_p0},
               {"q0", doc.realized.order_q0},
               {"alpha0", doc.realized.alpha0},
               {"alphaInf", doc.realized.alpha_inf},
               {"ambiguous", doc.realized.ambiguous}}},
         {"seed", doc.seed},
         {"tolerances",
          json{{"residual", doc.tolerances.residual_tol},
               {"realness", doc.tolerances.realness_tol},
               {"dedup", doc.tolerances.dedup_tol}}}};
  if (doc.target.has_value()) j["target"] = target_to_json(*doc.target);
  return j;
}

inline SolutionDocument solution_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("solution documents are JSON objects");
  const int version = field(j, "schemaVersion").get<int>();
  if (version != kSchemaVersion)
    throw std::invalid_argument("unsupported schemaVersion " + std::to_string(version));
  SolutionDocument doc;
  doc.alpha = field(j, "alpha").get<double>();
  doc.P = poly_from_json(field(j, "P"));
  doc.Q = poly_from_json(field(j, "Q"));
  doc.residual = field(j, "residual").get<double>();
  doc.is_real = field(j, "isReal").get<bool>();
  const json& realized = field(j, "realized");
  doc.realized.degree_p = field(realized, "p").get<int>();
  doc.realized.degree_q = field(realized, "q").get<int>();
  doc.realized.order_p0 = field(realized, "p0").get<int>();
  doc.realized.order_q0 = field(realized, "q0").get<int>();
  doc.realized.alpha0 = field(realized, "alpha0").get<double>();
  doc.realized.alpha_inf = field(realized, "alphaInf").get<double>();
  doc.realized.ambiguous = realized.value("ambiguous", false);
  doc.seed = field(j, "seed").get<unsigned long long>();
  const json& tol = field(j, "tolerances");
  doc.tolerances.residual_tol = field(tol, "residual").get<double>();
  doc.tolerances.realness_tol = field(tol, "realness").get<double>();
  doc.tolerances.dedup_tol = field(tol, "dedup").get<double>();
  if (j.contains("target")) doc.target = target_from_json(j["target"]);
  return doc;
}

// Accepts a single solution object, a bare array of them, or an object with
// a "solutions" array (the solve subcommand's output shape).
inline std::vector<SolutionDocument> solutions_from_json(const json& j) {
  std::vector<SolutionDocument> docs;
  if (j.is_array()) {
    for (const json& item : j) docs.push_back(solution_from_json(item));
  } else if (j.is_object() && j.contains("solutions")) {
    for (const json& item : j["solutions"]) docs.push_back(solution_from_json(item));
  } else {
    docs.push_back(solution_from_json(j));
  }
  return docs;
}

inline PolynomialPair pair_of(const SolutionDocument& doc) {
  return PolynomialPair{doc.P, doc.Q, doc.alpha};
}

}  // namespace sphgon::io
