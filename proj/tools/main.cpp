// Command line for the spherical-polygon toolkit.
//
// Subcommands:
//   feasible   decide whether an angle signature is realizable
//   count      count chord diagrams (Kostka numbers) or odd diagrams
//   enumerate  list the diagrams themselves
//   solve      compute the full fiber of polynomial pairs for a target
//   verify     re-check solution documents independently
//   monodromy  build the associated second-order equation, integrate loop
//              monodromy, and run the unitarizability check
//
// Structured JSON goes to stdout; a short human summary goes to stderr.
// Exit codes: 0 success, 1 mathematically negative answer (infeasible
// signature, failed verification, unitarizability ruled out), 2 numeric
// failure, 3 validation error (bad flags, malformed input).
//
// Default tolerances can be overridden by the environment variables
// SPHGON_RESIDUAL_TOL, SPHGON_REALNESS_TOL, SPHGON_DEDUP_TOL; explicit
// flags override the environment.

#include "CLI11.hpp"

#include <sphgon/chords.hpp>
#include <sphgon/feasibility.hpp>
#include <sphgon/fuchsian.hpp>
#include <sphgon/io.hpp>
#include <sphgon/monodromy.hpp>
#include <sphgon/odd_diagrams.hpp>
#include <sphgon/tableau.hpp>
#include <sphgon/wronski.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using sphgon::AngleSignature;
using sphgon::AxisMultiplicities;
using sphgon::BigInt;
using sphgon::Classification;
using sphgon::Complex;
using sphgon::DegreeSolution;
using sphgon::FeasibilityReport;
using sphgon::FuchsianEquation;
using sphgon::Loop;
using sphgon::Matrix2cd;
using sphgon::MonodromyResult;
using sphgon::MultiplicityVector;
using sphgon::PathPiece;
using sphgon::Poly;
using sphgon::PolynomialPair;
using sphgon::SolverConfig;
using sphgon::UnitarizabilityVerdict;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitValidation = 3;

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

std::optional<double> env_double(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0')
    throw std::invalid_argument(std::string(name) + " is not a number: " + raw);
  return value;
}

struct ToleranceFlags {
  std::optional<double> residual;
  std::optional<double> realness;
  std::optional<double> dedup;

  void attach(CLI::App* cmd) {
    cmd->add_option("--residual-tol", residual, "relative residual acceptance threshold");
    cmd->add_option("--realness-tol", realness, "imaginary-part threshold for realness");
    cmd->add_option("--dedup-tol", dedup, "chart distance identifying two solutions");
  }

  void apply(SolverConfig& config) const {
    if (const auto v = env_double("SPHGON_RESIDUAL_TOL")) config.residual_tol = *v;
    if (const auto v = env_double("SPHGON_REALNESS_TOL")) config.realness_tol = *v;
    if (const auto v = env_double("SPHGON_DEDUP_TOL")) config.dedup_tol = *v;
    if (residual) config.residual_tol = *residual;
    if (realness) config.realness_tol = *realness;
    if (dedup) config.dedup_tol = *dedup;
  }
};

json signature_json(const AngleSignature& sig) {
  return json{{"alpha0", sphgon::to_string(sig.alpha0)},
              {"interior", sig.interior},
              {"alphaInf", sphgon::to_string(sig.alpha_inf)}};
}

json degree_solution_json(const DegreeSolution& d) {
  return json{{"p", d.p},         {"q", d.q},
              {"p0", d.p0},       {"q0", d.q0},
              {"alpha", sphgon::to_string(d.alpha)},
              {"caseId", d.case_id},
              {"canonical", d.canonical()}};
}

json bigint_json(const BigInt& value) {
  // Counts small enough for an exact JSON number stay numeric; anything
  // beyond 2^53 is emitted as a decimal string to avoid silent rounding.
  static const BigInt limit = BigInt(1) << 53;
  if (value <= limit) return value.convert_to<long long>();
  return value.str();
}

json matrix_json(const Matrix2cd& m) {
  return json::array({json::array({sphgon::io::complex_to_json(m(0, 0)),
                                   sphgon::io::complex_to_json(m(0, 1))}),
                      json::array({sphgon::io::complex_to_json(m(1, 0)),
                                   sphgon::io::complex_to_json(m(1, 1))})});
}

json read_json_file(const std::string& path) {
  if (path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  if (!in.is_open()) throw std::invalid_argument("cannot open input file: " + path);
  return json::parse(in);
}

AngleSignature make_signature(const std::string& alpha0, const std::vector<int>& interior,
                              const std::string& alpha_inf) {
  AngleSignature sig;
  sig.alpha0 = sphgon::parse_rational(alpha0);
  sig.interior = interior;
  sig.alpha_inf = sphgon::parse_rational(alpha_inf);
  return sig;
}

AxisMultiplicities make_axis(const std::vector<int>& slots) {
  if (slots.size() < 2)
    throw std::invalid_argument(
        "odd-diagram input needs at least the two axis counts: m0,...,mInf");
  AxisMultiplicities axis;
  axis.m0 = slots.front();
  axis.interior.assign(slots.begin() + 1, slots.end() - 1);
  axis.m_inf = slots.back();
  return axis;
}

// ---------------------------------------------------------------- feasible

int run_feasible(const std::string& alpha0, const std::vector<int>& interior,
                 const std::string& alpha_inf) {
  const AngleSignature sig = make_signature(alpha0, interior, alpha_inf);
  const FeasibilityReport report = sphgon::check_angles(sig);

  json solutions = json::array();
  for (const DegreeSolution& d : report.solutions) solutions.push_back(degree_solution_json(d));
  const json out{{"schemaVersion", sphgon::io::kSchemaVersion},
                 {"signature", signature_json(sig)},
                 {"sigma", report.sigma_value},
                 {"branch", std::string(1, report.branch)},
                 {"feasible", report.feasible},
                 {"reason", report.reason},
                 {"exponents",
                  json{{"alphaPrime", sphgon::to_string(report.exponents.alpha_prime)},
                       {"alphaDoublePrime", sphgon::to_string(report.exponents.alpha_double_prime)},
                       {"gaussBonnetOk", report.exponents.gauss_bonnet_ok}}},
                 {"solutions", solutions}};
  emit(out);

  if (report.feasible)
    std::cerr << "feasible (branch " << report.branch << "): " << report.solutions.size()
              << " degree solution(s)\n";
  else
    std::cerr << "infeasible: " << report.reason << "\n";
  return report.feasible ? kExitOk : kExitNegative;
}

// ------------------------------------------------------------------- count

int run_count(const std::vector<int>& odd_slots, const std::vector<int>& mult) {
  json out{{"schemaVersion", sphgon::io::kSchemaVersion}};
  if (!odd_slots.empty()) {
    const AxisMultiplicities axis = make_axis(odd_slots);
    const BigInt count = sphgon::odd_count_formula(axis);
    const sphgon::KostkaReduction red = sphgon::reduction_params(axis);
    out["mode"] = "odd";
    out["m0"] = axis.m0;
    out["interior"] = axis.interior;
    out["mInf"] = axis.m_inf;
    out["count"] = bigint_json(count);
    out["reduction"] = json{{"mu", red.mu},
                            {"crossingCountEven", red.crossing_count_even},
                            {"k", red.k},
                            {"r", red.r},
                            {"s", red.s}};
    emit(out);
    std::cerr << "odd diagram count: " << count.str() << "\n";
  } else {
    sphgon::validate_multiplicities(mult);
    const BigInt count = sphgon::kostka(mult);
    out["mode"] = "kostka";
    out["multiplicities"] = mult;
    out["count"] = bigint_json(count);
    emit(out);
    std::cerr << "chord diagram count: " << count.str() << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- enumerate

int run_enumerate(const std::vector<int>& odd_slots, const std::vector<int>& mult) {
  json out{{"schemaVersion", sphgon::io::kSchemaVersion}};
  json diagrams = json::array();
  if (!odd_slots.empty()) {
    const AxisMultiplicities axis = make_axis(odd_slots);
    const auto all = sphgon::enumerate_odd_diagrams(axis);
    for (const sphgon::OddDiagram& d : all) {
      json arcs = json::array();
      for (const sphgon::Arc& a : d.diagram.arcs) arcs.push_back(json::array({a.first, a.second}));
      diagrams.push_back(json{{"arcs", arcs}, {"crossingArcs", d.crossing_arcs}});
    }
    out["mode"] = "odd";
    out["m0"] = axis.m0;
    out["interior"] = axis.interior;
    out["mInf"] = axis.m_inf;
  } else {
    sphgon::validate_multiplicities(mult);
    const auto all = sphgon::enumerate_diagrams(mult);
    for (const sphgon::ChordDiagram& d : all) {
      json arcs = json::array();
      for (const sphgon::Arc& a : d.arcs) arcs.push_back(json::array({a.first, a.second}));
      diagrams.push_back(json{{"arcs", arcs}});
    }
    out["mode"] = "chords";
    out["multiplicities"] = mult;
  }
  out["count"] = diagrams.size();
  out["diagrams"] = diagrams;
  emit(out);
  std::cerr << diagrams.size() << " diagram(s)\n";
  return kExitOk;
}

// ------------------------------------------------------------------- solve

DegreeSolution pick_degrees(const FeasibilityReport& report, const std::vector<int>& requested) {
  if (!requested.empty()) {
    if (requested.size() != 4)
      throw std::invalid_argument("--degrees expects p,q,p0,q0");
    for (const DegreeSolution& d : report.solutions)
      if (d.p == requested[0] && d.q == requested[1] && d.p0 == requested[2] &&
          d.q0 == requested[3])
        return d;
    throw std::invalid_argument("--degrees does not match any solution of the degree system");
  }
  for (const DegreeSolution& d : report.solutions)
    if (d.canonical()) return d;
  return report.solutions.front();
}

int run_solve(const std::vector<double>& corners, const std::vector<int>& interior,
              const std::string& alpha0, const std::string& alpha_inf,
              unsigned long long seed, const std::vector<int>& requested_degrees,
              const std::string& out_path, const ToleranceFlags& flags) {
  const AngleSignature sig = make_signature(alpha0, interior, alpha_inf);
  const FeasibilityReport report = sphgon::check_angles(sig);
  if (!report.feasible) {
    const json out{{"schemaVersion", sphgon::io::kSchemaVersion},
                   {"signature", signature_json(sig)},
                   {"feasible", false},
                   {"reason", report.reason},
                   {"solutions", json::array()}};
    emit(out);
    std::cerr << "infeasible: " << report.reason << "\n";
    return kExitNegative;
  }
  if (corners.size() != interior.size())
    throw std::invalid_argument("--corners needs one position per interior angle");

  const DegreeSolution degrees = pick_degrees(report, requested_degrees);
  SolverConfig config;
  config.rng_seed = seed;
  flags.apply(config);

  sphgon::io::TargetSpec target;
  target.corners.assign(corners.begin(), corners.end());
  target.signature = sig;
  target.degrees = degrees;

  const Poly critical =
      sphgon::critical_polynomial(target.corners, target.root_multiplicities(), degrees);
  const sphgon::WronskiFiber fiber = sphgon::solve_wronski(critical, degrees, config);

  json solutions = json::array();
  long real_count = 0;
  double max_residual = 0.0;
  bool residuals_ok = true;
  for (const sphgon::SolutionReport& s : fiber.solutions) {
    sphgon::io::SolutionDocument doc;
    doc.alpha = s.pair.alpha;
    doc.P = s.pair.P;
    doc.Q = s.pair.Q;
    doc.residual = s.residual;
    doc.is_real = s.is_real;
    doc.realized = s.realized;
    doc.seed = seed;
    doc.tolerances = config;
    doc.target = target;
    solutions.push_back(sphgon::io::solution_to_json(doc));
    real_count += s.is_real ? 1 : 0;
    max_residual = std::max(max_residual, s.residual);
    residuals_ok = residuals_ok && s.residual <= config.residual_tol;
  }

  const json out{{"schemaVersion", sphgon::io::kSchemaVersion},
                 {"expected", fiber.expected},
                 {"found", static_cast<long>(fiber.solutions.size())},
                 {"complete", fiber.complete},
                 {"warning", fiber.warning},
                 {"realCount", real_count},
                 {"seed", seed},
                 {"tolerances",
                  json{{"residual", config.residual_tol},
                       {"realness", config.realness_tol},
                       {"dedup", config.dedup_tol}}},
                 {"target", sphgon::io::target_to_json(target)},
                 {"solutions", solutions}};
  emit(out);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file.is_open()) throw std::invalid_argument("cannot open output file: " + out_path);
    file << out.dump(2) << "\n";
  }

  std::cerr << "found " << fiber.solutions.size() << "/" << fiber.expected << " solutions, "
            << real_count << " real, max residual " << format_double(max_residual) << "\n";
  if (!fiber.warning.empty()) std::cerr << "warning: " << fiber.warning << "\n";
  return (fiber.complete && residuals_ok) ? kExitOk : kExitNumeric;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& input_path, const ToleranceFlags& flags) {
  const json input = read_json_file(input_path);
  const auto docs = sphgon::io::solutions_from_json(input);
  if (docs.empty()) throw std::invalid_argument("no solution documents in input");

  json results = json::array();
  bool all_ok = true;
  for (size_t i = 0; i < docs.size(); ++i) {
    const sphgon::io::SolutionDocument& doc = docs[i];
    if (!doc.target.has_value())
      throw std::invalid_argument("solution document " + std::to_string(i) +
                                  " lacks a target block");
    SolverConfig config = doc.tolerances;
    flags.apply(config);

    const Poly critical = sphgon::critical_polynomial(
        doc.target->corners, doc.target->root_multiplicities(), doc.target->degrees);
    const PolynomialPair pair = sphgon::io::pair_of(doc);
    const sphgon::VerificationReport check = sphgon::verify_solution(pair, critical, config);
    const sphgon::PairAdmissibility adm = sphgon::pair_admissibility(pair, config);
    const Classification realized = sphgon::classify_solution(pair, config);

    const bool degrees_match = realized.degree_p == doc.realized.degree_p &&
                               realized.degree_q == doc.realized.degree_q &&
                               realized.order_p0 == doc.realized.order_p0 &&
                               realized.order_q0 == doc.realized.order_q0 &&
                               std::abs(realized.alpha0 - doc.realized.alpha0) <= 1e-9 &&
                               std::abs(realized.alpha_inf - doc.realized.alpha_inf) <= 1e-9;
    const bool real_matches =
        sphgon::pair_is_real(pair, config.realness_tol) == doc.is_real;
    const bool residual_consistent = std::abs(check.residual - doc.residual) <= 1e-8;
    const bool ok = check.ok && adm.admissible && degrees_match && real_matches &&
                    residual_consistent;
    all_ok = all_ok && ok;

    results.push_back(json{{"index", i},
                           {"residual", check.residual},
                           {"residualOk", check.residual_ok},
                           {"cornerOrdersOk", check.corner_orders_ok},
                           {"admissible", adm.admissible},
                           {"realizedMatchesStored", degrees_match},
                           {"isRealMatchesStored", real_matches},
                           {"residualMatchesStored", residual_consistent},
                           {"ok", ok}});
  }

  const json out{{"schemaVersion", sphgon::io::kSchemaVersion},
                 {"results", results},
                 {"allOk", all_ok}};
  emit(out);
  std::cerr << (all_ok ? "verified " : "FAILED: ") << docs.size() << " solution document(s)\n";
  return all_ok ? kExitOk : kExitNegative;
}

// --------------------------------------------------------------- monodromy

const char* verdict_name(UnitarizabilityVerdict verdict) {
  switch (verdict) {
    case UnitarizabilityVerdict::CertifiedTrue: return "CertifiedTrue";
    case UnitarizabilityVerdict::CertifiedFalse: return "CertifiedFalse";
    case UnitarizabilityVerdict::ScreenPassed: return "ScreenPassed";
    case UnitarizabilityVerdict::ScreenFailed: return "ScreenFailed";
  }
  return "Unknown";
}

json loop_result_json(const std::string& label, const MonodromyResult& result,
                      double expected_angle, double clearance) {
  const auto [l1, l2] = sphgon::eigenvalue_pair(result.normalized);
  return json{{"label", label},
              {"matrix", matrix_json(result.matrix)},
              {"determinant", sphgon::io::complex_to_json(result.determinant)},
              {"detDefect", result.det_defect},
              {"eigenvalues",
               json::array({sphgon::io::complex_to_json(l1), sphgon::io::complex_to_json(l2)})},
              {"ratio", sphgon::io::complex_to_json(sphgon::eigenvalue_ratio(result.normalized))},
              {"expectedAngle", expected_angle},
              {"ratioAngleDefect", sphgon::ratio_angle_defect(result.normalized, expected_angle)},
              {"projectiveIdentityDefect",
               sphgon::projective_identity_defect(result.normalized)},
              {"steps", result.steps},
              {"clearance", clearance}};
}

int run_monodromy(const std::string& input_path, size_t index, double unitarity_tol,
                  const ToleranceFlags& flags) {
  const json input = read_json_file(input_path);
  const auto docs = sphgon::io::solutions_from_json(input);
  if (index >= docs.size())
    throw std::invalid_argument("--index is out of range: the input holds " +
                                std::to_string(docs.size()) + " solution(s)");
  const sphgon::io::SolutionDocument& doc = docs[index];
  if (!doc.target.has_value())
    throw std::invalid_argument("solution document lacks a target block");

  SolverConfig config = doc.tolerances;
  flags.apply(config);
  const FuchsianEquation equation =
      sphgon::build_fuchsian(doc.target->signature, doc.target->corners,
                             sphgon::io::pair_of(doc), config);

  json accessory = json::array();
  for (Complex lambda : equation.accessory)
    accessory.push_back(sphgon::io::complex_to_json(lambda));
  json singularities = json::array();
  for (Complex a : equation.finite_singularities)
    singularities.push_back(sphgon::io::complex_to_json(a));

  const Complex base = sphgon::default_monodromy_base(equation.finite_singularities);
  json loops = json::array();
  std::vector<Matrix2cd> generators;
  for (size_t j = 0; j < equation.finite_singularities.size(); ++j) {
    const Loop loop = sphgon::loop_around(equation.finite_singularities, j, base);
    const MonodromyResult result = sphgon::loop_monodromy(equation, loop);
    const double expected =
        j == 0 ? equation.alpha0 : double(equation.interior_angles[j - 1]);
    const std::string label = j == 0 ? "origin" : "corner-" + std::to_string(j);
    loops.push_back(loop_result_json(label, result, expected, loop.clearance));
    generators.push_back(result.normalized);
  }

  // One positively oriented circle through the base enclosing every finite
  // singularity; its monodromy is the inverse of the loop at infinity.
  const double big_radius = std::abs(base);
  Loop big_circle;
  big_circle.base = base;
  big_circle.pieces.push_back(
      PathPiece::arc(Complex(0.0, 0.0), big_radius, -M_PI / 2.0, 2.0 * M_PI));
  big_circle.clearance = std::numeric_limits<double>::infinity();
  for (Complex a : equation.finite_singularities)
    big_circle.clearance = std::min(big_circle.clearance, big_radius - std::abs(a));
  const MonodromyResult at_infinity = sphgon::loop_monodromy(equation, big_circle);
  loops.push_back(loop_result_json("infinity", at_infinity, doc.realized.alpha_inf,
                                   big_circle.clearance));
  generators.push_back(at_infinity.normalized);

  const sphgon::UnitarizabilityReport unitarity =
      sphgon::unitarizability_check(generators, unitarity_tol);

  const json out{{"schemaVersion", sphgon::io::kSchemaVersion},
                 {"equation",
                  json{{"singularities", singularities},
                       {"alpha0", equation.alpha0},
                       {"interiorAngles", equation.interior_angles},
                       {"alphaPrime", equation.alpha_prime},
                       {"alphaDoublePrime", equation.alpha_double_prime},
                       {"accessory", accessory},
                       {"accessoryFitError", equation.accessory_fit_error}}},
                 {"loops", loops},
                 {"unitarizability",
                  json{{"verdict", verdict_name(unitarity.verdict)},
                       {"commuting", unitarity.commuting},
                       {"worstDefect", unitarity.worst_defect},
                       {"detail", unitarity.detail}}}};
  emit(out);

  std::cerr << "unitarizability: " << verdict_name(unitarity.verdict) << " (worst defect "
            << format_double(unitarity.worst_defect) << ")\n";
  const bool positive = unitarity.verdict == UnitarizabilityVerdict::CertifiedTrue ||
                        unitarity.verdict == UnitarizabilityVerdict::ScreenPassed;
  return positive ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical polygons with two free corner angles: feasibility, "
               "counting, fiber solving, and monodromy certification"};
  app.require_subcommand(1);

  // feasible
  auto* feasible = app.add_subcommand("feasible", "decide realizability of an angle signature");
  std::string f_alpha0, f_alphainf;
  std::vector<int> f_interior;
  feasible->add_option("--alpha0", f_alpha0, "angle factor at the origin, e.g. 1/2")->required();
  feasible->add_option("--interior", f_interior, "integer interior angle factors")
      ->required()
      ->delimiter(',');
  feasible->add_option("--alphainf", f_alphainf, "angle factor at infinity")->required();

  // count
  auto* count = app.add_subcommand("count", "count chord diagrams or odd diagrams");
  std::vector<int> c_odd, c_mult;
  auto* c_odd_opt =
      count->add_option("--odd", c_odd, "axis slot counts m0,interior...,mInf")->delimiter(',');
  count->add_option("--mult", c_mult, "interior multiplicities for the plain count")
      ->delimiter(',')
      ->excludes(c_odd_opt);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list chord diagrams or odd diagrams");
  std::vector<int> e_odd, e_mult;
  auto* e_odd_opt =
      enumerate->add_option("--odd", e_odd, "axis slot counts m0,interior...,mInf")
          ->delimiter(',');
  enumerate->add_option("--mult", e_mult, "interior multiplicities")
      ->delimiter(',')
      ->excludes(e_odd_opt);

  // solve
  auto* solve = app.add_subcommand("solve", "solve the polynomial fiber for a target");
  std::vector<double> s_corners;
  std::vector<int> s_interior, s_degrees;
  std::string s_alpha0, s_alphainf, s_output;
  unsigned long long s_seed = 1;
  ToleranceFlags s_tol;
  solve->add_option("--corners", s_corners, "interior corner positions on the real axis")
      ->required()
      ->delimiter(',');
  solve->add_option("--mult", s_interior, "integer interior angle factors")
      ->required()
      ->delimiter(',');
  solve->add_option("--alpha0", s_alpha0, "angle factor at the origin")->required();
  solve->add_option("--alphainf", s_alphainf, "angle factor at infinity")->required();
  solve->add_option("--seed", s_seed, "random seed for the multistart fallback");
  solve->add_option("--degrees", s_degrees, "pick a degree solution p,q,p0,q0")->delimiter(',');
  solve->add_option("--output,-o", s_output, "also write the result to this file");
  s_tol.attach(solve);

  // verify
  auto* verify = app.add_subcommand("verify", "re-check solution documents");
  std::string v_input;
  ToleranceFlags v_tol;
  verify->add_option("input", v_input, "solution document file, or - for stdin")->required();
  v_tol.attach(verify);

  // monodromy
  auto* monodromy =
      app.add_subcommand("monodromy", "loop monodromy and unitarizability for a solution");
  std::string m_input;
  size_t m_index = 0;
  double m_unitarity_tol = 1e-6;
  ToleranceFlags m_tol;
  monodromy->add_option("input", m_input, "solution document file, or - for stdin")->required();
  monodromy->add_option("--index", m_index, "which solution in the document to use");
  monodromy->add_option("--unitarity-tol", m_unitarity_tol,
                        "tolerance for the unitarizability decision");
  m_tol.attach(monodromy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (feasible->parsed()) return run_feasible(f_alpha0, f_interior, f_alphainf);
    if (count->parsed()) {
      if (c_odd.empty() && c_mult.empty())
        throw std::invalid_argument("count needs --odd or --mult");
      return run_count(c_odd, c_mult);
    }
    if (enumerate->parsed()) {
      if (e_odd.empty() && e_mult.empty())
        throw std::invalid_argument("enumerate needs --odd or --mult");
      return run_enumerate(e_odd, e_mult);
    }
    if (solve->parsed())
      return run_solve(s_corners, s_interior, s_alpha0, s_alphainf, s_seed, s_degrees,
                       s_output, s_tol);
    if (verify->parsed()) return run_verify(v_input, v_tol);
    if (monodromy->parsed()) return run_monodromy(m_input, m_index, m_unitarity_tol, m_tol);
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitValidation;
}
