#include <catch2/catch_amalgamated.hpp>

#include <sphgon/io.hpp>

#include <string>

using namespace sphgon;
using sphgon::io::json;

namespace {

io::SolutionDocument sample_document() {
  io::SolutionDocument doc;
  doc.alpha = 0.1 + 0.2;  // deliberately not a short decimal
  doc.P = Poly{{Complex(-1.3722813232690143, 1.2889206390651102e-15), Complex(1.0, 0.0)}};
  doc.Q = Poly{{Complex(-1.457427107756338, -4.296402141246109e-16), Complex(1.0, 0.0)}};
  doc.residual = 5.574858612175955e-16;
  doc.is_real = true;
  doc.realized.degree_p = 1;
  doc.realized.degree_q = 1;
  doc.realized.order_p0 = 0;
  doc.realized.order_q0 = 0;
  doc.realized.alpha0 = 0.5;
  doc.realized.alpha_inf = 0.5;
  doc.seed = 42;
  doc.tolerances.residual_tol = 1e-10;
  doc.tolerances.realness_tol = 1e-8;
  doc.tolerances.dedup_tol = 1e-6;

  io::TargetSpec target;
  target.corners = {Complex(1.0, 0.0), Complex(2.0, 0.0)};
  target.signature.alpha0 = Rational(1, 2);
  target.signature.interior = {2, 2};
  target.signature.alpha_inf = Rational(1, 2);
  target.degrees.p = 1;
  target.degrees.q = 1;
  target.degrees.p0 = 0;
  target.degrees.q0 = 0;
  target.degrees.alpha = Rational(1, 2);
  target.degrees.case_id = 1;
  doc.target = target;
  return doc;
}

}  // namespace

TEST_CASE("complex and polynomial JSON round trips") {
  const Complex c(1.5, -2.25);
  REQUIRE(io::complex_from_json(io::complex_to_json(c)) == c);

  const Poly p{{Complex(3.0, 1.0), Complex(0.0, 0.0), Complex(-2.0, 0.5)}};
  const Poly back = io::poly_from_json(io::poly_to_json(p));
  REQUIRE(back.coefficients() == p.coefficients());

  REQUIRE(io::poly_to_json(Poly{}) == json::array());
  REQUIRE(io::poly_from_json(json::array()).is_zero());

  REQUIRE_THROWS_AS(io::complex_from_json(json::array({1.0})), std::invalid_argument);
  REQUIRE_THROWS_AS(io::complex_from_json(json{{"re", 1.0}}), std::invalid_argument);
}

TEST_CASE("solution documents round trip bit-exactly") {
  const io::SolutionDocument doc = sample_document();

  const std::string first = io::solution_to_json(doc).dump(2);
  const io::SolutionDocument reparsed = io::solution_from_json(json::parse(first));
  const std::string second = io::solution_to_json(reparsed).dump(2);

  REQUIRE(first == second);  // byte-identical after a full parse/serialize cycle

  REQUIRE(reparsed.alpha == doc.alpha);
  REQUIRE(reparsed.P.coefficients() == doc.P.coefficients());
  REQUIRE(reparsed.Q.coefficients() == doc.Q.coefficients());
  REQUIRE(reparsed.residual == doc.residual);
  REQUIRE(reparsed.is_real == doc.is_real);
  REQUIRE(reparsed.seed == doc.seed);
  REQUIRE(reparsed.realized.degree_p == 1);
  REQUIRE(reparsed.realized.alpha0 == 0.5);
  REQUIRE(reparsed.tolerances.residual_tol == 1e-10);
}

TEST_CASE("target blocks keep exact rational angles") {
  const io::SolutionDocument doc = sample_document();
  const json j = io::target_to_json(*doc.target);

  REQUIRE(j["alpha0"] == "1/2");
  REQUIRE(j["alpha"] == "1/2");

  const io::TargetSpec back = io::target_from_json(j);
  REQUIRE(back.signature.alpha0 == Rational(1, 2));
  REQUIRE(back.signature.interior == std::vector<int>{2, 2});
  REQUIRE(back.degrees.p == 1);
  REQUIRE(back.degrees.case_id == 1);
  REQUIRE(back.corners == doc.target->corners);
  REQUIRE(back.root_multiplicities() == std::vector<int>{1, 1});
}

TEST_CASE("solutions_from_json accepts all three container shapes") {
  const json one = io::solution_to_json(sample_document());

  REQUIRE(io::solutions_from_json(one).size() == 1);
  REQUIRE(io::solutions_from_json(json::array({one, one})).size() == 2);

  const json wrapped{{"schemaVersion", io::kSchemaVersion},
                     {"solutions", json::array({one, one, one})}};
  REQUIRE(io::solutions_from_json(wrapped).size() == 3);
}

TEST_CASE("malformed solution documents are rejected") {
  json good = io::solution_to_json(sample_document());

  json missing = good;
  missing.erase("alpha");
  REQUIRE_THROWS_AS(io::solution_from_json(missing), std::invalid_argument);

  json wrong_version = good;
  wrong_version["schemaVersion"] = 999;
  REQUIRE_THROWS_AS(io::solution_from_json(wrong_version), std::invalid_argument);

  json bad_poly = good;
  bad_poly["P"] = "not a polynomial";
  REQUIRE_THROWS_AS(io::solution_from_json(bad_poly), std::invalid_argument);

  REQUIRE_THROWS_AS(io::solution_from_json(json::parse("[]")), std::invalid_argument);
}

TEST_CASE("documents without a target stay target-free") {
  io::SolutionDocument doc = sample_document();
  doc.target.reset();
  const json j = io::solution_to_json(doc);
  REQUIRE_FALSE(j.contains("target"));
  REQUIRE_FALSE(io::solution_from_json(j).target.has_value());
}
