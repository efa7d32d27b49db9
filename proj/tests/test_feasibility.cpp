#include "sphgon/feasibility.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace sphgon;

namespace {

Rational rat(long num, long den) { return Rational(num, den); }

// Brute-force satisfiability of the degree system, independent of the
// sign-pattern construction.  The second equation pins max(p0, q0) for each
// (p, q); the third leaves at most two candidate fractional parts.
std::vector<DegreeSolution> exhaustive_degree_search(const AngleSignature& sig, int bound) {
  std::vector<DegreeSolution> found;
  const long s = sigma(sig);
  for (int p = 0; p <= bound; ++p)
    for (int q = 0; q <= bound; ++q) {
      const long m = p + q - s;
      if (m < 0) continue;
      for (const auto& [p0, q0] : std::vector<std::pair<long, long>>{{m, 0}, {0, m}}) {
        if (p0 > p || q0 > q) continue;
        for (int sign : {+1, -1}) {
          // alpha0 = |p0 - q0 + alpha| resolves with this sign.
          const Rational alpha = Rational(sign) * sig.alpha0 - Rational(p0 - q0);
          if (alpha <= 0 || alpha >= 1) continue;
          if (abs(Rational(p0 - q0) + alpha) != sig.alpha0) continue;
          if (abs(Rational(p - q) + alpha) != sig.alpha_inf) continue;
          DegreeSolution sol{p, q, static_cast<int>(p0), static_cast<int>(q0), alpha, 0};
          if (std::none_of(found.begin(), found.end(), [&](const DegreeSolution& other) {
                return other.p == sol.p && other.q == sol.q && other.p0 == sol.p0 &&
                       other.q0 == sol.q0 && other.alpha == sol.alpha;
              }))
            found.push_back(sol);
        }
      }
    }
  return found;
}

bool same_tuple(const DegreeSolution& a, const DegreeSolution& b) {
  return a.p == b.p && a.q == b.q && a.p0 == b.p0 && a.q0 == b.q0 && a.alpha == b.alpha;
}

}  // namespace

TEST_CASE("sigma accumulates the integer corner excess") {
  CHECK(sigma({rat(1, 2), {2, 2}, rat(1, 2)}) == 2);
  CHECK(sigma({rat(1, 2), {2}, rat(5, 2)}) == 1);
  CHECK(sigma({rat(3, 2), {4, 3, 2}, rat(1, 2)}) == 6);
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(sigma({rat(1, 1), {2}, rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(sigma({rat(1, 2), {2}, rat(3, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(sigma({rat(1, 2), {1}, rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(sigma({rat(1, 2), {}, rat(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(sigma({rat(-1, 2), {2}, rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("exponents at infinity for the quadrilateral") {
  const AngleSignature sig{rat(1, 2), {2, 2}, rat(1, 2)};
  const ExponentData data = exponents_at_infinity(sig);
  CHECK(data.alpha_prime == -1);
  CHECK(data.alpha_double_prime == rat(-3, 2));
  CHECK(data.gauss_bonnet_ok);

  // The exponent relation at infinity holds by construction.
  Rational finite = sig.alpha0;
  for (int a : sig.interior) finite += a;
  CHECK(finite + data.alpha_prime + data.alpha_double_prime == sig.n() - 2);
}

TEST_CASE("degree system for the quadrilateral with half angles") {
  const auto sols = solve_degree_system({rat(1, 2), {2, 2}, rat(1, 2)});
  REQUIRE(sols.size() == 2);
  CHECK(same_tuple(sols[0], {1, 1, 0, 0, rat(1, 2), 1}));
  CHECK(sols[0].case_id == 1);
  CHECK(sols[0].canonical());
  // The inversion partner carries the origin multiplicity in Q.
  CHECK(same_tuple(sols[1], {1, 2, 0, 1, rat(1, 2), 4}));
  CHECK_FALSE(sols[1].canonical());
}

TEST_CASE("degree system with a larger angle at 0") {
  const auto sols = solve_degree_system({rat(3, 2), {2}, rat(1, 2)});
  REQUIRE(sols.size() == 2);
  CHECK(same_tuple(sols[0], {1, 1, 1, 0, rat(1, 2), 1}));
  CHECK(same_tuple(sols[1], {1, 2, 0, 2, rat(1, 2), 4}));
}

TEST_CASE("degree system on the odd branch returns the pattern-2/3 pair") {
  const auto sols = solve_degree_system({rat(1, 2), {2, 2, 2}, rat(1, 2)});
  REQUIRE(sols.size() == 2);
  CHECK(same_tuple(sols[0], {2, 2, 0, 1, rat(1, 2), 2}));
  CHECK(sols[0].canonical());
  CHECK(same_tuple(sols[1], {1, 2, 0, 0, rat(1, 2), 3}));
  CHECK(sols[1].case_id == 3);
}

TEST_CASE("infeasible signature yields no solutions and a reason") {
  const AngleSignature sig{rat(1, 2), {2}, rat(5, 2)};
  CHECK(solve_degree_system(sig).empty());
  const FeasibilityReport report = check_angles(sig);
  CHECK_FALSE(report.feasible);
  CHECK(report.branch == 'b');
  CHECK(report.reason.find("inequality") != std::string::npos);
}

TEST_CASE("feasible signature reports branch and solutions") {
  const FeasibilityReport report = check_angles({rat(3, 2), {2}, rat(1, 2)});
  CHECK(report.feasible);
  CHECK(report.branch == 'a');
  CHECK(report.sigma_value == 1);
  REQUIRE_FALSE(report.solutions.empty());
  CHECK(same_tuple(report.solutions[0], {1, 1, 1, 0, rat(1, 2), 1}));
}

TEST_CASE("fractional mismatch on the even branch is infeasible") {
  const FeasibilityReport report = check_angles({rat(5, 4), {3, 2}, rat(1, 4)});
  // sigma = 3, floors 1 and 0 -> parity even branch 'a'... verified:
  CHECK(report.branch == (((3 + 1 + 0) % 2 == 0) ? 'a' : 'b'));
  const FeasibilityReport mismatch = check_angles({rat(5, 4), {3, 2}, rat(1, 3)});
  CHECK_FALSE(mismatch.feasible);
  CHECK(mismatch.reason.find("integrality") != std::string::npos);
}

TEST_CASE("pattern construction agrees with exhaustive search on a dense grid") {
  // Quarter-integer angles between 0 and 4, interior data of sizes 1-2.
  std::vector<Rational> angles;
  for (int num = 1; num < 16; ++num)
    if (num % 4 != 0) angles.push_back(rat(num, 4));

  std::vector<std::vector<int>> interiors = {{2}, {3}, {4}, {2, 2}, {2, 3}, {4, 2}};
  for (const auto& interior : interiors)
    for (const Rational& a0 : angles)
      for (const Rational& ai : angles) {
        const AngleSignature sig{a0, interior, ai};
        const auto fast = solve_degree_system(sig);
        const auto brute = exhaustive_degree_search(sig, 20);
        CAPTURE(to_string(a0), to_string(ai), interior);
        REQUIRE(fast.size() == brute.size());
        for (const auto& sol : brute)
          CHECK(std::any_of(fast.begin(), fast.end(),
                            [&](const DegreeSolution& other) { return same_tuple(other, sol); }));
        CHECK(check_angles(sig).feasible == !brute.empty());
      }
}

TEST_CASE("solutions always verify the degree system and pair up by inversion") {
  std::vector<Rational> angles = {rat(1, 2), rat(3, 2), rat(5, 2), rat(1, 3), rat(2, 3),
                                  rat(4, 3), rat(1, 4), rat(7, 4), rat(5, 4)};
  std::vector<std::vector<int>> interiors = {{2}, {2, 2}, {3, 2}, {2, 2, 2}, {4}};
  for (const auto& interior : interiors)
    for (const Rational& a0 : angles)
      for (const Rational& ai : angles) {
        const AngleSignature sig{a0, interior, ai};
        const auto sols = solve_degree_system(sig);
        CHECK((sols.empty() || sols.size() == 2));
        if (sols.size() == 2) {
          // Inversion f -> 1/f: the canonical representative (p >= q)
          // determines its partner.
          const DegreeSolution& c = sols[0];
          const DegreeSolution& d = sols[1];
          CHECK(c.canonical());
          CHECK_FALSE(d.canonical());
          if (c.q0 == 0) {
            CHECK(d.p == c.q);
            CHECK(d.q == c.p + 1);
            CHECK(d.p0 == 0);
            CHECK(d.q0 == c.p0 + 1);
          } else {
            CHECK(d.p == c.q - 1);
            CHECK(d.q == c.p);
            CHECK(d.p0 == c.q0 - 1);
            CHECK(d.q0 == 0);
          }
          CHECK(c.alpha + d.alpha == 1);
        }
      }
}

TEST_CASE("feasible signatures satisfy the area bound") {
  std::vector<Rational> angles = {rat(1, 2), rat(3, 2), rat(1, 3), rat(5, 2), rat(7, 4)};
  std::vector<std::vector<int>> interiors = {{2}, {2, 2}, {3}, {2, 3, 2}};
  for (const auto& interior : interiors)
    for (const Rational& a0 : angles)
      for (const Rational& ai : angles) {
        const AngleSignature sig{a0, interior, ai};
        const FeasibilityReport report = check_angles(sig);
        if (report.feasible) {
          CAPTURE(to_string(a0), to_string(ai), interior);
          CHECK(report.exponents.gauss_bonnet_ok);
        }
      }
}
