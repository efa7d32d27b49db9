#pragma once

// Existence test for a rational developing map z^alpha * P(z)/Q(z) realizing
// a given angle signature.  The degrees p = deg P, q = deg Q, the root
// multiplicities p0, q0 at the origin, and the fractional exponent alpha in
// (0,1) must satisfy
//
//     alpha0    = |p0 - q0 + alpha|
//     sigma     = p + q - max(p0, q0)
//     alpha_inf = |p - q + alpha|
//
// with min(p0, q0) = 0, p0 <= p, q0 <= q.  Solutions are produced from the
// four sign patterns of the absolute values (p >= q or p < q, crossed with
// which of p0, q0 vanishes) and verified exactly before being returned.
// Solutions come in pairs related by inverting the developing map; the
// representative with p >= q (pattern 1 or 2) is the canonical one.

#include "sphgon/angles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphgon {

struct DegreeSolution {
  int p = 0;
  int q = 0;
  int p0 = 0;
  int q0 = 0;
  Rational alpha;
  int case_id = 0;  // sign pattern 1..4

  bool canonical() const { return case_id <= 2; }
  bool operator==(const DegreeSolution& other) const = default;
};

namespace detail {

// Exact check of the three-equation system together with the type bounds.
inline bool satisfies_degree_system(const AngleSignature& sig, long p, long q, long p0, long q0,
                                    const Rational& alpha) {
  if (p < 0 || q < 0 || p0 < 0 || q0 < 0) return false;
  if (p0 > p || q0 > q || std::min(p0, q0) != 0) return false;
  if (alpha <= 0 || alpha >= 1) return false;
  const Rational a0 = abs(Rational(p0 - q0) + alpha);
  if (a0 != sig.alpha0) return false;
  if (p + q - std::max(p0, q0) != sigma(sig)) return false;
  const Rational ai = abs(Rational(p - q) + alpha);
  return ai == sig.alpha_inf;
}

inline void push_candidate(std::vector<DegreeSolution>& out, const AngleSignature& sig, long p,
                           long q, long p0, long q0, const Rational& alpha, int case_id) {
  if (!satisfies_degree_system(sig, p, q, p0, q0, alpha)) return;
  out.push_back(DegreeSolution{static_cast<int>(p), static_cast<int>(q), static_cast<int>(p0),
                               static_cast<int>(q0), alpha, case_id});
}

}  // namespace detail

// All solutions of the degree system, in sign-pattern order.  When the
// signature is realizable there are exactly two, exchanged by the inversion
// f -> 1/f of the developing map.
inline std::vector<DegreeSolution> solve_degree_system(const AngleSignature& sig) {
  validate_signature(sig);
  const long s = sigma(sig);
  const long f0 = floor_long(sig.alpha0);
  const long fi = floor_long(sig.alpha_inf);
  const Rational frac0 = frac_part(sig.alpha0);
  const Rational fraci = frac_part(sig.alpha_inf);
  const bool difference_integral = frac0 == fraci;        // alpha0 - alpha_inf integer
  const bool sum_integral = frac0 + fraci == 1;           // alpha0 + alpha_inf integer

  std::vector<DegreeSolution> out;

  // Pattern 1: p >= q, q0 = 0, both absolute values resolve positively.
  if (difference_integral && (s + f0 + fi) % 2 == 0) {
    const long p = (s + f0 + fi) / 2;
    const long q = (s + f0 - fi) / 2;
    detail::push_candidate(out, sig, p, q, f0, 0, frac0, 1);
  }
  // Pattern 2: p >= q, p0 = 0, the origin multiplicity sits in Q.
  if (sum_integral && (s + f0 + fi) % 2 == 1) {
    const long p = (s + f0 + 1 + fi) / 2;
    const long q = (s + f0 + 1 - fi) / 2;
    detail::push_candidate(out, sig, p, q, 0, f0 + 1, 1 - frac0, 2);
  }
  // Pattern 3: p < q, q0 = 0.
  if (sum_integral && (s + f0 + fi) % 2 == 1) {
    const long q = (s + f0 + fi + 1) / 2;
    const long p = (s + f0 - fi - 1) / 2;
    detail::push_candidate(out, sig, p, q, f0, 0, frac0, 3);
  }
  // Pattern 4: p < q, p0 = 0.
  if (difference_integral && (s + f0 + fi) % 2 == 0) {
    const long q = (s + f0 + fi + 2) / 2;
    const long p = (s + f0 - fi) / 2;
    detail::push_candidate(out, sig, p, q, 0, f0 + 1, 1 - frac0, 4);
  }
  return out;
}

struct FeasibilityReport {
  bool feasible = false;
  char branch = '?';  // 'a' or 'b'
  std::string reason;  // empty when feasible
  long sigma_value = 0;
  ExponentData exponents;
  std::vector<DegreeSolution> solutions;
};

// Decides realizability of the signature.  The parity of
// sigma + floor(alpha0) + floor(alpha_inf) selects the branch:
//   even: alpha0 - alpha_inf must be integral and
//         |floor(alpha0) - floor(alpha_inf)| <= sigma;
//   odd:  alpha0 + alpha_inf must be integral and
//         floor(alpha0) + floor(alpha_inf) + 1 <= sigma.
inline FeasibilityReport check_angles(const AngleSignature& sig) {
  validate_signature(sig);
  FeasibilityReport report;
  report.sigma_value = sigma(sig);
  report.exponents = exponents_at_infinity(sig);

  const long f0 = floor_long(sig.alpha0);
  const long fi = floor_long(sig.alpha_inf);
  const bool even = (report.sigma_value + f0 + fi) % 2 == 0;
  report.branch = even ? 'a' : 'b';

  if (even) {
    if (!is_integer(sig.alpha0 - sig.alpha_inf))
      report.reason = "branch-a integrality failed: alpha0 - alpha_inf is not an integer";
    else if (std::labs(f0 - fi) > report.sigma_value)
      report.reason = "branch-a inequality failed: |[alpha0] - [alpha_inf]| exceeds sigma";
  } else {
    if (!is_integer(sig.alpha0 + sig.alpha_inf))
      report.reason = "branch-b integrality failed: alpha0 + alpha_inf is not an integer";
    else if (f0 + fi + 1 > report.sigma_value)
      report.reason = "branch-b inequality failed: [alpha0] + [alpha_inf] + 1 exceeds sigma";
  }

  report.feasible = report.reason.empty();
  if (report.feasible) report.solutions = solve_degree_system(sig);
  return report;
}

}  // namespace sphgon
