#pragma once

// Second-order Fuchsian equations  w'' + p(z) w' + r(z) w = 0  whose
// projective solution ratio is a developing map with prescribed corner
// angles:
//
//   p(z) = sum_j (1 - beta_j) / (z - a_j)         over the finite corners,
//   r(z) = (A'A'' z^{n-3} + lambda_{n-4} z^{n-4} + ... + lambda_0) / prod_j (z - a_j),
//
// with a_0 = 0 carrying the non-integer angle factor beta_0 = alpha0, the
// interior corners carrying integer angle factors, and (A', A'') the
// exponents at infinity.  The Schwarzian of the solution ratio is
// S = 2r - p' - p^2/2, which ties the accessory parameters lambda_k to a
// concrete polynomial pair: given a pair realizing the angles, the product
// (S + p' + p^2/2)/2 * prod_j (z - a_j) is a polynomial whose coefficients
// are read off by contour projection on a circle enclosing all corners.

#include <sphgon/angles.hpp>
#include <sphgon/rational_function.hpp>
#include <sphgon/schwarzian.hpp>
#include <sphgon/wronski.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphgon {

struct FuchsianEquation {
  std::vector<Complex> finite_singularities;  // origin first, then interior corners
  double alpha0 = 0.0;                        // non-integer angle factor at the origin
  std::vector<int> interior_angles;           // integer angle factors, one per interior corner
  double alpha_prime = 0.0;                   // exponents at infinity
  double alpha_double_prime = 0.0;
  std::vector<Complex> accessory;             // lambda_0 .. lambda_{n-4}
  double accessory_fit_error = 0.0;           // relative contour-projection defect

  // Working representation of the accessory numerator: coefficients of
  // powers of (z - accessory_center), low to high, including the forced
  // leading coefficient A'A''.  Centering the basis inside the corner
  // cluster keeps numerator values near the corners free of the monomial
  // cancellation that would otherwise cap their accuracy; the monomial
  // `accessory` list above is derived from this for reporting.  When empty
  // (equations assembled by hand), coefficient_r falls back to `accessory`.
  Complex accessory_center = Complex(0.0);
  std::vector<Complex> accessory_local;

  int n() const { return int(interior_angles.size()) + 2; }

  Complex coefficient_p(Complex z) const {
    Complex acc(0.0);
    for (size_t j = 0; j < finite_singularities.size(); ++j) {
      const double beta = j == 0 ? alpha0 : double(interior_angles[j - 1]);
      acc += (1.0 - beta) / (z - finite_singularities[j]);
    }
    return acc;
  }

  Complex coefficient_p_derivative(Complex z) const {
    Complex acc(0.0);
    for (size_t j = 0; j < finite_singularities.size(); ++j) {
      const double beta = j == 0 ? alpha0 : double(interior_angles[j - 1]);
      const Complex d = z - finite_singularities[j];
      acc -= (1.0 - beta) / (d * d);
    }
    return acc;
  }

  Complex numerator_value(Complex z) const {
    const int degree = n() - 3;
    if (degree < 0) return Complex(0.0);
    if (!accessory_local.empty()) {
      const Complex x = z - accessory_center;
      Complex acc(0.0);
      for (int k = int(accessory_local.size()) - 1; k >= 0; --k)
        acc = acc * x + accessory_local[size_t(k)];
      return acc;
    }
    Complex acc = Complex(alpha_prime * alpha_double_prime);
    for (int k = degree - 1; k >= 0; --k) acc = acc * z + accessory[size_t(k)];
    return acc;
  }

  Complex coefficient_r(Complex z) const {
    if (n() - 3 < 0) return Complex(0.0);
    Complex denominator(1.0);
    for (Complex a : finite_singularities) denominator *= z - a;
    return numerator_value(z) / denominator;
  }

  // Schwarzian of the projective solution ratio: 2r - p' - p^2/2.
  Complex schwarzian(Complex z) const {
    const Complex p = coefficient_p(z);
    return 2.0 * coefficient_r(z) - coefficient_p_derivative(z) - 0.5 * p * p;
  }
};

namespace detail {

// Power series of the regular part of r = N / D about the j-th finite
// singularity a, a simple root of D = prod_i (z - a_i).  Writing x = z - a
// and E(x) = D(x + a) / x, the quotient t(x) = N(x + a) / E(x) collects the
// Laurent data of r at a: r has the expansion t_0 / x + t_1 + t_2 x + ...,
// i.e. r_l = t_{l+1} with the residue r_{-1} = t_0.  Returns t_0 .. t_order.
// The numerator is supplied in powers of (z - center) so that the series
// shift constant a - center stays at corner-cluster size; shifting a
// monomial numerator by a corner modulus instead loses several digits to
// cancellation, which the apparentness conditions below cannot afford.
inline std::vector<Complex> local_r_series(const std::vector<Complex>& singularities, size_t j,
                                           const std::vector<Complex>& numerator, Complex center,
                                           int order) {
  const Complex a = singularities[j];
  // E(x) = D(x + a) / x up to x^order: build D(x + a) = prod (x + (a - a_i))
  // progressively, truncated one order higher; the constant term is D(a) = 0
  // up to roundoff and the series of E reads off the higher coefficients.
  std::vector<Complex> d(1, Complex(1.0));
  for (size_t i = 0; i < singularities.size(); ++i) {
    const Complex c = a - singularities[i];
    d.push_back(Complex(0.0));
    for (size_t k = d.size() - 1; k > 0; --k) d[k] = d[k - 1] + c * d[k];
    d[0] *= c;
    if (d.size() > size_t(order) + 2) d.resize(size_t(order) + 2);
  }
  std::vector<Complex> E(size_t(order) + 1, Complex(0.0));
  for (int k = 0; k <= order; ++k)
    E[size_t(k)] = size_t(k) + 1 < d.size() ? d[size_t(k) + 1] : Complex(0.0);
  // N(x + a) up to x^order by a truncated Horner pass with shift x + (a - center).
  const Complex shift = a - center;
  std::vector<Complex> nsh(1, Complex(0.0));
  for (int k = int(numerator.size()) - 1; k >= 0; --k) {
    std::vector<Complex> next(std::min(nsh.size() + 1, size_t(order) + 1), Complex(0.0));
    for (size_t i = 0; i < nsh.size(); ++i) {
      if (i + 1 < next.size()) next[i + 1] += nsh[i];
      next[i] += shift * nsh[i];
    }
    next[0] += numerator[size_t(k)];
    nsh = std::move(next);
  }
  nsh.resize(size_t(order) + 1, Complex(0.0));
  // Series division t = nsh / E.
  std::vector<Complex> t(size_t(order) + 1);
  for (int k = 0; k <= order; ++k) {
    Complex s = nsh[size_t(k)];
    for (int i = 0; i < k; ++i) s -= t[size_t(i)] * E[size_t(k - i)];
    t[size_t(k)] = s / E[0];
  }
  return t;
}

// Log-freeness obstruction at interior corner j (finite_singularities index,
// so j >= 1).  A corner with integer angle factor m + 1 has local exponents
// 0 and m + 1; the Frobenius coefficients from exponent 0 obey
//   s (s - 1 - m) c_s = -sum_{k<s} (p_{s-1-k} k + r_{s-2-k}) c_k,  c_0 = 1,
// and the same sum at the resonant index s = m + 1 is the coefficient that
// would attach a logarithm to the second solution.  It must vanish for the
// corner to be an apparent singularity (trivial local monodromy).  `scale`
// accumulates the magnitudes of the summed terms, so |value| / scale measures
// how completely the terms cancel.
inline void log_obstruction(const FuchsianEquation& eq, size_t j, Complex* value, double* scale) {
  const int m = eq.interior_angles[j - 1] - 1;  // multiplicity: resonance at s = m + 1
  const Complex a = eq.finite_singularities[j];
  // Taylor coefficients p_0 .. p_m of the regular part of p at a; the polar
  // part p_{-1} = 1 - (m + 1) = -m is folded into the indicial factor above.
  std::vector<Complex> p(size_t(m) + 1, Complex(0.0));
  for (size_t i = 0; i < eq.finite_singularities.size(); ++i) {
    if (i == j) continue;
    const double beta = i == 0 ? eq.alpha0 : double(eq.interior_angles[i - 1]);
    Complex power = a - eq.finite_singularities[i];
    for (int l = 0; l <= m; ++l) {
      p[size_t(l)] += (1.0 - beta) * (l % 2 == 0 ? 1.0 : -1.0) / power;
      power *= a - eq.finite_singularities[i];
    }
  }
  std::vector<Complex> numerator;
  Complex center(0.0);
  if (!eq.accessory_local.empty()) {
    numerator = eq.accessory_local;
    center = eq.accessory_center;
  } else {
    numerator = eq.accessory;
    numerator.push_back(Complex(eq.alpha_prime * eq.alpha_double_prime));
  }
  const std::vector<Complex> t = local_r_series(eq.finite_singularities, j, numerator, center, m);
  const auto r = [&](int l) { return t[size_t(l + 1)]; };
  std::vector<Complex> c(size_t(m) + 1, Complex(0.0));
  c[0] = Complex(1.0);
  for (int s = 1; s <= m; ++s) {
    Complex acc(0.0);
    for (int k = 0; k < s; ++k)
      acc += (p[size_t(s - 1 - k)] * double(k) + r(s - 2 - k)) * c[size_t(k)];
    c[size_t(s)] = -acc / double(s * (s - 1 - m));
  }
  Complex g(0.0);
  double sc = 0.0;
  for (int k = 0; k <= m; ++k) {
    const Complex term = (p[size_t(m - k)] * double(k) + r(m - 1 - k)) * c[size_t(k)];
    g += term;
    sc += std::abs(term);
  }
  *value = g;
  *scale = std::max(1.0, sc);
}

inline double worst_log_obstruction(const FuchsianEquation& eq) {
  double worst = 0.0;
  for (size_t j = 1; j < eq.finite_singularities.size(); ++j) {
    Complex value;
    double scale;
    log_obstruction(eq, j, &value, &scale);
    const double rel = std::abs(value) / scale;
    if (!std::isfinite(rel)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, rel);
  }
  return worst;
}

// Gauss-Newton pass driving every interior log-freeness obstruction to zero
// by adjusting the free accessory coefficients together with the corner
// positions.  There is one more unknown than there are conditions, so each
// step is the least-norm solution of the linearized system; in practice the
// corners move by amounts comparable to the accuracy of the polynomial pair
// itself (~1e-8), trading corner-position error below anything observable
// for apparentness the downstream monodromy integration can feel directly.
inline void enforce_apparent_singularities(FuchsianEquation& eq) {
  const size_t corners = eq.finite_singularities.size() - 1;
  if (corners == 0 || eq.accessory_local.empty()) return;
  const size_t free_coeffs = eq.accessory_local.size() - 1;  // leading stays A'A''
  const size_t unknowns = free_coeffs + corners;

  std::vector<Complex> best_coeffs = eq.accessory_local;
  std::vector<Complex> best_singularities = eq.finite_singularities;
  double best_worst = worst_log_obstruction(eq);
  const long rows = long(corners);
  const long cols = long(unknowns);
  for (int iter = 0; iter < 4 && best_worst > 1e-14; ++iter) {
    Eigen::VectorXcd g(rows);
    bool finite = true;
    for (size_t j = 1; j <= corners; ++j) {
      Complex value;
      double scale;
      log_obstruction(eq, j, &value, &scale);
      g[long(j - 1)] = value;
      finite = finite && std::isfinite(std::abs(value));
    }
    if (!finite) break;
    Eigen::MatrixXcd J(rows, cols);
    const auto fill_column = [&](size_t col, Complex* slot, double h) {
      const Complex save = *slot;
      Complex probe;
      double scale;
      *slot = save + h;
      for (size_t j = 1; j <= corners; ++j) {
        log_obstruction(eq, j, &probe, &scale);
        J(long(j - 1), long(col)) = probe;
      }
      *slot = save - h;
      for (size_t j = 1; j <= corners; ++j) {
        log_obstruction(eq, j, &probe, &scale);
        J(long(j - 1), long(col)) = (J(long(j - 1), long(col)) - probe) / (2.0 * h);
      }
      *slot = save;
    };
    for (size_t k = 0; k < free_coeffs; ++k)
      fill_column(k, &eq.accessory_local[k], 1e-6 * std::max(1.0, std::abs(eq.accessory_local[k])));
    for (size_t j = 1; j <= corners; ++j)
      fill_column(free_coeffs + j - 1, &eq.finite_singularities[j], 1e-8);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(J);
    const Eigen::VectorXcd delta = cod.solve(-g);
    for (size_t k = 0; k < free_coeffs; ++k) eq.accessory_local[k] += delta[long(k)];
    for (size_t j = 1; j <= corners; ++j)
      eq.finite_singularities[j] += delta[long(free_coeffs + j - 1)];
    const double worst = worst_log_obstruction(eq);
    if (worst < best_worst) {
      best_worst = worst;
      best_coeffs = eq.accessory_local;
      best_singularities = eq.finite_singularities;
    }
  }
  eq.accessory_local = best_coeffs;
  eq.finite_singularities = best_singularities;
}

}  // namespace detail

inline FuchsianEquation build_fuchsian(const AngleSignature& sig,
                                       const std::vector<Complex>& corners,
                                       const PolynomialPair& pair,
                                       const SolverConfig& config = {}) {
  validate_signature(sig);
  if (corners.size() != sig.interior.size())
    throw std::invalid_argument("one interior corner position per interior angle is required");

  const Classification realized = classify_solution(pair, config);
  if (std::abs(realized.alpha0 - to_double(sig.alpha0)) > 1e-8 ||
      std::abs(realized.alpha_inf - to_double(sig.alpha_inf)) > 1e-8)
    throw std::invalid_argument("pair does not realize the requested angles at 0 and infinity");

  DegreeSolution degrees;
  degrees.p = realized.degree_p;
  degrees.q = realized.degree_q;
  degrees.p0 = realized.order_p0;
  degrees.q0 = realized.order_q0;
  degrees.alpha = sig.alpha0;  // only the degree data is used below
  std::vector<int> multiplicities(sig.interior.size());
  for (size_t j = 0; j < sig.interior.size(); ++j) multiplicities[j] = sig.interior[j] - 1;
  const Poly target = critical_polynomial(corners, multiplicities, degrees);
  if (verify_solution(pair, target, config).residual > std::max(1e-8, 10.0 * config.residual_tol))
    throw std::invalid_argument("pair does not realize the requested interior corners");

  FuchsianEquation eq;
  eq.finite_singularities.push_back(Complex(0.0));
  // The equation is anchored at the pair's realized critical points -- the
  // roots of W(P, Q) nearest each prescribed corner (their centroid where a
  // corner carries several).  These agree with the prescribed positions to
  // within the verification tolerance just enforced, and anchoring there
  // keeps the interior singularities free of logarithms at the pair's own
  // accuracy rather than at the looser prescription accuracy, which is what
  // makes their monodromy projectively trivial to integration precision.
  {
    const std::vector<Complex> critical_points = wronski_map(pair).roots();
    std::vector<bool> used(critical_points.size(), false);
    for (size_t j = 0; j < corners.size(); ++j) {
      Complex centroid(0.0);
      for (int m = 0; m < multiplicities[j]; ++m) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < critical_points.size(); ++i) {
          if (used[i]) continue;
          const double dist = std::abs(critical_points[i] - corners[j]);
          if (dist < best_dist) {
            best_dist = dist;
            best = int(i);
          }
        }
        if (best < 0)
          throw std::invalid_argument("pair has fewer critical points than the corners require");
        used[size_t(best)] = true;
        centroid += critical_points[size_t(best)];
      }
      centroid /= double(multiplicities[j]);
      if (std::abs(centroid - corners[j]) > 1e-3 * std::max(1.0, std::abs(corners[j])))
        throw std::invalid_argument("pair critical points stray from the prescribed corners");
      eq.finite_singularities.push_back(centroid);
    }
  }
  eq.alpha0 = to_double(sig.alpha0);
  eq.interior_angles = sig.interior;
  const ExponentData exponents = exponents_at_infinity(sig);
  eq.alpha_prime = to_double(exponents.alpha_prime);
  eq.alpha_double_prime = to_double(exponents.alpha_double_prime);

  // Accessory parameters: contour projection of the polynomial
  // G = (S + p' + p^2/2)/2 * prod (z - a_j)  of degree n - 3.  The projection
  // circles are centered at the centroid of the interior corners and the
  // coefficients are kept in powers of (z - centroid): the numerator is read
  // back near the corners, where a centered basis evaluates without the
  // cancellation a monomial basis suffers once the corners sit away from the
  // origin, and the apparentness refinement below needs those extra digits.
  const int degree = eq.n() - 3;
  if (degree >= 0) {
    Complex center(0.0);
    for (size_t j = 1; j < eq.finite_singularities.size(); ++j)
      center += eq.finite_singularities[j];
    center /= double(eq.finite_singularities.size() - 1);
    const SchwarzianEvaluator s(pair);
    const Poly product = Poly::from_roots(eq.finite_singularities);
    auto g = [&](Complex z) {
      const Complex p = eq.coefficient_p(z);
      return 0.5 * (s(z) + eq.coefficient_p_derivative(z) + 0.5 * p * p) * product(z);
    };
    double max_dist = 1.0;
    for (Complex a : eq.finite_singularities)
      max_dist = std::max(max_dist, std::abs(a - center));
    const int samples = 128;
    const double leading = eq.alpha_prime * eq.alpha_double_prime;
    double best_error = std::numeric_limits<double>::infinity();
    std::vector<Complex> best_coeffs;
    for (double stretch : {2.0, 2.74, 1.46, 3.8}) {
      const double radius = stretch * max_dist;
      std::vector<Complex> coeffs(size_t(degree) + 4);
      double scale = 1.0;
      for (int k = 0; k < int(coeffs.size()); ++k) {
        coeffs[size_t(k)] = laurent_coefficient(g, center, k, radius, samples);
        if (k <= degree)
          scale = std::max(scale, std::abs(coeffs[size_t(k)]) * std::pow(radius, k));
      }
      // Energy above the target degree and defect in the forced leading
      // coefficient both signal an inconsistent pair or an unlucky radius.
      double error = std::abs(coeffs[size_t(degree)] - Complex(leading)) *
                     std::pow(radius, degree) / scale;
      for (int k = degree + 1; k < int(coeffs.size()); ++k)
        error = std::max(error, std::abs(coeffs[size_t(k)]) * std::pow(radius, k) / scale);
      if (error < best_error) {
        best_error = error;
        best_coeffs = coeffs;
      }
      if (best_error < 1e-9) break;
    }
    if (best_error > 1e-6)
      throw std::runtime_error("accessory parameter extraction is inconsistent (defect " +
                               std::to_string(best_error) + ")");
    eq.accessory_center = center;
    eq.accessory_local.assign(best_coeffs.begin(), best_coeffs.begin() + degree + 1);
    eq.accessory_local[size_t(degree)] = Complex(leading);
    eq.accessory_fit_error = best_error;

    detail::enforce_apparent_singularities(eq);
    const double obstruction = detail::worst_log_obstruction(eq);
    if (obstruction > 1e-6)
      throw std::runtime_error("interior corners fail the apparentness conditions (obstruction " +
                               std::to_string(obstruction) + ")");

    // Monomial accessory list for reporting: Taylor-shift the centered
    // coefficients back to powers of z (synthetic Horner shift by -center).
    std::vector<Complex> monomial = eq.accessory_local;
    const Complex shift = -center;
    for (int i = 0; i < degree; ++i)
      for (int k = degree - 1; k >= i; --k)
        monomial[size_t(k)] += shift * monomial[size_t(k + 1)];
    eq.accessory.assign(monomial.begin(), monomial.begin() + degree);
  }
  return eq;
}

}  // namespace sphgon
