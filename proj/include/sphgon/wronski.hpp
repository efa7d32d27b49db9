#pragma once

// Fibers of the transport map
//
//     W_alpha(P, Q) = z (P'Q - P Q') + alpha P Q
//
// over a prescribed critical polynomial R: solving W_alpha(P, Q) = c R for
// polynomial pairs of prescribed degrees, classifying solutions, verifying
// them, and continuing them in the exponent alpha.
//
// Chart: for exact degrees (p, q) both polynomials are normalized monic, and
// the scalar c joins the unknowns, giving a square system in p + q + 1
// complex variables.  The leading coefficient of W_alpha is (p - q + alpha)
// for monic inputs, which never vanishes for non-integer alpha, so every
// fiber point over a target of exact degree p + q lives in this chart.
//
// Solutions with prescribed vanishing orders p0, q0 at the origin reduce to
// the unconstrained problem through the identity
//
//     W_alpha(z^{p0} A, z^{q0} B) = z^{p0+q0} W_{alpha+p0-q0}(A, B),
//
// so the solver peels off the forced z-power from the target and shifts the
// exponent accordingly.
//
// The fiber is found deterministically by a coefficient homotopy: with the
// family  F_t = a(t) z(P'Q - PQ') + PQ - cR  and a(0) = 0, the start system
// PQ = cR factors the target, so start points are exactly the root splits of
// R into p roots for P and q for Q -- binomial(p+q, p) of them, matching the
// fiber degree.  Paths are tracked to a(1) = 1/alpha with a small imaginary
// detour to stay clear of real degenerations.  A random multistart pass tops
// up anything a failed path left behind.

#include <sphgon/feasibility.hpp>
#include <sphgon/polynomial.hpp>
#include <sphgon/rational.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sphgon {

struct PolynomialPair {
  Poly P;
  Poly Q;
  double alpha = 0.0;
};

inline Poly wronski_map(const Poly& P, const Poly& Q, double alpha) {
  const Poly z = Poly::monomial(1);
  return z * (P.derivative() * Q - P * Q.derivative()) + alpha * (P * Q);
}

inline Poly wronski_map(const PolynomialPair& pair) {
  return wronski_map(pair.P, pair.Q, pair.alpha);
}

struct SolverConfig {
  double residual_tol = 1e-10;   // relative least-squares residual acceptance
  double realness_tol = 1e-8;    // imaginary parts after phase normalization
  double dedup_tol = 1e-6;       // chart distance identifying two solutions
  int max_newton_iters = 60;     // per multistart attempt
  int num_starts = 400;          // random multistart budget
  unsigned long long rng_seed = 1;
  double continuation_step = 0.05;  // initial homotopy step in t
};

// Monic critical polynomial z^{max(p0,q0)} * prod_j (z - a_j)^{m_j} for
// corners a_j with root multiplicities m_j (interior angle minus one).
inline Poly critical_polynomial(const std::vector<Complex>& corners,
                                const std::vector<int>& multiplicities,
                                const DegreeSolution& degrees) {
  if (corners.size() != multiplicities.size())
    throw std::invalid_argument("corners and multiplicities must have equal length");
  const int m0 = std::max(degrees.p0, degrees.q0);
  long total = m0;
  for (size_t i = 0; i < corners.size(); ++i) {
    if (multiplicities[i] < 1)
      throw std::invalid_argument("corner multiplicities must be positive");
    if (std::abs(corners[i]) == 0.0)
      throw std::invalid_argument("interior corners must be away from the origin");
    for (size_t j = i + 1; j < corners.size(); ++j)
      if (std::abs(corners[i] - corners[j]) == 0.0)
        throw std::invalid_argument("interior corners must be distinct");
    total += multiplicities[i];
  }
  if (total != degrees.p + degrees.q)
    throw std::invalid_argument("corner multiplicities are inconsistent with the degrees");
  Poly r = Poly::monomial(m0);
  for (size_t i = 0; i < corners.size(); ++i)
    for (int k = 0; k < multiplicities[i]; ++k) r = r * Poly{-corners[i], Complex(1.0)};
  return r;
}

struct Classification {
  int degree_p = 0;
  int degree_q = 0;
  int order_p0 = 0;  // vanishing order of P at the origin
  int order_q0 = 0;
  double alpha0 = 0.0;      // |p0 - q0 + alpha|
  double alpha_inf = 0.0;   // |p - q + alpha|
  bool ambiguous = false;   // a root sits suspiciously near (not at) the origin
};

namespace detail {

// Vanishing order at the origin, read off the coefficients (robust for exact
// stored zeros); roots that crowd the origin beyond that order make the
// classification ambiguous.
inline int origin_root_count(const Poly& f, double tol, bool* ambiguous) {
  const double cut = tol * f.sup_norm();
  int order = 0;
  while (order <= f.degree() && std::abs(f.coeff(order)) <= cut) ++order;
  std::vector<double> moduli;
  for (Complex r : f.roots()) moduli.push_back(std::abs(r));
  std::sort(moduli.begin(), moduli.end());
  for (size_t i = size_t(order); i < moduli.size(); ++i)
    if (moduli[i] <= 1e3 * tol) *ambiguous = true;
  return order;
}

}  // namespace detail

inline Classification classify_solution(const PolynomialPair& pair,
                                        const SolverConfig& config = {}) {
  if (pair.P.is_zero() || pair.Q.is_zero())
    throw std::invalid_argument("cannot classify a pair with a zero polynomial");
  Classification c;
  c.degree_p = pair.P.numeric_degree();
  c.degree_q = pair.Q.numeric_degree();
  c.order_p0 = detail::origin_root_count(pair.P, config.dedup_tol, &c.ambiguous);
  c.order_q0 = detail::origin_root_count(pair.Q, config.dedup_tol, &c.ambiguous);
  c.alpha0 = std::abs(double(c.order_p0 - c.order_q0) + pair.alpha);
  c.alpha_inf = std::abs(double(c.degree_p - c.degree_q) + pair.alpha);
  return c;
}

struct PairAdmissibility {
  bool shares_root = false;   // P and Q have a common zero
  int min_origin_order = 0;   // min of the vanishing orders at the origin
  bool admissible = false;
};

inline PairAdmissibility pair_admissibility(const PolynomialPair& pair,
                                            const SolverConfig& config = {}) {
  PairAdmissibility a;
  if (pair.P.is_zero() || pair.Q.is_zero()) {
    a.shares_root = true;
    return a;
  }
  a.shares_root = have_common_root(pair.P, pair.Q, config.dedup_tol);
  const int op = pair.P.order_at_origin();
  const int oq = pair.Q.order_at_origin();
  a.min_origin_order = std::min(op, oq);
  a.admissible = !a.shares_root && a.min_origin_order == 0;
  return a;
}

inline bool poly_is_real_up_to_phase(const Poly& f, double tol) {
  if (f.is_zero()) return true;
  const double sup = f.sup_norm();
  Complex largest(0.0);
  for (const Complex& c : f.coefficients())
    if (std::abs(c) > std::abs(largest)) largest = c;
  const Complex rotate = std::conj(largest) / std::abs(largest);
  for (const Complex& c : f.coefficients())
    if (std::abs((rotate * c).imag()) > tol * sup) return false;
  return true;
}

inline bool pair_is_real(const PolynomialPair& pair, double tol) {
  return poly_is_real_up_to_phase(pair.P, tol) && poly_is_real_up_to_phase(pair.Q, tol);
}

struct VerificationReport {
  double residual = 1.0;              // relative least-squares distance to the ray of R
  bool residual_ok = false;
  double worst_corner_defect = 0.0;   // normalized derivative values at corner roots
  bool corner_orders_ok = false;
  bool ok = false;
};

namespace detail {

inline Complex least_squares_scalar(const Poly& target, const Poly& w) {
  Complex num(0.0);
  double den = 0.0;
  const int n = std::max(target.degree(), w.degree());
  for (int k = 0; k <= n; ++k) {
    num += std::conj(target.coeff(k)) * w.coeff(k);
    den += std::norm(target.coeff(k));
  }
  if (den == 0.0) return Complex(0.0);
  return num / den;
}

}  // namespace detail

inline VerificationReport verify_solution(const PolynomialPair& pair, const Poly& target,
                                          const SolverConfig& config = {}) {
  VerificationReport report;
  const Poly w = wronski_map(pair);
  if (w.is_zero() || target.is_zero()) return report;

  const Complex c = detail::least_squares_scalar(target, w);
  double err2 = 0.0;
  double scale2 = 0.0;
  const int n = std::max(target.degree(), w.degree());
  for (int k = 0; k <= n; ++k) {
    err2 += std::norm(w.coeff(k) - c * target.coeff(k));
    scale2 += std::norm(w.coeff(k));
  }
  report.residual = std::sqrt(err2 / scale2);
  report.residual_ok = report.residual <= config.residual_tol;

  // Each corner root of the target of multiplicity m must kill the first m
  // derivatives of W; the defect is normalized by the sup norm and the
  // growth of each derivative.
  const double corner_tol = 1e-6;
  for (const RootCluster& cluster : cluster_roots(target.roots(), config.dedup_tol)) {
    Poly d = w;
    for (int k = 0; k < cluster.multiplicity; ++k) {
      const double growth =
          std::pow(std::max(1.0, std::abs(cluster.center)), std::max(0, d.numeric_degree()));
      const double defect = std::abs(d(cluster.center)) / (d.sup_norm() * growth);
      report.worst_corner_defect = std::max(report.worst_corner_defect, defect);
      d = d.derivative();
    }
  }
  report.corner_orders_ok = report.worst_corner_defect <= corner_tol;
  report.ok = report.residual_ok && report.corner_orders_ok;
  return report;
}

// Principal-branch developing map z^alpha P(z) / Q(z).  The branch cut
// (-inf, 0] is outside the domain; poles return complex infinity.
inline Complex evaluate_developing_map(const PolynomialPair& pair, Complex z) {
  if (z.imag() == 0.0 && z.real() <= 0.0)
    throw std::domain_error("developing map is evaluated off the branch cut (-inf, 0]");
  const Complex qv = pair.Q(z);
  const double growth =
      std::pow(std::max(1.0, std::abs(z)), std::max(0, pair.Q.numeric_degree()));
  if (std::abs(qv) <= 1e-13 * pair.Q.sup_norm() * growth) {
    const double inf = std::numeric_limits<double>::infinity();
    return Complex(inf, inf);
  }
  return std::pow(z, pair.alpha) * pair.P(z) / qv;
}

struct SolutionReport {
  PolynomialPair pair;
  double residual = 0.0;
  bool is_real = false;
  Classification realized;
};

struct WronskiFiber {
  long expected = 0;
  std::vector<SolutionReport> solutions;
  bool complete = false;
  std::string warning;
};

class ContinuationError : public std::runtime_error {
 public:
  ContinuationError(const std::string& msg, double last_alpha_)
      : std::runtime_error(msg), last_alpha(last_alpha_) {}
  double last_alpha;
};

namespace detail {

// One-parameter family  F_t(u, v, c) = a(t) z(P'Q - PQ') + b(t) PQ - cR
// in the monic chart: unknowns are the p low coefficients of P, the q low
// coefficients of Q, and the scalar c.
struct ChartFamily {
  int p = 0;
  int q = 0;
  Poly target;  // exact degree p + q
  Complex a_start, a_end, a_bump;
  Complex b_start, b_end, b_bump;

  int dim() const { return p + q + 1; }
  Complex a(double t) const { return a_start + (a_end - a_start) * t + a_bump * (t * (1.0 - t)); }
  Complex b(double t) const { return b_start + (b_end - b_start) * t + b_bump * (t * (1.0 - t)); }
  Complex da(double t) const { return (a_end - a_start) + a_bump * (1.0 - 2.0 * t); }
  Complex db(double t) const { return (b_end - b_start) + b_bump * (1.0 - 2.0 * t); }
};

inline void chart_polys(const Eigen::VectorXcd& x, int p, int q, Poly* P, Poly* Q) {
  std::vector<Complex> pc(p + 1), qc(q + 1);
  for (int i = 0; i < p; ++i) pc[i] = x[i];
  pc[p] = Complex(1.0);
  for (int j = 0; j < q; ++j) qc[j] = x[p + j];
  qc[q] = Complex(1.0);
  *P = Poly(std::move(pc));
  *Q = Poly(std::move(qc));
}

struct FamilyEvaluation {
  Eigen::VectorXcd F;
  Eigen::MatrixXcd J;
  Eigen::VectorXcd Ft;  // partial derivative in t
  double scale = 1.0;
};

inline FamilyEvaluation evaluate_family(const ChartFamily& fam, const Eigen::VectorXcd& x,
                                        double t, bool with_jacobian) {
  const int p = fam.p, q = fam.q, n = p + q, dim = fam.dim();
  Poly P, Q;
  chart_polys(x, p, q, &P, &Q);
  const Complex c = x[dim - 1];
  const Poly dP = P.derivative();
  const Poly dQ = Q.derivative();
  const Poly z = Poly::monomial(1);
  const Poly transport = z * (dP * Q - P * dQ);
  const Poly product = P * Q;
  const Complex a = fam.a(t), b = fam.b(t);

  FamilyEvaluation ev;
  ev.F.resize(dim);
  for (int k = 0; k <= n; ++k)
    ev.F[k] = a * transport.coeff(k) + b * product.coeff(k) - c * fam.target.coeff(k);
  ev.scale = std::max(
      1.0, std::max(std::abs(a) * transport.sup_norm() + std::abs(b) * product.sup_norm(),
                    std::abs(c) * fam.target.sup_norm()));

  if (!with_jacobian) return ev;

  ev.J.resize(dim, dim);
  for (int i = 0; i < p; ++i) {
    // d/du_i of a z(P'Q - PQ') + b PQ  with  dP/du_i = z^i.
    const Poly col = a * (double(i) * Poly::monomial(i) * Q - Poly::monomial(i + 1) * dQ) +
                     b * (Poly::monomial(i) * Q);
    for (int k = 0; k <= n; ++k) ev.J(k, i) = col.coeff(k);
  }
  for (int j = 0; j < q; ++j) {
    const Poly col = a * (Poly::monomial(j + 1) * dP - double(j) * Poly::monomial(j) * P) +
                     b * (Poly::monomial(j) * P);
    for (int k = 0; k <= n; ++k) ev.J(k, p + j) = col.coeff(k);
  }
  for (int k = 0; k <= n; ++k) ev.J(k, dim - 1) = -fam.target.coeff(k);

  const Complex da = fam.da(t), db = fam.db(t);
  ev.Ft.resize(dim);
  for (int k = 0; k <= n; ++k) ev.Ft[k] = da * transport.coeff(k) + db * product.coeff(k);
  return ev;
}

inline bool newton_correct(const ChartFamily& fam, Eigen::VectorXcd& x, double t, int iters,
                           double tol) {
  for (int it = 0; it < iters; ++it) {
    FamilyEvaluation ev = evaluate_family(fam, x, t, true);
    if (ev.F.lpNorm<Eigen::Infinity>() <= tol * ev.scale) return true;
    const Eigen::VectorXcd dx = ev.J.partialPivLu().solve(-ev.F);
    if (!dx.allFinite()) return false;
    x += dx;
    if (x.lpNorm<Eigen::Infinity>() > 1e10) return false;
  }
  const FamilyEvaluation ev = evaluate_family(fam, x, t, false);
  return ev.F.lpNorm<Eigen::Infinity>() <= tol * ev.scale;
}

// Tracks x from t = 0 to t = 1; on failure reports the last good t.
inline bool track_path(const ChartFamily& fam, Eigen::VectorXcd& x, double initial_step,
                       double track_tol, double* t_reached, double step_cap = 0.25) {
  double t = 0.0;
  if (!newton_correct(fam, x, t, 16, track_tol)) {
    if (t_reached != nullptr) *t_reached = 0.0;
    return false;
  }
  double h = std::max(1e-4, initial_step);
  const double h_max = std::max(step_cap, initial_step);
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    FamilyEvaluation ev = evaluate_family(fam, x, t, true);
    const Eigen::VectorXcd dx = ev.J.partialPivLu().solve(-ev.Ft * h);
    Eigen::VectorXcd trial = x;
    if (dx.allFinite()) trial += dx;
    if (newton_correct(fam, trial, t + h, 8, track_tol)) {
      x = trial;
      t += h;
      h = std::min(h * 1.5, h_max);
    } else {
      h *= 0.5;
      if (h < 1e-8) {
        if (t_reached != nullptr) *t_reached = t;
        return false;
      }
    }
  }
  if (t_reached != nullptr) *t_reached = 1.0;
  return true;
}

inline bool is_new_point(const std::vector<Eigen::VectorXcd>& found, const Eigen::VectorXcd& x,
                         double tol) {
  for (const Eigen::VectorXcd& y : found)
    if ((x - y).lpNorm<Eigen::Infinity>() < tol) return false;
  return true;
}

// Solves W_alpha(P, Q) = cR in the monic chart of exact degrees (p, q).
// Returns chart vectors, deterministically ordered.
inline std::vector<Eigen::VectorXcd> solve_monic_fiber(int p, int q, double alpha,
                                                       const Poly& target,
                                                       const SolverConfig& config,
                                                       std::string* warning) {
  const int n = p + q;
  ChartFamily fam;
  fam.p = p;
  fam.q = q;
  fam.target = target;
  fam.a_start = Complex(0.0);
  fam.a_end = Complex(1.0 / alpha);
  fam.a_bump = Complex(0.0, 0.25 * (1.0 + std::abs(fam.a_end)));
  fam.b_start = fam.b_end = Complex(1.0);
  fam.b_bump = Complex(0.0);

  const double track_tol = 1e-9;
  const double polish_tol = 1e-13;
  std::vector<Eigen::VectorXcd> found;

  // Start points: splits of the target roots between P and Q.  Usable only
  // when the target roots are numerically simple.
  const std::vector<Complex> roots = target.roots();
  double min_gap = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (size_t i = 0; i < roots.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(roots[i]));
    for (size_t j = i + 1; j < roots.size(); ++j)
      min_gap = std::min(min_gap, std::abs(roots[i] - roots[j]));
  }
  const bool simple_roots = min_gap > 1e-4 * std::max(1.0, max_abs);
  const long expected = binomial(n, p).convert_to<long>();

  const auto polish_and_keep = [&](Eigen::VectorXcd& x) {
    if ((newton_correct(fam, x, 1.0, config.max_newton_iters, polish_tol) ||
         newton_correct(fam, x, 1.0, 4, 1e-10)) &&
        is_new_point(found, x, config.dedup_tol))
      found.push_back(x);
  };

  if (simple_roots) {
    // One pass tracks every root-split start along the detoured family.  When
    // two paths run nearly parallel (typical over targets with real symmetry)
    // the corrector can hop between them and two starts land on the same
    // endpoint; further passes rotate the detour and shrink the step, which
    // reroutes and separates the paths, so repeating the sweep deterministically
    // recovers what the first pass merged.
    const Complex bump = fam.a_bump;
    const Complex rotations[] = {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.6, 0.8),
                                 Complex(-0.28, -0.96)};
    for (int sweep = 0; sweep < 4 && long(found.size()) < expected; ++sweep) {
      fam.a_bump = bump * rotations[sweep];
      const double step = config.continuation_step / double(1 << sweep);
      const double step_cap = 0.25 / double(1 << sweep);
      const Complex lead = target.coeff(n);
      std::vector<int> pick(p);
      for (int i = 0; i < p; ++i) pick[i] = i;
      bool more = true;
      while (more) {
        std::vector<Complex> proots, qroots;
        std::vector<bool> used(n, false);
        for (int i : pick) used[i] = true;
        for (int i = 0; i < n; ++i) (used[i] ? proots : qroots).push_back(roots[i]);
        const Poly P0 = Poly::from_roots(proots);
        const Poly Q0 = Poly::from_roots(qroots);
        Eigen::VectorXcd x(fam.dim());
        for (int i = 0; i < p; ++i) x[i] = P0.coeff(i);
        for (int j = 0; j < q; ++j) x[p + j] = Q0.coeff(j);
        x[fam.dim() - 1] = Complex(1.0) / lead;
        if (track_path(fam, x, step, track_tol, nullptr, step_cap)) polish_and_keep(x);

        // next p-combination of {0..n-1}
        more = false;
        for (int i = p - 1; i >= 0; --i) {
          if (pick[i] < n - p + i) {
            ++pick[i];
            for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (p == 0) more = false;
      }
    }
    fam.a_bump = bump;
  } else if (warning != nullptr) {
    *warning = "target roots are clustered; fiber enumeration may be incomplete";
  }

  if (long(found.size()) < expected) {
    // Random multistart directly on the end system.  Starts alternate between
    // perturbed root splits (solutions with moderate roots attract these) and
    // coefficient-space draws (covers the rest).
    std::mt19937_64 rng(config.rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double scales[3] = {1.0, 0.5, 2.0};
    const double spreads[3] = {0.2, 0.5, 1.0};
    const double scale_base = std::max(1.0, max_abs);
    std::vector<int> shuffle_index(n);
    for (int i = 0; i < n; ++i) shuffle_index[i] = i;
    for (int s = 0; s < config.num_starts && long(found.size()) < expected; ++s) {
      Eigen::VectorXcd x(fam.dim());
      if (simple_roots && s % 2 == 0) {
        for (int i = n - 1; i > 0; --i)
          std::swap(shuffle_index[size_t(i)], shuffle_index[rng() % (size_t(i) + 1)]);
        const double spread = spreads[(s / 2) % 3] * scale_base;
        std::vector<Complex> proots, qroots;
        for (int i = 0; i < n; ++i) {
          const Complex jitter = spread * Complex(gauss(rng), gauss(rng));
          (i < p ? proots : qroots).push_back(roots[size_t(shuffle_index[size_t(i)])] + jitter);
        }
        const Poly P0 = Poly::from_roots(proots);
        const Poly Q0 = Poly::from_roots(qroots);
        for (int i = 0; i < p; ++i) x[i] = P0.coeff(i);
        for (int j = 0; j < q; ++j) x[p + j] = Q0.coeff(j);
      } else {
        const double scale = scales[s % 3] * scale_base;
        for (int i = 0; i < n; ++i) x[i] = scale * Complex(gauss(rng), gauss(rng));
      }
      Poly P0, Q0;
      chart_polys(x, p, q, &P0, &Q0);
      const Poly z = Poly::monomial(1);
      const Poly w = fam.a_end * (z * (P0.derivative() * Q0 - P0 * Q0.derivative())) + P0 * Q0;
      x[fam.dim() - 1] = least_squares_scalar(target, w);
      polish_and_keep(x);
    }
  }

  std::sort(found.begin(), found.end(), [](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    for (int k = 0; k < a.size(); ++k) {
      if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
      if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
    }
    return false;
  });
  return found;
}

}  // namespace detail

inline WronskiFiber solve_wronski(const Poly& target, const DegreeSolution& degrees,
                                  const SolverConfig& config = {}) {
  const int p = degrees.p, q = degrees.q, p0 = degrees.p0, q0 = degrees.q0;
  if (p < 0 || q < 0 || p0 < 0 || q0 < 0 || p0 > p || q0 > q || std::min(p0, q0) != 0)
    throw std::invalid_argument("invalid degree data");
  const double alpha = to_double(degrees.alpha);
  if (target.numeric_degree() != p + q)
    throw std::invalid_argument("target degree must equal p + q");

  // Peel the forced origin root: W(z^{p0}A, z^{q0}B) = z^{p0+q0} W'(A, B).
  const int m0 = std::max(p0, q0);
  Poly reduced = target;
  if (m0 > 0) {
    if (target.order_at_origin() < m0)
      throw std::invalid_argument("target lacks the origin root forced by p0/q0");
    std::vector<Complex> shifted(target.coefficients().begin() + m0,
                                 target.coefficients().end());
    reduced = Poly(std::move(shifted));
  }
  const int rp = p - p0, rq = q - q0;
  const double ralpha = alpha + double(p0) - double(q0);

  WronskiFiber fiber;
  fiber.expected = binomial(rp + rq, rp).convert_to<long>();

  std::string warning;
  const auto points = detail::solve_monic_fiber(rp, rq, ralpha, reduced, config, &warning);

  const Poly shift_p = Poly::monomial(p0);
  const Poly shift_q = Poly::monomial(q0);
  for (const Eigen::VectorXcd& x : points) {
    Poly A, B;
    detail::chart_polys(x, rp, rq, &A, &B);
    SolutionReport report;
    report.pair = PolynomialPair{shift_p * A, shift_q * B, alpha};
    report.residual = verify_solution(report.pair, target, config).residual;
    report.is_real = pair_is_real(report.pair, config.realness_tol);
    report.realized = classify_solution(report.pair, config);
    fiber.solutions.push_back(std::move(report));
  }
  fiber.complete = long(fiber.solutions.size()) == fiber.expected;
  if (!fiber.complete && warning.empty())
    warning = "found " + std::to_string(fiber.solutions.size()) + " of " +
              std::to_string(fiber.expected) + " expected solutions";
  fiber.warning = warning;
  return fiber;
}

inline PolynomialPair continue_alpha(const PolynomialPair& start, const Poly& target,
                                     double new_alpha, const SolverConfig& config = {}) {
  const VerificationReport check = verify_solution(start, target, config);
  if (check.residual > 1e-6)
    throw std::invalid_argument("initial pair does not lie on the target fiber");
  if (std::abs(new_alpha - start.alpha) < 1e-14) return start;

  const int p = start.P.numeric_degree();
  const int q = start.Q.numeric_degree();
  const int p0 = start.P.order_at_origin();
  const int q0 = start.Q.order_at_origin();
  const int m0 = std::min(p0, q0) == 0 ? std::max(p0, q0) : 0;

  Poly reduced = target;
  if (m0 > 0) {
    if (target.order_at_origin() < m0)
      throw std::invalid_argument("target lacks the origin root of the pair");
    std::vector<Complex> shifted(target.coefficients().begin() + m0,
                                 target.coefficients().end());
    reduced = Poly(std::move(shifted));
  }
  const int rp = p - (m0 > 0 ? p0 : 0), rq = q - (m0 > 0 ? q0 : 0);
  const double shift = m0 > 0 ? double(p0) - double(q0) : 0.0;

  detail::ChartFamily fam;
  fam.p = rp;
  fam.q = rq;
  fam.target = reduced;
  fam.a_start = fam.a_end = Complex(1.0);
  fam.a_bump = Complex(0.0);
  fam.b_start = Complex(start.alpha + shift);
  fam.b_end = Complex(new_alpha + shift);
  fam.b_bump = Complex(0.0, 0.1 * std::abs(new_alpha - start.alpha));

  // Enter the monic chart of the reduced pair.
  Eigen::VectorXcd x(fam.dim());
  {
    const Complex plead = start.P.coeff(p);
    const Complex qlead = start.Q.coeff(q);
    for (int i = 0; i < rp; ++i) x[i] = start.P.coeff(i + (m0 > 0 ? p0 : 0)) / plead;
    for (int j = 0; j < rq; ++j) x[rp + j] = start.Q.coeff(j + (m0 > 0 ? q0 : 0)) / qlead;
    Poly A, B;
    detail::chart_polys(x, rp, rq, &A, &B);
    const Poly w = wronski_map(A, B, start.alpha + shift);
    x[fam.dim() - 1] = detail::least_squares_scalar(reduced, w);
  }

  const double track_tol = 1e-9;
  double t_reached = 0.0;
  if (!detail::track_path(fam, x, config.continuation_step, track_tol, &t_reached)) {
    const double last = start.alpha + (new_alpha - start.alpha) * t_reached;
    throw ContinuationError("continuation step size underflow near alpha = " +
                                std::to_string(last),
                            last);
  }
  if (!detail::newton_correct(fam, x, 1.0, config.max_newton_iters, 1e-13) &&
      !detail::newton_correct(fam, x, 1.0, 4, 1e-10))
    throw ContinuationError("final polish failed at alpha = " + std::to_string(new_alpha),
                            new_alpha);

  Poly A, B;
  detail::chart_polys(x, rp, rq, &A, &B);
  return PolynomialPair{Poly::monomial(m0 > 0 ? p0 : 0) * A,
                        Poly::monomial(m0 > 0 ? q0 : 0) * B, new_alpha};
}

}  // namespace sphgon
