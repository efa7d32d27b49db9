#pragma once

// Monodromy of Fuchsian equations along explicit loops.
//
// The second-order equation w'' + p w' + r w = 0 is transported as the
// first-order system Y' = A(z) Y with A = [[0, 1], [-r, -p]] acting on
// Y = (w, w').  A loop is a base point plus segments and circular arcs; the
// transfer matrix is integrated with an adaptive Dormand-Prince 5(4) scheme
// together with the Abel integral of p, whose exponential predicts the
// determinant and provides an independent accuracy check:
// det M = exp(-loop integral of p).

#include <sphgon/fuchsian.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sphgon {

using Matrix2cd = Eigen::Matrix2cd;

struct PathPiece {
  enum class Kind { Segment, Arc };
  Kind kind = Kind::Segment;
  // Segment data.
  Complex from, to;
  // Arc data: z = center + radius * exp(i theta), theta from angle_from
  // through a signed sweep.
  Complex center;
  double radius = 0.0;
  double angle_from = 0.0;
  double sweep = 0.0;

  static PathPiece segment(Complex from, Complex to) {
    PathPiece piece;
    piece.kind = Kind::Segment;
    piece.from = from;
    piece.to = to;
    return piece;
  }

  static PathPiece arc(Complex center, double radius, double angle_from, double sweep) {
    PathPiece piece;
    piece.kind = Kind::Arc;
    piece.center = center;
    piece.radius = radius;
    piece.angle_from = angle_from;
    piece.sweep = sweep;
    return piece;
  }

  Complex point(double t) const {
    if (kind == Kind::Segment) return from + (to - from) * t;
    return center + std::polar(radius, angle_from + sweep * t);
  }

  Complex velocity(double t) const {
    if (kind == Kind::Segment) return to - from;
    return Complex(0.0, sweep) * std::polar(radius, angle_from + sweep * t);
  }
};

struct Loop {
  Complex base;
  std::vector<PathPiece> pieces;
  double clearance = std::numeric_limits<double>::infinity();
};

inline Complex default_monodromy_base(const std::vector<Complex>& singularities) {
  double max_abs = 0.0;
  for (Complex a : singularities) max_abs = std::max(max_abs, std::abs(a));
  return Complex(0.0, -(1.0 + max_abs));
}

// Counterclockwise loop around singularities[index]: radial approach from
// the base, a full circle of half the distance to the nearest other
// singularity, and the radial return.  The clearance is the smallest
// distance from the path to any non-encircled singularity.
inline Loop loop_around(const std::vector<Complex>& singularities, size_t index,
                        Complex base, double min_clearance = 1e-3) {
  if (index >= singularities.size()) throw std::invalid_argument("singularity index out of range");
  const Complex a = singularities[index];
  double nearest = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < singularities.size(); ++j)
    if (j != index) nearest = std::min(nearest, std::abs(singularities[j] - a));
  const double radius =
      std::isfinite(nearest) ? 0.5 * nearest : 0.5 * std::max(1.0, std::abs(a));
  if (std::abs(base - a) <= radius)
    throw std::invalid_argument("base point lies inside the loop circle");

  const Complex direction = (base - a) / std::abs(base - a);
  const Complex approach = a + radius * direction;
  const double angle = std::arg(direction);

  Loop loop;
  loop.base = base;
  loop.pieces.push_back(PathPiece::segment(base, approach));
  loop.pieces.push_back(PathPiece::arc(a, radius, angle, 2.0 * M_PI));
  loop.pieces.push_back(PathPiece::segment(approach, base));

  for (const PathPiece& piece : loop.pieces) {
    for (int k = 0; k <= 128; ++k) {
      const Complex z = piece.point(double(k) / 128.0);
      for (size_t j = 0; j < singularities.size(); ++j) {
        if (j == index) continue;
        loop.clearance = std::min(loop.clearance, std::abs(z - singularities[j]));
      }
    }
  }
  if (loop.clearance < min_clearance)
    throw std::invalid_argument("loop passes too close to another singularity");
  return loop;
}

// Runs the second loop after the first (their base points must agree); the
// transfer matrix of the result is M(second) * M(first).
inline Loop join_loops(const Loop& first, const Loop& second) {
  if (std::abs(first.base - second.base) > 1e-12)
    throw std::invalid_argument("loops must share a base point to be joined");
  Loop joined = first;
  joined.pieces.insert(joined.pieces.end(), second.pieces.begin(), second.pieces.end());
  joined.clearance = std::min(first.clearance, second.clearance);
  return joined;
}

struct OdeConfig {
  double rtol = 1e-12;
  double atol = 1e-14;
  double initial_step = 1e-3;
  long max_steps = 200000;
};

namespace detail {

// State: the four transfer-matrix entries and the running Abel integral of p.
using OdeState = Eigen::Matrix<Complex, 5, 1>;

template <typename System>
void dormand_prince(System&& rhs, OdeState& y, const OdeConfig& config, long* steps_used) {
  static const double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
  static const double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  // Difference between the 5th- and 4th-order weights.
  static const double d[7] = {71.0 / 57600,      0.0,         -71.0 / 16695, 71.0 / 1920,
                              -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

  double t = 0.0;
  double h = std::min(config.initial_step, 1.0);
  OdeState k[7];
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    k[0] = rhs(t, y);
    for (int stage = 1; stage < 7; ++stage) {
      OdeState arg = y;
      for (int j = 0; j < stage; ++j)
        if (a[stage][j] != 0.0) arg += (h * a[stage][j]) * k[j];
      k[stage] = rhs(t + c[stage] * h, arg);
    }
    OdeState next = y;
    for (int j = 0; j < 6; ++j)
      if (a[6][j] != 0.0) next += (h * a[6][j]) * k[j];  // 5th-order weights = last stage row
    OdeState err = OdeState::Zero();
    for (int j = 0; j < 7; ++j)
      if (d[j] != 0.0) err += (h * d[j]) * k[j];

    double err_norm = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double scale =
          config.atol + config.rtol * std::max(std::abs(y[i]), std::abs(next[i]));
      err_norm = std::max(err_norm, std::abs(err[i]) / scale);
    }
    if (err_norm <= 1.0) {
      t += h;
      y = next;
      h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err_norm, 1e-16), -0.2)));
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
    }
    if (h < 1e-14) throw std::runtime_error("monodromy integration step underflow");
    if (++*steps_used > config.max_steps)
      throw std::runtime_error("monodromy integration exceeded the step budget");
  }
}

}  // namespace detail

struct MonodromyResult {
  Matrix2cd matrix;        // raw transfer matrix along the loop
  Matrix2cd normalized;    // matrix rescaled to determinant one
  Complex determinant;     // det of the raw matrix
  double det_defect = 0.0; // |det - exp(-Abel integral of p)|
  long steps = 0;
};

inline MonodromyResult loop_monodromy(const FuchsianEquation& eq, const Loop& loop,
                                      const OdeConfig& config = {}) {
  detail::OdeState y;
  y << Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0), Complex(0.0);
  long steps = 0;
  for (const PathPiece& piece : loop.pieces) {
    auto rhs = [&](double t, const detail::OdeState& state) {
      const Complex z = piece.point(t);
      const Complex v = piece.velocity(t);
      const Complex p = eq.coefficient_p(z);
      const Complex r = eq.coefficient_r(z);
      detail::OdeState out;
      out[0] = v * state[2];
      out[1] = v * state[3];
      out[2] = v * (-r * state[0] - p * state[2]);
      out[3] = v * (-r * state[1] - p * state[3]);
      out[4] = v * p;
      return out;
    };
    detail::dormand_prince(rhs, y, config, &steps);
  }

  MonodromyResult result;
  result.matrix << y[0], y[1], y[2], y[3];
  result.determinant = result.matrix.determinant();
  result.det_defect = std::abs(result.determinant - std::exp(-y[4]));
  result.normalized = result.matrix / std::sqrt(result.determinant);
  result.steps = steps;
  return result;
}

inline std::pair<Complex, Complex> eigenvalue_pair(const Matrix2cd& m) {
  const Complex tr = m(0, 0) + m(1, 1);
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex disc = std::sqrt(tr * tr - 4.0 * det);
  return {0.5 * (tr + disc), 0.5 * (tr - disc)};
}

// Ratio of the two eigenvalues, reported with modulus >= 1.
inline Complex eigenvalue_ratio(const Matrix2cd& m) {
  auto [l1, l2] = eigenvalue_pair(m);
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  if (std::abs(l2) == 0.0) return Complex(std::numeric_limits<double>::infinity(), 0.0);
  return l1 / l2;
}

// Distance of the projective eigenvalue ratio from exp(2 pi i beta), taking
// the closer of the ratio and its inverse.
inline double ratio_angle_defect(const Matrix2cd& m, double beta) {
  const Complex ratio = eigenvalue_ratio(m);
  const Complex target = std::polar(1.0, 2.0 * M_PI * beta);
  return std::min(std::abs(ratio - target), std::abs(Complex(1.0) / ratio - target));
}

// Distance of a determinant-one matrix from +-identity.
inline double projective_identity_defect(const Matrix2cd& normalized) {
  const Matrix2cd id = Matrix2cd::Identity();
  return std::min((normalized - id).cwiseAbs().maxCoeff(),
                  (normalized + id).cwiseAbs().maxCoeff());
}

enum class UnitarizabilityVerdict { CertifiedTrue, CertifiedFalse, ScreenPassed, ScreenFailed };

struct UnitarizabilityReport {
  UnitarizabilityVerdict verdict = UnitarizabilityVerdict::ScreenFailed;
  bool commuting = false;
  double worst_defect = 0.0;
  std::string detail;
};

// Decides unitarizability of the group generated by determinant-one
// matrices.  A commuting family is decided definitively: it is unitarizable
// exactly when every generator is elliptic or central (unit-modulus
// eigenvalues, no parabolic blocks).  A non-commuting family only goes
// through the necessary trace screen (real traces in [-2, 2] for generators
// and pairwise products), which can rule out but never certify.  Both the
// bracket test and the trace screen are judged relative to the entry
// magnitudes of the matrices involved: an error of size eps in a generator
// perturbs a bracket or a product trace by about |g_i| |g_j| eps, so for
// generators with large entries an absolute threshold would read that noise
// as genuine non-commutativity or as a trace violation.
inline UnitarizabilityReport unitarizability_check(const std::vector<Matrix2cd>& generators,
                                                   double tol = 1e-6) {
  UnitarizabilityReport report;
  std::vector<Matrix2cd> normalized;
  for (const Matrix2cd& g : generators) {
    const Complex det = g.determinant();
    if (std::abs(det) < 1e-12)
      throw std::invalid_argument("unitarizability check requires invertible matrices");
    normalized.push_back(g / std::sqrt(det));
  }
  const auto entry_scale = [](const Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); };

  double comm = 0.0;
  for (size_t i = 0; i < normalized.size(); ++i)
    for (size_t j = i + 1; j < normalized.size(); ++j) {
      const Matrix2cd bracket =
          normalized[i] * normalized[j] - normalized[j] * normalized[i];
      const double scale =
          std::max(1.0, entry_scale(normalized[i]) * entry_scale(normalized[j]));
      comm = std::max(comm, bracket.cwiseAbs().maxCoeff() / scale);
    }
  report.commuting = comm <= 100.0 * tol;

  if (report.commuting) {
    for (const Matrix2cd& g : normalized) {
      const auto [l1, l2] = eigenvalue_pair(g);
      const double modulus_defect = std::abs(std::abs(l1) - 1.0);
      report.worst_defect = std::max(report.worst_defect, modulus_defect);
      if (modulus_defect > tol) {
        report.verdict = UnitarizabilityVerdict::CertifiedFalse;
        report.detail = "an eigenvalue leaves the unit circle";
        return report;
      }
      if (std::abs(l1 - l2) <= 1e-6 && projective_identity_defect(g) > 1e3 * tol) {
        report.verdict = UnitarizabilityVerdict::CertifiedFalse;
        report.detail = "a parabolic generator cannot be unitarized";
        return report;
      }
    }
    report.verdict = UnitarizabilityVerdict::CertifiedTrue;
    report.detail = "commuting family with elliptic or central generators";
    return report;
  }

  std::vector<std::pair<Matrix2cd, double>> tested;
  for (const Matrix2cd& g : normalized)
    tested.emplace_back(g, std::max(1.0, entry_scale(g)));
  for (size_t i = 0; i < normalized.size(); ++i)
    for (size_t j = i + 1; j < normalized.size(); ++j)
      tested.emplace_back(normalized[i] * normalized[j],
                          std::max(1.0, entry_scale(normalized[i]) *
                                            entry_scale(normalized[j])));
  for (const auto& [m, scale] : tested) {
    const Complex tr = m(0, 0) + m(1, 1);
    const double defect = std::max(std::abs(tr.imag()),
                                   std::max(0.0, std::abs(tr.real()) - 2.0)) /
                          scale;
    report.worst_defect = std::max(report.worst_defect, defect);
  }
  report.verdict = report.worst_defect <= tol ? UnitarizabilityVerdict::ScreenPassed
                                              : UnitarizabilityVerdict::ScreenFailed;
  report.detail = report.verdict == UnitarizabilityVerdict::ScreenPassed
                      ? "necessary trace conditions hold (no certificate)"
                      : "a trace leaves the real interval [-2, 2]";
  return report;
}

}  // namespace sphgon
