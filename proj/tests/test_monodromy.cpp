#include <catch2/catch_amalgamated.hpp>

#include <sphgon/feasibility.hpp>
#include <sphgon/fuchsian.hpp>
#include <sphgon/monodromy.hpp>
#include <sphgon/wronski.hpp>

#include <cmath>
#include <complex>

using sphgon::AngleSignature;
using sphgon::Complex;
using sphgon::FuchsianEquation;
using sphgon::Loop;
using sphgon::Matrix2cd;
using sphgon::Poly;
using sphgon::Rational;
using sphgon::UnitarizabilityVerdict;

namespace {

// Two-cornered equation w'' + (1/(2z)) w' = 0 with solutions 1 and sqrt(z).
FuchsianEquation square_root_equation() {
  FuchsianEquation eq;
  eq.finite_singularities = {Complex(0.0)};
  eq.alpha0 = 0.5;
  eq.alpha_prime = 0.0;
  eq.alpha_double_prime = -0.5;
  return eq;
}

struct QuadSetup {
  AngleSignature sig;
  std::vector<Complex> corners{Complex(1.0), Complex(2.0)};
  FuchsianEquation eq;

  QuadSetup() {
    sig.alpha0 = Rational(1, 2);
    sig.interior = {2, 2};
    sig.alpha_inf = Rational(1, 2);
    const auto report = sphgon::check_angles(sig);
    REQUIRE(report.feasible);
    const auto degrees = report.solutions.front();
    const Poly target = sphgon::critical_polynomial(corners, {1, 1}, degrees);
    const auto fiber = sphgon::solve_wronski(target, degrees);
    REQUIRE(fiber.complete);
    eq = sphgon::build_fuchsian(sig, corners, fiber.solutions[0].pair);
  }
};

Matrix2cd diag(Complex a, Complex b) {
  Matrix2cd m = Matrix2cd::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("path pieces parametrize segments and arcs") {
  const auto seg = sphgon::PathPiece::segment(Complex(0.0), Complex(2.0, 2.0));
  REQUIRE(std::abs(seg.point(0.5) - Complex(1.0, 1.0)) < 1e-15);
  REQUIRE(std::abs(seg.velocity(0.3) - Complex(2.0, 2.0)) < 1e-15);

  const auto arc = sphgon::PathPiece::arc(Complex(1.0), 2.0, 0.0, M_PI);
  REQUIRE(std::abs(arc.point(0.0) - Complex(3.0)) < 1e-15);
  REQUIRE(std::abs(arc.point(1.0) - Complex(-1.0)) < 1e-12);
  // velocity at t=0 points upward for a counterclockwise arc
  REQUIRE(arc.velocity(0.0).imag() > 0.0);
}

TEST_CASE("loop construction validates clearance") {
  const std::vector<Complex> sing{Complex(0.0), Complex(1.0), Complex(2.0)};
  const Complex base = sphgon::default_monodromy_base(sing);
  REQUIRE(base.imag() == Catch::Approx(-3.0));

  const Loop loop = sphgon::loop_around(sing, 1, base);
  REQUIRE(loop.pieces.size() == 3);
  REQUIRE(loop.clearance > 0.4);  // radius is 0.5, neighbors at distance 1

  // A base sitting on top of another singularity cannot give a clean loop.
  REQUIRE_THROWS_AS(sphgon::loop_around(sing, 1, Complex(2.0, 1e-9)), std::invalid_argument);
  REQUIRE_THROWS_AS(sphgon::loop_around(sing, 7, base), std::invalid_argument);
}

TEST_CASE("square root monodromy has projective ratio minus one") {
  const FuchsianEquation eq = square_root_equation();
  const std::vector<Complex> sing{Complex(0.0)};
  const Loop loop = sphgon::loop_around(sing, 0, sphgon::default_monodromy_base(sing));
  const auto result = sphgon::loop_monodromy(eq, loop);

  // Abel check: det = exp(-2 pi i (1 - 1/2)) = -1.
  REQUIRE(result.det_defect < 1e-10);
  REQUIRE(std::abs(result.determinant - Complex(-1.0)) < 1e-10);

  // Ratio of eigenvalues is exp(2 pi i / 2) = -1.
  REQUIRE(sphgon::ratio_angle_defect(result.normalized, 0.5) < 1e-9);
}

TEST_CASE("quadrilateral monodromy matches the corner angles") {
  QuadSetup quad;
  const std::vector<Complex> sing = quad.eq.finite_singularities;
  const Complex base = sphgon::default_monodromy_base(sing);

  // Interior corners with integer angles are projectively trivial.
  for (size_t j = 1; j < sing.size(); ++j) {
    const Loop loop = sphgon::loop_around(sing, j, base);
    const auto result = sphgon::loop_monodromy(quad.eq, loop);
    REQUIRE(result.det_defect < 1e-9);
    REQUIRE(sphgon::projective_identity_defect(result.normalized) < 1e-6);
  }

  // The origin loop realizes the angle factor 1/2.
  const Loop origin_loop = sphgon::loop_around(sing, 0, base);
  const auto at_origin = sphgon::loop_monodromy(quad.eq, origin_loop);
  REQUIRE(at_origin.det_defect < 1e-9);
  REQUIRE(sphgon::ratio_angle_defect(at_origin.normalized, 0.5) < 1e-6);
}

TEST_CASE("a circle around all corners realizes the angle at infinity") {
  QuadSetup quad;
  const std::vector<Complex> sing = quad.eq.finite_singularities;

  double max_abs = 0.0;
  for (Complex a : sing) max_abs = std::max(max_abs, std::abs(a));
  const double radius = 1.0 + max_abs;
  Loop big;
  big.base = Complex(0.0, -radius);
  big.pieces.push_back(sphgon::PathPiece::arc(Complex(0.0), radius, -M_PI / 2.0, 2.0 * M_PI));

  const auto outer = sphgon::loop_monodromy(quad.eq, big);
  REQUIRE(outer.det_defect < 1e-9);
  REQUIRE(sphgon::ratio_angle_defect(outer.normalized, 0.5) < 1e-6);

  // The ordered product of the small loops is homotopic to the big circle
  // (up to the direction convention, checked as the better of both orders).
  const Complex base = big.base;
  std::vector<Matrix2cd> small;
  for (size_t j = 0; j < sing.size(); ++j)
    small.push_back(sphgon::loop_monodromy(quad.eq, sphgon::loop_around(sing, j, base)).matrix);
  const Matrix2cd forward = small[2] * small[1] * small[0];
  const Matrix2cd backward = small[0] * small[1] * small[2];
  const double d1 = (forward - outer.matrix).cwiseAbs().maxCoeff();
  const double d2 = (backward - outer.matrix).cwiseAbs().maxCoeff();
  REQUIRE(std::min(d1, d2) < 1e-8);
}

TEST_CASE("homotopic loops produce equal transfer matrices") {
  QuadSetup quad;
  const std::vector<Complex> sing = quad.eq.finite_singularities;
  const Complex base = sphgon::default_monodromy_base(sing);

  const Loop loop = sphgon::loop_around(sing, 1, base);
  Loop tighter = loop;
  // Shrink the circle: same homotopy class, different geometry.
  tighter.pieces[0].to = sing[1] + 0.3 * (base - sing[1]) / std::abs(base - sing[1]);
  tighter.pieces[1].radius = 0.3;
  tighter.pieces[2].from = tighter.pieces[0].to;

  const auto m1 = sphgon::loop_monodromy(quad.eq, loop);
  const auto m2 = sphgon::loop_monodromy(quad.eq, tighter);
  REQUIRE((m1.matrix - m2.matrix).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("joined loops compose transfer matrices") {
  QuadSetup quad;
  const std::vector<Complex> sing = quad.eq.finite_singularities;
  const Complex base = sphgon::default_monodromy_base(sing);

  const Loop first = sphgon::loop_around(sing, 0, base);
  const Loop second = sphgon::loop_around(sing, 1, base);
  const Loop joined = sphgon::join_loops(first, second);

  const Matrix2cd m1 = sphgon::loop_monodromy(quad.eq, first).matrix;
  const Matrix2cd m2 = sphgon::loop_monodromy(quad.eq, second).matrix;
  const Matrix2cd mj = sphgon::loop_monodromy(quad.eq, joined).matrix;
  REQUIRE((mj - m2 * m1).cwiseAbs().maxCoeff() < 1e-8);

  Loop moved = second;
  moved.base += Complex(0.5);
  REQUIRE_THROWS_AS(sphgon::join_loops(first, moved), std::invalid_argument);
}

TEST_CASE("unitarizability certificates for commuting families") {
  const Complex i(0.0, 1.0);
  const Matrix2cd elliptic = diag(std::exp(i * (M_PI / 3.0)), std::exp(-i * (M_PI / 3.0)));
  const Matrix2cd elliptic2 = diag(std::exp(i * 0.4), std::exp(-i * 0.4));

  const auto good = sphgon::unitarizability_check({elliptic, elliptic2});
  REQUIRE(good.commuting);
  REQUIRE(good.verdict == UnitarizabilityVerdict::CertifiedTrue);

  const Matrix2cd hyperbolic = diag(Complex(2.0), Complex(0.5));
  const auto bad = sphgon::unitarizability_check({elliptic, hyperbolic});
  REQUIRE(bad.commuting);
  REQUIRE(bad.verdict == UnitarizabilityVerdict::CertifiedFalse);

  Matrix2cd parabolic = Matrix2cd::Identity();
  parabolic(0, 1) = Complex(1.0);
  const auto shear = sphgon::unitarizability_check({parabolic});
  REQUIRE(shear.verdict == UnitarizabilityVerdict::CertifiedFalse);

  const auto central = sphgon::unitarizability_check({-Matrix2cd::Identity()});
  REQUIRE(central.verdict == UnitarizabilityVerdict::CertifiedTrue);
}

TEST_CASE("unitarizability screen for non-commuting families") {
  const Complex i(0.0, 1.0);
  // Two rotations in SU(2) around different axes.
  Matrix2cd rx, rz;
  const double a = 0.7;
  rz = diag(std::exp(i * a), std::exp(-i * a));
  rx << Complex(std::cos(a)), i * std::sin(a), i * std::sin(a), Complex(std::cos(a));

  const auto screen = sphgon::unitarizability_check({rz, rx});
  REQUIRE_FALSE(screen.commuting);
  REQUIRE(screen.verdict == UnitarizabilityVerdict::ScreenPassed);

  // A non-commuting pair with a complex trace fails the screen.
  Matrix2cd skew = Matrix2cd::Zero();
  skew(0, 0) = Complex(2.0, 1.0);
  skew(1, 1) = Complex(1.0, 0.0);
  skew(0, 1) = Complex(1.0);
  skew /= std::sqrt(skew.determinant());
  const auto fail = sphgon::unitarizability_check({rx, skew});
  REQUIRE(fail.verdict == UnitarizabilityVerdict::ScreenFailed);

  REQUIRE_THROWS_AS(sphgon::unitarizability_check({Matrix2cd::Zero()}), std::invalid_argument);
}
