#pragma once

// Rational functions as explicit numerator/denominator pairs, with the
// arithmetic needed to manipulate connection coefficients and curvature-type
// quantities of developing maps.

#include <sphgon/polynomial.hpp>

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sphgon {

struct RationalFn {
  Poly num;
  Poly den = Poly::one();

  Complex operator()(Complex z) const { return num(z) / den(z); }

  RationalFn derivative() const {
    return RationalFn{num.derivative() * den - num * den.derivative(), den * den};
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn{a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn{a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn{a.num * b.num, a.den * b.den};
  }
  friend RationalFn operator*(Complex s, const RationalFn& a) {
    return RationalFn{s * a.num, a.den};
  }

  // Cancels numerically matched root pairs between numerator and denominator
  // and normalizes the denominator monic.  Intended for structural
  // inspection; evaluation does not require it.
  RationalFn reduced(double tol = 1e-9) const {
    if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    if (num.is_zero()) return RationalFn{Poly(), Poly::one()};
    std::vector<Complex> nroots = num.roots();
    std::vector<Complex> droots = den.roots();
    std::vector<bool> used(nroots.size(), false);
    std::vector<Complex> dkeep;
    for (Complex d : droots) {
      int match = -1;
      double best = tol * std::max(1.0, std::abs(d));
      for (size_t i = 0; i < nroots.size(); ++i) {
        if (used[i]) continue;
        const double dist = std::abs(nroots[i] - d);
        if (dist <= best) {
          best = dist;
          match = int(i);
        }
      }
      if (match >= 0)
        used[size_t(match)] = true;
      else
        dkeep.push_back(d);
    }
    std::vector<Complex> nkeep;
    for (size_t i = 0; i < nroots.size(); ++i)
      if (!used[i]) nkeep.push_back(nroots[i]);
    const Complex nlead = num.coeff(num.numeric_degree());
    const Complex dlead = den.coeff(den.numeric_degree());
    return RationalFn{Poly::from_roots(nkeep, nlead / dlead), Poly::from_roots(dkeep)};
  }
};

// Coefficient of (z - center)^order in the Laurent expansion of f around
// center, via a trapezoid contour average on a circle of the given radius.
// The circle must stay inside the annulus of convergence.
template <typename Fn>
Complex laurent_coefficient(Fn&& f, Complex center, int order, double radius,
                            int samples = 512) {
  Complex acc(0.0);
  for (int m = 0; m < samples; ++m) {
    const double theta = 2.0 * M_PI * double(m) / double(samples);
    const Complex offset = std::polar(radius, theta);
    acc += f(center + offset) * std::pow(offset, -order);
  }
  return acc / double(samples);
}

}  // namespace sphgon
