#pragma once

// Test-side numeric differentiation through Cauchy integrals: derivatives of
// an analytic callable from trapezoid contour averages on a small circle.

#include <cmath>
#include <complex>
#include <vector>

namespace test_support {

using Complex = std::complex<double>;

// f^{(k)}(z0) for k = 0..order, assuming f is analytic on the closed disk.
template <typename Fn>
std::vector<Complex> cauchy_derivatives(Fn&& f, Complex z0, double radius, int order,
                                        int samples = 256) {
  std::vector<Complex> sums(order + 1, Complex(0.0));
  for (int m = 0; m < samples; ++m) {
    const double theta = 2.0 * M_PI * double(m) / double(samples);
    const Complex offset = std::polar(radius, theta);
    const Complex value = f(z0 + offset);
    Complex rot(1.0);  // e^{-ik theta} accumulated per k
    const Complex step = std::polar(1.0, -theta);
    for (int k = 0; k <= order; ++k) {
      sums[k] += value * rot;
      rot *= step;
    }
  }
  std::vector<Complex> result(order + 1);
  double factorial = 1.0;
  double rpow = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      factorial *= double(k);
      rpow *= radius;
    }
    result[k] = sums[k] / double(samples) * factorial / rpow;
  }
  return result;
}

// Schwarzian derivative of an analytic callable at z0 via contour-sampled
// derivatives: f'''/f' - (3/2)(f''/f')^2.
template <typename Fn>
Complex numerical_schwarzian(Fn&& f, Complex z0, double radius, int samples = 256) {
  const auto d = cauchy_derivatives(f, z0, radius, 3, samples);
  const Complex ratio2 = d[2] / d[1];
  return d[3] / d[1] - 1.5 * ratio2 * ratio2;
}

}  // namespace test_support
