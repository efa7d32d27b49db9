#pragma once

// Schwarzian derivative of a developing map f = z^alpha P / Q, computed in
// closed form as a rational function.
//
// With W = W_alpha(P, Q) the logarithmic derivative of f' collapses to
//
//     h = f''/f' = (alpha - 1)/z + W'/W - 2 Q'/Q = N / D,
//     D = z W Q,   N = (alpha - 1) W Q + z W' Q - 2 z W Q',
//
// and the Schwarzian is  S(f) = h' - h^2/2 = (N'D - N D' - N^2/2) / D^2.
// Around a corner of angle 2*pi*beta the expansion starts with the double
// pole  (1 - beta^2) / (2 (z - a)^2).

#include <sphgon/rational_function.hpp>
#include <sphgon/wronski.hpp>

namespace sphgon {

inline RationalFn schwarzian_of_pair(const PolynomialPair& pair) {
  if (pair.P.is_zero() || pair.Q.is_zero())
    throw std::invalid_argument("schwarzian of a pair with a zero polynomial");
  const Poly w = wronski_map(pair);
  const Poly z = Poly::monomial(1);
  const Poly D = z * w * pair.Q;
  const Poly N = (pair.alpha - 1.0) * (w * pair.Q) + z * (w.derivative() * pair.Q) -
                 2.0 * (z * (w * pair.Q.derivative()));
  const Poly numerator = N.derivative() * D - N * D.derivative() - Complex(0.5) * (N * N);
  return RationalFn{numerator, D * D};
}

// Pointwise Schwarzian evaluation in logarithmic-derivative form,
//
//     h = f''/f' = (alpha - 1)/z + W'/W - 2 Q'/Q,      S = h' - h^2/2.
//
// Expanding S into a single rational function (as schwarzian_of_pair does)
// convolves coefficients with heavy cancellation, so values computed from the
// expanded form carry the coefficient noise.  Away from the poles the
// logarithmic-derivative form loses nothing: each sub-evaluation is a plain
// polynomial value, so this evaluator is the right choice whenever accurate
// samples matter more than the closed-form coefficients.
class SchwarzianEvaluator {
 public:
  explicit SchwarzianEvaluator(const PolynomialPair& pair)
      : w_(wronski_map(pair)),
        dw_(w_.derivative()),
        ddw_(dw_.derivative()),
        q_(pair.Q),
        dq_(q_.derivative()),
        ddq_(dq_.derivative()),
        alpha_(pair.alpha) {
    if (pair.P.is_zero() || pair.Q.is_zero())
      throw std::invalid_argument("schwarzian of a pair with a zero polynomial");
  }

  Complex operator()(Complex z) const {
    const Complex wv = w_(z), dwv = dw_(z), ddwv = ddw_(z);
    const Complex qv = q_(z), dqv = dq_(z), ddqv = ddq_(z);
    const Complex h = (alpha_ - 1.0) / z + dwv / wv - 2.0 * dqv / qv;
    const Complex dh = -(alpha_ - 1.0) / (z * z) + (ddwv * wv - dwv * dwv) / (wv * wv) -
                       2.0 * (ddqv * qv - dqv * dqv) / (qv * qv);
    return dh - 0.5 * h * h;
  }

 private:
  Poly w_, dw_, ddw_, q_, dq_, ddq_;
  double alpha_;
};

// Leading Laurent coefficient of the Schwarzian at a corner: the coefficient
// of (z - corner)^{-2}, which should equal (1 - beta^2)/2 for corner angle
// 2*pi*beta.
inline Complex schwarzian_double_pole(const RationalFn& schwarzian, Complex corner,
                                      double radius, int samples = 1024) {
  return laurent_coefficient(schwarzian, corner, -2, radius, samples);
}

}  // namespace sphgon
