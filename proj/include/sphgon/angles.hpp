#pragma once

// Angle data for a spherical polygon with two non-integer corners.  The
// corner at 0 and the corner at infinity carry positive non-integer angles
// alpha0 and alpha_inf (in units of 2*pi); every other corner angle is an
// integer multiple >= 2.  All bookkeeping is exact rational arithmetic.

#include "sphgon/rational.hpp"

#include <stdexcept>
#include <vector>

namespace sphgon {

struct AngleSignature {
  Rational alpha0;
  std::vector<int> interior;  // integer angles alpha_1..alpha_{n-2}, each >= 2
  Rational alpha_inf;

  int n() const { return static_cast<int>(interior.size()) + 2; }
};

inline void validate_signature(const AngleSignature& sig) {
  if (sig.alpha0 <= 0 || sig.alpha_inf <= 0)
    throw std::invalid_argument("corner angles must be positive");
  if (is_integer(sig.alpha0) || is_integer(sig.alpha_inf))
    throw std::invalid_argument("angles at 0 and infinity must be non-integer");
  if (sig.interior.empty())
    throw std::invalid_argument("at least one integer corner is required");
  for (int a : sig.interior)
    if (a < 2) throw std::invalid_argument("integer corner angles must be at least 2");
}

// Total branching of the critical set: sum of (alpha_j - 1) over the integer
// corners.
inline long sigma(const AngleSignature& sig) {
  validate_signature(sig);
  long total = 0;
  for (int a : sig.interior) total += a - 1;
  return total;
}

struct ExponentData {
  Rational alpha_prime;
  Rational alpha_double_prime;
  bool gauss_bonnet_ok = false;  // alpha_double_prime < 0
};

// Characteristic exponents of the developing map at infinity.
inline ExponentData exponents_at_infinity(const AngleSignature& sig) {
  validate_signature(sig);
  Rational finite_sum = sig.alpha0;
  for (int a : sig.interior) finite_sum += a;
  const Rational n_minus_2 = sig.n() - 2;
  ExponentData data;
  data.alpha_prime = (n_minus_2 + sig.alpha_inf - finite_sum) / 2;
  data.alpha_double_prime = (n_minus_2 - sig.alpha_inf - finite_sum) / 2;
  data.gauss_bonnet_ok = data.alpha_double_prime < 0;
  return data;
}

}  // namespace sphgon
