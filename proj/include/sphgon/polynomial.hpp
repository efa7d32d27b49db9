#pragma once

// Dense univariate polynomials over complex doubles, ascending coefficient
// order.  Root finding goes through the companion matrix.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace sphgon {

using Complex = std::complex<double>;

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly one() { return Poly{Complex(1.0)}; }

  static Poly monomial(int power, Complex scale = Complex(1.0)) {
    if (power < 0) throw std::invalid_argument("monomial power must be non-negative");
    std::vector<Complex> c(power + 1, Complex(0.0));
    c[power] = scale;
    return Poly(std::move(c));
  }

  static Poly from_roots(const std::vector<Complex>& roots, Complex lead = Complex(1.0)) {
    Poly result{lead};
    for (Complex r : roots) result = result * Poly{-r, Complex(1.0)};
    return result;
  }

  const std::vector<Complex>& coefficients() const { return coeffs_; }

  // Degree of the stored representation; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }

  Complex coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Complex(0.0);
  }

  Complex operator()(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = double(k) * coeffs_[k];
    return Poly(std::move(d));
  }

  double sup_norm() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  // Largest k with |coeff(k)| above rel_tol * sup_norm; -1 if none.
  int numeric_degree(double rel_tol = 1e-9) const {
    const double cut = rel_tol * sup_norm();
    for (int k = degree(); k >= 0; --k)
      if (std::abs(coeffs_[k]) > cut) return k;
    return -1;
  }

  // Smallest k with |coeff(k)| above rel_tol * sup_norm; -1 for zero.
  int order_at_origin(double rel_tol = 1e-9) const {
    const double cut = rel_tol * sup_norm();
    for (int k = 0; k <= degree(); ++k)
      if (std::abs(coeffs_[k]) > cut) return k;
    return -1;
  }

  std::vector<Complex> roots(double rel_tol = 1e-12) const {
    const int d = numeric_degree(rel_tol);
    if (d <= 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      if (k + 1 < d) companion(k + 1, k) = 1.0;
      companion(k, d - 1) = -coeffs_[k] / coeffs_[d];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> out(d);
    for (int k = 0; k < d; ++k) out[k] = solver.eigenvalues()[k];
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
  }

  Poly operator-() const {
    Poly r = *this;
    for (Complex& c : r.coeffs_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
    for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Poly(std::move(c));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(c));
  }

  friend Poly operator*(Complex s, const Poly& a) {
    Poly r = a;
    for (Complex& c : r.coeffs_) c *= s;
    return r.trim();
  }

  friend Poly operator*(const Poly& a, Complex s) { return s * a; }

  Poly& trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
    return *this;
  }

 private:
  std::vector<Complex> coeffs_;
};

struct RootCluster {
  Complex center;
  int multiplicity = 0;
};

// Greedy clustering of numerically multiple roots.
inline std::vector<RootCluster> cluster_roots(std::vector<Complex> roots, double tol) {
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<RootCluster> clusters;
  for (Complex r : roots) {
    RootCluster* home = nullptr;
    double best = tol;
    for (RootCluster& c : clusters) {
      const double dist = std::abs(r - c.center);
      if (dist <= best) {
        best = dist;
        home = &c;
      }
    }
    if (home == nullptr) {
      clusters.push_back(RootCluster{r, 1});
    } else {
      home->center = (home->center * double(home->multiplicity) + r) / double(home->multiplicity + 1);
      ++home->multiplicity;
    }
  }
  return clusters;
}

// True when P and Q share a root within the given absolute tolerance.
inline bool have_common_root(const Poly& p, const Poly& q, double tol) {
  if (p.is_zero() || q.is_zero()) return true;
  const auto qroots = q.roots();
  const double scale = p.sup_norm();
  for (Complex r : qroots) {
    const double growth = std::pow(std::max(1.0, std::abs(r)), p.numeric_degree());
    if (std::abs(p(r)) <= tol * scale * growth) return true;
  }
  return false;
}

}  // namespace sphgon
