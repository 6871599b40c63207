#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace liecm {

using Complex = std::complex<double>;

// Small dense complex square matrix.
struct CMatrix {
  size_t n = 0;
  std::vector<Complex> a;

  CMatrix() = default;
  explicit CMatrix(size_t n_) : n(n_), a(n_ * n_) {}

  static CMatrix unit(size_t n, size_t i, size_t j) {
    CMatrix m(n);
    m.at(i, j) = 1.0;
    return m;
  }
  static CMatrix identity(size_t n) {
    CMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  Complex& at(size_t i, size_t j) { return a[i * n + j]; }
  const Complex& at(size_t i, size_t j) const { return a[i * n + j]; }
  bool empty() const { return n == 0; }

  CMatrix operator+(const CMatrix& o) const {
    CMatrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  CMatrix operator-(const CMatrix& o) const {
    CMatrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  CMatrix operator*(const CMatrix& o) const {
    CMatrix r(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        Complex x = at(i, k);
        if (x == Complex(0, 0)) continue;
        for (size_t j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }
  CMatrix scaled(Complex s) const {
    CMatrix r = *this;
    for (auto& x : r.a) x *= s;
    return r;
  }
  CMatrix comm(const CMatrix& o) const { return *this * o - o * *this; }
  CMatrix transpose() const {
    CMatrix r(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  Complex tr() const {
    Complex s = 0;
    for (size_t i = 0; i < n; ++i) s += at(i, i);
    return s;
  }
  double frob() const {
    double s = 0;
    for (auto& x : a) s += std::norm(x);
    return std::sqrt(s);
  }
  // largest |entry| of this - s*other
  double diff_scaled(const CMatrix& o, Complex s) const {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - s * o.a[i]));
    return m;
  }
  // if the matrix is lambda * Id within tol, report lambda
  bool is_scalar(Complex& lambda, double tol = 1e-9) const {
    lambda = at(0, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Complex want = i == j ? lambda : Complex(0, 0);
        if (std::abs(at(i, j) - want) > tol) return false;
      }
    return true;
  }
};

}  // namespace liecm
