#pragma once

#include <algorithm>
#include <cstdint>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecm {

using Complex = std::complex<double>;

// Arbitrary-precision signed integer, sign + base-2^32 magnitude.
// Sized for exact lattice/linear algebra on small matrices, not for speed.
class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return mag_.empty(); }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  // Truncated division (quotient rounds toward zero).
  BigInt operator/(const BigInt& o) const;
  BigInt operator%(const BigInt& o) const;

  bool operator==(const BigInt& o) const { return neg_ == o.neg_ && mag_ == o.mag_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;

  static BigInt gcd(BigInt a, BigInt b);

  BigInt abs() const;
  bool is_one() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }
  bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

  double to_double() const;
  std::string to_string() const;
  // Exact value if it fits in int64, otherwise nullopt.
  std::optional<long long> to_int64() const;

private:
  bool neg_ = false;
  std::vector<uint32_t> mag_;  // little-endian, no leading zeros

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  static void shl1(std::vector<uint32_t>& a);
  static void shr1(std::vector<uint32_t>& a);
};

// Rational number, normalized (gcd 1, positive denominator).
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on /0
  Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
  Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
  Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  double to_double() const { return num_.to_double() / den_.to_double(); }
  std::string to_string() const;  // "p" or "p/q"
  static Rational from_string(const std::string& s);

private:
  BigInt num_, den_;
  void normalize();
};

// Element of the real quadratic field Q(sqrt2): a + b*sqrt(2).
class QSqrt2 {
public:
  QSqrt2() = default;
  QSqrt2(long long a) : a_(a) {}
  QSqrt2(Rational a) : a_(std::move(a)) {}
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
  static QSqrt2 half() { return QSqrt2(Rational(1, 2)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
  QSqrt2 operator+(const QSqrt2& o) const { return QSqrt2(a_ + o.a_, b_ + o.b_); }
  QSqrt2 operator-(const QSqrt2& o) const { return QSqrt2(a_ - o.a_, b_ - o.b_); }
  QSqrt2 operator*(const QSqrt2& o) const;
  QSqrt2 operator/(const QSqrt2& o) const;  // throws on /0
  QSqrt2& operator+=(const QSqrt2& o) { *this = *this + o; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { *this = *this - o; return *this; }

  QSqrt2 inverse() const;
  // Galois conjugate a - b*sqrt2.
  QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }

  bool operator==(const QSqrt2& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const QSqrt2& o) const { return !(*this == o); }

  // Sign of the real embedding a + b*sqrt2, computed exactly.
  int sign() const;
  bool operator<(const QSqrt2& o) const { return (*this - o).sign() < 0; }

  double to_double() const;
  std::string to_string() const;

private:
  Rational a_, b_;
};

QSqrt2 operator*(long long k, const QSqrt2& x);

// Vector with exact coordinates in the ambient space of a root system.
struct ExactVector {
  std::vector<QSqrt2> c;

  ExactVector() = default;
  explicit ExactVector(size_t dim) : c(dim) {}
  static ExactVector basis(size_t dim, size_t j);

  size_t dim() const { return c.size(); }
  bool is_zero() const;

  ExactVector operator-() const;
  ExactVector operator+(const ExactVector& o) const;
  ExactVector operator-(const ExactVector& o) const;
  ExactVector scaled(const QSqrt2& s) const;

  // Standard Euclidean pairing.
  QSqrt2 dot(const ExactVector& o) const;

  bool operator==(const ExactVector& o) const { return c == o.c; }
  bool operator!=(const ExactVector& o) const { return !(*this == o); }
  bool operator<(const ExactVector& o) const;  // lexicographic, for map keys

  std::vector<Complex> embed() const;
  std::string to_string() const;
};

// Dense matrix over Q(sqrt2).
struct QMat {
  size_t rows = 0, cols = 0;
  std::vector<QSqrt2> a;  // row-major

  QMat() = default;
  QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  static QMat identity(size_t n);

  QSqrt2& at(size_t i, size_t j) { return a[i * cols + j]; }
  const QSqrt2& at(size_t i, size_t j) const { return a[i * cols + j]; }

  QMat operator*(const QMat& o) const;
  ExactVector apply(const ExactVector& v) const;
  QMat transpose() const;
  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Solve M x = rhs exactly over Q(sqrt2); nullopt when M is singular.
std::optional<std::vector<QSqrt2>> exact_solve(QMat M, std::vector<QSqrt2> rhs);

// Least-squares-free overdetermined solve: finds x with M x = rhs exactly if it
// exists (M may be tall); nullopt when inconsistent or columns dependent.
std::optional<std::vector<QSqrt2>> exact_solve_tall(const QMat& M, const std::vector<QSqrt2>& rhs);

// Hermite normal form machinery for integer lattices. Rows of `gen` generate a
// subgroup of Z^n; returns a row basis (rank many rows, row-style HNF).
std::vector<std::vector<BigInt>> hnf_row_basis(std::vector<std::vector<BigInt>> gen);

// Smith normal form invariant factors d1 | d2 | ... of an integer matrix.
std::vector<BigInt> snf_invariant_factors(std::vector<std::vector<BigInt>> m);

}  // namespace liecm
