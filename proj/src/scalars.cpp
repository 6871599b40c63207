#include "liecm/scalars.hpp"

#include <cmath>
#include <sstream>

namespace liecm {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  unsigned long long u = neg_ ? -(unsigned long long)v : (unsigned long long)v;
  while (u) {
    mag_.push_back((uint32_t)(u & 0xffffffffu));
    u >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back((uint32_t)(s & 0xffffffffu));
    carry = s >> 32;
  }
  if (carry) r.push_back((uint32_t)carry);
  return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r = a;
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
    if (s < 0) {
      s += ((int64_t)1 << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = (uint32_t)s;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = (uint64_t)a[i] * b[j] + r[i + j] + carry;
      r[i + j] = (uint32_t)(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = (uint64_t)r[k] + carry;
      r[k] = (uint32_t)(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

void BigInt::shl1(std::vector<uint32_t>& a) {
  uint32_t carry = 0;
  for (auto& w : a) {
    uint32_t nc = w >> 31;
    w = (w << 1) | carry;
    carry = nc;
  }
  if (carry) a.push_back(carry);
}

void BigInt::shr1(std::vector<uint32_t>& a) {
  uint32_t carry = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint32_t nc = a[i] & 1u;
    a[i] = (a[i] >> 1) | (carry << 31);
    carry = nc;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Binary long division on magnitudes.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  q.clear();
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    return;
  }
  size_t abits = a.size() * 32;
  q.assign(a.size(), 0);
  for (size_t i = abits; i-- > 0;) {
    shl1(r);
    uint32_t bit = (a[i / 32] >> (i % 32)) & 1u;
    if (bit) {
      if (r.empty()) r.push_back(1);
      else r[0] |= 1u;
    }
    if (cmp_mag(r, b) >= 0) {
      r = sub_mag(r, b);
      q[i / 32] |= (1u << (i % 32));
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.mag_.empty()) r.neg_ = !r.neg_;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (neg_ == o.neg_) {
    r.mag_ = add_mag(mag_, o.mag_);
    r.neg_ = neg_;
  } else {
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = sub_mag(mag_, o.mag_);
      r.neg_ = neg_;
    } else {
      r.mag_ = sub_mag(o.mag_, mag_);
      r.neg_ = o.neg_;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  r.mag_ = mul_mag(mag_, o.mag_);
  r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
  return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q;
  std::vector<uint32_t> qm, rm;
  divmod_mag(mag_, o.mag_, qm, rm);
  q.mag_ = std::move(qm);
  q.neg_ = !q.mag_.empty() && (neg_ != o.neg_);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt r;
  std::vector<uint32_t> qm, rm;
  divmod_mag(mag_, o.mag_, qm, rm);
  r.mag_ = std::move(rm);
  r.neg_ = !r.mag_.empty() && neg_;
  return r;
}

bool BigInt::operator<(const BigInt& o) const {
  if (neg_ != o.neg_) return neg_;
  int c = cmp_mag(mag_, o.mag_);
  return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = b.neg_ = false;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int shift = 0;
  while (a.is_even() && b.is_even()) {
    shr1(a.mag_);
    shr1(b.mag_);
    ++shift;
  }
  while (a.is_even()) shr1(a.mag_);
  while (!b.is_zero()) {
    while (b.is_even()) shr1(b.mag_);
    if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a.mag_, b.mag_);
    b.mag_ = sub_mag(b.mag_, a.mag_);
  }
  for (int i = 0; i < shift; ++i) shl1(a.mag_);
  a.trim();
  return a;
}

double BigInt::to_double() const {
  double r = 0;
  for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + (double)mag_[i];
  return neg_ ? -r : r;
}

std::optional<long long> BigInt::to_int64() const {
  if (mag_.size() > 2) return std::nullopt;
  unsigned long long u = 0;
  for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
  if (neg_) {
    if (u > 0x8000000000000000ull) return std::nullopt;
    return -(long long)u;
  }
  if (u > 0x7fffffffffffffffull) return std::nullopt;
  return (long long)u;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  const std::vector<uint32_t> ten = {10u};
  while (!m.empty()) {
    std::vector<uint32_t> q, r;
    divmod_mag(m, ten, q, r);
    digits.push_back((char)('0' + (r.empty() ? 0 : r[0])));
    m = std::move(q);
  }
  if (neg_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt r;
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (neg) r = -r;
  return r;
}

// ---------------------------------------------------------------- Rational

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return (num_ * o.den_) < (o.num_ * den_);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

// ---------------------------------------------------------------- QSqrt2

QSqrt2 QSqrt2::operator*(const QSqrt2& o) const {
  // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r,  r^2 = 2
  return QSqrt2(a_ * o.a_ + Rational(2) * (b_ * o.b_), a_ * o.b_ + b_ * o.a_);
}

QSqrt2 QSqrt2::inverse() const {
  // 1/(a + b r) = (a - b r)/(a^2 - 2 b^2); the norm vanishes only at 0.
  Rational n = a_ * a_ - Rational(2) * (b_ * b_);
  if (n.is_zero()) throw std::domain_error("QSqrt2: division by zero");
  return QSqrt2(a_ / n, -(b_ / n));
}

QSqrt2 QSqrt2::operator/(const QSqrt2& o) const { return *this * o.inverse(); }

int QSqrt2::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 against 2 b^2
  Rational a2 = a_ * a_, b2 = Rational(2) * (b_ * b_);
  if (a2 == b2) return 0;
  return (b2 < a2) ? sa : sb;
}

double QSqrt2::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0);
}

std::string QSqrt2::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s;
  if (!a_.is_zero()) s = a_.to_string() + (b_.sign() > 0 ? "+" : "");
  s += b_.to_string() + "*sqrt2";
  return s;
}

QSqrt2 operator*(long long k, const QSqrt2& x) { return QSqrt2(Rational(k)) * x; }

// ---------------------------------------------------------------- ExactVector

ExactVector ExactVector::basis(size_t dim, size_t j) {
  ExactVector v(dim);
  v.c[j] = QSqrt2(1);
  return v;
}

bool ExactVector::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

ExactVector ExactVector::operator-() const {
  ExactVector r(dim());
  for (size_t i = 0; i < dim(); ++i) r.c[i] = -c[i];
  return r;
}

ExactVector ExactVector::operator+(const ExactVector& o) const {
  ExactVector r(dim());
  for (size_t i = 0; i < dim(); ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

ExactVector ExactVector::operator-(const ExactVector& o) const {
  ExactVector r(dim());
  for (size_t i = 0; i < dim(); ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

ExactVector ExactVector::scaled(const QSqrt2& s) const {
  ExactVector r(dim());
  for (size_t i = 0; i < dim(); ++i) r.c[i] = c[i] * s;
  return r;
}

QSqrt2 ExactVector::dot(const ExactVector& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("ExactVector: dim mismatch");
  QSqrt2 s;
  for (size_t i = 0; i < dim(); ++i) s += c[i] * o.c[i];
  return s;
}

bool ExactVector::operator<(const ExactVector& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  for (size_t i = 0; i < dim(); ++i) {
    QSqrt2 d = c[i] - o.c[i];
    int s = d.sign();
    if (s != 0) return s < 0;
  }
  return false;
}

std::vector<Complex> ExactVector::embed() const {
  std::vector<Complex> r(dim());
  for (size_t i = 0; i < dim(); ++i) r[i] = c[i].to_double();
  return r;
}

std::string ExactVector::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < dim(); ++i) {
    if (i) s += ",";
    s += c[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------- QMat

QMat QMat::identity(size_t n) {
  QMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = QSqrt2(1);
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("QMat: shape mismatch");
  QMat r(rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

ExactVector QMat::apply(const ExactVector& v) const {
  if (cols != v.dim()) throw std::invalid_argument("QMat: apply dim mismatch");
  ExactVector r(rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (!at(i, j).is_zero()) r.c[i] += at(i, j) * v.c[j];
  return r;
}

QMat QMat::transpose() const {
  QMat r(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::optional<std::vector<QSqrt2>> exact_solve(QMat M, std::vector<QSqrt2> rhs) {
  if (M.rows != M.cols || M.rows != rhs.size())
    throw std::invalid_argument("exact_solve: square system expected");
  size_t n = M.rows;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && M.at(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(col, j));
      std::swap(rhs[piv], rhs[col]);
    }
    QSqrt2 inv = M.at(col, col).inverse();
    for (size_t j = col; j < n; ++j) M.at(col, j) = M.at(col, j) * inv;
    rhs[col] = rhs[col] * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || M.at(i, col).is_zero()) continue;
      QSqrt2 f = M.at(i, col);
      for (size_t j = col; j < n; ++j) M.at(i, j) -= f * M.at(col, j);
      rhs[i] -= f * rhs[col];
    }
  }
  return rhs;
}

std::optional<std::vector<QSqrt2>> exact_solve_tall(const QMat& M, const std::vector<QSqrt2>& rhs) {
  // Normal equations over the field: columns independent iff Gram invertible.
  QMat Mt = M.transpose();
  QMat G = Mt * M;
  std::vector<QSqrt2> b(M.cols);
  for (size_t i = 0; i < M.cols; ++i) {
    QSqrt2 s;
    for (size_t k = 0; k < M.rows; ++k) s += Mt.at(i, k) * rhs[k];
    b[i] = s;
  }
  auto x = exact_solve(G, b);
  if (!x) return std::nullopt;
  // Confirm consistency of the full system.
  for (size_t i = 0; i < M.rows; ++i) {
    QSqrt2 s;
    for (size_t j = 0; j < M.cols; ++j) s += M.at(i, j) * (*x)[j];
    if (!(s == rhs[i])) return std::nullopt;
  }
  return x;
}

// ---------------------------------------------------------------- HNF / SNF

std::vector<std::vector<BigInt>> hnf_row_basis(std::vector<std::vector<BigInt>> gen) {
  if (gen.empty()) return {};
  size_t ncols = gen[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < gen.size(); ++col) {
    // Euclidean elimination in this column below `row`.
    while (true) {
      size_t piv = gen.size();
      for (size_t i = row; i < gen.size(); ++i) {
        if (gen[i][col].is_zero()) continue;
        if (piv == gen.size() || gen[i][col].abs() < gen[piv][col].abs()) piv = i;
      }
      if (piv == gen.size()) break;
      std::swap(gen[row], gen[piv]);
      bool clean = true;
      for (size_t i = row + 1; i < gen.size(); ++i) {
        if (gen[i][col].is_zero()) continue;
        BigInt q = gen[i][col] / gen[row][col];
        for (size_t j = 0; j < ncols; ++j) gen[i][j] = gen[i][j] - q * gen[row][j];
        if (!gen[i][col].is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!gen[row][col].is_zero()) {
      if (gen[row][col].sign() < 0)
        for (size_t j = 0; j < ncols; ++j) gen[row][j] = -gen[row][j];
      // Reduce rows above.
      for (size_t i = 0; i < row; ++i) {
        if (gen[i][col].is_zero()) continue;
        BigInt q = gen[i][col] / gen[row][col];
        if ((gen[i][col] % gen[row][col]).sign() < 0) q = q - BigInt(1);
        for (size_t j = 0; j < ncols; ++j) gen[i][j] = gen[i][j] - q * gen[row][j];
      }
      ++row;
    }
  }
  gen.resize(row);
  return gen;
}

std::vector<BigInt> snf_invariant_factors(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return {};
  size_t R = m.size(), C = m[0].size();
  std::vector<BigInt> factors;
  size_t t = 0;
  while (t < R && t < C) {
    // Find a nonzero pivot of minimal magnitude.
    size_t pi = R, pj = C;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pi == R || m[i][j].abs() < m[pi][pj].abs()) {
          pi = i;
          pj = j;
        }
      }
    if (pi == R) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < R; ++i) std::swap(m[i][t], m[i][pj]);
    bool again = false;
    for (size_t i = t + 1; i < R; ++i) {
      if (m[i][t].is_zero()) continue;
      BigInt q = m[i][t] / m[t][t];
      for (size_t j = 0; j < C; ++j) m[i][j] = m[i][j] - q * m[t][j];
      if (!m[i][t].is_zero()) again = true;
    }
    for (size_t j = t + 1; j < C; ++j) {
      if (m[t][j].is_zero()) continue;
      BigInt q = m[t][j] / m[t][t];
      for (size_t i = 0; i < R; ++i) m[i][j] = m[i][j] - q * m[i][t];
      if (!m[t][j].is_zero()) again = true;
    }
    if (again) continue;
    // Make the pivot divide every remaining entry.
    bool divides = true;
    for (size_t i = t + 1; i < R && divides; ++i)
      for (size_t j = t + 1; j < C && divides; ++j)
        if (!(m[i][j] % m[t][t]).is_zero()) {
          for (size_t jj = 0; jj < C; ++jj) m[t][jj] = m[t][jj] + m[i][jj];
          divides = false;
        }
    if (!divides) continue;
    factors.push_back(m[t][t].abs());
    ++t;
  }
  return factors;
}

}  // namespace liecm
