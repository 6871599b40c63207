#include "liecm/elliptic.hpp"

#include <cmath>

namespace liecm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
const Complex kI(0.0, 1.0);

int term_bound(const EllipticContext& ctx, double im_z) {
  if (ctx.max_terms > 0) return ctx.max_terms;
  // Terms decay like exp(-pi Im tau (n+1/2)^2 - 2 pi Im z (n+1/2)); pad for the
  // shift of the maximum caused by Im z.
  double shift = std::abs(im_z) / ctx.tau.imag();
  double need = std::sqrt((40.0 + kTwoPi * std::abs(im_z)) / (3.14159265358979 * ctx.tau.imag()));
  return (int)std::ceil(need + shift) + 8;
}

// theta and its first two derivatives in one pass
void theta_series(Complex z, const EllipticContext& ctx, Complex& t0, Complex& t1, Complex& t2) {
  t0 = t1 = t2 = Complex(0, 0);
  int N = term_bound(ctx, z.imag());
  for (int n = -N; n <= N; ++n) {
    double m = n + 0.5;
    Complex term = e2pi(0.5 * m * m * ctx.tau + m * (z + 0.5));
    Complex d = kTwoPi * kI * m;
    t0 += term;
    t1 += d * term;
    t2 += d * d * term;
  }
}

}  // namespace

Complex e2pi(Complex x) { return std::exp(kTwoPi * kI * x); }

double lattice_distance(Complex x, Complex tau) {
  double b = x.imag() / tau.imag();
  double a = x.real() - b * tau.real();
  double db = b - std::round(b);
  double da = a - std::round(a);
  return std::abs(da + db * tau);
}

Complex theta(Complex z, const EllipticContext& ctx) {
  Complex t0, t1, t2;
  theta_series(z, ctx, t0, t1, t2);
  return t0;
}

Complex theta_prime(Complex z, const EllipticContext& ctx) {
  Complex t0, t1, t2;
  theta_series(z, ctx, t0, t1, t2);
  return t1;
}

Complex theta_prime0(const EllipticContext& ctx) { return theta_prime(Complex(0, 0), ctx); }

Complex eisenstein1(Complex z, const EllipticContext& ctx) {
  if (lattice_distance(z, ctx.tau) < 1e-9) throw pole_error("E1: z on the lattice");
  Complex t0, t1, t2;
  theta_series(z, ctx, t0, t1, t2);
  return t1 / t0;
}

Complex eisenstein2(Complex z, const EllipticContext& ctx) {
  if (lattice_distance(z, ctx.tau) < 1e-9) throw pole_error("E2: z on the lattice");
  Complex t0, t1, t2;
  theta_series(z, ctx, t0, t1, t2);
  Complex l = t1 / t0;
  return l * l - t2 / t0;
}

Complex phi(Complex u, Complex z, const EllipticContext& ctx) {
  if (lattice_distance(u, ctx.tau) < 1e-9) throw pole_error("phi: u on the lattice");
  if (lattice_distance(z, ctx.tau) < 1e-9) throw pole_error("phi: z on the lattice");
  return theta(u + z, ctx) * theta_prime0(ctx) / (theta(u, ctx) * theta(z, ctx));
}

Complex phi_k_beta(Complex kappa_beta, Complex u_beta, int k, int l, Complex z,
                   const EllipticContext& ctx) {
  Complex arg = u_beta + kappa_beta * ctx.tau + Complex((double)k / l, 0);
  return e2pi(kappa_beta * z) * phi(arg, z, ctx);
}

Complex pair_cx(const std::vector<Complex>& u, const ExactVector& v) {
  Complex s(0, 0);
  for (size_t i = 0; i < v.dim(); ++i) s += u[i] * v.c[i].to_double();
  return s;
}

Complex phi_k_beta(const ExactVector& kappa, const ExactVector& beta, const std::vector<Complex>& u,
                   int k, int l, Complex z, const EllipticContext& ctx) {
  Complex kb = kappa.dot(beta).to_double();
  return phi_k_beta(kb, pair_cx(u, beta), k, l, z, ctx);
}

}  // namespace liecm
