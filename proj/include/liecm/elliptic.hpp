#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "liecm/scalars.hpp"

namespace liecm {

// Evaluation too close to the lattice Z + tau Z.
struct pole_error : std::runtime_error {
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

struct EllipticContext {
  Complex tau;
  double tol = 1e-15;
  int max_terms = -1;  // -1: adaptive from Im tau; otherwise a hard bound

  explicit EllipticContext(Complex tau_, double tol_ = 1e-15, int max_terms_ = -1)
      : tau(tau_), tol(tol_), max_terms(max_terms_) {
    if (tau.imag() < 0.05) throw std::invalid_argument("EllipticContext: Im tau >= 0.05 required");
  }
};

// e(x) = exp(2 pi i x)
Complex e2pi(Complex x);

// Odd theta function theta(z|tau) = sum_n e( (n+1/2)^2 tau / 2 + (n+1/2)(z+1/2) ).
Complex theta(Complex z, const EllipticContext& ctx);
Complex theta_prime(Complex z, const EllipticContext& ctx);
Complex theta_prime0(const EllipticContext& ctx);

// Distance from x to the nearest point of Z + tau Z.
double lattice_distance(Complex x, Complex tau);

// E1 = d/dz log theta; odd, simple pole at the lattice.
Complex eisenstein1(Complex z, const EllipticContext& ctx);
// E2 = -E1'; even, double pole at the lattice.
Complex eisenstein2(Complex z, const EllipticContext& ctx);
// Kronecker function phi(u,z) = theta(u+z) theta'(0) / (theta(u) theta(z)).
Complex phi(Complex u, Complex z, const EllipticContext& ctx);

// e(<kappa,beta> z) * phi(<u,beta> + <kappa,beta> tau + k/l, z), scalar pairings given.
Complex phi_k_beta(Complex kappa_beta, Complex u_beta, int k, int l, Complex z,
                   const EllipticContext& ctx);
// Same with exact kappa/beta and a complex Cartan vector u (ambient coordinates).
Complex phi_k_beta(const ExactVector& kappa, const ExactVector& beta, const std::vector<Complex>& u,
                   int k, int l, Complex z, const EllipticContext& ctx);

// Complex bilinear pairing sum_i u_i v_i with v exact.
Complex pair_cx(const std::vector<Complex>& u, const ExactVector& v);

}  // namespace liecm
