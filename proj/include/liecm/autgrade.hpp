#pragma once

#include "liecm/chevalley.hpp"
#include "liecm/rootsys.hpp"

namespace liecm {

// The alcove symmetry attached to a characteristic class: exact ambient
// matrix, source coweight xi, induced permutation of the extended diagram.
struct DiagramAutomorphism {
  std::string klass;  // "triv", "p<k>" for A, "w1", "wn", "w7"
  int order = 1;      // l
  ExactVector xi;
  QMat ambient;
  // node_perm[i]: image of extended node i (0 = alpha0, j = alpha_j)
  std::vector<int> node_perm;
  bool has_pi1 = false;
  CMatrix pi1;  // conjugator in the fundamental representation (classical)

  bool is_trivial() const { return order == 1; }
  ExactVector apply(const ExactVector& v) const { return ambient.apply(v); }
};

// Valid class selectors for a datum ("triv" excluded).
std::vector<std::string> class_selectors(const RootDatum& d);

DiagramAutomorphism trivial_class(const RootDatum& d);
// Build λ_ξ for a symbolic class selector. Verifies that the affine map
// x -> λ(x - ξ) permutes the alcove vertices and sends ξ to the origin.
DiagramAutomorphism lambda_from_xi(const RootDatum& d, const std::string& klass);

// One λ-orbit on the root set with its closure phase ε = λ^m on the orbit span.
struct RootOrbit {
  std::vector<int> roots;  // indices into datum.roots, in λ-order
  Complex eps = Complex(1, 0);
  std::vector<Complex> step_phase;  // λ(X_{r_j}) = step_phase[j] X_{r_{j+1}}
};

struct GradedDecomposition {
  int order = 1;
  std::vector<int> cartan_dims;  // Cartan eigenspace dimension per grade
  std::vector<int> dims;         // total dimension per grade
  std::vector<RootOrbit> orbits;
};

GradedDecomposition grading(const RootDatum& d, const ChevalleyBasis& cb,
                            const DiagramAutomorphism& lam);

// Invariant ("unbroken") subalgebra data.
struct InvariantDatum {
  bool empty = false;
  std::string identified;  // "A2", "B3", "D4", "G2", "F4", ...
  std::vector<ExactVector> simple_roots;    // α̃
  std::vector<ExactVector> simple_coroots;  // α̃∨
  std::vector<std::vector<long long>> cartan;
  std::vector<ExactVector> cartan_basis;  // ẽ_j
  std::vector<ExactVector> positive_roots;  // R̃+ from reflection closure
  // For A with N = pl the moduli carry the traceless constraint Σu_i = 0.
  bool traceless_constraint = false;
};

InvariantDatum invariant_subalgebra(const RootDatum& d, const DiagramAutomorphism& lam);
std::vector<ExactVector> invariant_cartan_basis(const RootDatum& d, const DiagramAutomorphism& lam);

// ζ = Λ Q Λ^{-1} Q^{-1} with Q = e(κ) in pi1; classical types only.
// Returns the scalar and the largest deviation of ζ from scalar*Id.
struct Obstruction {
  Complex zeta;
  double residual;
};
std::optional<Obstruction> obstruction_cocycle(const RootDatum& d, const ChevalleyBasis& cb,
                                               const DiagramAutomorphism& lam);

}  // namespace liecm
