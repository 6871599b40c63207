#pragma once

#include "liecm/autgrade.hpp"

namespace liecm {

// Component tags of the graded basis: invariant Cartan ẽ_j, graded Cartan
// 𝔥^k, unbroken-subalgebra root generators, V-space generators (grade zero
// outside the unbroken subalgebra), and generators of grade k != 0.
enum class GSComp { CartanInv, CartanGraded, InvRoot, VRoot, Graded };

struct GSElement {
  std::string label;
  int grade = 0;  // λ(x) = ω^grade x, ω = e(1/l)
  GSComp comp = GSComp::InvRoot;
  bool cartan = false;
  // root-type: coefficients over datum.roots indices
  std::vector<std::pair<int, Complex>> combo;
  // cartan-type: complex ambient coordinates
  std::vector<Complex> ambient;
  // root-type: orbit lead root (defines the coefficient function in the Lax)
  ExactVector lead_root;
};

struct GSDualTerm {
  int index;
  Complex coeff;
};

struct GSBasis {
  const RootDatum* datum = nullptr;
  const ChevalleyBasis* chev = nullptr;
  DiagramAutomorphism lam;
  InvariantDatum inv;
  GradedDecomposition grad;
  std::vector<GSElement> elems;
  std::map<std::string, int> index;

  int order() const { return lam.order; }
  int find(const std::string& label) const;

  Complex pairing(int i, int j) const;
  Complex pairing(const std::string& a, const std::string& b) const;
  std::vector<std::tuple<int, int, Complex>> pairing_triplets() const;

  // dual basis element(s): (x_i, dual(x_j)) = δ_ij
  std::vector<GSDualTerm> dual(int i) const;

  // classical types: pi1 matrix of one element
  CMatrix materialize(int i) const;
};

// Build the graded basis for a class (including "triv").
GSBasis gs_basis(const RootDatum& d, const ChevalleyBasis& cb, const DiagramAutomorphism& lam);

struct GSCheckReport {
  double eigen_residual = 0;    // λ(x) - ω^grade x in pi1
  double pairing_residual = 0;  // table vs trace form
  double duality_residual = 0;  // (x, dual(y)) - δ
  double closure_residual = 0;  // [g_a, g_b] ⊂ g_{a+b} in pi1
  bool materialized = false;
};

GSCheckReport gs_structure_check(const GSBasis& basis);

}  // namespace liecm
