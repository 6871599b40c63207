#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecm/scalars.hpp"

namespace liecm {

enum class SimpleType { A, B, C, D, E6, E7 };

std::string type_name(SimpleType t);
std::optional<SimpleType> parse_type(const std::string& s);

// Named lattice: Z-span of `basis` inside the ambient space.
struct Lattice {
  std::string name;
  std::vector<ExactVector> basis;

  bool contains(const ExactVector& v) const;
};

// Complete exact root data for one simple type/rank.
struct RootDatum {
  SimpleType type = SimpleType::A;
  int rank = 0;
  size_t ambient = 0;  // ambient coordinate dimension

  std::vector<ExactVector> simple_roots;    // Π
  std::vector<ExactVector> simple_coroots;  // Π∨
  std::vector<ExactVector> positive_roots;  // R+
  std::vector<ExactVector> roots;           // R = R+ ∪ −R+
  ExactVector alpha0;                       // minimal root
  ExactVector rho, rho_check, kappa;        // ρ, ρ∨, κ = ρ∨ / h
  int coxeter = 0;                          // h
  std::vector<ExactVector> fund_weights;    // ϖ_j
  std::vector<ExactVector> fund_coweights;  // ϖ∨_j
  std::vector<long long> marks;             // −α0 = Σ marks[j]·α_j
  // Basis of the Cartan subalgebra inside the ambient space (dim == rank);
  // differs from the coordinate axes for A (traceless) and E6 (u5+u6+u7=0).
  std::vector<ExactVector> cartan_basis;

  std::map<ExactVector, int> root_index_;

  int root_index(const ExactVector& v) const;
  bool is_root(const ExactVector& v) const { return root_index(v) >= 0; }
  ExactVector coroot(const ExactVector& root) const;
  // Height of a root = sum of its simple-root coefficients.
  long long level(const ExactVector& root) const;
  // Exact coefficients of v over the simple roots (v must lie in their span).
  std::vector<QSqrt2> simple_root_coords(const ExactVector& v) const;

  // Reflection in root alpha: v - <v, alpha∨> alpha.
  ExactVector reflect(const ExactVector& v, const ExactVector& alpha) const;
  // Apply a word of simple reflections (indices into simple_roots).
  ExactVector weyl_apply(const std::vector<int>& word, const ExactVector& v) const;
  // Dominant representative reached by simple reflections; input must be real.
  ExactVector dominant_representative(const ExactVector& v, std::vector<int>* word = nullptr) const;

  // Alcove vertices: 0 together with ϖ∨_j / a_j.
  std::vector<ExactVector> alcove_vertices() const;

  // Cartan matrix entries <alpha_i, alpha_j∨>.
  std::vector<std::vector<long long>> cartan_matrix() const;
};

RootDatum build_root_system(SimpleType type, int rank);

// Named lattices of the datum: Q, Qv, P, Pv plus case-specific sublattices
// (Pl_<l> for A with l | N, P2 for D, PV/PR/PL for D even).
std::vector<Lattice> lattices(const RootDatum& d);

// Build the Z-basis of the lattice spanned by `gens` (each an ambient vector
// lying in the Q-span of `frame`); coordinates over `frame` must be rational.
Lattice lattice_from_generators(const std::string& name, const std::vector<ExactVector>& frame,
                                const std::vector<ExactVector>& gens);

struct CenterStructure {
  std::vector<long long> cyclic_factors;  // e.g. {4} for μ4, {2,2} for μ2×μ2
  std::vector<ExactVector> generators;    // coweights generating P∨/Q∨
  std::string to_string() const;          // "mu4", "mu2xmu2", ...
};

CenterStructure center_structure(const RootDatum& d);

// Standard Cartan matrix of a given type/rank (Bourbaki-style node order used
// by this library); used to identify invariant subalgebras.
std::vector<std::vector<long long>> standard_cartan_matrix(SimpleType t, int rank);
// G2/F4 appear only as invariant subalgebras; their matrices by name.
std::vector<std::vector<long long>> cartan_matrix_g2();
std::vector<std::vector<long long>> cartan_matrix_f4();

// Abstract root count from a Cartan matrix by reflection closure.
size_t root_count_from_cartan(const std::vector<std::vector<long long>>& cartan);

// so(8) spinor-weight helpers backing the E6/E7 constructions. Families 'L'
// (even sign patterns), 'R' (odd), 'V' (+-e_k); index a = 1..8 with the
// negated weight at a <-> a±4.
ExactVector spinor_weight(char family, int a);
int spinor_negate(int a);

// Canonical printable label of a root ("e1-e2", "2e1", "L4+", "Rp3-", "q5+").
std::string root_label(const RootDatum& d, const ExactVector& root);
std::optional<ExactVector> root_from_label(const RootDatum& d, const std::string& label);

}  // namespace liecm
