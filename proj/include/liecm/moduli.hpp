#pragma once

#include "liecm/autgrade.hpp"

namespace liecm {

// One choice of moduli quotient: an invariant lattice Γ together with the
// invariant Weyl group acting on it.
struct ModuliSpec {
  std::string name;  // lattice name: Qv, Pv, PLv, PRv, P2v, ...
  Lattice gamma;
  std::vector<ExactVector> weyl_roots;  // reflections generating W̃
};

// The lattice menu printed per case (trivial classes: Qv and Pv of the datum).
std::vector<ModuliSpec> moduli_menu(const RootDatum& d, const DiagramAutomorphism& lam);

struct ReduceResult {
  std::vector<Complex> u;            // reduced vector (ambient coordinates)
  std::vector<long long> shifts_re;  // subtracted integer parts (per basis vector)
  std::vector<long long> shifts_tau;
};

// Write u = Σ (a_i + b_i τ) γ_i and reduce a_i, b_i into [0, 1).
ReduceResult reduce_mod_lattice(const std::vector<Complex>& u_ambient, const Lattice& gamma,
                                Complex tau);

struct EquivResult {
  enum class Verdict { Equivalent, NotEquivalent, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::vector<int> weyl_word;  // simple-reflection word of the witness
  size_t group_size = 0;       // enumerated size (0 when capped)
};

// Search w ∈ W̃ with w·u − u2 ∈ τΓ + Γ. Full enumeration while |W̃| stays
// under `cap`; otherwise a bounded word search that may return Unknown.
EquivResult equivalent_moduli(const std::vector<Complex>& u, const std::vector<Complex>& u2,
                              const ModuliSpec& spec, Complex tau, size_t cap = 2000000);

}  // namespace liecm
