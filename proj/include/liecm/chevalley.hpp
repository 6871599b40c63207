#pragma once

#include "liecm/cmatrix.hpp"
#include "liecm/rootsys.hpp"

namespace liecm {

// Chevalley generators of a root datum. Classical types carry the first
// fundamental representation pi1; E6/E7 stay abstract and expose only the
// Killing pairing of generators, which is all the downstream analytics use.
struct ChevalleyBasis {
  const RootDatum* datum = nullptr;
  bool materialized = false;
  size_t dim = 0;              // pi1 dimension when materialized
  double killing_scale = 1.0;  // (X,Y) = killing_scale * tr(XY); 1 for A, 1/2 for B/C/D
  CMatrix form_q;              // invariant bilinear form (B/C/D)
  std::vector<CMatrix> root_gen;     // indexed like datum->roots
  std::vector<CMatrix> cartan_axis;  // pi1 image of the ambient axis e_i

  // pi1 image of an ambient Cartan vector (complex coordinates)
  CMatrix cartan_of(const std::vector<Complex>& u) const;
  CMatrix cartan_of(const ExactVector& u) const;

  // Killing pairing of root generators: nonzero only on opposite roots.
  Complex root_pairing(int ia, int ib) const;
  // (E_alpha, E_{-alpha})
  Complex opp_pairing(int ia) const;
};

// pi1 for A/B/C/D; throws std::invalid_argument for E6/E7 ("not materialized").
ChevalleyBasis pi1_representation(const RootDatum& d);
// Abstract generators + pairing table for E6/E7.
ChevalleyBasis abstract_chevalley(const RootDatum& d);
// Dispatch on type.
ChevalleyBasis chevalley(const RootDatum& d);

// killing_scale * tr(XY)
Complex killing_form_matrix(const ChevalleyBasis& cb, const CMatrix& x, const CMatrix& y);

}  // namespace liecm
