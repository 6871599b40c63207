#pragma once

#include "json.hpp"
#include "liecm/lax.hpp"
#include "liecm/moduli.hpp"

namespace liecm {

using Json = nlohmann::json;

Json json_qsqrt2(const QSqrt2& x);
QSqrt2 qsqrt2_from_json(const Json& j);
Json json_vector(const ExactVector& v);
Json json_complex(Complex z);
Complex complex_from_json(const Json& j);

Json json_datum(const RootDatum& d);
Json json_lattice(const Lattice& l);
Json json_center(const RootDatum& d);
Json json_lambda(const RootDatum& d, const DiagramAutomorphism& lam);
Json json_grading(const GradedDecomposition& g);
Json json_invariant(const InvariantDatum& inv);
Json json_basis(const GSBasis& b);
Json json_pairing(const GSBasis& b);

Json json_state(const DynamicalState& st);
DynamicalState state_from_json(const LaxSystem& sys, const Json& j);
Json json_lax_value(const LaxSystem& sys, const LaxValue& lv, bool with_matrix);

}  // namespace liecm
