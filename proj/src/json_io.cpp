#include "liecm/json_io.hpp"

namespace liecm {

Json json_qsqrt2(const QSqrt2& x) { return Json{{"a", x.a().to_string()}, {"b", x.b().to_string()}}; }

QSqrt2 qsqrt2_from_json(const Json& j) {
  return QSqrt2(Rational::from_string(j.at("a").get<std::string>()),
                Rational::from_string(j.at("b").get<std::string>()));
}

Json json_vector(const ExactVector& v) {
  Json out = Json::array();
  for (const auto& x : v.c) out.push_back(json_qsqrt2(x));
  return out;
}

Json json_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

Json json_datum(const RootDatum& d) {
  Json out;
  out["type"] = type_name(d.type);
  out["rank"] = d.rank;
  out["ambient"] = d.ambient;
  out["dim"] = (long long)(d.rank + d.roots.size());
  out["roots"] = d.roots.size();
  out["h"] = d.coxeter;
  out["marks"] = d.marks;
  out["center"] = center_structure(d).to_string();
  out["kappa"] = json_vector(d.kappa);
  out["rho"] = json_vector(d.rho);
  Json sr = Json::array(), cw = Json::array();
  for (auto& a : d.simple_roots) sr.push_back(json_vector(a));
  for (auto& w : d.fund_coweights) cw.push_back(json_vector(w));
  out["simple_roots"] = sr;
  out["fund_coweights"] = cw;
  out["cartan_matrix"] = d.cartan_matrix();
  return out;
}

Json json_lattice(const Lattice& l) {
  Json out;
  out["name"] = l.name;
  Json b = Json::array();
  for (auto& v : l.basis) b.push_back(json_vector(v));
  out["basis"] = b;
  return out;
}

Json json_center(const RootDatum& d) {
  auto cs = center_structure(d);
  Json out;
  out["group"] = cs.to_string();
  out["factors"] = cs.cyclic_factors;
  Json g = Json::array();
  for (auto& v : cs.generators) g.push_back(json_vector(v));
  out["generators"] = g;
  return out;
}

Json json_lambda(const RootDatum& d, const DiagramAutomorphism& lam) {
  Json out;
  out["class"] = lam.klass;
  out["order"] = lam.order;
  out["xi"] = json_vector(lam.xi);
  out["node_perm"] = lam.node_perm;
  Json m = Json::array();
  for (size_t i = 0; i < lam.ambient.rows; ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < lam.ambient.cols; ++j) row.push_back(json_qsqrt2(lam.ambient.at(i, j)));
    m.push_back(row);
  }
  out["ambient"] = m;
  (void)d;
  return out;
}

Json json_grading(const GradedDecomposition& g) {
  Json out;
  out["order"] = g.order;
  out["dims"] = g.dims;
  out["cartan_dims"] = g.cartan_dims;
  out["orbits"] = g.orbits.size();
  return out;
}

Json json_invariant(const InvariantDatum& inv) {
  Json out;
  out["empty"] = inv.empty;
  out["identified"] = inv.identified;
  if (inv.empty) return out;
  out["cartan_matrix"] = inv.cartan;
  Json sr = Json::array(), sc = Json::array(), cb = Json::array();
  for (auto& a : inv.simple_roots) sr.push_back(json_vector(a));
  for (auto& a : inv.simple_coroots) sc.push_back(json_vector(a));
  for (auto& a : inv.cartan_basis) cb.push_back(json_vector(a));
  out["simple_roots"] = sr;
  out["simple_coroots"] = sc;
  out["cartan_basis"] = cb;
  out["positive_roots"] = inv.positive_roots.size();
  return out;
}

namespace {

const char* comp_name(GSComp c) {
  switch (c) {
    case GSComp::CartanInv: return "cartan";
    case GSComp::CartanGraded: return "cartan_graded";
    case GSComp::InvRoot: return "unbroken";
    case GSComp::VRoot: return "V";
    case GSComp::Graded: return "graded";
  }
  return "?";
}

}  // namespace

Json json_basis(const GSBasis& b) {
  Json out;
  out["order"] = b.order();
  Json els = Json::array();
  for (const auto& e : b.elems) {
    Json je;
    je["label"] = e.label;
    je["grade"] = e.grade;
    je["component"] = comp_name(e.comp);
    if (e.cartan) {
      Json amb = Json::array();
      for (auto& x : e.ambient) amb.push_back(json_complex(x));
      je["ambient"] = amb;
    } else {
      je["lead_root"] = root_label(*b.datum, e.lead_root);
      Json combo = Json::array();
      for (auto& [r, c] : e.combo)
        combo.push_back(Json{{"root", root_label(*b.datum, b.datum->roots[r])}, {"coeff", json_complex(c)}});
      je["combo"] = combo;
    }
    els.push_back(std::move(je));
  }
  out["elements"] = els;
  return out;
}

Json json_pairing(const GSBasis& b) {
  Json out = Json::array();
  for (auto [i, j, p] : b.pairing_triplets())
    out.push_back(Json{{"x", b.elems[i].label}, {"y", b.elems[j].label}, {"value", json_complex(p)}});
  return out;
}

Json json_state(const DynamicalState& st) {
  Json out;
  Json u = Json::array(), v = Json::array();
  for (auto& x : st.u) u.push_back(json_complex(x));
  for (auto& x : st.v) v.push_back(json_complex(x));
  out["u"] = u;
  out["v"] = v;
  Json s = Json::object();
  for (auto& [k, x] : st.S) s[k] = json_complex(x);
  out["S"] = s;
  out["tau"] = json_complex(st.tau);
  return out;
}

DynamicalState state_from_json(const LaxSystem& sys, const Json& j) {
  DynamicalState st;
  st.tau = complex_from_json(j.at("tau"));
  for (auto& x : j.at("u")) st.u.push_back(complex_from_json(x));
  for (auto& x : j.at("v")) st.v.push_back(complex_from_json(x));
  if (j.contains("S"))
    for (auto it = j.at("S").begin(); it != j.at("S").end(); ++it) {
      const std::string& key = it.key();
      if (key.rfind("Se[", 0) != 0 && !sys.basis.index.count(key))
        throw std::invalid_argument("state: unknown spin label '" + key + "'");
      st.S[key] = complex_from_json(it.value());
    }
  std::string err = sys.check_coords(st.u);
  if (!err.empty()) throw std::invalid_argument("state u: " + err);
  err = sys.check_coords(st.v);
  if (!err.empty()) throw std::invalid_argument("state v: " + err);
  return st;
}

Json json_lax_value(const LaxSystem& sys, const LaxValue& lv, bool with_matrix) {
  Json out;
  Json cs = Json::object();
  for (size_t i = 0; i < lv.coeff.size(); ++i)
    if (lv.coeff[i] != Complex(0, 0)) cs[sys.basis.elems[i].label] = json_complex(lv.coeff[i]);
  out["coefficients"] = cs;
  Json cart = Json::array();
  for (auto& x : lv.cartan_ambient) cart.push_back(json_complex(x));
  out["cartan_ambient"] = cart;
  if (with_matrix && sys.chev.materialized) {
    CMatrix m = lax_matrix(sys, lv);
    Json rows = Json::array();
    for (size_t i = 0; i < m.n; ++i) {
      Json row = Json::array();
      for (size_t j = 0; j < m.n; ++j) row.push_back(json_complex(m.at(i, j)));
      rows.push_back(row);
    }
    out["matrix"] = rows;
  }
  return out;
}

}  // namespace liecm
