#include "liecm/lax.hpp"

#include <cmath>
#include <random>

namespace liecm {

namespace {


// third log-derivative constant: weierstrass p = E2 + theta'''(0)/(3 theta'(0))
Complex wp_shift(const EllipticContext& ctx) {
  // theta''' via the series
  const double kTwoPi = 6.283185307179586476925286766559;
  const Complex kI(0, 1);
  Complex t1(0, 0), t3(0, 0);
  for (int n = -64; n <= 64; ++n) {
    double m = n + 0.5;
    Complex term = e2pi(0.5 * m * m * ctx.tau + m * Complex(0.5, 0));
    Complex d = kTwoPi * kI * m;
    t1 += d * term;
    t3 += d * d * d * term;
  }
  return t3 / (3.0 * t1);
}

}  // namespace

std::string LaxSystem::check_coords(const std::vector<Complex>& c) const {
  if (c.size() != coord_frame.size())
    return "expected " + std::to_string(coord_frame.size()) + " coordinates, got " +
           std::to_string(c.size());
  if (!constraint.empty()) {
    Complex s(0, 0);
    for (size_t j = 0; j < c.size(); ++j) s += constraint[j] * c[j];
    if (std::abs(s) > 1e-9) return "coordinate constraint violated (|sum| = " + std::to_string(std::abs(s)) + ")";
  }
  return "";
}

std::vector<Complex> LaxSystem::coords_to_ambient(const std::vector<Complex>& c) const {
  std::string err = check_coords(c);
  if (!err.empty()) throw std::invalid_argument("state coordinates: " + err);
  std::vector<Complex> amb(datum.ambient, Complex(0, 0));
  for (size_t j = 0; j < coord_frame.size(); ++j)
    for (size_t t = 0; t < datum.ambient; ++t) amb[t] += c[j] * coord_frame[j].c[t].to_double();
  return amb;
}

std::unique_ptr<LaxSystem> make_system(SimpleType t, int rank, const std::string& klass) {
  auto out = std::make_unique<LaxSystem>();
  LaxSystem& sys = *out;
  sys.datum = build_root_system(t, rank);
  sys.chev = chevalley(sys.datum);
  sys.chev.datum = &sys.datum;
  DiagramAutomorphism lam =
      klass == "triv" ? trivial_class(sys.datum) : lambda_from_xi(sys.datum, klass);
  sys.basis = gs_basis(sys.datum, sys.chev, lam);
  sys.basis.datum = &sys.datum;
  sys.basis.chev = &sys.chev;
  sys.klass = klass;

  // moduli coordinate frame
  if (klass == "triv") {
    for (size_t j = 0; j < sys.datum.ambient; ++j)
      sys.coord_frame.push_back(ExactVector::basis(sys.datum.ambient, j));
    if (t == SimpleType::A) sys.constraint.assign(sys.datum.ambient, Complex(1, 0));
    if (t == SimpleType::E6) {
      sys.constraint.assign(7, Complex(0, 0));
      sys.constraint[4] = sys.constraint[5] = sys.constraint[6] = 1.0;
    }
  } else {
    switch (t) {
      case SimpleType::A: {
        sys.coord_frame = invariant_cartan_basis(sys.datum, lam);
        sys.constraint.assign(sys.coord_frame.size(), Complex(1, 0));
        break;
      }
      case SimpleType::E6: {
        // (u1, u2, u3) with u1 = u2 + u3
        for (int j = 0; j < 3; ++j) sys.coord_frame.push_back(ExactVector::basis(7, j));
        sys.constraint = {Complex(1, 0), Complex(-1, 0), Complex(-1, 0)};
        break;
      }
      case SimpleType::E7: {
        // (u1..u4, u5) on e1..e4 and e5 - e7, with u1 - u2 - u3 + u4 = 0
        for (int j = 0; j < 4; ++j) sys.coord_frame.push_back(ExactVector::basis(7, j));
        sys.coord_frame.push_back(ExactVector::basis(7, 4) - ExactVector::basis(7, 6));
        sys.constraint = {Complex(1, 0), Complex(-1, 0), Complex(-1, 0), Complex(1, 0), Complex(0, 0)};
        break;
      }
      default:
        sys.coord_frame = invariant_cartan_basis(sys.datum, lam);
        break;
    }
  }

  // pairing structure over non-invariant-Cartan elements
  for (size_t i = 0; i < sys.basis.elems.size(); ++i) {
    if (sys.basis.elems[i].comp == GSComp::CartanInv) continue;
    for (size_t j = i; j < sys.basis.elems.size(); ++j) {
      if (sys.basis.elems[j].comp == GSComp::CartanInv) continue;
      Complex p = sys.basis.pairing((int)i, (int)j);
      if (std::abs(p) > 1e-12) sys.pairs.push_back({(int)i, (int)j, p});
    }
  }
  return out;
}

DynamicalState apply_moment_constraint(const LaxSystem& sys, DynamicalState st) {
  for (size_t j = 0; j < sys.moduli_dim(); ++j) st.S["Se[" + std::to_string(j + 1) + "]"] = Complex(0, 0);
  return st;
}

namespace {

// coefficient function of one non-Cartan-invariant element
Complex element_coeff(const LaxSystem& sys, const GSElement& e, const std::vector<Complex>& u_amb,
                      Complex z, const EllipticContext& ctx) {
  int l = sys.basis.order();
  if (e.cartan) {
    // graded Cartan: phi(g/l, z)
    return phi(Complex((double)e.grade / l, 0), z, ctx);
  }
  // All root channels use the argument -<u,beta>, so L transforms as one
  // twisted section: L(z+1) = Ad(e(kappa)) L, L(z+tau) = Ad(e(u)) lambda^{-1} L.
  Complex ub = pair_cx(u_amb, e.lead_root);
  if (e.comp == GSComp::InvRoot) return phi(-ub, z, ctx);
  Complex kb = sys.datum.kappa.dot(e.lead_root).to_double();
  return phi_k_beta(kb, -ub, e.grade, l, z, ctx);
}

}  // namespace

LaxValue lax_value(const LaxSystem& sys, const DynamicalState& st, Complex z) {
  EllipticContext ctx(st.tau);
  LaxValue lv;
  lv.coeff.assign(sys.basis.elems.size(), Complex(0, 0));
  std::vector<Complex> u_amb = sys.coords_to_ambient(st.u);
  std::vector<Complex> v_amb = sys.coords_to_ambient(st.v);
  std::vector<Complex> sh(sys.moduli_dim());
  for (size_t j = 0; j < sh.size(); ++j) sh[j] = st.spin("Se[" + std::to_string(j + 1) + "]");
  // (v + S^H E1(z)) on the invariant Cartan
  Complex e1z = eisenstein1(z, ctx);
  lv.cartan_ambient = v_amb;
  {
    // S^H enters through the same coordinate frame
    std::vector<Complex> samb(sys.datum.ambient, Complex(0, 0));
    bool nonzero = false;
    for (auto& x : sh)
      if (x != Complex(0, 0)) nonzero = true;
    if (nonzero) {
      samb = sys.coords_to_ambient(sh);
      for (size_t t = 0; t < sys.datum.ambient; ++t) lv.cartan_ambient[t] += e1z * samb[t];
    }
  }
  for (size_t i = 0; i < sys.basis.elems.size(); ++i) {
    const GSElement& e = sys.basis.elems[i];
    if (e.comp == GSComp::CartanInv) continue;
    Complex s = st.spin(e.label);
    if (s == Complex(0, 0)) continue;
    lv.coeff[i] = s * element_coeff(sys, e, u_amb, z, ctx);
  }
  return lv;
}

CMatrix lax_matrix(const LaxSystem& sys, const LaxValue& lv) {
  if (!sys.chev.materialized) throw std::invalid_argument("lax_matrix: abstract case");
  CMatrix m = sys.chev.cartan_of(lv.cartan_ambient);
  for (size_t i = 0; i < sys.basis.elems.size(); ++i) {
    if (lv.coeff[i] == Complex(0, 0)) continue;
    const GSElement& e = sys.basis.elems[i];
    if (e.cartan) {
      std::vector<Complex> amb(sys.datum.ambient);
      for (size_t t = 0; t < amb.size(); ++t) amb[t] = lv.coeff[i] * e.ambient[t];
      m = m + sys.chev.cartan_of(amb);
    } else {
      for (auto& [r, c] : e.combo) m = m + sys.chev.root_gen[r].scaled(lv.coeff[i] * c);
    }
  }
  return m;
}

Complex lax_pairing_square(const LaxSystem& sys, const LaxValue& lv) {
  // Cartan channel: invariant part plus graded Cartan coefficients
  std::vector<Complex> cart = lv.cartan_ambient;
  for (size_t i = 0; i < sys.basis.elems.size(); ++i) {
    const GSElement& e = sys.basis.elems[i];
    if (!e.cartan || e.comp == GSComp::CartanInv) continue;
    for (size_t t = 0; t < cart.size(); ++t) cart[t] += lv.coeff[i] * e.ambient[t];
  }
  Complex s(0, 0);
  for (auto& x : cart) s += x * x;
  for (const auto& pr : sys.pairs) {
    const GSElement& ei = sys.basis.elems[pr.i];
    const GSElement& ej = sys.basis.elems[pr.j];
    if (ei.cartan || ej.cartan) continue;  // cartan handled through the channel above
    Complex term = lv.coeff[pr.i] * lv.coeff[pr.j] * pr.p;
    s += pr.i == pr.j ? term : 2.0 * term;
  }
  return s;
}

namespace {

// E2 argument of one element under the two closed-form conventions
Complex closed_arg(const LaxSystem& sys, const GSElement& e, const std::vector<Complex>& u_amb,
                   Complex tau, HForm form) {
  int l = sys.basis.order();
  if (e.cartan) return Complex((double)e.grade / l, 0);
  Complex ub = pair_cx(u_amb, e.lead_root);
  if (e.comp == GSComp::InvRoot) return -ub;
  Complex kb = sys.datum.kappa.dot(e.lead_root).to_double();
  Complex uni = -ub + kb * tau + Complex((double)e.grade / l, 0);
  if (form == HForm::Universal) return uni;
  SimpleType t = sys.datum.type;
  if (t == SimpleType::E6 && !sys.trivial()) return -ub;  // published args drop the tau and k/3 shifts
  if (t == SimpleType::E7 && !sys.trivial())
    return -ub + Complex((double)e.grade / l, 0);  // published args keep k/2, drop the tau shift
  return uni;
}

}  // namespace

Complex hamiltonian_closed(const LaxSystem& sys, const DynamicalState& st, HForm form) {
  EllipticContext ctx(st.tau);
  std::vector<Complex> u_amb = sys.coords_to_ambient(st.u);
  std::vector<Complex> v_amb = sys.coords_to_ambient(st.v);
  Complex H(0, 0);
  for (auto& x : v_amb) H += 0.5 * x * x;
  Complex wp = Complex(0, 0);
  bool need_wp = form == HForm::Printed && sys.datum.type == SimpleType::D && sys.klass == "w1";
  if (need_wp) wp = wp_shift(ctx);
  for (const auto& pr : sys.pairs) {
    const GSElement& ei = sys.basis.elems[pr.i];
    Complex si = st.spin(ei.label), sj = st.spin(sys.basis.elems[pr.j].label);
    if (si == Complex(0, 0) || sj == Complex(0, 0)) continue;
    Complex arg = closed_arg(sys, ei, u_amb, st.tau, form);
    Complex e2 = eisenstein2(arg, ctx);
    if (need_wp && !ei.cartan && ei.comp == GSComp::VRoot) {
      // the published form uses the Weierstrass function for the half-period
      // V channel of the w1 class
      Complex ub = pair_cx(u_amb, ei.lead_root);
      if (std::abs(ub) < 1e-14) e2 += wp;
    }
    Complex term = si * sj * pr.p * e2;
    H -= pr.i == pr.j ? 0.5 * term : term;
  }
  return H;
}

Complex hamiltonian_printed(const LaxSystem& sys, const DynamicalState& st) {
  return hamiltonian_closed(sys, st, HForm::Printed);
}

OracleResult hamiltonian_oracle(const LaxSystem& sys, const DynamicalState& st,
                                const std::vector<Complex>* zpts) {
  // moment constraint must hold, otherwise E1^2 terms spoil the fit
  for (size_t j = 0; j < sys.moduli_dim(); ++j) {
    if (std::abs(st.spin("Se[" + std::to_string(j + 1) + "]")) > 1e-13)
      throw oracle_error("hamiltonian_oracle: moment constraint not applied");
  }
  EllipticContext ctx(st.tau);
  double imt = st.tau.imag();
  std::vector<Complex> zs = zpts ? *zpts
                                 : std::vector<Complex>{Complex(0.137, 0.211 * imt),
                                                        Complex(0.331, 0.149 * imt),
                                                        Complex(0.253, 0.307 * imt)};
  if (zs.size() < 3) throw oracle_error("hamiltonian_oracle: need three fit points");
  std::vector<Complex> F(3), E2v(3);
  for (int k = 0; k < 3; ++k) {
    LaxValue lv = lax_value(sys, st, zs[k]);
    F[k] = 0.5 * lax_pairing_square(sys, lv);
    E2v[k] = eisenstein2(zs[k], ctx);
  }
  Complex den = E2v[0] - E2v[1];
  if (std::abs(den) < 1e-8) throw oracle_error("hamiltonian_oracle: ill-conditioned fit (E2(z1) ~ E2(z2))");
  Complex chalf = (F[0] - F[1]) / den;  // (1/2) c
  Complex H = F[0] - chalf * E2v[0];
  double scale = std::max({1.0, std::abs(F[2]), std::abs(H)});
  OracleResult res;
  res.H = H;
  res.casimir = 2.0 * chalf;
  res.residual = std::abs(F[2] - chalf * E2v[2] - H) / scale;
  return res;
}

DynamicalState random_state(const LaxSystem& sys, unsigned long long seed, bool spins) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  auto crand = [&]() { return Complex(un(rng), un(rng)); };
  DynamicalState st;
  st.tau = Complex(0.3 * un(rng), 1.15 + 0.25 * un(rng));
  size_t m = sys.moduli_dim();
  st.u.resize(m);
  st.v.resize(m);
  for (size_t j = 0; j < m; ++j) {
    st.u[j] = Complex(0.05 + 0.31 * (j + 1) / (m + 1), 0.04 * un(rng));
    st.v[j] = crand();
  }
  if (!sys.constraint.empty()) {
    auto fix = [&](std::vector<Complex>& c) {
      size_t last = c.size() - 1;
      if (std::abs(sys.constraint[last]) > 0.5) {
        Complex s(0, 0);
        for (size_t j = 0; j + 1 < c.size(); ++j) s += sys.constraint[j] * c[j];
        c[last] = -s / sys.constraint[last];
      } else {
        Complex rest(0, 0);
        for (size_t j = 1; j < c.size(); ++j) rest += sys.constraint[j] * c[j];
        c[0] = -rest / sys.constraint[0];
      }
    };
    fix(st.u);
    fix(st.v);
  }
  if (spins) {
    for (const auto& e : sys.basis.elems)
      if (e.comp != GSComp::CartanInv) st.S[e.label] = crand();
  }
  return apply_moment_constraint(sys, st);
}

bool printed_form_deviates(const LaxSystem& sys) {
  if (sys.trivial()) return false;
  return sys.datum.type == SimpleType::E6 || sys.datum.type == SimpleType::E7 ||
         (sys.datum.type == SimpleType::D && sys.klass == "w1");
}

std::vector<CaseId> verification_cases() {
  return {
      {SimpleType::A, 3, "triv"},  {SimpleType::A, 3, "p2"},  {SimpleType::A, 5, "p3"},
      {SimpleType::A, 5, "p2"},    {SimpleType::B, 2, "triv"}, {SimpleType::B, 2, "w1"},
      {SimpleType::B, 3, "triv"},  {SimpleType::B, 3, "w1"},  {SimpleType::C, 4, "triv"},
      {SimpleType::C, 4, "wn"},    {SimpleType::C, 5, "triv"}, {SimpleType::C, 5, "wn"},
      {SimpleType::D, 4, "triv"},  {SimpleType::D, 4, "wn"},  {SimpleType::D, 4, "w1"},
      {SimpleType::D, 5, "wn"},    {SimpleType::D, 5, "w1"},  {SimpleType::E6, 6, "triv"},
      {SimpleType::E6, 6, "w1"},   {SimpleType::E7, 7, "triv"}, {SimpleType::E7, 7, "w7"},
  };
}

}  // namespace liecm
