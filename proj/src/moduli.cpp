#include "liecm/moduli.hpp"

#include <cmath>
#include <set>

namespace liecm {

namespace {

QSqrt2 q(long long n, long long d = 1) { return QSqrt2(Rational(n, d)); }

ExactVector sum_vec(const std::vector<ExactVector>& vs) {
  ExactVector s(vs[0].dim());
  for (auto& v : vs) s = s + v;
  return s;
}

ModuliSpec spec_from(const std::string& name, const std::vector<ExactVector>& frame,
                     const std::vector<ExactVector>& gens, const std::vector<ExactVector>& wroots) {
  ModuliSpec sp;
  sp.name = name;
  sp.gamma = lattice_from_generators(name, frame, gens);
  sp.weyl_roots = wroots;
  return sp;
}

}  // namespace

std::vector<ModuliSpec> moduli_menu(const RootDatum& d, const DiagramAutomorphism& lam) {
  std::vector<ModuliSpec> out;
  InvariantDatum inv = invariant_subalgebra(d, lam);
  if (inv.empty) return out;
  const auto& te = inv.cartan_basis;
  const auto& wroots = inv.simple_roots;

  if (lam.is_trivial()) {
    // Q∨ and P∨ of the datum
    out.push_back(spec_from("Qv", d.fund_coweights, d.simple_coroots, wroots));
    out.push_back(spec_from("Pv", d.fund_coweights, d.fund_coweights, wroots));
    return out;
  }

  auto frame = te;
  if (d.type == SimpleType::A) {
    // traceless frame
    frame.clear();
    for (size_t j = 0; j + 1 < te.size(); ++j) frame.push_back(te[j] - te[j + 1]);
  }

  auto zbasis = [&]() {  // Z^l on the invariant basis
    return te;
  };
  auto even_basis = [&]() {  // Σ m_j even
    std::vector<ExactVector> g;
    for (size_t j = 0; j + 1 < te.size(); ++j) g.push_back(te[j] - te[j + 1]);
    g.push_back(te.size() >= 2 ? te[te.size() - 2] + te.back() : te[0].scaled(q(2)));
    return g;
  };

  switch (d.type) {
    case SimpleType::A: {
      // sl(p) coroot and coweight lattices in the e~ basis
      std::vector<ExactVector> qg;
      for (size_t j = 0; j + 1 < te.size(); ++j) qg.push_back(te[j] - te[j + 1]);
      out.push_back(spec_from("Qv", frame, qg, wroots));
      size_t p = te.size();
      std::vector<ExactVector> pg = qg;
      ExactVector w(te[0].dim());
      ExactVector s = sum_vec(te);
      w = te[0] - s.scaled(q(1, p));
      pg.push_back(w);
      out.push_back(spec_from("Pv", frame, pg, wroots));
      break;
    }
    case SimpleType::B:
    case SimpleType::D: {
      if (d.type == SimpleType::D && lam.klass == "wn" && d.rank % 2 == 0) {
        size_t l = te.size();
        out.push_back(spec_from("Qv", frame, even_basis(), wroots));
        ExactVector half = sum_vec(te).scaled(q(1, 2));
        auto with = [&](const ExactVector& extra) {
          auto g = even_basis();
          g.push_back(extra);
          return g;
        };
        if (l % 2 == 1) {
          out.push_back(spec_from("Pv", frame, with(half), wroots));
          out.push_back(spec_from("P2v", frame, zbasis(), wroots));
        } else {
          out.push_back(spec_from("PLv", frame, with(half), wroots));
          out.push_back(spec_from("PRv", frame, with(half - te.back()), wroots));
          out.push_back(spec_from("PVv", frame, zbasis(), wroots));
        }
      } else {
        // invariant B_l: coroot (even sums) and coweight (Z^l) lattices
        out.push_back(spec_from("Qv", frame, even_basis(), wroots));
        out.push_back(spec_from("Pv", frame, zbasis(), wroots));
      }
      break;
    }
    case SimpleType::C: {
      size_t l = te.size();
      out.push_back(spec_from("Qv", frame, even_basis(), wroots));
      if (d.rank % 2 == 1) {
        out.push_back(spec_from("Pv", frame, zbasis(), wroots));
      } else {
        ExactVector half = sum_vec(te).scaled(q(1, 2));
        auto with = [&](const ExactVector& extra) {
          auto g = even_basis();
          g.push_back(extra);
          return g;
        };
        if (l % 2 == 1) {
          out.push_back(spec_from("Pv", frame, with(half), wroots));
          out.push_back(spec_from("P2v", frame, zbasis(), wroots));
        } else {
          out.push_back(spec_from("PLv", frame, with(half), wroots));
          out.push_back(spec_from("PRv", frame, with(half - te.back()), wroots));
          out.push_back(spec_from("PVv", frame, zbasis(), wroots));
        }
      }
      break;
    }
    case SimpleType::E6:
    case SimpleType::E7: {
      // Q̃∨ generated by the invariant simple coroots; coincides with P̃∨
      out.push_back(spec_from("Qv", inv.simple_coroots, inv.simple_coroots, wroots));
      break;
    }
  }
  return out;
}

ReduceResult reduce_mod_lattice(const std::vector<Complex>& u, const Lattice& gamma, Complex tau) {
  size_t n = gamma.basis.size();
  if (n == 0) throw std::invalid_argument("reduce_mod_lattice: empty lattice");
  size_t dim = gamma.basis[0].dim();
  if (u.size() != dim) throw std::invalid_argument("reduce_mod_lattice: dimension mismatch");
  // complex coordinates over the basis via the Gram system
  std::vector<std::vector<double>> G(n, std::vector<double>(n));
  std::vector<Complex> rhs(n, Complex(0, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) G[i][j] = gamma.basis[i].dot(gamma.basis[j]).to_double();
    for (size_t t = 0; t < dim; ++t) rhs[i] += gamma.basis[i].c[t].to_double() * u[t];
  }
  // solve G c = rhs (small, real SPD)
  std::vector<Complex> c = rhs;
  {
    std::vector<std::vector<double>> A = G;
    for (size_t k = 0; k < n; ++k) {
      size_t p = k;
      for (size_t i = k; i < n; ++i)
        if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
      std::swap(A[p], A[k]);
      std::swap(c[p], c[k]);
      if (std::abs(A[k][k]) < 1e-12)
        throw std::invalid_argument("reduce_mod_lattice: basis does not span the Cartan");
      for (size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        double f = A[i][k] / A[k][k];
        if (f == 0) continue;
        for (size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
        c[i] -= f * c[k];
      }
    }
    for (size_t k = 0; k < n; ++k) c[k] /= A[k][k];
  }
  // residual must vanish: u inside the span
  std::vector<Complex> recon(dim, Complex(0, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < dim; ++t) recon[t] += c[i] * gamma.basis[i].c[t].to_double();
  for (size_t t = 0; t < dim; ++t)
    if (std::abs(recon[t] - u[t]) > 1e-8)
      throw std::invalid_argument("reduce_mod_lattice: vector outside the lattice span");

  ReduceResult res;
  res.shifts_re.resize(n);
  res.shifts_tau.resize(n);
  std::vector<Complex> cr(n);
  for (size_t i = 0; i < n; ++i) {
    double b = c[i].imag() / tau.imag();
    double a = c[i].real() - b * tau.real();
    // floor with a guard so exact lattice points don't straddle the boundary
    double fb = std::floor(b + 1e-9), fa = std::floor(a + 1e-9);
    double ra = a - fa, rb = b - fb;
    if (ra < 0) ra = 0;
    if (rb < 0) rb = 0;
    res.shifts_tau[i] = (long long)fb;
    res.shifts_re[i] = (long long)fa;
    cr[i] = ra + rb * tau;
  }
  res.u.assign(dim, Complex(0, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < dim; ++t) res.u[t] += cr[i] * gamma.basis[i].c[t].to_double();
  return res;
}

namespace {

bool lattice_zero(const std::vector<Complex>& w, const Lattice& gamma, Complex tau, double tol) {
  // w ∈ τΓ + Γ iff the reduced coefficients are all integral
  try {
    size_t n = gamma.basis.size();
    size_t dim = gamma.basis[0].dim();
    std::vector<std::vector<double>> G(n, std::vector<double>(n));
    std::vector<Complex> rhs(n, Complex(0, 0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) G[i][j] = gamma.basis[i].dot(gamma.basis[j]).to_double();
      for (size_t t = 0; t < dim; ++t) rhs[i] += gamma.basis[i].c[t].to_double() * w[t];
    }
    std::vector<Complex> c = rhs;
    std::vector<std::vector<double>> A = G;
    size_t nn = n;
    for (size_t k = 0; k < nn; ++k) {
      size_t p = k;
      for (size_t i = k; i < nn; ++i)
        if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
      std::swap(A[p], A[k]);
      std::swap(c[p], c[k]);
      if (std::abs(A[k][k]) < 1e-12) return false;
      for (size_t i = 0; i < nn; ++i) {
        if (i == k) continue;
        double f = A[i][k] / A[k][k];
        for (size_t j = k; j < nn; ++j) A[i][j] -= f * A[k][j];
        c[i] -= f * c[k];
      }
    }
    std::vector<Complex> rec(dim, Complex(0, 0));
    for (size_t k = 0; k < nn; ++k) {
      c[k] /= A[k][k];
      for (size_t t = 0; t < dim; ++t) rec[t] += c[k] * gamma.basis[k].c[t].to_double();
    }
    for (size_t t = 0; t < dim; ++t)
      if (std::abs(rec[t] - w[t]) > 1e-7) return false;
    for (size_t k = 0; k < nn; ++k) {
      double b = c[k].imag() / tau.imag();
      double a = c[k].real() - b * tau.real();
      if (std::abs(a - std::round(a)) > tol || std::abs(b - std::round(b)) > tol) return false;
    }
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

EquivResult equivalent_moduli(const std::vector<Complex>& u, const std::vector<Complex>& u2,
                              const ModuliSpec& spec, Complex tau, size_t cap) {
  EquivResult res;
  size_t dim = u.size();
  // reflection matrices (double) of the simple roots
  std::vector<std::vector<std::vector<double>>> gens;
  for (const auto& al : spec.weyl_roots) {
    std::vector<std::vector<double>> M(dim, std::vector<double>(dim, 0.0));
    double n2 = al.dot(al).to_double();
    for (size_t i = 0; i < dim; ++i) {
      M[i][i] = 1.0;
      for (size_t j = 0; j < dim; ++j)
        M[i][j] -= 2.0 * al.c[i].to_double() * al.c[j].to_double() / n2;
    }
    gens.push_back(std::move(M));
  }
  auto apply = [&](const std::vector<std::vector<double>>& M, const std::vector<Complex>& x) {
    std::vector<Complex> y(dim, Complex(0, 0));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) y[i] += M[i][j] * x[j];
    return y;
  };
  // BFS over the group acting on u, deduplicated by the image of u plus a
  // second generic vector (faithful on the orbit for our purposes)
  std::vector<Complex> probe(dim);
  for (size_t t = 0; t < dim; ++t) probe[t] = Complex(0.137 + 0.71 * (double)(t + 1), 0.0331 * (double)(t + 1));
  auto key_of = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::string k;
    char buf[64];
    for (auto& x : a) {
      snprintf(buf, sizeof buf, "%.9f,%.9f;", x.real(), x.imag());
      k += buf;
    }
    for (auto& x : b) {
      snprintf(buf, sizeof buf, "%.9f,%.9f;", x.real(), x.imag());
      k += buf;
    }
    return k;
  };
  struct Node {
    std::vector<Complex> img, pr;
    std::vector<int> word;
  };
  std::set<std::string> seen;
  std::vector<Node> frontier = {{u, probe, {}}};
  seen.insert(key_of(u, probe));
  size_t count = 0;
  bool capped = false;
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (auto& nd : frontier) {
      ++count;
      std::vector<Complex> diff(dim);
      for (size_t t = 0; t < dim; ++t) diff[t] = nd.img[t] - u2[t];
      if (lattice_zero(diff, spec.gamma, tau, 1e-7)) {
        res.verdict = EquivResult::Verdict::Equivalent;
        res.weyl_word = nd.word;
        res.group_size = count;
        return res;
      }
      for (size_t g = 0; g < gens.size(); ++g) {
        Node nn;
        nn.img = apply(gens[g], nd.img);
        nn.pr = apply(gens[g], nd.pr);
        nn.word = nd.word;
        nn.word.push_back((int)g);
        std::string k = key_of(nn.img, nn.pr);
        if (seen.insert(k).second) next.push_back(std::move(nn));
      }
      if (seen.size() > cap) {
        capped = true;
        break;
      }
    }
    if (capped) break;
    frontier = std::move(next);
  }
  res.group_size = capped ? 0 : count;
  res.verdict = capped ? EquivResult::Verdict::Unknown : EquivResult::Verdict::NotEquivalent;
  return res;
}

}  // namespace liecm
