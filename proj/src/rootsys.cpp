#include "liecm/rootsys.hpp"

#include <set>
#include <sstream>

namespace liecm {

std::string type_name(SimpleType t) {
  switch (t) {
    case SimpleType::A: return "A";
    case SimpleType::B: return "B";
    case SimpleType::C: return "C";
    case SimpleType::D: return "D";
    case SimpleType::E6: return "E6";
    case SimpleType::E7: return "E7";
  }
  return "?";
}

std::optional<SimpleType> parse_type(const std::string& s) {
  if (s == "A" || s == "a") return SimpleType::A;
  if (s == "B" || s == "b") return SimpleType::B;
  if (s == "C" || s == "c") return SimpleType::C;
  if (s == "D" || s == "d") return SimpleType::D;
  if (s == "E6" || s == "e6") return SimpleType::E6;
  if (s == "E7" || s == "e7") return SimpleType::E7;
  return std::nullopt;
}

namespace {

QSqrt2 q(long long n, long long d = 1) { return QSqrt2(Rational(n, d)); }
QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), Rational(1, 2)); }  // 1/sqrt2 = sqrt2/2

ExactVector ev(size_t dim) { return ExactVector(dim); }

// Spinor weights of so(8) on axes e1..e4 inside a dim-7 ambient space.
// Index a = 1..8 with the negation pairing a <-> a+4 (mod 8, 1-based).
std::vector<int> spinor_signs(char family, int a) {
  // Base patterns for a=1..4; a=5..8 are their negatives.
  static const int L[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  static const int R[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  int base = (a - 1) % 4;
  int flip = a > 4 ? -1 : 1;
  std::vector<int> s(4);
  for (int k = 0; k < 4; ++k) s[k] = flip * (family == 'L' ? L[base][k] : R[base][k]);
  return s;
}

}  // namespace

ExactVector spinor_weight(char family, int a) {
  // family 'L'/'R': half-sign vectors; 'V': +-e_k. Ambient dimension 7.
  ExactVector w(7);
  if (family == 'V') {
    int k = (a - 1) % 4;
    w.c[k] = a > 4 ? q(-1) : q(1);
    return w;
  }
  auto s = spinor_signs(family, a);
  for (int k = 0; k < 4; ++k) w.c[k] = q(s[k], 2);
  return w;
}

int spinor_negate(int a) { return a > 4 ? a - 4 : a + 4; }

int RootDatum::root_index(const ExactVector& v) const {
  auto it = root_index_.find(v);
  return it == root_index_.end() ? -1 : it->second;
}

ExactVector RootDatum::coroot(const ExactVector& root) const {
  QSqrt2 n = root.dot(root);
  return root.scaled(q(2) / n);
}

std::vector<QSqrt2> RootDatum::simple_root_coords(const ExactVector& v) const {
  QMat M(ambient, rank);
  for (size_t i = 0; i < ambient; ++i)
    for (int j = 0; j < rank; ++j) M.at(i, j) = simple_roots[j].c[i];
  auto x = exact_solve_tall(M, v.c);
  if (!x) throw std::invalid_argument("simple_root_coords: vector outside root span");
  return *x;
}

long long RootDatum::level(const ExactVector& root) const {
  auto x = simple_root_coords(root);
  QSqrt2 s;
  for (auto& xi : x) s += xi;
  if (!s.is_rational() || !s.a().is_integer())
    throw std::logic_error("level: non-integer height");
  auto v = s.a().num().to_int64();
  if (!v) throw std::logic_error("level: overflow");
  return *v;
}

ExactVector RootDatum::reflect(const ExactVector& v, const ExactVector& alpha) const {
  QSqrt2 k = v.dot(coroot(alpha));
  return v - alpha.scaled(k);
}

ExactVector RootDatum::weyl_apply(const std::vector<int>& word, const ExactVector& v) const {
  ExactVector r = v;
  for (int i : word) {
    if (i < 0 || i >= rank) throw std::invalid_argument("weyl_apply: bad generator index");
    r = reflect(r, simple_roots[i]);
  }
  return r;
}

ExactVector RootDatum::dominant_representative(const ExactVector& v, std::vector<int>* word) const {
  ExactVector r = v;
  if (word) word->clear();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank; ++i) {
      if (r.dot(simple_coroots[i]).sign() < 0) {
        r = reflect(r, simple_roots[i]);
        if (word) word->push_back(i);
        moved = true;
      }
    }
  }
  return r;
}

std::vector<ExactVector> RootDatum::alcove_vertices() const {
  std::vector<ExactVector> vs;
  vs.push_back(ev(ambient));
  for (int j = 0; j < rank; ++j) vs.push_back(fund_coweights[j].scaled(q(1, marks[j])));
  return vs;
}

std::vector<std::vector<long long>> RootDatum::cartan_matrix() const {
  std::vector<std::vector<long long>> m(rank, std::vector<long long>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      QSqrt2 x = simple_roots[i].dot(simple_coroots[j]);
      if (!x.is_rational() || !x.a().is_integer()) throw std::logic_error("non-integer Cartan entry");
      m[i][j] = *x.a().num().to_int64();
    }
  return m;
}

namespace {

void finish(RootDatum& d) {
  for (const auto& r : d.positive_roots) d.roots.push_back(r);
  for (const auto& r : d.positive_roots) d.roots.push_back(-r);
  for (size_t i = 0; i < d.roots.size(); ++i) d.root_index_[d.roots[i]] = (int)i;
  d.rho = ev(d.ambient);
  d.rho_check = ev(d.ambient);
  for (const auto& r : d.positive_roots) {
    d.rho = d.rho + r.scaled(q(1, 2));
    d.rho_check = d.rho_check + d.coroot(r).scaled(q(1, 2));
  }
  d.kappa = d.rho_check.scaled(q(1, d.coxeter));
  // marks: expansion of the highest root −α0 over the simple roots
  auto x = d.simple_root_coords(-d.alpha0);
  d.marks.clear();
  for (auto& xi : x) {
    if (!xi.is_rational() || !xi.a().is_integer()) throw std::logic_error("non-integer mark");
    d.marks.push_back(*xi.a().num().to_int64());
  }
  // Fundamental weights/coweights: solved inside the Cartan span, so every
  // ambient realization (traceless A, constrained E6) is handled uniformly.
  size_t r = d.cartan_basis.size();
  QMat Mw(r, r), Mc(r, r);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      Mw.at(i, j) = d.cartan_basis[j].dot(d.simple_coroots[i]);
      Mc.at(i, j) = d.cartan_basis[j].dot(d.simple_roots[i]);
    }
  d.fund_weights.clear();
  d.fund_coweights.clear();
  for (size_t k = 0; k < r; ++k) {
    std::vector<QSqrt2> rhs(r);
    rhs[k] = q(1);
    auto xw = exact_solve(Mw, rhs);
    auto xc = exact_solve(Mc, rhs);
    if (!xw || !xc) throw std::logic_error("fundamental weight solve failed");
    ExactVector w(d.ambient), c(d.ambient);
    for (size_t j = 0; j < r; ++j) {
      w = w + d.cartan_basis[j].scaled((*xw)[j]);
      c = c + d.cartan_basis[j].scaled((*xc)[j]);
    }
    d.fund_weights.push_back(w);
    d.fund_coweights.push_back(c);
  }
}

RootDatum build_A(int rankA) {
  int N = rankA + 1;
  RootDatum d;
  d.type = SimpleType::A;
  d.rank = rankA;
  d.ambient = N;
  for (int j = 0; j < rankA; ++j)
    d.simple_roots.push_back(ExactVector::basis(N, j) - ExactVector::basis(N, j + 1));
  d.simple_coroots = d.simple_roots;
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k)
      d.positive_roots.push_back(ExactVector::basis(N, j) - ExactVector::basis(N, k));
  d.alpha0 = ExactVector::basis(N, N - 1) - ExactVector::basis(N, 0);
  d.coxeter = N;
  for (int j = 0; j < rankA; ++j) d.cartan_basis.push_back(d.simple_roots[j]);
  finish(d);
  return d;
}

RootDatum build_BCD(SimpleType t, int n) {
  RootDatum d;
  d.type = t;
  d.rank = n;
  d.ambient = n;
  auto e = [&](int j) { return ExactVector::basis(n, j - 1); };
  for (int j = 1; j < n; ++j) d.simple_roots.push_back(e(j) - e(j + 1));
  if (t == SimpleType::B) d.simple_roots.push_back(e(n));
  if (t == SimpleType::C) d.simple_roots.push_back(e(n).scaled(q(2)));
  if (t == SimpleType::D) d.simple_roots.push_back(e(n - 1) + e(n));
  for (const auto& a : d.simple_roots) d.simple_coroots.push_back(a.scaled(q(2) / a.dot(a)));
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      d.positive_roots.push_back(e(j) - e(k));
      d.positive_roots.push_back(e(j) + e(k));
    }
  if (t == SimpleType::B)
    for (int j = 1; j <= n; ++j) d.positive_roots.push_back(e(j));
  if (t == SimpleType::C)
    for (int j = 1; j <= n; ++j) d.positive_roots.push_back(e(j).scaled(q(2)));
  d.alpha0 = t == SimpleType::C ? e(1).scaled(q(-2)) : -(e(1) + e(2));
  d.coxeter = t == SimpleType::D ? 2 * n - 2 : 2 * n;
  for (int j = 1; j <= n; ++j) d.cartan_basis.push_back(e(j));
  finish(d);
  return d;
}

RootDatum build_E(int which) {  // 6 or 7
  RootDatum d;
  d.type = which == 6 ? SimpleType::E6 : SimpleType::E7;
  d.rank = which;
  d.ambient = 7;
  auto e = [&](int j) { return ExactVector::basis(7, j - 1); };
  QSqrt2 is2 = inv_sqrt2();
  ExactVector nuL = (e(5) - e(7)).scaled(is2);
  ExactVector nuR = (e(5) - e(6)).scaled(is2);
  ExactVector nuV = (e(6) - e(7)).scaled(is2);

  ExactVector a1 = (e(4) - e(3) - e(2) - e(1)).scaled(q(1, 2)) + nuR;
  ExactVector a2 = e(3) - e(4);
  ExactVector a3 = e(2) - e(3);
  ExactVector a4 = e(1) - e(2);
  ExactVector a5 = -e(1) + nuV;
  ExactVector a6 = e(3) + e(4);
  d.simple_roots = {a1, a2, a3, a4, a5, a6};
  if (which == 7) d.simple_roots.push_back(e(7).scaled(QSqrt2::sqrt2()));
  d.simple_coroots = d.simple_roots;  // all roots have square length 2

  // so(8) positives on e1..e4
  for (int j = 1; j <= 4; ++j)
    for (int k = j + 1; k <= 4; ++k) {
      d.positive_roots.push_back(e(j) - e(k));
      d.positive_roots.push_back(e(j) + e(k));
    }
  for (int a = 1; a <= 8; ++a) d.positive_roots.push_back(spinor_weight('L', a) + nuL);
  for (int a = 1; a <= 8; ++a) d.positive_roots.push_back(spinor_weight('R', a) + nuR);
  for (int a = 1; a <= 8; ++a) d.positive_roots.push_back(spinor_weight('V', a) + nuV);
  if (which == 7) {
    ExactVector muL = (e(5) + e(7)).scaled(is2);
    ExactVector muR = (e(5) + e(6)).scaled(is2);
    ExactVector muV = (e(6) + e(7)).scaled(is2);
    for (int j = 5; j <= 7; ++j) d.positive_roots.push_back(e(j).scaled(QSqrt2::sqrt2()));
    for (int a = 1; a <= 8; ++a) d.positive_roots.push_back(spinor_weight('R', a) + muR);
    for (int a = 1; a <= 8; ++a) d.positive_roots.push_back(spinor_weight('V', a) + muV);
    for (int a = 1; a <= 8; ++a) d.positive_roots.push_back(spinor_weight('L', a) + muL);
  }

  if (which == 6) {
    d.alpha0 = -((e(1) + e(2) + e(3) + e(4)).scaled(q(1, 2)) + nuL);
    d.coxeter = 12;
    d.cartan_basis = {e(1), e(2), e(3), e(4), e(5) - e(6), e(6) - e(7)};
  } else {
    d.alpha0 = -e(5).scaled(QSqrt2::sqrt2());
    d.coxeter = 18;
    for (int j = 1; j <= 7; ++j) d.cartan_basis.push_back(e(j));
  }
  finish(d);
  return d;
}

}  // namespace

RootDatum build_root_system(SimpleType type, int rank) {
  switch (type) {
    case SimpleType::A:
      if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
      return build_A(rank);
    case SimpleType::B:
      if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
      return build_BCD(type, rank);
    case SimpleType::C:
      if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
      return build_BCD(type, rank);
    case SimpleType::D:
      if (rank < 3) throw std::invalid_argument("D requires rank >= 3");
      return build_BCD(type, rank);
    case SimpleType::E6:
      if (rank != 6) throw std::invalid_argument("E6 has rank 6");
      return build_E(6);
    case SimpleType::E7:
      if (rank != 7) throw std::invalid_argument("E7 has rank 7");
      return build_E(7);
  }
  throw std::invalid_argument("unknown type");
}

// ---------------------------------------------------------------- lattices

bool Lattice::contains(const ExactVector& v) const {
  if (basis.empty()) return v.is_zero();
  QMat M(basis[0].dim(), basis.size());
  for (size_t i = 0; i < basis[0].dim(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) M.at(i, j) = basis[j].c[i];
  auto x = exact_solve_tall(M, v.c);
  if (!x) return false;
  for (const auto& xi : *x) {
    if (!xi.is_rational() || !xi.a().is_integer()) return false;
  }
  return true;
}

Lattice lattice_from_generators(const std::string& name, const std::vector<ExactVector>& frame,
                                const std::vector<ExactVector>& gens) {
  QMat M(frame[0].dim(), frame.size());
  for (size_t i = 0; i < frame[0].dim(); ++i)
    for (size_t j = 0; j < frame.size(); ++j) M.at(i, j) = frame[j].c[i];
  // rational coordinates of each generator over the frame
  std::vector<std::vector<Rational>> coords;
  BigInt den(1);
  for (const auto& g : gens) {
    auto x = exact_solve_tall(M, g.c);
    if (!x) throw std::invalid_argument("lattice_from_generators: generator outside frame span");
    std::vector<Rational> row;
    for (const auto& xi : *x) {
      if (!xi.is_rational()) throw std::invalid_argument("lattice_from_generators: irrational coordinate");
      row.push_back(xi.a());
      BigInt g2 = BigInt::gcd(den, xi.a().den());
      den = den * (xi.a().den() / g2);
    }
    coords.push_back(std::move(row));
  }
  std::vector<std::vector<BigInt>> intm;
  for (auto& row : coords) {
    std::vector<BigInt> r;
    for (auto& x : row) r.push_back(x.num() * (den / x.den()));
    intm.push_back(std::move(r));
  }
  auto basis_rows = hnf_row_basis(std::move(intm));
  Lattice L;
  L.name = name;
  Rational invden(BigInt(1), den);
  for (auto& row : basis_rows) {
    ExactVector v(frame[0].dim());
    for (size_t j = 0; j < frame.size(); ++j)
      v = v + frame[j].scaled(QSqrt2(Rational(row[j], BigInt(1)) * invden));
    L.basis.push_back(v);
  }
  return L;
}

std::vector<Lattice> lattices(const RootDatum& d) {
  std::vector<ExactVector> frame = d.fund_weights.empty() ? d.simple_roots : d.fund_weights;
  // Weight-type objects have rational coordinates over the fundamental weights.
  auto make = [&](const std::string& name, std::vector<ExactVector> gens) {
    return lattice_from_generators(name, frame, gens);
  };
  std::vector<Lattice> out;
  out.push_back(make("Q", d.simple_roots));
  out.push_back(lattice_from_generators("Qv", d.fund_coweights, d.simple_coroots));
  out.push_back(make("P", d.fund_weights));
  out.push_back(lattice_from_generators("Pv", d.fund_coweights, d.fund_coweights));
  if (d.type == SimpleType::A) {
    int N = d.rank + 1;
    for (int l = 2; l < N; ++l) {
      if (N % l != 0) continue;
      int p = N / l;
      auto gens = d.simple_roots;
      gens.push_back(d.fund_weights[N - p - 1]);
      out.push_back(make("Pl" + std::to_string(l), gens));
    }
  }
  if (d.type == SimpleType::D) {
    auto gens = d.simple_roots;
    gens.push_back(d.fund_weights[0]);
    if (d.rank % 2 == 1) {
      out.push_back(make("P2", gens));
    } else {
      out.push_back(make("PV", gens));
      auto gr = d.simple_roots;
      gr.push_back(d.fund_weights[d.rank - 2]);
      out.push_back(make("PR", gr));
      auto gl = d.simple_roots;
      gl.push_back(d.fund_weights[d.rank - 1]);
      out.push_back(make("PL", gl));
    }
  }
  return out;
}

// ---------------------------------------------------------------- center

std::string CenterStructure::to_string() const {
  if (cyclic_factors.empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < cyclic_factors.size(); ++i) {
    if (i) s += "x";
    s += "mu" + std::to_string(cyclic_factors[i]);
  }
  return s;
}

CenterStructure center_structure(const RootDatum& d) {
  auto cm = d.cartan_matrix();
  std::vector<std::vector<BigInt>> m;
  for (auto& row : cm) {
    std::vector<BigInt> r;
    for (auto x : row) r.push_back(BigInt(x));
    m.push_back(std::move(r));
  }
  auto factors = snf_invariant_factors(std::move(m));
  CenterStructure cs;
  for (auto& f : factors) {
    auto v = f.to_int64();
    if (v && *v > 1) cs.cyclic_factors.push_back(*v);
  }
  std::sort(cs.cyclic_factors.begin(), cs.cyclic_factors.end());
  switch (d.type) {
    case SimpleType::A: cs.generators = {d.fund_coweights[d.rank - 1]}; break;
    case SimpleType::B: cs.generators = {d.fund_coweights[0]}; break;
    case SimpleType::C: cs.generators = {d.fund_coweights[d.rank - 1]}; break;
    case SimpleType::D:
      cs.generators = {d.fund_coweights[d.rank - 1]};
      if (d.rank % 2 == 0) cs.generators.push_back(d.fund_coweights[0]);
      break;
    case SimpleType::E6: cs.generators = {d.fund_coweights[0]}; break;
    case SimpleType::E7: cs.generators = {d.fund_coweights[6]}; break;
  }
  return cs;
}

// ------------------------------------------------- abstract Cartan matrices

std::vector<std::vector<long long>> standard_cartan_matrix(SimpleType t, int rank) {
  if (t == SimpleType::E6 || t == SimpleType::E7)
    return build_root_system(t, t == SimpleType::E6 ? 6 : 7).cartan_matrix();
  std::vector<std::vector<long long>> m(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 2;
  for (int i = 0; i + 1 < rank; ++i) m[i][i + 1] = m[i + 1][i] = -1;
  if (rank >= 2) {
    if (t == SimpleType::B) m[rank - 2][rank - 1] = -2;
    if (t == SimpleType::C) m[rank - 1][rank - 2] = -2;
    if (t == SimpleType::D) {
      if (rank >= 3) {
        m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 0;
        m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1;
      } else {
        m[0][1] = m[1][0] = 0;  // D2 = A1 x A1
      }
    }
  }
  return m;
}

std::vector<std::vector<long long>> cartan_matrix_g2() { return {{2, -1}, {-3, 2}}; }

std::vector<std::vector<long long>> cartan_matrix_f4() {
  return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
}

// ---------------------------------------------------------------- labels

namespace {

// signed axis-sum label for rational-integer coordinate roots: "e1-e2", "2e1"
std::string classical_label(const ExactVector& r, size_t upto) {
  std::string s;
  for (size_t i = 0; i < upto; ++i) {
    const QSqrt2& x = r.c[i];
    if (x.is_zero()) continue;
    Rational v = x.a();
    std::string coef;
    if (v == Rational(1)) coef = s.empty() ? "" : "+";
    else if (v == Rational(-1)) coef = "-";
    else if (v == Rational(2)) coef = s.empty() ? "2" : "+2";
    else if (v == Rational(-2)) coef = "-2";
    else coef = (s.empty() ? "" : "+") + v.to_string() + "*";
    s += coef + "e" + std::to_string(i + 1);
  }
  return s;
}

}  // namespace

std::string root_label(const RootDatum& d, const ExactVector& root) {
  if (d.type != SimpleType::E6 && d.type != SimpleType::E7) return classical_label(root, d.ambient);
  bool tail_zero = root.c[4].is_zero() && root.c[5].is_zero() && root.c[6].is_zero();
  if (tail_zero) return classical_label(root, 4);
  // sqrt2 * e_j roots of E7
  bool head_zero = root.c[0].is_zero() && root.c[1].is_zero() && root.c[2].is_zero() && root.c[3].is_zero();
  QSqrt2 s2 = QSqrt2::sqrt2();
  if (head_zero) {
    for (int j = 5; j <= 7; ++j) {
      if (root.c[j - 1] == s2) return "q" + std::to_string(j) + "+";
      if (root.c[j - 1] == -s2) return "q" + std::to_string(j) + "-";
    }
  }
  // spinor families: subtract each candidate tail and match the weight
  struct Fam {
    const char* name;
    int i, j;  // tail = (e_i - e_j)/sqrt2 or (e_i + e_j)/sqrt2
    bool plus;
    char wfam;
  };
  static const Fam fams[] = {{"L", 5, 7, false, 'L'}, {"R", 5, 6, false, 'R'}, {"V", 6, 7, false, 'V'},
                             {"Lp", 5, 7, true, 'L'}, {"Rp", 5, 6, true, 'R'}, {"Vp", 6, 7, true, 'V'}};
  for (const auto& f : fams) {
    ExactVector tail(7);
    QSqrt2 h = inv_sqrt2();
    tail.c[f.i - 1] = h;
    tail.c[f.j - 1] = f.plus ? h : -h;
    for (int sgn : {1, -1}) {
      ExactVector w = root - (sgn > 0 ? tail : -tail);
      for (int a = 1; a <= 8; ++a) {
        if (w == spinor_weight(f.wfam, a))
          return std::string(f.name) + std::to_string(a) + (sgn > 0 ? "+" : "-");
      }
    }
  }
  throw std::logic_error("root_label: unrecognized root " + root.to_string());
}

std::optional<ExactVector> root_from_label(const RootDatum& d, const std::string& label) {
  for (const auto& r : d.roots) {
    if (root_label(d, r) == label) return r;
  }
  return std::nullopt;
}

size_t root_count_from_cartan(const std::vector<std::vector<long long>>& cartan) {
  size_t n = cartan.size();
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (size_t i = 0; i < n; ++i) {
    std::vector<long long> a(n, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
    a[i] = -1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (const auto& r : frontier) {
      for (size_t j = 0; j < n; ++j) {
        long long pairing = 0;
        for (size_t i = 0; i < n; ++i) pairing += r[i] * cartan[i][j];
        auto s = r;
        s[j] -= pairing;
        if (roots.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
    if (roots.size() > 100000) throw std::logic_error("root closure diverged: not finite type");
  }
  return roots.size();
}

}  // namespace liecm
