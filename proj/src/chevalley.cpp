#include "liecm/chevalley.hpp"

#include <cmath>

namespace liecm {

namespace {

const double kSqrt2 = std::sqrt(2.0);

int one_based_coord(const QSqrt2& x) {
  // exact small integer coordinate -> int
  if (!x.is_rational() || !x.a().is_integer()) throw std::logic_error("coordinate not integer");
  return (int)*x.a().num().to_int64();
}

}  // namespace

CMatrix ChevalleyBasis::cartan_of(const std::vector<Complex>& u) const {
  CMatrix m(dim);
  for (size_t i = 0; i < cartan_axis.size(); ++i)
    if (u[i] != Complex(0, 0)) m = m + cartan_axis[i].scaled(u[i]);
  return m;
}

CMatrix ChevalleyBasis::cartan_of(const ExactVector& u) const {
  std::vector<Complex> cu = u.embed();
  return cartan_of(cu);
}

Complex ChevalleyBasis::root_pairing(int ia, int ib) const {
  const RootDatum& d = *datum;
  if (!(d.roots[ib] == -d.roots[ia])) return Complex(0, 0);
  return opp_pairing(ia);
}

Complex ChevalleyBasis::opp_pairing(int ia) const {
  const RootDatum& d = *datum;
  if (!materialized) return Complex(1, 0);  // simply-laced abstract normalization
  int ib = d.root_index(-d.roots[ia]);
  Complex t = (root_gen[ia] * root_gen[ib]).tr();
  return killing_scale * t;
}

Complex killing_form_matrix(const ChevalleyBasis& cb, const CMatrix& x, const CMatrix& y) {
  if (x.n != y.n || x.n != cb.dim) throw std::invalid_argument("killing_form_matrix: shape mismatch");
  return cb.killing_scale * (x * y).tr();
}

ChevalleyBasis pi1_representation(const RootDatum& d) {
  if (d.type == SimpleType::E6 || d.type == SimpleType::E7)
    throw std::invalid_argument("pi1_representation: not materialized for exceptional types");
  ChevalleyBasis cb;
  cb.datum = &d;
  cb.materialized = true;
  int n = d.rank;
  if (d.type == SimpleType::A) {
    int N = n + 1;
    cb.dim = N;
    cb.killing_scale = 1.0;
    for (int i = 1; i <= N; ++i) cb.cartan_axis.push_back(CMatrix::unit(N, i - 1, i - 1));
    for (const auto& r : d.roots) {
      int j = 0, k = 0;
      for (int i = 1; i <= N; ++i) {
        int c = one_based_coord(r.c[i - 1]);
        if (c == 1) j = i;
        if (c == -1) k = i;
      }
      cb.root_gen.push_back(CMatrix::unit(N, j - 1, k - 1));
    }
    return cb;
  }

  bool isB = d.type == SimpleType::B;
  bool isC = d.type == SimpleType::C;
  size_t dim = isB ? 2 * n + 1 : 2 * n;
  cb.dim = dim;
  cb.killing_scale = 0.5;
  // bilinear form
  cb.form_q = CMatrix(dim);
  for (size_t i = 1; i <= dim; ++i) {
    double s = 1.0;
    if (isC && (int)i > n) s = -1.0;
    cb.form_q.at(i - 1, dim - i) = s;
  }
  auto mirror = [&](int j) { return (int)dim + 1 - j; };  // position of -e_j
  for (int i = 1; i <= n; ++i)
    cb.cartan_axis.push_back(CMatrix::unit(dim, i - 1, i - 1) -
                             CMatrix::unit(dim, mirror(i) - 1, mirror(i) - 1));

  auto unit = [&](int i, int j) { return CMatrix::unit(dim, i - 1, j - 1); };
  for (const auto& r : d.roots) {
    // classify the root by its coordinates
    std::vector<std::pair<int, int>> nz;  // (index, coeff)
    for (int i = 1; i <= n; ++i) {
      int c = one_based_coord(r.c[i - 1]);
      if (c) nz.push_back({i, c});
    }
    CMatrix g;
    if (nz.size() == 2) {
      auto [j, cj] = nz[0];
      auto [k, ck] = nz[1];
      double s = isC ? 1.0 : -1.0;
      if (cj == 1 && ck == -1) g = unit(j, k) - unit(mirror(k), mirror(j));
      else if (cj == -1 && ck == 1) g = unit(k, j) - unit(mirror(j), mirror(k));
      else if (cj == 1 && ck == 1) g = unit(j, mirror(k)) + unit(k, mirror(j)).scaled(s);
      else g = unit(mirror(k), j) + unit(mirror(j), k).scaled(s);
    } else if (isB && nz.size() == 1 && std::abs(nz[0].second) == 1) {
      auto [j, c] = nz[0];
      int mid = n + 1;
      if (c > 0) g = (unit(j, mid) - unit(mid, mirror(j))).scaled(kSqrt2);
      else g = (unit(mid, j) - unit(mirror(j), mid)).scaled(kSqrt2);
    } else if (isC && nz.size() == 1 && std::abs(nz[0].second) == 2) {
      auto [j, c] = nz[0];
      g = c > 0 ? unit(j, mirror(j)) : unit(mirror(j), j);
    } else {
      throw std::logic_error("pi1_representation: unclassified root");
    }
    cb.root_gen.push_back(g);
  }
  return cb;
}

ChevalleyBasis abstract_chevalley(const RootDatum& d) {
  if (d.type != SimpleType::E6 && d.type != SimpleType::E7)
    throw std::invalid_argument("abstract_chevalley: E6/E7 only");
  ChevalleyBasis cb;
  cb.datum = &d;
  cb.materialized = false;
  return cb;
}

ChevalleyBasis chevalley(const RootDatum& d) {
  if (d.type == SimpleType::E6 || d.type == SimpleType::E7) return abstract_chevalley(d);
  return pi1_representation(d);
}

}  // namespace liecm
