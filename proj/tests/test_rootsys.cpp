#include "doctest.h"
#include <set>

#include "liecm/autgrade.hpp"
#include "liecm/rootsys.hpp"

using namespace liecm;

namespace {

QSqrt2 q(long long n, long long d = 1) { return QSqrt2(Rational(n, d)); }

ExactVector vec(std::vector<Rational> a, std::vector<Rational> b = {}) {
  ExactVector v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v.c[i] = QSqrt2(a[i], i < b.size() ? b[i] : Rational(0));
  return v;
}

}  // namespace

TEST_CASE("root counts for all supported types") {
  CHECK(build_root_system(SimpleType::A, 3).roots.size() == 12);       // N(N-1), N=4
  CHECK(build_root_system(SimpleType::B, 3).roots.size() == 6 + 12);   // 2n + 2n(n-1)
  CHECK(build_root_system(SimpleType::C, 4).roots.size() == 8 + 24);
  CHECK(build_root_system(SimpleType::D, 5).roots.size() == 40);       // 2n(n-1)
  CHECK(build_root_system(SimpleType::E6, 6).roots.size() == 72);
  CHECK(build_root_system(SimpleType::E7, 7).roots.size() == 126);
  // dim g = rank + #R
  CHECK(6 + build_root_system(SimpleType::E6, 6).roots.size() == 78);
  CHECK(7 + build_root_system(SimpleType::E7, 7).roots.size() == 133);
}

TEST_CASE("cartan matrices match the standard ones") {
  for (int n = 1; n <= 6; ++n) CHECK(build_root_system(SimpleType::A, n).cartan_matrix() == standard_cartan_matrix(SimpleType::A, n));
  for (int n = 2; n <= 6; ++n) CHECK(build_root_system(SimpleType::B, n).cartan_matrix() == standard_cartan_matrix(SimpleType::B, n));
  for (int n = 2; n <= 6; ++n) CHECK(build_root_system(SimpleType::C, n).cartan_matrix() == standard_cartan_matrix(SimpleType::C, n));
  for (int n = 3; n <= 6; ++n) CHECK(build_root_system(SimpleType::D, n).cartan_matrix() == standard_cartan_matrix(SimpleType::D, n));
}

TEST_CASE("weights are dual to coroots") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 4}, {SimpleType::B, 3}, {SimpleType::C, 4}, {SimpleType::D, 5}, {SimpleType::E6, 6}, {SimpleType::E7, 7}}) {
    auto d = build_root_system(t, r);
    for (int j = 0; j < d.rank; ++j)
      for (int k = 0; k < d.rank; ++k) {
        CHECK(d.fund_weights[j].dot(d.simple_coroots[k]) == (j == k ? q(1) : q(0)));
        CHECK(d.fund_coweights[j].dot(d.simple_roots[k]) == (j == k ? q(1) : q(0)));
      }
  }
}

TEST_CASE("kappa values match the closed forms") {
  // A3 (sl4): κ = (3/8, 1/8, -1/8, -3/8), h = 4
  auto a3 = build_root_system(SimpleType::A, 3);
  CHECK(a3.coxeter == 4);
  CHECK(a3.kappa == vec({Rational(3, 8), Rational(1, 8), Rational(-1, 8), Rational(-3, 8)}));

  // B2: κ = (1/2, 1/4)
  auto b2 = build_root_system(SimpleType::B, 2);
  CHECK(b2.kappa == vec({Rational(1, 2), Rational(1, 4)}));

  // C2: κ = (3/8, 1/8)
  auto c2 = build_root_system(SimpleType::C, 2);
  CHECK(c2.kappa == vec({Rational(3, 8), Rational(1, 8)}));

  // D5: κ = 1/2 e1 + (1/2 - 1/8) e2 + ...
  auto d5 = build_root_system(SimpleType::D, 5);
  CHECK(d5.coxeter == 8);
  CHECK(d5.kappa == vec({Rational(1, 2), Rational(3, 8), Rational(1, 4), Rational(1, 8), Rational(0)}));

  // E6: κ = 1/4 e1 + 1/6 e2 + 1/12 e3 + (2/(3sqrt2))(e5 - e7); 2/(3sqrt2) = sqrt2/3
  auto e6 = build_root_system(SimpleType::E6, 6);
  CHECK(e6.coxeter == 12);
  CHECK(e6.kappa == vec({Rational(1, 4), Rational(1, 6), Rational(1, 12), Rational(0), Rational(0), Rational(0), Rational(0)},
                        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 3), Rational(0), Rational(-1, 3)}));

  // E7: h = 18, ρ = 3e1+2e2+e3 + (1/sqrt2)(17 e5 + 9 e6 + e7)
  auto e7 = build_root_system(SimpleType::E7, 7);
  CHECK(e7.coxeter == 18);
  CHECK(e7.rho == vec({Rational(3), Rational(2), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)},
                      {Rational(0), Rational(0), Rational(0), Rational(0), Rational(17, 2), Rational(9, 2), Rational(1, 2)}));
}

TEST_CASE("levels equal h times kappa pairing for every positive root") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 5}, {SimpleType::B, 4}, {SimpleType::C, 5}, {SimpleType::D, 6}, {SimpleType::E6, 6}, {SimpleType::E7, 7}}) {
    auto d = build_root_system(t, r);
    for (const auto& al : d.positive_roots) {
      long long f = d.level(al);
      CHECK(f >= 1);
      CHECK(d.kappa.dot(al) == q(f, d.coxeter));
    }
  }
}

TEST_CASE("level closed forms") {
  auto a5 = build_root_system(SimpleType::A, 5);
  // α = e1 - e3 has level 2
  ExactVector al = ExactVector::basis(6, 0) - ExactVector::basis(6, 2);
  CHECK(a5.level(al) == 2);
  auto c4 = build_root_system(SimpleType::C, 4);
  for (int j = 1; j <= 4; ++j) {
    ExactVector two_ej = ExactVector::basis(4, j - 1).scaled(q(2));
    CHECK(c4.level(two_ej) == 2 * 4 - 2 * j + 1);
  }
  for (int i = 0; i < a5.rank; ++i) CHECK(a5.level(a5.simple_roots[i]) == 1);
}

TEST_CASE("highest root marks match the printed expansions") {
  CHECK(build_root_system(SimpleType::A, 4).marks == std::vector<long long>{1, 1, 1, 1});
  CHECK(build_root_system(SimpleType::B, 4).marks == std::vector<long long>{1, 2, 2, 2});
  CHECK(build_root_system(SimpleType::C, 4).marks == std::vector<long long>{2, 2, 2, 1});
  CHECK(build_root_system(SimpleType::D, 5).marks == std::vector<long long>{1, 2, 2, 1, 1});
  CHECK(build_root_system(SimpleType::E6, 6).marks == std::vector<long long>{1, 2, 3, 2, 1, 2});
  CHECK(build_root_system(SimpleType::E7, 7).marks == std::vector<long long>{2, 3, 4, 3, 2, 2, 1});
}

TEST_CASE("E6 printed fundamental weights agree with the solved ones") {
  auto e6 = build_root_system(SimpleType::E6, 6);
  // ϖ1 = (sqrt2/3)(2 e5 - e6 - e7)
  CHECK(e6.fund_weights[0] == vec({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0), Rational(0), Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));
  // ϖ6 = 1/2(e1+e2+e3+e4) + (1/sqrt2)(e5-e7)
  CHECK(e6.fund_weights[5] == vec({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(0), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 2), Rational(0), Rational(-1, 2)}));
  // highest root is ϖ6
  CHECK(-e6.alpha0 == e6.fund_weights[5]);
}

TEST_CASE("E7 printed fundamental weights agree with the solved ones") {
  auto e7 = build_root_system(SimpleType::E7, 7);
  CHECK(e7.fund_weights[0] == vec({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)}));
  CHECK(e7.fund_weights[6] == vec({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK(-e7.alpha0 == e7.fund_weights[0]);
}

TEST_CASE("lattice membership") {
  auto d5 = build_root_system(SimpleType::D, 5);
  auto ls = lattices(d5);
  const Lattice* Q = nullptr;
  const Lattice* P = nullptr;
  const Lattice* P2 = nullptr;
  for (auto& L : ls) {
    if (L.name == "Q") Q = &L;
    if (L.name == "P") P = &L;
    if (L.name == "P2") P2 = &L;
  }
  REQUIRE(Q);
  REQUIRE(P);
  REQUIRE(P2);
  ExactVector e1 = ExactVector::basis(5, 0), e2 = ExactVector::basis(5, 1);
  CHECK(Q->contains(e1 + e2));
  CHECK(!Q->contains(e1));
  CHECK(P2->contains(e1));
  CHECK(Q->contains(ExactVector(5)));
  CHECK(P->contains(d5.fund_weights[4]));
  CHECK(!Q->contains(d5.fund_weights[4]));
  CHECK(!P2->contains(d5.fund_weights[4]));
}

TEST_CASE("A lattice tower P_l") {
  auto a3 = build_root_system(SimpleType::A, 3);  // N = 4
  auto ls = lattices(a3);
  const Lattice* Pl2 = nullptr;
  const Lattice* Q = nullptr;
  const Lattice* P = nullptr;
  for (auto& L : ls) {
    if (L.name == "Pl2") Pl2 = &L;
    if (L.name == "Q") Q = &L;
    if (L.name == "P") P = &L;
  }
  REQUIRE(Pl2);
  // Q ⊂ P_2 ⊂ P with index 2 on each side (P/P_2 ≅ μ2)
  for (auto& b : Q->basis) CHECK(Pl2->contains(b));
  for (auto& b : Pl2->basis) CHECK(P->contains(b));
  CHECK(!Pl2->contains(a3.fund_weights[2]));              // ϖ3 generates P/P_2
  CHECK(Pl2->contains(a3.fund_weights[2].scaled(q(2))));  // but 2ϖ3 ∈ P_2
  CHECK(Pl2->contains(a3.fund_weights[1]));               // ϖ_{N-p} = ϖ2
}

TEST_CASE("E6 weight lattice P = Q + Z ϖ1") {
  auto e6 = build_root_system(SimpleType::E6, 6);
  auto ls = lattices(e6);
  const Lattice* Q = nullptr;
  const Lattice* P = nullptr;
  for (auto& L : ls) {
    if (L.name == "Q") Q = &L;
    if (L.name == "P") P = &L;
  }
  CHECK(P->contains(e6.fund_weights[0]));
  CHECK(!Q->contains(e6.fund_weights[0]));
  // index three: 3ϖ1 ∈ Q
  CHECK(Q->contains(e6.fund_weights[0].scaled(q(3))));
  for (auto& w : e6.fund_weights) CHECK(P->contains(w));
}

TEST_CASE("center structures") {
  CHECK(center_structure(build_root_system(SimpleType::A, 4)).to_string() == "mu5");
  CHECK(center_structure(build_root_system(SimpleType::B, 3)).to_string() == "mu2");
  CHECK(center_structure(build_root_system(SimpleType::C, 4)).to_string() == "mu2");
  CHECK(center_structure(build_root_system(SimpleType::D, 5)).to_string() == "mu4");
  CHECK(center_structure(build_root_system(SimpleType::D, 4)).to_string() == "mu2xmu2");
  CHECK(center_structure(build_root_system(SimpleType::E6, 6)).to_string() == "mu3");
  CHECK(center_structure(build_root_system(SimpleType::E7, 7)).to_string() == "mu2");
  // generator order: k·ϖ ∈ Q∨ exactly when the order divides k
  auto d5 = build_root_system(SimpleType::D, 5);
  auto cs = center_structure(d5);
  Lattice Qv = lattice_from_generators("Qv", d5.fund_coweights, d5.simple_coroots);
  REQUIRE(cs.generators.size() == 1);
  CHECK(!Qv.contains(cs.generators[0]));
  CHECK(!Qv.contains(cs.generators[0].scaled(q(2))));
  CHECK(Qv.contains(cs.generators[0].scaled(q(4))));
}

TEST_CASE("alcove vertices") {
  auto b3 = build_root_system(SimpleType::B, 3);
  auto vs = b3.alcove_vertices();
  REQUIRE(vs.size() == 4);
  CHECK(vs[0].is_zero());
  CHECK(vs[1] == b3.fund_coweights[0]);                  // mark 1
  CHECK(vs[2] == b3.fund_coweights[1].scaled(q(1, 2)));  // mark 2
  CHECK(vs[3] == b3.fund_coweights[2].scaled(q(1, 2)));

  auto e7 = build_root_system(SimpleType::E7, 7);
  auto ve = e7.alcove_vertices();
  CHECK(ve[1] == e7.fund_coweights[0].scaled(q(1, 2)));
  CHECK(ve[3] == e7.fund_coweights[2].scaled(q(1, 4)));
  CHECK(ve[7] == e7.fund_coweights[6]);
}

TEST_CASE("weyl action and dominant representative") {
  auto b3 = build_root_system(SimpleType::B, 3);
  ExactVector v(3);
  v.c[0] = q(-1);
  auto dom = b3.dominant_representative(v);
  ExactVector want(3);
  want.c[0] = q(1);
  CHECK(dom == want);
  // dominant vector is a fixed point
  CHECK(b3.dominant_representative(want) == want);
  // the root set is stable under every simple reflection
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 3}, {SimpleType::B, 3}, {SimpleType::C, 4}, {SimpleType::D, 4}, {SimpleType::E6, 6}, {SimpleType::E7, 7}}) {
    auto d = build_root_system(t, r);
    for (int i = 0; i < d.rank; ++i)
      for (const auto& al : d.roots) CHECK(d.is_root(d.reflect(al, d.simple_roots[i])));
  }
}

TEST_CASE("abstract root closure counts") {
  CHECK(root_count_from_cartan(cartan_matrix_g2()) == 12);
  CHECK(root_count_from_cartan(cartan_matrix_f4()) == 48);
  CHECK(root_count_from_cartan(standard_cartan_matrix(SimpleType::B, 3)) == 18);
  CHECK(root_count_from_cartan(standard_cartan_matrix(SimpleType::E7, 7)) == 126);
}

TEST_CASE("root labels round trip") {
  auto e7 = build_root_system(SimpleType::E7, 7);
  for (const auto& r : e7.roots) {
    auto back = root_from_label(e7, root_label(e7, r));
    REQUIRE(back);
    CHECK(*back == r);
  }
  auto c3 = build_root_system(SimpleType::C, 3);
  CHECK(root_label(c3, c3.simple_roots[0]) == "e1-e2");
  CHECK(root_label(c3, c3.alpha0) == "-2e1");
}

TEST_CASE("lattice quotient indices match the center order") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 3}, {SimpleType::B, 3}, {SimpleType::C, 4}, {SimpleType::D, 5}, {SimpleType::D, 4}, {SimpleType::E6, 6}, {SimpleType::E7, 7}}) {
    auto d = build_root_system(t, r);
    // coordinates of the coroot basis over the coweight basis = Cartan matrix
    // transpose; its invariant factors give |P∨/Q∨|
    auto cm = d.cartan_matrix();
    std::vector<std::vector<BigInt>> m(d.rank, std::vector<BigInt>(d.rank));
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) m[i][j] = BigInt(cm[i][j]);
    auto f = snf_invariant_factors(std::move(m));
    BigInt order(1);
    for (auto& x : f) order = order * x;
    long long center = 1;
    for (auto v : center_structure(d).cyclic_factors) center *= v;
    CHECK(order == BigInt(center));
  }
}

TEST_CASE("D4 exposes the three index-two sublattices") {
  auto d4 = build_root_system(SimpleType::D, 4);
  auto ls = lattices(d4);
  std::set<std::string> names;
  for (auto& L : ls) names.insert(L.name);
  CHECK(names.count("PV"));
  CHECK(names.count("PR"));
  CHECK(names.count("PL"));
  const Lattice *Q = nullptr, *P = nullptr;
  for (auto& L : ls) {
    if (L.name == "Q") Q = &L;
    if (L.name == "P") P = &L;
  }
  for (auto& L : ls) {
    if (L.name != "PV" && L.name != "PR" && L.name != "PL") continue;
    for (auto& b : Q->basis) CHECK(L.contains(b));
    for (auto& b : L.basis) CHECK(P->contains(b));
    // index two on each side: doubled generators drop in
    for (auto& b : P->basis) CHECK(L.contains(b.scaled(q(2))));
  }
}

TEST_CASE("E7 center generator") {
  auto e7 = build_root_system(SimpleType::E7, 7);
  auto cs = center_structure(e7);
  REQUIRE(cs.generators.size() == 1);
  CHECK(cs.generators[0] == e7.fund_coweights[6]);
  Lattice Qv = lattice_from_generators("Qv", e7.fund_coweights, e7.simple_coroots);
  CHECK(!Qv.contains(cs.generators[0]));
  CHECK(Qv.contains(cs.generators[0].scaled(q(2))));
}

TEST_CASE("D4 invariant cartan basis for the wn class") {
  auto d4 = build_root_system(SimpleType::D, 4);
  auto te = invariant_cartan_basis(d4, lambda_from_xi(d4, "wn"));
  REQUIRE(te.size() == 2);
  CHECK(te[0] == ExactVector::basis(4, 0) - ExactVector::basis(4, 3));
  CHECK(te[1] == ExactVector::basis(4, 1) - ExactVector::basis(4, 2));
}
