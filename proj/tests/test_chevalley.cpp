#include <random>

#include "doctest.h"
#include "liecm/chevalley.hpp"
#include "liecm/elliptic.hpp"

using namespace liecm;

TEST_CASE("generator counts: one per root plus the Cartan axes") {
  for (auto [t, n] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::A, 4}, {SimpleType::B, 2}, {SimpleType::B, 4}, {SimpleType::C, 3}, {SimpleType::D, 6}}) {
    auto d = build_root_system(t, n);
    auto cb = pi1_representation(d);
    CHECK(cb.root_gen.size() == d.roots.size());
    CHECK(cb.cartan_axis.size() == d.ambient);
    // B2 in the 5-dimensional representation: 8 + 2 = 10 generators
    if (t == SimpleType::B && n == 2) {
      CHECK(cb.dim == 5);
      CHECK(cb.root_gen.size() + cb.cartan_axis.size() == 10);
    }
  }
}

TEST_CASE("bilinear form blocks: symmetric for B/D, symplectic for C") {
  auto check_form = [](SimpleType t, int n, double sym_sign) {
    auto d = build_root_system(t, n);
    auto cb = pi1_representation(d);
    CMatrix diff = cb.form_q - cb.form_q.transpose().scaled(sym_sign);
    CHECK(diff.frob() < 1e-15);
  };
  check_form(SimpleType::B, 3, 1.0);
  check_form(SimpleType::D, 4, 1.0);
  check_form(SimpleType::C, 4, -1.0);
}

TEST_CASE("long and short root generator normalizations") {
  // C: G+_j = E_{j, 2n+1-j} alone; its pairing with G-_j is 1/2
  auto c3 = build_root_system(SimpleType::C, 3);
  auto cb = pi1_representation(c3);
  ExactVector two_e1 = ExactVector::basis(3, 0).scaled(QSqrt2(2));
  int i = c3.root_index(two_e1);
  REQUIRE(i >= 0);
  int nz = 0;
  for (auto& x : cb.root_gen[i].a)
    if (x != Complex(0, 0)) ++nz;
  CHECK(nz == 1);
  CHECK(std::abs(cb.opp_pairing(i) - 0.5) < 1e-15);
  // B short roots carry the sqrt2 factor: two entries of modulus sqrt2
  auto b3 = build_root_system(SimpleType::B, 3);
  auto cbB = pi1_representation(b3);
  int j = b3.root_index(ExactVector::basis(3, 1));
  REQUIRE(j >= 0);
  for (auto& x : cbB.root_gen[j].a)
    if (x != Complex(0, 0)) CHECK(std::abs(std::abs(x) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("cartan_of maps ambient vectors to commuting diagonals") {
  auto d5 = build_root_system(SimpleType::D, 5);
  auto cb = pi1_representation(d5);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> un(-1, 1);
  std::vector<Complex> u(5), w(5);
  for (auto& x : u) x = Complex(un(rng), un(rng));
  for (auto& x : w) x = Complex(un(rng), un(rng));
  CMatrix hu = cb.cartan_of(u), hw = cb.cartan_of(w);
  CHECK(hu.comm(hw).frob() < 1e-14);
  // killing form of Cartan images equals the ambient bilinear dot
  Complex dot(0, 0);
  for (int t = 0; t < 5; ++t) dot += u[t] * w[t];
  CHECK(std::abs(killing_form_matrix(cb, hu, hw) - dot) < 1e-12);
}

TEST_CASE("abstract chevalley pairing for the exceptional types") {
  auto e6 = build_root_system(SimpleType::E6, 6);
  auto cb = abstract_chevalley(e6);
  CHECK(!cb.materialized);
  // opposite generators pair to one, everything else to zero
  for (int i = 0; i < 10; ++i) {
    int a = (7 * i + 1) % (int)e6.roots.size();
    int opp = e6.root_index(-e6.roots[a]);
    CHECK(std::abs(cb.root_pairing(a, opp) - 1.0) < 1e-15);
    int other = (a + 5) % (int)e6.roots.size();
    if (other != opp) CHECK(std::abs(cb.root_pairing(a, other)) < 1e-15);
  }
  // dispatch helper picks the right representation
  CHECK(!chevalley(e6).materialized);
  CHECK(chevalley(build_root_system(SimpleType::C, 3)).materialized);
}

TEST_CASE("killing_form_matrix rejects shape mismatches") {
  auto b2 = build_root_system(SimpleType::B, 2);
  auto cb = pi1_representation(b2);
  CMatrix wrong(3);
  CHECK_THROWS_AS(killing_form_matrix(cb, wrong, wrong), std::invalid_argument);
}
