#include <random>

#include "doctest.h"
#include "liecm/moduli.hpp"

using namespace liecm;

namespace {

std::mt19937 rng(13131);

double unif(double a, double b) {
  std::uniform_real_distribution<double> d(a, b);
  return d(rng);
}

std::vector<Complex> random_in_span(const std::vector<ExactVector>& basis) {
  size_t dim = basis[0].dim();
  std::vector<Complex> u(dim, Complex(0, 0));
  for (auto& b : basis) {
    Complex c(unif(-2.2, 2.2), unif(-1.4, 1.4));
    for (size_t t = 0; t < dim; ++t) u[t] += c * b.c[t].to_double();
  }
  return u;
}

const ModuliSpec* find_spec(const std::vector<ModuliSpec>& menu, const std::string& name) {
  for (auto& sp : menu)
    if (sp.name == name) return &sp;
  return nullptr;
}

}  // namespace

TEST_CASE("moduli menu sizes follow the case tables") {
  auto menu_of = [](SimpleType t, int n, const std::string& k) {
    auto d = build_root_system(t, n);
    return moduli_menu(d, k == "triv" ? trivial_class(d) : lambda_from_xi(d, k));
  };
  CHECK(menu_of(SimpleType::B, 3, "w1").size() == 2);
  CHECK(menu_of(SimpleType::C, 5, "wn").size() == 2);   // n odd: two
  CHECK(menu_of(SimpleType::C, 6, "wn").size() == 3);   // n = 2l, l odd: three
  CHECK(menu_of(SimpleType::C, 8, "wn").size() == 4);   // l even: four
  CHECK(menu_of(SimpleType::D, 5, "wn").size() == 2);
  CHECK(menu_of(SimpleType::D, 6, "wn").size() == 3);   // l = 3 odd
  CHECK(menu_of(SimpleType::D, 8, "wn").size() == 4);   // l = 4 even
  CHECK(menu_of(SimpleType::D, 5, "w1").size() == 2);
  CHECK(menu_of(SimpleType::E6, 6, "w1").size() == 1);
  CHECK(menu_of(SimpleType::E7, 7, "w7").size() == 1);
  CHECK(menu_of(SimpleType::A, 5, "p3").size() == 2);
  CHECK(menu_of(SimpleType::B, 3, "triv").size() == 2);
}

TEST_CASE("lattice inclusions hold with the right indices") {
  // C6 wn: Q ⊂ P2 ⊂ P with index two at each step
  auto d = build_root_system(SimpleType::C, 6);
  auto menu = moduli_menu(d, lambda_from_xi(d, "wn"));
  auto* Q = find_spec(menu, "Qv");
  auto* P = find_spec(menu, "Pv");
  auto* P2 = find_spec(menu, "P2v");
  REQUIRE(Q);
  REQUIRE(P);
  REQUIRE(P2);
  for (auto& b : Q->gamma.basis) CHECK(P2->gamma.contains(b));
  for (auto& b : P2->gamma.basis) CHECK(P->gamma.contains(b));
  // spec stability under the invariant Weyl generators
  for (auto& sp : menu)
    for (auto& al : sp.weyl_roots)
      for (auto& b : sp.gamma.basis) {
        QSqrt2 n2 = al.dot(al);
        ExactVector refl = b - al.scaled((QSqrt2(2) * b.dot(al)) / n2);
        CHECK(sp.gamma.contains(refl));
      }
}

TEST_CASE("reduction: lattice points collapse to zero, idempotence") {
  for (auto [t, n, k] : std::vector<std::tuple<SimpleType, int, std::string>>{
           {SimpleType::B, 3, "w1"}, {SimpleType::C, 5, "wn"}, {SimpleType::D, 5, "wn"},
           {SimpleType::A, 5, "p3"}, {SimpleType::E6, 6, "w1"}, {SimpleType::B, 2, "triv"}}) {
    auto d = build_root_system(t, n);
    auto menu = moduli_menu(d, k == "triv" ? trivial_class(d) : lambda_from_xi(d, k));
    Complex tau(0.21, 1.37);
    for (auto& sp : menu) {
      // integer + tau integer combinations reduce to zero
      std::vector<Complex> pt(sp.gamma.basis[0].dim(), Complex(0, 0));
      std::mt19937 r2(7);
      for (auto& b : sp.gamma.basis) {
        double m = std::floor(unif(-3, 4)), nn = std::floor(unif(-3, 4));
        for (size_t i = 0; i < pt.size(); ++i) pt[i] += (m + nn * tau) * b.c[i].to_double();
      }
      auto red = reduce_mod_lattice(pt, sp.gamma, tau);
      double norm = 0;
      for (auto& x : red.u) norm += std::abs(x);
      CHECK(norm < 1e-8);
      // idempotence on random points
      for (int rep = 0; rep < 50; ++rep) {
        auto u = random_in_span(sp.gamma.basis);
        auto r1 = reduce_mod_lattice(u, sp.gamma, tau);
        auto r2b = reduce_mod_lattice(r1.u, sp.gamma, tau);
        for (size_t i = 0; i < u.size(); ++i) CHECK(std::abs(r1.u[i] - r2b.u[i]) < 1e-9);
      }
    }
  }
}

TEST_CASE("componentwise reduction example") {
  // B-type coweight lattice: u = (1.5, 0.25) -> (0.5, 0.25)
  auto d = build_root_system(SimpleType::B, 3);
  auto menu = moduli_menu(d, lambda_from_xi(d, "w1"));
  auto* P = find_spec(menu, "Pv");
  REQUIRE(P);
  std::vector<Complex> u(3, Complex(0, 0));
  u[1] = 1.5;
  u[2] = 0.25;
  auto red = reduce_mod_lattice(u, P->gamma, Complex(0.0, 1.0));
  CHECK(std::abs(red.u[1] - 0.5) < 1e-10);
  CHECK(std::abs(red.u[2] - 0.25) < 1e-10);
}

TEST_CASE("equivalence: lattice shifts, weyl images, generic pairs") {
  Complex tau(0.17, 1.21);
  for (auto [t, n, k] : std::vector<std::tuple<SimpleType, int, std::string>>{
           {SimpleType::B, 3, "w1"}, {SimpleType::C, 5, "wn"}, {SimpleType::E6, 6, "w1"},
           {SimpleType::A, 5, "p3"}}) {
    auto d = build_root_system(t, n);
    auto menu = moduli_menu(d, k == "triv" ? trivial_class(d) : lambda_from_xi(d, k));
    for (auto& sp : menu) {
      auto u = random_in_span(sp.gamma.basis);
      // u + tau*gamma ~ u with identity witness
      auto shifted = u;
      for (size_t i = 0; i < u.size(); ++i)
        shifted[i] += tau * sp.gamma.basis[0].c[i].to_double();
      auto r1 = equivalent_moduli(u, shifted, sp, tau);
      CHECK(r1.verdict == EquivResult::Verdict::Equivalent);
      CHECK(r1.weyl_word.empty());
      // a weyl image is equivalent with a nontrivial witness
      const auto& al = sp.weyl_roots.back();
      double n2 = al.dot(al).to_double();
      auto refl = u;
      Complex pr(0, 0);
      for (size_t i = 0; i < u.size(); ++i) pr += u[i] * al.c[i].to_double();
      for (size_t i = 0; i < u.size(); ++i) refl[i] -= 2.0 * pr * al.c[i].to_double() / n2;
      auto r2 = equivalent_moduli(u, refl, sp, tau);
      CHECK(r2.verdict == EquivResult::Verdict::Equivalent);
      // generic pairs are not equivalent (enumeration exhausts)
      auto u3 = random_in_span(sp.gamma.basis);
      auto r3 = equivalent_moduli(u, u3, sp, tau);
      CHECK(r3.verdict == EquivResult::Verdict::NotEquivalent);
      CHECK(r3.group_size > 0);
    }
  }
}

TEST_CASE("B sign flips are weyl-equivalent") {
  auto d = build_root_system(SimpleType::B, 3);
  auto menu = moduli_menu(d, lambda_from_xi(d, "w1"));  // invariant B2 on (u2, u3)
  auto& sp = menu[0];
  std::vector<Complex> u = {Complex(0, 0), Complex(0.31, 0.05), Complex(0.17, -0.02)};
  std::vector<Complex> flipped = {Complex(0, 0), -u[2], -u[1]};  // swap + both signs
  auto r = equivalent_moduli(u, flipped, sp, Complex(0.1, 1.1));
  CHECK(r.verdict == EquivResult::Verdict::Equivalent);
}

TEST_CASE("trivial D coroot lattice: even shifts absorbed, odd not") {
  auto d4 = build_root_system(SimpleType::D, 4);
  auto menu = moduli_menu(d4, trivial_class(d4));
  auto* Q = find_spec(menu, "Qv");
  REQUIRE(Q);
  Complex tau(0.11, 1.05);
  std::vector<Complex> u = {Complex(0.31, 0.02), Complex(0.17, -0.01), Complex(0.07, 0.03), Complex(0.41, 0.0)};
  auto shifted = u;
  shifted[0] += 1.0;  // e1 alone: not in Q
  auto r1 = equivalent_moduli(u, shifted, *Q, tau);
  CHECK(r1.verdict == EquivResult::Verdict::NotEquivalent);
  shifted[1] += 1.0;  // e1 + e2: in Q
  auto r2 = equivalent_moduli(u, shifted, *Q, tau);
  CHECK(r2.verdict == EquivResult::Verdict::Equivalent);
}
