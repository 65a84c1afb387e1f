#include <doctest.h>

#include <random>

#include "ahecke/error.hpp"
#include "ahecke/koszul.hpp"

using namespace ahecke;

namespace {

CMatrix s1(Complex a) { return CMatrix::Constant(1, 1, a); }

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

KoszulProblem z2_sign(int dim_e, Complex v, Complex vp) {
  std::vector<CMatrix> e{-CMatrix::Identity(dim_e, dim_e)};
  return KoszulProblem::from_generators({s1(-1)}, e, {s1(v)}, {s1(vp)}, dim_e, 1, dim_e, 1, 1);
}

}  // namespace

TEST_CASE("small Koszul complexes") {
  // trivial group, E = C: Ext = Λ^* E* = (1, 1)
  auto line = KoszulProblem::from_generators({}, {}, {}, {}, 1, 1, 1, 1, 1);
  CHECK(koszul_ext(line).dims == std::vector<std::int64_t>{1, 1});

  // Z/2 acting by -1 on E = C
  CHECK(koszul_ext(z2_sign(1, 1, 1)).dims == std::vector<std::int64_t>{1, 0});
  CHECK(koszul_ext(z2_sign(1, 1, -1)).dims == std::vector<std::int64_t>{0, 1});
  CHECK(koszul_ext(z2_sign(2, 1, 1)).dims == std::vector<std::int64_t>{1, 0, 1});

  // n_max = k = 0 is just Hom_G(V, V')
  CMatrix sw(2, 2);
  sw << 0, 1, 1, 0;
  auto hom = KoszulProblem::from_generators({s1(-1)}, {CMatrix(0, 0)}, {sw}, {sw}, 0, 1, 0, 2, 2);
  CHECK(koszul_ext(hom).dims == std::vector<std::int64_t>{2});
}

TEST_CASE("Koszul input validation") {
  CHECK(code_of([] { KoszulProblem::from_generators({s1(-1)}, {s1(1)}, {s1(1)}, {s1(1)}, 2, 1, 1, 1, 1); }) ==
        "InvalidDegree");
  CHECK(code_of([] { KoszulProblem::from_generators({s1(-1)}, {s1(Complex(0, 1))}, {s1(1)}, {s1(1)}, 1, 1, 1, 1, 1); }) ==
        "NotHomomorphism");
  auto p = z2_sign(1, 1, 1);
  p.vprime_module = {s1(1)};
  CHECK(code_of([&] { koszul_ext(p); }) == "NonvanishingDifferential");
  // away from 0 the complex computes Ext over C[x] at a nonzero point: nothing survives
  auto q = KoszulProblem::from_generators({s1(1)}, {s1(1)}, {s1(1)}, {s1(1)}, 1, 1, 1, 1, 1);
  q.vprime_module = {s1(3)};
  KoszulResult r = koszul_ext(q, false);
  CHECK(r.dims == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("Yoneda product on the exterior algebra") {
  // trivial group, E = C^2, V = V' = C: Ext is Λ E*, dims (1, 2, 1)
  auto p = KoszulProblem::from_generators({}, {}, {}, {}, 2, 1, 2, 1, 1);
  REQUIRE(p.k() == 2);
  REQUIRE(koszul_ext(p).dims == std::vector<std::int64_t>{1, 2, 1});
  auto b0 = ext_basis(p, 0);
  auto b1 = ext_basis(p, 1);
  REQUIRE(b0.size() == 1);
  REQUIRE(b1.size() == 2);

  // unit acts as a scalar
  auto u = yoneda_product(p, b0[0], b1[0]);
  CHECK(u.degree == 1);
  Complex scale = b0[0].map(0, 0) * 1.0;
  CHECK((u.map - scale * b1[0].map).norm() < 1e-10);

  // graded commutativity: a b = -b a, a a = 0
  for (const auto& a : b1) {
    CHECK(yoneda_product(p, a, a).map.norm() < 1e-10);
    for (const auto& b : b1) CHECK((yoneda_product(p, a, b).map + yoneda_product(p, b, a).map).norm() < 1e-10);
  }
  CHECK(yoneda_product(p, b1[0], b1[1]).map.norm() > 1e-3);  // top class is reached
  CHECK(code_of([&] { yoneda_product(p, b1[0], yoneda_product(p, b1[0], b1[1])); }) == "DegreeOverflow");

  // associativity with End(V) noncommutative: S3 on its 2-dim irrep, E the same irrep
  const Complex w = std::polar(1.0, 2 * M_PI / 3);
  CMatrix s(2, 2), c(2, 2);
  s << 0, 1, 1, 0;
  c << w, 0, 0, w * w;
  auto q = KoszulProblem::from_generators({s, c}, {s, c}, {s, c}, {s, c}, 2, 2, 2, 2, 2);
  auto dims = koszul_ext(q).dims;
  CHECK(dims == std::vector<std::int64_t>{1, 1, 1});
  std::vector<std::vector<YonedaElement>> basis;
  for (int n = 0; n <= 2; ++n) basis.push_back(ext_basis(q, n));
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; n + m <= 2; ++m)
      for (int l = 0; n + m + l <= 2; ++l)
        for (const auto& x : basis[std::size_t(n)])
          for (const auto& y : basis[std::size_t(m)])
            for (const auto& z : basis[std::size_t(l)]) {
              auto lhs = yoneda_product(q, yoneda_product(q, x, y), z);
              auto rhs = yoneda_product(q, x, yoneda_product(q, y, z));
              CHECK((lhs.map - rhs.map).norm() < 1e-10);
            }
}

TEST_CASE("crossed-product library") {
  auto lib = crossed_product_library();
  CHECK(lib.size() >= 6);
  for (const auto& c : lib) {
    CAPTURE(c.algebra.name);
    CrossedProductReport rep = crossed_product_iso_test(c.algebra, c.group);
    CHECK(rep.ok);
    CHECK(rep.rank == rep.dim_b * rep.order);
    CHECK(rep.invariant_dim == rep.dim_b * rep.order);
    CHECK(rep.hom_residual < 1e-10);
    CHECK(rep.invariance_residual < 1e-10);
  }
  // a non-automorphism action is rejected
  GAlgebra bad = lib[2].algebra;
  bad.action[1] = CMatrix::Identity(2, 2) * 2.0;
  CHECK(code_of([&] { crossed_product_iso_test(bad, lib[2].group); }) == "InvalidAlgebra");
}

TEST_CASE("character formula agrees with the Koszul complex") {
  auto p = z2_sign(2, 1, -1);
  CrossValidation cv = cross_validate(p);
  CHECK(cv.match);
  CHECK(cv.koszul.dims == std::vector<std::int64_t>{0, 2, 0});

  auto q = KoszulProblem::from_generators({s1(-1)}, {-CMatrix::Identity(3, 3)}, {s1(1)}, {s1(-1)}, 3, 1, 3, 1, 1);
  CHECK(cross_validate(q).koszul.dims == std::vector<std::int64_t>{0, 3, 0, 1});

  // mismatching profile is reported
  ExtProfile wrong;
  wrong.dims = {1, 0, 0, 0};
  CHECK(code_of([&] { cross_validate(wrong, q); }) == "Mismatch");

  // A1 at theta = 1/2 with trivial and sign characters
  RootDatum rd = RootDatum::from_type("A1", LatticeChoice::Adjoint);
  WeylGroup w0(rd);
  KGroup kg(rd, {});
  InductionDatum xi{{}, {}, TorusPoint::unitary({Rational(1, 2)})};
  RGroupData rg = rgroup(w0, kg, xi, mirrors_principal(rd, ParameterFunction::equal(rd, 4), xi.t));
  REQUIRE(rg.rgroup.size() == 2);
  CharacterVector triv{{1, 1}, std::nullopt}, sgn{{1, -1}, std::nullopt};
  GradedCharacter e = e_character(rg);
  for (const auto* a : {&triv, &sgn})
    for (const auto* b : {&triv, &sgn}) {
      ExtProfile f = ext_dims(w0, kg, rg, e, *a, *b);
      CrossValidation v = cross_validate(f, package_problem(w0, kg, rg, *a, *b));
      CHECK(v.match);
    }
}

TEST_CASE("random problems") {
  std::mt19937_64 rng(20261014);
  int nonzero_e = 0;
  for (int i = 0; i < 40; ++i) {
    KoszulProblem p = random_koszul_problem(rng);
    CAPTURE(i);
    CrossValidation cv = cross_validate(p);
    CHECK(cv.match);
    if (p.k() > 0) ++nonzero_e;
    CHECK(cv.koszul.max_differential == 0.0);
  }
  CHECK(nonzero_e > 20);
}
