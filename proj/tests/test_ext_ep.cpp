#include <doctest.h>

#include <random>

#include "ahecke/error.hpp"
#include "ahecke/ext_ep.hpp"

using namespace ahecke;

namespace {

struct Package {
  RootDatum rd;
  WeylGroup w0;
  KGroup kg;
  RGroupData rg;
  FiniteGroup r;
  GradedCharacter e;

  Package(const std::string& label, std::vector<Rational> theta)
      : rd(RootDatum::from_type(label, LatticeChoice::Adjoint)), w0(rd), kg(rd, {}) {
    InductionDatum xi{{}, {}, TorusPoint::unitary(std::move(theta))};
    rg = rgroup(w0, kg, xi, mirrors_principal(rd, ParameterFunction::equal(rd, 4), xi.t));
    r = rg.rgroup_table(w0, kg);
    e = e_character(rg);
  }

  /// Linear characters of an abelian R-group given by sign patterns of the tangent matrices.
  std::vector<CharacterVector> sign_characters() const {
    std::vector<CharacterVector> out;
    const int d = rg.tangent_dim();
    for (int mask = 0; mask < (1 << d); ++mask) {
      CharacterVector c;
      for (int a : rg.rgroup) {
        Complex v = 1;
        for (int i = 0; i < d; ++i)
          if (mask >> i & 1) v *= double(rg.tangent(a)(i, i));
        c.values.push_back(v);
      }
      out.push_back(c);
    }
    return out;
  }
};

}  // namespace

TEST_CASE("A1 split principal series") {
  Package p("A1", {Rational(1, 2)});
  REQUIRE(p.r.order() == 2);
  CHECK(p.e.degrees() == std::vector<int>{1});
  auto chars = p.sign_characters();  // trivial, sign
  auto same = ext_dims(p.w0, p.kg, p.rg, p.e, chars[0], chars[0]);
  auto cross = ext_dims(p.w0, p.kg, p.rg, p.e, chars[0], chars[1]);
  CHECK(same.dims == std::vector<std::int64_t>{1, 0});
  CHECK(cross.dims == std::vector<std::int64_t>{0, 1});
  CHECK(ep_arthur(p.w0, p.kg, p.rg, chars[0], chars[0]).value == 1);
  CHECK(ep_arthur(p.w0, p.kg, p.rg, chars[0], chars[1]).value == -1);

  PairingReport rep = ep_gram(p.r, p.rg.tangent_matrices(p.rg.rgroup), chars);
  CHECK(rep.rank == 1);
  REQUIRE(rep.radical.size() == 1);
  CHECK(std::abs(std::abs(rep.radical[0](0)) - std::abs(rep.radical[0](1))) < 1e-9);
  CHECK(std::abs(rep.radical[0](0) - rep.radical[0](1)) < 1e-9);
}

TEST_CASE("regular points give binomial profiles") {
  for (const char* label : {"A2", "B2", "G2"}) {
    Package p(label, {Rational(1, 7), Rational(2, 11)});
    REQUIRE(p.rg.stab.arrows.size() == 1);
    CharacterVector triv = trivial_character(1);
    auto prof = ext_dims(p.w0, p.kg, p.rg, p.e, triv, triv);
    CHECK(prof.dims == std::vector<std::int64_t>{1, 2, 1});
    CHECK(prof.ep() == 0);
    CHECK(ep_arthur(p.w0, p.kg, p.rg, triv, triv).value == 0);
  }
}

TEST_CASE("Arthur formula matches the alternating sum") {
  std::vector<std::pair<const char*, std::vector<Rational>>> points = {
      {"A1", {Rational(1, 2)}},          {"A1", {0}},
      {"A1xA1", {Rational(1, 2), Rational(1, 2)}}, {"A1xA1", {Rational(1, 2), 0}},
      {"B2", {Rational(1, 2), 0}},       {"B2", {0, Rational(1, 2)}},
      {"B2", {Rational(1, 2), Rational(1, 2)}}, {"G2", {Rational(1, 2), 0}},
      {"A2", {Rational(1, 3), Rational(2, 3)}}, {"C2", {Rational(1, 2), 0}}};
  for (const auto& [label, theta] : points) {
    CAPTURE(label);
    Package p(label, theta);
    if (p.r.order() > 1 && p.rg.tangent_dim() == 2) {
      bool diagonal = true;
      for (int a : p.rg.rgroup) diagonal = diagonal && p.rg.tangent(a)(0, 1) == 0 && p.rg.tangent(a)(1, 0) == 0;
      if (!diagonal) continue;
    }
    std::vector<CharacterVector> chars = p.r.order() == 1 ? std::vector<CharacterVector>{trivial_character(1)} : p.sign_characters();
    for (const auto& a : chars) {
      if (!is_class_function(p.r, a)) continue;
      for (const auto& b : chars) {
        if (!is_class_function(p.r, b)) continue;
        auto prof = ext_dims(p.w0, p.kg, p.rg, p.e, a, b);
        auto back = ext_dims(p.w0, p.kg, p.rg, p.e, b, a);
        auto ep = ep_arthur(p.w0, p.kg, p.rg, a, b);
        CHECK(std::abs(prof.alternating_raw - ep.raw) < 1e-6);
        CHECK(prof.dims == back.dims);
      }
    }
  }
}

TEST_CASE("elliptic pairing") {
  auto z2 = FiniteMatrixGroup::enumerate({CMatrix::Constant(1, 1, -1.0)}, 1);
  CharacterVector triv = trivial_character(2), sign{{1.0, -1.0}, std::nullopt};
  CHECK(std::abs(elliptic_pairing(z2, sign, sign).value - 1.0) < 1e-12);
  CHECK(std::abs(elliptic_pairing(z2, triv, triv).value - 1.0) < 1e-12);
  CHECK(std::abs(elliptic_pairing(z2, triv, sign).value + 1.0) < 1e-12);
  CHECK(elliptic_pairing(z2, triv, triv).elliptic == std::vector<int>{1});

  auto zero_dim = FiniteMatrixGroup::from_elements({CMatrix(0, 0)});
  CHECK(std::abs(elliptic_pairing(zero_dim, trivial_character(1), trivial_character(1)).value - 1.0) < 1e-12);

  auto rep = ep_group_algebra(z2, {triv, sign});
  CHECK(rep.rank == 1);
}

TEST_CASE("induced characters lie in the radical") {
  // S3 on its reflection representation; Ind from <s> has fixed vectors.
  RootDatum a2 = RootDatum::from_type("A2", LatticeChoice::Adjoint);
  WeylGroup w(a2);
  std::vector<CMatrix> elts;
  for (std::size_t i = 0; i < w.order(); ++i) elts.push_back(w.matrix(int(i)).cast<double>().cast<Complex>());
  auto s3 = FiniteMatrixGroup::from_elements(elts);
  const FiniteGroup& g = s3.group();
  std::vector<int> sub = g.generated_subgroup({1});
  REQUIRE(sub.size() == 2);
  CharacterVector ind_triv = induce_character(g, sub, {1.0, 1.0});
  CharacterVector ind_sign = induce_character(g, sub, {1.0, -1.0});
  CharacterVector triv = trivial_character(6);
  CharacterVector sign;
  for (const auto& m : elts) sign.values.push_back(m.determinant());
  CharacterVector refl = character_of(elts);
  for (const auto& x : {triv, sign, refl, ind_triv}) {
    CHECK(std::abs(elliptic_pairing(s3, ind_triv, x).value) < 1e-9);
    CHECK(std::abs(elliptic_pairing(s3, ind_sign, x).value) < 1e-9);
  }
  auto base = ep_group_algebra(s3, {triv, sign, refl});
  auto more = ep_group_algebra(s3, {triv, sign, refl, ind_triv, ind_sign});
  CHECK(more.rank == base.rank);
  CHECK(base.rank == 1);  // one elliptic class, the 3-cycles
}

TEST_CASE("Gram reports") {
  CMatrix bad(2, 2);
  bad << 1, 2, 0, 1;
  CHECK_THROWS_AS(gram_report(bad), Error);
  auto loose = gram_report(bad, 1e-8, false);
  CHECK(loose.hermitian_residual > 1);
  CMatrix neg(1, 1);
  neg << -1;
  CHECK_THROWS_AS(gram_report(neg), Error);

  // Random nonnegative integer combinations of irreducible characters stay PSD.
  Package p("A1xA1", {Rational(1, 2), Rational(1, 2)});
  auto irr = p.sign_characters();
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> c(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CharacterVector> fam;
    for (int k = 0; k < 5; ++k) {
      CharacterVector v{std::vector<Complex>(irr[0].values.size(), Complex(0)), std::nullopt};
      for (const auto& x : irr) {
        int m = c(gen);
        for (std::size_t i = 0; i < v.values.size(); ++i) v.values[i] += double(m) * x.values[i];
      }
      fam.push_back(v);
    }
    auto rep = ep_gram(p.r, p.rg.tangent_matrices(p.rg.rgroup), fam);
    CHECK(rep.hermitian_residual <= 1e-8);
    CHECK(rep.min_eigenvalue >= -1e-8);
  }
}
