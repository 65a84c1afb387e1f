#include <doctest.h>

#include <random>
#include <set>

#include "ahecke/error.hpp"
#include "ahecke/weyl.hpp"

using namespace ahecke;

namespace {

// Independent oracle: close the set of matrices under multiplication by all reflections s_a.
std::size_t closure_order(const RootDatum& rd) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<IntMatrix> todo{IntMatrix::Identity(rd.rank(), rd.rank())};
  seen.insert(flatten(todo[0]));
  while (!todo.empty()) {
    IntMatrix m = todo.back();
    todo.pop_back();
    for (std::size_t a = 0; a < rd.roots().size(); ++a) {
      IntMatrix p = rd.reflection(int(a)) * m;
      if (seen.insert(flatten(p)).second) todo.push_back(p);
    }
  }
  return seen.size();
}

std::vector<Rational> rv(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("W0 orders") {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A1", 2}, {"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}, {"A1xA1", 4}, {"F4", 1152}};
  for (const auto& [label, order] : cases) {
    RootDatum rd = RootDatum::from_type(label, LatticeChoice::Adjoint);
    WeylGroup w(rd);
    CHECK_MESSAGE(w.order() == order, label);
    if (order <= 48) CHECK(w.order() == closure_order(rd));
  }
  CHECK_THROWS_AS(WeylGroup(RootDatum::from_type("A3", LatticeChoice::Adjoint), 10), Error);
}

TEST_CASE("W0 structure") {
  WeylGroup w(RootDatum::from_type("B2", LatticeChoice::Adjoint));
  CHECK(w.length(0) == 0);
  for (std::size_t i = 0; i < w.order(); ++i) {
    CHECK(w.multiply(int(i), w.inverse(int(i))) == 0);
    CHECK(int(w[int(i)].word.size()) == w.length(int(i)));
    std::int64_t det = std::llround(w.matrix(int(i)).cast<double>().determinant());
    CHECK(std::llabs(det) == 1);
    for (std::size_t j = 0; j < w.order(); ++j)
      CHECK(w.length(w.multiply(int(i), int(j))) <= w.length(int(i)) + w.length(int(j)));
  }
  for (std::size_t i = 1; i < w.order(); ++i) CHECK(w.length(int(i - 1)) <= w.length(int(i)));
}

TEST_CASE("shortest coset representatives") {
  WeylGroup w(RootDatum::from_type("A2", LatticeChoice::Adjoint));
  auto reps = w.shortest_coset_reps({0});
  REQUIRE(reps.size() == 3);
  std::multiset<int> lens;
  for (int r : reps) lens.insert(w.length(r));
  CHECK(lens == std::multiset<int>{0, 1, 2});
  CHECK(w.shortest_coset_reps({0, 1}).size() == 1);
  CHECK(w.shortest_coset_reps({}).size() == 6);
  WeylGroup b(RootDatum::from_type("B3", LatticeChoice::Adjoint));
  for (std::vector<int> P : {std::vector<int>{0}, {1, 2}, {0, 2}})
    CHECK(b.shortest_coset_reps(P).size() * b.parabolic_subgroup(P).size() == b.order());
}

TEST_CASE("extended affine lengths") {
  RootDatum a1 = RootDatum::from_type("A1", LatticeChoice::Adjoint);
  WeylGroup w0(a1);
  AffineWeyl aw(w0);
  CHECK(aw.length({IntVector::Zero(1), w0.simple(0)}) == 1);
  IntVector alpha(1);
  alpha << 1;
  CHECK(aw.length(aw.translation(alpha)) == 2);
  CHECK(aw.length_by_counting(aw.translation(alpha)) == 2);
  for (const auto& s : aw.simple_reflections()) CHECK(aw.length(s) == 1);

  RootDatum gl = RootDatum::from_type("A1", LatticeChoice::GL);
  WeylGroup wg(gl);
  AffineWeyl ag(wg);
  IntVector ones(2);
  ones << 1, 1;
  CHECK(ag.length(ag.translation(ones)) == 0);
  CHECK(ag.norm(ag.translation(ones)) == 2);
  CHECK(ag.norm(ag.identity()) == 0);
}

TEST_CASE("closed form length agrees with counting on boxes") {
  for (const std::string label : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    for (auto lat : {LatticeChoice::Adjoint, LatticeChoice::SimplyConnected}) {
      RootDatum rd = RootDatum::from_type(label, lat);
      WeylGroup w0(rd);
      AffineWeyl aw(w0);
      const int n = rd.rank();
      std::vector<int> c(std::size_t(n), -3);
      while (true) {
        IntVector x(n);
        for (int i = 0; i < n; ++i) x(i) = c[std::size_t(i)];
        for (std::size_t w = 0; w < w0.order(); ++w) {
          ExtAffineElement e{x, int(w)};
          CHECK(aw.length(e) == aw.length_by_counting(e));
        }
        int pos = 0;
        while (pos < n && ++c[std::size_t(pos)] > 3) c[std::size_t(pos++)] = -3;
        if (pos == n) break;
      }
    }
  }
}

TEST_CASE("extended affine group law and decompositions") {
  RootDatum rd = RootDatum::from_type("A2", LatticeChoice::Adjoint);
  WeylGroup w0(rd);
  AffineWeyl aw(w0);
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> cx(-2, 2), cw(0, int(w0.order()) - 1);
  auto rand_elt = [&] {
    IntVector x(2);
    x << cx(gen), cx(gen);
    return ExtAffineElement{x, cw(gen)};
  };
  for (int t = 0; t < 200; ++t) {
    auto a = rand_elt(), b = rand_elt(), c = rand_elt();
    CHECK(aw.multiply(aw.multiply(a, b), c) == aw.multiply(a, aw.multiply(b, c)));
    CHECK(aw.multiply(a, aw.inverse(a)) == aw.identity());
    CHECK(aw.length(aw.multiply(a, b)) <= aw.length(a) + aw.length(b));
    auto d = aw.reduced_decomposition(a);
    CHECK(aw.length(d.omega) == 0);
    CHECK(int(d.word.size()) == aw.length(a));
    ExtAffineElement prod = d.omega;
    for (int s : d.word) prod = aw.multiply(prod, aw.simple_reflections()[std::size_t(s)]);
    CHECK(prod == a);
  }
}

TEST_CASE("L specifications") {
  RootDatum gl = RootDatum::from_type("A1", LatticeChoice::GL);
  WeylGroup w0(gl);
  AffineWeyl aw(w0);
  CHECK_NOTHROW(aw.validate_L({{{1, 1}}}));
  CHECK_THROWS_AS(aw.validate_L({{{1, 0}}}), Error);
  LSpec half{{{Rational(1, 2), Rational(1, 2)}}};
  CHECK_THROWS_AS(aw.validate_L(half), Error);
  IntVector ones(2);
  ones << 1, 1;
  CHECK(aw.L_value(ones, LSpec{{rv({1, 1})}}) == 2);
  // only the identity has norm 0
  int zero = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (std::size_t w = 0; w < w0.order(); ++w) {
        IntVector x(2);
        x << a, b;
        if (aw.norm({x, int(w)}) == 0) ++zero;
      }
  CHECK(zero == 1);
}

TEST_CASE("K_P") {
  RootDatum gl = RootDatum::from_type("A1", LatticeChoice::GL);
  KGroup k(gl, {0});
  CHECK(k.order() == 2);
  CHECK(k.divisors() == std::vector<std::int64_t>{2});
  TorusPoint g = k.generators().at(0);
  IntVector e1(2);
  e1 << 1, 0;
  CHECK(g.angle_at(e1) == Rational(1, 2));
  CHECK(k.multiply(1, 1) == 0);
  CHECK(KGroup(gl, {}).order() == 1);
  CHECK(KGroup(RootDatum::from_type("A1", LatticeChoice::Adjoint), {0}).order() == 1);
  CHECK(KGroup(RootDatum::from_type("A1", LatticeChoice::SimplyConnected), {0}).order() == 1);
  // X splits as root lattice plus center: trivial
  CHECK(KGroup(RootDatum::from_type("A1", LatticeChoice::CentralTorus), {0}).order() == 1);
  CHECK(KGroup(RootDatum::from_type("A2", LatticeChoice::GL), {0, 1}).order() == 3);
}

TEST_CASE("stabilizers") {
  RootDatum a1 = RootDatum::from_type("A1", LatticeChoice::Adjoint);
  WeylGroup w0(a1);
  KGroup k(a1, {});
  InductionDatum xi{{}, {}, TorusPoint::unitary({Rational(1, 2)})};
  Stabilizer st = stabilizer(w0, k, xi);
  REQUIRE(st.arrows.size() == 2);
  CHECK(st.arrows[1].tangent(0, 0) == -1);

  InductionDatum reg{{}, {}, TorusPoint::unitary({Rational(1, 3)})};
  CHECK(stabilizer(w0, k, reg).arrows.size() == 1);

  RootDatum gl = RootDatum::from_type("A1", LatticeChoice::GL);
  WeylGroup wg(gl);
  KGroup kg(gl, {});
  InductionDatum xg{{}, {}, TorusPoint::unitary({Rational(1, 4), Rational(3, 4)})};
  Stabilizer sg = stabilizer(wg, kg, xg);
  CHECK(sg.arrows.size() == 1);

  // GL2, P = {a}: K_P = Z/2 twists; t central unitary
  KGroup kp(gl, {0});
  InductionDatum xp{{0}, {"st", 1, TorusPoint::identity(2)}, TorusPoint::unitary({Rational(1, 4), Rational(1, 4)})};
  Stabilizer sp = stabilizer(wg, kp, xp);
  CHECK(sp.arrows.size() == 1);
  InductionDatum missing = xp;
  missing.delta.cc.reset();
  InductionDatum half{{0}, {"st", 1, std::nullopt}, TorusPoint::unitary({Rational(0), Rational(0)})};
  // closure and associativity of composition
  for (std::size_t a = 0; a < st.arrows.size(); ++a)
    for (std::size_t b = 0; b < st.arrows.size(); ++b) CHECK(st.compose(w0, k, int(a), int(b)) >= 0);
}

TEST_CASE("stabilizer groupoid is associative on B2") {
  RootDatum b2 = RootDatum::from_type("B2", LatticeChoice::SimplyConnected);
  WeylGroup w0(b2);
  KGroup k(b2, {});
  InductionDatum xi{{}, {}, TorusPoint::unitary({Rational(1, 2), Rational(0)})};
  Stabilizer st = stabilizer(w0, k, xi);
  CHECK(st.arrows.size() > 1);
  const int m = int(st.arrows.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int ab = st.compose(w0, k, a, b);
      REQUIRE(ab >= 0);
      for (int c = 0; c < m; ++c) CHECK(st.compose(w0, k, ab, c) == st.compose(w0, k, a, st.compose(w0, k, b, c)));
    }
}
