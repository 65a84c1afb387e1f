#include "ahecke/rgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ahecke/error.hpp"

namespace ahecke {

namespace {

std::vector<Rational> restrict_to(const IntMatrix& basis, const IntVector& x) {
  std::vector<Rational> out;
  for (int j = 0; j < basis.cols(); ++j) out.emplace_back(Rational(basis.col(j).dot(x)));
  return out;
}

/// w acting on a functional of a^P: a -> T^{-T} a.
std::vector<Rational> act_on_functional(const IntMatrix& t, const std::vector<Rational>& a) {
  if (a.empty()) return a;
  auto sol = QMatrix::from_int(t.transpose()).solve(a);
  if (!sol) fail_property("NotInvertible", "tangent action is singular");
  return *sol;
}

std::vector<Rational> negated(std::vector<Rational> a) {
  for (auto& v : a) v = -v;
  return a;
}

Rational dot(const std::vector<Rational>& a, const IntVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(x(Eigen::Index(i)));
  return s;
}

bool is_identity(const IntMatrix& m) { return m == IntMatrix::Identity(m.rows(), m.cols()); }

/// Saturated lattice X ∩ Q(P ∪ {alpha_Q}).
IntMatrix mirror_lattice(const RootDatum& rd, const MirrorSpec& m) {
  IntMatrix s(rd.rank(), Eigen::Index(m.Q.size()));
  for (std::size_t j = 0; j < m.Q.size(); ++j) s.col(Eigen::Index(j)) = rd.roots()[std::size_t(m.Q[j])].root;
  return saturate(s);
}

}  // namespace

std::vector<MinimalParabolic> minimal_parabolics(const RootDatum& rd, const std::vector<int>& P) {
  ParabolicData pd = parabolic_data(rd, P);
  const int n = rd.rank();
  const int p = int(pd.subset.size());
  std::set<int> in_p(pd.roots_in_P.begin(), pd.roots_in_P.end());
  std::set<int> p_simple;
  for (int s : pd.subset) p_simple.insert(rd.simple_root_index(s));

  auto in_span = [&](const IntMatrix& span, const IntVector& x) {
    IntMatrix m(n, span.cols() + 1);
    m << span, x;
    return QMatrix::from_int(m).rank() == QMatrix::from_int(span).rank();
  };

  std::set<std::vector<int>> done;
  std::vector<MinimalParabolic> out;
  for (int beta = 0; beta < rd.num_positive(); ++beta) {
    if (in_p.count(beta)) continue;
    IntMatrix span(n, p + 1);
    for (int j = 0; j < p; ++j) span.col(j) = rd.simple_roots().col(pd.subset[std::size_t(j)]);
    span.col(p) = rd.roots()[std::size_t(beta)].root;
    std::vector<int> members;
    for (int g = 0; g < int(rd.roots().size()); ++g)
      if (in_span(span, rd.roots()[std::size_t(g)].root)) members.push_back(g);
    if (!done.insert(members).second) continue;

    std::set<int> pos;
    for (int g : members)
      if (g < rd.num_positive()) pos.insert(g);
    MinimalParabolic mp;
    mp.roots = members;
    for (int g : pos) {
      bool decomposable = false;
      for (int d : pos) {
        if (d == g) continue;
        auto diff = rd.find_root(IntVector(rd.roots()[std::size_t(g)].root - rd.roots()[std::size_t(d)].root));
        if (diff && pos.count(*diff)) {
          decomposable = true;
          break;
        }
      }
      if (decomposable) continue;
      if (p_simple.count(g)) continue;
      if (mp.alpha_Q >= 0) fail_property("NotParabolic", "subsystem has two basis roots outside P");
      mp.alpha_Q = g;
    }
    if (mp.alpha_Q < 0) fail_property("NotParabolic", "no basis root outside P");
    for (int s : pd.subset) mp.Q.push_back(rd.simple_root_index(s));
    mp.Q.push_back(mp.alpha_Q);
    mp.alpha_QP = restrict_to(pd.y_upper_basis, rd.roots()[std::size_t(mp.alpha_Q)].root);

    // Every root of R_Q restricts to an integer multiple of alpha_Q^P.
    for (int g : members) {
      std::vector<Rational> r = restrict_to(pd.y_upper_basis, rd.roots()[std::size_t(g)].root);
      std::optional<Rational> ratio;
      bool ok = true;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (sgn(mp.alpha_QP[i]) == 0) {
          if (sgn(r[i]) != 0) ok = false;
          continue;
        }
        Rational q = r[i] / mp.alpha_QP[i];
        if (ratio && *ratio != q) ok = false;
        ratio = q;
      }
      if (!ok || (ratio && ratio->get_den() != 1))
        fail_property("MultiplicityViolation", "a root of R_Q does not restrict into Z alpha_Q^P");
    }
    out.push_back(std::move(mp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.alpha_Q < b.alpha_Q; });
  return out;
}

MirrorSpec normalize_mirror(const RootDatum& rd, const std::vector<int>& P, MirrorSpec m) {
  if (m.Q.empty()) fail_input("InvalidMirror", "Q is empty");
  const MinimalParabolic* match = nullptr;
  auto mps = minimal_parabolics(rd, P);
  std::vector<int> q_sorted = m.Q;
  std::sort(q_sorted.begin(), q_sorted.end());
  for (const auto& mp : mps) {
    std::vector<int> s = mp.Q;
    std::sort(s.begin(), s.end());
    if (s == q_sorted && mp.alpha_Q == m.Q.back()) match = &mp;
  }
  if (!match) fail_input("InvalidMirror", "Q is not {P, alpha_Q} for a minimal parabolic subsystem");
  m.Q = match->Q;
  if (m.alpha_QP.empty()) m.alpha_QP = match->alpha_QP;
  if (m.alpha_QP != match->alpha_QP) fail_input("InvalidMirror", "alpha_QP differs from the restriction of alpha_Q");
  m.c_angle = frac(m.c_angle);
  if (m.base.dim() != rd.rank()) fail_input("RankMismatch", "mirror base point has the wrong rank");
  if (!m.base.is_unitary()) fail_input("InvalidMirror", "mirror base point is not unitary");
  InductionDatum probe{P, {}, m.base};
  validate_induction_datum(rd, probe);
  if (m.base.angle_at(rd.roots()[std::size_t(m.Q.back())].root) != m.c_angle)
    fail_input("InvalidMirror", "base point does not satisfy t(alpha_Q) = c");
  return m;
}

bool mirror_contains(const RootDatum& rd, const MirrorSpec& m, const TorusPoint& t) {
  IntMatrix lat = mirror_lattice(rd, m);
  for (int j = 0; j < lat.cols(); ++j) {
    IntVector x = lat.col(j);
    if (sgn(t.log_abs_at(x)) != 0) return false;
    if (t.angle_at(x) != m.base.angle_at(x)) return false;
  }
  return true;
}

std::vector<MirrorSpec> mirrors_principal(const RootDatum& rd, const ParameterFunction& q, const TorusPoint& t) {
  if (t.dim() != rd.rank()) fail_input("RankMismatch", "t has the wrong rank");
  if (!q.is_equal_parameter())
    fail_input("UnsupportedParameters", "unequal parameters need an explicit mirror catalog");
  for (int i = 0; i < int(rd.roots().size()); ++i)
    if (rd.roots()[std::size_t(i)].coroot_even && q.q_half(i) != 1)
      fail_input("UnsupportedParameters", "non-reduced pole data needs an explicit mirror catalog");
  if (q.all_equal_to_one()) fail_input("UnsupportedParameters", "q = 1 has no c-function poles");
  TorusPoint base = t.polar().second;
  std::vector<MirrorSpec> out;
  for (int i = 0; i < rd.num_positive(); ++i) {
    const IntVector& a = rd.roots()[std::size_t(i)].root;
    if (sgn(t.log_abs_at(a)) != 0 || sgn(t.angle_at(a)) != 0) continue;
    MirrorSpec m;
    m.Q = {i};
    m.alpha_QP = restrict_to(IntMatrix::Identity(rd.rank(), rd.rank()), a);
    m.c_angle = 0;
    m.base = base;
    out.push_back(std::move(m));
  }
  return out;
}

FiniteGroup RGroupData::rgroup_table(const WeylGroup& w0, const KGroup& kg) const {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < rgroup.size(); ++i) pos[rgroup[i]] = int(i);
  const std::size_t n = rgroup.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = pos.find(stab.compose(w0, kg, rgroup[i], rgroup[j]));
      if (it == pos.end()) fail_property("NotClosed", "R-group is not closed under composition");
      t[i][j] = it->second;
    }
  return FiniteGroup(std::move(t));
}

std::vector<CMatrix> RGroupData::tangent_matrices(const std::vector<int>& arrows) const {
  std::vector<CMatrix> out;
  for (int a : arrows) out.push_back(tangent(a).cast<double>().cast<Complex>());
  return out;
}

namespace {

RGroupData build_rgroup(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi,
                        const std::vector<MirrorSpec>& mirrors) {
  const RootDatum& rd = w0.datum();
  RGroupData rg;
  rg.xi = xi;
  rg.stab = stabilizer(w0, kg, xi);
  const int na = int(rg.stab.arrows.size());

  std::set<std::vector<Rational>> seen_roots;
  std::map<std::pair<std::vector<int>, Rational>, bool> seen_mirrors;
  for (const auto& m : mirrors) {
    if (seen_mirrors.count({m.Q, m.c_angle})) continue;
    seen_mirrors[{m.Q, m.c_angle}] = true;
    rg.mirrors.push_back(m);
    if (seen_roots.insert(m.alpha_QP).second) rg.positive_roots.push_back(m.alpha_QP);
  }
  std::set<std::vector<Rational>> root_set;
  for (const auto& a : rg.positive_roots) {
    root_set.insert(a);
    root_set.insert(negated(a));
  }

  // s_M: the unique nontrivial arrow fixing ker(alpha) and negating alpha.
  for (const auto& a : rg.positive_roots) {
    int found = -1, count = 0;
    QMatrix row(1, int(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) row(0, int(i)) = a[i];
    QMatrix ker = row.kernel();
    for (int i = 0; i < na; ++i) {
      const IntMatrix& t = rg.tangent(i);
      if (is_identity(t)) continue;
      if (act_on_functional(t, a) != negated(a)) continue;
      if (!(QMatrix::from_int(t) * ker == ker)) continue;
      found = i;
      ++count;
    }
    if (count != 1)
      fail_property("MissingReflection", count == 0 ? "no element of W_xi acts as the reflection in a mirror"
                                                    : "several elements of W_xi act as the reflection in a mirror");
    rg.reflections.push_back(found);
  }
  for (int s : rg.reflections)
    for (const auto& a : root_set)
      if (!root_set.count(act_on_functional(rg.tangent(s), a)))
        fail_property("NotRootSystem", "R_xi is not stable under its reflections");

  rg.weyl = {0};
  std::set<int> in_weyl{0};
  for (std::size_t head = 0; head < rg.weyl.size(); ++head)
    for (int s : rg.reflections) {
      int g = rg.stab.compose(w0, kg, rg.weyl[head], s);
      if (g < 0) fail_property("NotClosed", "W_xi is not closed under composition");
      if (in_weyl.insert(g).second) rg.weyl.push_back(g);
    }

  std::set<std::vector<Rational>> pos_set(rg.positive_roots.begin(), rg.positive_roots.end());
  for (int i = 0; i < na; ++i) {
    bool keeps = true;
    for (const auto& a : rg.positive_roots)
      if (!pos_set.count(act_on_functional(rg.tangent(i), a))) keeps = false;
    if (keeps) rg.rgroup.push_back(i);
  }

  std::vector<int> hits(static_cast<std::size_t>(na), 0);
  rg.factorization.assign(std::size_t(na), {-1, -1});
  for (std::size_t i = 0; i < rg.rgroup.size(); ++i)
    for (std::size_t j = 0; j < rg.weyl.size(); ++j) {
      int g = rg.stab.compose(w0, kg, rg.rgroup[i], rg.weyl[j]);
      if (g < 0) fail_property("FactorizationFailure", "product leaves W_xi");
      ++hits[std::size_t(g)];
      rg.factorization[std::size_t(g)] = {int(i), int(j)};
    }
  for (int h : hits)
    if (h != 1) fail_property("FactorizationFailure", "W_xi is not the semidirect product of R_xi and W(R_xi)");
  (void)rd;
  return rg;
}

}  // namespace

RGroupData rgroup(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi, const std::vector<MirrorSpec>& mirrors) {
  const RootDatum& rd = w0.datum();
  if (!xi.t.is_unitary()) fail_input("NotUnitary", "rgroup needs a unitary datum; use the non-tempered variant");
  std::vector<MirrorSpec> ms;
  for (const auto& m : mirrors) {
    MirrorSpec n = normalize_mirror(rd, xi.P, m);
    if (!mirror_contains(rd, n, xi.t)) fail_input("MirrorNotIncident", "a supplied mirror does not contain t");
    ms.push_back(std::move(n));
  }
  return build_rgroup(w0, kg, xi, ms);
}

RGroupData rgroup_nontempered(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi,
                              const std::vector<MirrorSpec>& catalog) {
  const RootDatum& rd = w0.datum();
  if (classify(rd, xi) == InductionClass::General) fail_input("NotPositive", "datum is neither unitary nor positive");
  std::vector<MirrorSpec> ms;
  for (const auto& m : catalog) {
    MirrorSpec n = normalize_mirror(rd, xi.P, m);
    if (mirror_contains(rd, n, xi.t)) ms.push_back(std::move(n));
  }
  return build_rgroup(w0, kg, xi, ms);
}

std::vector<int> rgroup_parabolic(const WeylGroup& w0, const RGroupData& rg, const std::vector<int>& Q) {
  for (int s : rg.xi.P)
    if (std::find(Q.begin(), Q.end(), s) == Q.end()) fail_input("InvalidSubset", "Q must contain P");
  ParabolicData pq = parabolic_data(w0.datum(), Q);
  std::vector<int> out;
  for (std::size_t i = 0; i < rg.rgroup.size(); ++i) {
    int w = rg.stab.arrows[std::size_t(rg.rgroup[i])].w;
    if (is_identity(tangent_action(w0, w, pq.y_upper_basis))) out.push_back(int(i));
  }
  return out;
}

}  // namespace ahecke
