#include "ahecke/koszul.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "ahecke/error.hpp"

namespace ahecke {

namespace {

constexpr double kRankTol = 1e-8;
constexpr std::size_t kHomCap = 1000000;

std::vector<std::vector<int>> subsets(int k, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n > k) return out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < k; ++i) {
      cur[std::size_t(pos)] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::map<std::vector<int>, int> subset_index(const std::vector<std::vector<int>>& s) {
  std::map<std::vector<int>, int> m;
  for (std::size_t i = 0; i < s.size(); ++i) m[s[i]] = int(i);
  return m;
}

/// Λ^n A in the lexicographic basis of n-subsets.
CMatrix wedge(const CMatrix& a, const std::vector<std::vector<int>>& s) {
  const int c = int(s.size());
  CMatrix out(c, c);
  for (int I = 0; I < c; ++I)
    for (int J = 0; J < c; ++J) {
      const auto& r = s[std::size_t(I)];
      const auto& q = s[std::size_t(J)];
      if (r.empty()) {
        out(I, J) = 1;
        continue;
      }
      CMatrix sub(int(r.size()), int(q.size()));
      for (std::size_t x = 0; x < r.size(); ++x)
        for (std::size_t y = 0; y < q.size(); ++y) sub(int(x), int(y)) = a(r[x], q[y]);
      out(I, J) = sub.determinant();
    }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

struct RankInfo {
  int rank = 0;
  double min_kept = 0.0;
  CMatrix basis;  // orthonormal basis of the column space
};

RankInfo column_space(const CMatrix& m) {
  RankInfo r;
  if (m.size() == 0) {
    r.basis = CMatrix(m.rows(), 0);
    return r;
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > kRankTol) {
      ++r.rank;
      r.min_kept = r.min_kept == 0.0 ? sv(i) : std::min(r.min_kept, sv(i));
    }
  r.basis = svd.matrixU().leftCols(r.rank);
  return r;
}

/// Invariant maps Λ^n E ⊗ V -> V' as columns of vec(phi), phi column-major.
RankInfo invariant_homs(const KoszulProblem& p, const std::vector<std::vector<int>>& s) {
  const FiniteGroup& g = p.group.group();
  const int dv = int(p.v[0].rows()), dvp = int(p.vprime[0].rows());
  const std::size_t hom = s.size() * std::size_t(dv) * std::size_t(dvp);
  if (hom > kHomCap) fail_cap("CapExceeded", "Hom space has " + std::to_string(hom) + " entries");
  CMatrix proj = CMatrix::Zero(Eigen::Index(hom), Eigen::Index(hom));
  for (int x = 0; x < g.order(); ++x) {
    int xi = g.inverse(x);
    CMatrix w_inv = kron(wedge(p.e_action[std::size_t(xi)], s), p.v[std::size_t(xi)]);
    proj += kron(w_inv.transpose(), p.vprime[std::size_t(x)]);
  }
  proj /= double(g.order());
  return column_space(proj);
}

int sign_of_shuffle(const std::vector<int>& j, const std::vector<int>& k) {
  int inv = 0;
  for (int a : j)
    for (int b : k)
      if (a > b) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

KoszulProblem KoszulProblem::from_generators(const std::vector<CMatrix>& group, const std::vector<CMatrix>& e,
                                             const std::vector<CMatrix>& v, const std::vector<CMatrix>& vprime,
                                             int n_max, int dim_group, int dim_e, int dim_v, int dim_vprime) {
  const std::size_t ng = group.size();
  if (e.size() != ng || v.size() != ng || vprime.size() != ng)
    fail_input("RankMismatch", "every action needs one matrix per group generator");
  auto check_dims = [](const std::vector<CMatrix>& ms, int d, const char* what) {
    for (const auto& m : ms)
      if (m.rows() != d || m.cols() != d) fail_input("RankMismatch", std::string(what) + " matrix has the wrong size");
  };
  check_dims(e, dim_e, "E_action");
  check_dims(v, dim_v, "V");
  check_dims(vprime, dim_vprime, "Vprime");
  if (dim_v < 1 || dim_vprime < 1) fail_input("RankMismatch", "V and V' must be nonzero");
  if (n_max < 0 || n_max > dim_e) fail_input("InvalidDegree", "n_max must lie in [0, dim E]");

  KoszulProblem p;
  p.group = FiniteMatrixGroup::enumerate(group, dim_group);
  p.n_max = n_max;
  auto images = [&](const std::vector<CMatrix>& gens, int d) {
    std::vector<CMatrix> out;
    for (const auto& w : p.group.words()) {
      CMatrix m = CMatrix::Identity(d, d);
      for (int s : w) m = m * gens[std::size_t(s)];
      out.push_back(m);
    }
    return out;
  };
  p.e_action = images(e, dim_e);
  p.v = images(v, dim_v);
  p.vprime = images(vprime, dim_vprime);
  const FiniteGroup& g = p.group.group();
  for (const auto* rep : {&p.e_action, &p.v, &p.vprime})
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) {
        const CMatrix& lhs = (*rep)[std::size_t(a)];
        CMatrix prod = lhs * (*rep)[std::size_t(b)];
        if (prod.size() && (prod - (*rep)[std::size_t(g.multiply(a, b))]).cwiseAbs().maxCoeff() > 1e-8)
          fail_input("NotHomomorphism", "an action does not factor through the group");
      }
  return p;
}

KoszulResult koszul_ext(const KoszulProblem& p, bool assert_vanishing) {
  const int k = p.k();
  const int dv = int(p.v[0].rows()), dvp = int(p.vprime[0].rows());
  if (!p.vprime_module.empty() && int(p.vprime_module.size()) != k)
    fail_input("RankMismatch", "module action needs one matrix per basis vector of E");
  KoszulResult out;
  std::vector<RankInfo> inv;
  for (int n = 0; n <= std::min(p.n_max + 1, k); ++n) {
    inv.push_back(invariant_homs(p, subsets(k, n)));
    if (n <= p.n_max) out.hom_dims.push_back(inv.back().rank);
  }

  // rank of d^n : Hom_G(Λ^n E ⊗ V, V') -> Hom_G(Λ^{n+1} E ⊗ V, V')
  std::vector<int> rank_d(static_cast<std::size_t>(p.n_max + 1), 0);
  for (int n = 0; n <= p.n_max && n < k; ++n) {
    auto src = subsets(k, n), dst = subsets(k, n + 1);
    auto src_idx = subset_index(src);
    const RankInfo& basis = inv[std::size_t(n)];
    CMatrix images(Eigen::Index(dst.size()) * dv * dvp, basis.rank);
    for (int b = 0; b < basis.rank; ++b) {
      Eigen::Map<const CMatrix> phi(basis.basis.col(b).data(), dvp, Eigen::Index(src.size()) * dv);
      CMatrix dphi = CMatrix::Zero(dvp, Eigen::Index(dst.size()) * dv);
      if (!p.vprime_module.empty())
        for (std::size_t I = 0; I < dst.size(); ++I)
          for (int j = 0; j <= n; ++j) {
            std::vector<int> rest = dst[I];
            int e = rest[std::size_t(j)];
            rest.erase(rest.begin() + j);
            int s = src_idx.at(rest);
            double sign = j % 2 ? -1.0 : 1.0;
            dphi.block(0, Eigen::Index(I) * dv, dvp, dv) +=
                sign * p.vprime_module[std::size_t(e)] * phi.block(0, Eigen::Index(s) * dv, dvp, dv);
          }
      out.max_differential = std::max(out.max_differential, dphi.size() ? dphi.cwiseAbs().maxCoeff() : 0.0);
      images.col(b) = Eigen::Map<const Eigen::VectorXcd>(dphi.data(), dphi.size());
    }
    RankInfo r = column_space(images);
    rank_d[std::size_t(n)] = r.rank;
    if (r.rank) out.min_singular_kept = out.min_singular_kept == 0.0 ? r.min_kept : std::min(out.min_singular_kept, r.min_kept);
  }
  if (assert_vanishing && out.max_differential > kRankTol)
    fail_property("NonvanishingDifferential",
                  "Koszul differential has norm " + std::to_string(out.max_differential) + " at the point 0");
  for (const auto& r : inv)
    if (r.rank) out.min_singular_kept = out.min_singular_kept == 0.0 ? r.min_kept : std::min(out.min_singular_kept, r.min_kept);
  for (int n = 0; n <= p.n_max; ++n) {
    int d = out.hom_dims[std::size_t(n)] - rank_d[std::size_t(n)] - (n > 0 ? rank_d[std::size_t(n - 1)] : 0);
    out.dims.push_back(d);
  }
  return out;
}

std::vector<YonedaElement> ext_basis(const KoszulProblem& p, int n) {
  if (n < 0 || n > p.n_max) fail_cap("DegreeOverflow", "degree outside [0, n_max]");
  auto s = subsets(p.k(), n);
  RankInfo r = invariant_homs(p, s);
  const int dv = int(p.v[0].rows()), dvp = int(p.vprime[0].rows());
  std::vector<YonedaElement> out;
  for (int b = 0; b < r.rank; ++b) {
    Eigen::Map<const CMatrix> phi(r.basis.col(b).data(), dvp, Eigen::Index(s.size()) * dv);
    out.push_back({n, CMatrix(phi)});
  }
  return out;
}

YonedaElement yoneda_product(const KoszulProblem& p, const YonedaElement& a, const YonedaElement& b) {
  if (p.v.size() != p.vprime.size()) fail_input("RankMismatch", "Yoneda product needs V = V'");
  for (std::size_t i = 0; i < p.v.size(); ++i)
    if (p.v[i].rows() != p.vprime[i].rows() || !p.v[i].isApprox(p.vprime[i], 1e-12))
      fail_input("RankMismatch", "Yoneda product needs V = V'");
  const int n = a.degree + b.degree;
  if (n > p.n_max) fail_cap("DegreeOverflow", "product degree " + std::to_string(n) + " exceeds n_max");
  const int k = p.k(), dv = int(p.v[0].rows());
  auto sa = subset_index(subsets(k, a.degree)), sb = subset_index(subsets(k, b.degree));
  auto dst = subsets(k, n);
  if (a.map.rows() != dv || a.map.cols() != Eigen::Index(sa.size()) * dv || b.map.rows() != dv ||
      b.map.cols() != Eigen::Index(sb.size()) * dv)
    fail_input("RankMismatch", "Yoneda element has the wrong shape");
  YonedaElement c{n, CMatrix::Zero(dv, Eigen::Index(dst.size()) * dv)};
  for (std::size_t I = 0; I < dst.size(); ++I)
    for (const auto& J : subsets(n, a.degree)) {
      std::vector<int> j, kk;
      std::vector<char> used(static_cast<std::size_t>(n), 0);
      for (int x : J) {
        j.push_back(dst[I][std::size_t(x)]);
        used[std::size_t(x)] = 1;
      }
      for (int x = 0; x < n; ++x)
        if (!used[std::size_t(x)]) kk.push_back(dst[I][std::size_t(x)]);
      c.map.block(0, Eigen::Index(I) * dv, dv, dv) += double(sign_of_shuffle(j, kk)) *
                                                      a.map.block(0, Eigen::Index(sa.at(j)) * dv, dv, dv) *
                                                      b.map.block(0, Eigen::Index(sb.at(kk)) * dv, dv, dv);
    }
  return c;
}

// ---------------------------------------------------------------- crossed products

namespace {

Eigen::VectorXcd bmul(const GAlgebra& b, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(b.dim);
  for (int i = 0; i < b.dim; ++i) {
    if (x(i) == Complex(0)) continue;
    for (int j = 0; j < b.dim; ++j)
      if (y(j) != Complex(0)) out += x(i) * y(j) * b.mult[std::size_t(i)][std::size_t(j)];
  }
  return out;
}

void validate_algebra(const GAlgebra& b, const FiniteGroup& g) {
  const int m = b.dim;
  if (int(b.mult.size()) != m || b.unit.size() != m) fail_input("InvalidAlgebra", "structure constants have the wrong size");
  if (int(b.action.size()) != g.order()) fail_input("InvalidAlgebra", "one action matrix per group element is needed");
  auto e = [&](int i) { return Eigen::VectorXcd::Unit(m, i); };
  for (int i = 0; i < m; ++i) {
    if ((bmul(b, b.unit, e(i)) - e(i)).norm() > 1e-9 || (bmul(b, e(i), b.unit) - e(i)).norm() > 1e-9)
      fail_input("InvalidAlgebra", "unit is not a two-sided identity");
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if ((bmul(b, bmul(b, e(i), e(j)), e(k)) - bmul(b, e(i), bmul(b, e(j), e(k)))).norm() > 1e-9)
          fail_input("InvalidAlgebra", "multiplication is not associative");
  }
  for (int x = 0; x < g.order(); ++x) {
    const CMatrix& a = b.action[std::size_t(x)];
    for (int y = 0; y < g.order(); ++y)
      if ((a * b.action[std::size_t(y)] - b.action[std::size_t(g.multiply(x, y))]).cwiseAbs().maxCoeff() > 1e-9)
        fail_input("InvalidAlgebra", "action is not a group homomorphism");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if ((a * bmul(b, e(i), e(j)) - bmul(b, a * e(i), a * e(j))).norm() > 1e-9)
          fail_input("InvalidAlgebra", "group does not act by algebra automorphisms");
  }
}

/// B-valued |G| x |G| matrix; entry (k, h) is the B-coefficient of e_k in X(e_h).
using BMatrix = std::vector<std::vector<Eigen::VectorXcd>>;

BMatrix bzero(const GAlgebra& b, int n) {
  return BMatrix(static_cast<std::size_t>(n), std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(n), Eigen::VectorXcd::Zero(b.dim)));
}

BMatrix bproduct(const GAlgebra& b, const BMatrix& x, const BMatrix& y) {
  const int n = int(x.size());
  BMatrix out = bzero(b, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (x[std::size_t(k)][std::size_t(l)].isZero()) continue;
      for (int h = 0; h < n; ++h)
        if (!y[std::size_t(l)][std::size_t(h)].isZero())
          out[std::size_t(k)][std::size_t(h)] += bmul(b, x[std::size_t(k)][std::size_t(l)], y[std::size_t(l)][std::size_t(h)]);
    }
  return out;
}

double bdistance(const BMatrix& x, const BMatrix& y) {
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) d = std::max(d, (x[i][j] - y[i][j]).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace

CrossedProductReport crossed_product_iso_test(const GAlgebra& b, const FiniteGroup& g, double tolerance) {
  validate_algebra(b, g);
  const int m = b.dim, n = g.order();
  if (std::size_t(m) * std::size_t(n) * std::size_t(n) > kHomCap)
    fail_cap("CapExceeded", "dim B * |G|^2 exceeds 10^6");
  CrossedProductReport rep;
  rep.name = b.name;
  rep.dim_b = m;
  rep.order = n;

  // Crossed-product element: coefficient vector over b_i ⊗ g, index g * m + i.
  auto L = [&](const Eigen::VectorXcd& x) {
    BMatrix out = bzero(b, n);
    for (int gg = 0; gg < n; ++gg) {
      Eigen::VectorXcd f = x.segment(gg * m, m);
      if (f.isZero()) continue;
      for (int h = 0; h < n; ++h) {
        int k = g.multiply(gg, h);
        out[std::size_t(k)][std::size_t(h)] += b.action[std::size_t(g.inverse(k))] * f;
      }
    }
    return out;
  };
  auto Linv = [&](const BMatrix& x) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m * n);
    for (int gg = 0; gg < n; ++gg) out.segment(gg * m, m) = x[0][std::size_t(g.inverse(gg))];
    return out;
  };
  auto cross_mul = [&](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m * n);
    for (int a = 0; a < n; ++a) {
      Eigen::VectorXcd f = x.segment(a * m, m);
      if (f.isZero()) continue;
      for (int c = 0; c < n; ++c) {
        Eigen::VectorXcd h = y.segment(c * m, m);
        if (h.isZero()) continue;
        out.segment(g.multiply(a, c) * m, m) += bmul(b, f, b.action[std::size_t(a)] * h);
      }
    }
    return out;
  };

  std::vector<BMatrix> images;
  CMatrix lmat(Eigen::Index(m) * n * n, Eigen::Index(m) * n);
  for (int x = 0; x < m * n; ++x) {
    Eigen::VectorXcd ex = Eigen::VectorXcd::Unit(m * n, x);
    images.push_back(L(ex));
    const BMatrix& lx = images.back();
    for (int k = 0; k < n; ++k)
      for (int h = 0; h < n; ++h) lmat.block((Eigen::Index(k) * n + h) * m, x, m, 1) = lx[std::size_t(k)][std::size_t(h)];
    rep.inverse_residual = std::max(rep.inverse_residual, (Linv(lx) - ex).cwiseAbs().maxCoeff());
    for (int s = 0; s < n; ++s) {
      double worst = 0;
      for (int k = 0; k < n; ++k)
        for (int h = 0; h < n; ++h) {
          Eigen::VectorXcd moved = b.action[std::size_t(s)] * lx[std::size_t(g.multiply(k, s))][std::size_t(g.multiply(h, s))];
          worst = std::max(worst, (moved - lx[std::size_t(k)][std::size_t(h)]).cwiseAbs().maxCoeff());
        }
      rep.invariance_residual = std::max(rep.invariance_residual, worst);
    }
  }
  for (int x = 0; x < m * n; ++x)
    for (int y = 0; y < m * n; ++y) {
      Eigen::VectorXcd xy = cross_mul(Eigen::VectorXcd::Unit(m * n, x), Eigen::VectorXcd::Unit(m * n, y));
      rep.hom_residual = std::max(rep.hom_residual, bdistance(L(xy), bproduct(b, images[std::size_t(x)], images[std::size_t(y)])));
    }
  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(m * n);
  one.segment(0, m) = b.unit;
  BMatrix id = bzero(b, n);
  for (int k = 0; k < n; ++k) id[std::size_t(k)][std::size_t(k)] = b.unit;
  rep.unit_residual = bdistance(L(one), id);

  rep.rank = column_space(lmat).rank;
  // dim of invariants: |G|^{-1} sum_s tr(alpha_s) |tr rho(s)|^2, rho the right regular representation.
  Complex inv = 0;
  for (int s = 0; s < n; ++s) {
    int fixed = 0;
    for (int h = 0; h < n; ++h)
      if (g.multiply(h, g.inverse(s)) == h) ++fixed;
    inv += b.action[std::size_t(s)].trace() * double(fixed * fixed);
  }
  rep.invariant_dim = int(round_checked(inv / double(n), "NonIntegralDimension").value);
  rep.ok = rep.hom_residual <= tolerance && rep.invariance_residual <= tolerance && rep.inverse_residual <= tolerance &&
           rep.unit_residual <= tolerance && rep.rank == m * n && rep.invariant_dim == m * n;
  if (!rep.ok) fail_property("IsoFailure", "crossed-product map is not an isomorphism for " + b.name);
  return rep;
}

std::vector<GAlgebraCase> crossed_product_library() {
  const Complex om = std::polar(1.0, 2 * M_PI / 3);
  auto basis_mult = [](int m, auto f) {
    std::vector<std::vector<Eigen::VectorXcd>> mult(static_cast<std::size_t>(m), std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(m)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) mult[std::size_t(i)][std::size_t(j)] = f(i, j);
    return mult;
  };
  auto scalar_field = [&](const FiniteGroup& g, const std::string& name) {
    GAlgebra b{name, 1, basis_mult(1, [](int, int) { return Eigen::VectorXcd::Ones(1); }), Eigen::VectorXcd::Ones(1),
               std::vector<CMatrix>(std::size_t(g.order()), CMatrix::Identity(1, 1))};
    return GAlgebraCase{b, g};
  };
  auto truncated = [&](int deg, const std::string& name) {
    // C[x]/(x^deg) with Z/deg acting by x -> omega x
    const Complex w = std::polar(1.0, 2 * M_PI / deg);
    GAlgebra b;
    b.name = name;
    b.dim = deg;
    b.mult = basis_mult(deg, [deg](int i, int j) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(deg);
      if (i + j < deg) v(i + j) = 1;
      return v;
    });
    b.unit = Eigen::VectorXcd::Unit(deg, 0);
    FiniteGroup g = FiniteGroup::cyclic(deg);
    for (int s = 0; s < deg; ++s) {
      CMatrix a = CMatrix::Zero(deg, deg);
      for (int i = 0; i < deg; ++i) a(i, i) = std::pow(w, double(s * i));
      b.action.push_back(a);
    }
    return GAlgebraCase{b, g};
  };

  // S3 as permutation matrices.
  CMatrix swap = CMatrix::Zero(3, 3), cyc = CMatrix::Zero(3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = 1;
  cyc(1, 0) = cyc(2, 1) = cyc(0, 2) = 1;
  FiniteMatrixGroup s3 = FiniteMatrixGroup::enumerate({swap, cyc}, 3);

  std::vector<GAlgebraCase> lib;
  lib.push_back(scalar_field(FiniteGroup::cyclic(2), "C with Z/2"));
  lib.push_back(scalar_field(s3.group(), "C with S3"));
  lib.push_back(truncated(2, "C[x]/(x^2) with Z/2"));
  lib.push_back(truncated(3, "C[x]/(x^3) with Z/3"));

  GAlgebra points{"C^3 with S3 permuting points", 3,
                  basis_mult(3, [](int i, int j) { return i == j ? Eigen::VectorXcd(Eigen::VectorXcd::Unit(3, i)) : Eigen::VectorXcd(Eigen::VectorXcd::Zero(3)); }),
                  Eigen::VectorXcd::Ones(3), s3.elements()};
  lib.push_back({points, s3.group()});

  // M_2(C) with Z/2 acting by conjugation with diag(1, -1); basis E11, E12, E21, E22.
  GAlgebra mat;
  mat.name = "M2(C) with Z/2 by conjugation";
  mat.dim = 4;
  mat.mult = basis_mult(4, [](int i, int j) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
    int a = i / 2, bb = i % 2, c = j / 2, d = j % 2;
    if (bb == c) v(a * 2 + d) = 1;
    return v;
  });
  mat.unit = Eigen::VectorXcd::Zero(4);
  mat.unit(0) = mat.unit(3) = 1;
  CMatrix conj = CMatrix::Identity(4, 4);
  conj(1, 1) = conj(2, 2) = -1;
  mat.action = {CMatrix::Identity(4, 4), conj};
  lib.push_back({mat, FiniteGroup::cyclic(2)});
  (void)om;
  return lib;
}

// ---------------------------------------------------------------- cross validation

namespace {

CharacterVector trace_character(const std::vector<CMatrix>& rep) { return character_of(rep); }

std::string profile_string(const std::vector<std::int64_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

}  // namespace

CrossValidation cross_validate(const KoszulProblem& p) {
  const FiniteGroup& g = p.group.group();
  std::vector<Complex> e_trace;
  for (const auto& m : p.e_action) e_trace.push_back(m.trace());
  ExtProfile f = ext_dims(g, e_trace, p.k(), trace_character(p.vprime), trace_character(p.v));
  f.dims.resize(std::size_t(p.n_max + 1));
  f.residuals.resize(std::size_t(p.n_max + 1));
  return cross_validate(f, p);
}

CrossValidation cross_validate(const ExtProfile& formula, const KoszulProblem& p) {
  CrossValidation cv;
  cv.formula = formula;
  cv.koszul = koszul_ext(p);
  std::vector<std::int64_t> f = formula.dims;
  f.resize(cv.koszul.dims.size(), 0);
  cv.match = f == cv.koszul.dims && formula.dims.size() >= cv.koszul.dims.size();
  if (!cv.match)
    fail_property("Mismatch", "character formula " + profile_string(formula.dims) + " vs Koszul complex " +
                                  profile_string(cv.koszul.dims));
  return cv;
}

KoszulProblem package_problem(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg, const CharacterVector& chi,
                              const CharacterVector& chip) {
  if (rg.weyl.size() != 1) fail_input("UnsupportedPackage", "automatic Koszul problems need W(R_xi) trivial");
  FiniteGroup r = rg.rgroup_table(w0, kg);
  for (const auto* c : {&chi, &chip}) {
    if (!c->linear() || int(c->values.size()) != r.order())
      fail_input("UnsupportedPackage", "automatic Koszul problems need linear characters of the R-group");
    for (int a = 0; a < r.order(); ++a)
      for (int b = 0; b < r.order(); ++b)
        if (std::abs(c->values[std::size_t(a)] * c->values[std::size_t(b)] - c->values[std::size_t(r.multiply(a, b))]) > 1e-9)
          fail_input("UnsupportedPackage", "automatic Koszul problems need one-dimensional characters");
  }
  const int n = r.order(), d = rg.tangent_dim();
  std::vector<CMatrix> regular, e, v, vp;
  auto tangents = rg.tangent_matrices(rg.rgroup);
  for (int a = 0; a < n; ++a) {
    CMatrix perm = CMatrix::Zero(n, n);
    for (int h = 0; h < n; ++h) perm(r.multiply(a, h), h) = 1;
    regular.push_back(perm);
    e.push_back(tangents[std::size_t(a)]);
    v.push_back(CMatrix::Constant(1, 1, chip.values[std::size_t(a)]));
    vp.push_back(CMatrix::Constant(1, 1, chi.values[std::size_t(a)]));
  }
  return KoszulProblem::from_generators(regular, e, v, vp, d, n, d, 1, 1);
}

// ---------------------------------------------------------------- random problems

namespace {

struct GroupFamily {
  std::string name;
  int order;
  int dim;                                    // of the faithful generators
  std::vector<CMatrix> gens;
  std::vector<std::vector<CMatrix>> irreps;   // generator images
};

CMatrix diag(std::initializer_list<Complex> v) {
  CMatrix m = CMatrix::Zero(int(v.size()), int(v.size()));
  int i = 0;
  for (auto x : v) m(i, i) = x, ++i;
  return m;
}

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix scalar(Complex a) { return CMatrix::Constant(1, 1, a); }

std::vector<GroupFamily> group_families() {
  std::vector<GroupFamily> out;
  for (int n = 2; n <= 6; ++n) {
    const Complex w = std::polar(1.0, 2 * M_PI / n);
    GroupFamily f{"Z/" + std::to_string(n), n, 1, {scalar(w)}, {}};
    for (int j = 0; j < n; ++j) f.irreps.push_back({scalar(std::pow(w, double(j)))});
    out.push_back(f);
  }
  {
    GroupFamily f{"Z/2 x Z/2", 4, 2, {diag({-1, 1}), diag({1, -1})}, {}};
    for (int a : {1, -1})
      for (int b : {1, -1}) f.irreps.push_back({scalar(double(a)), scalar(double(b))});
    out.push_back(f);
  }
  {
    const Complex w = std::polar(1.0, 2 * M_PI / 3);
    CMatrix s = mat2(0, 1, 1, 0), c = diag({w, w * w});
    GroupFamily f{"S3", 6, 2, {s, c}, {{scalar(1), scalar(1)}, {scalar(-1), scalar(1)}, {s, c}}};
    out.push_back(f);
  }
  {
    CMatrix r = mat2(0, -1, 1, 0), s = diag({1, -1});
    GroupFamily f{"D4", 8, 2, {r, s}, {}};
    for (int a : {1, -1})
      for (int b : {1, -1}) f.irreps.push_back({scalar(double(a)), scalar(double(b))});
    f.irreps.push_back({r, s});
    out.push_back(f);
  }
  {
    const Complex i(0, 1);
    CMatrix x = diag({i, -i}), y = mat2(0, 1, -1, 0);
    GroupFamily f{"Q8", 8, 2, {x, y}, {}};
    for (int a : {1, -1})
      for (int b : {1, -1}) f.irreps.push_back({scalar(double(a)), scalar(double(b))});
    f.irreps.push_back({x, y});
    out.push_back(f);
  }
  {
    const Complex w = std::polar(1.0, 2 * M_PI / 3);
    CMatrix x = diag({-1, -1, 1}), c = CMatrix::Zero(3, 3);
    c(1, 0) = c(2, 1) = c(0, 2) = 1;
    GroupFamily f{"A4", 12, 3, {x, c}, {}};
    for (int j = 0; j < 3; ++j) f.irreps.push_back({scalar(1), scalar(std::pow(w, double(j)))});
    f.irreps.push_back({x, c});
    out.push_back(f);
  }
  {
    auto rot = [](double a) { return mat2(std::cos(a), -std::sin(a), std::sin(a), std::cos(a)); };
    CMatrix s = diag({1, -1});
    GroupFamily f{"D6", 12, 2, {rot(M_PI / 3), s}, {}};
    for (int a : {1, -1})
      for (int b : {1, -1}) f.irreps.push_back({scalar(double(a)), scalar(double(b))});
    f.irreps.push_back({rot(M_PI / 3), s});
    f.irreps.push_back({rot(2 * M_PI / 3), s});
    out.push_back(f);
  }
  return out;
}

std::vector<CMatrix> random_sum(std::mt19937_64& rng, const GroupFamily& f, int max_dim, int min_dim) {
  std::uniform_int_distribution<int> pick(0, int(f.irreps.size()) - 1);
  std::uniform_int_distribution<int> target_dist(min_dim, max_dim);
  const int target = target_dist(rng);
  std::vector<std::vector<CMatrix>> parts;
  int dim = 0;
  for (int tries = 0; tries < 50 && dim < target; ++tries) {
    const auto& irr = f.irreps[std::size_t(pick(rng))];
    int d = int(irr[0].rows());
    if (dim + d > max_dim) continue;
    parts.push_back(irr);
    dim += d;
  }
  std::vector<CMatrix> out;
  for (std::size_t g = 0; g < f.gens.size(); ++g) {
    CMatrix m = CMatrix::Zero(dim, dim);
    int off = 0;
    for (const auto& p : parts) {
      int d = int(p[g].rows());
      m.block(off, off, d, d) = p[g];
      off += d;
    }
    out.push_back(m);
  }
  if (dim > 0) {
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    CMatrix s = CMatrix::Identity(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) s(i, j) += Complex(u(rng), u(rng));
    CMatrix si = s.inverse();
    for (auto& m : out) m = s * m * si;
  }
  return out;
}

}  // namespace

KoszulProblem random_koszul_problem(std::mt19937_64& rng, const RandomKoszulLimits& limits) {
  std::vector<GroupFamily> fams;
  for (auto& f : group_families())
    if (f.order <= limits.max_order) fams.push_back(std::move(f));
  std::uniform_int_distribution<int> pick(0, int(fams.size()) - 1);
  const GroupFamily& f = fams[std::size_t(pick(rng))];
  auto e = random_sum(rng, f, limits.max_e, 0);
  auto v = random_sum(rng, f, limits.max_v, 1);
  auto vp = random_sum(rng, f, limits.max_v, 1);
  const int k = e.empty() ? 0 : int(e[0].rows());
  return KoszulProblem::from_generators(f.gens, e, v, vp, k, f.dim, k, int(v[0].rows()), int(vp[0].rows()));
}

}  // namespace ahecke
