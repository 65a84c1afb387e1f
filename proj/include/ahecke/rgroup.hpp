#pragma once

// Mirrors, the root system R_xi, W(R_xi) and the R-group of an induction datum.

#include <vector>

#include "ahecke/finite_reps.hpp"
#include "ahecke/weyl.hpp"

namespace ahecke {

struct MinimalParabolic {
  std::vector<int> Q;               // root indices of the basis: P's simple roots, then alpha_Q
  int alpha_Q = -1;                 // root index
  std::vector<int> roots;           // R_Q as root indices
  std::vector<Rational> alpha_QP;   // alpha_Q on a^P, coordinates in the basis of Y^P
};

/// Minimal parabolic subsystems properly containing R_P, ordered by alpha_Q.
std::vector<MinimalParabolic> minimal_parabolics(const RootDatum& rd, const std::vector<int>& P);

/// A connected component of {t in T^P_un : t(alpha_Q) = exp(2 pi i c_angle)}
/// through `base`.
struct MirrorSpec {
  std::vector<int> Q;
  std::vector<Rational> alpha_QP;
  Rational c_angle;
  TorusPoint base;
};

/// Checks Q against minimal_parabolics, alpha_QP against the restriction of
/// alpha_Q (filled in when empty), and that the base lies on the mirror in T^P_un.
MirrorSpec normalize_mirror(const RootDatum& rd, const std::vector<int>& P, MirrorSpec m);

/// t(alpha_Q) = c exactly and the unitary part of t lies in the component of
/// the base point. For unitary t this is plain membership.
bool mirror_contains(const RootDatum& rd, const MirrorSpec& m, const TorusPoint& t);

/// Equal-parameter principal series: one mirror {t(a) = 1} through t for each
/// positive root a with t(a) = 1. Throws UnsupportedParameters otherwise.
std::vector<MirrorSpec> mirrors_principal(const RootDatum& rd, const ParameterFunction& q, const TorusPoint& t);

struct RGroupData {
  InductionDatum xi;
  Stabilizer stab;                         // W_xi, identity first
  std::vector<MirrorSpec> mirrors;         // M_xi
  std::vector<std::vector<Rational>> positive_roots;  // R_xi^+ on a^P (dual to the tangent basis)
  std::vector<int> reflections;            // arrow index of s_M, per positive root
  std::vector<int> weyl;                   // arrows in W(R_xi), identity first
  std::vector<int> rgroup;                 // arrows in R_xi, identity first
  std::vector<std::pair<int, int>> factorization;  // arrow a = rgroup[i] * weyl[j]

  int tangent_dim() const { return int(stab.tangent_basis.cols()); }
  const IntMatrix& tangent(int arrow) const { return stab.arrows[std::size_t(arrow)].tangent; }
  /// The R-group as an abstract group, element i = rgroup[i].
  FiniteGroup rgroup_table(const WeylGroup& w0, const KGroup& kg) const;
  /// Tangent matrices as complex matrices, in the order of `arrows`.
  std::vector<CMatrix> tangent_matrices(const std::vector<int>& arrows) const;
};

/// R-group of a unitary datum. Every mirror must contain t.
/// Throws MissingReflection or FactorizationFailure.
RGroupData rgroup(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi, const std::vector<MirrorSpec>& mirrors);

/// Positive (possibly non-unitary) datum: M_xi is the part of the catalog
/// whose complexification contains t.
RGroupData rgroup_nontempered(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi,
                              const std::vector<MirrorSpec>& catalog);

/// Elements of R_xi fixing t T^Q_un pointwise, as positions in rg.rgroup.
std::vector<int> rgroup_parabolic(const WeylGroup& w0, const RGroupData& rg, const std::vector<int>& Q);

}  // namespace ahecke
