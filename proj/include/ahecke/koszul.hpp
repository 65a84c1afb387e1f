#pragma once

// Brute-force oracles: Koszul complexes over O(E) ⋊ G at the fixed point 0,
// the Yoneda product on (End(V) ⊗ Λ*E*)^G and the crossed-product isomorphism.

#include <random>
#include <string>
#include <vector>

#include "ahecke/ext_ep.hpp"

namespace ahecke {

struct KoszulProblem {
  FiniteMatrixGroup group;          // faithful matrices; element 0 is the identity
  std::vector<CMatrix> e_action;    // per element, on E
  std::vector<CMatrix> v, vprime;   // per element
  std::vector<CMatrix> vprime_module;  // basis vectors of E acting on V'; empty = zero (the point 0)
  int n_max = 0;

  int k() const { return e_action.empty() ? 0 : int(e_action[0].rows()); }
  /// Builds per-element images from generator images and checks that they are homomorphisms.
  static KoszulProblem from_generators(const std::vector<CMatrix>& group, const std::vector<CMatrix>& e,
                                       const std::vector<CMatrix>& v, const std::vector<CMatrix>& vprime, int n_max,
                                       int dim_group, int dim_e, int dim_v, int dim_vprime);
};

struct KoszulResult {
  std::vector<std::int64_t> dims;     // Ext^0..Ext^{n_max}
  std::vector<int> hom_dims;          // dim Hom_G(Λ^n E ⊗ V, V')
  double max_differential = 0.0;
  double min_singular_kept = 0.0;     // smallest singular value accepted as nonzero
};

/// Throws CapExceeded when a Hom space exceeds 10^6 entries and
/// NonvanishingDifferential when a differential has norm > 1e-8 (unless
/// `assert_vanishing` is false).
KoszulResult koszul_ext(const KoszulProblem& p, bool assert_vanishing = true);

/// An element of Hom_G(Λ^n E ⊗ V, V) ≅ (End(V) ⊗ Λ^n E*)^G; column block J
/// (n-subsets in lexicographic order) is the End(V) component at e_J.
struct YonedaElement {
  int degree = 0;
  CMatrix map;
};

/// Basis of the degree-n invariants (equal to Ext^n since the differentials vanish).
std::vector<YonedaElement> ext_basis(const KoszulProblem& p, int n);
/// Composition-and-wedge product. Needs V = V'; DegreeOverflow past n_max.
YonedaElement yoneda_product(const KoszulProblem& p, const YonedaElement& a, const YonedaElement& b);

/// Finite-dimensional G-algebra in a basis: mult[i][j] = b_i b_j, action[g] per element.
struct GAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::vector<Eigen::VectorXcd>> mult;
  Eigen::VectorXcd unit;
  std::vector<CMatrix> action;
};

struct CrossedProductReport {
  std::string name;
  int dim_b = 0, order = 0;
  double hom_residual = 0.0;         // L(xy) - L(x)L(y)
  double invariance_residual = 0.0;  // L(x) is G-invariant
  double inverse_residual = 0.0;     // L^{-1} L = id
  double unit_residual = 0.0;
  int rank = 0;                      // rank of L
  int invariant_dim = 0;             // dim (B ⊗ End C[G])^G
  bool ok = false;
};

/// Checks B ⋊ G ≅ (B ⊗ End C[G])^G through L(f ⊗ g)(h) = α_{h^{-1} g^{-1}}(f) ⊗ gh.
/// Throws IsoFailure unless every residual is ≤ tolerance and L is bijective.
CrossedProductReport crossed_product_iso_test(const GAlgebra& b, const FiniteGroup& g, double tolerance = 1e-8);

struct GAlgebraCase {
  GAlgebra algebra;
  FiniteGroup group;
};
std::vector<GAlgebraCase> crossed_product_library();

struct CrossValidation {
  ExtProfile formula;
  KoszulResult koszul;
  bool match = false;
};

/// Character formula for the problem's own data (E traces, chi_{V'}, chi_V)
/// against koszul_ext.
CrossValidation cross_validate(const KoszulProblem& p);
/// Compares a previously computed profile; throws Mismatch with both profiles.
CrossValidation cross_validate(const ExtProfile& formula, const KoszulProblem& p);

/// Koszul problem for an R-group package with trivial W(R_xi) and
/// one-dimensional characters: E is the tangent space, V realizes chip and V' realizes chi.
KoszulProblem package_problem(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg, const CharacterVector& chi,
                              const CharacterVector& chip);

struct RandomKoszulLimits {
  int max_order = 12;
  int max_e = 3;
  int max_v = 4;
};
/// Random problem from a small library of groups and irreducible representations,
/// with direct sums conjugated by random invertible matrices.
KoszulProblem random_koszul_problem(std::mt19937_64& rng, const RandomKoszulLimits& limits = {});

}  // namespace ahecke
