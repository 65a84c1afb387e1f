#pragma once

// Ext dimensions between tempered modules with the same central character,
// the Arthur-type Euler-Poincare formula, elliptic pairings and Gram reports.

#include <optional>
#include <vector>

#include "ahecke/finite_reps.hpp"
#include "ahecke/rgroup.hpp"

namespace ahecke {

struct ExtProfile {
  std::vector<std::int64_t> dims;  // dim Ext^n, n = 0..dim E
  std::vector<double> residuals;   // rounding residual per degree
  Complex alternating_raw = 0;     // sum (-1)^n of the unrounded values
  std::int64_t ep() const;
};

/// Core formula over an abstract group: e_trace[g] = tr(g | E), characters
/// indexed like the group elements.
ExtProfile ext_dims(const FiniteGroup& g, const std::vector<Complex>& e_trace, int dim_e, const CharacterVector& chi,
                    const CharacterVector& chip);

/// E as a graded character of R_xi: W(R_xi) and R_xi acting on the tangent space.
GradedCharacter e_character(const RGroupData& rg, std::optional<int> max_degree = std::nullopt);

/// Characters are indexed like rg.rgroup.
ExtProfile ext_dims(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg, const GradedCharacter& e,
                    const CharacterVector& chi, const CharacterVector& chip);

struct PairingValue {
  std::int64_t value = 0;
  Complex raw = 0;
  double residual = 0.0;
};

/// |G|^{-1} sum_g det(1 - g | T) chi(g) conj(chi'(g)); tangent[g] indexed like g.
PairingValue ep_arthur(const FiniteGroup& g, const std::vector<CMatrix>& tangent, const CharacterVector& chi,
                       const CharacterVector& chip);
PairingValue ep_arthur(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg, const CharacterVector& chi,
                       const CharacterVector& chip);

struct EllipticValue {
  Complex value = 0;
  std::vector<int> elliptic;  // elements with det(1 - g) != 0
};

/// |G|^{-1} sum_g det(1 - g | V) chi(g) conj(chi'(g)).
EllipticValue elliptic_pairing(const FiniteMatrixGroup& g, const CharacterVector& chi, const CharacterVector& chip);

struct PairingReport {
  CMatrix gram;
  double hermitian_residual = 0.0;
  Eigen::VectorXd eigenvalues;
  double min_eigenvalue = 0.0;
  int rank = 0;
  std::vector<Eigen::VectorXcd> radical;  // orthonormal basis of the kernel
};

/// Hermitian and PSD checks at `tolerance`; with strict = true a failure
/// raises NotHermitian / NotPositiveSemidefinite.
PairingReport gram_report(const CMatrix& gram, double tolerance = 1e-8, bool strict = true);

PairingReport ep_gram(const FiniteGroup& g, const std::vector<CMatrix>& tangent, const std::vector<CharacterVector>& chars,
                      double tolerance = 1e-8);
/// The q = 1 case: elliptic pairing of W_t on a.
PairingReport ep_group_algebra(const FiniteMatrixGroup& w, const std::vector<CharacterVector>& chars, double tolerance = 1e-8);

}  // namespace ahecke
