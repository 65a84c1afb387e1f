#pragma once

// Finite groups given by multiplication tables or by matrices, (projective)
// characters, exterior power traces and Molien series.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace ahecke {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Abstract finite group; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates the table (identity 0, inverses, associativity).
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  static FiniteGroup trivial() { return FiniteGroup(std::vector<std::vector<int>>{{0}}); }
  static FiniteGroup cyclic(int n);

  int order() const { return int(table_.size()); }
  int multiply(int a, int b) const { return table_[std::size_t(a)][std::size_t(b)]; }
  int inverse(int a) const { return inverse_[std::size_t(a)]; }
  int power(int a, int k) const;
  int conjugate(int h, int g) const { return multiply(multiply(h, g), inverse(h)); }
  const std::vector<std::vector<int>>& table() const { return table_; }
  /// Class id per element.
  std::vector<int> conjugacy_classes() const;
  /// Elements of the subgroup generated by `gens`.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// A finite group of invertible complex matrices with its element list.
class FiniteMatrixGroup {
 public:
  /// Breadth-first closure of the generators. Throws CapExceeded / NotFinite.
  static FiniteMatrixGroup enumerate(const std::vector<CMatrix>& generators, int dim, std::size_t cap = 10000);
  /// Wraps an already closed list (element 0 must be the identity).
  static FiniteMatrixGroup from_elements(std::vector<CMatrix> elements);

  int dim() const { return dim_; }
  int order() const { return int(elements_.size()); }
  const std::vector<CMatrix>& elements() const { return elements_; }
  const CMatrix& operator[](int i) const { return elements_[std::size_t(i)]; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const FiniteGroup& group() const { return group_; }
  std::optional<int> find(const CMatrix& m) const;

 private:
  int dim_ = 0;
  std::vector<CMatrix> elements_;
  std::vector<std::vector<int>> words_;
  FiniteGroup group_;
  std::vector<std::pair<std::vector<std::int64_t>, int>> keys_;  // sorted
};

std::vector<std::int64_t> matrix_key(const CMatrix& m);

/// Sum of multiplicities rounded to an integer, with the residual that justified it.
struct Rounded {
  std::int64_t value = 0;
  double residual = 0.0;
};
/// Rounds and raises `code` (PropertyViolation) when the residual exceeds the tolerance.
Rounded round_checked(Complex v, const char* code, double tolerance = 1e-6);

struct CharacterVector {
  std::vector<Complex> values;                         // canonical element order
  std::optional<std::vector<std::vector<Complex>>> cocycle;  // kappa(g, h); none = trivial
  int dim() const;
  bool linear() const { return !cocycle.has_value(); }
};

CharacterVector trivial_character(int order);
/// Character of a matrix representation given per element.
CharacterVector character_of(const std::vector<CMatrix>& rep);
CharacterVector regular_character(int order);

bool is_class_function(const FiniteGroup& g, const CharacterVector& chi, double tol = 1e-8);
/// Modulus one and the 2-cocycle identity on all triples.
bool is_cocycle(const FiniteGroup& g, const std::vector<std::vector<Complex>>& kappa, double tol = 1e-8);

/// dim of the invariants |G|^{-1} sum chi(g). Requires a linear character.
Rounded invariant_dim(const FiniteGroup& g, const CharacterVector& chi);
/// <chi, psi> = |G|^{-1} sum chi(g) conj(psi(g)).
Complex inner_product(const FiniteGroup& g, const CharacterVector& chi, const CharacterVector& psi);

/// g -> chi(g) conj(chi'(g)); both must carry the same cocycle.
CharacterVector product_character(const FiniteGroup& g, const CharacterVector& chi, const CharacterVector& chip);
CharacterVector tensor_character(const CharacterVector& a, const CharacterVector& b);

/// Ind_H^G of a linear character of the subgroup H (elements of G listed in `subgroup`,
/// psi indexed like `subgroup`).
CharacterVector induce_character(const FiniteGroup& g, const std::vector<int>& subgroup, const std::vector<Complex>& psi);

/// tr(g | Lambda^n V) from power sums p[k-1] = tr(g^k | V), k = 1..n.
Complex exterior_trace(const std::vector<Complex>& power_sums, int n);
/// All e_0..e_n.
std::vector<Complex> elementary_from_power_sums(const std::vector<Complex>& power_sums, int n);

/// Coefficients of |W|^{-1} sum_w det(1 - z g w)^{-1} up to z^D. Throws NormalizationFailure.
std::vector<Complex> molien_series(const FiniteMatrixGroup& w, const CMatrix& g, int D);

/// Default truncation degree: 1 + largest Coxeter number of the irreducible
/// reflection components of W (1 when W has no reflections).
int default_max_degree(const FiniteMatrixGroup& w);
/// Coxeter numbers of the irreducible reflection components.
std::vector<int> coxeter_numbers(const FiniteMatrixGroup& w);

/// The graded space E of generators of S(V)^W with the traces of the supplied
/// normalizing elements on each graded piece.
struct GradedCharacter {
  std::vector<int> dims;                      // dims[d], d = 0..D
  std::vector<std::vector<Complex>> traces;   // traces[i][d] for element i
  double self_check_residual = 0.0;           // rebuilt series vs Molien series
  int total_dim() const;
  std::vector<int> degrees() const;           // with multiplicity
  Complex total_trace(int i) const;
};

GradedCharacter extract_E_character(const FiniteMatrixGroup& w, const std::vector<CMatrix>& elements, int D);

}  // namespace ahecke
