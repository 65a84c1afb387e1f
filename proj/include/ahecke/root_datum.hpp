#pragma once

// Based root data (X, R0, Y, R0v, F0) on X = Y = Z^n with the dot-product
// pairing, parameter functions, and parabolic subdata.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ahecke/linalg.hpp"

namespace ahecke {

struct Root {
  IntVector root;           // coordinates in X
  IntVector coroot;         // coordinates in Y
  IntVector root_coeffs;    // in the simple roots
  IntVector coroot_coeffs;  // in the simple coroots
  bool positive = true;
  int component = 0;        // irreducible component of the Dynkin diagram
  bool coroot_even = false; // coroot in 2Y, i.e. 2*root belongs to R_nr
};

enum class LatticeChoice { Adjoint, SimplyConnected, GL, CentralTorus };

class RootDatum {
 public:
  /// Simple roots and coroots are the columns of the two n x r matrices.
  static RootDatum from_basis(const IntMatrix& simple_roots, const IntMatrix& simple_coroots,
                              std::size_t root_cap = 10000);

  /// Labels like "A2", "B2", "G2", "A1xA1", "T1", "A1xT1"; "T<k>" is a rank-k torus.
  /// `central_rank` only applies to LatticeChoice::CentralTorus.
  static RootDatum from_type(const std::string& label, LatticeChoice lattice, int central_rank = 1);

  int rank() const { return rank_; }
  int num_simple() const { return int(simple_roots_.cols()); }
  const IntMatrix& simple_roots() const { return simple_roots_; }
  const IntMatrix& simple_coroots() const { return simple_coroots_; }
  const IntMatrix& cartan() const { return cartan_; }

  /// Positive roots occupy indices [0, N); root i + N is the negative of root i.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return int(roots_.size() / 2); }
  int negative_of(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  /// Index of a simple root (by simple index).
  int simple_root_index(int s) const { return simple_index_[std::size_t(s)]; }
  std::optional<int> find_root(const IntVector& x) const;

  /// Simple indices per irreducible component.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// For each component the root whose coroot is highest in the component of R0v.
  const std::vector<int>& highest_coroot_roots() const { return highest_coroot_root_; }

  bool is_semisimple() const { return num_simple() == rank_; }

  /// Reflection s_alpha on X as a matrix (x -> x - <x, alpha^v> alpha).
  IntMatrix reflection(int root_index) const;
  IntMatrix simple_reflection(int s) const { return reflection(simple_root_index(s)); }

  /// Orbit id of every root under W0.
  const std::vector<int>& root_orbit() const { return root_orbit_; }

 private:
  int rank_ = 0;
  IntMatrix simple_roots_, simple_coroots_, cartan_;
  std::vector<Root> roots_;
  std::vector<int> simple_index_;
  std::vector<std::vector<int>> components_;
  std::vector<int> highest_coroot_root_;
  std::vector<int> root_orbit_;
  std::map<std::vector<std::int64_t>, int> root_lookup_;
};

/// R_nr = R0 ∪ {2a : a^v in 2Y} and R1 = {b in R_nr : b^v not in 2Y}.
struct NonReducedData {
  struct Entry {
    IntVector root;
    int base_root;  // index in RootDatum::roots()
    bool doubled;   // the entry is 2 * base
    bool in_r1;
  };
  std::vector<Entry> entries;
};

NonReducedData derive_nonreduced(const RootDatum& rd);

/// Basis (columns) of Z(W) = {x : <x, a^v> = 0 for all simple a}.
IntMatrix center_lattice(const RootDatum& rd);

struct SqrtValue {
  double value = 1.0;
  std::optional<Rational> exact;
};
SqrtValue rational_sqrt(const Rational& q);

/// W0-invariant positive parameters on the coroots of R_nr.
class ParameterFunction {
 public:
  /// Keys: "a<i>" sets q_{a_i^v}; "h<i>" sets q_{a_i^v/2} (only where a_i^v in 2Y);
  /// "q" sets every q_{a^v} and makes every q_{a^v/2} = 1 (equal parameters).
  static ParameterFunction build(const RootDatum& rd, const std::map<std::string, Rational>& values);
  static ParameterFunction equal(const RootDatum& rd, const Rational& q);

  Rational q_coroot(int root) const { return q_coroot_[std::size_t(root)]; }
  /// q_{a^v/2}; 1 when the coroot is not in 2Y.
  Rational q_half(int root) const { return q_half_[std::size_t(root)]; }
  /// q(s_a).
  Rational q_reflection(int root) const;
  /// q(t_a s_a).
  Rational q_translated_reflection(int root) const { return q_coroot(root); }

  /// Orbit labels with their values, as accepted by build().
  std::map<std::string, Rational> labelled_values() const { return labels_; }
  bool all_equal_to_one() const;
  /// True when q(s) is the same for every affine simple reflection.
  bool is_equal_parameter() const;

 private:
  std::vector<Rational> q_coroot_, q_half_;
  std::vector<bool> has_half_;
  std::map<std::string, Rational> labels_;
};

struct ParabolicData {
  std::vector<int> subset;          // P as simple indices
  std::vector<int> roots_in_P;      // indices of R_P
  IntMatrix x_lower_kernel;         // basis of X ∩ (Pv)^perp
  IntMatrix x_upper_span;           // basis of X ∩ QP (saturated)
  IntMatrix x_lower_projection;     // X -> X_P, |P| x n
  IntMatrix x_upper_projection;     // X -> X^P, (n-|P|) x n
  IntMatrix x_upper_lifts;          // n x (n-|P|), lifts of the basis of X^P
  IntMatrix y_lower_basis;          // Y_P = Y ∩ QPv
  IntMatrix y_upper_basis;          // Y^P = Y ∩ P^perp, spans a^P
  RootDatum lower_datum;            // R_P = (X_P, R_P, Y_P, R_Pv, P)
  RootDatum upper_datum;            // R^P = (X, R_P, Y, R_Pv, P)
};

ParabolicData parabolic_data(const RootDatum& rd, const std::vector<int>& subset);

LatticeChoice parse_lattice_choice(const std::string& s);

}  // namespace ahecke
