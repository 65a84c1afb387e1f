#pragma once

// The finite Weyl group W0, the extended affine Weyl group X ⋊ W0 with its
// length and norm, the finite groups K_P and the isotropy groupoid of an
// induction datum.

#include <map>
#include <optional>
#include <vector>

#include "ahecke/root_datum.hpp"
#include "ahecke/torus.hpp"

namespace ahecke {

struct WeylElement {
  IntMatrix matrix;       // action on X
  std::vector<int> word;  // reduced word in the simple reflections
  int length = 0;
};

/// W0 enumerated once; elements are referred to by index, 0 is the identity.
/// Output order: by length, then lexicographically by matrix entries.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd, std::size_t cap = 10000);

  const RootDatum& datum() const { return rd_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](int i) const { return elements_[std::size_t(i)]; }
  const IntMatrix& matrix(int i) const { return elements_[std::size_t(i)].matrix; }
  int length(int i) const { return elements_[std::size_t(i)].length; }

  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[std::size_t(a)]; }
  std::optional<int> find(const IntMatrix& m) const;
  int simple(int s) const { return simple_[std::size_t(s)]; }
  /// Index of w(root) for a root index.
  int act_on_root(int w, int root) const { return root_perm_[std::size_t(w)][std::size_t(root)]; }
  /// Contragredient action on Y: (w^{-1})^T.
  IntMatrix coaction(int w) const { return matrix(inverse(w)).transpose(); }

  /// Elements generated by the simple reflections in `subset`.
  std::vector<int> parabolic_subgroup(const std::vector<int>& subset) const;
  /// Shortest representatives of W0 / W(R_P).
  std::vector<int> shortest_coset_reps(const std::vector<int>& subset) const;
  /// True when w maps the simple roots in P onto P.
  bool stabilizes_subset(int w, const std::vector<int>& subset) const;

 private:
  RootDatum rd_;
  std::vector<WeylElement> elements_;
  std::vector<int> inverse_, simple_;
  std::vector<std::vector<int>> root_perm_;
  std::map<std::vector<std::int64_t>, int> lookup_;
};

/// t_x w.
struct ExtAffineElement {
  IntVector x;
  int w = 0;

  bool operator==(const ExtAffineElement& o) const { return w == o.w && x == o.x; }
  bool operator<(const ExtAffineElement& o) const;
};

/// A linear norm on Z(W) ⊗ R given by functionals L(x) = sum_i |f_i(x)|.
struct LSpec {
  std::vector<std::vector<Rational>> functionals;
};

class AffineWeyl {
 public:
  explicit AffineWeyl(const WeylGroup& w0);

  const WeylGroup& finite() const { return *w0_; }
  const RootDatum& datum() const { return w0_->datum(); }
  int rank() const { return datum().rank(); }

  ExtAffineElement identity() const;
  ExtAffineElement translation(const IntVector& x) const { return {x, 0}; }
  ExtAffineElement multiply(const ExtAffineElement& a, const ExtAffineElement& b) const;
  ExtAffineElement inverse(const ExtAffineElement& a) const;

  /// Closed form for the number of positive affine roots made negative.
  int length(const ExtAffineElement& e) const;
  /// Direct count over affine roots (b^v, k), used as an oracle.
  int length_by_counting(const ExtAffineElement& e) const;

  /// Finite simple reflections s_0..s_{r-1} followed by one t_phi s_phi per component.
  const std::vector<ExtAffineElement>& simple_reflections() const { return simple_; }
  /// Root index attached to each affine simple reflection.
  const std::vector<int>& simple_roots() const { return simple_root_; }
  bool simple_is_affine(int i) const { return i >= datum().num_simple(); }
  Rational q_of_simple(const ParameterFunction& q, int i) const;

  /// e = omega * s_{word[0]} * ... * s_{word[k-1]} with l(omega) = 0.
  struct Decomposition {
    ExtAffineElement omega;
    std::vector<int> word;
  };
  Decomposition reduced_decomposition(const ExtAffineElement& e) const;

  /// N(e) = l(e) + L(e(0)). The default L is the scaled l1 norm of the Z(W) coordinate.
  int norm(const ExtAffineElement& e, const std::optional<LSpec>& spec = std::nullopt) const;
  std::int64_t L_value(const IntVector& x, const std::optional<LSpec>& spec = std::nullopt) const;
  void validate_L(const LSpec& spec) const;

  IntMatrix matrix(const ExtAffineElement& e) const { return w0_->matrix(e.w); }

 private:
  const WeylGroup* w0_;
  std::vector<ExtAffineElement> simple_;
  std::vector<int> simple_root_;
  // default L: rows = Z(W)-coordinate functionals, scaled to be integral
  std::vector<std::vector<Rational>> center_coords_;
  std::int64_t center_scale_ = 1;
};

/// K_P = T_P ∩ T^P as the character group of X / (X ∩ QP + X ∩ (P^v)^perp).
class KGroup {
 public:
  KGroup(const RootDatum& rd, const std::vector<int>& P);
  int order() const { return int(elements_.size()); }
  const std::vector<std::int64_t>& divisors() const { return fq_.divisors; }
  /// Exact unitary torus point of the element.
  const TorusPoint& point(int k) const { return points_[std::size_t(k)]; }
  std::vector<TorusPoint> generators() const;
  std::optional<int> find(const TorusPoint& t) const;
  int multiply(int a, int b) const;
  int inverse(int a) const;

 private:
  FiniteQuotient fq_;
  int n_ = 0;
  std::vector<std::vector<std::int64_t>> elements_;
  std::vector<TorusPoint> points_;
  std::map<std::vector<std::int64_t>, int> lookup_;
  std::vector<std::int64_t> residues(const TorusPoint& t) const;
};

struct GroupoidArrow {
  int w = 0;          // index in W0 with w(P) = P
  int k = 0;          // index in K_P
  IntMatrix tangent;  // action on a^P in the basis of Y^P
};

struct Stabilizer {
  std::vector<int> P;
  std::vector<GroupoidArrow> arrows;  // identity first
  IntMatrix tangent_basis;            // basis of Y^P (columns)
  int find(int w, int k) const;
  int compose(const WeylGroup& w0, const KGroup& kg, int a, int b) const;
};

/// Matrix of w on a^P in the basis B of Y^P.
IntMatrix tangent_action(const WeylGroup& w0, int w, const IntMatrix& basis);

/// The isotropy group W_xi of an induction datum.
Stabilizer stabilizer(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi);

}  // namespace ahecke
