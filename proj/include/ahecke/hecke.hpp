#pragma once

// Finitely supported elements of the affine Hecke algebra H(R, q) in the
// basis N_w, w in X ⋊ W0.

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "ahecke/weyl.hpp"

namespace ahecke {

using Complex = std::complex<double>;

template <class C>
class HeckeAlgebraT;

template <class C>
class HeckeElementT {
 public:
  using Terms = std::map<ExtAffineElement, C>;

  HeckeElementT() = default;
  explicit HeckeElementT(const HeckeAlgebraT<C>* alg) : alg_(alg) {}

  const HeckeAlgebraT<C>* algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(const ExtAffineElement& e) const;

  /// Adds c N_e, dropping coefficients that become zero.
  void add(const ExtAffineElement& e, const C& c);

  HeckeElementT operator+(const HeckeElementT& o) const;
  HeckeElementT operator-(const HeckeElementT& o) const;
  HeckeElementT operator*(const HeckeElementT& o) const;
  HeckeElementT scaled(const C& c) const;

  /// max |coefficient|
  double max_abs() const;

 private:
  const HeckeAlgebraT<C>* alg_ = nullptr;
  Terms terms_;
};

template <class C>
class HeckeAlgebraT {
 public:
  using Element = HeckeElementT<C>;

  /// Exact mode (C = Rational) requires every q(s)^{1/2} to be rational.
  HeckeAlgebraT(const AffineWeyl& aw, const ParameterFunction& q, std::size_t support_cap = 100000);

  const AffineWeyl& affine() const { return *aw_; }
  const ParameterFunction& parameters() const { return q_; }
  std::size_t support_cap() const { return cap_; }

  Element zero() const { return Element(this); }
  Element one() const { return basis(aw_->identity()); }
  Element basis(const ExtAffineElement& e, const C& c = C(1)) const;
  Element simple(int i) const { return basis(aw_->simple_reflections()[std::size_t(i)]); }
  int num_simple() const { return int(aw_->simple_reflections().size()); }

  /// q(s_i)^{1/2} - q(s_i)^{-1/2}
  const C& structure_constant(int i) const { return diff_[std::size_t(i)]; }
  const C& sqrt_q(int i) const { return sqrt_q_[std::size_t(i)]; }

  Element multiply(const Element& a, const Element& b) const;
  /// a * N_{s_i}
  Element right_multiply_simple(const Element& a, int i) const;
  Element star(const Element& a) const;
  Element inverse_basis(const ExtAffineElement& e) const;
  Element theta(const IntVector& x) const;

  /// sup_w |h_w| (N(w) + 1)^n
  double seminorm(int n, const Element& a, const std::optional<LSpec>& spec = std::nullopt) const;

 private:
  const AffineWeyl* aw_;
  ParameterFunction q_;
  std::size_t cap_;
  std::vector<C> sqrt_q_, diff_;
  IntVector two_rho_;
  void check(const Element& a) const;
  void check_cap(const Element& a) const;
};

using HeckeAlgebra = HeckeAlgebraT<Complex>;
using HeckeElement = HeckeElementT<Complex>;
using ExactHeckeAlgebra = HeckeAlgebraT<Rational>;
using ExactHeckeElement = HeckeElementT<Rational>;

/// True when every q(s)^{1/2} is rational, so ExactHeckeAlgebra applies.
bool exact_mode_available(const AffineWeyl& aw, const ParameterFunction& q);

/// max |(N_s - q^{1/2})(N_s + q^{-1/2})| over the affine simple reflections.
double quadratic_residual(const HeckeAlgebra& h);

struct CenterProbe {
  bool central = false;
  double residual = 0.0;
};

/// Tests that the sum of theta over the W0-orbit of x commutes with every N_s
/// (s in S0) and with theta_y for `trials` sampled y.
CenterProbe center_probe(const HeckeAlgebra& h, const IntVector& x, int trials, double tolerance = 1e-9);

}  // namespace ahecke
