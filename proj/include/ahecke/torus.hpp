#pragma once

// Points of T = Hom(X, C^x) with exact exponents, induction data and the
// tempered / discrete series weight tests.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ahecke/root_datum.hpp"

namespace ahecke {

/// t(x) = exp(u <lambda, x> + 2 pi i <theta, x>) with u = log_unit > 0.
/// theta is kept reduced into [0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(std::vector<Rational> lambda, std::vector<Rational> theta, double log_unit = 1.0);
  static TorusPoint identity(int n) { return TorusPoint(std::vector<Rational>(std::size_t(n)), std::vector<Rational>(std::size_t(n))); }
  static TorusPoint unitary(std::vector<Rational> theta);

  int dim() const { return int(theta_.size()); }
  const std::vector<Rational>& lambda() const { return lambda_; }
  const std::vector<Rational>& theta() const { return theta_; }
  double log_unit() const { return log_unit_; }

  bool is_unitary() const;
  bool is_real() const;

  Rational log_abs_at(const IntVector& x) const;  // <lambda, x>, in units of log_unit
  Rational angle_at(const IntVector& x) const;    // <theta, x> mod 1
  std::complex<double> evaluate(const IntVector& x) const;

  TorusPoint operator*(const TorusPoint& o) const;
  TorusPoint inverse() const;
  bool operator==(const TorusPoint& o) const;
  bool operator!=(const TorusPoint& o) const { return !(*this == o); }
  bool operator<(const TorusPoint& o) const;

  /// (w t)(x) = t(w^{-1} x); `w_inverse` is the matrix of w^{-1} on X.
  TorusPoint transformed(const IntMatrix& w_inverse) const;

  std::pair<TorusPoint, TorusPoint> polar() const;  // (|t|, t/|t|)

 private:
  std::vector<Rational> lambda_, theta_;
  double log_unit_ = 1.0;
};

Rational frac(const Rational& q);  // q - floor(q)

struct DeltaLabel {
  std::string name = "triv";
  int dim = 1;
  std::optional<TorusPoint> cc;  // central character r_delta in T_P
};

struct InductionDatum {
  std::vector<int> P;
  DeltaLabel delta;
  TorusPoint t;
};

/// Checks the T^P constraint on t and T_P membership of r_delta.
void validate_induction_datum(const RootDatum& rd, const InductionDatum& xi);

enum class InductionClass { Unitary, Positive, General };
InductionClass classify(const RootDatum& rd, const InductionDatum& xi);
std::string to_string(InductionClass c);

/// Norm of W(R_P) log|r_delta| under the W0-averaged dot product on a.
double cc_norm(const RootDatum& rd, const std::vector<int>& P, const TorusPoint& r_delta);

enum class WeightMode { Tempered, AntiTempered, Discrete };

struct WeightVerdict {
  bool holds = false;
  bool outside_span = false;          // log|t| not in the real span of the coroots
  std::vector<Rational> coefficients; // log|t| = sum c_a a^v over simple a, when in span
};

std::vector<WeightVerdict> weight_test(const RootDatum& rd, const std::vector<TorusPoint>& weights, WeightMode mode);

}  // namespace ahecke
