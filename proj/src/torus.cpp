#include "ahecke/torus.hpp"

#include <cmath>
#include <numbers>

#include "ahecke/error.hpp"
#include "ahecke/weyl.hpp"

namespace ahecke {

Rational frac(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

TorusPoint::TorusPoint(std::vector<Rational> lambda, std::vector<Rational> theta, double log_unit)
    : lambda_(std::move(lambda)), theta_(std::move(theta)), log_unit_(log_unit) {
  if (lambda_.size() != theta_.size()) fail_input("RankMismatch", "lambda and theta must have equal length");
  if (!(log_unit_ > 0) || !std::isfinite(log_unit_)) fail_input("InvalidTorusPoint", "log_unit must be positive");
  for (auto& l : lambda_) l.canonicalize();
  for (auto& t : theta_) t = frac(t);
  if (is_unitary()) log_unit_ = 1.0;
}

TorusPoint TorusPoint::unitary(std::vector<Rational> theta) {
  std::vector<Rational> zero(theta.size());
  return TorusPoint(std::move(zero), std::move(theta));
}

bool TorusPoint::is_unitary() const {
  for (const auto& l : lambda_)
    if (sgn(l) != 0) return false;
  return true;
}

bool TorusPoint::is_real() const {
  for (const auto& t : theta_)
    if (sgn(t) != 0) return false;
  return true;
}

Rational TorusPoint::log_abs_at(const IntVector& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < lambda_.size(); ++i) s += lambda_[i] * Rational(x(Eigen::Index(i)));
  return s;
}

Rational TorusPoint::angle_at(const IntVector& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < theta_.size(); ++i) s += theta_[i] * Rational(x(Eigen::Index(i)));
  return frac(s);
}

std::complex<double> TorusPoint::evaluate(const IntVector& x) const {
  double mod = std::exp(log_unit_ * log_abs_at(x).get_d());
  double ang = 2 * std::numbers::pi * angle_at(x).get_d();
  return std::polar(mod, ang);
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  if (dim() != o.dim()) fail_input("RankMismatch", "torus points of different rank");
  double unit = is_unitary() ? o.log_unit_ : log_unit_;
  if (!is_unitary() && !o.is_unitary() && log_unit_ != o.log_unit_)
    fail_input("InvalidTorusPoint", "cannot multiply torus points with different log units");
  std::vector<Rational> l(lambda_.size()), t(theta_.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = lambda_[i] + o.lambda_[i];
    t[i] = theta_[i] + o.theta_[i];
  }
  return TorusPoint(std::move(l), std::move(t), unit);
}

TorusPoint TorusPoint::inverse() const {
  std::vector<Rational> l(lambda_.size()), t(theta_.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    l[i] = -lambda_[i];
    t[i] = -theta_[i];
  }
  return TorusPoint(std::move(l), std::move(t), log_unit_);
}

bool TorusPoint::operator==(const TorusPoint& o) const {
  if (lambda_ != o.lambda_ || theta_ != o.theta_) return false;
  return is_unitary() || log_unit_ == o.log_unit_;
}

bool TorusPoint::operator<(const TorusPoint& o) const {
  if (lambda_ != o.lambda_) return lambda_ < o.lambda_;
  if (theta_ != o.theta_) return theta_ < o.theta_;
  return log_unit_ < o.log_unit_;
}

TorusPoint TorusPoint::transformed(const IntMatrix& w_inverse) const {
  // t(w^{-1} x) = exp(<(w^{-1})^T lambda, x> ...)
  const int n = dim();
  std::vector<Rational> l(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a(w_inverse(j, i));
      l[std::size_t(i)] += a * lambda_[std::size_t(j)];
      t[std::size_t(i)] += a * theta_[std::size_t(j)];
    }
  return TorusPoint(std::move(l), std::move(t), log_unit_);
}

std::pair<TorusPoint, TorusPoint> TorusPoint::polar() const {
  std::vector<Rational> zero(theta_.size());
  return {TorusPoint(lambda_, zero, log_unit_), TorusPoint(zero, theta_)};
}

void validate_induction_datum(const RootDatum& rd, const InductionDatum& xi) {
  if (xi.t.dim() != rd.rank()) fail_input("RankMismatch", "t has the wrong rank");
  ParabolicData pd = parabolic_data(rd, xi.P);
  for (int j = 0; j < pd.x_upper_span.cols(); ++j) {
    IntVector x = pd.x_upper_span.col(j);
    if (sgn(xi.t.log_abs_at(x)) != 0 || sgn(xi.t.angle_at(x)) != 0)
      fail_input("NotInTP", "t is not trivial on X ∩ QP, so it does not lie in T^P");
  }
  if (xi.delta.dim < 1) fail_input("InvalidDelta", "delta dimension must be positive");
  if (xi.delta.cc) {
    if (xi.delta.cc->dim() != rd.rank()) fail_input("RankMismatch", "central character has the wrong rank");
    for (int j = 0; j < pd.x_lower_kernel.cols(); ++j) {
      IntVector x = pd.x_lower_kernel.col(j);
      if (sgn(xi.delta.cc->log_abs_at(x)) != 0 || sgn(xi.delta.cc->angle_at(x)) != 0)
        fail_input("NotInTP", "central character is not trivial on X ∩ (P^v)^perp");
    }
  }
}

InductionClass classify(const RootDatum& rd, const InductionDatum& xi) {
  if (xi.t.is_unitary()) return InductionClass::Unitary;
  for (int s = 0; s < rd.num_simple(); ++s) {
    if (std::find(xi.P.begin(), xi.P.end(), s) != xi.P.end()) continue;
    if (sgn(xi.t.log_abs_at(rd.simple_roots().col(s))) < 0) return InductionClass::General;
  }
  return InductionClass::Positive;
}

std::string to_string(InductionClass c) {
  switch (c) {
    case InductionClass::Unitary: return "unitary";
    case InductionClass::Positive: return "positive";
    case InductionClass::General: return "general";
  }
  return "general";
}

double cc_norm(const RootDatum& rd, const std::vector<int>& P, const TorusPoint& r_delta) {
  if (P.empty() || r_delta.is_unitary()) return 0.0;
  WeylGroup w0(rd);
  const int n = rd.rank();
  QMatrix G(n, n);
  for (std::size_t i = 0; i < w0.order(); ++i) {
    QMatrix g = QMatrix::from_int(w0.coaction(int(i)));
    QMatrix gg = g.transpose() * g;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) G(a, b) += gg(a, b);
  }
  Rational s = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s += r_delta.lambda()[std::size_t(a)] * G(a, b) * r_delta.lambda()[std::size_t(b)];
  s /= Rational(std::int64_t(w0.order()));
  return r_delta.log_unit() * std::sqrt(s.get_d());
}

std::vector<WeightVerdict> weight_test(const RootDatum& rd, const std::vector<TorusPoint>& weights, WeightMode mode) {
  QMatrix cor = QMatrix::from_int(rd.simple_coroots());
  std::vector<WeightVerdict> out;
  for (const TorusPoint& t : weights) {
    if (t.dim() != rd.rank()) fail_input("RankMismatch", "weight has the wrong rank");
    WeightVerdict v;
    auto sol = rd.num_simple() == 0 ? std::optional<std::vector<Rational>>() : cor.solve(t.lambda());
    if (rd.num_simple() == 0) {
      if (t.is_unitary()) sol = std::vector<Rational>{};
    }
    if (!sol) {
      v.outside_span = true;
      v.holds = false;
      out.push_back(v);
      continue;
    }
    v.coefficients = *sol;
    bool ok = true;
    for (const auto& c : v.coefficients) {
      switch (mode) {
        case WeightMode::Tempered: ok = ok && sgn(c) <= 0; break;
        case WeightMode::AntiTempered: ok = ok && sgn(c) >= 0; break;
        case WeightMode::Discrete: ok = ok && sgn(c) < 0; break;
      }
    }
    if (mode == WeightMode::Discrete && !rd.is_semisimple()) ok = false;
    v.holds = ok;
    out.push_back(v);
  }
  return out;
}

}  // namespace ahecke
