#include "ahecke/hecke.hpp"

#include <cmath>
#include <random>
#include <set>

#include "ahecke/error.hpp"

namespace ahecke {

namespace {

bool coef_is_zero(const Complex& c) { return std::abs(c) < 1e-14; }
bool coef_is_zero(const Rational& c) { return sgn(c) == 0; }
double magnitude(const Complex& c) { return std::abs(c); }
double magnitude(const Rational& c) { return std::abs(c.get_d()); }
Complex conjugate(const Complex& c) { return std::conj(c); }
Rational conjugate(const Rational& c) { return c; }

template <class C>
C from_sqrt(const SqrtValue& s);
template <>
Complex from_sqrt<Complex>(const SqrtValue& s) { return Complex(s.value, 0.0); }
template <>
Rational from_sqrt<Rational>(const SqrtValue& s) {
  if (!s.exact) fail_input("InexactParameters", "exact mode needs rational square roots of all q(s)");
  return *s.exact;
}

}  // namespace

template <class C>
C HeckeElementT<C>::coefficient(const ExtAffineElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? C(0) : it->second;
}

template <class C>
void HeckeElementT<C>::add(const ExtAffineElement& e, const C& c) {
  if (coef_is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (coef_is_zero(it->second)) terms_.erase(it);
  }
}

template <class C>
HeckeElementT<C> HeckeElementT<C>::operator+(const HeckeElementT& o) const {
  if (alg_ != o.alg_ && alg_ && o.alg_) fail_input("AlgebraMismatch", "elements of different algebras");
  HeckeElementT r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

template <class C>
HeckeElementT<C> HeckeElementT<C>::operator-(const HeckeElementT& o) const {
  return *this + o.scaled(C(-1));
}

template <class C>
HeckeElementT<C> HeckeElementT<C>::operator*(const HeckeElementT& o) const {
  if (!alg_) fail_input("AlgebraMismatch", "element without an algebra");
  return alg_->multiply(*this, o);
}

template <class C>
HeckeElementT<C> HeckeElementT<C>::scaled(const C& c) const {
  HeckeElementT r(alg_);
  for (const auto& [e, v] : terms_) r.add(e, v * c);
  return r;
}

template <class C>
double HeckeElementT<C>::max_abs() const {
  double m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, magnitude(c));
  return m;
}

template <class C>
HeckeAlgebraT<C>::HeckeAlgebraT(const AffineWeyl& aw, const ParameterFunction& q, std::size_t support_cap)
    : aw_(&aw), q_(q), cap_(support_cap) {
  for (int i = 0; i < int(aw.simple_reflections().size()); ++i) {
    SqrtValue s = rational_sqrt(aw.q_of_simple(q, i));
    C root = from_sqrt<C>(s);
    sqrt_q_.push_back(root);
    diff_.push_back(root - C(1) / root);
  }
  const RootDatum& rd = aw.datum();
  two_rho_ = IntVector::Zero(rd.rank());
  for (int i = 0; i < rd.num_positive(); ++i) two_rho_ += rd.roots()[std::size_t(i)].root;
}

template <class C>
void HeckeAlgebraT<C>::check(const Element& a) const {
  if (a.algebra() != nullptr && a.algebra() != this) fail_input("AlgebraMismatch", "element belongs to another algebra");
}

template <class C>
void HeckeAlgebraT<C>::check_cap(const Element& a) const {
  if (a.size() > cap_) fail_cap("SupportCapExceeded", "support exceeded " + std::to_string(cap_) + " terms");
}

template <class C>
HeckeElementT<C> HeckeAlgebraT<C>::basis(const ExtAffineElement& e, const C& c) const {
  Element r(this);
  r.add(e, c);
  return r;
}

template <class C>
HeckeElementT<C> HeckeAlgebraT<C>::right_multiply_simple(const Element& a, int i) const {
  const ExtAffineElement& s = aw_->simple_reflections()[std::size_t(i)];
  Element r(this);
  for (const auto& [u, c] : a.terms()) {
    ExtAffineElement us = aw_->multiply(u, s);
    r.add(us, c);
    if (aw_->length(us) < aw_->length(u)) r.add(u, c * diff_[std::size_t(i)]);
  }
  check_cap(r);
  return r;
}

template <class C>
HeckeElementT<C> HeckeAlgebraT<C>::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out(this);
  for (const auto& [v, cv] : b.terms()) {
    AffineWeyl::Decomposition d = aw_->reduced_decomposition(v);
    Element cur(this);
    for (const auto& [u, cu] : a.terms()) cur.add(aw_->multiply(u, d.omega), cu * cv);
    for (int s : d.word) cur = right_multiply_simple(cur, s);
    for (const auto& [e, c] : cur.terms()) out.add(e, c);
    check_cap(out);
  }
  return out;
}

template <class C>
HeckeElementT<C> HeckeAlgebraT<C>::star(const Element& a) const {
  check(a);
  Element r(this);
  for (const auto& [e, c] : a.terms()) r.add(aw_->inverse(e), conjugate(c));
  return r;
}

template <class C>
HeckeElementT<C> HeckeAlgebraT<C>::inverse_basis(const ExtAffineElement& e) const {
  // N_e = N_omega N_{s_1} ... N_{s_k}, so N_e^{-1} = N_{s_k}^{-1} ... N_{s_1}^{-1} N_{omega^{-1}}
  AffineWeyl::Decomposition d = aw_->reduced_decomposition(e);
  Element r = one();
  for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) {
    Element inv_s = simple(*it) - one().scaled(diff_[std::size_t(*it)]);
    r = multiply(r, inv_s);
  }
  return multiply(r, basis(aw_->inverse(d.omega)));
}

template <class C>
HeckeElementT<C> HeckeAlgebraT<C>::theta(const IntVector& x) const {
  const RootDatum& rd = aw_->datum();
  if (x.size() != rd.rank()) fail_input("RankMismatch", "theta argument has the wrong rank");
  std::int64_t worst = 0;
  for (int s = 0; s < rd.num_simple(); ++s) worst = std::min<std::int64_t>(worst, x.dot(rd.simple_coroots().col(s)));
  std::int64_t m = (-worst + 1) / 2;
  if (m == 0) return basis(aw_->translation(x));
  IntVector z = m * two_rho_;
  IntVector y = x + z;
  return multiply(basis(aw_->translation(y)), inverse_basis(aw_->translation(z)));
}

template <class C>
double HeckeAlgebraT<C>::seminorm(int n, const Element& a, const std::optional<LSpec>& spec) const {
  check(a);
  double best = 0;
  for (const auto& [e, c] : a.terms())
    best = std::max(best, magnitude(c) * std::pow(double(aw_->norm(e, spec) + 1), n));
  return best;
}

template class HeckeElementT<Complex>;
template class HeckeElementT<Rational>;
template class HeckeAlgebraT<Complex>;
template class HeckeAlgebraT<Rational>;

bool exact_mode_available(const AffineWeyl& aw, const ParameterFunction& q) {
  for (int i = 0; i < int(aw.simple_reflections().size()); ++i)
    if (!rational_sqrt(aw.q_of_simple(q, i)).exact) return false;
  return true;
}

double quadratic_residual(const HeckeAlgebra& h) {
  double worst = 0;
  for (int i = 0; i < h.num_simple(); ++i) {
    HeckeElement ns = h.simple(i);
    HeckeElement a = ns - h.one().scaled(h.sqrt_q(i));
    HeckeElement b = ns + h.one().scaled(1.0 / h.sqrt_q(i));
    worst = std::max(worst, h.multiply(a, b).max_abs());
  }
  return worst;
}

CenterProbe center_probe(const HeckeAlgebra& h, const IntVector& x, int trials, double tolerance) {
  const AffineWeyl& aw = h.affine();
  const WeylGroup& w0 = aw.finite();
  const RootDatum& rd = aw.datum();
  std::set<std::vector<std::int64_t>> orbit;
  for (std::size_t w = 0; w < w0.order(); ++w) orbit.insert(to_std(IntVector(w0.matrix(int(w)) * x)));
  HeckeElement z = h.zero();
  for (const auto& y : orbit) z = z + h.theta(from_std(y));

  CenterProbe out;
  auto commutator = [&](const HeckeElement& b) {
    out.residual = std::max(out.residual, (h.multiply(z, b) - h.multiply(b, z)).max_abs());
  };
  for (int s = 0; s < rd.num_simple(); ++s) commutator(h.simple(s));
  std::mt19937 gen(20240611u);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int t = 0; t < trials; ++t) {
    IntVector y(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) y(i) = coord(gen);
    commutator(h.theta(y));
  }
  out.central = out.residual <= tolerance;
  return out;
}

}  // namespace ahecke
