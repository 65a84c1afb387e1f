#include "ahecke/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ahecke/error.hpp"

namespace ahecke {

WeylGroup::WeylGroup(const RootDatum& rd, std::size_t cap) : rd_(rd) {
  const int n = rd.rank();
  const int r = rd.num_simple();
  std::vector<IntMatrix> gens;
  for (int s = 0; s < r; ++s) gens.push_back(rd.simple_reflection(s));

  struct Rec {
    IntMatrix m;
    std::vector<int> word;
  };
  std::vector<Rec> recs;
  std::map<std::vector<std::int64_t>, int> seen;
  recs.push_back({IntMatrix::Identity(n, n), {}});
  seen.emplace(flatten(recs[0].m), 0);
  for (std::size_t head = 0; head < recs.size(); ++head) {
    for (int s = 0; s < r; ++s) {
      IntMatrix m = recs[head].m * gens[std::size_t(s)];
      auto key = flatten(m);
      if (seen.count(key)) continue;
      if (recs.size() >= cap) fail_cap("CapExceeded", "W0 has more than " + std::to_string(cap) + " elements");
      std::vector<int> word = recs[head].word;
      word.push_back(s);
      seen.emplace(std::move(key), int(recs.size()));
      recs.push_back({std::move(m), std::move(word)});
    }
  }

  const int N = rd.num_positive();
  std::vector<WeylElement> elts;
  for (auto& rec : recs) {
    WeylElement e;
    e.matrix = rec.m;
    e.word = rec.word;
    int len = 0;
    for (int i = 0; i < N; ++i) {
      auto j = rd.find_root(rec.m * rd.roots()[std::size_t(i)].root);
      if (!j) fail_property("NotAWeylElement", "matrix does not permute the roots");
      if (*j >= N) ++len;
    }
    if (len != int(e.word.size())) fail_property("LengthMismatch", "BFS word length differs from inversion count");
    e.length = len;
    elts.push_back(std::move(e));
  }
  std::stable_sort(elts.begin(), elts.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return flatten(a.matrix) < flatten(b.matrix);
  });
  elements_ = std::move(elts);
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(flatten(elements_[i].matrix), int(i));

  simple_.resize(std::size_t(r));
  for (int s = 0; s < r; ++s) simple_[std::size_t(s)] = lookup_.at(flatten(gens[std::size_t(s)]));
  inverse_.resize(elements_.size());
  root_perm_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    IntMatrix inv = IntMatrix::Identity(n, n);
    for (auto it = elements_[i].word.rbegin(); it != elements_[i].word.rend(); ++it) inv = inv * gens[std::size_t(*it)];
    inverse_[i] = lookup_.at(flatten(inv));
    auto& perm = root_perm_[i];
    perm.resize(rd.roots().size());
    for (std::size_t a = 0; a < rd.roots().size(); ++a)
      perm[a] = *rd.find_root(elements_[i].matrix * rd.roots()[a].root);
  }
}

int WeylGroup::multiply(int a, int b) const {
  auto it = lookup_.find(flatten(IntMatrix(matrix(a) * matrix(b))));
  if (it == lookup_.end()) fail_property("NotClosed", "product left W0");
  return it->second;
}

std::optional<int> WeylGroup::find(const IntMatrix& m) const {
  auto it = lookup_.find(flatten(m));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> WeylGroup::parabolic_subgroup(const std::vector<int>& subset) const {
  std::vector<int> out{0};
  std::set<int> seen{0};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int s : subset) {
      int g = multiply(out[head], simple(s));
      if (seen.insert(g).second) out.push_back(g);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> WeylGroup::shortest_coset_reps(const std::vector<int>& subset) const {
  std::vector<int> out;
  const int N = rd_.num_positive();
  for (std::size_t w = 0; w < order(); ++w) {
    bool minimal = true;
    for (int s : subset)
      if (act_on_root(int(w), rd_.simple_root_index(s)) >= N) minimal = false;
    if (minimal) out.push_back(int(w));
  }
  return out;
}

bool WeylGroup::stabilizes_subset(int w, const std::vector<int>& subset) const {
  std::set<int> targets;
  for (int s : subset) targets.insert(rd_.simple_root_index(s));
  for (int s : subset)
    if (!targets.count(act_on_root(w, rd_.simple_root_index(s)))) return false;
  return true;
}

bool ExtAffineElement::operator<(const ExtAffineElement& o) const {
  if (w != o.w) return w < o.w;
  return std::lexicographical_compare(x.data(), x.data() + x.size(), o.x.data(), o.x.data() + o.x.size());
}

AffineWeyl::AffineWeyl(const WeylGroup& w0) : w0_(&w0) {
  const RootDatum& rd = w0.datum();
  const int n = rd.rank();
  for (int s = 0; s < rd.num_simple(); ++s) {
    simple_.push_back({IntVector::Zero(n), w0.simple(s)});
    simple_root_.push_back(rd.simple_root_index(s));
  }
  for (int phi : rd.highest_coroot_roots()) {
    auto w = w0.find(rd.reflection(phi));
    simple_.push_back({rd.roots()[std::size_t(phi)].root, *w});
    simple_root_.push_back(phi);
  }

  IntMatrix z = center_lattice(rd);
  if (z.cols() > 0) {
    IntMatrix m(n, n);
    m << rd.simple_roots(), z;
    auto inv = QMatrix::from_int(m).inverse();
    if (!inv) fail_property("LatticeFailure", "roots and center do not span X rationally");
    mpz_class lcm = 1;
    for (int i = rd.num_simple(); i < n; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) {
        row.push_back((*inv)(i, j));
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*inv)(i, j).get_den_mpz_t());
      }
      center_coords_.push_back(std::move(row));
    }
    center_scale_ = lcm.get_si();
  }
}

ExtAffineElement AffineWeyl::identity() const { return {IntVector::Zero(rank()), 0}; }

ExtAffineElement AffineWeyl::multiply(const ExtAffineElement& a, const ExtAffineElement& b) const {
  return {IntVector(a.x + w0_->matrix(a.w) * b.x), w0_->multiply(a.w, b.w)};
}

ExtAffineElement AffineWeyl::inverse(const ExtAffineElement& a) const {
  int wi = w0_->inverse(a.w);
  return {IntVector(-(w0_->matrix(wi) * a.x)), wi};
}

int AffineWeyl::length(const ExtAffineElement& e) const {
  const RootDatum& rd = datum();
  const int N = rd.num_positive();
  const int winv = w0_->inverse(e.w);
  std::int64_t len = 0;
  for (int i = 0; i < N; ++i) {
    std::int64_t p = e.x.dot(rd.roots()[std::size_t(i)].coroot);
    if (w0_->act_on_root(winv, i) < N)
      len += std::llabs(p);
    else
      len += std::llabs(p - 1);
  }
  return int(len);
}

int AffineWeyl::length_by_counting(const ExtAffineElement& e) const {
  const RootDatum& rd = datum();
  const int N = rd.num_positive();
  const int total = int(rd.roots().size());
  std::int64_t K = 1;
  for (const Root& r : rd.roots()) K = std::max<std::int64_t>(K, std::llabs(e.x.dot(r.coroot)) + 1);
  int count = 0;
  for (int b = 0; b < total; ++b) {
    int g = w0_->act_on_root(e.w, b);
    std::int64_t shift = e.x.dot(rd.roots()[std::size_t(g)].coroot);
    for (std::int64_t k = 0; k <= K; ++k) {
      bool positive = k > 0 || b < N;
      if (!positive) continue;
      std::int64_t k2 = k - shift;
      bool negative = k2 < 0 || (k2 == 0 && g >= N);
      if (negative) ++count;
    }
  }
  return count;
}

Rational AffineWeyl::q_of_simple(const ParameterFunction& q, int i) const {
  int root = simple_root_[std::size_t(i)];
  return simple_is_affine(i) ? q.q_translated_reflection(root) : q.q_reflection(root);
}

AffineWeyl::Decomposition AffineWeyl::reduced_decomposition(const ExtAffineElement& e) const {
  ExtAffineElement v = e;
  std::vector<int> removed;
  int len = length(v);
  while (len > 0) {
    bool found = false;
    for (std::size_t i = 0; i < simple_.size(); ++i) {
      ExtAffineElement u = multiply(v, simple_[i]);
      int lu = length(u);
      if (lu < len) {
        v = std::move(u);
        len = lu;
        removed.push_back(int(i));
        found = true;
        break;
      }
    }
    if (!found) fail_property("NoDescent", "element of positive length without a right descent");
  }
  std::reverse(removed.begin(), removed.end());
  return {v, removed};
}

std::int64_t AffineWeyl::L_value(const IntVector& x, const std::optional<LSpec>& spec) const {
  Rational total = 0;
  if (spec) {
    for (const auto& f : spec->functionals) {
      Rational s = 0;
      for (int j = 0; j < x.size(); ++j) s += f[std::size_t(j)] * Rational(x(j));
      total += abs(s);
    }
  } else {
    for (const auto& f : center_coords_) {
      Rational s = 0;
      for (int j = 0; j < x.size(); ++j) s += f[std::size_t(j)] * Rational(x(j));
      total += abs(s);
    }
    total *= Rational(center_scale_);
  }
  total.canonicalize();
  if (total.get_den() != 1) fail_property("InvalidLSpec", "L is not integral on X");
  return total.get_num().get_si();
}

void AffineWeyl::validate_L(const LSpec& spec) const {
  const RootDatum& rd = datum();
  const int n = rd.rank();
  IntMatrix z = center_lattice(rd);
  QMatrix fz(int(spec.functionals.size()), int(z.cols()));
  for (std::size_t i = 0; i < spec.functionals.size(); ++i) {
    const auto& f = spec.functionals[i];
    if (int(f.size()) != n) fail_input("InvalidLSpec", "functional has the wrong length");
    for (const auto& c : f)
      if (c.get_den() != 1) fail_input("InvalidLSpec", "functional is not integral on X");
    for (int s = 0; s < rd.num_simple(); ++s) {
      Rational v = 0;
      for (int j = 0; j < n; ++j) v += f[std::size_t(j)] * Rational(rd.simple_roots()(j, s));
      if (sgn(v) != 0) fail_input("InvalidLSpec", "functional does not vanish on the roots");
    }
    for (int c = 0; c < z.cols(); ++c) {
      Rational v = 0;
      for (int j = 0; j < n; ++j) v += f[std::size_t(j)] * Rational(z(j, c));
      fz(int(i), c) = v;
    }
  }
  if (fz.rank() != z.cols()) fail_input("InvalidLSpec", "L does not define a norm on Z(W)");
}

int AffineWeyl::norm(const ExtAffineElement& e, const std::optional<LSpec>& spec) const {
  return int(length(e) + L_value(e.x, spec));
}

KGroup::KGroup(const RootDatum& rd, const std::vector<int>& P) : n_(rd.rank()) {
  ParabolicData pd = parabolic_data(rd, P);
  IntMatrix s(n_, pd.x_upper_span.cols() + pd.x_lower_kernel.cols());
  s << pd.x_upper_span, pd.x_lower_kernel;
  fq_ = finite_quotient(s, n_);
  std::vector<std::int64_t> cur(fq_.divisors.size(), 0);
  while (true) {
    std::vector<Rational> theta(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (int j = 0; j < n_; ++j)
        theta[std::size_t(j)] += Rational(cur[i] * fq_.coordinate_rows(Eigen::Index(i), j), fq_.divisors[i]);
    lookup_.emplace(cur, int(elements_.size()));
    elements_.push_back(cur);
    points_.push_back(TorusPoint::unitary(std::move(theta)));
    std::size_t pos = 0;
    while (pos < cur.size() && ++cur[pos] == fq_.divisors[pos]) cur[pos++] = 0;
    if (pos == cur.size()) break;
  }
}

std::vector<TorusPoint> KGroup::generators() const {
  std::vector<TorusPoint> out;
  for (std::size_t i = 0; i < fq_.divisors.size(); ++i) {
    std::vector<std::int64_t> e(fq_.divisors.size(), 0);
    e[i] = 1;
    out.push_back(points_[std::size_t(lookup_.at(e))]);
  }
  return out;
}

std::vector<std::int64_t> KGroup::residues(const TorusPoint& t) const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < fq_.divisors.size(); ++i) {
    Rational v = t.angle_at(fq_.generator_lifts.col(Eigen::Index(i))) * Rational(fq_.divisors[i]);
    v.canonicalize();
    if (v.get_den() != 1) return {};
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::optional<int> KGroup::find(const TorusPoint& t) const {
  if (t.dim() != n_ || !t.is_unitary()) return std::nullopt;
  auto res = residues(t);
  if (res.size() != fq_.divisors.size()) return std::nullopt;
  auto it = lookup_.find(res);
  if (it == lookup_.end() || points_[std::size_t(it->second)] != t) return std::nullopt;
  return it->second;
}

int KGroup::multiply(int a, int b) const {
  std::vector<std::int64_t> r(fq_.divisors.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (elements_[std::size_t(a)][i] + elements_[std::size_t(b)][i]) % fq_.divisors[i];
  return lookup_.at(r);
}

int KGroup::inverse(int a) const {
  std::vector<std::int64_t> r(fq_.divisors.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (fq_.divisors[i] - elements_[std::size_t(a)][i]) % fq_.divisors[i];
  return lookup_.at(r);
}

IntMatrix tangent_action(const WeylGroup& w0, int w, const IntMatrix& basis) {
  const int m = int(basis.cols());
  if (m == 0) return IntMatrix(0, 0);
  QMatrix B = QMatrix::from_int(basis);
  QMatrix Bt = B.transpose();
  auto gram_inv = (Bt * B).inverse();
  QMatrix M = *gram_inv * Bt * QMatrix::from_int(w0.coaction(w)) * B;
  if (!M.is_integral() || !(B * M == QMatrix::from_int(w0.coaction(w)) * B))
    fail_property("TangentNotPreserved", "w does not preserve Y^P");
  return M.to_int();
}

int Stabilizer::find(int w, int k) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].w == w && arrows[i].k == k) return int(i);
  return -1;
}

int Stabilizer::compose(const WeylGroup& w0, const KGroup& kg, int a, int b) const {
  const GroupoidArrow& x = arrows[std::size_t(a)];
  const GroupoidArrow& y = arrows[std::size_t(b)];
  auto moved = kg.find(kg.point(x.k).transformed(w0.matrix(y.w)));
  if (!moved) fail_property("NotClosed", "K_P is not preserved by the arrow");
  return find(w0.multiply(x.w, y.w), kg.multiply(*moved, y.k));
}

Stabilizer stabilizer(const WeylGroup& w0, const KGroup& kg, const InductionDatum& xi) {
  const RootDatum& rd = w0.datum();
  validate_induction_datum(rd, xi);
  ParabolicData pd = parabolic_data(rd, xi.P);
  Stabilizer st;
  st.P = pd.subset;
  st.tangent_basis = pd.y_upper_basis;

  std::set<TorusPoint> orbit;
  if (xi.delta.cc)
    for (int u : w0.parabolic_subgroup(st.P)) orbit.insert(xi.delta.cc->transformed(w0.matrix(w0.inverse(u))));

  for (std::size_t w = 0; w < w0.order(); ++w) {
    if (!w0.stabilizes_subset(int(w), st.P)) continue;
    const IntMatrix& winv = w0.matrix(w0.inverse(int(w)));
    for (int k = 0; k < kg.order(); ++k) {
      TorusPoint moved = (kg.point(k) * xi.t).transformed(winv);
      if (moved != xi.t) continue;
      if ((w != 0 || k != 0) && !st.P.empty()) {
        if (!xi.delta.cc)
          fail_input("DeltaComparisonUnavailable", "delta carries no central character to compare against");
        TorusPoint r = (kg.point(k).inverse() * *xi.delta.cc).transformed(winv);
        if (!orbit.count(r)) continue;
      }
      st.arrows.push_back({int(w), k, tangent_action(w0, int(w), st.tangent_basis)});
    }
  }
  return st;
}

}  // namespace ahecke
