#include "ahecke/finite_reps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "ahecke/error.hpp"

namespace ahecke {

namespace {

int numeric_rank(const CMatrix& m, double tol = 1e-8) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

std::vector<Complex> series_inverse(const std::vector<Complex>& a, int D) {
  std::vector<Complex> b(static_cast<std::size_t>(D + 1), Complex(0));
  b[0] = Complex(1) / a[0];
  for (int d = 1; d <= D; ++d) {
    Complex s = 0;
    for (int k = 1; k <= d && k < int(a.size()); ++k) s += a[std::size_t(k)] * b[std::size_t(d - k)];
    b[std::size_t(d)] = -s / a[0];
  }
  return b;
}

std::vector<Complex> series_multiply(const std::vector<Complex>& a, const std::vector<Complex>& b, int D) {
  std::vector<Complex> c(static_cast<std::size_t>(D + 1), Complex(0));
  for (int i = 0; i <= D && i < int(a.size()); ++i)
    for (int j = 0; i + j <= D && j < int(b.size()); ++j) c[std::size_t(i + j)] += a[std::size_t(i)] * b[std::size_t(j)];
  return c;
}

std::vector<Complex> series_log(const std::vector<Complex>& s, int D) {
  // s(0) = 1; k l_k = k s_k - sum_{j<k} j l_j s_{k-j}
  std::vector<Complex> l(static_cast<std::size_t>(D + 1), Complex(0));
  for (int k = 1; k <= D; ++k) {
    Complex v = double(k) * s[std::size_t(k)];
    for (int j = 1; j < k; ++j) v -= double(j) * l[std::size_t(j)] * s[std::size_t(k - j)];
    l[std::size_t(k)] = v / double(k);
  }
  return l;
}

/// Coefficients of det(1 - u M) in u.
std::vector<Complex> det_one_minus(const CMatrix& m) {
  const int n = int(m.rows());
  std::vector<Complex> p;
  CMatrix pw = CMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    pw = pw * m;
    p.push_back(pw.trace());
  }
  std::vector<Complex> e = elementary_from_power_sums(p, n);
  for (int k = 0; k <= n; ++k)
    if (k % 2) e[std::size_t(k)] = -e[std::size_t(k)];
  return e;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = int(table_.size());
  if (n == 0) fail_input("InvalidGroup", "empty multiplication table");
  for (const auto& row : table_) {
    if (int(row.size()) != n) fail_input("InvalidGroup", "multiplication table is not square");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[std::size_t(v)]) fail_input("InvalidGroup", "table row is not a permutation");
      seen[std::size_t(v)] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][std::size_t(a)] != a || table_[std::size_t(a)][0] != a)
      fail_input("InvalidGroup", "element 0 is not the identity");
  inverse_.assign(std::size_t(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[std::size_t(a)][std::size_t(b)] == 0) inverse_[std::size_t(a)] = b;
  // Full associativity check for small groups, strided sample otherwise.
  const int step = n <= 64 ? 1 : n / 32;
  for (int a = 0; a < n; a += step)
    for (int b = 0; b < n; b += step)
      for (int c = 0; c < n; c += step)
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
          fail_input("InvalidGroup", "multiplication is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a)][std::size_t(b)] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

int FiniteGroup::power(int a, int k) const {
  int r = 0;
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

std::vector<int> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(std::size_t(order()), -1);
  int next = 0;
  for (int g = 0; g < order(); ++g) {
    if (cls[std::size_t(g)] >= 0) continue;
    for (int h = 0; h < order(); ++h) cls[std::size_t(conjugate(h, g))] = next;
    ++next;
  }
  return cls;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<int> out{0};
  std::vector<char> seen(std::size_t(order()), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int g : gens) {
      int p = multiply(out[head], g);
      if (!seen[std::size_t(p)]) {
        seen[std::size_t(p)] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> matrix_key(const CMatrix& m) {
  std::vector<std::int64_t> k;
  k.reserve(std::size_t(2 * m.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      k.push_back(std::llround(m(i, j).real() * 1e6));
      k.push_back(std::llround(m(i, j).imag() * 1e6));
    }
  return k;
}

FiniteMatrixGroup FiniteMatrixGroup::enumerate(const std::vector<CMatrix>& generators, int dim, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) fail_input("RankMismatch", "generator has the wrong size");
    if (std::abs(g.determinant()) < 1e-12) fail_input("NotInvertible", "generator is singular");
  }
  std::vector<CMatrix> elts{CMatrix::Identity(dim, dim)};
  std::vector<std::vector<int>> words{{}};
  std::map<std::vector<std::int64_t>, int> seen{{matrix_key(elts[0]), 0}};
  for (std::size_t head = 0; head < elts.size(); ++head)
    for (std::size_t s = 0; s < generators.size(); ++s) {
      CMatrix m = elts[head] * generators[s];
      auto key = matrix_key(m);
      if (seen.count(key)) continue;
      if (m.cwiseAbs().maxCoeff() > 1e6) fail_input("NotFinite", "matrix entries grow without bound");
      if (elts.size() >= cap) fail_cap("CapExceeded", "group order exceeds " + std::to_string(cap));
      seen.emplace(std::move(key), int(elts.size()));
      std::vector<int> w = words[head];
      w.push_back(int(s));
      elts.push_back(std::move(m));
      words.push_back(std::move(w));
    }
  FiniteMatrixGroup g = from_elements(std::move(elts));
  g.words_ = std::move(words);
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(std::vector<CMatrix> elements) {
  FiniteMatrixGroup g;
  if (elements.empty()) fail_input("InvalidGroup", "empty element list");
  g.dim_ = int(elements[0].rows());
  g.elements_ = std::move(elements);
  if (!g.elements_[0].isApprox(CMatrix::Identity(g.dim_, g.dim_), 1e-9) && g.dim_ > 0)
    fail_input("InvalidGroup", "element 0 must be the identity");
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.keys_.emplace_back(matrix_key(g.elements_[i]), int(i));
  std::sort(g.keys_.begin(), g.keys_.end());
  for (std::size_t i = 1; i < g.keys_.size(); ++i)
    if (g.keys_[i].first == g.keys_[i - 1].first) fail_input("InvalidGroup", "duplicate group elements");
  const int n = int(g.elements_.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto f = g.find(g.elements_[std::size_t(a)] * g.elements_[std::size_t(b)]);
      if (!f) fail_input("InvalidGroup", "element list is not closed under multiplication");
      table[std::size_t(a)][std::size_t(b)] = *f;
    }
  g.group_ = FiniteGroup(std::move(table));
  if (g.words_.empty()) g.words_.resize(std::size_t(n));
  return g;
}

std::optional<int> FiniteMatrixGroup::find(const CMatrix& m) const {
  auto key = matrix_key(m);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key,
                             [](const auto& a, const std::vector<std::int64_t>& k) { return a.first < k; });
  if (it == keys_.end() || it->first != key) return std::nullopt;
  return it->second;
}

Rounded round_checked(Complex v, const char* code, double tolerance) {
  Rounded r;
  r.value = std::llround(v.real());
  r.residual = std::max(std::abs(v.real() - double(r.value)), std::abs(v.imag()));
  if (r.residual > tolerance)
    fail_property(code, "value " + std::to_string(v.real()) + (v.imag() >= 0 ? "+" : "") + std::to_string(v.imag()) +
                            "i is not within tolerance of an integer");
  return r;
}

int CharacterVector::dim() const { return values.empty() ? 0 : int(std::llround(values[0].real())); }

CharacterVector trivial_character(int order) { return {std::vector<Complex>(std::size_t(order), Complex(1)), std::nullopt}; }

CharacterVector character_of(const std::vector<CMatrix>& rep) {
  CharacterVector c;
  for (const auto& m : rep) c.values.push_back(m.trace());
  return c;
}

CharacterVector regular_character(int order) {
  CharacterVector c{std::vector<Complex>(std::size_t(order), Complex(0)), std::nullopt};
  c.values[0] = double(order);
  return c;
}

bool is_class_function(const FiniteGroup& g, const CharacterVector& chi, double tol) {
  for (int a = 0; a < g.order(); ++a)
    for (int h = 0; h < g.order(); ++h)
      if (std::abs(chi.values[std::size_t(g.conjugate(h, a))] - chi.values[std::size_t(a)]) > tol) return false;
  return true;
}

bool is_cocycle(const FiniteGroup& g, const std::vector<std::vector<Complex>>& k, double tol) {
  const int n = g.order();
  if (int(k.size()) != n) return false;
  for (const auto& row : k) {
    if (int(row.size()) != n) return false;
    for (auto v : row)
      if (std::abs(std::abs(v) - 1.0) > tol) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Complex lhs = k[std::size_t(a)][std::size_t(b)] * k[std::size_t(g.multiply(a, b))][std::size_t(c)];
        Complex rhs = k[std::size_t(a)][std::size_t(g.multiply(b, c))] * k[std::size_t(b)][std::size_t(c)];
        if (std::abs(lhs - rhs) > tol) return false;
      }
  return true;
}

Rounded invariant_dim(const FiniteGroup& g, const CharacterVector& chi) {
  if (!chi.linear()) fail_input("CocycleMismatch", "invariant dimension needs a linear character");
  if (int(chi.values.size()) != g.order()) fail_input("RankMismatch", "character length differs from the group order");
  Complex s = 0;
  for (auto v : chi.values) s += v;
  s /= double(g.order());
  return round_checked(s, "NonIntegralDimension");
}

Complex inner_product(const FiniteGroup& g, const CharacterVector& chi, const CharacterVector& psi) {
  Complex s = 0;
  for (int a = 0; a < g.order(); ++a) s += chi.values[std::size_t(a)] * std::conj(psi.values[std::size_t(a)]);
  return s / double(g.order());
}

namespace {

bool same_cocycle(const CharacterVector& a, const CharacterVector& b) {
  if (a.cocycle.has_value() != b.cocycle.has_value()) return false;
  if (!a.cocycle) return true;
  const auto& x = *a.cocycle;
  const auto& y = *b.cocycle;
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != y[i].size()) return false;
    for (std::size_t j = 0; j < x[i].size(); ++j)
      if (std::abs(x[i][j] - y[i][j]) > 1e-9) return false;
  }
  return true;
}

}  // namespace

CharacterVector product_character(const FiniteGroup& g, const CharacterVector& chi, const CharacterVector& chip) {
  if (!same_cocycle(chi, chip)) fail_input("CocycleMismatch", "characters carry different cocycles");
  if (int(chi.values.size()) != g.order() || int(chip.values.size()) != g.order())
    fail_input("RankMismatch", "character length differs from the group order");
  CharacterVector out;
  for (int a = 0; a < g.order(); ++a) out.values.push_back(chi.values[std::size_t(a)] * std::conj(chip.values[std::size_t(a)]));
  if (!is_class_function(g, out, 1e-6)) fail_property("NotClassFunction", "product of characters is not a class function");
  return out;
}

CharacterVector tensor_character(const CharacterVector& a, const CharacterVector& b) {
  CharacterVector out;
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

CharacterVector induce_character(const FiniteGroup& g, const std::vector<int>& subgroup, const std::vector<Complex>& psi) {
  std::vector<int> pos(std::size_t(g.order()), -1);
  for (std::size_t i = 0; i < subgroup.size(); ++i) pos[std::size_t(subgroup[i])] = int(i);
  CharacterVector out{std::vector<Complex>(std::size_t(g.order()), Complex(0)), std::nullopt};
  for (int a = 0; a < g.order(); ++a) {
    Complex s = 0;
    for (int x = 0; x < g.order(); ++x) {
      int c = g.conjugate(g.inverse(x), a);  // x^{-1} a x
      if (pos[std::size_t(c)] >= 0) s += psi[std::size_t(pos[std::size_t(c)])];
    }
    out.values[std::size_t(a)] = s / double(subgroup.size());
  }
  return out;
}

std::vector<Complex> elementary_from_power_sums(const std::vector<Complex>& p, int n) {
  if (n < 0 || int(p.size()) < n) fail_input("RankMismatch", "not enough power sums");
  std::vector<Complex> e(static_cast<std::size_t>(n + 1), Complex(0));
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Complex s = 0;
    for (int i = 1; i <= k; ++i) s += (i % 2 ? 1.0 : -1.0) * e[std::size_t(k - i)] * p[std::size_t(i - 1)];
    e[std::size_t(k)] = s / double(k);
  }
  return e;
}

Complex exterior_trace(const std::vector<Complex>& power_sums, int n) {
  return elementary_from_power_sums(power_sums, n)[std::size_t(n)];
}

std::vector<Complex> molien_series(const FiniteMatrixGroup& w, const CMatrix& g, int D) {
  if (D < 0) fail_input("InvalidDegree", "degree bound must be nonnegative");
  if (g.rows() != w.dim() || g.cols() != w.dim()) fail_input("RankMismatch", "g acts on a different space");
  CMatrix ginv = g.inverse();
  for (const auto& m : w.elements())
    if (!w.find(g * m * ginv)) fail_input("NormalizationFailure", "g does not normalize W");
  std::vector<Complex> total(static_cast<std::size_t>(D + 1), Complex(0));
  for (const auto& m : w.elements()) {
    std::vector<Complex> inv = series_inverse(det_one_minus(g * m), D);
    for (int d = 0; d <= D; ++d) total[std::size_t(d)] += inv[std::size_t(d)];
  }
  for (auto& c : total) c /= double(w.order());
  return total;
}

std::vector<int> coxeter_numbers(const FiniteMatrixGroup& w) {
  const int n = w.dim();
  std::vector<int> refl;
  for (int i = 1; i < w.order(); ++i)
    if (numeric_rank(w[i] - CMatrix::Identity(n, n)) == 1) refl.push_back(i);
  const int m = int(refl.size());
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[std::size_t(a)] != a) a = parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
    return a;
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const CMatrix& s = w[refl[std::size_t(a)]];
      const CMatrix& t = w[refl[std::size_t(b)]];
      if (!(s * t).isApprox(t * s, 1e-9)) parent[std::size_t(find(a))] = find(b);
    }
  std::map<int, std::vector<int>> comps;
  for (int a = 0; a < m; ++a) comps[find(a)].push_back(refl[std::size_t(a)]);
  std::vector<int> out;
  for (const auto& [root, members] : comps) {
    CMatrix span(n, n * int(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      span.block(0, Eigen::Index(i) * n, n, n) = w[members[i]] - CMatrix::Identity(n, n);
    int r = numeric_rank(span);
    out.push_back(int(2 * members.size()) / r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int default_max_degree(const FiniteMatrixGroup& w) {
  auto h = coxeter_numbers(w);
  return h.empty() ? 1 : 1 + h.back();
}

int GradedCharacter::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<int> GradedCharacter::degrees() const {
  std::vector<int> out;
  for (std::size_t d = 0; d < dims.size(); ++d)
    for (int k = 0; k < dims[d]; ++k) out.push_back(int(d));
  return out;
}

Complex GradedCharacter::total_trace(int i) const {
  Complex s = 0;
  for (auto v : traces[std::size_t(i)]) s += v;
  return s;
}

GradedCharacter extract_E_character(const FiniteMatrixGroup& w, const std::vector<CMatrix>& elements, int D) {
  const int n = w.dim();
  GradedCharacter out;
  out.dims.assign(std::size_t(D + 1), 0);
  const CMatrix id = CMatrix::Identity(n, n);

  // Degrees from the Hilbert series of S(V)^W.
  std::vector<Complex> rest = molien_series(w, id, D);
  int total = 0;
  for (int d = 1; d <= D && total < n; ++d) {
    Rounded m = round_checked(rest[std::size_t(d)], "NonIntegralDimension");
    if (m.value < 0) fail_property("NonIntegralDimension", "negative generator count in degree " + std::to_string(d));
    out.dims[std::size_t(d)] = int(m.value);
    total += int(m.value);
    for (int k = 0; k < m.value; ++k) {
      std::vector<Complex> f(static_cast<std::size_t>(d + 1), Complex(0));
      f[0] = 1;
      f[std::size_t(d)] = -1;
      rest = series_multiply(rest, f, D);
    }
  }
  if (total < n)
    fail_cap("DegreeOverflow", "max degree " + std::to_string(D) + " is too small; need at least " +
                                   std::to_string(default_max_degree(w)));
  if (total > n) fail_property("NonIntegralDimension", "more basic invariants than the dimension");
  for (int d = 1; d <= D; ++d)
    if (std::abs(rest[std::size_t(d)]) > 1e-6) fail_property("NotPolynomial", "invariant ring is not polynomial");

  std::map<std::vector<std::int64_t>, std::vector<Complex>> logs;
  auto log_series = [&](const CMatrix& g) -> const std::vector<Complex>& {
    auto key = matrix_key(g);
    auto it = logs.find(key);
    if (it == logs.end()) it = logs.emplace(key, series_log(molien_series(w, g, D), D)).first;
    return it->second;
  };
  std::map<std::pair<std::vector<std::int64_t>, int>, Complex> memo;
  std::function<Complex(const CMatrix&, int)> trace = [&](const CMatrix& g, int d) -> Complex {
    if (out.dims[std::size_t(d)] == 0) return 0;
    auto key = std::make_pair(matrix_key(g), d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Complex c = log_series(g)[std::size_t(d)];
    CMatrix pw = g;
    for (int m = 2; m <= d; ++m) {
      pw = pw * g;
      if (d % m == 0) c -= trace(pw, d / m) / double(m);
    }
    memo.emplace(key, c);
    return c;
  };

  for (const CMatrix& g : elements) {
    std::vector<Complex> tr(static_cast<std::size_t>(D + 1), Complex(0));
    for (int d = 1; d <= D; ++d) tr[std::size_t(d)] = trace(g, d);
    out.traces.push_back(tr);

    // Rebuild prod_d det(1 - z^d g|E_d)^{-1} from the power sums of g on E_d.
    std::vector<Complex> rebuilt(static_cast<std::size_t>(D + 1), Complex(0));
    rebuilt[0] = 1;
    for (int d = 1; d <= D; ++d) {
      int m = out.dims[std::size_t(d)];
      if (m == 0) continue;
      std::vector<Complex> p;
      CMatrix pw = id;
      for (int k = 1; k <= m; ++k) {
        pw = pw * g;
        p.push_back(trace(pw, d));
      }
      std::vector<Complex> e = elementary_from_power_sums(p, m);
      std::vector<Complex> poly(static_cast<std::size_t>(D + 1), Complex(0));
      for (int k = 0; k <= m && k * d <= D; ++k) poly[std::size_t(k * d)] = (k % 2 ? -1.0 : 1.0) * e[std::size_t(k)];
      rebuilt = series_multiply(rebuilt, series_inverse(poly, D), D);
    }
    std::vector<Complex> direct = molien_series(w, g, D);
    for (int d = 0; d <= D; ++d)
      out.self_check_residual = std::max(out.self_check_residual, std::abs(rebuilt[std::size_t(d)] - direct[std::size_t(d)]));
  }
  return out;
}

}  // namespace ahecke
