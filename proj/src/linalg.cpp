#include "ahecke/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "ahecke/error.hpp"

namespace ahecke {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) fail_input("BadRational", "empty rational literal");
  if (s[0] == '+') s.erase(s.begin());
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    fail_input("BadRational", "cannot parse rational '" + text + "'");
  Rational q;
  q.get_num() = mpz_class(num);
  q.get_den() = mpz_class(den);
  if (q.get_den() == 0) fail_input("BadRational", "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::vector<std::int64_t> to_std(const IntVector& v) {
  return std::vector<std::int64_t>(v.data(), v.data() + v.size());
}

IntVector from_std(const std::vector<std::int64_t>& v) {
  IntVector r(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) r(Eigen::Index(i)) = v[i];
  return r;
}

std::vector<std::int64_t> flatten(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  out.reserve(std::size_t(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail_cap("IntegerOverflow", "64-bit overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail_cap("IntegerOverflow", "64-bit overflow in lattice arithmetic");
  return r;
}

// ---------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_int(const IntMatrix& a) {
  QMatrix m(int(a.rows()), int(a.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = Rational(static_cast<long>(a(r, c)));
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  QMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<int> row_reduce(QMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (int c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int QMatrix::rank() const {
  QMatrix c = *this;
  return int(row_reduce(c).size());
}

QMatrix QMatrix::kernel() const {
  QMatrix red = *this;
  auto piv = row_reduce(red);
  std::vector<int> free_cols;
  for (int c = 0, p = 0; c < cols_; ++c) {
    if (p < int(piv.size()) && piv[p] == c) { ++p; continue; }
    free_cols.push_back(c);
  }
  QMatrix k(cols_, int(free_cols.size()));
  for (int j = 0; j < int(free_cols.size()); ++j) {
    int f = free_cols[j];
    k(f, j) = 1;
    for (int i = 0; i < int(piv.size()); ++i) k(piv[i], j) = -red(i, f);
  }
  return k;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      aug(i, j) = (*this)(i, j);
      aug(i, n + j) = (i == j) ? 1 : 0;
    }
  auto piv = row_reduce(aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[std::size_t(i)];
  }
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Rational> x(std::size_t(cols_), Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[std::size_t(piv[i])] = aug(int(i), cols_);
  return x;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(std::size_t(rows_), Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[std::size_t(i)] += (*this)(i, j) * v[std::size_t(j)];
  return out;
}

bool QMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntMatrix QMatrix::to_int() const {
  IntMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rational& q = (*this)(i, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        fail_property("NonIntegralMatrix", "expected an integral matrix");
      m(i, j) = q.get_num().get_si();
    }
  return m;
}

Eigen::MatrixXd QMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_d();
  return m;
}

// ------------------------------------------------------------ Smith form

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct SmithWork {
  IntMatrix A, U, Uinv, V, Vinv;

  // row_i += f * row_j
  void add_row(int i, int j, std::int64_t f) {
    for (Eigen::Index c = 0; c < A.cols(); ++c) A(i, c) = checked_add(A(i, c), checked_mul(f, A(j, c)));
    for (Eigen::Index c = 0; c < U.cols(); ++c) U(i, c) = checked_add(U(i, c), checked_mul(f, U(j, c)));
    // Uinv: right-multiply by inverse elementary matrix, col_j -= f * col_i
    for (Eigen::Index r = 0; r < Uinv.rows(); ++r)
      Uinv(r, j) = checked_add(Uinv(r, j), -checked_mul(f, Uinv(r, i)));
  }
  void add_col(int i, int j, std::int64_t f) {
    for (Eigen::Index r = 0; r < A.rows(); ++r) A(r, i) = checked_add(A(r, i), checked_mul(f, A(r, j)));
    for (Eigen::Index r = 0; r < V.rows(); ++r) V(r, i) = checked_add(V(r, i), checked_mul(f, V(r, j)));
    for (Eigen::Index c = 0; c < Vinv.cols(); ++c)
      Vinv(j, c) = checked_add(Vinv(j, c), -checked_mul(f, Vinv(i, c)));
  }
  void swap_rows(int i, int j) {
    if (i == j) return;
    A.row(i).swap(A.row(j));
    U.row(i).swap(U.row(j));
    Uinv.col(i).swap(Uinv.col(j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    A.col(i).swap(A.col(j));
    V.col(i).swap(V.col(j));
    Vinv.row(i).swap(Vinv.row(j));
  }
  void negate_row(int i) {
    A.row(i) *= -1;
    U.row(i) *= -1;
    Uinv.col(i) *= -1;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = int(a.rows());
  const int n = int(a.cols());
  SmithWork w{a, IntMatrix::Identity(m, m), IntMatrix::Identity(m, m), IntMatrix::Identity(n, n),
              IntMatrix::Identity(n, n)};
  int s = 0;
  while (s < std::min(m, n)) {
    // Pivot: smallest nonzero absolute value in the lower-right block.
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int i = s; i < m; ++i)
      for (int j = s; j < n; ++j) {
        std::int64_t v = w.A(i, j) < 0 ? -w.A(i, j) : w.A(i, j);
        if (v != 0 && (best == 0 || v < best)) { best = v; pr = i; pc = j; }
      }
    if (pr < 0) break;
    w.swap_rows(s, pr);
    w.swap_cols(s, pc);
    bool clean = true;
    for (int i = s + 1; i < m; ++i) {
      std::int64_t q = floor_div(w.A(i, s), w.A(s, s));
      if (q != 0) w.add_row(i, s, -q);
      if (w.A(i, s) != 0) clean = false;
    }
    for (int j = s + 1; j < n; ++j) {
      std::int64_t q = floor_div(w.A(s, j), w.A(s, s));
      if (q != 0) w.add_col(j, s, -q);
      if (w.A(s, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility of the remaining block by the pivot.
    int bad = -1;
    for (int i = s + 1; i < m && bad < 0; ++i)
      for (int j = s + 1; j < n; ++j)
        if (w.A(i, j) % w.A(s, s) != 0) { bad = i; break; }
    if (bad >= 0) {
      w.add_row(s, bad, 1);
      continue;
    }
    if (w.A(s, s) < 0) w.negate_row(s);
    ++s;
  }
  SmithForm f{w.U, w.Uinv, w.V, w.Vinv, {}};
  for (int i = 0; i < std::min(m, n); ++i)
    if (w.A(i, i) != 0) f.divisors.push_back(w.A(i, i));
  return f;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const int n = int(a.cols());
  if (a.rows() == 0) return IntMatrix::Identity(n, n);
  SmithForm f = smith_normal_form(a);
  int r = f.rank();
  return f.V.rightCols(n - r);
}

IntMatrix quotient_projection(const IntMatrix& a) {
  const int n = int(a.cols());
  if (a.rows() == 0) return IntMatrix(0, n);
  SmithForm f = smith_normal_form(a);
  return f.Vinv.topRows(f.rank());
}

IntMatrix saturate(const IntMatrix& s) {
  const int n = int(s.rows());
  if (s.cols() == 0) return IntMatrix(n, 0);
  SmithForm f = smith_normal_form(s);
  return f.Uinv.leftCols(f.rank());
}

std::int64_t FiniteQuotient::order() const {
  std::int64_t o = 1;
  for (auto d : divisors) o = checked_mul(o, d);
  return o;
}

FiniteQuotient finite_quotient(const IntMatrix& s, int ambient_dim) {
  FiniteQuotient q;
  if (ambient_dim == 0) {
    q.coordinate_rows = IntMatrix(0, 0);
    q.generator_lifts = IntMatrix(0, 0);
    return q;
  }
  if (s.cols() == 0) fail_input("InfiniteQuotient", "quotient lattice is not finite");
  SmithForm f = smith_normal_form(s);
  if (f.rank() < ambient_dim) fail_input("InfiniteQuotient", "quotient lattice is not finite");
  std::vector<int> rows;
  for (int i = 0; i < f.rank(); ++i)
    if (f.divisors[std::size_t(i)] > 1) {
      q.divisors.push_back(f.divisors[std::size_t(i)]);
      rows.push_back(i);
    }
  q.coordinate_rows = IntMatrix(Eigen::Index(rows.size()), ambient_dim);
  q.generator_lifts = IntMatrix(ambient_dim, Eigen::Index(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    q.coordinate_rows.row(Eigen::Index(i)) = f.U.row(rows[i]);
    q.generator_lifts.col(Eigen::Index(i)) = f.Uinv.col(rows[i]);
  }
  return q;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace ahecke
