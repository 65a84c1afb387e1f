#include "ahecke/ext_ep.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "ahecke/error.hpp"

namespace ahecke {

namespace {

void check_length(const FiniteGroup& g, const CharacterVector& c) {
  if (int(c.values.size()) != g.order()) fail_input("RankMismatch", "character length differs from the group order");
}

Complex det_one_minus(const CMatrix& m) {
  if (m.rows() == 0) return 1.0;
  return (CMatrix::Identity(m.rows(), m.cols()) - m).determinant();
}

}  // namespace

std::int64_t ExtProfile::ep() const {
  std::int64_t s = 0;
  for (std::size_t n = 0; n < dims.size(); ++n) s += (n % 2 ? -1 : 1) * dims[n];
  return s;
}

ExtProfile ext_dims(const FiniteGroup& g, const std::vector<Complex>& e_trace, int dim_e, const CharacterVector& chi,
                    const CharacterVector& chip) {
  check_length(g, chi);
  check_length(g, chip);
  if (int(e_trace.size()) != g.order()) fail_input("RankMismatch", "E character length differs from the group order");
  CharacterVector prod = product_character(g, chi, chip);
  std::vector<Complex> raw(static_cast<std::size_t>(dim_e + 1), Complex(0));
  for (int r = 0; r < g.order(); ++r) {
    std::vector<Complex> p;  // power sums of r on E*
    int pw = r;
    for (int k = 1; k <= dim_e; ++k) {
      p.push_back(std::conj(e_trace[std::size_t(pw)]));
      pw = g.multiply(pw, r);
    }
    std::vector<Complex> e = elementary_from_power_sums(p, dim_e);
    for (int n = 0; n <= dim_e; ++n) raw[std::size_t(n)] += prod.values[std::size_t(r)] * e[std::size_t(n)];
  }
  ExtProfile out;
  for (int n = 0; n <= dim_e; ++n) {
    Complex v = raw[std::size_t(n)] / double(g.order());
    out.alternating_raw += (n % 2 ? -1.0 : 1.0) * v;
    Rounded rd = round_checked(v, "NonIntegralDimension");
    if (rd.value < 0) fail_property("NonIntegralDimension", "negative Ext dimension in degree " + std::to_string(n));
    out.dims.push_back(rd.value);
    out.residuals.push_back(rd.residual);
  }
  return out;
}

GradedCharacter e_character(const RGroupData& rg, std::optional<int> max_degree) {
  FiniteMatrixGroup w = FiniteMatrixGroup::from_elements(rg.tangent_matrices(rg.weyl));
  int D = max_degree ? *max_degree : default_max_degree(w);
  return extract_E_character(w, rg.tangent_matrices(rg.rgroup), D);
}

ExtProfile ext_dims(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg, const GradedCharacter& e,
                    const CharacterVector& chi, const CharacterVector& chip) {
  FiniteGroup g = rg.rgroup_table(w0, kg);
  if (int(e.traces.size()) != g.order()) fail_input("RankMismatch", "E character does not cover the R-group");
  std::vector<Complex> tr;
  for (int i = 0; i < g.order(); ++i) tr.push_back(e.total_trace(i));
  return ext_dims(g, tr, e.total_dim(), chi, chip);
}

PairingValue ep_arthur(const FiniteGroup& g, const std::vector<CMatrix>& tangent, const CharacterVector& chi,
                       const CharacterVector& chip) {
  check_length(g, chi);
  check_length(g, chip);
  if (int(tangent.size()) != g.order()) fail_input("RankMismatch", "one tangent matrix per element is needed");
  CharacterVector prod = product_character(g, chi, chip);
  Complex s = 0;
  for (int r = 0; r < g.order(); ++r) {
    Complex d = det_one_minus(tangent[std::size_t(r)]);
    if (d.real() < -1e-9 || std::abs(d.imag()) > 1e-9)
      fail_property("NegativeDeterminant", "det(1 - r) on the tangent space is not a nonnegative real");
    s += d * prod.values[std::size_t(r)];
  }
  PairingValue out;
  out.raw = s / double(g.order());
  Rounded rd = round_checked(out.raw, "NonIntegralValue");
  out.value = rd.value;
  out.residual = rd.residual;
  return out;
}

PairingValue ep_arthur(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg, const CharacterVector& chi,
                       const CharacterVector& chip) {
  return ep_arthur(rg.rgroup_table(w0, kg), rg.tangent_matrices(rg.rgroup), chi, chip);
}

EllipticValue elliptic_pairing(const FiniteMatrixGroup& g, const CharacterVector& chi, const CharacterVector& chip) {
  const FiniteGroup& ab = g.group();
  check_length(ab, chi);
  check_length(ab, chip);
  if (!chi.linear() || !chip.linear()) fail_input("CocycleMismatch", "elliptic pairing needs linear characters");
  EllipticValue out;
  for (int i = 0; i < g.order(); ++i) {
    Complex d = det_one_minus(g[i]);
    if (std::abs(d) > 1e-9) out.elliptic.push_back(i);
    out.value += d * chi.values[std::size_t(i)] * std::conj(chip.values[std::size_t(i)]);
  }
  out.value /= double(g.order());
  return out;
}

PairingReport gram_report(const CMatrix& gram, double tolerance, bool strict) {
  PairingReport rep;
  rep.gram = gram;
  const int n = int(gram.rows());
  if (gram.cols() != n) fail_input("RankMismatch", "Gram matrix must be square");
  rep.hermitian_residual = n == 0 ? 0.0 : (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  if (strict && rep.hermitian_residual > tolerance)
    fail_property("NotHermitian", "Gram matrix is not Hermitian (residual " + std::to_string(rep.hermitian_residual) + ")");
  if (n == 0) return rep;
  CMatrix herm = (gram + gram.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  rep.eigenvalues = es.eigenvalues();
  rep.min_eigenvalue = rep.eigenvalues.minCoeff();
  if (strict && rep.min_eigenvalue < -tolerance)
    fail_property("NotPositiveSemidefinite", "Gram matrix has eigenvalue " + std::to_string(rep.min_eigenvalue));
  for (int i = 0; i < n; ++i) {
    if (std::abs(rep.eigenvalues(i)) > tolerance)
      ++rep.rank;
    else
      rep.radical.push_back(es.eigenvectors().col(i));
  }
  return rep;
}

PairingReport ep_gram(const FiniteGroup& g, const std::vector<CMatrix>& tangent, const std::vector<CharacterVector>& chars,
                      double tolerance) {
  const int n = int(chars.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ep_arthur(g, tangent, chars[std::size_t(i)], chars[std::size_t(j)]).raw;
  return gram_report(m, tolerance);
}

PairingReport ep_group_algebra(const FiniteMatrixGroup& w, const std::vector<CharacterVector>& chars, double tolerance) {
  const int n = int(chars.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = elliptic_pairing(w, chars[std::size_t(i)], chars[std::size_t(j)]).value;
  return gram_report(m, tolerance);
}

}  // namespace ahecke
