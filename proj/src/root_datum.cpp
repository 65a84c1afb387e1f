#include "ahecke/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "ahecke/error.hpp"

namespace ahecke {

namespace {

std::vector<std::int64_t> key_of(const IntVector& v) { return to_std(v); }

IntMatrix cartan_of_type(char letter, int r) {
  IntMatrix c = IntMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) c(i, i) = 2;
  auto link = [&](int i, int j, int cij, int cji) {
    c(i, j) = cij;
    c(j, i) = cji;
  };
  auto bad = [&] { fail_input("RankMismatch", std::string("invalid rank for type ") + letter); };
  switch (letter) {
    case 'A':
      if (r < 1) bad();
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      if (r < 2) bad();
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 2, r - 1, -2, -1);
      break;
    case 'C':
      if (r < 2) bad();
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 2, r - 1, -1, -2);
      break;
    case 'D':
      if (r < 4) bad();
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 3, r - 1, -1, -1);
      break;
    case 'E':
      if (r < 6 || r > 8) bad();
      link(0, 2, -1, -1);
      link(1, 3, -1, -1);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1, -1, -1);
      break;
    case 'F':
      if (r != 4) bad();
      link(0, 1, -1, -1);
      link(1, 2, -2, -1);
      link(2, 3, -1, -1);
      break;
    case 'G':
      if (r != 2) bad();
      link(0, 1, -1, -3);
      break;
    default:
      fail_input("UnknownType", std::string("unknown Cartan type ") + letter);
  }
  return c;
}

struct Factor {
  char letter;  // 'T' for a torus
  int rank;
};

std::vector<Factor> parse_type(const std::string& label) {
  std::vector<Factor> out;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t next = label.find_first_of("xX", pos);
    if (next == std::string::npos) next = label.size();
    std::string part = label.substr(pos, next - pos);
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0])))
      fail_input("UnknownType", "cannot parse type label '" + label + "'");
    char letter = char(std::toupper(static_cast<unsigned char>(part[0])));
    int rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoi(part.substr(1), &used);
      if (used != part.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail_input("UnknownType", "cannot parse type label '" + label + "'");
    }
    if (rank < 1 || rank > 64) fail_input("RankMismatch", "rank out of range in '" + label + "'");
    out.push_back({letter, rank});
    pos = next + 1;
  }
  return out;
}

}  // namespace

RootDatum RootDatum::from_basis(const IntMatrix& simple_roots, const IntMatrix& simple_coroots,
                                std::size_t root_cap) {
  if (simple_roots.rows() != simple_coroots.rows() || simple_roots.cols() != simple_coroots.cols())
    fail_input("RankMismatch", "simple roots and coroots must have the same shape");
  const int n = int(simple_roots.rows());
  const int r = int(simple_roots.cols());
  if (r > n) fail_input("RankMismatch", "more simple roots than the lattice rank");

  RootDatum rd;
  rd.rank_ = n;
  rd.simple_roots_ = simple_roots;
  rd.simple_coroots_ = simple_coroots;
  rd.cartan_ = simple_roots.transpose() * simple_coroots;
  const IntMatrix& C = rd.cartan_;

  for (int i = 0; i < r; ++i) {
    if (C(i, i) != 2) fail_input("NonCrystallographic", "<a_i, a_i^v> != 2 for simple index " + std::to_string(i));
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (C(i, j) > 0 || C(i, j) < -3)
        fail_input("NonCrystallographic", "Cartan integer out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if ((C(i, j) == 0) != (C(j, i) == 0))
        fail_input("NonCrystallographic", "Cartan matrix zero pattern is not symmetric");
    }
  }
  if (r > 0) {
    if (QMatrix::from_int(simple_roots).rank() != r || QMatrix::from_int(simple_coroots).rank() != r)
      fail_input("NonCrystallographic", "simple roots or coroots are linearly dependent");
  }

  // Closure on (root coefficients, coroot coefficients).
  std::map<std::vector<std::int64_t>, IntVector> found;  // root coeffs -> coroot coeffs
  std::deque<std::pair<IntVector, IntVector>> queue;
  for (int i = 0; i < r; ++i) {
    IntVector e = IntVector::Zero(r);
    e(i) = 1;
    found.emplace(key_of(e), e);
    queue.emplace_back(e, e);
  }
  while (!queue.empty()) {
    auto [c, d] = queue.front();
    queue.pop_front();
    for (int j = 0; j < r; ++j) {
      IntVector c2 = c;
      IntVector d2 = d;
      std::int64_t pc = 0, pd = 0;
      for (int i = 0; i < r; ++i) {
        pc += c(i) * C(i, j);
        pd += d(i) * C(j, i);
      }
      c2(j) -= pc;
      d2(j) -= pd;
      auto it = found.find(key_of(c2));
      if (it != found.end()) {
        if (it->second != d2) fail_input("NonCrystallographic", "root closure assigns two coroots to one root");
        continue;
      }
      if (found.size() >= root_cap) fail_input("NonCrystallographic", "root closure exceeded the cap");
      found.emplace(key_of(c2), d2);
      queue.emplace_back(c2, d2);
    }
  }

  std::vector<std::pair<IntVector, IntVector>> positive;
  for (const auto& [k, d] : found) {
    IntVector c = from_std(k);
    bool pos = (c.array() >= 0).all();
    bool neg = (c.array() <= 0).all();
    if (!pos && !neg) fail_input("NonCrystallographic", "generated root with mixed-sign coefficients");
    if ((pos && !(d.array() >= 0).all()) || (neg && !(d.array() <= 0).all()))
      fail_input("NonCrystallographic", "root and coroot positivity disagree");
    if (pos) positive.emplace_back(c, d);
  }
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    auto ha = a.first.sum(), hb = b.first.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(b.first.data(), b.first.data() + b.first.size(), a.first.data(),
                                        a.first.data() + a.first.size());
  });
  if (found.size() != 2 * positive.size()) fail_input("NonCrystallographic", "root system is not symmetric under negation");

  // Components of the Dynkin diagram.
  std::vector<int> comp(std::size_t(r), -1);
  int ncomp = 0;
  for (int i = 0; i < r; ++i) {
    if (comp[std::size_t(i)] >= 0) continue;
    std::vector<int> stack{i};
    comp[std::size_t(i)] = ncomp;
    std::vector<int> members;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      members.push_back(a);
      for (int b = 0; b < r; ++b)
        if (b != a && C(a, b) != 0 && comp[std::size_t(b)] < 0) {
          comp[std::size_t(b)] = ncomp;
          stack.push_back(b);
        }
    }
    std::sort(members.begin(), members.end());
    rd.components_.push_back(members);
    ++ncomp;
  }

  const std::size_t N = positive.size();
  rd.roots_.resize(2 * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::int64_t sign : {std::int64_t(1), std::int64_t(-1)}) {
      Root& rt = rd.roots_[sign > 0 ? i : i + N];
      rt.root_coeffs = sign * positive[i].first;
      rt.coroot_coeffs = sign * positive[i].second;
      rt.root = simple_roots * rt.root_coeffs;
      rt.coroot = simple_coroots * rt.coroot_coeffs;
      rt.positive = sign > 0;
      int support = 0;
      while (support < r && positive[i].first(support) == 0) ++support;
      rt.component = comp[std::size_t(support)];
      rt.coroot_even = (rt.coroot.unaryExpr([](std::int64_t v) { return v % 2; }).array() == 0).all();
      if (rt.root.dot(rt.coroot) != 2) fail_input("NonCrystallographic", "<a, a^v> != 2 for a generated root");
    }
  }
  for (std::size_t i = 0; i < rd.roots_.size(); ++i) rd.root_lookup_.emplace(key_of(rd.roots_[i].root), int(i));
  for (const Root& rt : rd.roots_)
    if (rd.root_lookup_.count(key_of(IntVector(2 * rt.root))))
      fail_input("NonCrystallographic", "root system is not reduced");

  rd.simple_index_.resize(std::size_t(r));
  for (int s = 0; s < r; ++s) rd.simple_index_[std::size_t(s)] = rd.root_lookup_.at(key_of(simple_roots.col(s)));

  // Highest coroot per component.
  rd.highest_coroot_root_.assign(std::size_t(ncomp), -1);
  for (std::size_t i = 0; i < N; ++i) {
    int c = rd.roots_[i].component;
    int& best = rd.highest_coroot_root_[std::size_t(c)];
    if (best < 0 || rd.roots_[i].coroot_coeffs.sum() > rd.roots_[std::size_t(best)].coroot_coeffs.sum()) best = int(i);
  }

  // W0-orbits on roots via simple reflections.
  std::vector<int> parent(rd.roots_.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[std::size_t(a)] == a ? a : parent[std::size_t(a)] = find(parent[std::size_t(a)]); };
  for (int s = 0; s < r; ++s) {
    IntMatrix refl = rd.simple_reflection(s);
    for (std::size_t i = 0; i < rd.roots_.size(); ++i) {
      int j = rd.root_lookup_.at(key_of(refl * rd.roots_[i].root));
      parent[std::size_t(find(int(i)))] = find(j);
    }
  }
  std::map<int, int> relabel;
  rd.root_orbit_.resize(rd.roots_.size());
  for (std::size_t i = 0; i < rd.roots_.size(); ++i) {
    int root = find(int(i));
    auto it = relabel.emplace(root, int(relabel.size())).first;
    rd.root_orbit_[i] = it->second;
  }
  return rd;
}

RootDatum RootDatum::from_type(const std::string& label, LatticeChoice lattice, int central_rank) {
  std::vector<Factor> factors = parse_type(label);
  // Assemble block-diagonal simple roots/coroots.
  std::vector<std::pair<IntMatrix, IntMatrix>> blocks;
  for (const Factor& f : factors) {
    if (f.letter == 'T') {
      blocks.emplace_back(IntMatrix::Zero(f.rank, 0), IntMatrix::Zero(f.rank, 0));
      continue;
    }
    IntMatrix c = cartan_of_type(f.letter, f.rank);
    switch (lattice) {
      case LatticeChoice::Adjoint:
      case LatticeChoice::CentralTorus:
        blocks.emplace_back(IntMatrix::Identity(f.rank, f.rank), c);
        break;
      case LatticeChoice::SimplyConnected:
        blocks.emplace_back(c.transpose(), IntMatrix::Identity(f.rank, f.rank));
        break;
      case LatticeChoice::GL: {
        if (f.letter != 'A') fail_input("UnknownType", "the gl lattice is only defined for type A factors");
        IntMatrix a = IntMatrix::Zero(f.rank + 1, f.rank);
        for (int i = 0; i < f.rank; ++i) {
          a(i, i) = 1;
          a(i + 1, i) = -1;
        }
        blocks.emplace_back(a, a);
        break;
      }
    }
  }
  if (lattice == LatticeChoice::CentralTorus) {
    if (central_rank < 0) fail_input("RankMismatch", "central rank must be nonnegative");
    blocks.emplace_back(IntMatrix::Zero(central_rank, 0), IntMatrix::Zero(central_rank, 0));
  }
  int n = 0, r = 0;
  for (const auto& b : blocks) {
    n += int(b.first.rows());
    r += int(b.first.cols());
  }
  IntMatrix roots = IntMatrix::Zero(n, r), coroots = IntMatrix::Zero(n, r);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    roots.block(ro, co, b.first.rows(), b.first.cols()) = b.first;
    coroots.block(ro, co, b.second.rows(), b.second.cols()) = b.second;
    ro += int(b.first.rows());
    co += int(b.first.cols());
  }
  return from_basis(roots, coroots);
}

std::optional<int> RootDatum::find_root(const IntVector& x) const {
  auto it = root_lookup_.find(key_of(x));
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

IntMatrix RootDatum::reflection(int root_index) const {
  const Root& rt = roots_.at(std::size_t(root_index));
  return IntMatrix::Identity(rank_, rank_) - rt.root * rt.coroot.transpose();
}

NonReducedData derive_nonreduced(const RootDatum& rd) {
  NonReducedData out;
  for (std::size_t i = 0; i < rd.roots().size(); ++i) {
    const Root& rt = rd.roots()[i];
    out.entries.push_back({rt.root, int(i), false, !rt.coroot_even});
    if (rt.coroot_even) out.entries.push_back({IntVector(2 * rt.root), int(i), true, true});
  }
  return out;
}

IntMatrix center_lattice(const RootDatum& rd) {
  if (rd.num_simple() == 0) return IntMatrix::Identity(rd.rank(), rd.rank());
  return integer_kernel(rd.simple_coroots().transpose());
}

SqrtValue rational_sqrt(const Rational& q) {
  SqrtValue out;
  out.value = std::sqrt(q.get_d());
  if (sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    out.exact = Rational(a, b);
    out.exact->canonicalize();
    out.value = out.exact->get_d();
  }
  return out;
}

ParameterFunction ParameterFunction::build(const RootDatum& rd, const std::map<std::string, Rational>& raw) {
  std::map<std::string, Rational> values = raw;
  for (auto& [label, v] : values) v.canonicalize();
  const std::size_t nroots = rd.roots().size();
  const auto& orbit = rd.root_orbit();
  int norbits = 0;
  for (int o : orbit) norbits = std::max(norbits, o + 1);

  // Representative simple index of each orbit (smallest), and whether its coroots are even.
  std::vector<int> rep(std::size_t(norbits), -1);
  std::vector<bool> even(std::size_t(norbits), false);
  for (int s = 0; s < rd.num_simple(); ++s) {
    int o = orbit[std::size_t(rd.simple_root_index(s))];
    if (rep[std::size_t(o)] < 0) rep[std::size_t(o)] = s;
    even[std::size_t(o)] = rd.roots()[std::size_t(rd.simple_root_index(s))].coroot_even;
  }

  std::vector<std::optional<Rational>> qa(static_cast<std::size_t>(norbits));
  std::vector<std::optional<Rational>> qh(static_cast<std::size_t>(norbits));
  auto assign = [](std::optional<Rational>& slot, const Rational& v, const std::string& label) {
    if (slot && *slot != v) fail_input("InvarianceViolation", "conflicting values for the orbit of " + label);
    slot = v;
  };
  auto it_q = values.find("q");
  for (const auto& [label, v] : values) {
    if (sgn(v) <= 0) fail_input("NonPositiveParameter", "parameter " + label + " must be positive");
    if (label == "q") continue;
    if (label.size() < 2 || (label[0] != 'a' && label[0] != 'h'))
      fail_input("OrbitNotCovered", "unknown parameter label " + label);
    int s = -1;
    try {
      s = std::stoi(label.substr(1));
    } catch (const std::exception&) {
      fail_input("OrbitNotCovered", "unknown parameter label " + label);
    }
    if (s < 0 || s >= rd.num_simple()) fail_input("OrbitNotCovered", "parameter label out of range: " + label);
    int o = orbit[std::size_t(rd.simple_root_index(s))];
    if (label[0] == 'a') {
      assign(qa[std::size_t(o)], v, label);
    } else {
      if (!even[std::size_t(o)])
        fail_input("OrbitNotCovered", "label " + label + " names a half coroot that is not in Y");
      assign(qh[std::size_t(o)], v, label);
    }
  }
  for (int o = 0; o < norbits; ++o) {
    if (it_q != values.end()) {
      if (!qa[std::size_t(o)]) qa[std::size_t(o)] = it_q->second;
      if (even[std::size_t(o)] && !qh[std::size_t(o)]) qh[std::size_t(o)] = Rational(1);
    }
    if (!qa[std::size_t(o)]) fail_input("OrbitNotCovered", "no value for orbit a" + std::to_string(rep[std::size_t(o)]));
    if (even[std::size_t(o)] && !qh[std::size_t(o)])
      fail_input("OrbitNotCovered", "no value for orbit h" + std::to_string(rep[std::size_t(o)]));
  }

  ParameterFunction pf;
  pf.q_coroot_.resize(nroots);
  pf.q_half_.resize(nroots);
  pf.has_half_.resize(nroots);
  for (std::size_t i = 0; i < nroots; ++i) {
    int o = orbit[i];
    pf.q_coroot_[i] = *qa[std::size_t(o)];
    pf.has_half_[i] = rd.roots()[i].coroot_even;
    pf.q_half_[i] = pf.has_half_[i] ? *qh[std::size_t(o)] : Rational(1);
  }
  for (int o = 0; o < norbits; ++o) {
    pf.labels_["a" + std::to_string(rep[std::size_t(o)])] = *qa[std::size_t(o)];
    if (even[std::size_t(o)]) pf.labels_["h" + std::to_string(rep[std::size_t(o)])] = *qh[std::size_t(o)];
  }
  return pf;
}

ParameterFunction ParameterFunction::equal(const RootDatum& rd, const Rational& q) {
  return build(rd, {{"q", q}});
}

Rational ParameterFunction::q_reflection(int root) const {
  std::size_t i = std::size_t(root);
  return has_half_[i] ? Rational(q_half_[i] * q_coroot_[i]) : q_coroot_[i];
}

bool ParameterFunction::all_equal_to_one() const {
  for (std::size_t i = 0; i < q_coroot_.size(); ++i)
    if (q_coroot_[i] != 1 || q_half_[i] != 1) return false;
  return true;
}

bool ParameterFunction::is_equal_parameter() const {
  for (std::size_t i = 0; i < q_coroot_.size(); ++i) {
    if (q_half_[i] != 1) return false;
    if (q_coroot_[i] != q_coroot_[0]) return false;
  }
  return true;
}

ParabolicData parabolic_data(const RootDatum& rd, const std::vector<int>& subset) {
  const int n = rd.rank();
  std::vector<int> P = subset;
  std::sort(P.begin(), P.end());
  P.erase(std::unique(P.begin(), P.end()), P.end());
  for (int s : P)
    if (s < 0 || s >= rd.num_simple()) fail_input("InvalidSubset", "P contains an index outside F0");
  const int p = int(P.size());

  IntMatrix roots(n, p), coroots(n, p);
  for (int j = 0; j < p; ++j) {
    roots.col(j) = rd.simple_roots().col(P[std::size_t(j)]);
    coroots.col(j) = rd.simple_coroots().col(P[std::size_t(j)]);
  }

  ParabolicData pd;
  pd.subset = P;
  std::set<int> pset(P.begin(), P.end());
  for (std::size_t i = 0; i < rd.roots().size(); ++i) {
    const IntVector& c = rd.roots()[i].root_coeffs;
    bool inside = true;
    for (int s = 0; s < c.size(); ++s)
      if (c(s) != 0 && !pset.count(s)) inside = false;
    if (inside) pd.roots_in_P.push_back(int(i));
  }

  if (p == 0) {
    pd.x_lower_kernel = IntMatrix::Identity(n, n);
    pd.x_upper_span = IntMatrix::Zero(n, 0);
    pd.x_lower_projection = IntMatrix::Zero(0, n);
    pd.x_upper_projection = IntMatrix::Identity(n, n);
    pd.x_upper_lifts = IntMatrix::Identity(n, n);
    pd.y_lower_basis = IntMatrix::Zero(n, 0);
    pd.y_upper_basis = IntMatrix::Identity(n, n);
  } else {
    pd.x_lower_kernel = integer_kernel(coroots.transpose());
    pd.x_upper_span = saturate(roots);
    pd.x_lower_projection = quotient_projection(coroots.transpose());
    pd.y_lower_basis = pd.x_lower_projection.transpose();
    pd.y_upper_basis = integer_kernel(roots.transpose());
    if (pd.y_upper_basis.cols() == 0) {
      pd.x_upper_projection = IntMatrix::Zero(0, n);
      pd.x_upper_lifts = IntMatrix::Zero(n, 0);
    } else {
      SmithForm sf = smith_normal_form(pd.y_upper_basis.transpose());
      int r = sf.rank();
      pd.x_upper_projection = sf.Vinv.topRows(r);
      pd.x_upper_lifts = sf.V.leftCols(r);
    }
  }

  // R_P on X_P with coroots expressed in the basis of Y_P dual to the projection.
  IntMatrix lower_roots = pd.x_lower_projection * roots;
  IntMatrix lower_coroots(p, p);
  QMatrix yb = QMatrix::from_int(pd.y_lower_basis);
  for (int j = 0; j < p; ++j) {
    std::vector<Rational> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b[std::size_t(i)] = Rational(coroots(i, j));
    auto sol = yb.solve(b);
    if (!sol) fail_property("LatticeFailure", "coroot of P outside Y_P");
    for (int i = 0; i < p; ++i) {
      const Rational& v = (*sol)[std::size_t(i)];
      if (v.get_den() != 1) fail_property("LatticeFailure", "coroot of P not integral in Y_P");
      lower_coroots(i, j) = v.get_num().get_si();
    }
  }
  pd.lower_datum = RootDatum::from_basis(lower_roots, lower_coroots);
  pd.upper_datum = RootDatum::from_basis(roots, coroots);
  return pd;
}

LatticeChoice parse_lattice_choice(const std::string& s) {
  if (s == "adjoint") return LatticeChoice::Adjoint;
  if (s == "simply-connected" || s == "simply_connected" || s == "sc") return LatticeChoice::SimplyConnected;
  if (s == "gl") return LatticeChoice::GL;
  if (s == "central-torus" || s == "central_torus" || s == "product-with-central-torus")
    return LatticeChoice::CentralTorus;
  fail_input("UnknownLattice", "unknown lattice choice '" + s + "'");
}

}  // namespace ahecke
