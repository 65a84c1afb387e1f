#include "ahecke/json_io.hpp"

#include <cmath>
#include <fstream>

#include "ahecke/error.hpp"

namespace ahecke::io {

namespace {

[[noreturn]] void schema(const std::string& msg) { fail_input("SchemaError", msg); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

double clean(double x) { return std::abs(x) < 1e-13 ? 0.0 : x; }

std::vector<Rational> rationals(const json& j, int expected, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(to_rational(e));
  if (expected >= 0 && int(out.size()) != expected)
    fail_input("RankMismatch", std::string(what) + " has " + std::to_string(out.size()) + " entries, expected " +
                                   std::to_string(expected));
  return out;
}

Complex to_complex(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) return {e[0].get<double>(), e[1].get<double>()};
  schema("complex entries are numbers or [re, im]");
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) schema(std::string(what) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<CMatrix> matrix_list(const json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array of matrices");
  std::vector<CMatrix> out;
  for (const auto& m : j) out.push_back(to_cmatrix(m));
  return out;
}

}  // namespace

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("FileNotFound", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    schema(path + ": " + e.what());
  }
}

Rational to_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  schema("rationals are written as \"p/q\" strings or integers");
}

json from_rational(const Rational& q) { return to_string(q); }

RootDatum to_datum(const json& doc) {
  const json& d = doc.contains("datum") ? doc.at("datum") : doc;
  if (d.contains("type")) {
    std::string lattice = d.value("lattice", "adjoint");
    return RootDatum::from_type(member(d, "type").get<std::string>(), parse_lattice_choice(lattice),
                                d.value("central_rank", 1));
  }
  const int rank = member(d, "rank").get<int>();
  auto columns = [&](const char* key) {
    const json& rows = member(d, key);
    if (!rows.is_array()) schema(std::string(key) + " must be a list of vectors");
    IntMatrix m(rank, int(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (!rows[c].is_array() || int(rows[c].size()) != rank)
        fail_input("RankMismatch", std::string(key) + " entries must have length rank");
      for (int r = 0; r < rank; ++r) m(r, int(c)) = rows[c][std::size_t(r)].get<std::int64_t>();
    }
    return m;
  };
  return RootDatum::from_basis(columns("simple_roots"), columns("simple_coroots"));
}

ParameterFunction to_parameters(const RootDatum& rd, const json& doc) {
  const json& d = doc.contains("datum") ? doc.at("datum") : doc;
  if (!d.contains("parameters")) return ParameterFunction::equal(rd, Rational(1));
  std::map<std::string, Rational> values;
  for (const auto& [k, v] : d.at("parameters").items()) values[k] = to_rational(v);
  return ParameterFunction::build(rd, values);
}

TorusPoint to_torus(const json& j, int rank) {
  if (!j.is_object()) schema("torus points are objects with \"lambda\" and \"theta\"");
  std::vector<Rational> zero(static_cast<std::size_t>(rank));
  std::vector<Rational> lambda = j.contains("lambda") ? rationals(j.at("lambda"), rank, "lambda") : zero;
  std::vector<Rational> theta = j.contains("theta") ? rationals(j.at("theta"), rank, "theta") : zero;
  return TorusPoint(std::move(lambda), std::move(theta), j.value("log_unit", 1.0));
}

json from_torus(const TorusPoint& t) {
  json l = json::array(), th = json::array();
  for (const auto& q : t.lambda()) l.push_back(from_rational(q));
  for (const auto& q : t.theta()) th.push_back(from_rational(q));
  return {{"lambda", l}, {"theta", th}};
}

InductionDatum to_induction(const json& j, int rank) {
  InductionDatum xi;
  xi.P = j.contains("P") ? int_list(j.at("P"), "P") : std::vector<int>{};
  if (j.contains("delta")) {
    const json& d = j.at("delta");
    xi.delta.name = d.value("name", std::string("triv"));
    xi.delta.dim = d.value("dim", 1);
    if (d.contains("cc")) xi.delta.cc = to_torus(d.at("cc"), rank);
  }
  xi.t = to_torus(member(j, "t"), rank);
  return xi;
}

json from_induction(const InductionDatum& xi) {
  json d = {{"name", xi.delta.name}, {"dim", xi.delta.dim}};
  if (xi.delta.cc) d["cc"] = from_torus(*xi.delta.cc);
  return {{"P", xi.P}, {"delta", d}, {"t", from_torus(xi.t)}};
}

MirrorSpec to_mirror(const json& j, int rank) {
  MirrorSpec m;
  m.Q = int_list(member(j, "Q"), "Q");
  if (j.contains("alpha_QP")) m.alpha_QP = rationals(j.at("alpha_QP"), -1, "alpha_QP");
  m.c_angle = to_rational(member(j, "c_angle"));
  m.base = to_torus(member(j, "base"), rank);
  return m;
}

json from_mirror(const MirrorSpec& m) {
  json a = json::array();
  for (const auto& q : m.alpha_QP) a.push_back(from_rational(q));
  return {{"Q", m.Q}, {"alpha_QP", a}, {"c_angle", from_rational(m.c_angle)}, {"base", from_torus(m.base)}};
}

CMatrix to_cmatrix(const json& j) {
  if (!j.is_array()) schema("matrices are arrays of rows");
  const int rows = int(j.size());
  const int cols = rows ? int(j[0].size()) : 0;
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[std::size_t(r)].is_array() || int(j[std::size_t(r)].size()) != cols) schema("matrix rows differ in length");
    for (int c = 0; c < cols; ++c) m(r, c) = to_complex(j[std::size_t(r)][std::size_t(c)]);
  }
  return m;
}

json from_complex(Complex z) { return json::array({clean(z.real()), clean(z.imag())}); }

json from_cmatrix(const CMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(from_complex(m(r, c)));
    out.push_back(row);
  }
  return out;
}

IntMatrix to_imatrix(const json& j) {
  if (!j.is_array()) schema("integer matrices are arrays of rows");
  const int rows = int(j.size());
  const int cols = rows ? int(j[0].size()) : 0;
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[std::size_t(r)].is_array() || int(j[std::size_t(r)].size()) != cols) schema("matrix rows differ in length");
    for (int c = 0; c < cols; ++c) {
      const json& e = j[std::size_t(r)][std::size_t(c)];
      if (!e.is_number_integer()) schema("integer matrix entries must be integers");
      m(r, c) = e.get<std::int64_t>();
    }
  }
  return m;
}

json from_imatrix(const IntMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

CharacterVector to_character(const json& j, int order) {
  CharacterVector c;
  for (const auto& v : member(j, "values")) c.values.push_back(to_complex(v));
  if (int(c.values.size()) != order)
    fail_input("RankMismatch", "character has " + std::to_string(c.values.size()) + " values, group order is " +
                                   std::to_string(order));
  if (j.contains("cocycle") && !(j.at("cocycle").is_string() && j.at("cocycle") == "trivial")) {
    std::vector<std::vector<Complex>> kappa;
    for (const auto& row : j.at("cocycle")) {
      std::vector<Complex> r;
      for (const auto& e : row) r.push_back(to_complex(e));
      if (int(r.size()) != order) schema("cocycle table must be |G| x |G|");
      kappa.push_back(std::move(r));
    }
    if (int(kappa.size()) != order) schema("cocycle table must be |G| x |G|");
    c.cocycle = std::move(kappa);
  }
  return c;
}

json from_character(const CharacterVector& c) {
  json v = json::array();
  for (auto z : c.values) v.push_back(from_complex(z));
  json out = {{"values", v}};
  if (!c.cocycle) {
    out["cocycle"] = "trivial";
  } else {
    json t = json::array();
    for (const auto& row : *c.cocycle) {
      json r = json::array();
      for (auto z : row) r.push_back(from_complex(z));
      t.push_back(r);
    }
    out["cocycle"] = t;
  }
  return out;
}

HeckeElement to_element(const HeckeAlgebra& h, const json& j) {
  const WeylGroup& w0 = h.affine().finite();
  const int n = h.affine().rank();
  HeckeElement e = h.zero();
  for (const auto& term : member(j, "terms")) {
    std::vector<std::int64_t> x;
    for (const auto& v : member(term, "x")) x.push_back(v.get<std::int64_t>());
    if (int(x.size()) != n) fail_input("RankMismatch", "term x has the wrong rank");
    int w = 0;
    if (term.contains("w")) {
      IntMatrix m = to_imatrix(term.at("w"));
      if (m.rows() != n || m.cols() != n) fail_input("RankMismatch", "term w has the wrong size");
      auto f = w0.find(m);
      if (!f) fail_input("NotInW0", "term w is not an element of W0");
      w = *f;
    }
    e.add({from_std(x), w}, Complex(term.value("re", 0.0), term.value("im", 0.0)));
  }
  return e;
}

json from_element(const HeckeAlgebra& h, const HeckeElement& e) {
  const WeylGroup& w0 = h.affine().finite();
  json terms = json::array();
  for (const auto& [g, c] : e.terms()) {
    if (std::abs(c) < 1e-13) continue;
    terms.push_back({{"x", to_std(g.x)},
                     {"w", from_imatrix(w0.matrix(g.w))},
                     {"word", w0[g.w].word},
                     {"length", h.affine().length(g)},
                     {"re", clean(c.real())},
                     {"im", clean(c.imag())}});
  }
  return {{"terms", terms}};
}

KoszulProblem to_koszul(const json& j) {
  std::vector<CMatrix> g = matrix_list(member(j, "group"), "group");
  std::vector<CMatrix> e = matrix_list(member(j, "E_action"), "E_action");
  std::vector<CMatrix> v = matrix_list(member(j, "V"), "V");
  std::vector<CMatrix> vp = matrix_list(member(j, "Vprime"), "Vprime");
  auto dim_of = [&](const std::vector<CMatrix>& ms, const char* key) {
    if (!ms.empty()) return int(ms[0].rows());
    if (!j.contains(key)) schema(std::string("no generators: give \"") + key + "\"");
    return j.at(key).get<int>();
  };
  const int dg = dim_of(g, "dim_group"), de = dim_of(e, "dim_E"), dv = dim_of(v, "dim_V"), dvp = dim_of(vp, "dim_Vprime");
  const int n_max = j.contains("n_max") ? j.at("n_max").get<int>() : de;
  KoszulProblem p = KoszulProblem::from_generators(g, e, v, vp, n_max, dg, de, dv, dvp);
  if (j.contains("module")) p.vprime_module = matrix_list(j.at("module"), "module");
  return p;
}

json from_rgroup(const WeylGroup& w0, const KGroup& kg, const RGroupData& rg) {
  json arrows = json::array();
  for (const auto& a : rg.stab.arrows)
    arrows.push_back({{"w", w0[a.w].word}, {"k", a.k}, {"k_point", from_torus(kg.point(a.k))}, {"tangent", from_imatrix(a.tangent)}});
  json mirrors = json::array();
  for (const auto& m : rg.mirrors) mirrors.push_back(from_mirror(m));
  json roots = json::array();
  for (const auto& r : rg.positive_roots) {
    json c = json::array();
    for (const auto& q : r) c.push_back(from_rational(q));
    roots.push_back(c);
  }
  FiniteGroup table = rg.rgroup_table(w0, kg);
  return {{"xi", from_induction(rg.xi)},
          {"stabilizer", arrows},
          {"tangent_basis", from_imatrix(rg.stab.tangent_basis)},
          {"mirrors", mirrors},
          {"positive_roots", roots},
          {"reflections", rg.reflections},
          {"weyl", rg.weyl},
          {"rgroup", rg.rgroup},
          {"order_stabilizer", rg.stab.arrows.size()},
          {"order_weyl", rg.weyl.size()},
          {"order_rgroup", rg.rgroup.size()},
          {"rgroup_table", table.table()}};
}

}  // namespace ahecke::io
