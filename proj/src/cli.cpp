#include "ahecke/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <optional>
#include <random>

#include "ahecke/error.hpp"
#include "ahecke/json_io.hpp"

namespace ahecke::cli {

namespace {

using io::json;

struct Flags {
  double tolerance = 1e-8;
  std::size_t cap = 100000;
  std::optional<int> max_degree;
  std::string output;
};

struct Inputs {
  std::string datum, package, mirrors, input, left, right, problem, x, parabolic;
  int random = 0;
  std::uint64_t seed = 1;
};

json load(const std::string& path, const char* flag) {
  if (path.empty()) fail_input("MissingInput", std::string("this command needs ") + flag);
  return io::read_file(path);
}

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::logic_error&) {
      fail_input("SchemaError", "not an integer list: " + s);
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '[' || c == ']')
      flush();
    else
      cur.push_back(c);
  }
  flush();
  return out;
}

/// A computed induction datum with everything that refers to it.
struct Package {
  json doc;
  RootDatum rd;
  ParameterFunction q;
  std::optional<WeylGroup> w0;
  std::optional<KGroup> kg;
  InductionDatum xi;
  RGroupData rg;
  std::vector<CharacterVector> chars;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;

  int order() const { return int(rg.rgroup.size()); }
};

std::vector<MirrorSpec> parse_catalog(const json& j, int rank) {
  const json& list = j.is_object() && j.contains("mirrors") ? j.at("mirrors") : j;
  if (!list.is_array()) fail_input("SchemaError", "mirror catalog must be an array");
  std::vector<MirrorSpec> out;
  for (const auto& m : list) out.push_back(io::to_mirror(m, rank));
  return out;
}

Package load_package(const json& doc, const Flags& f, const std::string& mirrors_path) {
  Package p{doc, io::to_datum(doc), ParameterFunction::equal(io::to_datum(doc), Rational(1)), {}, {}, {}, {}, {}, {}, {}};
  p.q = io::to_parameters(p.rd, doc);
  p.w0.emplace(p.rd, f.cap);
  if (!doc.contains("xi")) fail_input("SchemaError", "package needs an induction datum \"xi\"");
  p.xi = io::to_induction(doc.at("xi"), p.rd.rank());
  p.kg.emplace(p.rd, p.xi.P);

  std::optional<std::vector<MirrorSpec>> catalog;
  if (!mirrors_path.empty())
    catalog = parse_catalog(io::read_file(mirrors_path), p.rd.rank());
  else if (doc.contains("mirrors"))
    catalog = parse_catalog(doc.at("mirrors"), p.rd.rank());
  if (!catalog) {
    if (!p.xi.P.empty()) fail_input("MissingMirrors", "P is not empty: supply a mirror catalog");
    catalog = mirrors_principal(p.rd, p.q, p.xi.t.polar().second);
  }
  p.rg = rgroup_nontempered(*p.w0, *p.kg, p.xi, *catalog);

  const int n = p.order();
  if (doc.contains("characters")) {
    for (const auto& c : doc.at("characters")) {
      p.chars.push_back(io::to_character(c, n));
      p.names.push_back(c.value("name", "chi" + std::to_string(p.names.size())));
    }
  } else {
    p.chars.push_back(trivial_character(n));
    p.names.push_back("trivial");
  }
  const int nc = int(p.chars.size());
  if (doc.contains("pairs")) {
    for (const auto& pr : doc.at("pairs")) {
      if (!pr.is_array() || pr.size() != 2) fail_input("SchemaError", "pairs are [i, j]");
      int a = pr[0].get<int>(), b = pr[1].get<int>();
      if (a < 0 || b < 0 || a >= nc || b >= nc) fail_input("SchemaError", "pair index out of range");
      p.pairs.emplace_back(a, b);
    }
  } else {
    for (int a = 0; a < nc; ++a)
      for (int b = 0; b < nc; ++b) p.pairs.emplace_back(a, b);
  }
  return p;
}

json pair_json(const Package& p, const std::pair<int, int>& pr) {
  return json::array({p.names[std::size_t(pr.first)], p.names[std::size_t(pr.second)]});
}

// ---------------------------------------------------------------- commands

json datum_info(const Inputs& in, const Flags& f) {
  json doc = load(in.datum, "--datum");
  RootDatum rd = io::to_datum(doc);
  ParameterFunction q = io::to_parameters(rd, doc);
  WeylGroup w0(rd, f.cap);
  json roots = json::array();
  for (const auto& r : rd.roots())
    if (r.positive)
      roots.push_back({{"root", to_std(r.root)}, {"coroot", to_std(r.coroot)}, {"coeffs", to_std(r.root_coeffs)}});
  json params = json::object();
  for (const auto& [k, v] : q.labelled_values()) params[k] = io::from_rational(v);
  NonReducedData nr = derive_nonreduced(rd);
  return {{"rank", rd.rank()},
          {"num_simple", rd.num_simple()},
          {"num_positive_roots", rd.num_positive()},
          {"order_W0", w0.order()},
          {"semisimple", rd.is_semisimple()},
          {"cartan", io::from_imatrix(rd.cartan())},
          {"components", rd.components()},
          {"positive_roots", roots},
          {"nonreduced_size", nr.entries.size()},
          {"center_lattice", io::from_imatrix(center_lattice(rd))},
          {"parameters", params},
          {"equal_parameters", q.is_equal_parameter()}};
}

json weyl_enumerate(const Inputs& in, const Flags& f) {
  json doc = load(in.datum, "--datum");
  RootDatum rd = io::to_datum(doc);
  WeylGroup w0(rd, f.cap);
  json elts = json::array();
  for (const auto& e : w0.elements())
    elts.push_back({{"word", e.word}, {"length", e.length}, {"matrix", io::from_imatrix(e.matrix)}});
  json out = {{"order", w0.order()}, {"elements", elts}};
  std::vector<int> P;
  if (!in.parabolic.empty()) {
    for (auto v : parse_list(in.parabolic)) P.push_back(int(v));
  } else if (doc.contains("P")) {
    P = doc.at("P").get<std::vector<int>>();
  }
  KGroup kg(rd, P);
  json pts = json::array();
  for (int k = 0; k < kg.order(); ++k) pts.push_back(io::from_torus(kg.point(k)));
  out["K_P"] = {{"P", P}, {"order", kg.order()}, {"divisors", kg.divisors()}, {"points", pts}};
  json reps = w0.shortest_coset_reps(P);
  out["coset_reps"] = reps;
  return out;
}

json hecke_mul(const Inputs& in, const Flags& f) {
  json doc = in.input.empty() ? json::object() : io::read_file(in.input);
  json ddoc = !in.datum.empty() ? io::read_file(in.datum) : doc;
  RootDatum rd = io::to_datum(ddoc);
  ParameterFunction q = io::to_parameters(rd, ddoc);
  WeylGroup w0(rd);
  AffineWeyl aw(w0);
  HeckeAlgebra h(aw, q, f.cap);
  json l = !in.left.empty() ? io::read_file(in.left) : doc.value("left", json());
  json r = !in.right.empty() ? io::read_file(in.right) : doc.value("right", json());
  if (l.is_null() || r.is_null()) fail_input("MissingInput", "hecke mul needs left and right elements");
  HeckeElement prod = h.multiply(io::to_element(h, l), io::to_element(h, r));
  json out = io::from_element(h, prod);
  out["support"] = prod.size();
  out["quadratic_residual"] = quadratic_residual(h);
  return out;
}

json theta_cmd(const Inputs& in, const Flags& f) {
  json doc = in.input.empty() ? json::object() : io::read_file(in.input);
  json ddoc = !in.datum.empty() ? io::read_file(in.datum) : doc;
  RootDatum rd = io::to_datum(ddoc);
  ParameterFunction q = io::to_parameters(rd, ddoc);
  WeylGroup w0(rd);
  AffineWeyl aw(w0);
  HeckeAlgebra h(aw, q, f.cap);
  std::vector<std::int64_t> x;
  if (!in.x.empty())
    x = parse_list(in.x);
  else if (doc.contains("x"))
    x = doc.at("x").get<std::vector<std::int64_t>>();
  else
    fail_input("MissingInput", "theta needs --x or an \"x\" member");
  HeckeElement t = h.theta(from_std(x));
  json out = io::from_element(h, t);
  out["x"] = x;
  out["support"] = t.size();
  return out;
}

json rgroup_compute(const Inputs& in, const Flags& f) {
  Package p = load_package(load(!in.datum.empty() ? in.datum : in.package, "--datum"), f, in.mirrors);
  json out = io::from_rgroup(*p.w0, *p.kg, p.rg);
  out["class"] = to_string(classify(p.rd, p.xi));
  return out;
}

json chevalley_extract(const Inputs& in, const Flags& f) {
  json doc = load(!in.datum.empty() ? in.datum : in.package, "--datum");
  std::optional<FiniteMatrixGroup> w;
  std::vector<CMatrix> elts;
  if (doc.contains("reflection_group")) {
    std::vector<CMatrix> gens;
    for (const auto& m : doc.at("reflection_group")) gens.push_back(io::to_cmatrix(m));
    if (gens.empty()) fail_input("SchemaError", "reflection_group needs generators");
    w = FiniteMatrixGroup::enumerate(gens, int(gens[0].rows()), f.cap);
    if (doc.contains("normalizers"))
      for (const auto& m : doc.at("normalizers")) elts.push_back(io::to_cmatrix(m));
    else
      elts.push_back(CMatrix::Identity(w->dim(), w->dim()));
  } else {
    Package p = load_package(doc, f, in.mirrors);
    w = FiniteMatrixGroup::from_elements(p.rg.tangent_matrices(p.rg.weyl));
    elts = p.rg.tangent_matrices(p.rg.rgroup);
  }
  const int D = f.max_degree ? *f.max_degree : doc.value("max_degree", default_max_degree(*w));
  GradedCharacter e = extract_E_character(*w, elts, D);
  json traces = json::array();
  for (const auto& row : e.traces) {
    json r = json::array();
    for (auto z : row) r.push_back(io::from_complex(z));
    traces.push_back(r);
  }
  return {{"max_degree", D},
          {"order_W", w->order()},
          {"degrees", e.degrees()},
          {"dims", e.dims},
          {"traces", traces},
          {"self_check_residual", e.self_check_residual},
          {"coxeter_numbers", coxeter_numbers(*w)}};
}

json ext_dims_cmd(const Inputs& in, const Flags& f) {
  Package p = load_package(load(in.package, "--package"), f, in.mirrors);
  std::optional<int> D = f.max_degree;
  if (!D && p.doc.contains("max_degree")) D = p.doc.at("max_degree").get<int>();
  GradedCharacter e = e_character(p.rg, D);
  json ext = json::array(), ep = json::array(), res = json::array(), pairs = json::array(), arthur = json::array();
  for (const auto& pr : p.pairs) {
    const auto& a = p.chars[std::size_t(pr.first)];
    const auto& b = p.chars[std::size_t(pr.second)];
    ExtProfile prof = ext_dims(*p.w0, *p.kg, p.rg, e, a, b);
    PairingValue pv = ep_arthur(*p.w0, *p.kg, p.rg, a, b);
    ext.push_back(prof.dims);
    ep.push_back(prof.ep());
    res.push_back(prof.residuals);
    pairs.push_back(pair_json(p, pr));
    arthur.push_back({{"value", pv.value}, {"raw", io::from_complex(pv.raw)}, {"residual", pv.residual},
                      {"alternating_raw", io::from_complex(prof.alternating_raw)},
                      {"gap", std::abs(prof.alternating_raw - pv.raw)}});
  }
  return {{"pairs", pairs},
          {"ext", ext},
          {"ep", ep},
          {"residuals", res},
          {"arthur", arthur},
          {"E_degrees", e.degrees()},
          {"order_rgroup", p.order()}};
}

json ep_pair_cmd(const Inputs& in, const Flags& f) {
  Package p = load_package(load(in.package, "--package"), f, in.mirrors);
  json ep = json::array(), pairs = json::array(), raw = json::array(), res = json::array();
  for (const auto& pr : p.pairs) {
    PairingValue pv = ep_arthur(*p.w0, *p.kg, p.rg, p.chars[std::size_t(pr.first)], p.chars[std::size_t(pr.second)]);
    ep.push_back(pv.value);
    raw.push_back(io::from_complex(pv.raw));
    res.push_back(pv.residual);
    pairs.push_back(pair_json(p, pr));
  }
  return {{"pairs", pairs}, {"ep", ep}, {"raw", raw}, {"residuals", res}};
}

json ep_gram_cmd(const Inputs& in, const Flags& f) {
  Package p = load_package(load(in.package, "--package"), f, in.mirrors);
  PairingReport rep =
      ep_gram(p.rg.rgroup_table(*p.w0, *p.kg), p.rg.tangent_matrices(p.rg.rgroup), p.chars, f.tolerance);
  json radical = json::array();
  for (const auto& v : rep.radical) {
    json r = json::array();
    for (int i = 0; i < v.size(); ++i) r.push_back(io::from_complex(v(i)));
    radical.push_back(r);
  }
  std::vector<double> eig(rep.eigenvalues.data(), rep.eigenvalues.data() + rep.eigenvalues.size());
  for (auto& x : eig)
    if (std::abs(x) < 1e-13) x = 0.0;
  std::vector<std::vector<std::int64_t>> rounded;
  for (int i = 0; i < rep.gram.rows(); ++i) {
    rounded.emplace_back();
    for (int j = 0; j < rep.gram.cols(); ++j) rounded.back().push_back(round_checked(rep.gram(i, j), "NonIntegralValue").value);
  }
  return {{"characters", p.names},
          {"gram", rounded},
          {"gram_raw", io::from_cmatrix(rep.gram)},
          {"hermitian_residual", rep.hermitian_residual},
          {"eigenvalues", eig},
          {"min_eigenvalue", std::abs(rep.min_eigenvalue) < 1e-13 ? 0.0 : rep.min_eigenvalue},
          {"rank", rep.rank},
          {"radical", radical}};
}

json koszul_json(const KoszulResult& r) {
  return {{"ext", r.dims},
          {"hom_dims", r.hom_dims},
          {"max_differential", r.max_differential},
          {"min_singular_kept", r.min_singular_kept}};
}

json oracle_koszul(const Inputs& in, const Flags&) {
  KoszulProblem p = io::to_koszul(load(in.problem, "--problem"));
  json out = koszul_json(koszul_ext(p));
  out["order"] = p.group.order();
  out["k"] = p.k();
  return out;
}

json oracle_crossed(const Inputs&, const Flags& f) {
  json reports = json::array();
  bool ok = true;
  for (const auto& c : crossed_product_library()) {
    CrossedProductReport r = crossed_product_iso_test(c.algebra, c.group, f.tolerance);
    ok = ok && r.ok;
    reports.push_back({{"name", r.name},
                       {"dim_B", r.dim_b},
                       {"order", r.order},
                       {"hom_residual", r.hom_residual},
                       {"invariance_residual", r.invariance_residual},
                       {"inverse_residual", r.inverse_residual},
                       {"unit_residual", r.unit_residual},
                       {"rank", r.rank},
                       {"invariant_dim", r.invariant_dim},
                       {"ok", r.ok}});
  }
  return {{"cases", reports}, {"ok", ok}};
}

json validation_json(const CrossValidation& cv) {
  return {{"formula", cv.formula.dims}, {"koszul", cv.koszul.dims}, {"max_differential", cv.koszul.max_differential},
          {"match", cv.match}};
}

json oracle_validate(const Inputs& in, const Flags& f) {
  json cases = json::array();
  if (!in.problem.empty()) {
    cases.push_back(validation_json(cross_validate(io::to_koszul(io::read_file(in.problem)))));
  } else if (!in.package.empty()) {
    Package p = load_package(io::read_file(in.package), f, in.mirrors);
    GradedCharacter e = e_character(p.rg, f.max_degree);
    for (const auto& pr : p.pairs) {
      const auto& a = p.chars[std::size_t(pr.first)];
      const auto& b = p.chars[std::size_t(pr.second)];
      ExtProfile prof = ext_dims(*p.w0, *p.kg, p.rg, e, a, b);
      json c = validation_json(cross_validate(prof, package_problem(*p.w0, *p.kg, p.rg, a, b)));
      c["pair"] = pair_json(p, pr);
      cases.push_back(c);
    }
  } else if (in.random > 0) {
    std::mt19937_64 rng(in.seed);
    for (int i = 0; i < in.random; ++i) cases.push_back(validation_json(cross_validate(random_koszul_problem(rng))));
  } else {
    fail_input("MissingInput", "oracle validate needs --problem, --package or --random");
  }
  return {{"cases", cases}, {"match", true}, {"count", cases.size()}};
}

std::string kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
  }
  return "Unknown";
}

json diagnostic(const std::string& command, const std::string& kind, const std::string& code, const std::string& msg) {
  return {{"spec", 1}, {"command", command}, {"error", {{"kind", kind}, {"code", code}, {"message", msg}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  Flags flags;
  Inputs in;
  std::string command;
  std::function<json(const Inputs&, const Flags&)> action;

  CLI::App app{"Affine Hecke algebra toolkit: R-groups, Ext dimensions and Euler-Poincare pairings", "ahecke"};
  app.require_subcommand(1);
  app.add_option("--tolerance", flags.tolerance, "numerical tolerance for rank and residual checks")
      ->check(CLI::Range(1e-15, 1e-2));
  app.add_option("--cap", flags.cap, "cap on enumerations and Hecke supports")->check(CLI::Range(1, 100000000));
  app.add_option("--max-degree", flags.max_degree, "truncation degree for invariant extraction")->check(CLI::Range(1, 64));
  app.add_option("--output", flags.output, "write the JSON document to this file");

  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* g, const std::string& name, const std::string& help,
                  std::function<json(const Inputs&, const Flags&)> fn) {
    CLI::App* c = g->add_subcommand(name, help);
    c->fallthrough();
    std::string full = g->get_name() + " " + name;
    c->callback([&command, &action, full, fn] {
      command = full;
      action = fn;
    });
    return c;
  };

  CLI::App* datum = group("datum", "root datum summaries");
  leaf(datum, "info", "ranks, roots, |W0| and parameters", datum_info)->add_option("--datum", in.datum)->required();

  CLI::App* weyl = group("weyl", "finite Weyl group");
  auto* we = leaf(weyl, "enumerate", "elements of W0, K_P and coset representatives", weyl_enumerate);
  we->add_option("--datum", in.datum)->required();
  we->add_option("--parabolic", in.parabolic, "simple indices of P, e.g. 0,1");

  CLI::App* hecke = group("hecke", "affine Hecke algebra arithmetic");
  auto* hm = leaf(hecke, "mul", "product of two elements in the N_w basis", hecke_mul);
  hm->add_option("--input", in.input, "document with datum, left and right");
  hm->add_option("--datum", in.datum);
  hm->add_option("--left", in.left);
  hm->add_option("--right", in.right);

  CLI::App* theta = app.add_subcommand("theta", "Bernstein element theta_x in the N_w basis");
  theta->fallthrough();
  theta->callback([&] {
    command = "theta";
    action = theta_cmd;
  });
  theta->add_option("--input", in.input);
  theta->add_option("--datum", in.datum);
  theta->add_option("--x", in.x, "lattice element, e.g. 1,-1");

  CLI::App* rg = group("rgroup", "isotropy groups, mirrors and R-groups");
  auto* rc = leaf(rg, "compute", "R-group of an induction datum", rgroup_compute);
  rc->add_option("--datum", in.datum, "document with datum and xi")->required();
  rc->add_option("--mirrors", in.mirrors, "mirror catalog");

  CLI::App* ch = group("chevalley", "invariant theory");
  auto* ce = leaf(ch, "extract", "graded character of the generator space E", chevalley_extract);
  ce->add_option("--datum", in.datum, "package or reflection-group document")->required();
  ce->add_option("--mirrors", in.mirrors);

  CLI::App* ext = group("ext", "Ext dimensions");
  auto* ed = leaf(ext, "dims", "Ext profiles for character pairs", ext_dims_cmd);
  ed->add_option("--package", in.package)->required();
  ed->add_option("--mirrors", in.mirrors);

  CLI::App* ep = group("ep", "Euler-Poincare pairings");
  auto* epp = leaf(ep, "pair", "Arthur formula for character pairs", ep_pair_cmd);
  epp->add_option("--package", in.package)->required();
  epp->add_option("--mirrors", in.mirrors);
  auto* epg = leaf(ep, "gram", "Gram matrix with Hermitian and PSD checks", ep_gram_cmd);
  epg->add_option("--package", in.package)->required();
  epg->add_option("--mirrors", in.mirrors);

  CLI::App* oracle = group("oracle", "independent verification");
  leaf(oracle, "koszul", "Ext by an explicit Koszul complex", oracle_koszul)->add_option("--problem", in.problem)->required();
  leaf(oracle, "crossed", "crossed-product isomorphism on the built-in library", oracle_crossed);
  auto* ov = leaf(oracle, "validate", "character formula against the Koszul complex", oracle_validate);
  ov->add_option("--problem", in.problem);
  ov->add_option("--package", in.package);
  ov->add_option("--mirrors", in.mirrors);
  ov->add_option("--random", in.random, "number of random problems")->check(CLI::Range(1, 100000));
  ov->add_option("--seed", in.seed);

  auto emit = [&](const json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (!flags.output.empty()) {
      std::ofstream file(flags.output);
      if (!file) {
        out << diagnostic(command, "InvalidInput", "FileNotWritable", "cannot write " + flags.output).dump(2) << "\n";
        return false;
      }
      file << text;
    } else {
      out << text;
    }
    return true;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << diagnostic("", "InvalidInput", "UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    json doc = action(in, flags);
    json full = {{"spec", 1}, {"command", command}};
    full.update(doc);
    return emit(full) ? 0 : 2;
  } catch (const Error& e) {
    emit(diagnostic(command, kind_name(e.kind()), e.code(), e.what()));
    return e.exit_code();
  } catch (const json::exception& e) {
    emit(diagnostic(command, "InvalidInput", "SchemaError", e.what()));
    return 2;
  }
}

}  // namespace ahecke::cli
