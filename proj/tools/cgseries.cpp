#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cgseries/calibration.hpp"
#include "cgseries/cartan_eta.hpp"
#include "cgseries/group_io.hpp"
#include "cgseries/quiver.hpp"
#include "cgseries/render.hpp"
#include "cgseries/sym_functions.hpp"
#include "cgseries/verify.hpp"
#include "cgseries/weyl.hpp"

using namespace cgs;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupModel load_selector(const std::string& selector) {
  if (selector.rfind("file:", 0) == 0) return load_group(selector.substr(5));
  try {
    return make_builtin(selector);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("malformed integer list '" + text + "'");
    }
  }
  return out;
}

int checks_exit(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return 1;
  return 0;
}

std::string pass(bool ok) { return ok ? "PASS" : "FAIL"; }

std::vector<std::string> node_labels(const GroupModel& g, bool drop_first) {
  std::vector<std::string> l = g.irrep_labels;
  if (l.size() != static_cast<std::size_t>(g.num_classes())) {
    l.clear();
    for (int i = 0; i < g.num_classes(); ++i) l.push_back(std::to_string(i));
  }
  if (drop_first) l.erase(l.begin());
  return l;
}

Json poly_json(const QPoly& p) { return p.to_string(); }

struct Options {
  std::string format = "text";
  std::string group;
  std::string graph;
  std::string kind = "S";
  std::string sign = "plus";
  std::string method = "direct";
  std::string rows, cols, degrees, lambda, mu, nu, t = "0", level = "fast", out, cartan;
  std::optional<int> irrep, vars, size, degree;
  bool defining = false, serial = false, all = false, formal = false, approx = false;
};

int run(const std::string& verb, Options& o) {
  const Format fmt = parse_format(o.format);
  std::ostream& os = std::cout;

  if (verb == "group") {
    const GroupModel g = load_selector(o.group);
    if (!o.out.empty()) save_group(g, o.out);
    if (fmt == Format::Json) {
      os << group_to_json(g).dump(1) << "\n";
    } else {
      os << g.name << ": order " << g.order << ", " << g.num_classes() << " classes, dimension " << g.dim
         << ", conductor " << g.conductor << "\n";
      std::vector<std::string> cols = g.class_labels;
      os << render_matrix(g.char_table, fmt, node_labels(g, false), cols);
    }
    return 0;
  }
  if (verb == "validate") {
    std::optional<GroupModel> g;
    try {
      g = load_selector(o.group);
    } catch (const ValidationError& e) {
      if (fmt == Format::Json) os << Json{{"valid", false}, {"error", e.what()}}.dump(1) << "\n";
      else os << "invalid: " << e.what() << "\n";
      return 1;
    }
    const ValidationReport r = validate_group(*g);
    if (fmt == Format::Json) {
      Json arr = Json::array();
      for (const auto& c : r.checks) arr.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      os << Json{{"valid", r.ok()}, {"checks", arr}}.dump(1) << "\n";
    } else {
      for (const auto& c : r.checks) os << c.name << ": " << pass(c.pass) << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
    return r.ok() ? 0 : 1;
  }
  if (verb == "cg") {
    GroupAnalysis a(load_selector(o.group));
    const CycloMatrix m = o.irrep ? a.irrep_cg(*o.irrep) : a.defining_cg();
    os << render_matrix(m, fmt, node_labels(a.group(), false), node_labels(a.group(), false));
    return 0;
  }
  if (verb == "series") {
    const GroupModel g = load_selector(o.group);
    const SeriesKind kind = parse_kind(o.kind);
    const Sign sign = parse_sign(o.sign);
    const SeriesMatrix m = o.serial ? series_matrix_serial(g, kind, sign) : series_matrix(g, kind, sign);
    if (fmt == Format::Text) os << kind_name(kind, sign) << "\n";
    os << render_matrix(m, fmt, node_labels(g, false), node_labels(g, false));
    return 0;
  }
  if (verb == "minor") {
    const GroupModel g = load_selector(o.group);
    const SeriesKind kind = parse_kind(o.kind);
    const Sign sign = parse_sign(o.sign);
    if (o.all) {
      const MinorSweep s = check_all_minors(g, kind, sign, o.size.value_or(2));
      if (fmt == Format::Json) {
        Json j{{"checked", s.checked}, {"agreed", s.agreed}};
        if (s.first_disagreement) j["first_disagreement"] = {s.first_disagreement->first, s.first_disagreement->second};
        os << j.dump(1) << "\n";
      } else {
        os << s.agreed << "/" << s.checked << " minors agree: " << pass(s.ok()) << "\n";
      }
      return s.ok() ? 0 : 1;
    }
    if (o.rows.empty() || o.cols.empty()) throw UsageError("minor needs --rows and --cols, or --all");
    const MinorResult r = minor_series(g, kind, sign, parse_int_list(o.rows), parse_int_list(o.cols));
    if (fmt == Format::Json) {
      os << Json{{"character_formula", r.character_formula.to_string()}, {"direct", r.direct.to_string()}, {"agree", r.agree}}.dump(1) << "\n";
    } else {
      os << "character formula: " << render_value(r.character_formula, fmt) << "\n"
         << "determinant:       " << render_value(r.direct, fmt) << "\n"
         << "agree: " << pass(r.agree) << "\n";
    }
    return r.agree ? 0 : 1;
  }
  if (verb == "cartan") {
    GroupAnalysis a(load_selector(o.group));
    const auto labels = node_labels(a.group(), true);
    if (o.formal) os << render_matrix(euclidean_cg(a), fmt, labels, labels);
    else os << render_matrix(euclidean_cartan(a), fmt, labels, labels);
    return 0;
  }
  if (verb == "cartan-inv") {
    GroupAnalysis a(load_selector(o.group));
    const auto labels = node_labels(a.group(), true);
    os << render_matrix(cartan_inverse(a, parse_method(o.method)), fmt, labels, labels);
    return 0;
  }
  if (verb == "eta") {
    GroupAnalysis a(load_selector(o.group));
    const EtaData e = eta_invariants(a);
    const bool ok = e.residue_identity && e.definitional_identity;
    if (fmt == Format::Json) {
      Json eta0 = Json::array();
      for (const auto& v : e.eta0) eta0.push_back(v.to_string());
      os << Json{{"sigma", e.sigma}, {"special_unitary", e.special_unitary}, {"eta0", eta0}, {"eta", to_json(e.eta)},
                 {"unsigned_sums", to_json(e.unsigned_sums)}, {"residue_identity", e.residue_identity},
                 {"definitional_identity", e.definitional_identity}}
                .dump(1)
         << "\n";
    } else {
      const auto labels = node_labels(a.group(), false);
      os << "sigma = " << e.sigma << ", det R trivial: " << (e.special_unitary ? "yes" : "no") << "\n";
      os << render_matrix(e.eta, fmt, labels, labels);
      if (fmt == Format::Text)
        os << "residue identity: " << pass(e.residue_identity) << "\ndefinitional identity: " << pass(e.definitional_identity) << "\n";
    }
    return ok ? 0 : 1;
  }
  if (verb == "cm" || verb == "hsop") {
    GroupAnalysis a(load_selector(o.group));
    if (verb == "hsop") {
      const auto d = hsop_search(a);
      if (fmt == Format::Json) os << Json(d).dump() << "\n";
      else os << d[0] << "," << d[1] << "\n";
      return 0;
    }
    std::optional<std::vector<int>> degrees;
    if (!o.degrees.empty()) degrees = parse_int_list(o.degrees);
    const CMData cm = cm_data(a, degrees);
    const bool ok = cm.nonnegative && cm.mu_relation && cm.reconstruction;
    const auto labels = node_labels(a.group(), false);
    if (fmt == Format::Json) {
      Json dr = Json::array();
      for (std::size_t i = 0; i < cm.dr.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < cm.dr.cols(); ++j) row.push_back(poly_json(cm.dr(i, j)));
        dr.push_back(row);
      }
      os << Json{{"hsop_degrees", cm.hsop_degrees}, {"D(R)", poly_json(cm.d_r)}, {"D", dr},
                 {"exponents", cm.exponents}, {"multiplicities", cm.multiplicities}, {"nonnegative", cm.nonnegative},
                 {"mu_relation", cm.mu_relation}, {"reconstruction", cm.reconstruction}}
                .dump(1)
         << "\n";
      return ok ? 0 : 1;
    }
    os << "degrees:";
    for (int d : cm.hsop_degrees) os << " " << d;
    os << "\nD(R) = " << render_value(cm.d_r, fmt) << "\n";
    for (std::size_t j = 0; j < cm.dr.cols(); ++j) {
      os << "D_" << labels[j] << "^0 = " << render_value(cm.dr(0, j), fmt) << "  (mu = " << cm.multiplicities[j] << ")\n";
    }
    os << "nonnegative: " << pass(cm.nonnegative) << "\nmu |G| = d n_1...n_d: " << pass(cm.mu_relation)
       << "\nreconstruction of M_S(q): " << pass(cm.reconstruction) << "\n";
    return ok ? 0 : 1;
  }
  if (verb == "weyl") {
    if (!o.cartan.empty()) {
      const Graph g = graph_from_selector(o.cartan);
      IntMatrix c = g.adjacency.map([](long v) { return -v; });
      for (int i = 0; i < g.size(); ++i) c(i, i) = 2;
      const auto r = weyl_oracle(c);
      if (fmt == Format::Json) os << Json(r).dump() << "\n";
      else {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << "\n";
      }
      return 0;
    }
    GroupAnalysis a(load_selector(o.group));
    const auto w = weyl_vector(a);
    const auto oracle = weyl_oracle(dynkin_for_group(a.group()).finite_cartan);
    bool ok = w.size() == oracle.size();
    for (std::size_t i = 0; ok && i < w.size(); ++i) ok = w[i] == Rational(oracle[i]);
    if (fmt == Format::Json) {
      Json jw = Json::array();
      for (const auto& v : w) jw.push_back(v.get_str());
      os << Json{{"weyl_vector", jw}, {"root_sum", oracle}, {"agree", ok}}.dump(1) << "\n";
    } else {
      os << "2 x row sums:";
      for (const auto& v : w) os << " " << v.get_str();
      os << "\npositive-root sum:";
      for (long v : oracle) os << " " << v;
      os << "\nagree: " << pass(ok) << "\n";
    }
    return ok ? 0 : 1;
  }
  if (verb == "mckay") {
    GroupAnalysis a(load_selector(o.group));
    const auto checks = mckay_check(a);
    if (fmt == Format::Json) {
      os << render_checks(checks, fmt);
    } else {
      os << "affine " << dynkin_for_group(a.group()).name() << ": " << pass(checks[1].pass) << ", kernel: " << pass(checks[2].pass)
         << ", 2E - M[R]: " << pass(checks[0].pass) << "\n";
    }
    return checks_exit(checks);
  }
  if (verb == "prop3") {
    GroupAnalysis a(load_selector(o.group));
    const CMData& cm = a.cm();
    const auto checks = prop3_check(a, cm);
    const IdentityCheck variant = prop3_power_variant(a, cm);
    if (fmt == Format::Json) {
      Json j = Json::array();
      for (const auto& c : checks) j.push_back(check_to_json(c));
      Json v = check_to_json(variant);
      v["informational"] = true;
      j.push_back(v);
      os << j.dump(1) << "\n";
    } else {
      os << render_checks(checks, fmt);
      os << "(informational) " << render_checks({variant}, fmt);
    }
    return checks_exit(checks);
  }
  if (verb == "preproj") {
    const Graph g = graph_from_selector(o.graph);
    const PreprojectiveSeries h = preprojective_H(g);
    const FinitenessReport f = dynkin_finiteness_check(g, h);
    if (fmt == Format::Json) {
      Json j{{"det", h.det.to_string()}, {"H", to_json(h.h)}, {"verified", h.verified}, {"all_polynomial", f.all_polynomial},
             {"det_vanishes_at_one", f.det_vanishes_at_one}};
      j["coxeter_number"] = f.coxeter_number ? Json(*f.coxeter_number) : Json(nullptr);
      j["twisted_polynomial"] = f.twisted_polynomial;
      os << j.dump(1) << "\n";
    } else {
      os << "det(E - qC + q^2 E) = " << render_value(h.det, fmt) << "\n";
      os << render_matrix(h.h, fmt);
      os << "(E - qC + q^2 E) H = E: " << pass(h.verified) << "\n"
         << "all entries polynomial: " << (f.all_polynomial ? "yes" : "no") << "\n"
         << "det vanishes at q = 1: " << (f.det_vanishes_at_one ? "yes" : "no") << "\n";
      if (f.coxeter_number)
        os << "Coxeter number " << *f.coxeter_number << ", (E + P q^h) H polynomial: " << (f.twisted_polynomial ? "yes" : "no") << "\n";
    }
    return h.verified ? 0 : 1;
  }
  if (verb == "cf-check") {
    const Graph g = graph_from_selector(o.graph);
    const RatQ cf = tree_continued_fraction(g.as_tree());
    const RatQ qh = RatQ(QPoly::q()) * preprojective_H(g).h(g.root.value_or(0), g.root.value_or(0));
    bool ok = cf == qh;
    std::optional<bool> molien;
    if (!o.group.empty()) {
      GroupAnalysis a(load_selector(o.group));
      molien = cf == RatQ(QPoly::q()) * a.series(SeriesKind::S, Sign::Plus)(0, 0);
      ok = ok && *molien;
    }
    if (fmt == Format::Json) {
      Json j{{"continued_fraction", cf.to_string()}, {"q_H_root", qh == cf}};
      if (molien) j["q_molien"] = *molien;
      os << j.dump(1) << "\n";
    } else {
      os << "continued fraction: " << render_value(cf, fmt) << "\n";
      os << "equals q H_rr: " << pass(qh == cf) << "\n";
      if (molien) os << "equals q M_S(q)_0^0: " << pass(*molien) << "\n";
    }
    return ok ? 0 : 1;
  }
  if (verb == "kron") {
    const Partition l = parse_partition(o.lambda), m = parse_partition(o.mu);
    if (!o.nu.empty()) {
      const long g = kronecker_coefficient(l, m, parse_partition(o.nu));
      os << (fmt == Format::Json ? Json(g).dump() : std::to_string(g)) << "\n";
      return 0;
    }
    const RatQ v = kron_specialized(l, m, o.vars);
    os << (fmt == Format::Json ? Json(v.to_string()).dump() : render_value(v, fmt)) << "\n";
    return 0;
  }
  if (verb == "kostka") {
    const QPoly k = kostka_foulkes(parse_partition(o.lambda), parse_partition(o.mu));
    os << (fmt == Format::Json ? Json(k.to_string()).dump() : render_value(k, fmt)) << "\n";
    return 0;
  }
  if (verb == "spec") {
    const RatQ v = principal_specialization(parse_partition(o.lambda), o.vars);
    os << (fmt == Format::Json ? Json(v.to_string()).dump() : render_value(v, fmt)) << "\n";
    return 0;
  }
  if (verb == "kf-check" || verb == "supersym") {
    const SymCheck c = verb == "kf-check" ? kf_identity_check(parse_partition(o.lambda), parse_partition(o.mu))
                                          : supersym_check(parse_partition(o.mu), parse_rational(o.t));
    if (fmt == Format::Json) {
      os << Json{{"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}, {"pass", c.pass}}.dump(1) << "\n";
    } else {
      os << "lhs: " << render_value(c.lhs, fmt) << "\nrhs: " << render_value(c.rhs, fmt) << "\n" << pass(c.pass) << "\n";
    }
    return c.pass ? 0 : 1;
  }
  if (verb == "macdonald-qq") {
    const QPoly k = kostka_macdonald_qq(parse_partition(o.lambda), parse_partition(o.mu));
    os << (fmt == Format::Json ? Json(k.to_string()).dump() : render_value(k, fmt)) << "\n";
    return 0;
  }
  if (verb == "fakedeg") {
    const auto rows = fake_degree_check(o.degree.value_or(3));
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : rows) {
      ok = ok && r.pass;
      if (fmt == Format::Json) {
        arr.push_back({{"lambda", partition_to_string(r.lambda)}, {"D", r.cm_numerator.to_string()},
                       {"kostka_foulkes", r.kostka.to_string()}, {"pass", r.pass}});
      } else {
        os << partition_to_string(r.lambda) << ": " << render_value(r.cm_numerator, fmt) << "  " << pass(r.pass) << "\n";
      }
    }
    if (fmt == Format::Json) os << arr.dump(1) << "\n";
    return ok ? 0 : 1;
  }
  if (verb == "verify-all") {
    const VerifyLevel level = parse_level(o.level);
    bool ok = true;
    Json arr = Json::array();
    run_all(level, [&](const CriterionResult& r) {
      ok = ok && r.pass;
      if (fmt == Format::Json) {
        arr.push_back({{"criterion", r.number}, {"title", r.title}, {"pass", r.pass}, {"ran", r.ran}, {"detail", r.detail}, {"info", r.info}});
        return;
      }
      os << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.number << ". " << r.title << ": " << r.detail << "\n";
      for (const auto& i : r.info) os << "       " << i << "\n";
      os.flush();
    });
    if (fmt == Format::Json) os << arr.dump(1) << "\n";
    return ok ? 0 : 1;
  }
  throw UsageError("unknown verb " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clebsch-Gordan series of finite group representations"};
  app.require_subcommand(1, 1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
    return sub;
  };
  auto group_opt = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--group,-g", o.group, "cyclic:N, bd:N, 2T, 2O, 2I, sym:D or file:PATH");
    if (required) opt->required();
  };
  auto kind_opts = [&](CLI::App* s) {
    s->add_option("--kind", o.kind, "S, A, T or P")->check(CLI::IsMember({"S", "A", "T", "P"}));
    s->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  };

  auto* s = add("group", "print a group model");
  group_opt(s);
  s->add_option("--out", o.out, "also write the model as JSON");
  group_opt(add("validate", "check the character table and class data"));
  s = add("cg", "integer Clebsch-Gordan matrix");
  group_opt(s);
  s->add_option("--irrep", o.irrep, "index of an irreducible (default: the defining representation)");
  s = add("series", "generating series matrix");
  group_opt(s);
  kind_opts(s);
  s->add_flag("--serial", o.serial, "use the serial reference path");
  s = add("minor", "minor of a series matrix by two formulas");
  group_opt(s);
  kind_opts(s);
  s->add_option("--rows", o.rows, "comma list");
  s->add_option("--cols", o.cols, "comma list");
  s->add_flag("--all", o.all, "check every minor of the given size");
  s->add_option("--size", o.size, "minor size for --all");
  s = add("cartan", "Euclidean Cartan matrix");
  group_opt(s);
  s->add_flag("--formal", o.formal, "keep q formal");
  s = add("cartan-inv", "inverse Euclidean Cartan matrix");
  group_opt(s);
  s->add_option("--method", o.method, "direct, characters, eta, limit or sylvester-limit");
  group_opt(add("eta", "eta invariants"));
  s = add("cm", "Cohen-Macaulay numerators");
  group_opt(s);
  s->add_option("--degrees", o.degrees, "comma list of parameter degrees");
  group_opt(add("hsop", "search degrees of a system of parameters"));
  s = add("weyl", "Weyl vector from the inverse Cartan matrix");
  group_opt(s, false);
  s->add_option("--cartan", o.cartan, "graph selector: positive-root sum of its Cartan matrix");
  group_opt(add("mckay", "McKay correspondence check"));
  group_opt(add("prop3", "identities between D[R] and M_A at q = 1"));
  s = add("preproj", "preprojective series of a graph");
  s->add_option("--graph", o.graph, "dynkin:A5, affine:E8 or gfile:PATH")->required();
  s = add("cf-check", "branched continued fraction of a tree");
  s->add_option("--graph", o.graph, "tree graph selector")->required();
  group_opt(s, false);
  s = add("kron", "Kronecker coefficient or specialized Kronecker product");
  s->add_option("--lambda", o.lambda)->required();
  s->add_option("--mu", o.mu)->required();
  s->add_option("--nu", o.nu);
  s->add_option("--vars", o.vars, "number of variables (default: stable)");
  s = add("kostka", "Kostka-Foulkes polynomial");
  s->add_option("--lambda", o.lambda)->required();
  s->add_option("--mu", o.mu)->required();
  s = add("spec", "principal specialization of a Schur function");
  s->add_option("--lambda", o.lambda)->required();
  s->add_option("--vars", o.vars, "number of variables (default: stable)");
  s = add("kf-check", "Kronecker product through Kostka-Foulkes polynomials");
  s->add_option("--lambda", o.lambda)->required();
  s->add_option("--mu", o.mu)->required();
  s = add("macdonald-qq", "K_{lambda mu}(q, q)");
  s->add_option("--lambda", o.lambda)->required();
  s->add_option("--mu", o.mu)->required();
  s = add("supersym", "supersymmetric hook formula check");
  s->add_option("--mu", o.mu)->required();
  s->add_option("--t", o.t, "rational value of t");
  s = add("fakedeg", "fake degrees of S_d against Kostka-Foulkes polynomials");
  s->add_option("--degree,-d", o.degree, "d <= 6");
  s = add("verify-all", "run the identity suite");
  s->add_option("--level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return run(verb, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    std::cerr << "bad file: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    std::cerr << "invalid group data: " << e.what() << "\n";
  } catch (const NonFreeAction& e) {
    std::cerr << "non-free action: " << e.what() << "\n";
  } catch (const SingularMatrix& e) {
    std::cerr << "singular matrix: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
