#include "supertree/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "supertree/constructions.hpp"
#include "supertree/io.hpp"
#include "supertree/ordering.hpp"

namespace supertree::cli {

namespace {

struct Options {
  std::string family;
  std::vector<std::string> files;
  int m = -1;
  int d = 0;
  int r = 3;
  int i = 0;
  int j = 0;
  int p = 0;
  int q = 0;
  int s = 0;
  std::string method = "matching";
  double tol = 1e-10;
  int budget = kDefaultEnumerationBudget;
  std::string format = "text";
  std::uint64_t seed = 1;
  int count = 200;
  std::string theorem;
  std::string out;
  bool perturb = false;
  bool r_given = false;
};

int default_budget() {
  if (const char* env = std::getenv("SUPERTREE_BUDGET")) {
    try {
      const int b = std::stoi(env);
      if (b > 0) return b;
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumerationBudget;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

Hypergraph input(const Options& o, std::size_t index) {
  if (!o.family.empty() && index == 0) {
    FamilySpec spec;
    spec.family = parse_family(o.family);
    spec.m = o.m;
    spec.d = o.d;
    spec.r = o.r;
    spec.i = o.i;
    spec.j = o.j;
    spec.p = o.p;
    spec.q = o.q;
    spec.s = o.s;
    if (spec.family == Family::PowerOfTree) {
      require(!o.files.empty(), "power-of-tree reads the ordinary tree from --file");
      const Hypergraph tree = load_hypergraph(o.files.front());
      spec.tree_edges = tree.edges();
      spec.m = tree.size();
    }
    return build(spec).graph;
  }
  const std::size_t file_index = o.family.empty() ? index : index - 1;
  require(file_index < o.files.size(), "missing input: give --family or --file");
  return load_hypergraph(o.files[file_index]);
}

// Writes to --out when given, otherwise to stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(15);
  s << x;
  return s.str();
}

double rho_power(const Hypergraph& h, double tol) {
  PowerIterationOptions opts;
  opts.tol = tol;
  double best = 0.0;
  for (const auto& comp : components(h)) {
    const Hypergraph c = induced(h, comp);
    if (c.size() > 0) best = std::max(best, rho_power_iteration(c, opts).rho);
  }
  return best;
}

SpectralResult power_result(const Hypergraph& h, double tol) {
  if (is_connected(h)) {
    PowerIterationOptions opts;
    opts.tol = tol;
    return rho_power_iteration(h, opts);
  }
  SpectralResult r;
  r.method = Method::PowerIteration;
  r.rho = rho_power(h, tol);
  r.error_bound = tol;
  return r;
}

int cmd_poly(const Options& o, std::ostream& out) {
  const Hypergraph h = input(o, 0);
  const MatchingPolynomial phi = matching_polynomial(h);
  if (parse_format(o.format) == Format::Json) {
    Json j = to_json(phi);
    j["text"] = phi.to_string();
    emit(o, out, j.dump(2) + "\n");
  } else {
    emit(o, out, phi.to_string() + "\n");
  }
  return kOk;
}

int cmd_rho(const Options& o, std::ostream& out) {
  const Hypergraph h = input(o, 0);
  require(o.method == "matching" || o.method == "power" || o.method == "both",
          "--method must be matching, power or both");
  require(h.size() > 0, "hypergraph has no edges; its spectral radius is 0");
  std::vector<SpectralResult> results;
  if (o.method != "power") {
    if (!is_acyclic(h)) throw Error(ErrorCode::NotAcyclic, "the matching-root method needs a superforest");
    results.push_back(rho_from_matching_poly(matching_polynomial(h)));
  }
  if (o.method != "matching") results.push_back(power_result(h, o.tol));
  const bool both = results.size() == 2;
  const double gap = both ? std::abs(results[0].rho - results[1].rho) : 0.0;
  if (parse_format(o.format) == Format::Json) {
    Json j = Json::array();
    for (const auto& r : results) j.push_back(to_json(r));
    Json doc{{"results", j}};
    if (both) doc["gap"] = gap;
    emit(o, out, doc.dump(2) + "\n");
  } else {
    std::string text;
    for (const auto& r : results) {
      text += method_name(r.method) + " " + fmt(r.rho) + " (error bound " + fmt(r.error_bound) + ")\n";
    }
    if (both) text += "gap " + fmt(gap) + "\n";
    emit(o, out, text);
  }
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  require(!o.family.empty(), "build needs --family");
  const Hypergraph h = input(o, 0);
  if (parse_format(o.format) == Format::Json || !o.out.empty()) {
    emit(o, out, to_json(h, o.family).dump(2) + "\n");
    return kOk;
  }
  std::string text = o.family + ": n=" + std::to_string(h.order()) + " m=" + std::to_string(h.size()) +
                     " r=" + std::to_string(h.rank()) + "\n";
  if (is_acyclic(h)) text += "code " + canonical_code(h).bytes + "\n";
  for (const auto& e : h.edges()) {
    text += " ";
    for (Vertex v : e) text += " " + std::to_string(v);
    text += "\n";
  }
  emit(o, out, text);
  return kOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const Hypergraph a = input(o, 0);
  const Hypergraph b = input(o, 1);
  const OrderingVerdict v = compare(a, b);
  if (parse_format(o.format) == Format::Json) {
    emit(o, out, to_json(v).dump(2) + "\n");
  } else {
    emit(o, out, relation_name(v.relation) + "\n");
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require(o.m >= 0, "enumerate needs -m");
  const bool by_diameter = o.d > 0;
  const auto trees = by_diameter ? enumerate_with_diameter(o.m, o.d, o.r, o.budget)
                                 : enumerate_supertrees(o.m, o.r, o.budget);
  const Format f = parse_format(o.format);
  std::string text;
  if (f == Format::Json) {
    Json j = Json::array();
    for (const auto& t : trees) {
      Json entry = to_json(t);
      entry["canonical_code"] = canonical_code(t).bytes;
      j.push_back(entry);
    }
    text = j.dump(2) + "\n";
  } else if (f == Format::Csv) {
    text = "index,canonical_code,diameter\n";
    for (std::size_t k = 0; k < trees.size(); ++k) {
      const int diam = trees[k].size() == 0 ? 0 : diameter(trees[k]);
      text += std::to_string(k + 1) + "," + canonical_code(trees[k]).bytes + "," + std::to_string(diam) + "\n";
    }
  } else {
    for (const auto& t : trees) text += canonical_code(t).bytes + "\n";
    text += std::to_string(trees.size()) + " supertrees\n";
  }
  emit(o, out, text);
  return kOk;
}

struct Outcome {
  bool pass = false;
  Json json;
  std::string text;
  std::optional<RankingReport> ranking;
};

Outcome ranking_outcome(RankingReport report) {
  Outcome out;
  out.pass = report.pass;
  out.json = to_json(report);
  out.text = to_text(report);
  out.ranking = std::move(report);
  return out;
}

Outcome suite_outcome(const SuiteReport& s) {
  Outcome out;
  out.pass = s.pass;
  out.json = to_json(s);
  out.text = s.name + ": " + std::to_string(s.instances) + " instances, " + std::to_string(s.violations) +
             " violations (seed " + std::to_string(s.seed) + ")\n";
  for (const auto& f : s.failures) out.text += "failure: " + f + "\n";
  return out;
}

Outcome verify(const Options& o) {
  const std::string& t = o.theorem;
  require(!t.empty(), "verify needs --theorem");
  VerifyOptions vo;
  vo.budget = o.budget;
  vo.perturb_expected = o.perturb;
  if (t == "5.9" || t == "5.10") {
    require(o.m >= 0 && o.d > 0, "--theorem " + t + " needs -m and -d");
    const bool wide = o.m >= o.d + 3;
    if ((t == "5.9") != wide) {
      throw Error(ErrorCode::PreconditionViolated,
                  t == "5.9" ? "this ranking needs m >= d+3" : "this ranking needs m = d+2");
    }
    return ranking_outcome(verify_ranking_diameter(o.m, o.d, o.r, vo));
  }
  if (t == "6.1" || t == "6.2") {
    require(o.m >= 0, "--theorem " + t + " needs -m");
    return ranking_outcome(verify_minima(o.m, o.r, vo));
  }
  if (t == "4.8") {
    require(o.m >= 0, "--theorem 4.8 needs -m");
    return ranking_outcome(verify_extremes(o.m, o.r, vo));
  }
  if (t == "2.5") {
    require(o.m >= 1, "--theorem 2.5 needs -m >= 1");
    const std::vector<int> ranks = o.r_given ? std::vector<int>{o.r} : std::vector<int>{3, 4};
    Outcome out;
    out.pass = true;
    out.json = Json::array();
    for (const auto& tree : enumerate_supertrees(o.m, 2, o.budget)) {
      const PowerRelationReport rep = verify_power_relation(tree, ranks);
      Json j = to_json(rep);
      j["canonical_code"] = canonical_code(tree).bytes;
      out.json.push_back(j);
      out.pass = out.pass && rep.pass;
      for (const auto& e : rep.entries) {
        out.text += canonical_code(tree).bytes + " r=" + std::to_string(e.r) + " gap " + fmt(e.gap) +
                    (e.pass ? "" : "  FAIL") + "\n";
      }
    }
    out.text += out.pass ? "power relation holds\n" : "power relation violated\n";
    return out;
  }
  const std::pair<const char*, PropertyKind> suites[] = {
      {"4.3", PropertyKind::GraftOneVertex}, {"4.4", PropertyKind::GraftAdjacent},
      {"4.5", PropertyKind::GraftDistance},  {"4.6", PropertyKind::EdgeRelease},
      {"2.4", PropertyKind::EdgeMoving},
  };
  for (const auto& [name, kind] : suites) {
    if (t == name) return suite_outcome(run_property_suite(kind, o.count, o.seed, std::max(o.budget, 5)));
  }
  throw Error(ErrorCode::BadParams, "unknown --theorem value '" + t + "'");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Outcome result = verify(o);
  const Format f = parse_format(o.format);
  if (f == Format::Json) {
    emit(o, out, result.json.dump(2) + "\n");
  } else if (f == Format::Csv && result.ranking) {
    emit(o, out, to_csv(*result.ranking));
  } else {
    emit(o, out, result.text);
  }
  return result.pass ? kOk : kVerificationFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  require(!o.out.empty(), "export needs --out");
  if (!o.theorem.empty()) {
    const Outcome result = verify(o);
    if (result.ranking) {
      export_report(*result.ranking, o.out, parse_format(o.format));
    } else {
      write_file(o.out, parse_format(o.format) == Format::Json ? result.json.dump(2) + "\n" : result.text);
    }
    out << "wrote " << o.out << "\n";
    return result.pass ? kOk : kVerificationFailed;
  }
  if (o.family.empty() && o.files.empty()) {
    require(o.m >= 0, "export needs --theorem, --family, --file or -m");
    const RankingReport report = rank_supertrees(o.m, o.d > 0 ? o.d : -1, o.r, o.budget);
    export_report(report, o.out, parse_format(o.format));
    out << "wrote " << o.out << "\n";
    return report.pass ? kOk : kVerificationFailed;
  }
  const Hypergraph h = input(o, 0);
  const std::optional<std::string> name = o.family.empty() ? std::nullopt : std::optional<std::string>(o.family);
  write_file(o.out, to_json(h, name).dump(2) + "\n");
  out << "wrote " << o.out << "\n";
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "named family, e.g. loose-path, hyperstar, tmd-i, d");
  sub->add_option("--file", o.files, "hypergraph JSON file (repeatable)");
  sub->add_option("-m", o.m, "number of edges");
  sub->add_option("-d", o.d, "diameter / spine length");
  sub->add_option("-r", o.r, "rank (edge size)")->each([&o](const std::string&) { o.r_given = true; });
  sub->add_option("-i", o.i, "attachment index");
  sub->add_option("-j", o.j, "second attachment index");
  sub->add_option("-p", o.p, "first pendent path length");
  sub->add_option("-q", o.q, "second pendent path length");
  sub->add_option("-s", o.s, "distance between graft vertices");
  sub->add_option("--method", o.method, "matching, power or both");
  sub->add_option("--tol", o.tol, "power iteration tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-edges", o.budget, "enumeration budget (env SUPERTREE_BUDGET)")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  sub->add_option("--count", o.count, "instances per randomized check")->check(CLI::PositiveNumber);
  sub->add_option("--theorem", o.theorem, "check to run")
      ->check(CLI::IsMember({"2.4", "2.5", "4.3", "4.4", "4.5", "4.6", "4.8", "5.9", "5.10", "6.1", "6.2"}));
  sub->add_option("--out", o.out, "write the result to this path");
  sub->add_flag("--perturb-expected", o.perturb, "swap the expected ranking (must make verify fail)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching polynomials, spectral radii and orderings of uniform supertrees", "supertree"};
  app.require_subcommand(1);
  Options o;
  o.budget = default_budget();
  const std::pair<const char*, const char*> verbs[] = {
      {"poly", "matching polynomial"},
      {"rho", "spectral radius"},
      {"build", "construct a named family member"},
      {"compare", "order two superforests (first input vs second)"},
      {"enumerate", "list supertrees up to isomorphism"},
      {"verify", "run a verification check; exit 2 if it fails"},
      {"export", "write a report or hypergraph to --out"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    subs.push_back(sub);
  }

  std::vector<std::string> argv_storage{"supertree"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalid;
  }

  try {
    if (subs[0]->parsed()) return cmd_poly(o, out);
    if (subs[1]->parsed()) return cmd_rho(o, out);
    if (subs[2]->parsed()) return cmd_build(o, out);
    if (subs[3]->parsed()) return cmd_compare(o, out);
    if (subs[4]->parsed()) return cmd_enumerate(o, out);
    if (subs[5]->parsed()) return cmd_verify(o, out);
    return cmd_export(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace supertree::cli
