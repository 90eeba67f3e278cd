#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "conehodge/catalog.hpp"
#include "conehodge/cone.hpp"
#include "conehodge/ktheory.hpp"
#include "conehodge/lcdef.hpp"
#include "conehodge/oracle.hpp"
#include "conehodge/report.hpp"
#include "conehodge/selftest.hpp"
#include "conehodge/table_io.hpp"
#include "conehodge/version.hpp"

namespace conehodge::cli {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string variety;
  std::optional<int> window;
  std::string format = "json";
  std::string output_path;
  bool no_header = false;
  bool strict = false;
  bool classical = false;
  bool projectively_normal = false;
  std::optional<int> ambient_dim;
};

void add_format_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opts.output_path, "Write the payload to this file");
  cmd->add_flag("--no-header", opts.no_header, "Suppress the header line");
}

void add_variety_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--variety", opts.variety,
                  "Catalog selector (\"P2\", \"P1xP2@1,1\") or a .json table file")
      ->required();
  cmd->add_option("--window", opts.window,
                  "Exact window half-width for catalog tables (>= the computed minimum)");
  add_format_options(cmd, opts);
}

std::optional<int> env_window() {
  const char* env = std::getenv("CONE_HODGE_WINDOW");
  if (!env || !*env) return std::nullopt;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw error("CONE_HODGE_WINDOW is not an integer");
  }
}

struct ResolvedVariety {
  ConeDescriptor desc;
  json inputs;
  ValidationReport violations;
};

ResolvedVariety resolve_variety(const CommonOptions& opts) {
  ResolvedVariety out;
  out.inputs["variety"] = opts.variety;
  if (selector_is_file(opts.variety)) {
    LoadedTable loaded = load_table_file(opts.variety);
    out.violations = loaded.report;
    out.desc = make_descriptor(std::move(loaded.table), std::move(loaded.lefschetz),
                               opts.classical, opts.ambient_dim, opts.projectively_normal);
    out.inputs["source"] = "file";
  } else {
    CatalogSpec spec = parse_selector(opts.variety);
    std::optional<int> window = opts.window ? opts.window : env_window();
    if (window) {
      const int minimum = default_window(spec.total_dim());
      if (*window < minimum) {
        throw error("window " + std::to_string(*window) + " is below the computed minimum " +
                    std::to_string(minimum) + " for this variety");
      }
      spec.window = window;
    }
    out.desc = catalog_descriptor(spec, opts.classical);
    if (opts.ambient_dim) out.desc.ambient_dim = opts.ambient_dim;
    out.inputs["source"] = "catalog";
    out.inputs["spec"] = report::to_json(spec);
  }
  out.inputs["window"] = out.desc.base.entry(0, 0).window_hi;
  return out;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Renders the envelope in the requested format and writes it, with the
// optional header line (the only place a timestamp ever appears).
void emit(const json& envelope, const CommonOptions& opts, std::ostream& out) {
  std::string payload;
  if (opts.format == "json") {
    payload = report::dump(envelope);
  } else if (opts.format == "markdown") {
    payload = report::render_markdown(envelope);
  } else {
    payload = report::render_csv(envelope);
  }
  if (!opts.no_header) {
    out << "# conehodge " << kVersion << " | " << envelope["command"].get<std::string>() << " | "
        << timestamp() << "\n";
  }
  if (!opts.output_path.empty()) {
    std::ofstream file(opts.output_path);
    if (!file) throw error("cannot open '" + opts.output_path + "' for writing");
    file << payload;
    out << "wrote " << opts.output_path << "\n";
  } else {
    out << payload;
  }
}

int finish(const json& envelope, const CommonOptions& opts, std::ostream& out) {
  emit(envelope, opts, out);
  return envelope["violations"].empty() ? 0 : 1;
}

json group_results(std::vector<json> items) {
  json results;
  results["kind"] = "group";
  results["items"] = std::move(items);
  return results;
}

// catalog table: emits the table file format itself (not an envelope).
int run_catalog_table(const CommonOptions& opts, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  const HodgeDuBoisTable& table = resolved.desc.base;
  std::string payload;
  if (opts.format == "json") {
    payload = save_table(table, resolved.desc.lefschetz);
  } else if (opts.format == "markdown") {
    // Untwisted diamond summary.
    std::ostringstream md;
    md << "## " << table.name << " (dim " << table.n << ")\n\n";
    md << "| p\\q |";
    for (int q = 0; q <= table.n; ++q) md << " " << q << " |";
    md << "\n|";
    for (int q = 0; q <= table.n + 1; ++q) md << " --- |";
    md << "\n";
    for (int p = 0; p <= table.n; ++p) {
      md << "| " << p << " |";
      for (int q = 0; q <= table.n; ++q) md << " " << table.dim(p, q, 0) << " |";
      md << "\n";
    }
    payload = md.str();
  } else {
    // Full window dump of the nonzero cells.
    std::ostringstream csv;
    csv << "p,q,m,dim\n";
    for (const auto& [key, graded] : table.entries) {
      for (int m = graded.window_lo; m <= graded.window_hi; ++m) {
        const std::int64_t v = graded.resolve(m);
        if (v != 0) csv << key.first << "," << key.second << "," << m << "," << v << "\n";
      }
    }
    payload = csv.str();
  }
  if (!opts.no_header) {
    out << "# conehodge " << kVersion << " | catalog table | " << timestamp() << "\n";
  }
  if (!opts.output_path.empty()) {
    std::ofstream file(opts.output_path);
    if (!file) throw error("cannot open '" + opts.output_path + "' for writing");
    file << payload;
    out << "wrote " << opts.output_path << "\n";
  } else {
    out << payload;
  }
  return resolved.violations.empty() ? 0 : 1;
}

int run_catalog_manifest(const CommonOptions& opts, std::ostream& out) {
  json manifest = json::object();
  for (const auto& [name, spec] : catalog_manifest()) {
    manifest[name] = report::to_json(spec);
  }
  if (!opts.no_header) {
    out << "# conehodge " << kVersion << " | catalog manifest | " << timestamp() << "\n";
  }
  out << report::dump(manifest);
  return 0;
}

struct OracleOptions {
  int n = 1;
  int p = 0;
  std::int64_t m = 0;
  bool sweep = false;
  std::int64_t max_m = 8;
};

int run_oracle(const CommonOptions& opts, const OracleOptions& oracle, bool p_given,
               std::ostream& out) {
  json inputs;
  inputs["n"] = oracle.n;
  json results;
  if (oracle.sweep) {
    inputs["max_m"] = oracle.max_m;
    results["kind"] = "oracle-sweep";
    results["n"] = oracle.n;
    json rows = json::array();
    for (int p = 0; p <= oracle.n; ++p) {
      for (std::int64_t m = -oracle.max_m; m <= oracle.max_m; ++m) {
        const auto h = oracle_hodge_dimension(oracle.n, p, m);
        for (int q = 0; q <= oracle.n; ++q) {
          rows.push_back(json{{"p", p}, {"q", q}, {"m", m}, {"dim", h[q]}});
        }
      }
    }
    results["rows"] = std::move(rows);
  } else {
    if (!p_given) throw error("oracle hodge requires --p (or use --sweep)");
    inputs["p"] = oracle.p;
    inputs["m"] = oracle.m;
    const auto h = oracle_hodge_dimension(oracle.n, oracle.p, oracle.m);
    results["kind"] = "oracle-hodge";
    results["n"] = oracle.n;
    results["p"] = oracle.p;
    results["m"] = oracle.m;
    results["h"] = h;
  }
  return finish(
      report::envelope("oracle hodge", std::move(inputs), std::move(results), json::array()), opts,
      out);
}

int run_cone_dubois(const CommonOptions& opts, std::optional<int> k, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  json results;
  if (k) {
    resolved.inputs["k"] = *k;
    results = report::to_json(cone_dubois(resolved.desc, *k));
  } else {
    std::vector<json> items;
    for (int kk = 0; kk <= resolved.desc.dim_z(); ++kk) {
      items.push_back(report::to_json(cone_dubois(resolved.desc, kk)));
    }
    results = group_results(std::move(items));
  }
  return finish(report::envelope("cone dubois", std::move(resolved.inputs), std::move(results),
                                 report::to_json(resolved.violations)),
                opts, out);
}

int run_cone_depth(const CommonOptions& opts, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  json results = report::to_json(depth_vector(resolved.desc));
  return finish(report::envelope("cone depth", std::move(resolved.inputs), std::move(results),
                                 report::to_json(resolved.violations)),
                opts, out);
}

int run_cone_lcdef(CommonOptions opts, const std::string& method, std::ostream& out) {
  if (method == "classical") opts.classical = true;
  ResolvedVariety resolved = resolve_variety(opts);
  resolved.inputs["method"] = method;
  if (opts.strict) resolved.inputs["strict"] = true;

  json results;
  if (method == "depth") {
    results = report::to_json(lcdef_cone_depth(resolved.desc));
  } else if (method == "lefschetz") {
    results = report::to_json(lcdef_cone_lefschetz(resolved.desc, opts.strict));
  } else if (method == "classical") {
    results = report::to_json(lcdef_classical(resolved.desc, opts.strict));
  } else {  // both
    const auto by_depth = lcdef_cone_depth(resolved.desc);
    const auto by_lefschetz = lcdef_cone_lefschetz(resolved.desc, opts.strict);
    std::vector<json> items = {report::to_json(by_depth), report::to_json(by_lefschetz)};
    results = group_results(std::move(items));
    results["agreement"] = (by_depth.c == by_lefschetz.c);
  }
  return finish(report::envelope("cone lcdef", std::move(resolved.inputs), std::move(results),
                                 report::to_json(resolved.violations)),
                opts, out);
}

struct KGroupOptions {
  int min_l = 0;
  std::optional<int> max_l;
  std::optional<int> adams_l;
  std::optional<int> adams_i;
};

int run_cone_kgroups(const CommonOptions& opts, const KGroupOptions& kopts, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  const int n = resolved.desc.base.n;
  const int max_l = kopts.max_l ? *kopts.max_l : n + 2;
  resolved.inputs["min_l"] = kopts.min_l;
  resolved.inputs["max_l"] = max_l;
  if (opts.classical) resolved.inputs["classical"] = true;

  std::vector<json> items;
  if (kopts.min_l <= 0) {
    items.push_back(report::to_json(opts.classical ? k_zero_classical(resolved.desc)
                                                   : k_zero(resolved.desc)));
  }
  for (int l = std::max(1, kopts.min_l); l <= max_l; ++l) {
    items.push_back(report::to_json(k_negative(resolved.desc, l)));
  }
  if (kopts.adams_l || kopts.adams_i) {
    if (!kopts.adams_l || !kopts.adams_i) {
      throw error("--adams-l and --adams-i must be given together");
    }
    items.push_back(report::to_json(higher_k_piece(resolved.desc, *kopts.adams_l, *kopts.adams_i)));
  }
  return finish(report::envelope("cone kgroups", std::move(resolved.inputs),
                                 group_results(std::move(items)),
                                 report::to_json(resolved.violations)),
                opts, out);
}

int run_check_vanishing(const CommonOptions& opts, bool dual, bool kan, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  if (!dual && !kan) {
    dual = true;
    kan = true;
  }
  std::vector<json> items;
  if (dual) items.push_back(report::to_json(dual_nakano_audit(resolved.desc.base)));
  if (kan) items.push_back(report::to_json(kan_audit(resolved.desc.base)));

  // Audit violations are validation findings: they force exit 1.
  ValidationReport violations = resolved.violations;
  for (const json& item : items) {
    for (const auto& f : item["findings"]) {
      if (f["severity"] == "violation") {
        violations.push_back({item["name"].get<std::string>(),
                              "(" + std::to_string(f["p"].get<int>()) + "," +
                                  std::to_string(f["q"].get<int>()) + "," +
                                  std::to_string(f["m"].get<std::int64_t>()) + ")",
                              "nonzero dimension " + std::to_string(f["value"].get<std::int64_t>()) +
                                  " contradicts the vanishing theorem"});
      }
    }
  }
  return finish(report::envelope("check vanishing", std::move(resolved.inputs),
                                 group_results(std::move(items)), report::to_json(violations)),
                opts, out);
}

int run_check_predubois(const CommonOptions& opts, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  json results = report::to_json(pre_p_dubois_level(resolved.desc));
  return finish(report::envelope("check predubois", std::move(resolved.inputs), std::move(results),
                                 report::to_json(resolved.violations)),
                opts, out);
}

int run_check_seminormal(const CommonOptions& opts, std::ostream& out) {
  ResolvedVariety resolved = resolve_variety(opts);
  json results;
  results["kind"] = "seminormal";
  results["seminormal"] = cone_seminormal(resolved.desc);
  return finish(report::envelope("check seminormal", std::move(resolved.inputs), std::move(results),
                                 report::to_json(resolved.violations)),
                opts, out);
}

int run_selftest_command(const CommonOptions& opts, std::ostream& out) {
  if (opts.format == "json") {
    std::ostringstream progress;
    const auto results = run_selftest(&progress);
    json suites = json::array();
    for (const auto& r : results) {
      json suite;
      suite["name"] = r.name;
      suite["passed"] = r.passed;
      suite["failures"] = r.failures;
      suites.push_back(std::move(suite));
    }
    json payload;
    payload["kind"] = "selftest";
    payload["suites"] = std::move(suites);
    payload["passed"] = all_passed(results);
    json violations = json::array();
    for (const auto& r : results) {
      for (const auto& f : r.failures) {
        violations.push_back(json{{"code", r.name}, {"path", "selftest"}, {"message", f}});
      }
    }
    const int code =
        finish(report::envelope("selftest", json::object(), std::move(payload), violations), opts, out);
    return code;
  }
  const auto results = run_selftest(&out);
  out << (all_passed(results) ? "selftest: all suites passed\n" : "selftest: FAILURES\n");
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculator for graded Hodge data of affine cones: cone complexes, vertex "
               "depth, local cohomological defect, vanishing audits and non-positive K-groups"};
  app.name("conehodge");
  app.require_subcommand(1);

  CommonOptions opts;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Generate and inspect catalog tables");
  catalog->require_subcommand(1);
  auto* catalog_table = catalog->add_subcommand("table", "Emit the exact table of a variety");
  add_variety_options(catalog_table, opts);
  auto* catalog_manifest_cmd = catalog->add_subcommand("manifest", "Dump the named presets");
  catalog_manifest_cmd->add_flag("--no-header", opts.no_header, "Suppress the header line");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force Cech-Koszul cohomology");
  oracle->require_subcommand(1);
  auto* oracle_hodge = oracle->add_subcommand("hodge", "h^q(P^n, Omega^p(m)) by exact rank");
  OracleOptions oracle_opts;
  oracle_hodge->add_option("--n", oracle_opts.n, "Projective space dimension")->required();
  auto* p_opt = oracle_hodge->add_option("--p", oracle_opts.p, "Form degree p");
  oracle_hodge->add_option("--m", oracle_opts.m, "Twist m");
  oracle_hodge->add_flag("--sweep", oracle_opts.sweep, "Dump the whole (p, q, m) box");
  oracle_hodge->add_option("--max-m", oracle_opts.max_m, "Box radius for --sweep")
      ->capture_default_str();
  add_format_options(oracle_hodge, opts);

  // cone
  auto* cone = app.add_subcommand("cone", "Invariants of the affine cone");
  cone->require_subcommand(1);
  auto* cone_dubois_cmd = cone->add_subcommand("dubois", "Graded pieces of the cone complexes");
  std::optional<int> dubois_k;
  cone_dubois_cmd->add_option("--k", dubois_k, "Single complex index k (default: all)");
  add_variety_options(cone_dubois_cmd, opts);
  auto* cone_depth = cone->add_subcommand("depth", "Vertex depth of every cone complex");
  add_variety_options(cone_depth, opts);
  auto* cone_lcdef = cone->add_subcommand("lcdef", "Local cohomological defect of the cone");
  std::string method = "both";
  cone_lcdef->add_option("--method", method, "depth | lefschetz | both | classical")
      ->check(CLI::IsMember({"depth", "lefschetz", "both", "classical"}))
      ->capture_default_str();
  cone_lcdef->add_flag("--strict", opts.strict, "Re-audit the twisted vanishing from the table");
  cone_lcdef->add_option("--ambient-dim", opts.ambient_dim, "Ambient P^N dimension (classical)");
  add_variety_options(cone_lcdef, opts);
  auto* cone_kgroups = cone->add_subcommand("kgroups", "K_0 and negative K-groups of the cone");
  KGroupOptions kgroup_opts;
  cone_kgroups->add_option("--min-l", kgroup_opts.min_l, "Smallest l (0 includes K_0)")
      ->capture_default_str();
  cone_kgroups->add_option("--max-l", kgroup_opts.max_l, "Largest l (default dim X + 2)");
  cone_kgroups->add_flag("--classical", opts.classical, "Classical cone: include Pic(C(X))");
  cone_kgroups->add_flag("--projectively-normal", opts.projectively_normal,
                         "Assert R_m = dim(0,0,m) for classical mode");
  cone_kgroups->add_option("--adams-l", kgroup_opts.adams_l, "Adams piece weight l >= 1");
  cone_kgroups->add_option("--adams-i", kgroup_opts.adams_i, "Adams eigenspace i >= l+2");
  add_variety_options(cone_kgroups, opts);

  // check
  auto* check = app.add_subcommand("check", "Vanishing and structure audits");
  check->require_subcommand(1);
  auto* check_vanishing = check->add_subcommand("vanishing", "Dual-Nakano and KAN audits");
  bool dual_flag = false;
  bool kan_flag = false;
  check_vanishing->add_flag("--dual", dual_flag, "Only the dual-Nakano audit");
  check_vanishing->add_flag("--kan", kan_flag, "Only the KAN audit");
  add_variety_options(check_vanishing, opts);
  auto* check_predubois = check->add_subcommand("predubois", "Pre-p-Du Bois level of the cone");
  add_variety_options(check_predubois, opts);
  auto* check_seminormal = check->add_subcommand("seminormal", "Seminormality of the cone");
  add_variety_options(check_seminormal, opts);

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "Run every module invariant suite");
  selftest_cmd->add_option("--format", opts.format, "text or json report")
      ->check(CLI::IsMember({"json", "markdown", "csv", "text"}));
  selftest_cmd->add_flag("--no-header", opts.no_header, "Suppress the header line");

  std::vector<const char*> argv;
  argv.push_back("conehodge");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream buffer;
    const int code = app.exit(e, buffer, buffer);
    (code == 0 ? out : err) << buffer.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (catalog_table->parsed()) return run_catalog_table(opts, out);
    if (catalog_manifest_cmd->parsed()) return run_catalog_manifest(opts, out);
    if (oracle_hodge->parsed()) return run_oracle(opts, oracle_opts, p_opt->count() > 0, out);
    if (cone_dubois_cmd->parsed()) return run_cone_dubois(opts, dubois_k, out);
    if (cone_depth->parsed()) return run_cone_depth(opts, out);
    if (cone_lcdef->parsed()) return run_cone_lcdef(opts, method, out);
    if (cone_kgroups->parsed()) return run_cone_kgroups(opts, kgroup_opts, out);
    if (check_vanishing->parsed()) return run_check_vanishing(opts, dual_flag, kan_flag, out);
    if (check_predubois->parsed()) return run_check_predubois(opts, out);
    if (check_seminormal->parsed()) return run_check_seminormal(opts, out);
    if (selftest_cmd->parsed()) {
      if (opts.format != "json") opts.format = "text";
      return run_selftest_command(opts, out);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace conehodge::cli
