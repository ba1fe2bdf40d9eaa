// Command-line front end: entropy of a single graph, regenerated extremal
// tables, j-curves for plotting, exhaustive verification suites, raw G(n,k,j)
// sweeps and family dumps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wentropy/families.hpp"
#include "wentropy/format.hpp"
#include "wentropy/graph_io.hpp"
#include "wentropy/search.hpp"
#include "wentropy/tables.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace wentropy;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "csv";
  int precision = 10;

  [[nodiscard]] bool json_mode() const { return format == "json"; }
  [[nodiscard]] std::string num(double v) const { return format_fixed(v, precision); }
  // Rounded exactly as printed in CSV, so both formats carry the same digits.
  [[nodiscard]] double rounded(double v) const { return std::stod(num(v)); }
};

std::string edge_string(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// entropy

int cmd_entropy(const Output& out, const std::string& path, const std::string& measure) {
  Graph g = path == "-" ? read_edge_list(std::cin) : read_edge_list_file(path);
  if (g.order() < 2) throw DomainError("entropy requires a graph with at least 2 vertices");
  double value = 0.0;
  if (measure == "wiener") {
    value = wiener_entropy(g);
  } else if (measure == "ecc") {
    value = eccentricity_entropy(g);
  } else {
    value = degree_entropy(g);
  }
  const double ceiling = std::log2(static_cast<double>(g.order()));
  if (out.json_mode()) {
    json j = {{"n", g.order()}, {"measure", measure}, {"value", out.rounded(value)},
              {"log2n", out.rounded(ceiling)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n,measure,value,log2n\n"
              << g.order() << ',' << measure << ',' << out.num(value) << ',' << out.num(ceiling) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// table / sweep

void print_gnkj_rows(const Output& out, const std::vector<SearchRecord>& rows, bool partial) {
  if (out.json_mode()) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n}, {"k", r.params[0]}, {"j", r.params[1]}, {"value", out.rounded(r.value)},
                     {"boundary_hit", r.boundary_hit}});
    }
    std::cout << json{{"rows", arr}, {"partial", partial}}.dump(2) << '\n';
    return;
  }
  std::cout << "n,(k,j),value\n";
  for (const auto& r : rows) {
    std::cout << r.n << ",(" << r.params[0] << ',' << r.params[1] << ")," << out.num(r.value) << '\n';
  }
}

void warn_boundary(const std::vector<SearchRecord>& rows) {
  for (const auto& r : rows) {
    if (r.boundary_hit) {
      std::cerr << "warning: n=" << r.n << " minimizer sits on the k range boundary; rerun with --full-k\n";
    }
  }
}

int cmd_table(const Output& out, const std::string& id_text, bool unbounded, const SweepOptions& opt) {
  const TableId id = parse_table_id(id_text);
  if (id == TableId::k4) {
    const auto rows = tree_table();
    if (out.json_mode()) {
      json arr = json::array();
      for (const auto& r : rows) {
        json trees = json::array();
        for (const auto& t : r.witnesses) trees.push_back({{"edges", edge_string(t)}, {"broom", is_broom(t)}});
        arr.push_back({{"n", r.n}, {"value", out.rounded(r.value)}, {"trees", trees}});
      }
      std::cout << json{{"rows", arr}}.dump(2) << '\n';
    } else {
      std::cout << "n,value,broom,edges\n";
      for (const auto& r : rows) {
        for (const auto& t : r.witnesses) {
          std::cout << r.n << ',' << out.num(r.value) << ',' << (is_broom(t) ? 1 : 0) << ',' << edge_string(t)
                    << '\n';
        }
      }
    }
    return 0;
  }
  if (id == TableId::k3a && unbounded) {
    std::cerr << "warning: scanning every order in [" << kJumpScanLo << ", " << kJumpScanHi
              << "]; this takes a few minutes\n";
  }
  const GnkjTable table = gnkj_table(id, unbounded, opt);
  print_gnkj_rows(out, table.rows, table.partial);
  if (table.partial) {
    std::cerr << "partial: spot-check orders only; pass --unbounded for the full [" << kJumpScanLo << ", "
              << kJumpScanHi << "] scan\n";
  }
  warn_boundary(table.rows);
  return 0;
}

int cmd_sweep(const Output& out, std::int64_t n, const SweepOptions& opt) {
  const GnkjSweepResult r = sweep_gnkj(n, opt);
  const double value = gnkj_wiener_entropy({n, r.best.k, r.best.j});
  if (out.json_mode()) {
    json j = {{"n", n},         {"k", r.best.k},         {"j", r.best.j},
              {"value", out.rounded(value)}, {"k_min", r.k_min}, {"k_max", r.k_max},
              {"boundary_hit", r.boundary_hit}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n,k,j,value,k_min,k_max,boundary_hit\n"
              << n << ',' << r.best.k << ',' << r.best.j << ',' << out.num(value) << ',' << r.k_min << ','
              << r.k_max << ',' << (r.boundary_hit ? 1 : 0) << '\n';
  }
  if (r.boundary_hit) std::cerr << "warning: minimizer sits on the k range boundary; rerun with --full-k\n";
  return 0;
}

// ---------------------------------------------------------------------------
// plot

int cmd_plot(const Output& out, const std::string& family, std::int64_t n, std::int64_t k) {
  if (family != "gnkj") throw DomainError("plot supports only --family gnkj");
  const std::vector<double> curve = gnkj_curve(n, k);
  std::vector<bool> is_min(curve.size(), false);
  for (std::size_t i : local_minima(curve)) is_min[i] = true;
  if (out.json_mode()) {
    json arr = json::array();
    for (std::size_t i = 0; i < curve.size(); ++i) {
      arr.push_back({{"j", i + 1}, {"value", out.rounded(curve[i])}, {"local_min", is_min[i]}});
    }
    std::cout << json{{"n", n}, {"k", k}, {"curve", arr}}.dump(2) << '\n';
  } else {
    std::cout << "j,value,local_min\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      std::cout << i + 1 << ',' << out.num(curve[i]) << ',' << (is_min[i] ? 1 : 0) << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckRow {
  std::string check;
  std::int64_t n = 0;
  bool pass = false;
  json detail;
  std::optional<Graph> witness;
};

struct Range {
  int lo;
  int hi;
};

Range clamp_range(Range domain, std::optional<int> lo, std::optional<int> hi) {
  return {std::max(domain.lo, lo.value_or(domain.lo)), std::min(domain.hi, hi.value_or(domain.hi))};
}

void suite_lemmas(std::vector<CheckRow>& rows, Range r) {
  for (int n = r.lo; n <= r.hi; ++n) {
    const LemmaRow row = check_distance_lemmas(n);
    rows.push_back({"distance-lemmas", n, row.pass(),
                    {{"graphs", row.graphs},
                     {"transmission_vs_wiener", row.bound_w},
                     {"transmission_vs_wiener_equality", row.bound_w_equality},
                     {"transmission_floor", row.sigma_floor},
                     {"edge_gap", row.edge_gap},
                     {"edge_gap_equality", row.edge_gap_equality}},
                    row.counterexample});
  }
}

void suite_conjectures(std::vector<CheckRow>& rows, Range r, const Output& out) {
  if (r.lo > r.hi) return;
  for (const auto& row : verify_conjecture_star_iw(r.lo, r.hi)) {
    rows.push_back({"star-maximizes-wiener-entropy", row.n, row.pass,
                    {{"trees", row.trees},
                     {"star_value", out.rounded(row.star_value)},
                     {"best_non_star", out.rounded(row.runner_up)}},
                    row.counterexample});
  }
}

void suite_props(std::vector<CheckRow>& rows, Range top3, Range diam, Range radius1, const Output& out) {
  for (int n = top3.lo; n <= top3.hi; ++n) {
    const Top3Report rep = max_iecc_trees_top3(n);
    json levels = json::array();
    for (const auto& lvl : rep.levels) {
      levels.push_back({{"value", out.rounded(lvl.value)}, {"trees", lvl.count}, {"shape_ok", lvl.class_ok},
                        {"eccentricities", lvl.eccentricities}});
    }
    std::optional<Graph> witness;
    for (const auto& lvl : rep.levels) {
      if (!lvl.class_ok && !witness) witness = lvl.witness;
    }
    rows.push_back({"top3-eccentricity-trees", n, rep.ok(), {{"levels", levels}}, witness});
  }
  for (int n = diam.lo; n <= diam.hi; ++n) {
    const auto brute = max_iecc_by_diameter(n);
    bool pass = true;
    json per_d = json::array();
    for (const auto& [d, value] : brute) {
      if (d < 3 || n - d - 1 < 1) continue;
      const DiameterOptimum opt = max_iecc_tree_given_diam(n, d);
      const bool ok = std::abs(opt.value - value) < 1e-12;
      pass = pass && ok;
      per_d.push_back({{"d", d}, {"b", opt.b}, {"closed_form", out.rounded(opt.value)},
                       {"exhaustive", out.rounded(value)}, {"pass", ok}});
    }
    rows.push_back({"max-eccentricity-given-diameter", n, pass, {{"diameters", per_d}}, std::nullopt});
  }
  for (int n = radius1.lo; n <= radius1.hi; ++n) {
    const EccMinimumScan scan = min_iecc_graph_bruteforce(n);
    rows.push_back({"min-eccentricity-radius-one", n, scan.ok(),
                    {{"graphs", scan.graphs},
                     {"minimizers", scan.minimizers},
                     {"value", out.rounded(scan.value)},
                     {"universal_vertices", scan.closed_form_k},
                     {"all_radius_one", scan.all_radius1}},
                    scan.ok() ? std::nullopt : scan.witness});
  }
}

int cmd_verify(const Output& out, const std::string& suite, std::optional<int> lo, std::optional<int> hi) {
  std::vector<CheckRow> rows;
  if (suite == "lemmas") {
    suite_lemmas(rows, clamp_range({2, 7}, lo, hi));
  } else if (suite == "conjectures") {
    suite_conjectures(rows, clamp_range({5, 16}, lo, hi), out);
  } else {
    suite_props(rows, clamp_range({8, 14}, lo, hi), clamp_range({5, 14}, lo, hi), clamp_range({4, 7}, lo, hi),
                out);
  }
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (out.json_mode()) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j = {{"check", r.check}, {"n", r.n}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}};
      if (r.witness) j["witness"] = edge_string(*r.witness);
      arr.push_back(std::move(j));
    }
    std::cout << json{{"suite", suite}, {"status", all ? "PASS" : "FAIL"}, {"checks", arr}}.dump(2) << '\n';
  } else {
    std::cout << "check,n,status,witness\n";
    for (const auto& r : rows) {
      std::cout << r.check << ',' << r.n << ',' << (r.pass ? "PASS" : "FAIL") << ','
                << (r.witness ? edge_string(*r.witness) : "") << '\n';
    }
  }
  for (const auto& r : rows) {
    if (!r.pass && r.witness) {
      std::cerr << "counterexample for " << r.check << " at n=" << r.n << ":\n";
      write_edge_list(std::cerr, *r.witness);
    }
  }
  return all ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------
// dump-family

struct FamilyParams {
  std::string family;
  std::optional<std::int64_t> n, k, j, d, b;
  std::vector<std::int64_t> legs;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* name, const std::string& family) {
  if (!v) throw CLI::ValidationError(std::string("--") + name, "required for --family " + family);
  return *v;
}

Graph build_family(const FamilyParams& p) {
  const std::string& f = p.family;
  if (f == "path") return make_path(need(p.n, "n", f));
  if (f == "star") return make_star(need(p.n, "n", f));
  if (f == "cycle") return make_cycle(need(p.n, "n", f));
  if (f == "complete") return make_complete(need(p.n, "n", f));
  if (f == "broom") return make_broom(need(p.n, "n", f), need(p.k, "k", f));
  if (f == "gnkj") return make_gnkj({need(p.n, "n", f), need(p.k, "k", f), need(p.j, "j", f)});
  if (f == "t3") return make_t3(need(p.n, "n", f));
  if (f == "t5") return make_t5(need(p.n, "n", f));
  if (f == "diam-tree") return make_diam_tree(need(p.n, "n", f), need(p.d, "d", f), p.b.value_or(0));
  if (p.legs.empty()) throw CLI::ValidationError("--legs", "required for --family spider");
  return make_spider(p.legs);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-based graph entropies and extremal searches"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::optional<std::string> format;
  unsigned threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision", out.precision, "Decimals in numeric columns")->check(CLI::Range(0, 17));
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::Range(1U, 256U));

  SweepOptions sweep;
  std::optional<std::int64_t> n_opt;
  std::optional<std::int64_t> k_opt;
  std::optional<std::int64_t> k_min_opt;
  bool full_k = false;
  bool unbounded = false;
  bool reference = false;

  auto* entropy = app.add_subcommand("entropy", "Entropy of a graph given as an edge list");
  std::string graph_file;
  std::string measure = "wiener";
  entropy->add_option("graph", graph_file, "Edge-list file ('-' for stdin)")->required();
  entropy->add_option("--measure", measure, "Per-vertex functional")
      ->check(CLI::IsMember({"wiener", "ecc", "degree"}));

  auto* table = app.add_subcommand("table", "Regenerate an extremal table");
  std::string table_id;
  table->add_option("--table", table_id, "Table id")
      ->required()
      ->check(CLI::IsMember({"1a", "1b", "2", "3a", "3b", "4"}));
  table->add_flag("--unbounded", unbounded, "Run the full range of table 3a");
  table->add_flag("--full-k", full_k, "Scan every k in [1, n-1]");

  auto* plot = app.add_subcommand("plot", "I_w(G(n,k,j)) as a function of j");
  std::string plot_family = "gnkj";
  plot->add_option("--family", plot_family, "Family")->check(CLI::IsMember({"gnkj"}));
  plot->add_option("--n", n_opt, "Order")->required();
  plot->add_option("--k", k_opt, "Path length")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive verification suite");
  std::string suite;
  std::optional<int> n_min;
  std::optional<int> n_max;
  verify->add_option("--suite", suite, "Suite")->required()->check(CLI::IsMember({"conjectures", "lemmas", "props"}));
  verify->add_option("--n-min", n_min, "Smallest order checked");
  verify->add_option("--n-max", n_max, "Largest order checked");

  auto* sweep_cmd = app.add_subcommand("sweep", "Minimum I_w over G(n,k,j) for one order");
  sweep_cmd->add_option("--n", n_opt, "Order")->required()->check(CLI::Range(3, 1 << 24));
  sweep_cmd->add_option("--k", k_opt, "Largest k scanned");
  sweep_cmd->add_option("--k-min", k_min_opt, "Smallest k scanned");
  sweep_cmd->add_flag("--full-k", full_k, "Scan every k in [1, n-1]");
  sweep_cmd->add_flag("--reference", reference, "Evaluate every (k,j) from its class profile");

  auto* dump = app.add_subcommand("dump-family", "Write a family member as an edge list");
  FamilyParams fam;
  dump->add_option("--family", fam.family, "Family")
      ->required()
      ->check(CLI::IsMember({"path", "star", "cycle", "complete", "broom", "gnkj", "t3", "t5", "diam-tree",
                             "spider"}));
  dump->add_option("--n", fam.n, "Order");
  dump->add_option("--k", fam.k, "Path length");
  dump->add_option("--j", fam.j, "Attachment count");
  dump->add_option("--d", fam.d, "Diameter");
  dump->add_option("--b", fam.b, "Leaf eccentricity");
  dump->add_option("--legs", fam.legs, "Spider leg lengths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  out.format = format.value_or(verify->parsed() ? "json" : "csv");
  sweep.threads = threads;
  sweep.full_k = full_k;
  sweep.k_max = k_opt;
  sweep.k_min = k_min_opt;
  if (reference) sweep.method = SweepMethod::kReference;

  try {
    if (entropy->parsed()) return cmd_entropy(out, graph_file, measure);
    if (table->parsed()) return cmd_table(out, table_id, unbounded, sweep);
    if (plot->parsed()) return cmd_plot(out, plot_family, *n_opt, *k_opt);
    if (verify->parsed()) return cmd_verify(out, suite, n_min, n_max);
    if (sweep_cmd->parsed()) return cmd_sweep(out, *n_opt, sweep);
    if (dump->parsed()) {
      write_edge_list(std::cout, build_family(fam));
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
