// atc: choosability checks through truncated graph polynomials.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atc/decide.hpp"
#include "atc/generators.hpp"
#include "atc/oracle.hpp"
#include "atc/report.hpp"

namespace {

constexpr int kUsageError = 3;

struct Options {
  std::string input;
  std::string mode = "pipeline";
  std::string heuristic = "MD+PROC";
  std::size_t branch_limit = 100000;
  std::size_t pattern_cap = 100;
  int feasible_cap = 25;
  bool prune_matching = false;
  bool json = false;
  std::vector<int> degrees;
  std::vector<std::string> heuristics;
  std::string family;
  std::vector<int> params;
};

atc::Problem load(const std::string& path) {
  if (path == "-") return atc::parse_problem(std::cin, "stdin");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return atc::parse_problem(in, path);
}

atc::DecideConfig make_config(const Options& o) {
  atc::DecideConfig cfg;
  auto h = atc::parse_heuristic(o.heuristic);
  if (!h) throw std::invalid_argument("unknown heuristic '" + o.heuristic + "'");
  cfg.heuristic = *h;
  cfg.run.branch_limit = o.branch_limit;
  cfg.run.prune_matching = o.prune_matching;
  cfg.pattern_cap = o.pattern_cap;
  cfg.feasible_cap = o.feasible_cap;
  return cfg;
}

std::string join(const std::vector<int>& xs, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string edges_text(const std::vector<atc::Edge>& edges) {
  if (edges.empty()) return "none";
  std::string s;
  for (const auto& e : edges) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

void print_certificate(std::ostream& out, const atc::Certificate& c, int depth) {
  const std::string pad(2 * depth, ' ');
  out << pad << "certificate: " << atc::to_string(c.kind);
  if (c.witness) out << " x^(" << join(c.witness->degree, ',') << ") coefficient " << c.witness->coefficient;
  if (c.kind == atc::CertificateKind::AllPatternsColorable) out << " (" << c.pattern_count << " patterns)";
  if (c.kind == atc::CertificateKind::EdgeDeletion) out << " deleted " << edges_text(c.deleted_edges);
  out << "\n";
  if (c.inner) print_certificate(out, *c.inner, depth + 1);
}

void print_stats(std::ostream& out, const char* label, const atc::RunStats& s) {
  out << label << ": monomials " << s.monomials << ", peak live terms " << s.peak_live_terms << ", branches "
      << s.branches << "\n";
}

void print_verdict(std::ostream& out, const atc::Verdict& v) {
  out << "verdict: " << atc::to_string(v.kind) << "\n";
  if (v.certificate) print_certificate(out, *v.certificate, 0);
  if (v.witness) out << "bad assignment: " << v.witness->to_string() << "\n";
  if (v.reason) {
    out << "reason: " << atc::to_string(*v.reason);
    if (v.reason_cap) out << " (cap " << v.reason_cap << ")";
    out << "\n";
  }
  const auto& f = v.findings;
  if (f.constraint_rank) out << "constraint rank: " << *f.constraint_rank << "\n";
  if (f.feasible_vector_count) {
    out << "feasible vectors: " << *f.feasible_vector_count;
    for (const auto& chi : f.feasible_vectors) out << " " << chi.to_string();
    out << "\n";
  }
  if (f.constraint_rank) out << "deletable edges: " << edges_text(f.deletable_edges) << "\n";
  if (f.pattern_count) out << "patterns: " << *f.pattern_count << "\n";
  if (f.standard_stats) print_stats(out, "standard run", *f.standard_stats);
  if (f.extended_stats) print_stats(out, "extended run", *f.extended_stats);
}

void print_config(std::ostream& out, const atc::DecideConfig& cfg) {
  out << "config: heuristic " << atc::to_string(cfg.heuristic) << ", branch limit " << cfg.run.branch_limit
      << ", pattern cap " << cfg.pattern_cap << ", feasible cap " << cfg.feasible_cap << ", prune matching "
      << (cfg.run.prune_matching ? "on" : "off") << "\n";
}

int emit(const Options& o, const atc::Problem& p, const atc::DecideConfig& cfg, const atc::Verdict& v,
         atc::json extra = atc::json::object()) {
  if (o.json) {
    atc::json j = v;
    j["problem"] = {{"name", p.name()}, {"vertices", p.vertex_count()}, {"edges", p.edge_count()}};
    j["mode"] = o.mode;
    j["config"] = atc::config_to_json(cfg);
    j.update(extra);
    std::cout << j.dump(2) << "\n";
  } else {
    print_verdict(std::cout, v);
    print_config(std::cout, cfg);
  }
  return atc::exit_code(v);
}

int run_decide(const Options& o) {
  const auto p = load(o.input);
  const auto cfg = make_config(o);
  if (o.mode == "pipeline") return emit(o, p, cfg, atc::pipeline_decide(p, cfg));

  if (o.mode == "standard") {
    atc::RunStats stats;
    atc::Verdict v;
    try {
      auto w = atc::standard_alon_tarsi(p, cfg, &stats);
      v = w ? atc::Verdict::choosable({atc::CertificateKind::WitnessMonomial, w, 0, {}, nullptr}) : atc::Verdict{};
    } catch (const atc::OverflowError&) {
      v = atc::Verdict::unknown(atc::UnknownReason::Overflow);
    }
    v.findings.standard_stats = stats;
    return emit(o, p, cfg, v);
  }

  if (o.mode == "extended") {
    atc::Verdict v;
    atc::json rows = atc::json::array();
    try {
      auto c = atc::collect_constraints(p, cfg);
      v.findings.extended_stats = c.stats;
      v.findings.constraint_rank = c.basis.rank();
      if (c.witness) {
        v = atc::Verdict::choosable({atc::CertificateKind::WitnessMonomial, c.witness, 0, {}, nullptr});
        v.findings.extended_stats = c.stats;
      }
      for (const auto& row : c.basis.rows()) rows.push_back({{"base", row.base}, {"coefficients", row.coefficients}});
    } catch (const atc::OverflowError&) {
      v = atc::Verdict::unknown(atc::UnknownReason::Overflow);
    }
    if (!o.json)
      for (const auto& r : rows)
        std::cout << "row base (" << join(r["base"].get<std::vector<int>>(), ',') << "): "
                  << r["coefficients"].dump() << "\n";
    return emit(o, p, cfg, v, {{"constraints", rows}});
  }
  throw std::invalid_argument("unknown mode '" + o.mode + "'");
}

int run_coefficients(const Options& o) {
  const auto p = load(o.input);
  const auto cfg = make_config(o);
  atc::ProductMode mode;
  if (o.mode == "standard")
    mode = atc::ProductMode::Standard;
  else if (o.mode == "extended")
    mode = atc::ProductMode::Extended;
  else
    throw std::invalid_argument("coefficients needs --mode standard or extended");
  const auto terms = atc::all_final_terms(p, atc::order_vertices(p, cfg.heuristic), mode, cfg.run);
  for (const auto& t : terms) {
    std::cout << join(t.degree);
    if (mode == atc::ProductMode::Extended) std::cout << ' ' << (t.marker == atc::kNoMarker ? "-" : std::to_string(t.marker));
    std::cout << ' ' << t.coefficient << "\n";
  }
  return 0;
}

int run_oracle(const Options& o) {
  const auto p = load(o.input);
  if (!o.degrees.empty()) {
    if (static_cast<int>(o.degrees.size()) != p.vertex_count())
      throw std::invalid_argument("--degrees needs one value per vertex");
    const auto c = atc::direct_coefficient(p, o.degrees);
    if (o.json)
      std::cout << atc::json{{"degrees", o.degrees}, {"coefficient", c}}.dump(2) << "\n";
    else
      std::cout << c << "\n";
    return 0;
  }
  const auto v = atc::brute_force_choosable(p);
  if (o.json) {
    atc::json j = v;
    j["mode"] = "oracle";
    std::cout << j.dump(2) << "\n";
  } else {
    print_verdict(std::cout, v);
  }
  return atc::exit_code(v);
}

int run_bench(const Options& o) {
  const auto p = load(o.input);
  std::vector<atc::Heuristic> hs;
  if (o.heuristics.empty()) {
    hs.assign(atc::kAllHeuristics.begin(), atc::kAllHeuristics.end());
  } else {
    for (const auto& name : o.heuristics) {
      auto h = atc::parse_heuristic(name);
      if (!h) throw std::invalid_argument("unknown heuristic '" + name + "'");
      hs.push_back(*h);
    }
  }
  atc::RunOptions run;
  run.sequentialize = false;
  run.prune_matching = o.prune_matching;

  struct Row {
    atc::Heuristic h;
    std::optional<atc::RunStats> stats;
    double seconds;
  };
  std::vector<Row> rows;
  std::optional<std::uint64_t> baseline;
  auto measure = [&](atc::Heuristic h) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<atc::RunStats> stats;
    try {
      stats = atc::run_truncated_product(p, atc::order_vertices(p, h), atc::ProductMode::Standard, run,
                                         [](std::span<const atc::FinalTerm>) { return atc::SinkAction::Continue; })
                  .stats;
    } catch (const atc::OverflowError&) {
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Row{h, stats, secs};
  };
  auto input = measure(atc::Heuristic::Input);
  if (input.stats) baseline = input.stats->monomials;
  for (auto h : hs) rows.push_back(h == atc::Heuristic::Input ? input : measure(h));

  if (o.json) {
    atc::json j = atc::json::array();
    for (const auto& r : rows) {
      atc::json e = {{"heuristic", std::string(atc::to_string(r.h))}, {"seconds", r.seconds}};
      if (r.stats) {
        e["stats"] = *r.stats;
        if (baseline && *baseline) e["relative"] = static_cast<double>(r.stats->monomials) / *baseline;
      } else {
        e["error"] = "Overflow";
      }
      j.push_back(e);
    }
    std::cout << atc::json{{"problem", p.name()}, {"runs", j}}.dump(2) << "\n";
    return 0;
  }
  std::cout << std::left << std::setw(10) << "heuristic" << std::right << std::setw(14) << "monomials"
            << std::setw(10) << "relative" << std::setw(12) << "peak" << std::setw(10) << "seconds" << "\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(10) << atc::to_string(r.h) << std::right;
    if (!r.stats) {
      std::cout << std::setw(14) << "overflow" << "\n";
      continue;
    }
    std::cout << std::setw(14) << r.stats->monomials;
    if (baseline && *baseline)
      std::cout << std::setw(9) << std::fixed << std::setprecision(1) << 100.0 * r.stats->monomials / *baseline << '%';
    else
      std::cout << std::setw(10) << "-";
    std::cout << std::setw(12) << r.stats->peak_live_terms << std::setw(10) << std::setprecision(3) << r.seconds
              << "\n";
  }
  return 0;
}

int run_gen(const Options& o) {
  atc::write_problem(std::cout, atc::generate_family(o.family, o.params));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List-coloring and choosability checks via truncated graph polynomials"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", o.input, "Problem file, or - for standard input")->required();
    sub->add_option("--heuristic", o.heuristic, "Vertex ordering: INPUT VSEP MD MD+PROC OVER LIST LIST+DEG MDR");
    sub->add_option("--branch-limit", o.branch_limit, "Split the term list above this many terms")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--prune-matching", o.prune_matching, "Drop terms that cannot reach a valid final degree");
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* decide = app.add_subcommand("decide", "Decide s-choosability");
  add_common(decide);
  decide->add_option("--mode", o.mode, "standard, extended or pipeline")
      ->check(CLI::IsMember({"standard", "extended", "pipeline"}));
  decide->add_option("--pattern-cap", o.pattern_cap, "Maximum number of candidate list assignments")
      ->check(CLI::PositiveNumber);
  decide->add_option("--feasible-cap", o.feasible_cap, "Maximum vertex count for the 0/1 vector search")
      ->check(CLI::PositiveNumber);

  auto* coeffs = app.add_subcommand("coefficients", "Print the final truncated terms");
  add_common(coeffs);
  coeffs->add_option("--mode", o.mode, "standard or extended")->check(CLI::IsMember({"standard", "extended"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force choosability, or one coefficient with --degrees");
  oracle->add_option("problem", o.input, "Problem file, or - for standard input")->required();
  oracle->add_option("--degrees", o.degrees, "Exponent of every vertex")->expected(1, -1);
  oracle->add_flag("--json", o.json, "JSON output");

  auto* bench = app.add_subcommand("bench", "Compare ordering heuristics by monomial count");
  bench->add_option("problem", o.input, "Problem file, or - for standard input")->required();
  bench->add_option("--heuristics", o.heuristics, "Heuristics to run (default: all)");
  bench->add_flag("--prune-matching", o.prune_matching, "Drop terms that cannot reach a valid final degree");
  bench->add_flag("--json", o.json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Generate a test family");
  gen->add_option("family", o.family, "glued-cliques, glued-cliques-minus-edge, grid-diag, cycle-triangles")
      ->required();
  gen->add_option("params", o.params, "Family parameters")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  if (coeffs->parsed() && o.mode == "pipeline") o.mode = "standard";

  try {
    if (decide->parsed()) return run_decide(o);
    if (coeffs->parsed()) return run_coefficients(o);
    if (oracle->parsed()) return run_oracle(o);
    if (bench->parsed()) return run_bench(o);
    return run_gen(o);
  } catch (const std::exception& e) {
    std::cerr << "atc: " << e.what() << "\n";
  }
  return kUsageError;
}
