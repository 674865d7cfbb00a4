#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plg/bounds.hpp"
#include "plg/degree_model.hpp"
#include "plg/errors.hpp"
#include "plg/metadata.hpp"
#include "plg/multigraph.hpp"
#include "plg/random_plg.hpp"
#include "plg/reduction.hpp"
#include "plg/validate.hpp"
#include "plg/vc.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  std::vector<std::string> outputs;
  Json checks = Json::array();
  Json results = Json::object();
  long long wall_time_ms = 0;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  }
  bool passed() const {
    for (const Json& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["checks"] = checks;
    if (!results.empty()) j["results"] = results;
    j["wall_time_ms"] = wall_time_ms;
    return j;
  }
};

struct BetaFlags {
  std::optional<double> beta;
  std::string f_side;
  double f_c = 1.0;
  double f_k = 2.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--beta", beta, "Constant power-law exponent");
    cmd->add_option("--f-side", f_side, "Functional exponent side")->check(CLI::IsMember({"below", "above"}));
    cmd->add_option("--f-c", f_c, "Growth function constant c in c*ln^k");
    cmd->add_option("--f-k", f_k, "Growth function exponent k in c*ln^k");
  }
  plg::BetaSpec spec() const {
    if (beta && !f_side.empty()) throw CLI::ValidationError("--beta and --f-side are exclusive");
    if (beta) return plg::BetaSpec::constant_beta(*beta);
    if (f_side.empty()) throw CLI::ValidationError("one of --beta or --f-side is required");
    const plg::GrowthFn f{f_c, f_k};
    return f_side == "below" ? plg::BetaSpec::below_one(f) : plg::BetaSpec::above_one(f);
  }
};

struct VolumeFlags {
  std::optional<double> ealpha;
  std::optional<double> alpha;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--ealpha", ealpha, "Volume e^alpha");
    cmd->add_option("--alpha", alpha, "Exponent alpha");
  }
  plg::PlgParams params(const plg::BetaSpec& spec) const {
    if (ealpha && alpha) throw CLI::ValidationError("--ealpha and --alpha are exclusive");
    if (ealpha) return plg::make_params(*ealpha, spec);
    if (alpha) return plg::params_from_alpha(*alpha, spec);
    throw CLI::ValidationError("one of --ealpha or --alpha is required");
  }
};

std::vector<long long> parse_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("bad integer list '" + text + "'");
    }
  }
  return out;
}

Json params_json(const plg::PlgParams& p) {
  return {{"alpha", p.alpha},
          {"ealpha", p.volume},
          {"beta_kind", p.beta.kind_name()},
          {"beta_eff", p.beta_eff},
          {"max_degree", p.max_degree}};
}

void add_validation(RunReport& report, const plg::ValidationReport& v, bool require_connected) {
  std::string detail;
  if (!v.histogram_ok) {
    detail = std::to_string(v.mismatch_count) + " degree mismatches";
    if (!v.mismatches.empty()) {
      const plg::HistogramMismatch& m = v.mismatches.front();
      detail += ", first at degree " + std::to_string(m.degree) + " expected " +
                std::to_string(m.expected) + " got " + std::to_string(m.actual);
    }
  }
  report.check("histogram", v.histogram_ok, detail);
  if (require_connected)
    report.check("connected", v.connected);
  else
    report.results["connected"] = v.connected;
  if (v.roles_consistent) report.check("roles_consistent", *v.roles_consistent);
  if (v.gamma_subset_w1) report.check("gamma_subset_w1", *v.gamma_subset_w1);
  if (v.distinct_gamma_hosts) report.check("distinct_gamma_hosts", *v.distinct_gamma_hosts);
  if (v.gd_degrees_in_interval) report.check("gd_degrees_in_interval", *v.gd_degrees_in_interval);
}

plg::MultiGraph load_graph(const std::string& path) { return plg::read_plgm_file(path).graph; }

void run_gen_random(RunReport& r, const VolumeFlags& vol, const BetaFlags& bf, std::uint64_t seed,
                    const std::string& out, const std::string& degrees_csv) {
  const plg::PlgParams params = vol.params(bf.spec());
  const plg::DegreeSequence seq = plg::degree_counts(params);
  const plg::MultiGraph g = plg::sample_plg(seq, seed);
  std::ostringstream note;
  note << "gen-random seed " << seed << " alpha " << params.alpha;
  plg::write_plgm_file(out, g, {note.str()});
  r.outputs.push_back(out);
  if (!degrees_csv.empty()) {
    std::ostringstream csv;
    csv << "degree,count\n";
    for (const plg::DegreeRun& run : seq.runs)
      for (long long j = run.lo; j <= run.hi; ++j) csv << j << ',' << run.count << '\n';
    plg::write_text_file(degrees_csv, csv.str());
    r.outputs.push_back(degrees_csv);
  }
  r.results["params"] = params_json(params);
  r.results["nodes"] = g.node_count();
  r.results["self_loops"] = g.self_loop_nodes().size();
  const plg::MultiGraph back = load_graph(out);
  // Random multigraphs need not be connected; connectivity is reported only.
  add_validation(r, plg::validate_plg(back, params), false);
}

int default_d(const plg::MultiGraph& g, int d) {
  if (d > 0) return d;
  return static_cast<int>(std::max<long long>(3, g.max_degree()));
}

void run_reduce(RunReport& r, const std::string& in, int d, const BetaFlags& bf, const std::string& out,
                const std::string& meta_path, std::string gd_source) {
  const plg::MultiGraph g = load_graph(in);
  d = default_d(g, d);
  r.inputs["d"] = d;
  const plg::EmbeddedPlg e = plg::reduce(g, d, bf.spec());
  if (gd_source.empty()) gd_source = in;
  const plg::EmbeddingMeta meta = plg::to_meta(e, gd_source);
  std::ostringstream note;
  note << "reduce regime " << plg::regime_name(e.plan.regime) << " d " << d;
  plg::write_plgm_file(out, e.graph, {note.str()});
  r.outputs.push_back(out);
  if (!meta_path.empty()) {
    plg::write_text_file(meta_path, plg::emit_meta_json(meta));
    r.outputs.push_back(meta_path);
  }
  r.results["params"] = params_json(e.params);
  r.results["regime"] = plg::regime_name(e.plan.regime);
  r.results["nodes"] = e.graph.node_count();
  r.results["gamma"] = e.gamma.size();
  r.results["volumes_tried"] = e.volumes_tried;
  r.check("fill_wheel_invariant", e.fill.invariant_violations == 0 && e.initial_violations == 0,
          e.fill.first_violation);
  const plg::MultiGraph back = load_graph(out);
  const plg::EmbeddingMeta meta_back =
      meta_path.empty() ? meta : plg::parse_meta_json(plg::read_text_file(meta_path));
  const plg::PlgParams params = plg::params_from_alpha(meta_back.alpha, meta_back.beta);
  add_validation(r, plg::validate_plg(back, params, &meta_back), true);
}

void run_pm_gadget(RunReport& r, const std::string& in, int d, const std::string& out) {
  const plg::MultiGraph g = load_graph(in);
  d = default_d(g, d);
  r.inputs["d"] = d;
  const plg::PmGadgetGraph gadget = plg::reduce_pm(g, d);
  std::vector<std::string> comments;
  for (const auto& [a, b] : gadget.matching)
    comments.push_back("matching " + std::to_string(a) + " " + std::to_string(b));
  plg::write_plgm_file(out, gadget.graph, comments);
  r.outputs.push_back(out);
  const plg::PlgmDocument back = plg::read_plgm_file(out);
  r.check("round_trip", back.graph == gadget.graph);
  r.check("max_degree", back.graph.max_degree() <= d + 2,
          "max degree " + std::to_string(back.graph.max_degree()));
  std::vector<int> seen(static_cast<size_t>(back.graph.node_count()) + 1, 0);
  bool perfect = true;
  for (const auto& [a, b] : gadget.matching) {
    if (back.graph.multiplicity(a, b) == 0) perfect = false;
    ++seen[static_cast<size_t>(a)];
    ++seen[static_cast<size_t>(b)];
  }
  for (size_t v = 1; v < seen.size(); ++v)
    if (seen[v] != 1) perfect = false;
  r.check("perfect_matching", perfect);
  r.results["nodes"] = back.graph.node_count();
}

void run_validate(RunReport& r, const std::string& in, const std::string& meta_path, const VolumeFlags& vol,
                  const BetaFlags& bf) {
  const plg::MultiGraph g = load_graph(in);
  if (!meta_path.empty()) {
    const plg::EmbeddingMeta meta = plg::parse_meta_json(plg::read_text_file(meta_path));
    const plg::PlgParams params = plg::params_from_alpha(meta.alpha, meta.beta);
    r.results["params"] = params_json(params);
    add_validation(r, plg::validate_plg(g, params, &meta), true);
    return;
  }
  const plg::PlgParams params = vol.params(bf.spec());
  r.results["params"] = params_json(params);
  add_validation(r, plg::validate_plg(g, params), true);
}

void run_solve_vc(RunReport& r, const std::string& in, const std::string& out, long long exact_limit,
                  double time_limit) {
  const plg::MultiGraph g = load_graph(in);
  plg::Cover cover;
  std::string method = "exact";
  try {
    cover = plg::exact_vc(g, {exact_limit, time_limit});
  } catch (const plg::Error& ex) {
    if (ex.code() != plg::Errc::budget_exceeded) throw;
    method = "approx";
    cover = plg::approx_vc_matching(g);
    r.results["exact_skipped"] = ex.what();
  }
  r.results["method"] = method;
  r.results["size"] = cover.nodes.size();
  r.check("is_cover", plg::is_cover(g, cover.nodes));
  const std::string text = plg::emit_cover(cover);
  if (out.empty()) {
    std::cout << text;
  } else {
    plg::write_text_file(out, text);
    r.outputs.push_back(out);
  }
}

void run_bounds_table(RunReport& r, int d, std::optional<double> eps, std::optional<double> ratio,
                      const std::string& grid, const std::string& mid, const std::string& out) {
  double lo = 0, hi = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(grid);
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof())
    throw CLI::ValidationError("--beta-grid must look like lo:hi:step");
  const double eps_d = plg::normalize_eps(eps, ratio);
  r.inputs["eps_d_normalized"] = eps_d;
  const auto rows = plg::bounds_table(plg::beta_grid(lo, hi, step), d, eps_d,
                                      mid == "alternate" ? plg::MidFormula::alternate : plg::MidFormula::standard);
  const std::string csv = plg::bounds_csv(rows);
  r.results["rows"] = rows.size();
  if (out.empty()) {
    std::cout << csv;
  } else {
    plg::write_text_file(out, csv);
    r.outputs.push_back(out);
  }
}

std::vector<int> pick_nodes(const plg::DegreeSequence& seq, const std::vector<long long>& ids,
                            const std::vector<long long>& degrees, std::vector<long long>& used) {
  std::vector<int> nodes;
  for (long long v : ids) nodes.push_back(static_cast<int>(v));
  for (long long j : degrees) {
    if (j < 1 || j > seq.max_degree || seq.count(j) == 0)
      throw CLI::ValidationError("no node of degree " + std::to_string(j));
    if (used.size() <= static_cast<size_t>(j)) used.resize(static_cast<size_t>(j) + 1, 0);
    long long& k = used[static_cast<size_t>(j)];
    if (k >= seq.count(j)) throw CLI::ValidationError("not enough nodes of degree " + std::to_string(j));
    nodes.push_back(plg::first_node_of_degree(seq, j) + static_cast<int>(k));
    ++k;
  }
  return nodes;
}

void run_cut(RunReport& r, const VolumeFlags& vol, const BetaFlags& bf, const std::string& a_ids,
             const std::string& b_ids, const std::string& a_deg, const std::string& b_deg, long long samples,
             std::uint64_t seed) {
  const plg::PlgParams params = vol.params(bf.spec());
  const plg::DegreeSequence seq = plg::degree_counts(params);
  std::vector<long long> used;
  const std::vector<int> a = pick_nodes(seq, parse_list(a_ids), parse_list(a_deg), used);
  const std::vector<int> b = pick_nodes(seq, parse_list(b_ids), parse_list(b_deg), used);
  const plg::CutEstimate est = plg::estimate_cut(seq, a, b, samples, seed);
  r.results["a"] = a;
  r.results["b"] = b;
  r.results["mean"] = est.mean;
  r.results["std_error"] = est.std_error;
  r.results["samples"] = est.samples;
  r.results["exact"] = est.exact_value;
  r.results["lemma1"] = est.lemma1_value;
}

bool usage_code(plg::Errc c) {
  switch (c) {
    case plg::Errc::invalid_params:
    case plg::Errc::domain_error:
    case plg::Errc::out_of_range:
    case plg::Errc::invalid_growth:
    case plg::Errc::unsupported_regime:
    case plg::Errc::invalid_cut:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-law multigraph constructions and vertex cover reductions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  app.add_option("--report", report_path, "Write the run report JSON here instead of stdout");

  VolumeFlags vol;
  BetaFlags beta;
  std::uint64_t seed = 0;
  std::string in, out, meta_path, gd_source, degrees_csv;
  int d = 0;

  CLI::App* gen = app.add_subcommand("gen-random", "Sample a random (alpha, beta) power-law multigraph");
  vol.add_to(gen);
  beta.add_to(gen);
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--out", out, "Output plgm file")->required();
  gen->add_option("--degrees-csv", degrees_csv, "Also write the degree,count table");

  CLI::App* red = app.add_subcommand("reduce", "Embed a bounded-degree graph into a power-law multigraph");
  beta.add_to(red);
  red->add_option("--in", in, "Input plgm graph")->required();
  red->add_option("--d", d, "Degree bound of the input (default: its max degree, at least 3)");
  red->add_option("--out", out, "Output plgm file")->required();
  red->add_option("--meta", meta_path, "Output embedding metadata JSON");
  red->add_option("--gd-source", gd_source, "Path recorded as gd_source (default: --in)");

  CLI::App* pm = app.add_subcommand("pm-gadget", "Build the four-copy perfect matching gadget");
  pm->add_option("--in", in, "Input plgm graph")->required();
  pm->add_option("--d", d, "Degree bound of the input");
  pm->add_option("--out", out, "Output plgm file")->required();

  CLI::App* val = app.add_subcommand("validate", "Check a graph against a power-law degree sequence");
  val->add_option("--in", in, "Input plgm graph")->required();
  val->add_option("--meta", meta_path, "Embedding metadata JSON");
  vol.add_to(val);
  beta.add_to(val);

  long long exact_limit = 80;
  double time_limit = 60.0;
  CLI::App* solve = app.add_subcommand("solve-vc", "Minimum vertex cover");
  solve->add_option("--in", in, "Input plgm graph")->required();
  solve->add_option("--out", out, "Output cover file (default: stdout)");
  solve->add_option("--exact-limit", exact_limit, "Largest kernel handed to branch and bound");
  solve->add_option("--time-limit", time_limit, "Branch and bound time limit in seconds");

  std::optional<double> eps, ratio;
  std::string grid = "0.1:2.45:0.05", mid = "standard";
  CLI::App* bt = app.add_subcommand("bounds-table", "Tabulate inapproximability factors over beta");
  bt->add_option("--d", d, "Degree bound")->required();
  bt->add_option("--eps-d", eps, "Hardness gap eps_d");
  bt->add_option("--ratio", ratio, "Hardness ratio 1 + eps_d");
  bt->add_option("--beta-grid", grid, "lo:hi:step");
  bt->add_option("--mid-formula", mid, "Denominator for 1 < beta <= 2")->check(CLI::IsMember({"standard", "alternate"}));
  bt->add_option("--out", out, "Output CSV (default: stdout)");

  std::string a_ids, b_ids, a_deg, b_deg;
  long long samples = 10000;
  CLI::App* cut = app.add_subcommand("cut-expectation", "Monte Carlo estimate of the edges between two node sets");
  vol.add_to(cut);
  beta.add_to(cut);
  cut->add_option("--a", a_ids, "Comma-separated node ids of A");
  cut->add_option("--b", b_ids, "Comma-separated node ids of B");
  cut->add_option("--a-degrees", a_deg, "Comma-separated degrees, one distinct node each, for A");
  cut->add_option("--b-degrees", b_deg, "Comma-separated degrees, one distinct node each, for B");
  cut->add_option("--samples", samples, "Number of sampled multigraphs");
  cut->add_option("--seed", seed, "Random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunReport report;
  const auto start = std::chrono::steady_clock::now();
  CLI::App* cmd = app.get_subcommands().front();
  report.command = cmd->get_name();
  for (const CLI::Option* opt : cmd->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    report.inputs[opt->get_name().substr(2)] = opt->as<std::string>();
  }
  int code = kExitOk;
  try {
    if (cmd == gen) {
      run_gen_random(report, vol, beta, seed, out, degrees_csv);
    } else if (cmd == red) {
      run_reduce(report, in, d, beta, out, meta_path, gd_source);
    } else if (cmd == pm) {
      run_pm_gadget(report, in, d, out);
    } else if (cmd == val) {
      run_validate(report, in, meta_path, vol, beta);
    } else if (cmd == solve) {
      run_solve_vc(report, in, out, exact_limit, time_limit);
    } else if (cmd == bt) {
      run_bounds_table(report, d, eps, ratio, grid, mid, out);
    } else if (cmd == cut) {
      run_cut(report, vol, beta, a_ids, b_ids, a_deg, b_deg, samples, seed);
    }
    if (!report.passed()) code = kExitFailed;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n" << cmd->help();
    return kExitUsage;
  } catch (const plg::Error& e) {
    report.check("run", false, e.what());
    code = usage_code(e.code()) ? kExitUsage : kExitFailed;
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    report.check("run", false, e.what());
    code = kExitFailed;
    std::cerr << "error: " << e.what() << "\n";
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  const std::string text = report.to_json().dump(2) + "\n";
  const bool stdout_busy = (cmd == solve || cmd == bt) && out.empty();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << text;
  } else if (!stdout_busy) {
    std::cout << text;
  }
  return code;
}
