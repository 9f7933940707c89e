#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "rancher/geom.hpp"
#include "rancher/investor.hpp"
#include "rancher/io.hpp"
#include "rancher/lyapunov.hpp"
#include "rancher/oracle.hpp"
#include "rancher/rancher.hpp"
#include "rancher/rng.hpp"
#include "rancher/stats.hpp"
#include "rancher/svg.hpp"

namespace rancher::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("RANCHER_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text,
                                             std::uint64_t steps) {
  if (text == "log") return geometric_checkpoints(steps);
  if (text == "all") return all_checkpoints(steps);
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      const std::uint64_t v = std::stoull(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("invalid checkpoint '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError("empty checkpoint list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() > steps) {
    throw UsageError("checkpoint " + format_u64(out.back()) +
                     " exceeds --steps " + format_u64(steps));
  }
  return out;
}

using Params = std::vector<std::pair<std::string, std::string>>;

json make_manifest(const std::string& command, const Params& params,
                   std::uint64_t seed, double duration_seconds) {
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = v;
  json m = json::object();
  m["command"] = command;
  m["parameters"] = std::move(p);
  m["seed"] = seed;
  m["rng"] = std::string(kRngName);
  m["version"] = kVersion;
  m["duration_seconds"] = duration_seconds;
  return m;
}

int write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return 2;
  }
  return 0;
}

// Write the primary payload to a file (with a manifest sidecar) or stdout.
int emit_with_manifest(const std::string& out_path, const std::string& content,
                       const json& manifest) {
  if (out_path.empty()) {
    std::cout << content;
    return 0;
  }
  if (const int rc = write_text_file(out_path, content)) return rc;
  return write_text_file(out_path + ".manifest.json",
                         manifest.dump(2) + "\n");
}

// ---------------------------------------------------------------- rancher

constexpr std::string_view kRancherColumns[] = {
    "n",     "x",         "y",     "norm",        "width",
    "direction", "alpha", "alpha_prime", "d",     "hull_size"};

std::string rancher_csv(std::span<const SampleRecord> records) {
  std::ostringstream os;
  CsvWriter w(os);
  w.header(kRancherColumns);
  for (const SampleRecord& r : records) {
    w.cell(r.n);
    w.cell(r.x);
    w.cell(r.y);
    w.cell(r.norm);
    w.cell(r.width);
    w.cell(r.direction);
    w.cell(r.extra("alpha"));
    w.cell(r.extra("alpha_prime"));
    w.cell(r.extra("d"));
    w.cell(r.extra("hull_size"));
    w.end_row();
  }
  return os.str();
}

constexpr std::string_view kInvestorColumns[] = {
    "n", "x", "rmax", "rmin", "width", "ratio", "status"};

std::string investor_csv(std::span<const SampleRecord> records) {
  std::ostringstream os;
  CsvWriter w(os);
  w.header(kInvestorColumns);
  for (const SampleRecord& r : records) {
    w.cell(r.n);
    // x can overflow to infinity on the step that trips the guard
    w.cell(std::isfinite(r.x) ? std::optional<double>(r.x) : std::nullopt);
    w.cell(r.extra("rmax"));
    w.cell(r.extra("rmin"));
    w.cell(r.width);
    w.cell(r.extra("ratio"));
    w.cell(std::string_view(r.status));
    w.end_row();
  }
  return os.str();
}

// Inline fast-vs-oracle comparison for one walk; returns an error message
// or nothing. Meant for short runs (the hull re-check is O(n log n) per
// checkpoint, legality O(hull) per step).
std::optional<std::string> validate_rancher(std::uint64_t steps,
                                            std::uint64_t seed,
                                            std::span<const std::uint64_t> cps) {
  RandomStream rs = RandomStream::derive(seed, 0);
  RancherWalk walk(/*keep_path=*/true);
  std::size_t ci = 0;
  while (ci < cps.size() && cps[ci] == 0) ++ci;
  for (std::uint64_t n = 0; n < steps; ++n) {
    const auto hull_before = walk.hull().vertices();
    const Point2 a = walk.position();
    walk.step(rs);
    const Point2 b = walk.position();
    if (std::fabs(dist(a, b) - 1.0) > 1e-12 * std::max(1.0, norm(b))) {
      return "step " + format_u64(n) + " is not unit length";
    }
    if (oracle::segment_hits_interior(hull_before, a, b)) {
      return "step " + format_u64(n) + " crosses the hull interior";
    }
    if (ci < cps.size() && cps[ci] == n + 1) {
      while (ci < cps.size() && cps[ci] == n + 1) ++ci;
      const auto scratch = oracle::hull_of(*walk.path());
      if (!oracle::same_vertex_set(walk.hull().vertices(), scratch, 1e-9)) {
        return "incremental hull diverged from scratch hull at n = " +
               format_u64(n + 1);
      }
      for (const Point2& p : *walk.path()) {
        if (!walk.hull().contains(p)) {
          return "past point escaped the hull at n = " + format_u64(n + 1);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> validate_investor(std::uint64_t steps, double alpha,
                                             std::uint64_t seed) {
  RandomStream rs = RandomStream::derive(seed, 0);
  InvestorWalk walk(alpha, /*keep_path=*/true);
  for (std::uint64_t n = 0; n < steps && !walk.blown_up(); ++n) {
    walk.step(rs);
    const auto& xs = *walk.path();
    const auto [rmax, rmin] = walk.extremal_rates();
    const auto [nmax, nmin] = oracle::naive_rates(xs);
    if (std::fabs(rmax - nmax) > 1e-9 || std::fabs(rmin - nmin) > 1e-9) {
      return "extremal rates diverged from naive scan at n = " +
             format_u64(n + 1);
    }
    if (std::fabs(walk.width() - oracle::naive_investor_width(xs)) > 1e-9) {
      return "width diverged from naive scan at n = " + format_u64(n + 1);
    }
  }
  return std::nullopt;
}

struct SimulateRancherOpts {
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::string checkpoints = "log";
  std::string out;
  std::string plot;
  bool validate = false;
};

int cmd_simulate_rancher(const SimulateRancherOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cps = parse_checkpoints(o.checkpoints, o.steps);
  const auto records = run_rancher(o.steps, o.seed, cps);

  if (o.validate) {
    if (const auto err = validate_rancher(o.steps, o.seed, cps)) {
      std::cerr << "validation failed: " << *err << "\n";
      return 3;
    }
    std::cerr << "validation ok: " << format_u64(o.steps)
              << " steps against the oracle\n";
  }

  const double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const json manifest = make_manifest(
      "simulate-rancher",
      {{"steps", format_u64(o.steps)},
       {"seed", format_u64(o.seed)},
       {"checkpoints", o.checkpoints},
       {"out", o.out},
       {"plot", o.plot},
       {"validate", o.validate ? "true" : "false"}},
      o.seed, dt);

  if (!o.plot.empty()) {
    // Re-run with path retention; same substream, so the same walk.
    RandomStream rs = RandomStream::derive(o.seed, 0);
    RancherWalk walk(/*keep_path=*/true);
    for (std::uint64_t n = 0; n < o.steps; ++n) walk.step(rs);
    svg::PlotOptions popt;
    popt.title = "hull-avoiding walk, " + format_u64(o.steps) + " steps";
    popt.manifest_json = manifest.dump();
    const std::string img = svg::render_path_plot(
        *walk.path(), walk.hull().vertices(), popt);
    if (const int rc = write_text_file(o.plot, img)) return rc;
  }

  return emit_with_manifest(o.out, rancher_csv(records), manifest);
}

// --------------------------------------------------------------- investor

struct SimulateInvestorOpts {
  std::uint64_t steps = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string checkpoints = "log";
  std::string out;
  std::string plot;
  bool validate = false;
};

int cmd_simulate_investor(const SimulateInvestorOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cps = parse_checkpoints(o.checkpoints, o.steps);
  const auto records = run_investor(o.steps, o.alpha, o.seed, cps);

  if (o.validate) {
    if (const auto err = validate_investor(o.steps, o.alpha, o.seed)) {
      std::cerr << "validation failed: " << *err << "\n";
      return 3;
    }
    std::cerr << "validation ok: rates and widths match the naive scans\n";
  }

  const double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const json manifest = make_manifest(
      "simulate-investor",
      {{"steps", format_u64(o.steps)},
       {"alpha", format_double(o.alpha)},
       {"seed", format_u64(o.seed)},
       {"checkpoints", o.checkpoints},
       {"out", o.out},
       {"plot", o.plot},
       {"validate", o.validate ? "true" : "false"}},
      o.seed, dt);

  if (!o.plot.empty()) {
    RandomStream rs = RandomStream::derive(o.seed, 0);
    InvestorWalk walk(o.alpha, /*keep_path=*/true);
    for (std::uint64_t n = 0; n < o.steps && !walk.blown_up(); ++n) {
      walk.step(rs);
    }
    std::vector<Point2> graph;
    graph.reserve(walk.path()->size());
    for (std::size_t m = 0; m < walk.path()->size(); ++m) {
      graph.push_back({static_cast<double>(m), (*walk.path())[m]});
    }
    svg::PlotOptions popt;
    popt.title = "extremal investor, alpha = " + format_double(o.alpha);
    popt.manifest_json = manifest.dump();
    const std::string img = svg::render_graph_plot(
        graph, walk.upper_chain(), walk.lower_chain(), popt);
    if (const int rc = write_text_file(o.plot, img)) return rc;
  }

  return emit_with_manifest(o.out, investor_csv(records), manifest);
}

// --------------------------------------------------------------- exponent

struct EstimateExponentOpts {
  std::string model;
  double alpha = 1.0;
  double stub_exponent = 0.75;
  std::string lengths = "1000,10000,100000";
  std::uint64_t reps = 100;
  std::string aggregator = "median";
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
};

int cmd_estimate_exponent(const EstimateExponentOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  ExponentParams params;
  if (o.model == "rancher") {
    params.model = Model::Rancher;
  } else if (o.model == "investor") {
    params.model = Model::Investor;
  } else if (o.model == "stub") {
    params.model = Model::Stub;
  } else {
    throw UsageError("invalid --model '" + o.model +
                     "' (expected rancher|investor|stub)");
  }
  params.alpha = o.alpha;
  params.stub_exponent = o.stub_exponent;
  if (o.aggregator == "median") {
    params.aggregator = Aggregator::Median;
  } else if (o.aggregator == "mean") {
    params.aggregator = Aggregator::Mean;
  } else if (o.aggregator == "per-walk-points") {
    params.aggregator = Aggregator::PerWalkPoints;
  } else {
    throw UsageError("invalid --aggregator '" + o.aggregator +
                     "' (expected median|mean|per-walk-points)");
  }
  {
    std::stringstream ss(o.lengths);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        params.lengths.push_back(std::stoull(tok));
      } catch (const std::exception&) {
        throw UsageError("invalid length '" + tok + "'");
      }
    }
  }
  if (params.lengths.empty()) throw UsageError("empty --lengths");
  params.reps = o.reps;
  params.seed = o.seed;
  params.threads = resolve_threads(o.threads);

  const ExponentResult res = exponent_experiment(params);

  const double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const json manifest = make_manifest(
      "estimate-exponent",
      {{"model", o.model},
       {"alpha", format_double(o.alpha)},
       {"stub_exponent", format_double(o.stub_exponent)},
       {"lengths", o.lengths},
       {"reps", format_u64(o.reps)},
       {"aggregator", o.aggregator},
       {"threads", std::to_string(params.threads)},
       {"out", o.out}},
      o.seed, dt);

  json doc = json::object();
  doc["model"] = o.model;
  if (params.model == Model::Investor) doc["alpha"] = o.alpha;
  if (params.model == Model::Stub) doc["stub_exponent"] = o.stub_exponent;
  doc["aggregator"] = o.aggregator;
  doc["protocol"] = res.protocol;
  doc["slope"] = res.fit.slope;
  doc["stderr"] = res.fit.stderr_slope;
  doc["intercept"] = res.fit.intercept;
  doc["npoints"] = res.fit.npoints;
  auto points_json = [](const std::vector<std::pair<double, double>>& pts) {
    json arr = json::array();
    for (const auto& [n, w] : pts) {
      json p = json::object();
      p["n"] = static_cast<std::uint64_t>(std::llround(n));
      p["w"] = w;
      arr.push_back(std::move(p));
    }
    return arr;
  };
  doc["points"] = points_json(res.points);
  if (params.aggregator != Aggregator::PerWalkPoints) {
    doc["raw_points"] = points_json(res.raw_points);
  }
  doc["dropped"] = res.dropped;
  doc["rng"] = std::string(kRngName);
  doc["manifest"] = manifest;

  return emit_with_manifest(o.out, doc.dump(2) + "\n", manifest);
}

// ------------------------------------------------------------ drift-check

struct DriftCheckOpts {
  std::uint64_t steps = 100000;
  std::uint64_t reps = 50;
  std::uint64_t seed = 0;
  double dstar = 30.0;
  double c = 1.0 / 6.0;
  std::uint64_t m = 64;
  double epsilon = std::numbers::pi / 8.0;
  int threads = 0;
  std::string out;
};

int cmd_drift_check(const DriftCheckOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SurveyParams params;
  params.steps = o.steps;
  params.reps = o.reps;
  params.seed = o.seed;
  params.cfg.c = o.c;
  params.cfg.d_star = o.dstar;
  params.cfg.epsilon = o.epsilon;
  params.m = o.m;
  params.threads = resolve_threads(o.threads);

  const SurveyReport rep = run_survey(params);

  const double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const json manifest = make_manifest(
      "drift-check",
      {{"steps", format_u64(o.steps)},
       {"reps", format_u64(o.reps)},
       {"dstar", format_double(o.dstar)},
       {"c", format_double(o.c)},
       {"m", format_u64(o.m)},
       {"epsilon", format_double(o.epsilon)},
       {"threads", std::to_string(params.threads)},
       {"out", o.out}},
      o.seed, dt);

  json doc = json::object();
  doc["rng"] = std::string(kRngName);
  json summary = json::object();
  summary["samples"] = rep.samples;
  summary["degenerate_steps"] = rep.degenerate_steps;
  summary["dx_violations"] = rep.dx_violations;
  summary["min_f"] = rep.min_f;
  summary["max_delta_f_on_A"] = rep.max_delta_f_on_A;
  summary["bound_cap"] = rep.bound_cap;
  summary["pooled_gain_mean"] = rep.pooled_gain_mean;
  summary["pooled_gain_count"] = rep.pooled_gain_count;
  doc["summary"] = std::move(summary);

  json bins = json::array();
  for (const DriftBin& b : rep.bins) {
    json jb = json::object();
    jb["in_A"] = b.in_A;
    jb["d_decade"] = d_decade_label(b.d_decade);
    jb["alpha_bands"] = band_label(b.band_lo) + " x " + band_label(b.band_hi);
    jb["count"] = b.count;
    jb["mean_delta_f"] = b.mean_delta_f;
    jb["se_delta_f"] = b.se_delta_f;
    jb["max_delta_f"] = b.max_delta_f;
    bins.push_back(std::move(jb));
  }
  doc["bins"] = std::move(bins);

  json conds = json::array();
  for (const ConditionReport& c : rep.conditions) {
    json jc = json::object();
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["count"] = c.count;
    jc["estimate"] = c.estimate;
    jc["se"] = c.se;
    jc["note"] = c.note;
    conds.push_back(std::move(jc));
  }
  doc["conditions"] = std::move(conds);
  doc["manifest"] = manifest;

  return emit_with_manifest(o.out, doc.dump(2) + "\n", manifest);
}

// ------------------------------------------------------------------ plot

struct PlotOpts {
  std::string in;
  std::string out;
};

// Split a counterclockwise hull into left-to-right lower/upper chains.
std::pair<std::vector<Point2>, std::vector<Point2>> split_chains(
    const std::vector<Point2>& hull) {
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (hull[i].x < hull[lo].x) lo = i;
    if (hull[i].x > hull[hi].x) hi = i;
  }
  std::vector<Point2> lower, upper;
  for (std::size_t i = lo;; i = (i + 1) % hull.size()) {
    lower.push_back(hull[i]);
    if (i == hi) break;
  }
  for (std::size_t i = hi;; i = (i + 1) % hull.size()) {
    upper.push_back(hull[i]);
    if (i == lo) break;
  }
  std::reverse(upper.begin(), upper.end());
  return {lower, upper};
}

int cmd_plot(const PlotOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ifstream in(o.in, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << o.in << "'\n";
    return 2;
  }

  const std::string out_path = o.out.empty() ? o.in + ".svg" : o.out;
  std::string img;

  const bool json_mode = o.in.size() >= 5 &&
                         o.in.compare(o.in.size() - 5, 5, ".json") == 0;
  try {
    if (json_mode) {
      json doc = json::parse(in);
      RegressionFit fit;
      fit.slope = doc.at("slope").get<double>();
      fit.intercept = doc.at("intercept").get<double>();
      fit.stderr_slope = doc.value("stderr", 0.0);
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : doc.at("points")) {
        pts.emplace_back(p.at("n").get<double>(), p.at("w").get<double>());
      }
      fit.npoints = pts.size();
      svg::PlotOptions popt;
      popt.title = "width vs n (log10-log10)";
      img = svg::render_loglog_scatter(pts, fit, popt);
    } else {
      const CsvTable table = read_csv(in);
      const auto col_x = table.column("x");
      const auto col_y = table.column("y");
      const auto col_n = table.column("n");
      svg::PlotOptions popt;
      if (col_x && col_y) {
        // planar walk CSV: path polyline plus the hull of the sampled points
        std::vector<Point2> path;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
          const auto vx = parse_cell(table.rows[r][*col_x], r + 2);
          const auto vy = parse_cell(table.rows[r][*col_y], r + 2);
          if (vx && vy) path.push_back({*vx, *vy});
        }
        std::vector<Point2> hull;
        if (!path.empty()) hull = oracle::hull_of(path);
        popt.title = "walk path (" + format_u64(path.size()) + " checkpoints)";
        img = svg::render_path_plot(path, hull, popt);
      } else if (col_x && col_n) {
        // investor CSV: log-price graph with hull chains
        std::vector<Point2> graph;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
          const auto vn = parse_cell(table.rows[r][*col_n], r + 2);
          const auto vx = parse_cell(table.rows[r][*col_x], r + 2);
          if (vn && vx) graph.push_back({*vn, *vx});
        }
        std::vector<Point2> lower, upper;
        if (graph.size() >= 2) {
          std::tie(lower, upper) = split_chains(oracle::hull_of(graph));
        }
        popt.title = "investor log price (" + format_u64(graph.size()) +
                     " checkpoints)";
        img = svg::render_graph_plot(graph, upper, lower, popt);
      } else {
        std::cerr << "error: unrecognized csv header in '" << o.in << "'\n";
        return 1;
      }
    }
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: bad json input: " << e.what() << "\n";
    return 1;
  }

  const double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  const json manifest = make_manifest(
      "plot", {{"in", o.in}, {"out", out_path}}, 0, dt);
  // Re-render with the manifest comment embedded.
  const std::size_t at = img.find('\n');
  img.insert(at + 1, "<!-- " + manifest.dump() + " -->\n");

  return write_text_file(out_path, img);
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "rancher - simulation and estimation for the hull-avoiding planar "
      "walk and the extremal-investor process"};
  app.require_subcommand(1);

  SimulateRancherOpts ro;
  auto* sim_r = app.add_subcommand(
      "simulate-rancher", "run one hull-avoiding walk and write checkpoint CSV");
  sim_r->add_option("--steps", ro.steps, "number of steps")->required();
  sim_r->add_option("--seed", ro.seed, "rng seed (decimal u64)");
  sim_r->add_option("--checkpoints", ro.checkpoints,
                    "'log' (default), 'all', or a comma list of steps");
  sim_r->add_option("--out", ro.out, "output csv path (default: stdout)");
  sim_r->add_option("--plot", ro.plot, "also write an svg of path and hull");
  sim_r->add_flag("--validate", ro.validate,
                  "cross-check every step against the oracle");

  SimulateInvestorOpts io_;
  auto* sim_i = app.add_subcommand(
      "simulate-investor", "run one extremal-investor walk and write CSV");
  sim_i->add_option("--steps", io_.steps, "number of steps")->required();
  sim_i->add_option("--alpha", io_.alpha, "influence parameter (>= 0)")
      ->required();
  sim_i->add_option("--seed", io_.seed, "rng seed");
  sim_i->add_option("--checkpoints", io_.checkpoints,
                    "'log' (default), 'all', or a comma list");
  sim_i->add_option("--out", io_.out, "output csv path (default: stdout)");
  sim_i->add_option("--plot", io_.plot,
                    "also write an svg of the graph and its hull chains");
  sim_i->add_flag("--validate", io_.validate,
                  "cross-check rates/widths against naive scans");

  EstimateExponentOpts eo;
  auto* est = app.add_subcommand(
      "estimate-exponent", "fit the width-scaling exponent by log-log OLS");
  est->add_option("--model", eo.model, "rancher|investor|stub")->required();
  est->add_option("--alpha", eo.alpha, "investor influence parameter");
  est->add_option("--exponent", eo.stub_exponent,
                  "stub model emits w = n^exponent exactly");
  est->add_option("--lengths", eo.lengths, "comma list of walk lengths");
  est->add_option("--reps", eo.reps, "independent walks per length");
  est->add_option("--aggregator", eo.aggregator,
                  "median|mean|per-walk-points");
  est->add_option("--seed", eo.seed, "rng seed");
  est->add_option("--threads", eo.threads,
                  "worker threads (default: RANCHER_THREADS or all cores)");
  est->add_option("--out", eo.out, "output json path (default: stdout)");

  DriftCheckOpts dco;
  auto* drift = app.add_subcommand(
      "drift-check", "empirical drift survey of the walk's potential f");
  drift->add_option("--steps", dco.steps, "steps per walk");
  drift->add_option("--reps", dco.reps, "number of walks");
  drift->add_option("--seed", dco.seed, "rng seed");
  drift->add_option("--dstar", dco.dstar, "threshold defining the set A");
  drift->add_option("--c", dco.c, "constant in the potential");
  drift->add_option("--m", dco.m, "lag of the m-step gain check");
  drift->add_option("--epsilon", dco.epsilon, "angle cutoff for the bands");
  drift->add_option("--threads", dco.threads, "worker threads");
  drift->add_option("--out", dco.out, "output json path (default: stdout)");

  PlotOpts po;
  auto* plot = app.add_subcommand(
      "plot", "render a simulate CSV or an exponent JSON as svg");
  plot->add_option("--in", po.in, "input csv/json file")->required();
  plot->add_option("--out", po.out, "output svg path (default: <in>.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (sim_r->parsed()) return cmd_simulate_rancher(ro);
    if (sim_i->parsed()) return cmd_simulate_investor(io_);
    if (est->parsed()) return cmd_estimate_exponent(eo);
    if (drift->parsed()) return cmd_drift_check(dco);
    if (plot->parsed()) return cmd_plot(po);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("rancher");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace rancher::cli
