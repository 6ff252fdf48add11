#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gonet/network.hpp"
#include "gonet/playout.hpp"
#include "gonet/sgf.hpp"
#include "gonet/spectral.hpp"
#include "gonet/turing.hpp"

namespace fs = std::filesystem;
using namespace gonet;

// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 numeric failure.
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kNumeric = 3;

std::ofstream open_out(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / name).string());
  return out;
}

std::vector<GameRecord> load_games_or_die(const std::string& path) {
  SgfLoadResult loaded = load_database(path);
  for (const SgfIssue& issue : loaded.issues)
    std::cerr << "warning: " << issue.source_id << ": " << issue.message << "\n";
  return std::move(loaded.games);
}

int cmd_catalog(const std::string& out_dir) {
  const PatternCatalog& catalog = PatternCatalog::instance();
  int interior = catalog.count(PatternGeometry::Interior);
  int edge = catalog.count(PatternGeometry::Edge);
  int corner = catalog.count(PatternGeometry::Corner);
  std::ofstream csv = open_out(out_dir, "catalog.csv");
  catalog.write_csv(csv);
  std::cout << catalog.size() << " classes (" << interior << " interior, "
            << edge << " edge, " << corner << " corner)\n";
  if (catalog.size() != kNumPatternClasses) {
    std::cerr << "error: expected " << kNumPatternClasses << " classes\n";
    return kValidation;
  }
  return kOk;
}

int cmd_gen(const std::string& policy_name_str, int n_games, uint64_t seed,
            int max_moves, const std::string& out_dir) {
  PlayoutPolicy policy{policy_from_name(policy_name_str), max_moves, seed};
  fs::create_directories(out_dir);
  std::vector<GameRecord> games = generate_games(policy, n_games);
  for (int g = 0; g < static_cast<int>(games.size()); ++g) {
    char name[32];
    std::snprintf(name, sizeof(name), "game_%05d.sgf", g);
    std::ofstream out = open_out(out_dir, name);
    out << to_sgf(games[g]) << '\n';
  }
  std::cout << "wrote " << games.size() << " " << policy_name_str
            << " games to " << out_dir << " (seed " << seed << ")\n";
  return kOk;
}

int cmd_build(const std::string& db_path, double ds, const std::string& metric,
              const std::string& out_dir) {
  BuildOptions options{ds, metric_from_name(metric)};
  std::vector<GameRecord> games = load_games_or_die(db_path);
  if (games.empty()) {
    std::cerr << "error: no games in " << db_path << "\n";
    return kValidation;
  }
  PatternNetwork net = build_network(games, options);
  {
    std::ofstream out = open_out(out_dir, "network.tsv");
    net.save_tsv(out);
  }
  std::cout << "games=" << net.games_used << " k_tot=" << net.k_tot << "\n";
  if (net.k_tot == 0) {
    std::cerr << "error: network has no links\n";
    return kValidation;
  }
  DegreeDistribution dd = degree_distribution(net);
  {
    std::ofstream out = open_out(out_dir, "degrees.csv");
    write_degrees_csv(out, dd);
  }
  {
    std::ofstream out = open_out(out_dir, "degree_curve.csv");
    write_curve_csv(out, dd);
  }
  try {
    std::cout << "integrated-curve log-log slope: in "
              << fit_log_log_slope(dd.curve_in) << ", out "
              << fit_log_log_slope(dd.curve_out) << "\n";
  } catch (const std::invalid_argument&) {
    std::cout << "integrated-curve log-log slope: too few points\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& network_path, double alpha,
                double spectrum_alpha, int top, int n_eigenvectors,
                bool exclude_unit, bool svg, const std::string& out_dir) {
  std::ifstream in(network_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << network_path << "\n";
    return kValidation;
  }
  PatternNetwork net = PatternNetwork::load_tsv(in);

  GoogleMatrix g(net, alpha);
  PageRankResult pr = pagerank(g);
  {
    std::ofstream out = open_out(out_dir, "pagerank.csv");
    write_pagerank_csv(out, pr.p);
  }
  std::cout << "pagerank: " << pr.iterations << " iterations, residual "
            << pr.residual << "\n";

  GoogleMatrix gs(net, spectrum_alpha);
  SpectrumResult spectrum = full_spectrum(gs, n_eigenvectors);
  {
    std::ofstream out = open_out(out_dir, "spectrum.csv");
    write_spectrum_csv(out, spectrum);
  }
  {
    std::ofstream out = open_out(out_dir, "lambda_c.csv");
    out << "x,lambda_c\n";
    for (double x : {50.0, 60.0, 70.0, 80.0, 90.0})
      out << x << ',' << lambda_c(spectrum, x, !exclude_unit) << '\n';
  }
  for (int r = 0; r < static_cast<int>(spectrum.top_vectors.size()); ++r) {
    char name[32];
    std::snprintf(name, sizeof(name), "eigenvector_%02d.csv", r + 1);
    std::ofstream out = open_out(out_dir, name);
    write_eigenvector_csv(out, spectrum.top_vectors[r]);
  }

  // Top patterns by PageRank, drawn mover-relative: the mover (black)
  // plays at the cross.
  const PatternCatalog& catalog = PatternCatalog::instance();
  RankingVector ranking = ranking_vector(std::span<const double>(pr.p));
  top = std::min(top, net.n_nodes);
  {
    std::ofstream out = open_out(out_dir, "top_patterns.txt");
    for (int k = 0; k < top; ++k) {
      int id = ranking.order[k];
      out << "rank " << k + 1 << "  pattern " << id << "  p=" << pr.p[id] << "\n";
      if (net.n_nodes == catalog.size()) out << render_pattern(catalog.representative(id)) << "\n";
      out << "\n";
    }
  }
  if (svg && net.n_nodes == catalog.size()) {
    std::ofstream out = open_out(out_dir, "top_patterns.svg");
    constexpr int cell = 14, pad = 8, cols = 5;
    int rows = (top + cols - 1) / cols;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='"
        << cols * (3 * cell + pad * 2) << "' height='"
        << rows * (3 * cell + pad * 2 + 12) << "'>\n";
    for (int k = 0; k < top; ++k) {
      int id = ranking.order[k];
      int ox = (k % cols) * (3 * cell + pad * 2) + pad;
      int oy = (k / cols) * (3 * cell + pad * 2 + 12) + pad;
      const RawPattern& p = catalog.representative(id);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          int x = ox + (dx + 1) * cell, y = oy + (dy + 1) * cell;
          int idx = -1;
          for (int i = 0; i < kPatternCells; ++i)
            if (kPatternOffsets[i].first == dx && kPatternOffsets[i].second == dy)
              idx = i;
          const char* fill = "white";
          if (dx == 0 && dy == 0) {
            fill = "none";
          } else if (p.cells[idx] == PatternCell::Own) {
            fill = "black";
          } else if (p.cells[idx] == PatternCell::Opponent) {
            fill = "#bbb";
          } else if (p.cells[idx] == PatternCell::OffBoard) {
            fill = "#654";
          }
          out << "<rect x='" << x << "' y='" << y << "' width='" << cell
              << "' height='" << cell << "' stroke='black' fill='" << fill
              << "'/>\n";
          if (dx == 0 && dy == 0)
            out << "<text x='" << x + cell / 2 << "' y='" << y + cell - 3
                << "' text-anchor='middle' font-size='" << cell
                << "'>+</text>\n";
        }
      out << "<text x='" << ox << "' y='" << oy + 3 * cell + 11
          << "' font-size='10'>#" << k + 1 << " id " << id << "</text>\n";
    }
    out << "</svg>\n";
  }
  std::cout << "analyzed network: n=" << net.n_nodes << " k_tot=" << net.k_tot
            << ", spectrum at alpha=" << spectrum_alpha << "\n";
  return kOk;
}

int cmd_turing(const std::string& db_a_path, const std::string& db_b_path,
               const SubsampleScheme& scheme, const AnalysisOptions& options,
               double threshold_k, int profile_ranks, bool dump_correlation,
               const std::string& out_dir) {
  std::vector<GameRecord> db_a = load_games_or_die(db_a_path);
  std::vector<GameRecord> db_b = load_games_or_die(db_b_path);
  TuringReport report = run_turing(db_a, db_b, scheme, options, threshold_k);
  {
    std::ofstream out = open_out(out_dir, "report.json");
    write_report_json(out, report);
  }
  {
    std::ofstream out = open_out(out_dir, "scatter.csv");
    write_scatter_csv(out, report);
  }
  if (dump_correlation) {
    PatternNetwork net_a = build_network(db_a, options.build);
    PatternNetwork net_b = build_network(db_b, options.build);
    std::vector<double> pa = pagerank(GoogleMatrix(net_a, options.alpha)).p;
    std::vector<double> pb = pagerank(GoogleMatrix(net_b, options.alpha)).p;
    std::ofstream out = open_out(out_dir, "correlation.csv");
    write_rank_correlation_csv(out, ranking_vector(std::span<const double>(pa)),
                               ranking_vector(std::span<const double>(pb)),
                               options.half);
  }
  if (profile_ranks > 0) {
    std::vector<EigenvectorProfilePoint> profile =
        eigenvector_profile(db_a, db_b, scheme, options, profile_ranks);
    std::ofstream out = open_out(out_dir, "eigenvector_profile.csv");
    write_profile_csv(out, profile);
  }
  std::cout << "within A: sigma=" << report.within_a.sigma_mean
            << " F=" << report.within_a.f_mean << "\n"
            << "between : sigma=" << report.between.sigma_mean
            << " F=" << report.between.f_mean << "\n"
            << "within B: sigma=" << report.within_b.sigma_mean
            << " F=" << report.within_b.f_mean << "\n"
            << "verdict: " << decision_name(report.overall) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"go pattern-network analysis and source discrimination"};
  app.require_subcommand(1);
  app.fallthrough();  // --out may follow the subcommand name

  std::string out_dir = ".";
  app.add_option("--out", out_dir, "output directory")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "emit the pattern class catalog");

  auto* gen = app.add_subcommand("gen", "generate a synthetic SGF database");
  std::string policy = "uniform";
  int n_games = 100;
  uint64_t seed = 1;
  int max_moves = 250;
  gen->add_option("--policy", policy, "uniform|greedy")->capture_default_str();
  gen->add_option("--games", n_games, "number of games")->capture_default_str();
  gen->add_option("--seed", seed, "base seed")->capture_default_str();
  gen->add_option("--max-moves", max_moves, "move cap per game")->capture_default_str();

  auto* build = app.add_subcommand("build", "build the pattern network from SGF games");
  std::string db_path;
  double ds = 4.0;
  std::string metric = "euclidean";
  build->add_option("db", db_path, "SGF file or directory")->required();
  build->add_option("--ds", ds, "strategic distance")->capture_default_str();
  build->add_option("--metric", metric, "euclidean|chebyshev")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "PageRank, spectrum and top patterns");
  std::string network_path;
  double alpha = 0.85, spectrum_alpha = 1.0;
  int top = 20, n_eigenvectors = 0;
  bool exclude_unit = false, svg = false;
  analyze->add_option("network", network_path, "network TSV from 'build'")->required();
  analyze->add_option("--alpha", alpha, "damping for PageRank")->capture_default_str();
  analyze->add_option("--spectrum-alpha", spectrum_alpha, "damping for the spectrum")
      ->capture_default_str();
  analyze->add_option("--top", top, "patterns to render")->capture_default_str();
  analyze->add_option("--eigvecs", n_eigenvectors, "leading eigenvectors to export")
      ->capture_default_str();
  analyze->add_flag("--exclude-unit", exclude_unit,
                    "drop the unit eigenvalue from lambda_c");
  analyze->add_flag("--svg", svg, "also render top patterns as SVG");

  auto* turing = app.add_subcommand("turing", "same-source / different-source test");
  std::string db_a_path, db_b_path, mode = "redraw";
  SubsampleScheme scheme;
  AnalysisOptions options;
  double threshold_k = 2.0;
  int window = 30, half = 553, profile_ranks = 0;
  double t_ds = 4.0, t_alpha = 0.85;
  std::string t_metric = "euclidean";
  bool dump_correlation = false;
  scheme.group_size = 0;
  turing->add_option("dbA", db_a_path, "first SGF database")->required();
  turing->add_option("dbB", db_b_path, "second SGF database")->required();
  turing->add_option("--group-size", scheme.group_size, "games per subsample")->required();
  turing->add_option("--instances", scheme.n_instances, "subsamples per point")
      ->capture_default_str();
  turing->add_option("--seed", scheme.rng_seed, "draw seed")->capture_default_str();
  turing->add_option("--mode", mode, "redraw|split")->capture_default_str();
  turing->add_option("--alpha", t_alpha, "damping")->capture_default_str();
  turing->add_option("--ds", t_ds, "strategic distance")->capture_default_str();
  turing->add_option("--metric", t_metric, "euclidean|chebyshev")->capture_default_str();
  turing->add_option("--window", window, "top-list size for S_N")->capture_default_str();
  turing->add_option("--half", half, "rank-gap truncation for sigma")->capture_default_str();
  turing->add_option("--threshold", threshold_k, "separation threshold k")
      ->capture_default_str();
  turing->add_option("--eigvec-ranks", profile_ranks,
                     "also profile the first K eigenvectors")->capture_default_str();
  turing->add_flag("--dump-correlation", dump_correlation,
                   "write full-vs-full PageRank rank pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(out_dir);
    if (gen->parsed()) return cmd_gen(policy, n_games, seed, max_moves, out_dir);
    if (build->parsed()) return cmd_build(db_path, ds, metric, out_dir);
    if (analyze->parsed())
      return cmd_analyze(network_path, alpha, spectrum_alpha, top,
                         n_eigenvectors, exclude_unit, svg, out_dir);
    if (turing->parsed()) {
      scheme.mode = sample_mode_from_name(mode);
      options.build = BuildOptions{t_ds, metric_from_name(t_metric)};
      options.alpha = t_alpha;
      options.window = window;
      options.half = half;
      return cmd_turing(db_a_path, db_b_path, scheme, options, threshold_k,
                        profile_ranks, dump_correlation, out_dir);
    }
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const EigensolverFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}
