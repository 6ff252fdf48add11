#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gonet/metrics.hpp"
#include "gonet/spectral.hpp"

namespace gonet {

class InsufficientGames : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Redraw: each instance samples group_size games without replacement,
// independently of other instances. DisjointSplit: one seeded shuffle, then
// consecutive disjoint chunks (instances capped at size / group_size).
enum class SampleMode : uint8_t { Redraw, DisjointSplit };
const char* sample_mode_name(SampleMode m);
SampleMode sample_mode_from_name(std::string_view name);

struct SubsampleScheme {
  int group_size = 1000;
  int n_instances = 10;
  uint64_t rng_seed = 0;
  SampleMode mode = SampleMode::Redraw;
};

struct AnalysisOptions {
  BuildOptions build;
  double alpha = 0.85;
  int window = 30;
  int half = 0;  // 0 = floor(N/2)
  double pagerank_tol = 1e-12;
  int pagerank_max_iter = 10000;
};

// Mean and standard deviation of (F, S_N, sigma) between a full reference
// database and subsampled networks of another.
struct IndicatorPoint {
  std::string label;  // e.g. "A|A", "A|B", "B|B"
  int group_size = 0;
  int n_instances = 0;
  double f_mean = 0, f_sd = 0;
  double sn_mean = 0, sn_sd = 0;
  double sigma_mean = 0, sigma_sd = 0;
};

enum class Decision : uint8_t { SameSource, DifferentSource, Inconclusive };
const char* decision_name(Decision d);

struct TuringVerdict {
  Decision decision = Decision::Inconclusive;
  double sep_f = 0, sep_sn = 0, sep_sigma = 0;
};

// Effect size per metric: |mean_between - mean_within| over the summed
// standard deviations. DifferentSource when at least 2 of 3 separations
// exceed k; SameSource when all are below 1; Inconclusive otherwise.
TuringVerdict verdict(const IndicatorPoint& within, const IndicatorPoint& between,
                      double k = 2.0);

// Three points: full-A reference vs subsets of A, vs subsets of B, and
// full-B reference vs subsets of B. Empty when n_instances == 0. The sigma
// entries use the symmetrized max(sigma(ref, inst), sigma(inst, ref)).
std::vector<IndicatorPoint> indicator_points(const std::vector<GameRecord>& db_a,
                                             const std::vector<GameRecord>& db_b,
                                             const SubsampleScheme& scheme,
                                             const AnalysisOptions& options = {});

struct TuringReport {
  SubsampleScheme scheme;
  double alpha = 0.85;
  double threshold_k = 2.0;
  IndicatorPoint within_a, between, within_b;
  TuringVerdict verdict_a;  // within_a vs between
  TuringVerdict verdict_b;  // within_b vs between
  Decision overall = Decision::Inconclusive;
};

// Full protocol: indicator points, one verdict per within-point, and the
// combined decision (DifferentSource/SameSource only when both verdicts
// agree, Inconclusive otherwise).
TuringReport run_turing(const std::vector<GameRecord>& db_a,
                        const std::vector<GameRecord>& db_b,
                        const SubsampleScheme& scheme,
                        const AnalysisOptions& options = {},
                        double threshold_k = 2.0);

// Per-eigenvector comparison of two sources: instances draw one group from
// each database, and rank r compares the r-th right eigenvectors (|lambda|
// descending) of the two Google matrices.
struct EigenvectorProfilePoint {
  int rank = 0;  // 1-based; rank 1 is the PageRank eigenvector
  double f_mean = 0, f_sd = 0;
  double so_mean = 0, so_sd = 0;
  double sn_mean = 0, sn_sd = 0;
};

std::vector<EigenvectorProfilePoint> eigenvector_profile(
    const std::vector<GameRecord>& db_a, const std::vector<GameRecord>& db_b,
    const SubsampleScheme& scheme, const AnalysisOptions& options = {},
    int n_eigenvectors = 7);

void write_report_json(std::ostream& out, const TuringReport& report);
void write_scatter_csv(std::ostream& out, const TuringReport& report);
void write_profile_csv(std::ostream& out,
                       const std::vector<EigenvectorProfilePoint>& profile);

}  // namespace gonet
