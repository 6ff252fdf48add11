#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gonet/pattern.hpp"

namespace gonet {

enum class DistanceMetric : uint8_t { Euclidean, Chebyshev };
const char* metric_name(DistanceMetric m);
DistanceMetric metric_from_name(std::string_view name);  // throws std::invalid_argument

struct BuildOptions {
  double ds = 4.0;               // strategic distance, strict comparison
  DistanceMetric metric = DistanceMetric::Euclidean;
};

class EmptyNetwork : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class NetworkFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weighted directed pattern network. Weights count link occurrences over the
// games of a database. n_nodes is the catalog size except in small test
// fixtures.
struct PatternNetwork {
  int n_nodes = kNumPatternClasses;
  double ds = 4.0;
  DistanceMetric metric = DistanceMetric::Euclidean;
  std::unordered_map<uint32_t, uint32_t> weights;  // key = from * n_nodes + to
  uint64_t k_tot = 0;
  int games_used = 0;

  void add_link(int from, int to, uint32_t count = 1) {
    weights[static_cast<uint32_t>(from) * n_nodes + to] += count;
    k_tot += count;
  }
  uint32_t weight(int from, int to) const {
    auto it = weights.find(static_cast<uint32_t>(from) * n_nodes + to);
    return it == weights.end() ? 0 : it->second;
  }
  std::vector<uint64_t> out_degrees() const;
  std::vector<uint64_t> in_degrees() const;

  // Edge list TSV: one header line with the build parameters, then
  // from_id<TAB>to_id<TAB>count sorted by (from, to).
  void save_tsv(std::ostream& out) const;
  static PatternNetwork load_tsv(std::istream& in);  // throws NetworkFormatError
};

// Links each replay event to every still-open earlier move closer than ds
// (strict), removing closed moves from the open list; the open list never
// crosses a game boundary. Self-links are allowed.
PatternNetwork build_network(const std::vector<GameRecord>& games,
                             const BuildOptions& options = {});

// Entrywise sum; requires identical n_nodes, ds and metric. Associative and
// commutative, so chunked builds can be combined freely.
PatternNetwork merge(const std::vector<PatternNetwork>& nets);

struct DegreeDistribution {
  std::vector<uint64_t> k_in, k_out;
  // One point per distinct positive degree K, ascending:
  // (K / k_tot, fraction of nodes with at least K links). The left endpoint
  // is (k_min/k_tot, 1 - N0/N), the right endpoint (k_max/k_tot, 1/N).
  std::vector<std::pair<double, double>> curve_in, curve_out;
};

DegreeDistribution degree_distribution(const PatternNetwork& net);  // throws EmptyNetwork

// Least-squares slope of log10 P against log10 K* over points whose log10 K*
// lies in the middle [lo_frac, hi_frac] span of the curve's range.
double fit_log_log_slope(const std::vector<std::pair<double, double>>& curve,
                         double lo_frac = 0.1, double hi_frac = 0.9);

void write_degrees_csv(std::ostream& out, const DegreeDistribution& dd);
void write_curve_csv(std::ostream& out, const DegreeDistribution& dd);

}  // namespace gonet
