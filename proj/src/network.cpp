#include "gonet/network.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace gonet {

const char* metric_name(DistanceMetric m) {
  return m == DistanceMetric::Euclidean ? "euclidean" : "chebyshev";
}

DistanceMetric metric_from_name(std::string_view name) {
  if (name == "euclidean") return DistanceMetric::Euclidean;
  if (name == "chebyshev") return DistanceMetric::Chebyshev;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

namespace {

bool within_ds(Coord a, Coord b, const BuildOptions& opts) {
  int dx = a.x - b.x, dy = a.y - b.y;
  if (opts.metric == DistanceMetric::Euclidean)
    return static_cast<double>(dx * dx + dy * dy) < opts.ds * opts.ds;
  return static_cast<double>(std::max(std::abs(dx), std::abs(dy))) < opts.ds;
}

}  // namespace

std::vector<uint64_t> PatternNetwork::out_degrees() const {
  std::vector<uint64_t> deg(n_nodes, 0);
  for (auto [key, w] : weights) deg[key / n_nodes] += w;
  return deg;
}

std::vector<uint64_t> PatternNetwork::in_degrees() const {
  std::vector<uint64_t> deg(n_nodes, 0);
  for (auto [key, w] : weights) deg[key % n_nodes] += w;
  return deg;
}

PatternNetwork build_network(const std::vector<GameRecord>& games,
                             const BuildOptions& options) {
  const PatternCatalog& catalog = PatternCatalog::instance();
  PatternNetwork net;
  net.ds = options.ds;
  net.metric = options.metric;

  struct OpenMove {
    Coord pos;
    int pattern;
  };
  std::vector<OpenMove> open;
  for (const GameRecord& game : games) {
    open.clear();
    replay_visit(game, [&](int, StoneColor color, Coord pos, const Board& before) {
      int to = catalog.id_of(extract_pattern(before, pos, color));
      for (auto it = open.begin(); it != open.end();) {
        if (within_ds(it->pos, pos, options)) {
          net.add_link(it->pattern, to);
          it = open.erase(it);
        } else {
          ++it;
        }
      }
      open.push_back({pos, to});
    });
    ++net.games_used;
  }
  return net;
}

PatternNetwork merge(const std::vector<PatternNetwork>& nets) {
  PatternNetwork out;
  if (nets.empty()) return out;
  out.n_nodes = nets.front().n_nodes;
  out.ds = nets.front().ds;
  out.metric = nets.front().metric;
  for (const PatternNetwork& net : nets) {
    if (net.n_nodes != out.n_nodes || net.ds != out.ds || net.metric != out.metric)
      throw std::invalid_argument("merge requires identical build parameters");
    for (auto [key, w] : net.weights) out.weights[key] += w;
    out.k_tot += net.k_tot;
    out.games_used += net.games_used;
  }
  return out;
}

void PatternNetwork::save_tsv(std::ostream& out) const {
  out << "# n_nodes=" << n_nodes << "\tk_tot=" << k_tot
      << "\tgames_used=" << games_used << "\tds=" << std::setprecision(17)
      << ds << "\tmetric=" << metric_name(metric) << "\n";
  out << "from_id\tto_id\tcount\n";
  std::vector<std::pair<uint32_t, uint32_t>> edges(weights.begin(), weights.end());
  std::sort(edges.begin(), edges.end());
  for (auto [key, w] : edges)
    out << key / n_nodes << '\t' << key % n_nodes << '\t' << w << '\n';
}

PatternNetwork PatternNetwork::load_tsv(std::istream& in) {
  PatternNetwork net;
  std::string line;
  if (!std::getline(in, line) || line.empty() || line[0] != '#')
    throw NetworkFormatError("missing header line");
  uint64_t declared_ktot = 0;
  {
    std::istringstream header(line.substr(1));
    std::string token;
    bool saw_nodes = false;
    while (header >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos) continue;
      std::string key = token.substr(0, eq), value = token.substr(eq + 1);
      try {
        if (key == "n_nodes") {
          net.n_nodes = std::stoi(value);
          saw_nodes = true;
        } else if (key == "k_tot") {
          declared_ktot = std::stoull(value);
        } else if (key == "games_used") {
          net.games_used = std::stoi(value);
        } else if (key == "ds") {
          net.ds = std::stod(value);
        } else if (key == "metric") {
          net.metric = metric_from_name(value);
        }
      } catch (const std::invalid_argument& e) {
        throw NetworkFormatError(e.what());
      } catch (const std::exception&) {
        throw NetworkFormatError("bad header value " + token);
      }
    }
    if (!saw_nodes || net.n_nodes <= 0)
      throw NetworkFormatError("header lacks n_nodes");
  }
  if (!std::getline(in, line) || line.rfind("from_id", 0) != 0)
    throw NetworkFormatError("missing column line");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    long long from, to, count;
    if (!(row >> from >> to >> count) || from < 0 || to < 0 ||
        from >= net.n_nodes || to >= net.n_nodes || count <= 0)
      throw NetworkFormatError("bad edge line: " + line);
    net.add_link(static_cast<int>(from), static_cast<int>(to),
                 static_cast<uint32_t>(count));
  }
  if (declared_ktot != net.k_tot)
    throw NetworkFormatError("k_tot header does not match edge sum");
  return net;
}

DegreeDistribution degree_distribution(const PatternNetwork& net) {
  if (net.k_tot == 0) throw EmptyNetwork("network has no links");
  DegreeDistribution dd;
  dd.k_in = net.in_degrees();
  dd.k_out = net.out_degrees();
  auto curve = [&](const std::vector<uint64_t>& degrees) {
    std::vector<uint64_t> positive;
    for (uint64_t d : degrees)
      if (d > 0) positive.push_back(d);
    std::sort(positive.begin(), positive.end());
    std::vector<std::pair<double, double>> points;
    const double n = static_cast<double>(net.n_nodes);
    const double ktot = static_cast<double>(net.k_tot);
    for (size_t i = 0; i < positive.size(); ++i) {
      if (i > 0 && positive[i] == positive[i - 1]) continue;
      points.emplace_back(static_cast<double>(positive[i]) / ktot,
                          static_cast<double>(positive.size() - i) / n);
    }
    return points;
  };
  dd.curve_in = curve(dd.k_in);
  dd.curve_out = curve(dd.k_out);
  return dd;
}

double fit_log_log_slope(const std::vector<std::pair<double, double>>& curve,
                         double lo_frac, double hi_frac) {
  std::vector<std::pair<double, double>> logs;
  for (auto [k, p] : curve)
    if (k > 0 && p > 0) logs.emplace_back(std::log10(k), std::log10(p));
  if (logs.size() < 2) throw std::invalid_argument("need at least two curve points");
  double xmin = logs.front().first, xmax = logs.back().first;
  double lo = xmin + lo_frac * (xmax - xmin);
  double hi = xmin + hi_frac * (xmax - xmin);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (auto [x, y] : logs) {
    if (x < lo || x > hi) continue;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("mid-range holds fewer than two points");
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate abscissae");
  return (m * sxy - sx * sy) / denom;
}

void write_degrees_csv(std::ostream& out, const DegreeDistribution& dd) {
  out << "id,k_in,k_out\n";
  for (size_t i = 0; i < dd.k_in.size(); ++i)
    out << i << ',' << dd.k_in[i] << ',' << dd.k_out[i] << '\n';
}

void write_curve_csv(std::ostream& out, const DegreeDistribution& dd) {
  out << "direction,k_star,p\n";
  out << std::setprecision(12);
  for (auto [k, p] : dd.curve_in) out << "in," << k << ',' << p << '\n';
  for (auto [k, p] : dd.curve_out) out << "out," << k << ',' << p << '\n';
}

}  // namespace gonet
