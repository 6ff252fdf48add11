#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "gonet/network.hpp"
#include "gonet/playout.hpp"
#include "gonet/rng.hpp"

using namespace gonet;

namespace {

GameRecord game_from_points(std::initializer_list<Coord> points) {
  GameRecord g;
  StoneColor mover = StoneColor::Black;
  for (Coord c : points) {
    g.moves.push_back({mover, false, c});
    mover = opponent_of(mover);
  }
  return g;
}

// Quadratic first-follower oracle: each replay event links to the earliest
// later event within ds, independent of the open-list bookkeeping.
std::map<std::pair<int, int>, int> brute_force_links(const GameRecord& game,
                                                     const BuildOptions& opts) {
  struct Ev {
    Coord pos;
    int pattern;
  };
  std::vector<Ev> events;
  const PatternCatalog& catalog = PatternCatalog::instance();
  replay_visit(game, [&](int, StoneColor color, Coord pos, const Board& before) {
    events.push_back({pos, catalog.id_of(extract_pattern(before, pos, color))});
  });
  auto close = [&](Coord a, Coord b) {
    double dx = a.x - b.x, dy = a.y - b.y;
    if (opts.metric == DistanceMetric::Euclidean)
      return dx * dx + dy * dy < opts.ds * opts.ds;
    return std::max(std::abs(dx), std::abs(dy)) < opts.ds;
  };
  std::map<std::pair<int, int>, int> links;
  for (size_t i = 0; i < events.size(); ++i)
    for (size_t j = i + 1; j < events.size(); ++j)
      if (close(events[i].pos, events[j].pos)) {
        ++links[{events[i].pattern, events[j].pattern}];
        break;  // first follower only
      }
  return links;
}

std::map<std::pair<int, int>, int> as_map(const PatternNetwork& net) {
  std::map<std::pair<int, int>, int> out;
  for (auto [key, w] : net.weights)
    out[{static_cast<int>(key / net.n_nodes),
         static_cast<int>(key % net.n_nodes)}] = static_cast<int>(w);
  return out;
}

}  // namespace

TEST_CASE("single close pair produces one link") {
  PatternNetwork net = build_network({game_from_points({{3, 3}, {5, 5}})});
  CHECK(net.k_tot == 1);  // distance sqrt(8) < 4
  CHECK(net.games_used == 1);
}

TEST_CASE("distant pair produces no link") {
  PatternNetwork net = build_network({game_from_points({{3, 3}, {10, 10}})});
  CHECK(net.k_tot == 0);
}

TEST_CASE("open moves expire only when followed") {
  // m2 is far from everything; m3 closes m1 only
  GameRecord g = game_from_points({{3, 3}, {10, 10}, {4, 4}});
  PatternNetwork net = build_network({g});
  CHECK(net.k_tot == 1);

  const PatternCatalog& catalog = PatternCatalog::instance();
  int from = canonicalize(RawPattern{});  // m1 saw an empty neighborhood
  // m3 (black) sees the black stone of m1 diagonally: Own at (-1,-1)
  RawPattern p3;
  p3.cells[0] = PatternCell::Own;
  CHECK(net.weight(from, catalog.id_of(p3)) == 1);

  CHECK(as_map(net) == brute_force_links(g, BuildOptions{}));
}

TEST_CASE("one move may close several open predecessors") {
  GameRecord g = game_from_points({{3, 3}, {5, 5}, {4, 4}});
  // m2 is within ds of m1, so m1->m2; m3 then closes m2 (m1 already closed)
  PatternNetwork net = build_network({g});
  CHECK(net.k_tot == 2);
  GameRecord spread = game_from_points({{2, 2}, {6, 6}, {4, 4}});
  // m1 and m2 are sqrt(32) apart (no link), m3 within ds of both
  PatternNetwork net2 = build_network({spread});
  CHECK(net2.k_tot == 2);
  CHECK(as_map(net2) == brute_force_links(spread, BuildOptions{}));
}

TEST_CASE("builder equals the brute-force definition on random games") {
  PlayoutPolicy uniform{PolicyKind::UniformRandom, 120, 404};
  PlayoutPolicy greedy{PolicyKind::GreedyCapture, 120, 505};
  for (const auto& policy : {uniform, greedy}) {
    std::vector<GameRecord> games = generate_games(policy, 20);
    for (const GameRecord& g : games) {
      PatternNetwork net = build_network({g});
      CHECK(as_map(net) == brute_force_links(g, BuildOptions{}));
    }
  }
}

TEST_CASE("every event emits at most one outgoing link") {
  std::vector<GameRecord> games =
      generate_games({PolicyKind::UniformRandom, 200, 42}, 30);
  PatternNetwork net = build_network(games);
  uint64_t play_moves = 0;
  for (const GameRecord& g : games)
    for (const MoveAction& m : g.moves)
      if (!m.pass) ++play_moves;
  CHECK(net.k_tot <= play_moves);

  // in/out sums both equal k_tot
  uint64_t in_sum = 0, out_sum = 0;
  for (uint64_t d : net.in_degrees()) in_sum += d;
  for (uint64_t d : net.out_degrees()) out_sum += d;
  CHECK(in_sum == net.k_tot);
  CHECK(out_sum == net.k_tot);
}

TEST_CASE("merge is the identity/commutative/chunk-equivalent combination") {
  std::vector<GameRecord> games =
      generate_games({PolicyKind::GreedyCapture, 150, 7}, 24);
  std::vector<GameRecord> a(games.begin(), games.begin() + 9);
  std::vector<GameRecord> b(games.begin() + 9, games.end());
  PatternNetwork net_a = build_network(a);
  PatternNetwork net_b = build_network(b);
  PatternNetwork whole = build_network(games);

  PatternNetwork ab = merge({net_a, net_b});
  PatternNetwork ba = merge({net_b, net_a});
  CHECK(ab.weights == whole.weights);
  CHECK(ab.k_tot == whole.k_tot);
  CHECK(ab.games_used == whole.games_used);
  CHECK(ba.weights == whole.weights);

  PatternNetwork with_empty = merge({net_a, PatternNetwork{}});
  CHECK(with_empty.weights == net_a.weights);
  CHECK(with_empty.k_tot == net_a.k_tot);

  PatternNetwork chebyshev;
  chebyshev.metric = DistanceMetric::Chebyshev;
  CHECK_THROWS_AS(merge({net_a, chebyshev}), std::invalid_argument);
}

TEST_CASE("chebyshev links differ from euclidean only in counts") {
  GameRecord g = game_from_points({{0, 0}, {3, 3}});
  PatternNetwork euclid = build_network({g});
  CHECK(euclid.k_tot == 0);  // sqrt(18) > 4
  PatternNetwork cheb = build_network({g}, {4.0, DistanceMetric::Chebyshev});
  CHECK(cheb.k_tot == 1);  // max(3,3) < 4
  CHECK(cheb.n_nodes == euclid.n_nodes);
}

TEST_CASE("degree distribution endpoints and invariance") {
  PatternNetwork net;
  net.add_link(0, 1);
  net.add_link(2, 1);
  net.add_link(2, 3, 2);
  DegreeDistribution dd = degree_distribution(net);
  CHECK(dd.k_out[0] == 1);
  CHECK(dd.k_in[1] == 2);
  CHECK(dd.k_out[2] == 3);

  // rightmost point: unique max degree node -> ordinate 1/N
  CHECK(dd.curve_out.back().second == doctest::Approx(1.0 / net.n_nodes));
  CHECK(dd.curve_out.back().first == doctest::Approx(3.0 / net.k_tot));
  // leftmost point: 1 - N0/N
  int n0 = 0;
  for (uint64_t d : dd.k_out)
    if (d == 0) ++n0;
  CHECK(dd.curve_out.front().second ==
        doctest::Approx(1.0 - static_cast<double>(n0) / net.n_nodes));
  // nonincreasing
  for (size_t i = 1; i < dd.curve_in.size(); ++i)
    CHECK(dd.curve_in[i].second <= dd.curve_in[i - 1].second);

  // doubling every weight leaves the (K*, P) curve unchanged
  PatternNetwork doubled = net;
  doubled.weights.clear();
  doubled.k_tot = 0;
  for (auto [key, w] : net.weights)
    doubled.add_link(static_cast<int>(key / net.n_nodes),
                     static_cast<int>(key % net.n_nodes), 2 * w);
  DegreeDistribution dd2 = degree_distribution(doubled);
  CHECK(dd2.curve_in == dd.curve_in);
  CHECK(dd2.curve_out == dd.curve_out);

  CHECK_THROWS_AS(degree_distribution(PatternNetwork{}), EmptyNetwork);
}

TEST_CASE("log-log slope fit recovers a power law") {
  std::vector<std::pair<double, double>> curve;
  for (int i = 1; i <= 60; ++i) {
    double k = 1e-6 * std::pow(1.2, i);
    curve.emplace_back(k, 3e-4 / k);  // P ~ K^-1
  }
  CHECK(fit_log_log_slope(curve) == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("network TSV round-trips bit-exactly") {
  std::vector<GameRecord> games =
      generate_games({PolicyKind::UniformRandom, 100, 21}, 12);
  PatternNetwork net = build_network(games, {4.0, DistanceMetric::Euclidean});
  std::ostringstream out;
  net.save_tsv(out);
  std::istringstream in(out.str());
  PatternNetwork loaded = PatternNetwork::load_tsv(in);
  CHECK(loaded.weights == net.weights);
  CHECK(loaded.k_tot == net.k_tot);
  CHECK(loaded.games_used == net.games_used);
  CHECK(loaded.ds == net.ds);
  CHECK(loaded.metric == net.metric);

  std::ostringstream again;
  loaded.save_tsv(again);
  CHECK(again.str() == out.str());

  std::istringstream garbage("nonsense");
  CHECK_THROWS_AS(PatternNetwork::load_tsv(garbage), NetworkFormatError);
  std::istringstream lying_header(
      "# n_nodes=1107\tk_tot=99\tgames_used=1\tds=4\tmetric=euclidean\n"
      "from_id\tto_id\tcount\n0\t1\t1\n");
  CHECK_THROWS_AS(PatternNetwork::load_tsv(lying_header), NetworkFormatError);
}
