#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "gonet/metrics.hpp"
#include "gonet/rng.hpp"

using namespace gonet;

namespace {

RankingVector from_values(const std::vector<double>& v) {
  return ranking_vector(std::span<const double>(v));
}

RankingVector random_ranking(int n, SplitMix64& rng) {
  std::vector<int32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  RankingVector rv;
  rv.order = std::move(order);
  rv.rank.resize(n);
  for (int k = 0; k < n; ++k) rv.rank[rv.order[k]] = k;
  return rv;
}

}  // namespace

TEST_CASE("ranking vector sorts by modulus with id tie-break") {
  RankingVector a = from_values({0.1, 0.7, 0.2});
  CHECK(a.order == std::vector<int32_t>{1, 2, 0});
  CHECK(a.rank[1] == 0);

  std::vector<std::complex<double>> c = {{0.5, 0}, {0, -0.5}, {0.4, 0}};
  RankingVector b = ranking_vector(std::span<const std::complex<double>>(c));
  CHECK(b.order == std::vector<int32_t>{0, 1, 2});

  RankingVector uniform = from_values({0.25, 0.25, 0.25, 0.25});
  CHECK(uniform.order == std::vector<int32_t>{0, 1, 2, 3});

  // negative reals rank by modulus
  RankingVector nr = from_values({-0.9, 0.1});
  CHECK(nr.order == std::vector<int32_t>{0, 1});
}

TEST_CASE("dispersion rank gaps") {
  SplitMix64 rng(1);
  RankingVector a = random_ranking(1107, rng);
  CHECK(dispersion(a, a) == 0.0);

  RankingVector b = a;
  std::swap(b.order[0], b.order[1]);
  b.rank[b.order[0]] = 0;
  b.rank[b.order[1]] = 1;
  CHECK(dispersion(a, b) == doctest::Approx(std::sqrt(2.0 / 553.0)));
  CHECK(dispersion(a, b, 553) == dispersion_sym(a, b));

  RankingVector small = from_values({1, 2});
  CHECK_THROWS_AS(dispersion(a, small), DimensionMismatch);
}

TEST_CASE("random-permutation dispersion baseline is near 450") {
  SplitMix64 rng(12345);
  double total = 0;
  const int pairs = 1000;
  for (int i = 0; i < pairs; ++i) {
    RankingVector a = random_ranking(1107, rng);
    RankingVector b = random_ranking(1107, rng);
    total += dispersion(a, b, 553);
  }
  double mean = total / pairs;
  CHECK(mean > 440.0);
  CHECK(mean < 460.0);
}

TEST_CASE("fidelity examples") {
  std::vector<std::complex<double>> phi = {{0.6, 0}, {0, 0.8}};
  CHECK(fidelity(std::span<const std::complex<double>>(phi),
                 std::span<const std::complex<double>>(phi)) ==
        doctest::Approx(1.0));

  std::vector<std::complex<double>> e0 = {{1, 0}, {0, 0}};
  std::vector<std::complex<double>> e1 = {{0, 0}, {1, 0}};
  CHECK(fidelity(std::span<const std::complex<double>>(e0),
                 std::span<const std::complex<double>>(e1)) == 0.0);

  // global phase vanishes
  std::complex<double> phase = std::polar(1.0, 1.234);
  std::vector<std::complex<double>> rotated = phi;
  for (auto& v : rotated) v *= phase;
  CHECK(fidelity(std::span<const std::complex<double>>(phi),
                 std::span<const std::complex<double>>(rotated)) ==
        doctest::Approx(1.0));

  std::vector<std::complex<double>> zero = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(fidelity(std::span<const std::complex<double>>(phi),
                           std::span<const std::complex<double>>(zero)),
                  ZeroVector);

  std::vector<double> rphi = {0.6, 0.8}, rpsi = {0.8, 0.6};
  double f1 = fidelity(std::span<const double>(rphi), std::span<const double>(rpsi));
  double f2 = fidelity(std::span<const double>(rpsi), std::span<const double>(rphi));
  CHECK(f1 == doctest::Approx(f2));
  CHECK(f1 == doctest::Approx(0.96));
}

TEST_CASE("ordered and non-ordered similarity") {
  SplitMix64 rng(7);
  RankingVector a = random_ranking(100, rng);
  CHECK(ordered_similarity(a, a) == 1.0);
  CHECK(nonordered_similarity(a, a) == 1.0);

  // cyclic shift of the top-30: same set, no fixed position
  RankingVector shifted = a;
  std::rotate(shifted.order.begin(), shifted.order.begin() + 1,
              shifted.order.begin() + 30);
  for (int k = 0; k < 100; ++k) shifted.rank[shifted.order[k]] = k;
  CHECK(ordered_similarity(a, shifted) == 0.0);
  CHECK(nonordered_similarity(a, shifted) == 1.0);

  // half the window swapped pairwise: 15 of 30 exact matches... none, but
  // swapping adjacent entries keeps the set
  RankingVector half = a;
  for (int k = 0; k < 15; ++k) std::swap(half.order[2 * k], half.order[2 * k + 1]);
  for (int k = 0; k < 100; ++k) half.rank[half.order[k]] = k;
  CHECK(ordered_similarity(a, half) == 0.0);
  CHECK(nonordered_similarity(a, half) == 1.0);

  // disjoint windows
  RankingVector reversed = a;
  std::reverse(reversed.order.begin(), reversed.order.end());
  for (int k = 0; k < 100; ++k) reversed.rank[reversed.order[k]] = k;
  CHECK(nonordered_similarity(a, reversed) == 0.0);

  // exactly 15 of 30 positions equal
  RankingVector part = a;
  for (int k = 15; k < 30; ++k) std::swap(part.order[k], part.order[k + 40]);
  for (int k = 0; k < 100; ++k) part.rank[part.order[k]] = k;
  CHECK(ordered_similarity(a, part) == doctest::Approx(0.5));
  CHECK(nonordered_similarity(a, part) == doctest::Approx(0.5));

  CHECK_THROWS_AS(ordered_similarity(a, a, 101), std::invalid_argument);
}

TEST_CASE("metric laws on random ranking pairs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 40 + static_cast<int>(rng.next_below(100));
    RankingVector a = random_ranking(n, rng);
    RankingVector b = random_ranking(n, rng);
    double so = ordered_similarity(a, b);
    double sn = nonordered_similarity(a, b);
    CHECK(so >= 0.0);
    CHECK(sn <= 1.0);
    CHECK(so <= sn);  // exact-rank matches are set matches
    CHECK(sn == nonordered_similarity(b, a));
    CHECK(so == ordered_similarity(b, a));
    CHECK(dispersion(a, a) == 0.0);
    CHECK(dispersion(a, b) >= 0.0);
  }
}

TEST_CASE("metrics are invariant under simultaneous node relabeling") {
  SplitMix64 rng(1234);
  const int n = 200;
  std::vector<double> va(n), vb(n);
  for (double& v : va) v = rng.next_unit();
  for (double& v : vb) v = rng.next_unit();

  std::vector<int32_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);
  std::vector<double> va2(n), vb2(n);
  for (int i = 0; i < n; ++i) {
    va2[relabel[i]] = va[i];
    vb2[relabel[i]] = vb[i];
  }

  RankingVector a = from_values(va), b = from_values(vb);
  RankingVector a2 = from_values(va2), b2 = from_values(vb2);
  CHECK(dispersion(a, b) == doctest::Approx(dispersion(a2, b2)).epsilon(1e-14));
  CHECK(ordered_similarity(a, b) == ordered_similarity(a2, b2));
  CHECK(nonordered_similarity(a, b) == nonordered_similarity(a2, b2));
  CHECK(fidelity(std::span<const double>(va), std::span<const double>(vb)) ==
        doctest::Approx(fidelity(std::span<const double>(va2),
                                 std::span<const double>(vb2))).epsilon(1e-14));
}

TEST_CASE("rank correlation export") {
  SplitMix64 rng(5);
  RankingVector a = random_ranking(10, rng);
  RankingVector b = random_ranking(10, rng);
  std::ostringstream out;
  write_rank_correlation_csv(out, a, b);
  std::string text = out.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);  // header + N/2
  CHECK(text.rfind("rank_ref,rank_other", 0) == 0);
}
