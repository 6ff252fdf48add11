#include "gonet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

namespace gonet {

namespace {

RankingVector rank_by_modulus(const std::vector<double>& moduli) {
  const int n = static_cast<int>(moduli.size());
  RankingVector rv;
  rv.order.resize(n);
  std::iota(rv.order.begin(), rv.order.end(), 0);
  std::sort(rv.order.begin(), rv.order.end(), [&](int32_t a, int32_t b) {
    if (moduli[a] != moduli[b]) return moduli[a] > moduli[b];
    return a < b;
  });
  rv.rank.resize(n);
  for (int k = 0; k < n; ++k) rv.rank[rv.order[k]] = k;
  return rv;
}

int effective_half(const RankingVector& a, int half) {
  if (half == 0) half = a.size() / 2;
  if (half < 1 || half > a.size())
    throw std::invalid_argument("half out of range");
  return half;
}

}  // namespace

RankingVector ranking_vector(std::span<const double> values) {
  std::vector<double> moduli(values.size());
  for (size_t i = 0; i < values.size(); ++i) moduli[i] = std::abs(values[i]);
  return rank_by_modulus(moduli);
}

RankingVector ranking_vector(std::span<const std::complex<double>> values) {
  std::vector<double> moduli(values.size());
  for (size_t i = 0; i < values.size(); ++i) moduli[i] = std::abs(values[i]);
  return rank_by_modulus(moduli);
}

double dispersion(const RankingVector& a, const RankingVector& b, int half) {
  if (a.size() != b.size())
    throw DimensionMismatch("ranking vectors of different size");
  half = effective_half(a, half);
  double sum = 0;
  for (int k = 0; k < half; ++k) {
    double gap = static_cast<double>(k - b.rank[a.order[k]]);
    sum += gap * gap;
  }
  return std::sqrt(sum / static_cast<double>(half));
}

double dispersion_sym(const RankingVector& a, const RankingVector& b, int half) {
  return std::max(dispersion(a, b, half), dispersion(b, a, half));
}

double fidelity(std::span<const std::complex<double>> phi,
                std::span<const std::complex<double>> psi) {
  if (phi.size() != psi.size())
    throw DimensionMismatch("vectors of different size");
  double nphi = 0, npsi = 0;
  for (const auto& v : phi) nphi += std::norm(v);
  for (const auto& v : psi) npsi += std::norm(v);
  if (nphi == 0 || npsi == 0) throw ZeroVector("fidelity of a zero vector");
  std::complex<double> dot = 0;
  for (size_t i = 0; i < phi.size(); ++i) dot += std::conj(phi[i]) * psi[i];
  return std::min(std::abs(dot) / std::sqrt(nphi * npsi), 1.0);
}

double fidelity(std::span<const double> phi, std::span<const double> psi) {
  if (phi.size() != psi.size())
    throw DimensionMismatch("vectors of different size");
  double nphi = 0, npsi = 0, dot = 0;
  for (double v : phi) nphi += v * v;
  for (double v : psi) npsi += v * v;
  if (nphi == 0 || npsi == 0) throw ZeroVector("fidelity of a zero vector");
  for (size_t i = 0; i < phi.size(); ++i) dot += phi[i] * psi[i];
  return std::min(std::abs(dot) / std::sqrt(nphi * npsi), 1.0);
}

namespace {

int checked_window(const RankingVector& a, const RankingVector& b, int window) {
  if (a.size() != b.size())
    throw DimensionMismatch("ranking vectors of different size");
  if (window < 1 || window > a.size())
    throw std::invalid_argument("window out of range");
  return window;
}

}  // namespace

double ordered_similarity(const RankingVector& a, const RankingVector& b,
                          int window) {
  window = checked_window(a, b, window);
  int hits = 0;
  for (int k = 0; k < window; ++k)
    if (a.order[k] == b.order[k]) ++hits;
  return static_cast<double>(hits) / static_cast<double>(window);
}

double nonordered_similarity(const RankingVector& a, const RankingVector& b,
                             int window) {
  window = checked_window(a, b, window);
  int hits = 0;
  for (int k = 0; k < window; ++k)
    if (b.rank[a.order[k]] < window) ++hits;
  return static_cast<double>(hits) / static_cast<double>(window);
}

void write_rank_correlation_csv(std::ostream& out, const RankingVector& ref,
                                const RankingVector& other, int half) {
  if (ref.size() != other.size())
    throw DimensionMismatch("ranking vectors of different size");
  half = effective_half(ref, half);
  out << "rank_ref,rank_other\n";
  for (int k = 0; k < half; ++k)
    out << k + 1 << ',' << other.rank[ref.order[k]] + 1 << '\n';
}

}  // namespace gonet
