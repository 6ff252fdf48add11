#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace gonet {

class DimensionMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class ZeroVector : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nodes sorted by decreasing component modulus, ties broken by node id.
// order[k] is the node at rank k (rank 0 largest); rank[] is its inverse.
struct RankingVector {
  std::vector<int32_t> order;
  std::vector<int32_t> rank;
  int size() const { return static_cast<int>(order.size()); }
};

RankingVector ranking_vector(std::span<const double> values);
RankingVector ranking_vector(std::span<const std::complex<double>> values);

// RMS rank gap over the reference's top half (Eq-style, 1-based ranks):
// sqrt(sum_{k<=half} (k - rank_B(a_k))^2 / half). Asymmetric: a is the
// reference. half = 0 means floor(N/2).
double dispersion(const RankingVector& a, const RankingVector& b, int half = 0);

// max(dispersion(a, b), dispersion(b, a)) — use when a symmetric value
// is required.
double dispersion_sym(const RankingVector& a, const RankingVector& b, int half = 0);

// Modulus of the inner product of the unit-normalized vectors; 1 for equal
// (up to global phase), 0 for orthogonal.
double fidelity(std::span<const std::complex<double>> phi,
                std::span<const std::complex<double>> psi);
double fidelity(std::span<const double> phi, std::span<const double> psi);

// Fraction of the first `window` ranks holding the same node in both vectors.
double ordered_similarity(const RankingVector& a, const RankingVector& b,
                          int window = 30);

// Fraction of the top-`window` node sets common to both vectors.
double nonordered_similarity(const RankingVector& a, const RankingVector& b,
                             int window = 30);

// Pairs (rank in ref, rank in other), 1-based, for the reference's top-half
// nodes; the scatter against y = x that dispersion summarizes.
void write_rank_correlation_csv(std::ostream& out, const RankingVector& ref,
                                const RankingVector& other, int half = 0);

}  // namespace gonet
