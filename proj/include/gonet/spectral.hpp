#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gonet/network.hpp"

namespace gonet {

class NoConvergence : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class EigensolverFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// G = alpha * S + (1 - alpha)/N, with S the column-normalized adjacency and
// zero-out-degree columns replaced by uniform 1/N. Kept sparse: explicit
// columns only for nodes with outgoing links, dangling handled as a rank-1
// correction in multiply().
class GoogleMatrix {
 public:
  GoogleMatrix(const PatternNetwork& net, double alpha);

  int size() const { return n_; }
  double alpha() const { return alpha_; }

  // y = G x for arbitrary x (no probability assumption).
  std::vector<double> multiply(const std::vector<double>& x) const;

  Eigen::MatrixXd dense() const;             // G
  Eigen::MatrixXd dense_stochastic() const;  // S, dangling columns uniform

 private:
  int n_;
  double alpha_;
  std::vector<std::vector<std::pair<int, double>>> cols_;  // per from-node
  std::vector<uint8_t> dangling_;
};

struct PageRankResult {
  std::vector<double> p;  // nonnegative, sums to 1
  double residual = 0;    // ||G p - p||_1
  int iterations = 0;
};

// Power iteration from the uniform vector; stops when the L1 step falls
// below tol. Throws NoConvergence after max_iter (possible at alpha = 1).
PageRankResult pagerank(const GoogleMatrix& g, double tol = 1e-12,
                        int max_iter = 10000);

struct EigenPair {
  std::complex<double> value;
  std::vector<std::complex<double>> vector;  // unit 2-norm, phase-fixed
};

struct SpectrumResult {
  // All N eigenvalues ordered by (|l| desc, Re desc, Im desc).
  std::vector<std::complex<double>> eigenvalues;
  std::vector<EigenPair> top_vectors;  // the first n_vectors in that order
};

// Dense nonsymmetric eigendecomposition of G. Right eigenvectors are
// normalized and rotated so the largest-modulus component is real positive.
SpectrumResult full_spectrum(const GoogleMatrix& g, int n_vectors = 0);

// Radius of the smallest origin-centred disk holding x percent of the
// eigenvalues (the ceil(x*N/100)-th smallest modulus). With
// include_unit = false the eigenvalue closest to 1 is left out.
double lambda_c(const SpectrumResult& spectrum, double x_percent,
                bool include_unit = true);

void write_spectrum_csv(std::ostream& out, const SpectrumResult& spectrum);
void write_eigenvector_csv(std::ostream& out, const EigenPair& pair);
void write_pagerank_csv(std::ostream& out, const std::vector<double>& p);

}  // namespace gonet
