#include "gonet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "gonet/metrics.hpp"

namespace gonet {

GoogleMatrix::GoogleMatrix(const PatternNetwork& net, double alpha)
    : n_(net.n_nodes), alpha_(alpha), cols_(net.n_nodes), dangling_(net.n_nodes, 1) {
  std::vector<uint64_t> out = net.out_degrees();
  for (auto [key, w] : net.weights) {
    int from = static_cast<int>(key / net.n_nodes);
    int to = static_cast<int>(key % net.n_nodes);
    cols_[from].emplace_back(to, static_cast<double>(w) / static_cast<double>(out[from]));
    dangling_[from] = 0;
  }
  for (auto& col : cols_) std::sort(col.begin(), col.end());
}

std::vector<double> GoogleMatrix::multiply(const std::vector<double>& x) const {
  double total = std::accumulate(x.begin(), x.end(), 0.0);
  double dangling_mass = 0;
  for (int j = 0; j < n_; ++j)
    if (dangling_[j]) dangling_mass += x[j];
  const double uniform =
      (alpha_ * dangling_mass + (1.0 - alpha_) * total) / static_cast<double>(n_);
  std::vector<double> y(n_, uniform);
  for (int j = 0; j < n_; ++j)
    for (auto [i, s] : cols_[j]) y[i] += alpha_ * s * x[j];
  return y;
}

Eigen::MatrixXd GoogleMatrix::dense_stochastic() const {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j) {
    if (dangling_[j]) {
      s.col(j).setConstant(1.0 / static_cast<double>(n_));
    } else {
      for (auto [i, v] : cols_[j]) s(i, j) = v;
    }
  }
  return s;
}

Eigen::MatrixXd GoogleMatrix::dense() const {
  return alpha_ * dense_stochastic() +
         Eigen::MatrixXd::Constant(n_, n_, (1.0 - alpha_) / static_cast<double>(n_));
}

PageRankResult pagerank(const GoogleMatrix& g, double tol, int max_iter) {
  const int n = g.size();
  PageRankResult result;
  result.p.assign(n, 1.0 / static_cast<double>(n));
  for (int iter = 1; iter <= max_iter; ++iter) {
    std::vector<double> next = g.multiply(result.p);
    double sum = std::accumulate(next.begin(), next.end(), 0.0);
    for (double& v : next) v /= sum;
    double step = 0;
    for (int i = 0; i < n; ++i) step += std::abs(next[i] - result.p[i]);
    result.p = std::move(next);
    result.iterations = iter;
    if (step < tol) {
      std::vector<double> gp = g.multiply(result.p);
      result.residual = 0;
      for (int i = 0; i < n; ++i) result.residual += std::abs(gp[i] - result.p[i]);
      return result;
    }
  }
  throw NoConvergence("pagerank did not converge in " + std::to_string(max_iter) +
                      " iterations (alpha=" + std::to_string(g.alpha()) + ")");
}

SpectrumResult full_spectrum(const GoogleMatrix& g, int n_vectors) {
  const int n = g.size();
  Eigen::MatrixXd dense = g.dense();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(dense, n_vectors > 0);
  if (solver.info() != Eigen::Success)
    throw EigensolverFailure("QR iteration did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto& values = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double ma = std::abs(values[a]), mb = std::abs(values[b]);
    if (ma != mb) return ma > mb;
    if (values[a].real() != values[b].real())
      return values[a].real() > values[b].real();
    return values[a].imag() > values[b].imag();
  });

  SpectrumResult result;
  result.eigenvalues.reserve(n);
  for (int idx : order) result.eigenvalues.push_back(values[idx]);

  if (n_vectors > 0) {
    const auto& vectors = solver.eigenvectors();
    int k = std::min(n_vectors, n);
    for (int r = 0; r < k; ++r) {
      int idx = order[r];
      Eigen::VectorXcd v = vectors.col(idx);
      v.normalize();
      // Canonical phase: largest-modulus component real positive.
      int pivot = 0;
      double best = -1;
      for (int i = 0; i < n; ++i) {
        double m = std::abs(v[i]);
        if (m > best) {
          best = m;
          pivot = i;
        }
      }
      if (best > 0) v *= std::conj(v[pivot]) / std::abs(v[pivot]);

      double residual = (dense * v - values[idx] * v).norm() / v.norm();
      if (residual > 1e-8)
        throw EigensolverFailure("eigenpair residual " + std::to_string(residual));
      EigenPair pair;
      pair.value = values[idx];
      pair.vector.assign(v.data(), v.data() + n);
      result.top_vectors.push_back(std::move(pair));
    }
  }
  return result;
}

double lambda_c(const SpectrumResult& spectrum, double x_percent, bool include_unit) {
  if (x_percent <= 0 || x_percent > 100)
    throw std::invalid_argument("x must be in (0, 100]");
  std::vector<double> moduli;
  moduli.reserve(spectrum.eigenvalues.size());
  size_t unit = 0;
  for (size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    if (std::abs(spectrum.eigenvalues[i] - std::complex<double>(1, 0)) <
        std::abs(spectrum.eigenvalues[unit] - std::complex<double>(1, 0)))
      unit = i;
    moduli.push_back(std::abs(spectrum.eigenvalues[i]));
  }
  if (!include_unit && !moduli.empty()) moduli.erase(moduli.begin() + unit);
  if (moduli.empty()) throw std::invalid_argument("empty spectrum");
  std::sort(moduli.begin(), moduli.end());
  size_t k = static_cast<size_t>(
      std::ceil(x_percent * static_cast<double>(moduli.size()) / 100.0));
  k = std::max<size_t>(k, 1);
  return moduli[k - 1];
}

void write_spectrum_csv(std::ostream& out, const SpectrumResult& spectrum) {
  out << "re,im\n" << std::setprecision(17);
  for (const auto& x : spectrum.eigenvalues)
    out << x.real() << ',' << x.imag() << '\n';
}

void write_eigenvector_csv(std::ostream& out, const EigenPair& pair) {
  out << "# lambda_re=" << std::setprecision(17) << pair.value.real()
      << " lambda_im=" << pair.value.imag() << "\n";
  out << "node_id,re,im,modulus\n";
  for (size_t i = 0; i < pair.vector.size(); ++i)
    out << i << ',' << pair.vector[i].real() << ',' << pair.vector[i].imag()
        << ',' << std::abs(pair.vector[i]) << '\n';
}

void write_pagerank_csv(std::ostream& out, const std::vector<double>& p) {
  RankingVector ranking = ranking_vector(std::span<const double>(p));
  out << "rank,node_id,p\n" << std::setprecision(17);
  for (size_t k = 0; k < ranking.order.size(); ++k)
    out << k + 1 << ',' << ranking.order[k] << ',' << p[ranking.order[k]] << '\n';
}

}  // namespace gonet
