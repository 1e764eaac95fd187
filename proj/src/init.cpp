#include "tnpm/init.hpp"

#include "tnpm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tnpm {
namespace {

struct LloydResult {
  std::vector<int> labels;
  double wcss = std::numeric_limits<double>::infinity();
};

Matrix plus_plus_centers(const Matrix& points, int k, std::mt19937_64& rng) {
  const Index n = points.rows();
  Matrix centers(k, points.cols());
  std::uniform_int_distribution<Index> first(0, n - 1);
  centers.row(0) = points.row(first(rng));
  Vector d2 = (points.rowwise() - centers.row(0)).rowwise().squaredNorm();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int c = 1; c < k; ++c) {
    const double total = d2.sum();
    Index pick = 0;
    if (total > 0.0) {
      double r = unif(rng) * total;
      for (Index i = 0; i < n; ++i) {
        r -= d2[i];
        if (r <= 0.0) {
          pick = i;
          break;
        }
        pick = i;
      }
    } else {
      pick = first(rng);  // all points coincide with chosen centers
    }
    centers.row(c) = points.row(pick);
    d2 = d2.cwiseMin((points.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

// Move the farthest member of the largest splittable cluster into the empty one.
void repair_empty(const Matrix& points, Matrix& centers, std::vector<int>& labels,
                  std::vector<Index>& sizes, int empty) {
  int largest = -1;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] >= 2 && (largest < 0 || sizes[c] > sizes[static_cast<std::size_t>(largest)])) {
      largest = static_cast<int>(c);
    }
  }
  if (largest < 0) return;  // n == k, nothing to split
  Index donor = -1;
  double worst = -1.0;
  for (Index i = 0; i < points.rows(); ++i) {
    if (labels[static_cast<std::size_t>(i)] != largest) continue;
    const double d = (points.row(i) - centers.row(largest)).squaredNorm();
    if (d > worst) {
      worst = d;
      donor = i;
    }
  }
  labels[static_cast<std::size_t>(donor)] = empty;
  sizes[static_cast<std::size_t>(largest)] -= 1;
  sizes[static_cast<std::size_t>(empty)] += 1;
  centers.row(empty) = points.row(donor);
}

LloydResult lloyd(const Matrix& points, int k, const KMeansConfig& cfg, std::uint64_t seed) {
  const Index n = points.rows();
  std::mt19937_64 rng(seed);
  Matrix centers = plus_plus_centers(points, k, rng);
  LloydResult res;
  res.labels.assign(static_cast<std::size_t>(n), 0);
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < cfg.max_iter; ++it) {
    std::vector<Index> sizes(static_cast<std::size_t>(k), 0);
    double wcss = 0.0;
    bool changed = false;
    for (Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (points.row(i) - centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (points.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (res.labels[static_cast<std::size_t>(i)] != best) changed = true;
      res.labels[static_cast<std::size_t>(i)] = best;
      sizes[static_cast<std::size_t>(best)] += 1;
      wcss += best_d;
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[static_cast<std::size_t>(c)] == 0) {
        repair_empty(points, centers, res.labels, sizes, c);
        changed = true;
      }
    }
    centers.setZero();
    for (Index i = 0; i < n; ++i) {
      centers.row(res.labels[static_cast<std::size_t>(i)]) += points.row(i);
    }
    for (int c = 0; c < k; ++c) {
      centers.row(c) /= static_cast<double>(sizes[static_cast<std::size_t>(c)]);
    }
    res.wcss = wcss;
    if (!changed) break;
    if (std::isfinite(prev) && std::abs(prev - wcss) <= cfg.tol * std::max(prev, 1e-30)) break;
    prev = wcss;
  }
  // Final score against the final centers.
  double wcss = 0.0;
  for (Index i = 0; i < n; ++i) {
    wcss += (points.row(i) - centers.row(res.labels[static_cast<std::size_t>(i)])).squaredNorm();
  }
  res.wcss = wcss;
  return res;
}

}  // namespace

std::vector<int> kmeans(const Matrix& points, int k, const KMeansConfig& cfg) {
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (points.rows() < k) throw std::invalid_argument("kmeans: fewer points than clusters");
  if (k == 1) return std::vector<int>(static_cast<std::size_t>(points.rows()), 0);
  LloydResult best;
  for (int r = 0; r < std::max(1, cfg.restarts); ++r) {
    LloydResult run = lloyd(points, k, cfg, derive_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    if (run.wcss < best.wcss) best = std::move(run);
  }
  return best.labels;
}

TruncatedSvd truncated_svd(const Matrix& A, int rank, double tol, int max_iter) {
  if (rank < 1 || rank > std::min(A.rows(), A.cols())) {
    throw std::invalid_argument("truncated_svd: rank out of range");
  }
  TruncatedSvd out;
  out.U = Matrix::Zero(A.rows(), rank);
  out.V = Matrix::Zero(A.cols(), rank);
  out.sigma = Vector::Zero(rank);
  const double fro2 = A.squaredNorm();
  Matrix residual = A;
  for (int t = 0; t < rank; ++t) {
    if (residual.squaredNorm() <= 1e-20 * std::max(fro2, 1e-300)) break;
    RankOneFactor f;
    try {
      f = top_singular_triplet(residual, tol, max_iter, nullptr,
                               derive_seed(0x7a5cu, static_cast<std::uint64_t>(t)));
    } catch (const IterationLimitError& e) {
      f = e.best();  // slow spectral gap; the iterate is still usable as a feature
    }
    out.U.col(t) = f.u;
    out.V.col(t) = f.v;
    out.sigma[t] = f.sigma;
    residual.noalias() -= f.sigma * f.u * f.v.transpose();
  }
  return out;
}

Assignment svd_kmeans_init(const Matrix& A, int K, int L, const KMeansConfig& cfg) {
  if (K > A.rows() || L > A.cols()) {
    throw std::invalid_argument("svd_kmeans_init: more clusters than nodes");
  }
  const int rank = std::min<Index>(std::max(K, L), std::min(A.rows(), A.cols()));
  const TruncatedSvd svd = truncated_svd(A, rank);
  KMeansConfig row_cfg = cfg;
  row_cfg.seed = derive_seed(cfg.seed, 11);
  KMeansConfig col_cfg = cfg;
  col_cfg.seed = derive_seed(cfg.seed, 12);
  Assignment a;
  a.k_count = K;
  a.l_count = L;
  a.c = kmeans(svd.U.leftCols(std::min<Index>(K, rank)), K, row_cfg);
  a.z = kmeans(svd.V.leftCols(std::min<Index>(L, rank)), L, col_cfg);
  return a;
}

}  // namespace tnpm
