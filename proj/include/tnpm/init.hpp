#pragma once

#include "tnpm/types.hpp"

namespace tnpm {

struct KMeansConfig {
  int restarts = 10;
  int max_iter = 100;
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

/// Lloyd iterations with k-means++ seeding, best of cfg.restarts runs by
/// within-cluster sum of squares (ties go to the earlier restart). Empty
/// clusters are repaired by splitting the largest cluster at its farthest
/// member. points holds one observation per row.
std::vector<int> kmeans(const Matrix& points, int k, const KMeansConfig& cfg);

struct TruncatedSvd {
  Matrix U;      // rows x rank
  Vector sigma;  // rank, nonincreasing
  Matrix V;      // cols x rank
};

/// Leading singular triplets via power iteration with deflation. Once the
/// deflated remainder is numerically zero the remaining factors are filled
/// with zeros.
TruncatedSvd truncated_svd(const Matrix& A, int rank, double tol = 1e-10, int max_iter = 1000);

/// Starting assignment for the fitting algorithms: cluster the rows of the
/// leading left singular block (n x K) into K groups and the rows of the
/// leading right singular block (m x L) into L groups.
Assignment svd_kmeans_init(const Matrix& A, int K, int L, const KMeansConfig& cfg);

}  // namespace tnpm
