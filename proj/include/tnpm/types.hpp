#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnpm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexList = std::vector<Index>;

// splitmix64 step; used to derive independent sub-seeds from one root seed.
// Stream i of root s is seeded with derive_seed(s, i).
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t x = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Out-/in-community labels for the two node sets of a bipartite (or
/// directed) network. Labels are 0-based internally; the IO layer converts
/// to the 1-based convention used in external files.
struct Assignment {
  std::vector<int> c;  // row labels, values in [0, k_count)
  std::vector<int> z;  // column labels, values in [0, l_count)
  int k_count = 0;
  int l_count = 0;

  Index n() const { return static_cast<Index>(c.size()); }
  Index m() const { return static_cast<Index>(z.size()); }

  // Throws std::invalid_argument on out-of-range labels, empty sides, or
  // (unless allow_empty) an unused cluster index.
  void validate(bool allow_empty = false) const;
};

/// Node popularity parameters: lambda is n x L (row-node popularity toward
/// each in-community), lambda_tilde is m x K (column-node popularity toward
/// each out-community).
struct TnpmParams {
  Matrix lambda;
  Matrix lambda_tilde;
};

/// Cluster index groups; each group keeps its members in increasing
/// original-index order.
struct BlockPartition {
  std::vector<IndexList> row_groups;
  std::vector<IndexList> col_groups;
};

struct FitConfig {
  double epsilon = 1e-6;  // relative change of the convergence statistic
  int max_iter = 50;      // maximum alternating sweeps
  std::uint64_t seed = 0;
};

/// Output of the fitting algorithms. loss_trajectory holds one value per
/// sweep: the block rank-one residual loss for the alternating delete-one
/// fit, and the block-cosine objective for the two-stage cosine fit (its own
/// convergence statistic). final_loss is always the block rank-one residual
/// loss of the returned assignment.
struct FitResult {
  Assignment assignment;
  std::vector<double> loss_trajectory;
  double final_loss = 0.0;
  int sweeps = 0;
  bool converged = false;
};

}  // namespace tnpm
