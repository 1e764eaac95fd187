#pragma once

#include "tnpm/types.hpp"

namespace tnpm {

/// Block rank-one loss: sum over all (k, l) blocks of the squared Frobenius
/// distance to the block's best rank-one approximation. A block whose power
/// iteration hits the iteration limit contributes the residual of the best
/// iterate found.
double total_loss(const Matrix& A, const Assignment& a, double tol = 1e-10, int max_iter = 1000);

/// Exact marginal cost of placing row i in cluster k:
///   sum over l of resid(block(k, l) with row i) - resid(block(k, l) without).
/// Differences row_delta(i, k) - row_delta(i, k') equal the corresponding
/// full-loss differences, so the argmin label agrees with the full objective.
/// Throws when k would leave i's current cluster empty (sole member moving
/// away); keeping a sole member in place (k == current) costs 0.
double row_delta(const Matrix& A, const Assignment& a, Index i, int k, double tol = 1e-10,
                 int max_iter = 1000);

/// Column analogue of row_delta: marginal cost of placing column j in
/// cluster l.
double col_delta(const Matrix& A, const Assignment& a, Index j, int l, double tol = 1e-10,
                 int max_iter = 1000);

/// Alternating per-node greedy descent on the block rank-one loss. Each sweep
/// updates rows 0..n-1 sequentially (later nodes see earlier moves), then
/// columns 0..m-1. A node moves only to a label whose delta beats the current
/// label's beyond a small tie band (ties keep the current label; among
/// non-current minimizers the lowest index wins), so the per-sweep loss
/// trajectory never increases. Sole members of a cluster stay put. Stops when
/// a sweep moves nothing, the relative loss change drops below cfg.epsilon,
/// or cfg.max_iter sweeps have run.
FitResult fit_dom(const Matrix& A, int k_count, int l_count, const Assignment& init,
                  const FitConfig& cfg = {});

}  // namespace tnpm
