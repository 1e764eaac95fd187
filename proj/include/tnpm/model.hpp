#pragma once

#include "tnpm/types.hpp"

namespace tnpm {

/// Mean matrix P with P(i, j) = lambda(i, z_j) * lambda_tilde(j, c_i).
/// Every block of P under the generating assignment is rank one.
Matrix probability_matrix(const TnpmParams& params, const Assignment& a);

/// Ordered cluster index groups; members stay in increasing original index.
BlockPartition partition_from(const Assignment& a);

/// Copy of the (k, l) block A[N_k, M_l]. Throws on an empty group.
Matrix block_view(const Matrix& A, const BlockPartition& p, int k, int l);

struct Rearranged {
  Matrix matrix;                 // rows/columns permuted so clusters are contiguous
  IndexList row_boundaries;      // cumulative cluster sizes, last entry == rows
  IndexList col_boundaries;
  IndexList row_perm;            // matrix.row(r) == A.row(row_perm[r])
  IndexList col_perm;
};

/// Cluster-contiguous reordering of A with block boundary offsets.
Rearranged rearrange(const Matrix& A, const Assignment& a);

}  // namespace tnpm
