#pragma once

#include "tnpm/types.hpp"

namespace tnpm {

/// Cluster centers for the two-stage cosine fit. Row k of mu is the center of
/// row-cluster k (length m, one segment per column cluster); column l of
/// mu_tilde is the center of column-cluster l (length n, one segment per row
/// cluster). Each nonzero segment carries l1 norm equal to its block width
/// (mu) or height (mu_tilde).
struct CenterSet {
  Matrix mu;        // K x m
  Matrix mu_tilde;  // n x L
};

/// Sum over index groups of the cosine similarity between the restrictions of
/// x and y to the group. A group where either restriction is the zero vector
/// contributes 0.
double block_cos(const Vector& x, const Vector& y, const std::vector<IndexList>& groups);

/// Centers per the block-mean rule: average the l2-normalized member row
/// (column) segments of each block, then rescale to segment l1 norm m_l
/// (n_k). Zero segments are skipped from the mean; an all-zero block yields a
/// zero center segment.
CenterSet update_centers(const Matrix& A, const Assignment& a);

/// Batch row assignment against frozen centers: each row goes to the center
/// with the largest block cosine over col_groups segments. Ties keep
/// current[i] when provided, otherwise the lowest center index wins.
std::vector<int> assign_rows(const Matrix& A, const CenterSet& centers,
                             const std::vector<IndexList>& col_groups,
                             const std::vector<int>* current = nullptr);

/// Column analogue of assign_rows, with segments given by row_groups.
std::vector<int> assign_cols(const Matrix& A, const CenterSet& centers,
                             const std::vector<IndexList>& row_groups,
                             const std::vector<int>* current = nullptr);

/// Alternating two-stage fit: per iteration, compute centers from the current
/// labels, reassign all rows against them, then all columns (both stages use
/// the iteration-start partitions), and repair any emptied cluster with the
/// worst-fitting node. The convergence statistic is the similarity objective
/// (mean-normalized block cosine of rows plus columns); the trajectory records
/// it per iteration. final_loss reports the block rank-one residual loss of
/// the returned assignment, computed once at the end.
FitResult fit_tsdc(const Matrix& A, int k_count, int l_count, const Assignment& init,
                   const FitConfig& cfg = {});

}  // namespace tnpm
