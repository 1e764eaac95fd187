#include "tnpm/model.hpp"

namespace tnpm {

Matrix probability_matrix(const TnpmParams& params, const Assignment& a) {
  const Index n = a.n();
  const Index m = a.m();
  if (params.lambda.rows() != n || params.lambda.cols() != a.l_count ||
      params.lambda_tilde.rows() != m || params.lambda_tilde.cols() != a.k_count) {
    throw std::invalid_argument("probability_matrix: parameter dimensions do not match assignment");
  }
  Matrix P(n, m);
  for (Index i = 0; i < n; ++i) {
    const int ci = a.c[static_cast<std::size_t>(i)];
    for (Index j = 0; j < m; ++j) {
      P(i, j) = params.lambda(i, a.z[static_cast<std::size_t>(j)]) * params.lambda_tilde(j, ci);
    }
  }
  return P;
}

BlockPartition partition_from(const Assignment& a) {
  BlockPartition p;
  p.row_groups.assign(static_cast<std::size_t>(a.k_count), {});
  p.col_groups.assign(static_cast<std::size_t>(a.l_count), {});
  for (Index i = 0; i < a.n(); ++i) {
    p.row_groups[static_cast<std::size_t>(a.c[static_cast<std::size_t>(i)])].push_back(i);
  }
  for (Index j = 0; j < a.m(); ++j) {
    p.col_groups[static_cast<std::size_t>(a.z[static_cast<std::size_t>(j)])].push_back(j);
  }
  return p;
}

Matrix block_view(const Matrix& A, const BlockPartition& p, int k, int l) {
  if (k < 0 || static_cast<std::size_t>(k) >= p.row_groups.size() ||
      l < 0 || static_cast<std::size_t>(l) >= p.col_groups.size()) {
    throw std::invalid_argument("block_view: cluster index out of range");
  }
  const IndexList& rows = p.row_groups[static_cast<std::size_t>(k)];
  const IndexList& cols = p.col_groups[static_cast<std::size_t>(l)];
  if (rows.empty() || cols.empty()) {
    throw std::invalid_argument("block_view: empty cluster (" + std::to_string(k) + ", " +
                                std::to_string(l) + ")");
  }
  return A(rows, cols);
}

Rearranged rearrange(const Matrix& A, const Assignment& a) {
  const BlockPartition p = partition_from(a);
  Rearranged r;
  r.row_perm.reserve(static_cast<std::size_t>(A.rows()));
  for (const auto& g : p.row_groups) {
    r.row_perm.insert(r.row_perm.end(), g.begin(), g.end());
    r.row_boundaries.push_back(static_cast<Index>(r.row_perm.size()));
  }
  r.col_perm.reserve(static_cast<std::size_t>(A.cols()));
  for (const auto& g : p.col_groups) {
    r.col_perm.insert(r.col_perm.end(), g.begin(), g.end());
    r.col_boundaries.push_back(static_cast<Index>(r.col_perm.size()));
  }
  r.matrix = A(r.row_perm, r.col_perm);
  return r;
}

}  // namespace tnpm
