#include "tnpm/baselines.hpp"

#include <stdexcept>

namespace tnpm {

Assignment svdk(const Matrix& A, int K, int L, const KMeansConfig& cfg) {
  return svd_kmeans_init(A, K, L, cfg);
}

Matrix row_similarity(const Matrix& A, SimilarityKind kind) {
  if (A.rows() < 1 || A.cols() < 1) throw std::invalid_argument("row_similarity: empty matrix");
  if (kind == SimilarityKind::inner) return A * A.transpose();
  Matrix N = A;
  for (Index i = 0; i < N.rows(); ++i) {
    const double nrm = N.row(i).norm();
    if (nrm > 0.0) N.row(i) /= nrm;
  }
  return N * N.transpose();
}

std::vector<int> spectral_similarity(const Matrix& A, int K, SimilarityKind kind,
                                     const KMeansConfig& cfg) {
  if (K < 1 || K > A.rows()) {
    throw std::invalid_argument("spectral_similarity: need 1 <= K <= number of rows");
  }
  const Matrix S = row_similarity(A, kind);
  // S is symmetric PSD, so its leading singular vectors are eigenvectors.
  Matrix embed = truncated_svd(S, K).U;
  for (Index i = 0; i < embed.rows(); ++i) {
    const double nrm = embed.row(i).norm();
    if (nrm > 0.0) embed.row(i) /= nrm;
  }
  return kmeans(embed, K, cfg);
}

}  // namespace tnpm
