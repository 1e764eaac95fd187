#pragma once

#include "tnpm/init.hpp"
#include "tnpm/types.hpp"

namespace tnpm {

enum class SimilarityKind { cosine, inner };

/// Singular-subspace k-means exposed as a standalone method; identical
/// pipeline (and output, per seed) to svd_kmeans_init.
Assignment svdk(const Matrix& A, int K, int L, const KMeansConfig& cfg);

/// Pairwise row similarity: cosine (zero rows give zero similarity) or plain
/// inner product. Symmetric positive semidefinite either way.
Matrix row_similarity(const Matrix& A, SimilarityKind kind);

/// Similarity-based spectral clustering of the rows: top-K eigenvectors of
/// row_similarity(A, kind), rows of the embedding normalized to unit length
/// (zero rows left alone), then k-means into K clusters. Cluster columns by
/// passing A transposed.
std::vector<int> spectral_similarity(const Matrix& A, int K, SimilarityKind kind,
                                     const KMeansConfig& cfg);

}  // namespace tnpm
