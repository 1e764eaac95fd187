#include "doctest.h"

#include "tnpm/baselines.hpp"
#include "tnpm/generator.hpp"
#include "tnpm/metrics.hpp"

#include <Eigen/Dense>

#include <random>

using namespace tnpm;

TEST_SUITE("baselines") {

TEST_CASE("svdk reproduces the shared initializer") {
  GeneratorConfig gc;
  gc.n = 30;
  gc.m = 26;
  gc.k_count = 2;
  gc.l_count = 3;
  gc.sigma = 0.2;
  gc.seed = 41;
  const Network net = sample_network(gc);
  KMeansConfig km;
  km.seed = 17;
  const Assignment a = svdk(net.A, 2, 3, km);
  const Assignment b = svd_kmeans_init(net.A, 2, 3, km);
  CHECK(a.c == b.c);
  CHECK(a.z == b.z);
}

TEST_CASE("row similarity matrices are symmetric PSD") {
  Matrix A = Matrix::Random(12, 8);
  for (SimilarityKind kind : {SimilarityKind::inner, SimilarityKind::cosine}) {
    const Matrix S = row_similarity(A, kind);
    REQUIRE(S.rows() == 12);
    REQUIRE(S.cols() == 12);
    CHECK((S - S.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(S);
    CHECK(eig.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("cosine similarity saturates on parallel rows, zero rows stay zero") {
  Matrix A(3, 4);
  A << 1, 2, 0, 0,
       2, 4, 0, 0,
       0, 0, 0, 0;
  const Matrix S = row_similarity(A, SimilarityKind::cosine);
  CHECK(S(0, 1) == doctest::Approx(1.0));
  CHECK(S(0, 0) == doctest::Approx(1.0));
  CHECK(S(2, 0) == 0.0);
  CHECK(S(2, 2) == 0.0);
}

TEST_CASE("cosine labels ignore positive row rescaling; inner labels do not") {
  // Two direction clusters: one straddling the x-axis, one near the y-axis.
  // Blowing up the x-straddling pair drags the top singular direction onto
  // the x-axis and tears that pair apart in the inner-product embedding,
  // while the cosine pipeline never sees the scales at all.
  Matrix A(4, 2);
  A << 1.0, 0.1,
       1.0, -0.1,
       0.1, 1.0,
       0.3, 1.0;
  Matrix scaled = A;
  scaled.row(0) *= 1000.0;
  scaled.row(1) *= 1000.0;

  KMeansConfig km;
  km.seed = 5;
  const std::vector<int> cos_base = spectral_similarity(A, 2, SimilarityKind::cosine, km);
  const std::vector<int> cos_scaled = spectral_similarity(scaled, 2, SimilarityKind::cosine, km);
  CHECK(min_perm_error(cos_scaled, cos_base, 2) == 0.0);
  // The direction clusters themselves.
  CHECK(cos_base[0] == cos_base[1]);
  CHECK(cos_base[2] == cos_base[3]);
  CHECK(cos_base[0] != cos_base[2]);

  const std::vector<int> inner_base = spectral_similarity(A, 2, SimilarityKind::inner, km);
  const std::vector<int> inner_scaled = spectral_similarity(scaled, 2, SimilarityKind::inner, km);
  CHECK(min_perm_error(inner_scaled, inner_base, 2) > 0.0);
}

TEST_CASE("spectral similarity recovers direction-clustered rows and columns") {
  // Rows within a group are scalar multiples of a shared direction with
  // disjoint column support; that is exactly the regime the similarity
  // methods assume, so recovery should be perfect for both kinds.
  const Index n = 45, m = 30;
  Matrix A = Matrix::Zero(n, m);
  std::vector<int> row_truth(static_cast<std::size_t>(n)), col_truth(static_cast<std::size_t>(m));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  for (Index i = 0; i < n; ++i) {
    const int g = static_cast<int>(i / 15);
    row_truth[static_cast<std::size_t>(i)] = g;
    const double s = scale(rng);
    for (Index j = 10 * g; j < 10 * (g + 1); ++j) A(i, j) = s;
  }
  for (Index j = 0; j < m; ++j) col_truth[static_cast<std::size_t>(j)] = static_cast<int>(j / 10);

  KMeansConfig km;
  km.seed = 3;
  for (SimilarityKind kind : {SimilarityKind::cosine, SimilarityKind::inner}) {
    const std::vector<int> rows = spectral_similarity(A, 3, kind, km);
    CHECK(nmi(rows, row_truth) == doctest::Approx(1.0));
    const std::vector<int> cols = spectral_similarity(A.transpose(), 3, kind, km);
    CHECK(nmi(cols, col_truth) == doctest::Approx(1.0));
  }
}

TEST_CASE("argument validation") {
  Matrix A = Matrix::Random(5, 4);
  KMeansConfig km;
  CHECK_THROWS_AS((void)spectral_similarity(A, 0, SimilarityKind::cosine, km),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)spectral_similarity(A, 6, SimilarityKind::cosine, km),
                  std::invalid_argument);
}

}  // TEST_SUITE
