#pragma once

#include "tnpm/types.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace tnpm {

/// Top singular triplet of a dense matrix. Sign convention: the first
/// nonzero entry of u is nonnegative.
template <typename Scalar = double>
struct RankOneFactorT {
  Scalar sigma = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> u;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v;
};

using RankOneFactor = RankOneFactorT<double>;

/// Thrown when power iteration does not reach the requested tolerance.
/// Carries the best iterate so callers can degrade gracefully.
class IterationLimitError : public std::runtime_error {
 public:
  IterationLimitError(const std::string& what, RankOneFactor best, int iterations)
      : std::runtime_error(what), best_(std::move(best)), iterations_(iterations) {}

  const RankOneFactor& best() const { return best_; }
  int iterations() const { return iterations_; }

 private:
  RankOneFactor best_;
  int iterations_;
};

template <typename Derived>
typename Derived::Scalar frobenius_sq(const Eigen::MatrixBase<Derived>& M) {
  return M.squaredNorm();
}

namespace detail {

template <typename Scalar>
void fix_singular_sign(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& u,
                       Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
  for (Index i = 0; i < u.size(); ++i) {
    if (u[i] != Scalar(0)) {
      if (u[i] < Scalar(0)) {
        u = -u;
        v = -v;
      }
      return;
    }
  }
}

}  // namespace detail

/// Largest singular value and its vectors via power iteration on the Gram
/// matrix of the shorter side. The iterate is the right singular vector when
/// cols <= rows, the left one otherwise; the other vector is recovered by one
/// multiplication. Convergence test is the Gram residual ||G x - theta x||
/// against tol * max(theta, ||M||_F^2 / dim), which keeps the test relative
/// to the top eigenvalue even when theta is still small.
///
/// warm_start, when given, seeds the iterate (right vector for cols <= rows,
/// left vector otherwise); its length must match. Otherwise the start is a
/// deterministic seeded random unit vector.
///
/// An all-zero matrix yields sigma = 0 with canonical basis vectors.
template <typename Derived>
RankOneFactorT<typename Derived::Scalar> top_singular_triplet(
    const Eigen::MatrixBase<Derived>& M, double tol = 1e-10, int max_iter = 1000,
    const Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>* warm_start = nullptr,
    std::uint64_t seed = 0x2545f4914f6cdd1dULL) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Index rows = M.rows();
  const Index cols = M.cols();
  if (rows < 1 || cols < 1) throw std::invalid_argument("top_singular_triplet: empty matrix");
  if (!(tol > 0)) throw std::invalid_argument("top_singular_triplet: tol must be positive");

  RankOneFactorT<Scalar> out;
  const Scalar fro2 = M.squaredNorm();
  if (fro2 == Scalar(0)) {
    out.sigma = 0;
    out.u = Vec::Unit(rows, 0);
    out.v = Vec::Unit(cols, 0);
    return out;
  }

  // Iterate on the side whose Gram matrix is smaller.
  const bool iterate_right = cols <= rows;
  const Index dim = iterate_right ? cols : rows;
  const Index other = iterate_right ? rows : cols;

  Vec x;
  if (warm_start != nullptr && warm_start->size() == dim && warm_start->squaredNorm() > Scalar(0)) {
    x = warm_start->normalized();
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    x.resize(dim);
    do {
      for (Index i = 0; i < dim; ++i) x[i] = static_cast<Scalar>(gauss(rng));
    } while (x.squaredNorm() == Scalar(0));
    x.normalize();
  }

  const Scalar floor = fro2 / static_cast<Scalar>(dim);  // lower bound on the top eigenvalue
  Vec w(other), y(dim);
  Scalar theta = 0;
  bool converged = false;
  int used = 0;
  std::mt19937_64 restart_rng(derive_seed(seed, 0xa5));
  for (int it = 0; it < max_iter; ++it) {
    used = it + 1;
    if (iterate_right) {
      w.noalias() = M * x;
      y.noalias() = M.transpose() * w;
    } else {
      w.noalias() = M.transpose() * x;
      y.noalias() = M * w;
    }
    theta = x.dot(y);  // Rayleigh quotient of the Gram matrix = ||w||^2
    const Scalar res = (y - theta * x).norm();
    // theta == 0 means x sits in the null space of a nonzero matrix; that is
    // never the top eigenpair, so fall through to the restart below.
    if (theta > Scalar(0) && res <= static_cast<Scalar>(tol) * std::max(theta, floor)) {
      converged = true;
      break;
    }
    const Scalar ynorm = y.norm();
    if (ynorm == Scalar(0)) {
      // Landed exactly in the null space; restart from a fresh direction.
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (Index i = 0; i < dim; ++i) x[i] = static_cast<Scalar>(gauss(restart_rng));
      x.normalize();
      continue;
    }
    x = y / ynorm;
  }

  if (!converged) {
    // x was advanced past the iterate that produced w and theta; redo one
    // multiply so the reported triplet is self-consistent.
    if (iterate_right) {
      w.noalias() = M * x;
    } else {
      w.noalias() = M.transpose() * x;
    }
    theta = w.squaredNorm();
  }
  out.sigma = std::sqrt(std::max(theta, Scalar(0)));
  if (out.sigma == Scalar(0)) {
    out.u = Vec::Unit(rows, 0);
    out.v = Vec::Unit(cols, 0);
    return out;
  }
  if (iterate_right) {
    out.v = x;
    out.u = w / out.sigma;  // w = M v, ||w|| = sigma
  } else {
    out.u = x;
    out.v = w / out.sigma;
  }
  detail::fix_singular_sign(out.u, out.v);
  if (!converged) {
    throw IterationLimitError("top_singular_triplet: no convergence within max_iter", out, used);
  }
  return out;
}

/// Squared Frobenius distance from M to its best rank-one approximation,
/// computed as ||M||_F^2 - sigma_1^2. Exactly zero for single-row or
/// single-column matrices.
template <typename Derived>
typename Derived::Scalar rank_one_residual(const Eigen::MatrixBase<Derived>& M,
                                           double tol = 1e-10, int max_iter = 1000) {
  using Scalar = typename Derived::Scalar;
  if (M.rows() < 1 || M.cols() < 1) throw std::invalid_argument("rank_one_residual: empty matrix");
  if (M.rows() == 1 || M.cols() == 1) return Scalar(0);
  const auto f = top_singular_triplet(M, tol, max_iter);
  return std::max(Scalar(0), M.squaredNorm() - f.sigma * f.sigma);
}

}  // namespace tnpm
