#pragma once

#include "tnpm/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tnpm {

/// Density/scale proxy used by the empirical penalty.
enum class RhoMode {
  mean_abs,          // mean absolute entry of A
  top_sigma_scaled,  // largest singular value / sqrt(n m)
};

enum class PenaltyVariant { theoretical, empirical };

struct PenaltyConfig {
  PenaltyVariant variant = PenaltyVariant::empirical;
  // Noise-variance bound for the theoretical penalty. Values <= 0 mean
  // "estimate during selection": 1.5 x residual variance of the largest grid
  // cell's fit. penalty_theoretical itself requires a positive value.
  double sigma_tilde_sq_max = 0.0;
  double alpha1 = 0.1;  // requires alpha1 + 4 * alpha2 < 1
  double alpha2 = 0.1;
  double c_const = 1.0;
  RhoMode rho_mode = RhoMode::mean_abs;
};

/// Theory-shaped penalty 2 sigma_tilde_sq_max { (1 + 1/alpha2) F1 + (1/alpha1) F2 } with
///   F1 = C { nL + mK + KL ln(2KL) + KL (n ln K + ln n + m ln L + ln m) }
///   F2 = n ln K + ln n + m ln L + ln m
/// (natural logarithms). Nondecreasing in K and L.
double penalty_theoretical(Index n, Index m, int k_count, int l_count, const PenaltyConfig& cfg);

/// Data-driven penalty rho(A) { nL sqrt(ln n (ln L)^3) + mK sqrt(ln m (ln K)^3) }.
/// Degenerates to 0 at K = L = 1.
double penalty_empirical(const Matrix& A, int k_count, int l_count, const PenaltyConfig& cfg);

double rho_density(const Matrix& A, RhoMode mode);

/// Plug-in noise-variance bound: 1.5 x fit_loss / (n m).
double estimate_sigma_tilde_sq(double fit_loss, Index n, Index m);

/// Fits A at the given (K, L) from the given seed; final_loss must hold the
/// block rank-one residual loss of the returned assignment.
using Fitter = std::function<FitResult(const Matrix&, int, int, std::uint64_t)>;

struct SelectionCell {
  int k_count = 0;
  int l_count = 0;
  std::uint64_t seed = 0;
  double loss = 0.0;
  double penalty = 0.0;
  double objective = 0.0;
  bool converged = false;
  bool ok = false;       // fit succeeded; false cells are excluded from argmin
  std::string error;
};

struct SelectionResult {
  int best_k = 0;
  int best_l = 0;
  std::vector<SelectionCell> table;  // row-major over k_grid x l_grid
};

/// Penalized grid search: fit every (K, L) cell with a per-cell seed
/// derive_seed(cfg.seed, 1000 K + L), then minimize loss + penalty over the
/// cells that fit successfully. Near-equal objectives tie-break toward
/// smaller K + L, then smaller K. Cells are independent and may run on up to
/// n_threads workers (the fitter must then be safe to call concurrently);
/// results do not depend on the thread count. Throws when every cell fails.
SelectionResult select_kl(const Matrix& A, const std::vector<int>& k_grid,
                          const std::vector<int>& l_grid, const Fitter& fitter,
                          const PenaltyConfig& pcfg, const FitConfig& cfg, int n_threads = 1);

}  // namespace tnpm
