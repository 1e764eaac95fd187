#include "tnpm/selection.hpp"

#include "tnpm/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace tnpm {
namespace {

void check_counts(Index n, Index m, int k_count, int l_count) {
  if (n < 1 || m < 1) throw std::invalid_argument("penalty: empty matrix dimensions");
  if (k_count < 1 || l_count < 1) throw std::invalid_argument("penalty: cluster counts must be >= 1");
}

}  // namespace

double penalty_theoretical(Index n, Index m, int k_count, int l_count, const PenaltyConfig& cfg) {
  check_counts(n, m, k_count, l_count);
  if (!(cfg.sigma_tilde_sq_max > 0)) {
    throw std::invalid_argument("penalty_theoretical: sigma_tilde_sq_max must be positive");
  }
  if (!(cfg.alpha1 > 0) || !(cfg.alpha2 > 0) || cfg.alpha1 + 4.0 * cfg.alpha2 >= 1.0) {
    throw std::invalid_argument("penalty_theoretical: need alpha1, alpha2 > 0 and alpha1 + 4 alpha2 < 1");
  }
  if (!(cfg.c_const > 0)) throw std::invalid_argument("penalty_theoretical: c_const must be positive");
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  const double dk = static_cast<double>(k_count);
  const double dl = static_cast<double>(l_count);
  const double f2 = dn * std::log(dk) + std::log(dn) + dm * std::log(dl) + std::log(dm);
  const double f1 =
      cfg.c_const * (dn * dl + dm * dk + dk * dl * std::log(2.0 * dk * dl) + dk * dl * f2);
  return 2.0 * cfg.sigma_tilde_sq_max * ((1.0 + 1.0 / cfg.alpha2) * f1 + (1.0 / cfg.alpha1) * f2);
}

double rho_density(const Matrix& A, RhoMode mode) {
  if (A.size() == 0) throw std::invalid_argument("rho_density: empty matrix");
  if (mode == RhoMode::mean_abs) return A.cwiseAbs().mean();
  double sigma = 0.0;
  try {
    sigma = top_singular_triplet(A).sigma;
  } catch (const IterationLimitError& e) {
    sigma = e.best().sigma;
  }
  return sigma / std::sqrt(static_cast<double>(A.rows()) * static_cast<double>(A.cols()));
}

double penalty_empirical(const Matrix& A, int k_count, int l_count, const PenaltyConfig& cfg) {
  check_counts(A.rows(), A.cols(), k_count, l_count);
  const double dn = static_cast<double>(A.rows());
  const double dm = static_cast<double>(A.cols());
  const double lk = std::log(static_cast<double>(k_count));
  const double ll = std::log(static_cast<double>(l_count));
  const double rho = rho_density(A, cfg.rho_mode);
  return rho * (dn * static_cast<double>(l_count) * std::sqrt(std::log(dn) * ll * ll * ll) +
                dm * static_cast<double>(k_count) * std::sqrt(std::log(dm) * lk * lk * lk));
}

double estimate_sigma_tilde_sq(double fit_loss, Index n, Index m) {
  if (n < 1 || m < 1) throw std::invalid_argument("estimate_sigma_tilde_sq: empty dimensions");
  return 1.5 * fit_loss / (static_cast<double>(n) * static_cast<double>(m));
}

SelectionResult select_kl(const Matrix& A, const std::vector<int>& k_grid,
                          const std::vector<int>& l_grid, const Fitter& fitter,
                          const PenaltyConfig& pcfg, const FitConfig& cfg, int n_threads) {
  if (k_grid.empty() || l_grid.empty()) throw std::invalid_argument("select_kl: empty grid");
  for (int k : k_grid) {
    if (k < 1) throw std::invalid_argument("select_kl: grid values must be >= 1");
  }
  for (int l : l_grid) {
    if (l < 1) throw std::invalid_argument("select_kl: grid values must be >= 1");
  }
  if (!fitter) throw std::invalid_argument("select_kl: missing fitter");

  SelectionResult out;
  const std::size_t n_cells = k_grid.size() * l_grid.size();
  out.table.resize(n_cells);
  for (std::size_t idx = 0; idx < n_cells; ++idx) {
    SelectionCell& cell = out.table[idx];
    cell.k_count = k_grid[idx / l_grid.size()];
    cell.l_count = l_grid[idx % l_grid.size()];
    cell.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(cell.k_count) * 1000ULL +
                                          static_cast<std::uint64_t>(cell.l_count));
  }

  const auto run_cell = [&](std::size_t idx) {
    SelectionCell& cell = out.table[idx];
    try {
      const FitResult fr = fitter(A, cell.k_count, cell.l_count, cell.seed);
      cell.loss = fr.final_loss;
      cell.converged = fr.converged;
      cell.ok = true;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  };

  const int workers = std::max(1, std::min<int>(n_threads, static_cast<int>(n_cells)));
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < n_cells; ++idx) run_cell(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < n_cells; idx = next.fetch_add(1)) {
          run_cell(idx);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  // The theoretical penalty needs one noise scale shared across cells; when
  // not supplied, estimate it from the most flexible cell's residuals (they
  // overfit the least structure into the residual).
  PenaltyConfig pen = pcfg;
  if (pen.variant == PenaltyVariant::theoretical && !(pen.sigma_tilde_sq_max > 0)) {
    const int max_k = *std::max_element(k_grid.begin(), k_grid.end());
    const int max_l = *std::max_element(l_grid.begin(), l_grid.end());
    double pilot_loss = -1.0;
    for (const SelectionCell& cell : out.table) {
      if (cell.ok && cell.k_count == max_k && cell.l_count == max_l) pilot_loss = cell.loss;
    }
    if (pilot_loss < 0) {
      for (const SelectionCell& cell : out.table) {
        if (cell.ok && (pilot_loss < 0 || cell.loss < pilot_loss)) pilot_loss = cell.loss;
      }
    }
    if (pilot_loss < 0) throw std::runtime_error("select_kl: every grid cell failed to fit");
    pen.sigma_tilde_sq_max =
        std::max(estimate_sigma_tilde_sq(pilot_loss, A.rows(), A.cols()), 1e-12);
  }

  bool any_ok = false;
  for (SelectionCell& cell : out.table) {
    if (!cell.ok) continue;
    cell.penalty = pen.variant == PenaltyVariant::theoretical
                       ? penalty_theoretical(A.rows(), A.cols(), cell.k_count, cell.l_count, pen)
                       : penalty_empirical(A, cell.k_count, cell.l_count, pen);
    cell.objective = cell.loss + cell.penalty;
    any_ok = true;
  }
  if (!any_ok) throw std::runtime_error("select_kl: every grid cell failed to fit");

  double min_obj = 0.0;
  bool first = true;
  for (const SelectionCell& cell : out.table) {
    if (cell.ok && (first || cell.objective < min_obj)) {
      min_obj = cell.objective;
      first = false;
    }
  }
  // Objectives within rounding distance of the minimum count as tied.
  const double band = 1e-12 * (1.0 + std::abs(min_obj));
  const SelectionCell* best = nullptr;
  for (const SelectionCell& cell : out.table) {
    if (!cell.ok || cell.objective > min_obj + band) continue;
    if (best == nullptr) {
      best = &cell;
      continue;
    }
    const int sum_new = cell.k_count + cell.l_count;
    const int sum_old = best->k_count + best->l_count;
    if (sum_new < sum_old || (sum_new == sum_old && cell.k_count < best->k_count)) best = &cell;
  }
  out.best_k = best->k_count;
  out.best_l = best->l_count;
  return out;
}

}  // namespace tnpm
