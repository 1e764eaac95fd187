// Acceptance harness: every release gate in one binary, one verdict line per
// criterion. Each check pins its tolerances, seeds, and wall budget in code so
// a pass means the same thing on every machine. Pass criterion numbers as
// arguments to run a subset, e.g. `tnpm_acceptance 1 5 9`.

#include "tnpm/baselines.hpp"
#include "tnpm/dom.hpp"
#include "tnpm/generator.hpp"
#include "tnpm/init.hpp"
#include "tnpm/linalg.hpp"
#include "tnpm/metrics.hpp"
#include "tnpm/model.hpp"
#include "tnpm/selection.hpp"
#include "tnpm/tsdc.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

using namespace tnpm;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return std::string(buf);
}

GeneratorConfig make_config(Index n, Index m, int K, int L, Family family, double sigma,
                            double eta, std::uint64_t seed) {
  GeneratorConfig gc;
  gc.n = n;
  gc.m = m;
  gc.k_count = K;
  gc.l_count = L;
  gc.family = family;
  gc.sigma = sigma;
  gc.sparsity_eta = eta;
  gc.seed = seed;
  return gc;
}

// Shared fitting pipeline: spectral start, then the requested refiner. The
// sub-seeds mirror the command-line tool.
Assignment spectral_start(const Matrix& A, int K, int L, std::uint64_t seed) {
  KMeansConfig km;
  km.seed = derive_seed(seed, 1);
  return svd_kmeans_init(A, K, L, km);
}

FitConfig fit_config(std::uint64_t seed) {
  FitConfig fc;
  fc.seed = derive_seed(seed, 2);
  return fc;
}

double nmi_both_sides(const Assignment& got, const Assignment& truth) {
  return 0.5 * (nmi(got.c, truth.c) + nmi(got.z, truth.z));
}

// ---------------------------------------------------------------------------
// 1. Delete-one deltas reproduce full-objective differences node by node.

Verdict criterion_1() {
  constexpr double kPairTol = 1e-8;  // |delta difference - full difference|
  int checked_nodes = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const int K = 2 + inst % 2;
    const int L = K;
    const GeneratorConfig gc =
        make_config(20, 20, K, L, Family::normal, 0.3, 0.0, 1100 + inst);
    const Network net = sample_network(gc);
    const Assignment& a = net.truth;

    std::vector<int> row_count(static_cast<std::size_t>(K), 0);
    std::vector<int> col_count(static_cast<std::size_t>(L), 0);
    for (int v : a.c) ++row_count[static_cast<std::size_t>(v)];
    for (int v : a.z) ++col_count[static_cast<std::size_t>(v)];

    auto check_node = [&](bool row_side, Index node, int n_labels) -> Verdict {
      std::vector<double> delta(static_cast<std::size_t>(n_labels));
      std::vector<double> full(static_cast<std::size_t>(n_labels));
      for (int cand = 0; cand < n_labels; ++cand) {
        Assignment forced = a;
        if (row_side) {
          delta[static_cast<std::size_t>(cand)] = row_delta(net.A, a, node, cand);
          forced.c[static_cast<std::size_t>(node)] = cand;
        } else {
          delta[static_cast<std::size_t>(cand)] = col_delta(net.A, a, node, cand);
          forced.z[static_cast<std::size_t>(node)] = cand;
        }
        full[static_cast<std::size_t>(cand)] = total_loss(net.A, forced);
      }
      const auto am_delta = std::min_element(delta.begin(), delta.end()) - delta.begin();
      const auto am_full = std::min_element(full.begin(), full.end()) - full.begin();
      if (am_delta != am_full) {
        return {false, fmt("instance %d %s node %ld: delta argmin %ld vs full argmin %ld", inst,
                           row_side ? "row" : "col", long(node), long(am_delta), long(am_full))};
      }
      for (int p = 0; p < n_labels; ++p) {
        for (int q = p + 1; q < n_labels; ++q) {
          const double lhs = delta[static_cast<std::size_t>(p)] - delta[static_cast<std::size_t>(q)];
          const double rhs = full[static_cast<std::size_t>(p)] - full[static_cast<std::size_t>(q)];
          if (std::abs(lhs - rhs) > kPairTol) {
            return {false, fmt("instance %d %s node %ld labels (%d,%d): delta diff %.3e vs "
                               "full diff %.3e",
                               inst, row_side ? "row" : "col", long(node), p, q, lhs, rhs)};
          }
        }
      }
      ++checked_nodes;
      return {true, ""};
    };

    for (Index i = 0; i < a.n(); ++i) {
      if (row_count[static_cast<std::size_t>(a.c[static_cast<std::size_t>(i)])] == 1) continue;
      const Verdict v = check_node(true, i, K);
      if (!v.pass) return v;
    }
    for (Index j = 0; j < a.m(); ++j) {
      if (col_count[static_cast<std::size_t>(a.z[static_cast<std::size_t>(j)])] == 1) continue;
      const Verdict v = check_node(false, j, L);
      if (!v.pass) return v;
    }
  }
  return {true, fmt("argmin and pairwise differences agree to 1e-8 on %d nodes over 50 instances",
                    checked_nodes)};
}

// ---------------------------------------------------------------------------
// 2. Greedy descent from the best start matches exhaustive search.

Verdict criterion_2() {
  constexpr double kLossTol = 1e-9;
  // All two-cluster labelings of 6 nodes with both clusters nonempty.
  std::vector<std::vector<int>> labelings;
  for (int mask = 1; mask < 63; ++mask) {
    std::vector<int> lab(6);
    for (int b = 0; b < 6; ++b) lab[static_cast<std::size_t>(b)] = (mask >> b) & 1;
    labelings.push_back(std::move(lab));
  }

  for (int inst = 0; inst < 20; ++inst) {
    const GeneratorConfig gc = make_config(6, 6, 2, 2, Family::normal, 0.5, 0.0, 2100 + inst);
    const Network net = sample_network(gc);

    double global_min = std::numeric_limits<double>::infinity();
    Assignment a;
    a.k_count = 2;
    a.l_count = 2;
    for (const auto& c : labelings) {
      a.c = c;
      for (const auto& z : labelings) {
        a.z = z;
        global_min = std::min(global_min, total_loss(net.A, a));
      }
    }

    double best_fit = std::numeric_limits<double>::infinity();
    FitConfig cfg;
    cfg.seed = 7;
    for (const auto& c : labelings) {
      a.c = c;
      for (const auto& z : labelings) {
        a.z = z;
        const FitResult r = fit_dom(net.A, 2, 2, a, cfg);
        best_fit = std::min(best_fit, r.final_loss);
        if (best_fit <= global_min + kLossTol) break;  // cannot go lower than the optimum
      }
      if (best_fit <= global_min + kLossTol) break;
    }
    if (std::abs(best_fit - global_min) > kLossTol) {
      return {false, fmt("instance %d: best descent loss %.12f vs exhaustive minimum %.12f", inst,
                         best_fit, global_min)};
    }
  }
  return {true, "best-start descent hits the exhaustive optimum on all 20 instances"};
}

// ---------------------------------------------------------------------------
// 3. The loss trajectory never increases. No tolerance: zero violations.

Verdict criterion_3() {
  for (int run = 0; run < 100; ++run) {
    const double sigma = 0.2 + 0.2 * (run % 3);
    const GeneratorConfig gc = make_config(100, 100, 3, 3, Family::normal, sigma, 0.0, 3100 + run);
    const Network net = sample_network(gc);
    const Assignment init = spectral_start(net.A, 3, 3, gc.seed);
    const FitResult r = fit_dom(net.A, 3, 3, init, fit_config(gc.seed));
    for (std::size_t t = 1; t < r.loss_trajectory.size(); ++t) {
      if (r.loss_trajectory[t] > r.loss_trajectory[t - 1]) {
        return {false, fmt("run %d sweep %zu: loss rose from %.12f to %.12f", run, t,
                           r.loss_trajectory[t - 1], r.loss_trajectory[t])};
      }
    }
  }
  return {true, "100 trajectories non-increasing with zero violations"};
}

// ---------------------------------------------------------------------------
// 4. Noiseless recovery at n=m=200, parameters in numeric general position.

Verdict criterion_4() {
  constexpr double kNmiFloor = 1.0 - 1e-12;
  int dom_hits = 0;
  int tsdc_hits = 0;
  for (int run = 0; run < 100; ++run) {
    GeneratorConfig gc = make_config(200, 200, 3, 4, Family::normal, 0.0, 0.0, 4100 + run);
    const Assignment truth = sample_assignments(gc);
    TnpmParams params = sample_params(gc, truth);
    for (int attempt = 0; !satisfies_general_position(params, truth); ++attempt) {
      GeneratorConfig redraw = gc;
      redraw.seed = derive_seed(gc.seed, 7000 + attempt);
      params = sample_params(redraw, truth);
      if (attempt > 200) return {false, fmt("run %d: no general-position draw found", run)};
    }
    const Matrix A = probability_matrix(params, truth);  // sigma = 0: the data is the mean

    const Assignment init = spectral_start(A, 3, 4, gc.seed);
    const FitConfig fc = fit_config(gc.seed);
    const FitResult dom = fit_dom(A, 3, 4, init, fc);
    const FitResult tsdc = fit_tsdc(A, 3, 4, init, fc);
    if (nmi(dom.assignment.c, truth.c) >= kNmiFloor && nmi(dom.assignment.z, truth.z) >= kNmiFloor)
      ++dom_hits;
    if (nmi(tsdc.assignment.c, truth.c) >= kNmiFloor &&
        nmi(tsdc.assignment.z, truth.z) >= kNmiFloor)
      ++tsdc_hits;
  }
  const bool pass = dom_hits >= 95 && tsdc_hits >= 95;
  return {pass, fmt("exact recovery on both sides: descent %d/100, cosine %d/100 (need >= 95)",
                    dom_hits, tsdc_hits)};
}

// ---------------------------------------------------------------------------
// 5. Mean NMI decays with noise and beats the spectral baseline mid-range.

Verdict criterion_5() {
  constexpr double kStepSlack = 0.02;   // permitted rise between adjacent sigmas
  constexpr double kBaselineGap = 0.05; // required margin over the baseline at sigma 0.2, 0.3
  constexpr int kSeeds = 20;
  const std::vector<double> sigmas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6};

  std::vector<double> dom_mean, tsdc_mean, svdk_mean;
  for (std::size_t si = 0; si < sigmas.size(); ++si) {
    double dom_sum = 0, tsdc_sum = 0, svdk_sum = 0;
    for (int s = 0; s < kSeeds; ++s) {
      const GeneratorConfig gc = make_config(200, 200, 3, 4, Family::normal, sigmas[si], 0.0,
                                             5100 + 100 * static_cast<int>(si) + s);
      const Network net = sample_network(gc);
      const Assignment init = spectral_start(net.A, 3, 4, gc.seed);
      const FitConfig fc = fit_config(gc.seed);
      dom_sum += nmi_both_sides(fit_dom(net.A, 3, 4, init, fc).assignment, net.truth);
      tsdc_sum += nmi_both_sides(fit_tsdc(net.A, 3, 4, init, fc).assignment, net.truth);
      svdk_sum += nmi_both_sides(init, net.truth);  // the baseline is the spectral start itself
    }
    dom_mean.push_back(dom_sum / kSeeds);
    tsdc_mean.push_back(tsdc_sum / kSeeds);
    svdk_mean.push_back(svdk_sum / kSeeds);
  }

  for (std::size_t si = 1; si < sigmas.size(); ++si) {
    if (dom_mean[si] > dom_mean[si - 1] + kStepSlack) {
      return {false, fmt("descent NMI rose %.3f -> %.3f between sigma %.1f and %.1f",
                         dom_mean[si - 1], dom_mean[si], sigmas[si - 1], sigmas[si])};
    }
    if (tsdc_mean[si] > tsdc_mean[si - 1] + kStepSlack) {
      return {false, fmt("cosine NMI rose %.3f -> %.3f between sigma %.1f and %.1f",
                         tsdc_mean[si - 1], tsdc_mean[si], sigmas[si - 1], sigmas[si])};
    }
  }
  for (std::size_t si : {std::size_t(2), std::size_t(3)}) {  // sigma 0.2 and 0.3
    if (dom_mean[si] < svdk_mean[si] + kBaselineGap || tsdc_mean[si] < svdk_mean[si] + kBaselineGap) {
      return {false,
              fmt("at sigma %.1f: descent %.3f, cosine %.3f, baseline %.3f (margin %.2f needed)",
                  sigmas[si], dom_mean[si], tsdc_mean[si], svdk_mean[si], kBaselineGap)};
    }
  }
  return {true, fmt("NMI decays in sigma; at 0.2/0.3 descent %.3f/%.3f and cosine %.3f/%.3f vs "
                    "baseline %.3f/%.3f",
                    dom_mean[2], dom_mean[3], tsdc_mean[2], tsdc_mean[3], svdk_mean[2],
                    svdk_mean[3])};
}

// ---------------------------------------------------------------------------
// 6. Mixed continuous/binary entries at n=m=360 stay recoverable.

Verdict criterion_6() {
  constexpr double kMeanFloor = 0.9;
  constexpr int kSeeds = 50;
  double dom_c = 0, dom_z = 0, tsdc_c = 0, tsdc_z = 0;
  for (int s = 0; s < kSeeds; ++s) {
    const GeneratorConfig gc =
        make_config(360, 360, 3, 4, Family::normal_bernoulli_mixture, 0.1, 0.0, 6100 + s);
    const Network net = sample_network(gc);
    const Assignment init = spectral_start(net.A, 3, 4, gc.seed);
    const FitConfig fc = fit_config(gc.seed);
    const FitResult dom = fit_dom(net.A, 3, 4, init, fc);
    const FitResult tsdc = fit_tsdc(net.A, 3, 4, init, fc);
    dom_c += nmi(dom.assignment.c, net.truth.c);
    dom_z += nmi(dom.assignment.z, net.truth.z);
    tsdc_c += nmi(tsdc.assignment.c, net.truth.c);
    tsdc_z += nmi(tsdc.assignment.z, net.truth.z);
  }
  dom_c /= kSeeds;
  dom_z /= kSeeds;
  tsdc_c /= kSeeds;
  tsdc_z /= kSeeds;
  const bool pass = dom_c >= kMeanFloor && dom_z >= kMeanFloor && tsdc_c >= kMeanFloor &&
                    tsdc_z >= kMeanFloor;
  return {pass, fmt("mean NMI rows/cols: descent %.3f/%.3f, cosine %.3f/%.3f (floor %.1f)", dom_c,
                    dom_z, tsdc_c, tsdc_z, kMeanFloor)};
}

// ---------------------------------------------------------------------------
// 7. Sparser parameters hurt, and the descent wins on small networks.

Verdict criterion_7() {
  constexpr int kSeeds = 20;
  auto mean_nmi = [&](Index n, double eta, int seed_base, bool use_dom) {
    double sum = 0;
    for (int s = 0; s < kSeeds; ++s) {
      const GeneratorConfig gc =
          make_config(n, n, 3, 4, Family::bernoulli, 0.0, eta, seed_base + s);
      const Network net = sample_network(gc);
      const Assignment init = spectral_start(net.A, 3, 4, gc.seed);
      const FitConfig fc = fit_config(gc.seed);
      const FitResult r = use_dom ? fit_dom(net.A, 3, 4, init, fc)
                                  : fit_tsdc(net.A, 3, 4, init, fc);
      sum += nmi_both_sides(r.assignment, net.truth);
    }
    return sum / kSeeds;
  };

  const double dom_dense = mean_nmi(400, 0.3, 7100, true);
  const double dom_sparse = mean_nmi(400, 0.7, 7100, true);
  const double tsdc_dense = mean_nmi(400, 0.3, 7100, false);
  const double tsdc_sparse = mean_nmi(400, 0.7, 7100, false);
  if (dom_sparse > dom_dense || tsdc_sparse > tsdc_dense) {
    return {false, fmt("sparsity did not hurt: descent %.3f -> %.3f, cosine %.3f -> %.3f",
                       dom_dense, dom_sparse, tsdc_dense, tsdc_sparse)};
  }
  const double dom_small = mean_nmi(200, 0.3, 7500, true);
  const double tsdc_small = mean_nmi(200, 0.3, 7500, false);
  if (dom_small < tsdc_small) {
    return {false, fmt("small-network ordering violated: descent %.3f < cosine %.3f", dom_small,
                       tsdc_small)};
  }
  return {true, fmt("eta 0.3 -> 0.7 drops descent %.3f -> %.3f and cosine %.3f -> %.3f; at "
                    "n=200 descent %.3f >= cosine %.3f",
                    dom_dense, dom_sparse, tsdc_dense, tsdc_sparse, dom_small, tsdc_small)};
}

// ---------------------------------------------------------------------------
// 8. Speed ordering on one n=m=600 instance.

Verdict criterion_8() {
  const GeneratorConfig gc = make_config(600, 600, 3, 4, Family::normal, 0.1, 0.0, 8100);
  const Network net = sample_network(gc);

  KMeansConfig km;
  km.seed = derive_seed(gc.seed, 1);
  const Clock::time_point t0 = Clock::now();
  const Assignment init = svd_kmeans_init(net.A, 3, 4, km);
  const double svdk_wall = seconds_since(t0);

  const FitConfig fc = fit_config(gc.seed);
  const Clock::time_point t1 = Clock::now();
  const FitResult dom = fit_dom(net.A, 3, 4, init, fc);
  const double dom_wall = seconds_since(t1);

  const Clock::time_point t2 = Clock::now();
  const FitResult tsdc = fit_tsdc(net.A, 3, 4, init, fc);
  const double tsdc_wall = seconds_since(t2);

  (void)dom;
  (void)tsdc;
  const bool pass = tsdc_wall < svdk_wall * 50.0 && tsdc_wall < dom_wall / 100.0;
  return {pass, fmt("walls: cosine %.4fs, spectral baseline %.4fs, descent %.4fs "
                    "(need cosine < baseline*50 and < descent/100)",
                    tsdc_wall, svdk_wall, dom_wall)};
}

// ---------------------------------------------------------------------------
// 9. Penalized grid search recovers the planted (3, 4) in most runs.

Verdict criterion_9() {
  constexpr int kSeeds = 20;
  const std::vector<int> grid = {2, 3, 4, 5};
  const Fitter fitter = [](const Matrix& A, int K, int L, std::uint64_t seed) {
    KMeansConfig km;
    km.seed = derive_seed(seed, 1);
    const Assignment init = svd_kmeans_init(A, K, L, km);
    FitConfig fc;
    fc.seed = derive_seed(seed, 2);
    return fit_tsdc(A, K, L, init, fc);
  };

  int hits = 0;
  for (int s = 0; s < kSeeds; ++s) {
    const GeneratorConfig gc = make_config(360, 360, 3, 4, Family::normal, 0.1, 0.0, 9100 + s);
    const Network net = sample_network(gc);
    PenaltyConfig pcfg;  // empirical variant by default
    FitConfig fcfg;
    fcfg.seed = gc.seed;
    const SelectionResult r = select_kl(net.A, grid, grid, fitter, pcfg, fcfg);
    if (r.best_k == 3 && r.best_l == 4) ++hits;
  }
  return {hits > 10, fmt("true size selected in %d/20 runs (need > 10)", hits)};
}

// ---------------------------------------------------------------------------
// 10. The two assignment-error implementations are interchangeable.

Verdict criterion_10() {
  std::mt19937_64 rng(10100);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const std::size_t n = 4 + rng() % 60;
    std::vector<int> a(n), b(n);
    std::uniform_int_distribution<int> lab(0, k - 1);
    for (auto& v : a) v = lab(rng);
    for (auto& v : b) v = lab(rng);
    const double e = min_perm_error_enumeration(a, b, k);
    const double h = min_perm_error_hungarian(a, b, k);
    if (e != h) {
      return {false, fmt("trial %d (k=%d, n=%zu): enumeration %.17g vs assignment %.17g", trial,
                         k, n, e, h)};
    }
  }
  // Endpoint identities.
  const std::vector<int> truth = {0, 1, 2, 0, 1, 2, 2};
  const std::vector<int> rot = {1, 2, 0, 1, 2, 0, 0};
  std::vector<int> anti = rot;
  anti[0] = 0;  // one node off a perfect relabeling
  if (min_perm_error(truth, truth, 3) != 0.0) return {false, "error(x, x) != 0"};
  if (min_perm_error(rot, truth, 3) != 0.0) return {false, "error under relabeling != 0"};
  if (nmi(truth, truth) != 1.0) return {false, "nmi(x, x) != 1"};
  if (nmi(rot, truth) != 1.0) return {false, "nmi under relabeling != 1"};
  const std::vector<int> flat(truth.size(), 0);
  if (nmi(flat, flat) != 1.0) return {false, "nmi of two single-cluster partitions != 1"};
  if (nmi(flat, truth) != 0.0) return {false, "nmi(constant, informative) != 0"};
  if (std::abs(min_perm_error(anti, truth, 3) - 1.0 / 7.0) > 1e-15)
    return {false, "single flip != 1/n"};
  return {true, "enumeration == assignment solver on 1000 pairs; endpoint identities exact"};
}

// ---------------------------------------------------------------------------
// 11. Rank-one machinery against dense linear-algebra oracles.

Verdict criterion_11() {
  constexpr double kResidTol = 1e-8;
  constexpr double kSigmaTol = 1e-9;
  std::mt19937_64 rng(11100);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 2 + static_cast<Index>(rng() % 29);
    const Index cols = 2 + static_cast<Index>(rng() % 29);
    Matrix M(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) M(i, j) = entry(rng);

    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Matrix P1 =
        svd.singularValues()(0) * svd.matrixU().col(0) * svd.matrixV().col(0).transpose();
    const double explicit_resid = (M - P1).squaredNorm();
    const double resid = rank_one_residual(M);
    if (std::abs(resid - explicit_resid) > kResidTol) {
      return {false, fmt("trial %d (%ldx%ld): residual %.12f vs explicit %.12f", trial, long(rows),
                         long(cols), resid, explicit_resid)};
    }

    const Matrix gram = M.transpose() * M;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
    const double sigma_oracle = std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
    const double sigma = top_singular_triplet(M).sigma;
    if (std::abs(sigma - sigma_oracle) > kSigmaTol) {
      return {false, fmt("trial %d: sigma %.15f vs Gram eigen-oracle %.15f", trial, sigma,
                         sigma_oracle)};
    }
  }
  return {true, "residual within 1e-8 and sigma within 1e-9 of dense oracles on 200 matrices"};
}

// ---------------------------------------------------------------------------
// 12. Sample means of the generator families track the mean matrix.

Verdict criterion_12() {
  constexpr int kReplicates = 500;
  constexpr double kBand = 4.0;       // standard errors
  constexpr double kCoverage = 0.99;  // fraction of entries that must sit in band
  for (Family family : {Family::normal, Family::bernoulli, Family::poisson,
                        Family::normal_bernoulli_mixture}) {
    GeneratorConfig gc = make_config(20, 20, 2, 2, family, 0.3, 0.0, 12100);
    const Assignment truth = sample_assignments(gc);
    const TnpmParams params = sample_params(gc, truth);
    const Matrix P = probability_matrix(params, truth);

    Matrix sum = Matrix::Zero(20, 20);
    for (int r = 0; r < kReplicates; ++r) {
      GeneratorConfig draw = gc;
      draw.seed = derive_seed(gc.seed, static_cast<std::uint64_t>(r));
      sum += sample_adjacency(P, draw);
    }
    const Matrix mean = sum / kReplicates;

    int inside = 0;
    for (Index i = 0; i < 20; ++i) {
      for (Index j = 0; j < 20; ++j) {
        double var = 0.0;
        switch (family) {
          case Family::normal: var = gc.sigma * gc.sigma; break;
          case Family::bernoulli: var = P(i, j) * (1.0 - P(i, j)); break;
          case Family::poisson: var = P(i, j); break;
          case Family::normal_bernoulli_mixture:
            var = j < i ? P(i, j) * (1.0 - P(i, j)) : gc.sigma * gc.sigma;
            break;
        }
        const double se = std::sqrt(var / kReplicates);
        if (std::abs(mean(i, j) - P(i, j)) <= kBand * se) ++inside;
      }
    }
    const double frac = inside / 400.0;
    if (frac < kCoverage) {
      return {false, fmt("%s: only %.1f%% of entries within %g standard errors",
                         to_string(family).c_str(), 100.0 * frac, kBand)};
    }
  }
  return {true, "all four families keep >= 99% of entry means within 4 standard errors"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no budget stated
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "delete-one exactness", 60, criterion_1},
      {2, "exhaustive-oracle equivalence", 120, criterion_2},
      {3, "monotone descent", 0, criterion_3},
      {4, "noiseless recovery", 300, criterion_4},
      {5, "noise robustness trend", 900, criterion_5},
      {6, "mixture-case validity", 600, criterion_6},
      {7, "sparse-case trend", 600, criterion_7},
      {8, "speed ordering", 600, criterion_8},
      {9, "model selection", 1200, criterion_9},
      {10, "metric correctness", 0, criterion_10},
      {11, "linear-algebra oracle", 0, criterion_11},
      {12, "generator moments", 0, criterion_12},
  };

  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const Clock::time_point t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double wall = seconds_since(t0);
    if (v.pass && c.budget_seconds > 0 && wall > c.budget_seconds) {
      v.pass = false;
      v.detail += fmt(" [exceeded %.0fs budget]", c.budget_seconds);
    }
    std::printf("criterion %2d %-30s %s  %s  (%.1fs)\n", c.id, c.name, v.pass ? "PASS" : "FAIL",
                v.detail.c_str(), wall);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  if (failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures;
}
