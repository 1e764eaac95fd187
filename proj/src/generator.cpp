#include "tnpm/generator.hpp"

#include "tnpm/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace tnpm {
namespace {

// Fixed stream tags so stand-alone calls and sample_network agree.
constexpr std::uint64_t kAssignStream = 1;
constexpr std::uint64_t kParamStream = 2;
constexpr std::uint64_t kAdjacencyStream = 3;

void check_config(const GeneratorConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1) throw std::invalid_argument("generator: n and m must be >= 1");
  if (cfg.k_count < 1 || cfg.l_count < 1) {
    throw std::invalid_argument("generator: cluster counts must be >= 1");
  }
  if (!(cfg.sigma >= 0.0)) throw std::invalid_argument("generator: sigma must be >= 0");
  if (!(cfg.sparsity_eta >= 0.0 && cfg.sparsity_eta < 1.0)) {
    throw std::invalid_argument("generator: sparsity_eta must lie in [0, 1)");
  }
}

void sparsify(Matrix& lam, const std::vector<int>& own_col, double eta) {
  const Index n = lam.rows();
  const Index l_count = lam.cols();
  const auto target = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * static_cast<double>(l_count) * eta));
  if (target == 0) return;
  std::vector<std::pair<double, Index>> eligible;  // (value, flat index), row-major flat
  eligible.reserve(static_cast<std::size_t>(n * l_count));
  for (Index i = 0; i < n; ++i) {
    for (Index l = 0; l < l_count; ++l) {
      if (l == own_col[static_cast<std::size_t>(i)]) continue;
      eligible.emplace_back(lam(i, l), i * l_count + l);
    }
  }
  std::sort(eligible.begin(), eligible.end());
  const std::size_t zeros = std::min(target, eligible.size());
  for (std::size_t t = 0; t < zeros; ++t) {
    const Index flat = eligible[t].second;
    lam(flat / l_count, flat % l_count) = 0.0;
  }
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "normal") return Family::normal;
  if (name == "bernoulli") return Family::bernoulli;
  if (name == "poisson") return Family::poisson;
  if (name == "mixture" || name == "normal_bernoulli_mixture") return Family::normal_bernoulli_mixture;
  throw std::invalid_argument("unknown family: " + name);
}

std::string to_string(Family family) {
  switch (family) {
    case Family::normal: return "normal";
    case Family::bernoulli: return "bernoulli";
    case Family::poisson: return "poisson";
    case Family::normal_bernoulli_mixture: return "mixture";
  }
  return "?";
}

Assignment sample_assignments(const GeneratorConfig& cfg) {
  check_config(cfg);
  if (cfg.n < cfg.k_count || cfg.m < cfg.l_count) {
    throw std::invalid_argument("sample_assignments: fewer nodes than clusters");
  }
  std::mt19937_64 rng(derive_seed(cfg.seed, kAssignStream));
  std::uniform_int_distribution<int> row_label(0, cfg.k_count - 1);
  std::uniform_int_distribution<int> col_label(0, cfg.l_count - 1);
  Assignment a;
  a.k_count = cfg.k_count;
  a.l_count = cfg.l_count;
  a.c.resize(static_cast<std::size_t>(cfg.n));
  a.z.resize(static_cast<std::size_t>(cfg.m));
  auto draw_side = [&](std::vector<int>& labels, auto& dist, int count) {
    while (true) {
      std::vector<char> used(static_cast<std::size_t>(count), 0);
      for (auto& lab : labels) {
        lab = dist(rng);
        used[static_cast<std::size_t>(lab)] = 1;
      }
      if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) return;
    }
  };
  draw_side(a.c, row_label, cfg.k_count);
  draw_side(a.z, col_label, cfg.l_count);
  return a;
}

TnpmParams sample_params(const GeneratorConfig& cfg, const Assignment& a) {
  check_config(cfg);
  if (a.n() != cfg.n || a.m() != cfg.m) {
    throw std::invalid_argument("sample_params: assignment does not match config dimensions");
  }
  std::mt19937_64 rng(derive_seed(cfg.seed, kParamStream));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  TnpmParams params;
  params.lambda.resize(cfg.n, cfg.l_count);
  for (Index i = 0; i < cfg.n; ++i)
    for (Index l = 0; l < cfg.l_count; ++l) params.lambda(i, l) = unif(rng);
  params.lambda_tilde.resize(cfg.m, cfg.k_count);
  for (Index j = 0; j < cfg.m; ++j)
    for (Index k = 0; k < cfg.k_count; ++k) params.lambda_tilde(j, k) = unif(rng);

  if (cfg.sparsity_eta > 0.0) {
    std::vector<int> own_row(a.c.size()), own_col(a.z.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) own_row[i] = a.c[i] % cfg.l_count;
    for (std::size_t j = 0; j < a.z.size(); ++j) own_col[j] = a.z[j] % cfg.k_count;
    sparsify(params.lambda, own_row, cfg.sparsity_eta);
    sparsify(params.lambda_tilde, own_col, cfg.sparsity_eta);
  }
  return params;
}

Matrix sample_adjacency(const Matrix& P, const GeneratorConfig& cfg) {
  check_config(cfg);
  const Index n = P.rows();
  const Index m = P.cols();
  std::mt19937_64 rng(derive_seed(cfg.seed, kAdjacencyStream));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  auto check_prob = [&](Index i, Index j) {
    const double p = P(i, j);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("sample_adjacency: P(" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") = " + std::to_string(p) +
                                  " outside [0, 1] for a Bernoulli entry");
    }
  };
  // Draws are consumed in row-major entry order.
  Matrix A(n, m);
  switch (cfg.family) {
    case Family::normal:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j)
          A(i, j) = cfg.sigma > 0.0 ? P(i, j) + cfg.sigma * gauss(rng) : P(i, j);
      break;
    case Family::bernoulli:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) {
          check_prob(i, j);
          A(i, j) = unif(rng) < P(i, j) ? 1.0 : 0.0;
        }
      break;
    case Family::poisson:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) {
          const double mean = P(i, j);
          if (mean < 0.0) {
            throw std::invalid_argument("sample_adjacency: negative Poisson mean at (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
          }
          if (mean == 0.0) {
            A(i, j) = 0.0;
          } else {
            std::poisson_distribution<long> pois(mean);
            A(i, j) = static_cast<double>(pois(rng));
          }
        }
      break;
    case Family::normal_bernoulli_mixture:
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) {
          if (j < i) {
            check_prob(i, j);
            A(i, j) = unif(rng) < P(i, j) ? 1.0 : 0.0;
          } else {
            A(i, j) = cfg.sigma > 0.0 ? P(i, j) + cfg.sigma * gauss(rng) : P(i, j);
          }
        }
      break;
  }
  return A;
}

Network sample_network(const GeneratorConfig& cfg) {
  Network net;
  net.truth = sample_assignments(cfg);
  net.params = sample_params(cfg, net.truth);
  net.P = probability_matrix(net.params, net.truth);
  net.A = sample_adjacency(net.P, cfg);
  return net;
}

bool satisfies_general_position(const TnpmParams& params, const Assignment& a,
                                double min_entry, double max_cosine) {
  if (params.lambda.minCoeff() < min_entry || params.lambda_tilde.minCoeff() < min_entry) {
    return false;
  }
  const BlockPartition p = partition_from(a);
  auto pairwise_ok = [&](const Matrix& lam, const std::vector<IndexList>& groups) {
    for (const auto& g : groups) {
      if (g.empty()) return false;
      for (Index a_col = 0; a_col < lam.cols(); ++a_col) {
        for (Index b_col = a_col + 1; b_col < lam.cols(); ++b_col) {
          double dot = 0, na = 0, nb = 0;
          for (Index idx : g) {
            dot += lam(idx, a_col) * lam(idx, b_col);
            na += lam(idx, a_col) * lam(idx, a_col);
            nb += lam(idx, b_col) * lam(idx, b_col);
          }
          if (na == 0 || nb == 0) return false;
          if (dot / std::sqrt(na * nb) > max_cosine) return false;
        }
      }
    }
    return true;
  };
  return pairwise_ok(params.lambda, p.row_groups) &&
         pairwise_ok(params.lambda_tilde, p.col_groups);
}

}  // namespace tnpm
