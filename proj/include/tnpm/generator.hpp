#pragma once

#include "tnpm/types.hpp"

namespace tnpm {

enum class Family { normal, bernoulli, poisson, normal_bernoulli_mixture };

Family family_from_string(const std::string& name);
std::string to_string(Family family);

struct GeneratorConfig {
  Index n = 0;
  Index m = 0;
  int k_count = 1;
  int l_count = 1;
  Family family = Family::normal;
  double sigma = 0.0;         // normal / mixture noise level
  double sparsity_eta = 0.0;  // in [0, 1)
  std::uint64_t seed = 0;
};

/// Labels drawn i.i.d. uniform over the cluster range, redrawn as a whole
/// until every cluster on both sides is nonempty.
Assignment sample_assignments(const GeneratorConfig& cfg);

/// Popularity parameters drawn i.i.d. U[0,1]. With sparsity_eta > 0, the
/// floor(n*L*eta) smallest entries of lambda outside each row's own-community
/// position are set to zero (floor(m*K*eta) for lambda_tilde). The
/// own-community position of row node i is column c_i mod L (and z_j mod K
/// for column node j); it is never zeroed.
TnpmParams sample_params(const GeneratorConfig& cfg, const Assignment& a);

/// Entry-wise independent draws with mean P. For the mixture family the
/// strict lower triangle is Bernoulli and everything else (diagonal
/// included) is normal. Bernoulli draws require the corresponding P entries
/// in [0,1]; violations raise an error naming the entry.
Matrix sample_adjacency(const Matrix& P, const GeneratorConfig& cfg);

struct Network {
  Assignment truth;
  TnpmParams params;
  Matrix P;
  Matrix A;
};

Network sample_network(const GeneratorConfig& cfg);

/// Numeric proxy for the identifiability assumptions: all parameter entries
/// at least min_entry, and within every cluster's popularity columns no two
/// are closer than max_cosine in angle. Used to reject degenerate benchmark
/// instances.
bool satisfies_general_position(const TnpmParams& params, const Assignment& a,
                                double min_entry = 1e-3, double max_cosine = 0.999);

}  // namespace tnpm
