#pragma once

#include "tnpm/types.hpp"

namespace tnpm {

using ConfusionTable = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// Co-occurrence counts of two labelings over the same nodes.
ConfusionTable confusion_table(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

/// Fraction of nodes misclassified under the best label permutation.
/// Dispatches to full enumeration for k <= 8 and to the assignment-problem
/// solver above that; both are exposed for cross-checking.
double min_perm_error(const std::vector<int>& labels, const std::vector<int>& truth, int k);
double min_perm_error_enumeration(const std::vector<int>& labels, const std::vector<int>& truth, int k);
double min_perm_error_hungarian(const std::vector<int>& labels, const std::vector<int>& truth, int k);

enum class NmiVariant { average, max_entropy };

/// Normalized mutual information with plug-in distributions and natural
/// logarithms. The average variant normalizes by (H1 + H2) / 2, the
/// max_entropy variant by max(H1, H2). Two single-cluster partitions give 1.
double nmi(const std::vector<int>& labels, const std::vector<int>& truth,
           NmiVariant variant = NmiVariant::average);

struct Chi2Result {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson chi-squared test of independence. Requires every row and column
/// sum positive.
Chi2Result chi2_independence(const ConfusionTable& table);

/// Upper regularized incomplete gamma Q(a, x); the chi-squared survival
/// function is Q(dof/2, statistic/2).
double regularized_gamma_q(double a, double x);

}  // namespace tnpm
