#include "tnpm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tnpm {
namespace {

void check_lengths(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("metrics: label vectors must be nonempty and equally long");
  }
}

// Agreement counts agree(p, t) = #{i : labels_i == p and truth_i == t},
// padded to a k x k square.
Matrix agreement_matrix(const std::vector<int>& labels, const std::vector<int>& truth, int k) {
  Matrix agree = Matrix::Zero(k, k);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= k || truth[i] < 0 || truth[i] >= k) {
      throw std::invalid_argument("metrics: label outside [0, k)");
    }
    agree(labels[i], truth[i]) += 1.0;
  }
  return agree;
}

// Maximum-weight perfect matching on a square nonnegative matrix
// (potentials form of the Hungarian algorithm, O(k^3)).
double max_assignment(const Matrix& weight) {
  const int k = static_cast<int>(weight.rows());
  Matrix cost = -weight;  // minimize
  std::vector<double> pot_u(static_cast<std::size_t>(k) + 1, 0.0);
  std::vector<double> pot_v(static_cast<std::size_t>(k) + 1, 0.0);
  std::vector<int> match(static_cast<std::size_t>(k) + 1, 0);  // column -> row, 1-based
  std::vector<int> way(static_cast<std::size_t>(k) + 1, 0);
  for (int i = 1; i <= k; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(k) + 1, std::numeric_limits<double>::infinity());
    std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = match[static_cast<std::size_t>(j0)];
      double delta = std::numeric_limits<double>::infinity();
      int j1 = 0;
      for (int j = 1; j <= k; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - pot_u[static_cast<std::size_t>(i0)] -
                           pot_v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= k; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          pot_u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
          pot_v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (match[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  double total = 0.0;
  for (int j = 1; j <= k; ++j) total += weight(match[static_cast<std::size_t>(j)] - 1, j - 1);
  return total;
}

}  // namespace

ConfusionTable confusion_table(const std::vector<int>& labels_a, const std::vector<int>& labels_b) {
  check_lengths(labels_a, labels_b);
  const int ka = *std::max_element(labels_a.begin(), labels_a.end()) + 1;
  const int kb = *std::max_element(labels_b.begin(), labels_b.end()) + 1;
  if (*std::min_element(labels_a.begin(), labels_a.end()) < 0 ||
      *std::min_element(labels_b.begin(), labels_b.end()) < 0) {
    throw std::invalid_argument("confusion_table: negative label");
  }
  ConfusionTable table = ConfusionTable::Zero(ka, kb);
  for (std::size_t i = 0; i < labels_a.size(); ++i) table(labels_a[i], labels_b[i]) += 1;
  return table;
}

double min_perm_error_enumeration(const std::vector<int>& labels, const std::vector<int>& truth,
                                  int k) {
  check_lengths(labels, truth);
  const Matrix agree = agreement_matrix(labels, truth, k);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  double best = 0.0;
  do {
    double total = 0.0;
    for (int p = 0; p < k; ++p) total += agree(p, perm[static_cast<std::size_t>(p)]);
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 1.0 - best / static_cast<double>(labels.size());
}

double min_perm_error_hungarian(const std::vector<int>& labels, const std::vector<int>& truth,
                                int k) {
  check_lengths(labels, truth);
  const Matrix agree = agreement_matrix(labels, truth, k);
  return 1.0 - max_assignment(agree) / static_cast<double>(labels.size());
}

double min_perm_error(const std::vector<int>& labels, const std::vector<int>& truth, int k) {
  return k <= 8 ? min_perm_error_enumeration(labels, truth, k)
                : min_perm_error_hungarian(labels, truth, k);
}

double nmi(const std::vector<int>& labels, const std::vector<int>& truth, NmiVariant variant) {
  const ConfusionTable table = confusion_table(labels, truth);
  const double n = static_cast<double>(labels.size());
  const Eigen::VectorXd row_sums = table.cast<double>().rowwise().sum();
  const Eigen::VectorXd col_sums = table.cast<double>().colwise().sum();
  double h_labels = 0.0, h_truth = 0.0, mi = 0.0;
  for (Index a = 0; a < row_sums.size(); ++a) {
    if (row_sums[a] > 0) h_labels -= row_sums[a] / n * std::log(row_sums[a] / n);
  }
  for (Index b = 0; b < col_sums.size(); ++b) {
    if (col_sums[b] > 0) h_truth -= col_sums[b] / n * std::log(col_sums[b] / n);
  }
  for (Index a = 0; a < table.rows(); ++a) {
    for (Index b = 0; b < table.cols(); ++b) {
      const double joint = static_cast<double>(table(a, b));
      if (joint > 0) {
        mi += joint / n * std::log(joint * n / (row_sums[a] * col_sums[b]));
      }
    }
  }
  if (h_labels == 0.0 && h_truth == 0.0) return 1.0;  // both single-cluster
  const double denom =
      variant == NmiVariant::average ? 0.5 * (h_labels + h_truth) : std::max(h_labels, h_truth);
  if (denom == 0.0) return 0.0;
  return std::clamp(mi / denom, 0.0, 1.0);
}

double regularized_gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("regularized_gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-15;
  if (x < a + 1.0) {
    // P by series, Q = 1 - P.
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIter; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  // Q by Lentz continued fraction.
  double b = x + 1.0 - a;
  double c = 1.0 / 1e-300;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

Chi2Result chi2_independence(const ConfusionTable& table) {
  const Index r = table.rows();
  const Index c = table.cols();
  if (r < 2 || c < 2) throw std::invalid_argument("chi2_independence: table must be at least 2x2");
  const Matrix counts = table.cast<double>();
  if ((counts.array() < 0).any()) throw std::invalid_argument("chi2_independence: negative count");
  const Eigen::VectorXd row_sums = counts.rowwise().sum();
  const Eigen::VectorXd col_sums = counts.colwise().sum();
  const double total = counts.sum();
  if (row_sums.minCoeff() <= 0 || col_sums.minCoeff() <= 0) {
    throw std::invalid_argument("chi2_independence: zero marginal");
  }
  Chi2Result out;
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < c; ++j) {
      const double expected = row_sums[i] * col_sums[j] / total;
      const double diff = counts(i, j) - expected;
      out.statistic += diff * diff / expected;
    }
  }
  out.dof = static_cast<int>((r - 1) * (c - 1));
  out.p_value = regularized_gamma_q(0.5 * static_cast<double>(out.dof), 0.5 * out.statistic);
  return out;
}

}  // namespace tnpm
