#include "tnpm/tsdc.hpp"

#include "tnpm/dom.hpp"
#include "tnpm/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace tnpm {
namespace {

void check_groups(const std::vector<IndexList>& groups, Index dim) {
  for (const IndexList& g : groups) {
    for (Index idx : g) {
      if (idx < 0 || idx >= dim) throw std::invalid_argument("index group out of range");
    }
  }
}

struct AssignOut {
  std::vector<int> labels;
  std::vector<double> best_sim;
};

// Items are rows of X, centers rows of C; similarity is the group-segmented
// cosine sum. Exact similarity ties keep the current label when provided,
// otherwise the lowest center index.
AssignOut assign_items(const Matrix& X, const Matrix& C, const std::vector<IndexList>& groups,
                       const std::vector<int>* current) {
  const Index n_items = X.rows();
  const int n_centers = static_cast<int>(C.rows());
  const std::size_t n_groups = groups.size();
  if (X.cols() != C.cols()) throw std::invalid_argument("assign: item/center width mismatch");
  check_groups(groups, X.cols());
  if (current != nullptr && static_cast<Index>(current->size()) != n_items) {
    throw std::invalid_argument("assign: current label vector has wrong length");
  }

  // Segment norms of the centers, reused across items.
  Matrix cnorm = Matrix::Zero(n_centers, static_cast<Index>(n_groups));
  for (int k = 0; k < n_centers; ++k) {
    for (std::size_t g = 0; g < n_groups; ++g) {
      double s = 0.0;
      for (Index idx : groups[g]) s += C(k, idx) * C(k, idx);
      cnorm(k, static_cast<Index>(g)) = std::sqrt(s);
    }
  }

  AssignOut out;
  out.labels.resize(static_cast<std::size_t>(n_items));
  out.best_sim.resize(static_cast<std::size_t>(n_items));
  std::vector<double> xnorm(n_groups);
  std::vector<double> sims(static_cast<std::size_t>(n_centers));
  for (Index i = 0; i < n_items; ++i) {
    for (std::size_t g = 0; g < n_groups; ++g) {
      double s = 0.0;
      for (Index idx : groups[g]) s += X(i, idx) * X(i, idx);
      xnorm[g] = std::sqrt(s);
    }
    for (int k = 0; k < n_centers; ++k) {
      double sim = 0.0;
      for (std::size_t g = 0; g < n_groups; ++g) {
        if (xnorm[g] == 0.0 || cnorm(k, static_cast<Index>(g)) == 0.0) continue;
        double dot = 0.0;
        for (Index idx : groups[g]) dot += X(i, idx) * C(k, idx);
        sim += dot / (xnorm[g] * cnorm(k, static_cast<Index>(g)));
      }
      sims[static_cast<std::size_t>(k)] = sim;
    }
    const double best = *std::max_element(sims.begin(), sims.end());
    int pick = -1;
    if (current != nullptr && sims[static_cast<std::size_t>((*current)[static_cast<std::size_t>(i)])] == best) {
      pick = (*current)[static_cast<std::size_t>(i)];
    } else {
      pick = static_cast<int>(std::find(sims.begin(), sims.end(), best) - sims.begin());
    }
    out.labels[static_cast<std::size_t>(i)] = pick;
    out.best_sim[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

// Give each empty cluster the worst-fitting node whose own cluster can spare
// one; ties go to the lowest node index.
void repair_empty(std::vector<int>& labels, int n_clusters, const std::vector<double>& sims) {
  std::vector<int> counts(static_cast<std::size_t>(n_clusters), 0);
  for (int lab : labels) counts[static_cast<std::size_t>(lab)]++;
  for (int k = 0; k < n_clusters; ++k) {
    if (counts[static_cast<std::size_t>(k)] > 0) continue;
    std::size_t donor = labels.size();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (counts[static_cast<std::size_t>(labels[i])] < 2) continue;
      if (donor == labels.size() || sims[i] < sims[donor]) donor = i;
    }
    if (donor == labels.size()) throw std::logic_error("repair_empty: no donor node available");
    counts[static_cast<std::size_t>(labels[donor])]--;
    labels[donor] = k;
    counts[static_cast<std::size_t>(k)] = 1;
  }
}

void check_dims(const Matrix& A, const Assignment& a) {
  if (A.rows() != a.n() || A.cols() != a.m()) {
    throw std::invalid_argument("assignment dimensions do not match the matrix");
  }
}

}  // namespace

double block_cos(const Vector& x, const Vector& y, const std::vector<IndexList>& groups) {
  if (x.size() != y.size()) throw std::invalid_argument("block_cos: length mismatch");
  check_groups(groups, x.size());
  double sim = 0.0;
  for (const IndexList& g : groups) {
    double dot = 0.0, nx = 0.0, ny = 0.0;
    for (Index idx : g) {
      dot += x[idx] * y[idx];
      nx += x[idx] * x[idx];
      ny += y[idx] * y[idx];
    }
    if (nx == 0.0 || ny == 0.0) continue;
    sim += dot / std::sqrt(nx * ny);
  }
  return sim;
}

CenterSet update_centers(const Matrix& A, const Assignment& a) {
  a.validate();
  check_dims(A, a);
  const BlockPartition p = partition_from(a);
  CenterSet cs;
  cs.mu = Matrix::Zero(a.k_count, A.cols());
  cs.mu_tilde = Matrix::Zero(A.rows(), a.l_count);
  for (int k = 0; k < a.k_count; ++k) {
    for (int l = 0; l < a.l_count; ++l) {
      const IndexList& rows = p.row_groups[static_cast<std::size_t>(k)];
      const IndexList& cols = p.col_groups[static_cast<std::size_t>(l)];
      const Index w = static_cast<Index>(cols.size());
      const Index h = static_cast<Index>(rows.size());

      Vector acc = Vector::Zero(w);
      int used = 0;
      for (Index i : rows) {
        double nrm = 0.0;
        for (Index s = 0; s < w; ++s) nrm += A(i, cols[static_cast<std::size_t>(s)]) * A(i, cols[static_cast<std::size_t>(s)]);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        for (Index s = 0; s < w; ++s) acc[s] += A(i, cols[static_cast<std::size_t>(s)]) / nrm;
        ++used;
      }
      if (used > 0) {
        acc /= static_cast<double>(used);
        const double l1 = acc.lpNorm<1>();
        if (l1 > 0.0) {
          acc *= static_cast<double>(w) / l1;
          for (Index s = 0; s < w; ++s) cs.mu(k, cols[static_cast<std::size_t>(s)]) = acc[s];
        }
      }

      Vector acc_t = Vector::Zero(h);
      used = 0;
      for (Index j : cols) {
        double nrm = 0.0;
        for (Index s = 0; s < h; ++s) nrm += A(rows[static_cast<std::size_t>(s)], j) * A(rows[static_cast<std::size_t>(s)], j);
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        for (Index s = 0; s < h; ++s) acc_t[s] += A(rows[static_cast<std::size_t>(s)], j) / nrm;
        ++used;
      }
      if (used > 0) {
        acc_t /= static_cast<double>(used);
        const double l1 = acc_t.lpNorm<1>();
        if (l1 > 0.0) {
          acc_t *= static_cast<double>(h) / l1;
          for (Index s = 0; s < h; ++s) cs.mu_tilde(rows[static_cast<std::size_t>(s)], l) = acc_t[s];
        }
      }
    }
  }
  return cs;
}

std::vector<int> assign_rows(const Matrix& A, const CenterSet& centers,
                             const std::vector<IndexList>& col_groups,
                             const std::vector<int>* current) {
  return assign_items(A, centers.mu, col_groups, current).labels;
}

std::vector<int> assign_cols(const Matrix& A, const CenterSet& centers,
                             const std::vector<IndexList>& row_groups,
                             const std::vector<int>* current) {
  const Matrix At = A.transpose();
  const Matrix Ct = centers.mu_tilde.transpose();
  return assign_items(At, Ct, row_groups, current).labels;
}

FitResult fit_tsdc(const Matrix& A, int k_count, int l_count, const Assignment& init,
                   const FitConfig& cfg) {
  init.validate();
  check_dims(A, init);
  if (init.k_count != k_count || init.l_count != l_count) {
    throw std::invalid_argument("fit_tsdc: init cluster counts do not match K, L");
  }
  if (!(cfg.epsilon > 0) || cfg.max_iter < 1) {
    throw std::invalid_argument("fit_tsdc: epsilon must be positive and max_iter >= 1");
  }

  Assignment a = init;
  const Matrix At = A.transpose();
  FitResult out;
  double prev_stat = 0.0;
  bool have_prev = false;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const BlockPartition p = partition_from(a);
    const CenterSet centers = update_centers(A, a);
    const AssignOut rows_out = assign_items(A, centers.mu, p.col_groups, &a.c);
    const Matrix Ct = centers.mu_tilde.transpose();
    const AssignOut cols_out = assign_items(At, Ct, p.row_groups, &a.z);

    double stat = 0.0;
    for (double s : rows_out.best_sim) stat += s / static_cast<double>(l_count);
    for (double s : cols_out.best_sim) stat += s / static_cast<double>(k_count);

    const bool changed = rows_out.labels != a.c || cols_out.labels != a.z;
    a.c = rows_out.labels;
    a.z = cols_out.labels;
    repair_empty(a.c, k_count, rows_out.best_sim);
    repair_empty(a.z, l_count, cols_out.best_sim);

    out.loss_trajectory.push_back(stat);
    out.sweeps = iter;
    if (!changed) {
      out.converged = true;
      break;
    }
    if (have_prev) {
      const double rel = std::abs(stat - prev_stat) / std::max(std::abs(prev_stat), 1e-12);
      if (rel < cfg.epsilon) {
        out.converged = true;
        break;
      }
    }
    prev_stat = stat;
    have_prev = true;
  }
  out.assignment = std::move(a);
  out.final_loss = total_loss(A, out.assignment);
  return out;
}

}  // namespace tnpm
