#include "tnpm/dom.hpp"

#include "tnpm/linalg.hpp"
#include "tnpm/model.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tnpm {
namespace {

struct BlockEval {
  double resid = 0.0;
  RankOneFactor factor;
};

// Warm start for a rows x cols block: the stored vector matching the side the
// power iteration runs on, or nothing when cluster resizing changed that
// dimension.
const Vector* pick_warm(const RankOneFactor& f, Index rows, Index cols) {
  if (cols <= rows) return f.v.size() == cols ? &f.v : nullptr;
  return f.u.size() == rows ? &f.u : nullptr;
}

// Residual + factor of one block; an iteration-limited power iteration
// degrades to its best iterate. Single-row/column blocks are exactly rank
// one, so their residual is pinned to 0.
BlockEval eval_block(const Matrix& B, const Vector* warm, double tol, int max_iter) {
  BlockEval out;
  try {
    out.factor = top_singular_triplet(B, tol, max_iter, warm);
  } catch (const IterationLimitError& e) {
    out.factor = e.best();
  }
  if (B.rows() == 1 || B.cols() == 1) return out;
  out.resid = std::max(0.0, B.squaredNorm() - out.factor.sigma * out.factor.sigma);
  return out;
}

double robust_residual(const Matrix& B, double tol, int max_iter) {
  try {
    return rank_one_residual(B, tol, max_iter);
  } catch (const IterationLimitError& e) {
    return std::max(0.0, B.squaredNorm() - e.best().sigma * e.best().sigma);
  }
}

Matrix take(const Matrix& A, const IndexList& rows, const IndexList& cols) {
  Matrix B(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (Index r = 0; r < B.rows(); ++r) {
    for (Index s = 0; s < B.cols(); ++s) B(r, s) = A(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(s)]);
  }
  return B;
}

void check_dims(const Matrix& A, const Assignment& a) {
  if (A.rows() != a.n() || A.cols() != a.m()) {
    throw std::invalid_argument("assignment dimensions do not match the matrix");
  }
}

// Members of cluster `cluster` on one side, with node `self` forced in or out;
// order is increasing node index either way.
IndexList members_with(const std::vector<int>& labels, int cluster, Index self) {
  IndexList out;
  for (Index i = 0; i < static_cast<Index>(labels.size()); ++i) {
    if (i == self || labels[static_cast<std::size_t>(i)] == cluster) out.push_back(i);
  }
  return out;
}

IndexList members_without(const std::vector<int>& labels, int cluster, Index self) {
  IndexList out;
  for (Index i = 0; i < static_cast<Index>(labels.size()); ++i) {
    if (i != self && labels[static_cast<std::size_t>(i)] == cluster) out.push_back(i);
  }
  return out;
}

double delta_one_side(const Matrix& A, const std::vector<int>& labels, int cluster, Index self,
                      const std::vector<IndexList>& other_groups, bool row_side, double tol,
                      int max_iter) {
  const IndexList with_self = members_with(labels, cluster, self);
  const IndexList without_self = members_without(labels, cluster, self);
  double delta = 0.0;
  for (const IndexList& other : other_groups) {
    const double with_resid = row_side ? robust_residual(take(A, with_self, other), tol, max_iter)
                                       : robust_residual(take(A, other, with_self), tol, max_iter);
    double without_resid = 0.0;  // an emptied block contributes nothing
    if (!without_self.empty()) {
      without_resid = row_side ? robust_residual(take(A, without_self, other), tol, max_iter)
                               : robust_residual(take(A, other, without_self), tol, max_iter);
    }
    delta += with_resid - without_resid;
  }
  return delta;
}

}  // namespace

double total_loss(const Matrix& A, const Assignment& a, double tol, int max_iter) {
  a.validate();
  check_dims(A, a);
  const BlockPartition p = partition_from(a);
  double loss = 0.0;
  for (int k = 0; k < a.k_count; ++k) {
    for (int l = 0; l < a.l_count; ++l) {
      loss += robust_residual(block_view(A, p, k, l), tol, max_iter);
    }
  }
  return loss;
}

double row_delta(const Matrix& A, const Assignment& a, Index i, int k, double tol, int max_iter) {
  a.validate();
  check_dims(A, a);
  if (i < 0 || i >= a.n()) throw std::invalid_argument("row_delta: node index out of range");
  if (k < 0 || k >= a.k_count) throw std::invalid_argument("row_delta: candidate label out of range");
  const int current = a.c[static_cast<std::size_t>(i)];
  if (k != current &&
      std::count(a.c.begin(), a.c.end(), current) == 1) {
    throw std::invalid_argument("row_delta: moving the sole member of a cluster would empty it");
  }
  const BlockPartition p = partition_from(a);
  return delta_one_side(A, a.c, k, i, p.col_groups, /*row_side=*/true, tol, max_iter);
}

double col_delta(const Matrix& A, const Assignment& a, Index j, int l, double tol, int max_iter) {
  a.validate();
  check_dims(A, a);
  if (j < 0 || j >= a.m()) throw std::invalid_argument("col_delta: node index out of range");
  if (l < 0 || l >= a.l_count) throw std::invalid_argument("col_delta: candidate label out of range");
  const int current = a.z[static_cast<std::size_t>(j)];
  if (l != current &&
      std::count(a.z.begin(), a.z.end(), current) == 1) {
    throw std::invalid_argument("col_delta: moving the sole member of a cluster would empty it");
  }
  const BlockPartition p = partition_from(a);
  return delta_one_side(A, a.z, l, j, p.row_groups, /*row_side=*/false, tol, max_iter);
}

namespace {

// Fit state: sorted member lists per cluster and a residual/factor cache per
// block, kept exactly in sync with the labels. Decisions and cache updates use
// the same computed values, so the cache sum can only decrease.
struct DomState {
  const Matrix& A;
  Assignment a;
  std::vector<IndexList> row_groups;
  std::vector<IndexList> col_groups;
  std::vector<BlockEval> cache;  // k * l_count + l
  double tol;
  int max_iter;

  BlockEval& at(int k, int l) { return cache[static_cast<std::size_t>(k * a.l_count + l)]; }

  double cache_sum() const {
    double s = 0.0;
    for (const BlockEval& b : cache) s += b.resid;
    return s;
  }
};

void erase_sorted(IndexList& v, Index x) {
  v.erase(std::lower_bound(v.begin(), v.end(), x));
}

void insert_sorted(IndexList& v, Index x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

// One greedy pass over one side's nodes. Returns the number of moves.
int sweep_side(DomState& st, bool row_side) {
  std::vector<int>& labels = row_side ? st.a.c : st.a.z;
  std::vector<IndexList>& groups = row_side ? st.row_groups : st.col_groups;
  const std::vector<IndexList>& other = row_side ? st.col_groups : st.row_groups;
  const int n_clusters = row_side ? st.a.k_count : st.a.l_count;
  const int n_other = row_side ? st.a.l_count : st.a.k_count;
  if (n_clusters < 2) return 0;

  int moves = 0;
  const Index n_nodes = static_cast<Index>(labels.size());
  std::vector<BlockEval> with_evals(static_cast<std::size_t>(n_clusters * n_other));
  std::vector<BlockEval> without_src(static_cast<std::size_t>(n_other));

  for (Index node = 0; node < n_nodes; ++node) {
    const int src = labels[static_cast<std::size_t>(node)];
    if (groups[static_cast<std::size_t>(src)].size() == 1) continue;  // sole member stays

    // Source cluster without the node: fresh residuals, reused on a move.
    IndexList src_members = groups[static_cast<std::size_t>(src)];
    erase_sorted(src_members, node);
    double delta_src = 0.0;
    for (int o = 0; o < n_other; ++o) {
      const BlockEval& cached = row_side ? st.at(src, o) : st.at(o, src);
      const Matrix B = row_side ? take(st.A, src_members, other[static_cast<std::size_t>(o)])
                                : take(st.A, other[static_cast<std::size_t>(o)], src_members);
      without_src[static_cast<std::size_t>(o)] =
          eval_block(B, pick_warm(cached.factor, B.rows(), B.cols()), st.tol, st.max_iter);
      delta_src += cached.resid - without_src[static_cast<std::size_t>(o)].resid;
    }

    // Candidate clusters with the node added.
    int best = src;
    double best_delta = delta_src;
    for (int k = 0; k < n_clusters; ++k) {
      if (k == src) continue;
      IndexList cand = groups[static_cast<std::size_t>(k)];
      insert_sorted(cand, node);
      double delta = 0.0;
      for (int o = 0; o < n_other; ++o) {
        const BlockEval& cached = row_side ? st.at(k, o) : st.at(o, k);
        const Matrix B = row_side ? take(st.A, cand, other[static_cast<std::size_t>(o)])
                                  : take(st.A, other[static_cast<std::size_t>(o)], cand);
        BlockEval& slot = with_evals[static_cast<std::size_t>(k * n_other + o)];
        slot = eval_block(B, pick_warm(cached.factor, B.rows(), B.cols()), st.tol, st.max_iter);
        delta += slot.resid - cached.resid;
      }
      if (delta < best_delta) {
        best_delta = delta;
        best = k;
      }
    }

    // Move only past a tie band sized to the summation noise of the deltas,
    // so every executed move strictly lowers the cached loss.
    const double band = 1e-9 * (1.0 + std::abs(delta_src) + std::abs(best_delta));
    if (best == src || best_delta >= delta_src - band) continue;

    labels[static_cast<std::size_t>(node)] = best;
    erase_sorted(groups[static_cast<std::size_t>(src)], node);
    insert_sorted(groups[static_cast<std::size_t>(best)], node);
    for (int o = 0; o < n_other; ++o) {
      BlockEval& src_slot = row_side ? st.at(src, o) : st.at(o, src);
      BlockEval& dst_slot = row_side ? st.at(best, o) : st.at(o, best);
      src_slot = without_src[static_cast<std::size_t>(o)];
      dst_slot = with_evals[static_cast<std::size_t>(best * n_other + o)];
    }
    ++moves;
  }
  return moves;
}

}  // namespace

FitResult fit_dom(const Matrix& A, int k_count, int l_count, const Assignment& init,
                  const FitConfig& cfg) {
  init.validate();
  check_dims(A, init);
  if (init.k_count != k_count || init.l_count != l_count) {
    throw std::invalid_argument("fit_dom: init cluster counts do not match K, L");
  }
  if (!(cfg.epsilon > 0) || cfg.max_iter < 1) {
    throw std::invalid_argument("fit_dom: epsilon must be positive and max_iter >= 1");
  }

  DomState st{A, init, {}, {}, {}, 1e-10, 1000};
  BlockPartition p = partition_from(init);
  st.row_groups = std::move(p.row_groups);
  st.col_groups = std::move(p.col_groups);
  st.cache.resize(static_cast<std::size_t>(k_count * l_count));
  for (int k = 0; k < k_count; ++k) {
    for (int l = 0; l < l_count; ++l) {
      st.at(k, l) = eval_block(take(A, st.row_groups[static_cast<std::size_t>(k)],
                                    st.col_groups[static_cast<std::size_t>(l)]),
                               nullptr, st.tol, st.max_iter);
    }
  }

  FitResult out;
  double prev = st.cache_sum();
  for (int sweep = 1; sweep <= cfg.max_iter; ++sweep) {
    int moves = sweep_side(st, /*row_side=*/true);
    moves += sweep_side(st, /*row_side=*/false);
    const double cur = st.cache_sum();
    out.loss_trajectory.push_back(cur);
    out.sweeps = sweep;
    if (moves == 0 || prev <= 0.0 || (prev - cur) / prev < cfg.epsilon) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  out.assignment = std::move(st.a);
  out.final_loss = out.loss_trajectory.back();
  return out;
}

}  // namespace tnpm
