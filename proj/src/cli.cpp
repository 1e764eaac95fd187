#include "tnpm/cli.hpp"

#include "tnpm/baselines.hpp"
#include "tnpm/dom.hpp"
#include "tnpm/generator.hpp"
#include "tnpm/init.hpp"
#include "tnpm/io.hpp"
#include "tnpm/metrics.hpp"
#include "tnpm/model.hpp"
#include "tnpm/selection.hpp"
#include "tnpm/tsdc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace tnpm {
namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Seed streams fanned out from the CLI root seed: 1 feeds initialization (and
// the row-side baseline k-means), 2 the fit config (and the column-side
// baseline k-means). select_kl derives one further sub-seed per grid cell.
constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kSecondaryStream = 2;

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_json(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

// Wall time lives outside results.json so that file stays byte-identical
// across reruns with the same seed and inputs.
void write_timing(const fs::path& dir, const std::string& command, double wall_sec) {
  ordered_json j;
  j["command"] = command;
  j["wall_time_sec"] = wall_sec;
  write_json(dir / "timing.json", j);
}

std::vector<int> to_external(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = labels[i] + 1;
  return out;
}

int env_threads() {
  const char* raw = std::getenv("TNPM_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1) {
    throw std::runtime_error("TNPM_THREADS must be a positive integer");
  }
  return static_cast<int>(v);
}

Matrix load_matrix(const std::string& path, const std::string& format_flag) {
  const MatrixFormat fmt = format_flag == "auto" ? matrix_format_from_path(path)
                                                 : matrix_format_from_string(format_flag);
  return parse_matrix(path, fmt);
}

// "2:6" -> 2..6, "2,4,5" -> listed values, "3" -> {3}.
std::vector<int> parse_grid_axis(const std::string& spec) {
  std::vector<int> out;
  const std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    const int lo = std::stoi(spec.substr(0, colon));
    const int hi = std::stoi(spec.substr(colon + 1));
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad grid range '" + spec + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const int v = std::stoi(tok);
    if (v < 1) throw std::invalid_argument("grid values must be >= 1");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty grid spec '" + spec + "'");
  return out;
}

// Pairwise segment-cosine matrix of the rows of X (each row one item).
Matrix block_cos_matrix(const Matrix& X, const std::vector<IndexList>& groups) {
  Matrix S = Matrix::Zero(X.rows(), X.rows());
  for (const IndexList& g : groups) {
    if (g.empty()) continue;
    Matrix seg(X.rows(), static_cast<Index>(g.size()));
    for (Index c = 0; c < seg.cols(); ++c) seg.col(c) = X.col(g[static_cast<std::size_t>(c)]);
    for (Index r = 0; r < seg.rows(); ++r) {
      const double nrm = seg.row(r).norm();
      if (nrm > 0.0) seg.row(r) /= nrm;
    }
    S.noalias() += seg * seg.transpose();
  }
  return S;
}

ordered_json side_metrics(const std::vector<int>& labels, const std::vector<int>& truth) {
  int k = 0;
  for (int v : labels) k = std::max(k, v + 1);
  for (int v : truth) k = std::max(k, v + 1);
  ordered_json j;
  j["nmi"] = nmi(labels, truth, NmiVariant::average);
  j["nmi_max_entropy"] = nmi(labels, truth, NmiVariant::max_entropy);
  j["min_perm_error"] = min_perm_error(labels, truth, k);
  try {
    const Chi2Result chi = chi2_independence(confusion_table(labels, truth));
    j["chi2"] = ordered_json{{"statistic", chi.statistic}, {"dof", chi.dof}, {"p_value", chi.p_value}};
  } catch (const std::exception& e) {
    j["chi2"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  GeneratorConfig cfg;
  std::string family = "normal";
  std::string format = "csv";
  std::string out_dir = ".";
};

int run_generate(GenerateArgs args) {
  args.cfg.family = family_from_string(args.family);
  const MatrixFormat fmt = matrix_format_from_string(args.format);
  const auto t0 = std::chrono::steady_clock::now();
  const Network net = sample_network(args.cfg);
  const double wall = seconds_since(t0);

  fs::create_directories(args.out_dir);
  const fs::path dir(args.out_dir);
  const std::string ext = fmt == MatrixFormat::dense_csv
                              ? "csv"
                              : (fmt == MatrixFormat::edge_list_tsv ? "tsv" : "mtx");
  const std::string a_name = "A." + ext;
  write_matrix((dir / a_name).string(), net.A, fmt);
  write_labels((dir / "c_true.txt").string(), net.truth.c);
  write_labels((dir / "z_true.txt").string(), net.truth.z);

  ordered_json meta;
  meta["command"] = "generate";
  meta["n"] = net.A.rows();
  meta["m"] = net.A.cols();
  meta["k"] = args.cfg.k_count;
  meta["l"] = args.cfg.l_count;
  meta["family"] = to_string(args.cfg.family);
  meta["sigma"] = args.cfg.sigma;
  meta["eta"] = args.cfg.sparsity_eta;
  meta["seed"] = args.cfg.seed;
  meta["format"] = to_string(fmt);
  meta["outputs"] = ordered_json{{"adjacency", a_name}, {"truth_c", "c_true.txt"}, {"truth_z", "z_true.txt"}};
  write_json(dir / "meta.json", meta);
  write_timing(dir, "generate", wall);
  std::cout << "wrote " << a_name << ", c_true.txt, z_true.txt, meta.json to " << dir.string()
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// fit

struct FitArgs {
  std::string input;
  std::string format = "auto";
  std::string method = "dom";
  int k = 0;
  int l = 0;
  double epsilon = 1e-6;
  int max_iter = 50;
  std::uint64_t seed = 0;
  int kmeans_restarts = 10;
  std::string truth_c;
  std::string truth_z;
  std::string out_dir = ".";
  bool no_heatmaps = false;
};

int run_fit(const FitArgs& args) {
  const Matrix A = load_matrix(args.input, args.format);
  if (args.k < 1 || args.l < 1 || args.k > A.rows() || args.l > A.cols()) {
    throw std::runtime_error("fit: need 1 <= k <= rows and 1 <= l <= cols");
  }

  KMeansConfig km_rows;
  km_rows.restarts = args.kmeans_restarts;
  km_rows.seed = derive_seed(args.seed, kInitStream);
  KMeansConfig km_cols = km_rows;
  km_cols.seed = derive_seed(args.seed, kSecondaryStream);

  const auto t0 = std::chrono::steady_clock::now();
  FitResult fr;
  if (args.method == "dom" || args.method == "tsdc") {
    const Assignment init = svd_kmeans_init(A, args.k, args.l, km_rows);
    FitConfig fc;
    fc.epsilon = args.epsilon;
    fc.max_iter = args.max_iter;
    fc.seed = derive_seed(args.seed, kSecondaryStream);
    fr = args.method == "dom" ? fit_dom(A, args.k, args.l, init, fc)
                              : fit_tsdc(A, args.k, args.l, init, fc);
  } else if (args.method == "svdk") {
    fr.assignment = svdk(A, args.k, args.l, km_rows);
    fr.final_loss = total_loss(A, fr.assignment);
    fr.converged = true;
  } else if (args.method == "cossc" || args.method == "insc") {
    const SimilarityKind kind =
        args.method == "cossc" ? SimilarityKind::cosine : SimilarityKind::inner;
    fr.assignment.c = spectral_similarity(A, args.k, kind, km_rows);
    fr.assignment.z = spectral_similarity(A.transpose(), args.l, kind, km_cols);
    fr.assignment.k_count = args.k;
    fr.assignment.l_count = args.l;
    fr.assignment.validate(/*allow_empty=*/true);
    fr.final_loss = total_loss(A, fr.assignment);
    fr.converged = true;
  } else {
    throw std::runtime_error("unknown method '" + args.method +
                             "' (expected dom, tsdc, svdk, cossc, or insc)");
  }
  const double wall = seconds_since(t0);

  fs::create_directories(args.out_dir);
  const fs::path dir(args.out_dir);

  ordered_json results;
  results["command"] = "fit";
  results["method"] = args.method;
  results["input"] = args.input;
  results["n"] = A.rows();
  results["m"] = A.cols();
  results["k"] = args.k;
  results["l"] = args.l;
  results["seed"] = args.seed;
  results["epsilon"] = args.epsilon;
  results["max_iter"] = args.max_iter;
  results["converged"] = fr.converged;
  results["sweeps"] = fr.sweeps;
  results["final_loss"] = fr.final_loss;
  results["loss_trajectory"] = fr.loss_trajectory;
  results["labels_c"] = to_external(fr.assignment.c);
  results["labels_z"] = to_external(fr.assignment.z);
  write_labels((dir / "labels_c.txt").string(), fr.assignment.c);
  write_labels((dir / "labels_z.txt").string(), fr.assignment.z);

  ordered_json metrics = nullptr;
  if (!args.truth_c.empty()) {
    const std::vector<int> truth = read_labels(args.truth_c);
    if (truth.size() != fr.assignment.c.size()) throw std::runtime_error("truth_c length mismatch");
    if (metrics.is_null()) metrics = ordered_json::object();
    metrics["rows"] = side_metrics(fr.assignment.c, truth);
  }
  if (!args.truth_z.empty()) {
    const std::vector<int> truth = read_labels(args.truth_z);
    if (truth.size() != fr.assignment.z.size()) throw std::runtime_error("truth_z length mismatch");
    if (metrics.is_null()) metrics = ordered_json::object();
    metrics["cols"] = side_metrics(fr.assignment.z, truth);
  }
  results["metrics"] = metrics;

  ordered_json outputs = nullptr;
  if (!args.no_heatmaps) {
    const Rearranged re = rearrange(A, fr.assignment);
    write_matrix((dir / "rearranged.csv").string(), re.matrix, MatrixFormat::dense_csv);
    ordered_json meta;
    meta["row_boundaries"] = re.row_boundaries;
    meta["col_boundaries"] = re.col_boundaries;
    meta["row_perm"] = to_external(std::vector<int>(re.row_perm.begin(), re.row_perm.end()));
    meta["col_perm"] = to_external(std::vector<int>(re.col_perm.begin(), re.col_perm.end()));
    write_json(dir / "rearranged_meta.json", meta);

    const BlockPartition part = partition_from(fr.assignment);
    Matrix rows_perm(A.rows(), A.cols());
    for (Index r = 0; r < A.rows(); ++r) rows_perm.row(r) = A.row(re.row_perm[static_cast<std::size_t>(r)]);
    write_matrix((dir / "rowsim.csv").string(), block_cos_matrix(rows_perm, part.col_groups),
                 MatrixFormat::dense_csv);
    Matrix cols_perm(A.cols(), A.rows());
    for (Index r = 0; r < A.cols(); ++r) cols_perm.row(r) = A.col(re.col_perm[static_cast<std::size_t>(r)]).transpose();
    write_matrix((dir / "colsim.csv").string(), block_cos_matrix(cols_perm, part.row_groups),
                 MatrixFormat::dense_csv);
    outputs = ordered_json{{"rearranged", "rearranged.csv"},
                           {"rearranged_meta", "rearranged_meta.json"},
                           {"rowsim", "rowsim.csv"},
                           {"colsim", "colsim.csv"}};
  }
  results["outputs"] = outputs;

  write_json(dir / "results.json", results);
  write_timing(dir, "fit", wall);
  std::cout << "method " << args.method << ": final loss " << fr.final_loss << " after "
            << fr.sweeps << " sweeps; results in " << dir.string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// select

struct SelectArgs {
  std::string input;
  std::string format = "auto";
  std::string method = "tsdc";
  std::string grid;
  std::string k_grid = "2:6";
  std::string l_grid = "2:6";
  std::string penalty = "empirical";
  double alpha1 = 0.1;
  double alpha2 = 0.1;
  double c_const = 1.0;
  double sigma_tilde_sq = 0.0;  // <= 0: plug-in estimate during selection
  std::string rho_mode = "mean_abs";
  double epsilon = 1e-6;
  int max_iter = 50;
  std::uint64_t seed = 0;
  int kmeans_restarts = 10;
  std::string out_dir = ".";
};

int run_select(const SelectArgs& args) {
  const Matrix A = load_matrix(args.input, args.format);
  std::vector<int> k_grid, l_grid;
  if (!args.grid.empty()) {
    const std::size_t cross = args.grid.find('x');
    if (cross == std::string::npos) throw std::runtime_error("--grid must look like 2:6x2:6");
    k_grid = parse_grid_axis(args.grid.substr(0, cross));
    l_grid = parse_grid_axis(args.grid.substr(cross + 1));
  } else {
    k_grid = parse_grid_axis(args.k_grid);
    l_grid = parse_grid_axis(args.l_grid);
  }

  PenaltyConfig pcfg;
  if (args.penalty == "empirical") {
    pcfg.variant = PenaltyVariant::empirical;
  } else if (args.penalty == "theoretical") {
    pcfg.variant = PenaltyVariant::theoretical;
  } else {
    throw std::runtime_error("unknown penalty '" + args.penalty + "'");
  }
  pcfg.alpha1 = args.alpha1;
  pcfg.alpha2 = args.alpha2;
  pcfg.c_const = args.c_const;
  pcfg.sigma_tilde_sq_max = args.sigma_tilde_sq;
  if (args.rho_mode == "mean_abs") {
    pcfg.rho_mode = RhoMode::mean_abs;
  } else if (args.rho_mode == "top_sigma_scaled") {
    pcfg.rho_mode = RhoMode::top_sigma_scaled;
  } else {
    throw std::runtime_error("unknown rho mode '" + args.rho_mode + "'");
  }
  if (pcfg.variant == PenaltyVariant::empirical) {
    for (const std::vector<int>* axis : {&k_grid, &l_grid}) {
      for (int v : *axis) {
        if (v == 1) {
          std::cerr << "warning: the empirical penalty is 0 at K=1 or L=1; those cells compete on "
                       "loss alone\n";
        }
      }
    }
  }

  if (args.method != "dom" && args.method != "tsdc") {
    throw std::runtime_error("select supports methods dom and tsdc");
  }
  const bool use_dom = args.method == "dom";
  const double eps = args.epsilon;
  const int max_iter = args.max_iter;
  const int restarts = args.kmeans_restarts;
  const Fitter fitter = [use_dom, eps, max_iter, restarts](const Matrix& M, int K, int L,
                                                           std::uint64_t cell_seed) {
    KMeansConfig km;
    km.restarts = restarts;
    km.seed = derive_seed(cell_seed, kInitStream);
    const Assignment init = svd_kmeans_init(M, K, L, km);
    FitConfig fc;
    fc.epsilon = eps;
    fc.max_iter = max_iter;
    fc.seed = derive_seed(cell_seed, kSecondaryStream);
    return use_dom ? fit_dom(M, K, L, init, fc) : fit_tsdc(M, K, L, init, fc);
  };

  FitConfig fc;
  fc.epsilon = args.epsilon;
  fc.max_iter = args.max_iter;
  fc.seed = args.seed;
  const auto t0 = std::chrono::steady_clock::now();
  const SelectionResult sel = select_kl(A, k_grid, l_grid, fitter, pcfg, fc, env_threads());
  const double wall = seconds_since(t0);

  fs::create_directories(args.out_dir);
  const fs::path dir(args.out_dir);
  ordered_json out;
  out["command"] = "select";
  out["input"] = args.input;
  out["n"] = A.rows();
  out["m"] = A.cols();
  out["method"] = args.method;
  out["penalty"] = args.penalty;
  out["rho_mode"] = args.rho_mode;
  out["alpha1"] = args.alpha1;
  out["alpha2"] = args.alpha2;
  out["c_const"] = args.c_const;
  out["sigma_tilde_sq"] = args.sigma_tilde_sq;
  out["seed"] = args.seed;
  out["best_k"] = sel.best_k;
  out["best_l"] = sel.best_l;
  ordered_json table = ordered_json::array();
  for (const SelectionCell& cell : sel.table) {
    ordered_json row;
    row["k"] = cell.k_count;
    row["l"] = cell.l_count;
    row["seed"] = cell.seed;
    row["ok"] = cell.ok;
    if (cell.ok) {
      row["loss"] = cell.loss;
      row["penalty"] = cell.penalty;
      row["objective"] = cell.objective;
      row["converged"] = cell.converged;
    } else {
      row["error"] = cell.error;
    }
    table.push_back(row);
  }
  out["table"] = table;
  write_json(dir / "selection.json", out);
  write_timing(dir, "select", wall);
  std::cout << "selected k=" << sel.best_k << " l=" << sel.best_l << "; table in "
            << (dir / "selection.json").string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsArgs {
  std::string labels_c;
  std::string truth_c;
  std::string labels_z;
  std::string truth_z;
  std::string out_dir = ".";
};

int run_metrics(const MetricsArgs& args) {
  const bool rows = !args.labels_c.empty() || !args.truth_c.empty();
  const bool cols = !args.labels_z.empty() || !args.truth_z.empty();
  if (rows && (args.labels_c.empty() || args.truth_c.empty())) {
    throw std::runtime_error("metrics: --labels-c and --truth-c must be given together");
  }
  if (cols && (args.labels_z.empty() || args.truth_z.empty())) {
    throw std::runtime_error("metrics: --labels-z and --truth-z must be given together");
  }
  if (!rows && !cols) throw std::runtime_error("metrics: no label files given");

  ordered_json out;
  out["command"] = "metrics";
  out["rows"] = nullptr;
  out["cols"] = nullptr;
  if (rows) {
    const std::vector<int> labels = read_labels(args.labels_c);
    const std::vector<int> truth = read_labels(args.truth_c);
    if (labels.size() != truth.size()) throw std::runtime_error("metrics: row label length mismatch");
    out["rows"] = side_metrics(labels, truth);
  }
  if (cols) {
    const std::vector<int> labels = read_labels(args.labels_z);
    const std::vector<int> truth = read_labels(args.truth_z);
    if (labels.size() != truth.size()) throw std::runtime_error("metrics: column label length mismatch");
    out["cols"] = side_metrics(labels, truth);
  }

  fs::create_directories(args.out_dir);
  write_json(fs::path(args.out_dir) / "metrics.json", out);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Community detection for directed and bipartite networks under a two-way "
               "node-popularity mean structure"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file (flags override it)");

  GenerateArgs g;
  CLI::App* gen = app.add_subcommand("generate", "Sample a synthetic network with ground truth");
  gen->add_option("--n", g.cfg.n, "Number of rows")->required();
  gen->add_option("--m", g.cfg.m, "Number of columns")->required();
  gen->add_option("--k", g.cfg.k_count, "Row communities")->required();
  gen->add_option("--l", g.cfg.l_count, "Column communities")->required();
  gen->add_option("--family", g.family, "normal | bernoulli | poisson | mixture");
  gen->add_option("--sigma", g.cfg.sigma, "Noise level for normal/mixture entries");
  gen->add_option("--eta", g.cfg.sparsity_eta, "Sparsity level in [0, 1)");
  gen->add_option("--seed", g.cfg.seed, "Root seed");
  gen->add_option("--format", g.format, "Adjacency output format: csv | tsv | mtx");
  gen->add_option("--out-dir", g.out_dir, "Output directory");

  FitArgs f;
  CLI::App* fit = app.add_subcommand("fit", "Fit community labels to a network");
  fit->add_option("--input", f.input, "Adjacency matrix file")->required();
  fit->add_option("--format", f.format, "auto | csv | tsv | mtx");
  fit->add_option("--method", f.method, "dom | tsdc | svdk | cossc | insc");
  fit->add_option("--k", f.k, "Row communities")->required();
  fit->add_option("--l", f.l, "Column communities")->required();
  fit->add_option("--epsilon", f.epsilon, "Relative-change stopping threshold");
  fit->add_option("--max-iter", f.max_iter, "Maximum alternating sweeps");
  fit->add_option("--seed", f.seed, "Root seed");
  fit->add_option("--kmeans-restarts", f.kmeans_restarts, "Restarts for initialization k-means");
  fit->add_option("--truth-c", f.truth_c, "Ground-truth row labels (enables metrics)");
  fit->add_option("--truth-z", f.truth_z, "Ground-truth column labels (enables metrics)");
  fit->add_option("--out-dir", f.out_dir, "Output directory");
  fit->add_flag("--no-heatmaps", f.no_heatmaps,
                "Skip rearranged.csv and the row/column similarity CSVs");

  SelectArgs s;
  CLI::App* sel = app.add_subcommand("select", "Choose (K, L) by penalized grid search");
  sel->add_option("--input", s.input, "Adjacency matrix file")->required();
  sel->add_option("--format", s.format, "auto | csv | tsv | mtx");
  sel->add_option("--method", s.method, "Fitter per cell: dom | tsdc");
  sel->add_option("--grid", s.grid, "Joint grid, e.g. 2:6x2:6 (overrides --k-grid/--l-grid)");
  sel->add_option("--k-grid", s.k_grid, "Row-community grid, e.g. 2:6 or 2,3,5");
  sel->add_option("--l-grid", s.l_grid, "Column-community grid");
  sel->add_option("--penalty", s.penalty, "empirical | theoretical");
  sel->add_option("--alpha1", s.alpha1, "Theoretical-penalty constant");
  sel->add_option("--alpha2", s.alpha2, "Theoretical-penalty constant");
  sel->add_option("--c-const", s.c_const, "Theoretical-penalty constant");
  sel->add_option("--sigma-tilde-sq", s.sigma_tilde_sq,
                  "Noise-variance bound; <= 0 means plug-in estimate");
  sel->add_option("--rho-mode", s.rho_mode, "mean_abs | top_sigma_scaled");
  sel->add_option("--epsilon", s.epsilon, "Relative-change stopping threshold");
  sel->add_option("--max-iter", s.max_iter, "Maximum alternating sweeps");
  sel->add_option("--seed", s.seed, "Root seed");
  sel->add_option("--kmeans-restarts", s.kmeans_restarts, "Restarts for initialization k-means");
  sel->add_option("--out-dir", s.out_dir, "Output directory");

  MetricsArgs mt;
  CLI::App* met = app.add_subcommand("metrics", "Compare label files");
  met->add_option("--labels-c", mt.labels_c, "Detected row labels");
  met->add_option("--truth-c", mt.truth_c, "Reference row labels");
  met->add_option("--labels-z", mt.labels_z, "Detected column labels");
  met->add_option("--truth-z", mt.truth_z, "Reference column labels");
  met->add_option("--out-dir", mt.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    ordered_json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    if (gen->parsed()) return run_generate(g);
    if (fit->parsed()) return run_fit(f);
    if (sel->parsed()) return run_select(s);
    if (met->parsed()) return run_metrics(mt);
  } catch (const std::exception& e) {
    ordered_json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tnpm
