#include "tnpm/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_set>

namespace tnpm {
namespace {

[[noreturn]] void fail_at(const std::string& path, long line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#' || ch == '%';
  }
  return true;
}

double parse_real(const std::string& token, const std::string& path, long line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    fail_at(path, line, "expected a number, got '" + token + "'");
  }
  if (used != token.size()) fail_at(path, line, "trailing characters in number '" + token + "'");
  return value;
}

long parse_index(const std::string& token, const std::string& path, long line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    fail_at(path, line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) fail_at(path, line, "trailing characters in integer '" + token + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Matrix parse_dense_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_real(trim(cell), path, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail_at(path, line_no, "row has " + std::to_string(row.size()) + " cells, expected " +
                                 std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": empty matrix file");
  Matrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return M;
}

// Shared body of the two coordinate formats once dimensions are known:
// reads "i j w" triples, 1-based, last duplicate wins with a warning.
void read_triples(std::ifstream& in, const std::string& path, long& line_no, Matrix& M,
                  long expected = -1) {
  std::unordered_set<long long> seen;
  std::string line;
  long count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 3) {
      fail_at(path, line_no, "expected 'i j w', got " + std::to_string(toks.size()) + " fields");
    }
    const long i = parse_index(toks[0], path, line_no);
    const long j = parse_index(toks[1], path, line_no);
    const double w = parse_real(toks[2], path, line_no);
    if (i < 1 || i > M.rows()) fail_at(path, line_no, "row index " + std::to_string(i) + " outside [1, " + std::to_string(M.rows()) + "]");
    if (j < 1 || j > M.cols()) fail_at(path, line_no, "column index " + std::to_string(j) + " outside [1, " + std::to_string(M.cols()) + "]");
    const long long key = static_cast<long long>(i - 1) * M.cols() + (j - 1);
    if (!seen.insert(key).second) {
      std::cerr << "warning: " << path << ":" << line_no << ": duplicate entry (" << i << ", " << j
                << "), keeping the later value\n";
    }
    M(i - 1, j - 1) = w;
    ++count;
  }
  if (expected >= 0 && count != expected) {
    fail_at(path, line_no, "declared " + std::to_string(expected) + " entries, found " +
                               std::to_string(count));
  }
}

Matrix parse_edge_list(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 2) fail_at(path, line_no, "first data line must be 'n m'");
    const long n = parse_index(toks[0], path, line_no);
    const long m = parse_index(toks[1], path, line_no);
    if (n < 1 || m < 1) fail_at(path, line_no, "dimensions must be positive");
    Matrix M = Matrix::Zero(n, m);
    read_triples(in, path, line_no, M);
    return M;
  }
  throw std::runtime_error(path + ": no dimension line found");
}

Matrix parse_matrix_market(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
  ++line_no;
  {
    std::vector<std::string> toks = split_ws(line);
    for (std::string& t : toks) {
      for (char& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (toks.size() < 5 || toks[0] != "%%matrixmarket" || toks[1] != "matrix" ||
        toks[2] != "coordinate" || (toks[3] != "real" && toks[3] != "integer") ||
        toks[4] != "general") {
      fail_at(path, line_no,
              "unsupported header; need '%%MatrixMarket matrix coordinate real|integer general'");
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const std::vector<std::string> toks = split_ws(line);
    if (toks.size() != 3) fail_at(path, line_no, "size line must be 'rows cols nnz'");
    const long n = parse_index(toks[0], path, line_no);
    const long m = parse_index(toks[1], path, line_no);
    const long nnz = parse_index(toks[2], path, line_no);
    if (n < 1 || m < 1 || nnz < 0) fail_at(path, line_no, "bad size line");
    Matrix M = Matrix::Zero(n, m);
    read_triples(in, path, line_no, M, nnz);
    return M;
  }
  throw std::runtime_error(path + ": no size line found");
}

}  // namespace

MatrixFormat matrix_format_from_string(const std::string& name) {
  if (name == "dense_csv" || name == "csv") return MatrixFormat::dense_csv;
  if (name == "edge_list_tsv" || name == "tsv") return MatrixFormat::edge_list_tsv;
  if (name == "matrix_market" || name == "mtx") return MatrixFormat::matrix_market;
  throw std::invalid_argument("unknown matrix format '" + name + "'");
}

std::string to_string(MatrixFormat format) {
  switch (format) {
    case MatrixFormat::dense_csv: return "dense_csv";
    case MatrixFormat::edge_list_tsv: return "edge_list_tsv";
    case MatrixFormat::matrix_market: return "matrix_market";
  }
  throw std::logic_error("unreachable");
}

MatrixFormat matrix_format_from_path(const std::string& path) {
  const std::size_t dot = path.rfind('.');
  if (dot != std::string::npos) {
    const std::string ext = path.substr(dot + 1);
    if (ext == "csv") return MatrixFormat::dense_csv;
    if (ext == "tsv") return MatrixFormat::edge_list_tsv;
    if (ext == "mtx") return MatrixFormat::matrix_market;
  }
  throw std::invalid_argument("cannot infer matrix format from '" + path +
                              "' (use .csv, .tsv, or .mtx, or pass the format explicitly)");
}

Matrix parse_matrix(const std::string& path, MatrixFormat format) {
  switch (format) {
    case MatrixFormat::dense_csv: return parse_dense_csv(path);
    case MatrixFormat::edge_list_tsv: return parse_edge_list(path);
    case MatrixFormat::matrix_market: return parse_matrix_market(path);
  }
  throw std::logic_error("unreachable");
}

void write_matrix(const std::string& path, const Matrix& M, MatrixFormat format) {
  if (M.rows() < 1 || M.cols() < 1) throw std::invalid_argument("write_matrix: empty matrix");
  std::ofstream out = open_out(path);
  switch (format) {
    case MatrixFormat::dense_csv:
      for (Index i = 0; i < M.rows(); ++i) {
        for (Index j = 0; j < M.cols(); ++j) {
          if (j) out << ',';
          out << format_value(M(i, j));
        }
        out << '\n';
      }
      break;
    case MatrixFormat::edge_list_tsv:
      out << M.rows() << '\t' << M.cols() << '\n';
      for (Index i = 0; i < M.rows(); ++i) {
        for (Index j = 0; j < M.cols(); ++j) {
          if (M(i, j) != 0.0) out << i + 1 << '\t' << j + 1 << '\t' << format_value(M(i, j)) << '\n';
        }
      }
      break;
    case MatrixFormat::matrix_market: {
      long nnz = 0;
      for (Index i = 0; i < M.rows(); ++i) {
        for (Index j = 0; j < M.cols(); ++j) nnz += M(i, j) != 0.0;
      }
      out << "%%MatrixMarket matrix coordinate real general\n";
      out << M.rows() << ' ' << M.cols() << ' ' << nnz << '\n';
      for (Index j = 0; j < M.cols(); ++j) {
        for (Index i = 0; i < M.rows(); ++i) {
          if (M(i, j) != 0.0) out << i + 1 << ' ' << j + 1 << ' ' << format_value(M(i, j)) << '\n';
        }
      }
      break;
    }
  }
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

std::vector<int> read_labels(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<int> labels;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    const long value = parse_index(trim(line), path, line_no);
    if (value < 1) fail_at(path, line_no, "labels are 1-based; got " + std::to_string(value));
    labels.push_back(static_cast<int>(value - 1));
  }
  if (labels.empty()) throw std::runtime_error(path + ": no labels found");
  return labels;
}

void write_labels(const std::string& path, const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("write_labels: empty label vector");
  std::ofstream out = open_out(path);
  for (int lab : labels) {
    if (lab < 0) throw std::invalid_argument("write_labels: negative label");
    out << lab + 1 << '\n';
  }
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace tnpm
