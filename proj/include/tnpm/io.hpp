#pragma once

#include "tnpm/types.hpp"

#include <string>
#include <vector>

namespace tnpm {

enum class MatrixFormat { dense_csv, edge_list_tsv, matrix_market };

/// Accepts the canonical names plus the matching file extensions
/// ("csv", "tsv", "mtx").
MatrixFormat matrix_format_from_string(const std::string& name);
std::string to_string(MatrixFormat format);

/// Infers the format from the file extension; throws when it cannot.
MatrixFormat matrix_format_from_path(const std::string& path);

/// Reads a dense matrix.
///   dense_csv      rows of comma-separated reals, equal length
///   edge_list_tsv  '#'/'%' comments; first data line "n m"; then
///                  "i j w" with 1-based indices; unlisted pairs are 0
///   matrix_market  coordinate real/integer general only
/// Malformed content raises an error naming the line; a duplicated
/// coordinate entry keeps the last value and warns on stderr.
Matrix parse_matrix(const std::string& path, MatrixFormat format);

/// Writes with 17 significant digits so a parse round-trip reproduces every
/// value exactly. Coordinate formats store only nonzero entries.
void write_matrix(const std::string& path, const Matrix& M, MatrixFormat format);

/// Label files hold one 1-based integer per line; in-memory labels are
/// 0-based.
std::vector<int> read_labels(const std::string& path);
void write_labels(const std::string& path, const std::vector<int>& labels);

}  // namespace tnpm
