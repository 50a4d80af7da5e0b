#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "larlens/dense_matrix.hpp"

namespace larlens {

// NPY v1.0, 2-D, little-endian float64 only. Fortran-ordered payloads are
// transposed into row-major on load. Non-finite values are rejected.
DenseMatrix load_npy(const std::filesystem::path& path);
DenseMatrix parse_npy(std::string_view bytes);
void save_npy(const DenseMatrix& m, const std::filesystem::path& path);
std::string encode_npy(const DenseMatrix& m);

// One logged evaluation of a training run. Every field except `step` may be
// absent; absent cells are written as empty strings.
struct TraceRow {
  std::int64_t step = 0;
  std::optional<std::int64_t> epoch;
  std::optional<double> train_loss;
  std::optional<double> val_loss;
  std::optional<double> train_acc;
  std::optional<double> val_acc;
  std::optional<double> lar;
  std::optional<double> p1;
  std::optional<double> q1;
  std::optional<double> sigma_p;
  std::optional<double> sigma_q;
  std::optional<double> corr_pq;
  std::optional<double> spearman_pq;
  std::optional<double> srank;
  std::optional<double> erank;
  std::optional<double> k95;
  std::optional<double> k_pred;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

using MetricTrace = std::vector<TraceRow>;

// Column names in canonical order; a trace file may carry any subset that
// includes "step".
const std::vector<std::string>& trace_field_names();

MetricTrace read_trace(const std::filesystem::path& path);
MetricTrace parse_trace(std::string_view text);
// Writes the given columns (default: every column present in at least one row).
void write_trace(const MetricTrace& rows, const std::filesystem::path& path,
                 const std::vector<std::string>& columns = {});
std::string format_trace(const MetricTrace& rows,
                         const std::vector<std::string>& columns = {});

// Throws on duplicate or decreasing steps and out-of-range accuracies.
void validate_trace(const MetricTrace& rows);

// Plain string-celled CSV used for auxiliary tables (decline table, plot data).
// No quoting: cells must not contain commas or newlines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(std::string_view text);
void write_csv(const CsvTable& table, const std::filesystem::path& path);
std::string format_csv(const CsvTable& table);

// Shortest decimal text that parses back to the identical double; "-inf" and
// "inf" for infinities.
std::string format_real(double value);
std::optional<double> parse_real(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace larlens
