#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "larlens/dense_matrix.hpp"
#include "larlens/rankmetrics.hpp"
#include "larlens/spectra.hpp"

namespace larlens {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr const char* kReportSchema = "larlens-report-1";
inline const std::vector<std::size_t> kDefaultKs = {1, 2, 3, 5, 10};

// Practical range reported for trained networks; values outside are flagged.
inline constexpr double kTypicalLarLow = 0.3;
inline constexpr double kTypicalLarHigh = 0.8;

// log_n( |X W^T|_RMS / (|W|_RMS |X|_RMS) ), evaluated from the three norms in
// a single pass over the batch. Never touches the SVD. Returns kNegInf when
// every output row is zero.
double lar_rms(const DenseMatrix& w, const DenseMatrix& x);

// 1 + 0.5 log_n( sum_{i<=r} p_i q_i ).
double lar_overlap(const SpectrumPair& sp);

struct LarForm {
  double value = kNegInf;
  // Set when the log argument was not resolvable from rounding noise.
  bool cancellation = false;
};

// 1 + 0.5 log_n( n cov(p, q) + 1/n ) with cov from centered products.
LarForm lar_cov(const SpectrumPair& sp);
// 1 + 0.5 log_n( n sigma_p sigma_q corr(p, q) + 1/n ) with corr from
// standardized vectors.
LarForm lar_corr(const SpectrumPair& sp);

struct LarDecomposition {
  std::map<std::size_t, double> L;
  std::map<std::size_t, double> delta;
};

// L_k = 1 + 0.5 log_n(sum_{i<=k} p_i q_i), Delta_k = LAR - L_k.
LarDecomposition lar_decomposition(const SpectrumPair& sp, std::span<const std::size_t> ks);

// n^{2 (1 - lar)}.
double k_pred(double lar, std::size_t n);

struct AlignmentReport {
  double lar_rms = kNegInf;
  double lar_overlap = kNegInf;
  double lar_cov = kNegInf;
  double lar_corr = kNegInf;
  bool cov_cancellation = false;
  bool corr_cancellation = false;
  double overlap = 0.0;
  std::map<std::size_t, double> L;
  std::map<std::size_t, double> Delta;
  double k_pred = 0.0;
  SpectrumStats stats;
  RankMetrics rank;
  std::size_t k95_centered = 0;
  double p1 = 0.0;
  double q1 = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t batch_size = 0;
  std::vector<double> p;
  std::vector<double> q;
  std::vector<std::string> warnings;

  bool rank_deficient() const noexcept { return r < n; }
};

struct AnalyzeOptions {
  std::vector<std::size_t> ks = kDefaultKs;
  // When set, ks above the rank are an error instead of being dropped.
  bool strict_ks = false;
  bool include_spectra = true;
  SvdOptions svd;
};

AlignmentReport analyze(const DenseMatrix& w, const DenseMatrix& x,
                        const AnalyzeOptions& options = {});

// Reals are JSON numbers; infinities become {"value": null, "neg_inf": true}
// (or "pos_inf"), NaN and absent values become null.
nlohmann::json real_to_json(double value);
nlohmann::json real_to_json(const std::optional<double>& value);
std::optional<double> real_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AlignmentReport& report);
nlohmann::json to_json(const SpectrumStats& stats);

}  // namespace larlens
