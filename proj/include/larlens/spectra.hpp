#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "larlens/dense_matrix.hpp"

namespace larlens {

struct SvdOptions {
  int max_sweeps = 80;
  bool compute_left = true;
};

// W = sum_{i<=r} u_i s_i v_i^T with the full right basis: columns r+1..n of
// right_vectors complete v_1..v_r to an orthonormal basis of R^n.
struct SvdFactorization {
  std::size_t rows = 0;               // m
  std::size_t cols = 0;               // n
  std::size_t rank = 0;               // r
  std::vector<double> singular_values;  // length r, nonincreasing, all > cutoff
  DenseMatrix left_vectors;           // m x r (empty when compute_left is off)
  DenseMatrix right_vectors;          // n x n, column i is v_{i+1}
  int sweeps = 0;

  // Cutoff used for the numerical rank: max(m, n) * 2^-52 * s_1.
  double rank_cutoff = 0.0;
};

// One-sided Jacobi SVD, preceded by a Householder QR when the matrix is tall.
SvdFactorization svd(const DenseMatrix& w, const SvdOptions& options = {});

// Frobenius norm divided by sqrt(rows * cols).
double rms_norm(const DenseMatrix& m);

// p_i = s_i^2 / sum_j s_j^2, length r.
std::vector<double> weight_spectrum(const SvdFactorization& f);

// q_i = sum_x (v_i^T x)^2 / sum_x |x|^2 over all n basis directions,
// including the null-space completion.
std::vector<double> activation_spectrum(const SvdFactorization& f, const DenseMatrix& x);

// q*_i = v_i^T C v_i / tr(C) for an uncentered second-moment matrix C.
std::vector<double> population_spectrum(const DenseMatrix& c, const SvdFactorization& f);

struct SpectrumPair {
  std::vector<double> p;  // length r
  std::vector<double> q;  // length n
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t batch_size = 0;

  // p_i for i < n, zero beyond r.
  double p_padded(std::size_t i) const { return i < p.size() ? p[i] : 0.0; }
};

SpectrumPair make_spectrum_pair(const SvdFactorization& f, const DenseMatrix& x);
// Validates lengths, nonnegativity and normalization.
SpectrumPair make_spectrum_pair(std::vector<double> p, std::vector<double> q,
                                std::size_t batch_size = 0);

// Population moments of p (zero-padded to n) and q treated as n equally
// weighted points. Correlations are absent when either deviation is zero.
struct SpectrumStats {
  double sigma_p = 0.0;
  double sigma_q = 0.0;
  double cov_pq = 0.0;
  std::optional<double> pearson;
  std::optional<double> spearman;
  double dist_to_uniform_p = 0.0;
  double renyi2_p = 0.0;  // bits
};

SpectrumStats spectrum_stats(const SpectrumPair& sp);

// Ranks starting at 1, tied entries sharing their average rank.
std::vector<double> average_ranks(const std::vector<double>& values);

}  // namespace larlens
