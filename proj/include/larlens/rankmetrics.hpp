#pragma once

#include <cstddef>
#include <vector>

#include "larlens/dense_matrix.hpp"
#include "larlens/spectra.hpp"

namespace larlens {

inline constexpr double kVarianceShare = 0.95;

struct RankMetrics {
  double stable_rank = 0.0;
  double effective_rank = 0.0;
  std::size_t k95 = 0;
  std::vector<double> p_tilde;  // s_i / sum_j s_j
};

// |W|_F^2 / |W|_2^2, i.e. 1 / p_1.
double stable_rank(const SvdFactorization& f);

// exp of the Shannon entropy (natural log) of s_i / sum_j s_j.
double effective_rank(const SvdFactorization& f);

// Smallest k whose top-k eigenvalues of the second-moment matrix of x (column
// means removed when `center` is set) reach `share` of its trace.
std::size_t k95(const DenseMatrix& x, bool center = false, double share = kVarianceShare);

// Same rule applied to an already computed nonincreasing eigenvalue list.
std::size_t components_for_share(const std::vector<double>& eigenvalues, double share);

RankMetrics rank_metrics(const SvdFactorization& f, const DenseMatrix& x, bool center = false);

}  // namespace larlens
