#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "larlens/dense_matrix.hpp"

namespace larlens {

enum class FixtureKind {
  kRankKAligned,
  kPointMass,
  kNullSpace,
  kGaussianInit,
  kSpikedSpectrum,
  kIsotropicBatch,
};

const char* to_string(FixtureKind kind);
FixtureKind parse_fixture_kind(const std::string& name);

struct FixtureSpec {
  FixtureKind kind = FixtureKind::kRankKAligned;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t batch_size = 0;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::vector<double> spike_ratios;
};

// Analytically known parts of the AlignmentReport for a fixture.
struct FixtureExpectation {
  std::optional<double> lar;  // may be -inf
  double lar_tolerance = 0.0;
  std::optional<double> overlap;
  std::optional<double> k_pred;
  std::optional<std::size_t> rank;
  std::vector<double> p;  // empty when not known analytically
  // When set, max_i |q_i - 1/n| is below this bound.
  std::optional<double> q_uniform_tolerance;
  // When set, q vanishes beyond the first `q_support` singular directions.
  std::optional<std::size_t> q_support;
};

struct Fixture {
  DenseMatrix w;
  DenseMatrix x;
  FixtureExpectation expected;
};

Fixture make_fixture(const FixtureSpec& spec);

nlohmann::json to_json(const FixtureSpec& spec);
nlohmann::json to_json(const FixtureExpectation& expected);

// Random matrix with orthonormal columns (rows x cols, rows >= cols).
DenseMatrix random_orthonormal(std::size_t rows, std::size_t cols, std::uint64_t seed);
DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            double scale = 1.0);

// Qualitative Marchenko-Pastur check for an m x n (m >= n) matrix with iid
// entries: at most 5% of the squared singular values fall outside
// [s2 (1 - sqrt(n/m))^2, s2 (1 + sqrt(n/m))^2], where s2 = |W|_F^2 / n, and
// both spectral extremes sit within 10% of the upper edge of the bulk edges.
bool mp_reference_check(const DenseMatrix& w);

}  // namespace larlens
