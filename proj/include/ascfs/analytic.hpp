#pragma once

#include <cstddef>

namespace ascfs {

// Density benchmarks for G(n, p), all using the natural logarithm and all
// clamped into (0, 1]:
//   kConnectivity      ln n / n
//   kAs                (ln n / n)^(1/3)
//   kCfsUpper          5 (ln n / n)^(1/2)
//   kCfsLower          1 / (sqrt(n) ln n)
//   kCfsConjectured    sqrt((sqrt(17) - 3) / 2) * n^(-1/2)
enum class ThresholdKind {
  kConnectivity,
  kAs,
  kCfsUpper,
  kCfsLower,
  kCfsConjectured,
};

// Throws std::domain_error for n < 2.
double threshold(ThresholdKind kind, std::size_t n);

// (1 - p) * n * (n - 1) / 2, the mean number of non-adjacent pairs.
double expected_nonadjacent_pairs(std::size_t n, double p);

// 3 * C(n, 4) * p^4 * (1 - p)^2, the mean number of induced 4-cycles.
// Returns 0 for n < 4.
double expected_induced_squares(std::size_t n, double p);

// min(1, 2 exp(-delta^2 mu / 3)), the two-sided tail bound for a sum of
// independent indicators with mean mu. Requires mu > 0 and delta in
// (0, 2/3); throws std::domain_error otherwise.
double chernoff_bound(double mu, double delta);

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval for a binomial proportion, clamped into [0, 1].
// Requires trials >= 1, successes <= trials, confidence in (0, 1).
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials,
                               double confidence = 0.95);

}  // namespace ascfs
