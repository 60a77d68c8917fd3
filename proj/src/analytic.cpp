#include "ascfs/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace ascfs {

double threshold(ThresholdKind kind, std::size_t n) {
  if (n < 2) throw std::domain_error("thresholds need n >= 2");
  const double nd = static_cast<double>(n);
  const double ratio = std::log(nd) / nd;
  double value = 0.0;
  switch (kind) {
    case ThresholdKind::kConnectivity:
      value = ratio;
      break;
    case ThresholdKind::kAs:
      value = std::cbrt(ratio);
      break;
    case ThresholdKind::kCfsUpper:
      value = 5.0 * std::sqrt(ratio);
      break;
    case ThresholdKind::kCfsLower:
      value = 1.0 / (std::sqrt(nd) * std::log(nd));
      break;
    case ThresholdKind::kCfsConjectured:
      value = std::sqrt((std::sqrt(17.0) - 3.0) / 2.0) / std::sqrt(nd);
      break;
  }
  return std::min(value, 1.0);
}

double expected_nonadjacent_pairs(std::size_t n, double p) {
  if (n < 2) return 0.0;
  const double nd = static_cast<double>(n);
  return (1.0 - p) * nd * (nd - 1.0) / 2.0;
}

double expected_induced_squares(std::size_t n, double p) {
  if (n < 4) return 0.0;
  const double nd = static_cast<double>(n);
  const double choose4 = nd * (nd - 1.0) * (nd - 2.0) * (nd - 3.0) / 24.0;
  return 3.0 * choose4 * std::pow(p, 4) * (1.0 - p) * (1.0 - p);
}

double chernoff_bound(double mu, double delta) {
  if (!(mu > 0.0)) throw std::domain_error("chernoff bound needs mu > 0");
  if (!(delta > 0.0) || !(delta < 2.0 / 3.0))
    throw std::domain_error("chernoff bound needs delta in (0, 2/3)");
  return std::min(1.0, 2.0 * std::exp(-delta * delta * mu / 3.0));
}

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials,
                               double confidence) {
  if (trials == 0) throw std::invalid_argument("wilson interval needs trials >= 1");
  if (successes > trials)
    throw std::invalid_argument("successes cannot exceed trials");
  if (!(confidence > 0.0) || !(confidence < 1.0))
    throw std::invalid_argument("confidence must lie in (0, 1)");

  const double z =
      boost::math::quantile(boost::math::normal_distribution<double>(),
                            0.5 + confidence / 2.0);
  const double n = static_cast<double>(trials);
  const double p_hat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p_hat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval out;
  out.lo = std::max(0.0, center - half);
  out.hi = std::min(1.0, center + half);
  return out;
}

}  // namespace ascfs
