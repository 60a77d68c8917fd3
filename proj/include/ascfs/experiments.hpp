#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ascfs {

enum class Property { kAs, kCfs, kConnected };
enum class DensityRule {
  kCubeRootLogOverN,  // p = alpha * (ln n / n)^(1/3)
  kInvSqrt,           // p = alpha * n^(-1/2)
  kLogOverN,          // p = alpha * ln n / n
  kAbsolute,          // p = alpha
};

const char* property_token(Property p);
Property property_from_token(const std::string& token);
const char* density_rule_token(DensityRule r);
DensityRule density_rule_from_token(const std::string& token);

struct MetricFlags {
  bool support_fraction = false;
  bool blocks_examined = false;
};

struct SweepConfig {
  Property property = Property::kAs;
  DensityRule density_rule = DensityRule::kCubeRootLogOverN;
  std::vector<std::size_t> n_values;
  std::vector<double> alpha_values;
  std::size_t trials_per_cell = 400;
  std::uint64_t base_seed = 0;
  MetricFlags metrics;
};

// One grid cell. p_hat = successes / trials; [ci_lo, ci_hi] is the 95%
// Wilson interval. Metric means are present only when flagged.
struct SweepRecord {
  Property property = Property::kAs;
  std::size_t n = 0;
  double alpha = 0.0;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::optional<double> mean_support_fraction;
  std::optional<double> mean_blocks_examined;
  std::uint64_t base_seed = 0;
};

struct TrialResult {
  bool success = false;
  std::optional<double> support_fraction;
  std::optional<double> blocks_examined;
};

// Density for a grid cell, clamped into [0, 1]. Throws
// std::invalid_argument for n = 0 under the log-based rules.
double resolve_density(DensityRule rule, double alpha, std::size_t n);

// Per-trial seed: a fixed chain of splitmix64 combines over
// (base_seed, n, round(alpha * 1e6), trial), in that order.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, double alpha,
                         std::size_t trial);

// Generates G(n, p) from the seed and evaluates the property. Augmented-
// suspension successes are cross-checked against the squares decision and a
// violation of the implication throws std::logic_error.
TrialResult run_trial(Property property, std::size_t n, double p,
                      std::uint64_t seed, const MetricFlags& metrics = {});

// Runs the full grid, n-major / alpha-minor, 400 trials per cell by default.
// Trials inside a cell run on a worker pool (capped by the ASCFS_THREADS
// environment variable); per-trial results land in preallocated slots and
// are reduced in trial order, so output is identical for any worker count.
// The callback overload receives each record as its cell completes; cells
// finished before a ResourceError are delivered before the error propagates.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);
std::vector<SweepRecord> run_sweep(
    const SweepConfig& config,
    const std::function<void(const SweepRecord&)>& on_record);

// JSON object with keys mirroring SweepConfig field names; missing
// trials_per_cell, base_seed, or metrics fall back to defaults.
SweepConfig parse_sweep_config(const std::string& json_text);

// CSV schema. Header:
// property,n,alpha,p,trials,successes,p_hat,ci_lo,ci_hi,mean_support_fraction,mean_blocks_examined,base_seed
// Unflagged metric columns are left empty.
extern const char* const kCsvHeader;
void write_csv_row(std::ostream& out, const SweepRecord& r);
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);

// Worker count: min(trials, hardware, ASCFS_THREADS when set), at least 1.
std::size_t resolve_worker_count(std::size_t trials);

}  // namespace ascfs
