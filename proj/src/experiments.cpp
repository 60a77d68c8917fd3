#include "ascfs/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ascfs/analytic.hpp"
#include "ascfs/classify.hpp"
#include "ascfs/errors.hpp"
#include "ascfs/graph.hpp"
#include "ascfs/prng.hpp"
#include "ascfs/squares.hpp"

namespace ascfs {

const char* property_token(Property p) {
  switch (p) {
    case Property::kAs:
      return "as";
    case Property::kCfs:
      return "cfs";
    case Property::kConnected:
      return "connected";
  }
  return "as";
}

Property property_from_token(const std::string& token) {
  if (token == "as" || token == "AS") return Property::kAs;
  if (token == "cfs" || token == "CFS") return Property::kCfs;
  if (token == "connected" || token == "CONNECTED") return Property::kConnected;
  throw std::invalid_argument("unknown property \"" + token + "\"");
}

const char* density_rule_token(DensityRule r) {
  switch (r) {
    case DensityRule::kCubeRootLogOverN:
      return "as";
    case DensityRule::kInvSqrt:
      return "inv-sqrt";
    case DensityRule::kLogOverN:
      return "log-over-n";
    case DensityRule::kAbsolute:
      return "absolute";
  }
  return "as";
}

DensityRule density_rule_from_token(const std::string& token) {
  if (token == "as") return DensityRule::kCubeRootLogOverN;
  if (token == "inv-sqrt") return DensityRule::kInvSqrt;
  if (token == "log-over-n") return DensityRule::kLogOverN;
  if (token == "absolute") return DensityRule::kAbsolute;
  throw std::invalid_argument("unknown density rule \"" + token + "\"");
}

double resolve_density(DensityRule rule, double alpha, std::size_t n) {
  if (n == 0 && rule != DensityRule::kAbsolute)
    throw std::invalid_argument("density rules need n >= 1");
  const double nd = static_cast<double>(n);
  double p = alpha;
  switch (rule) {
    case DensityRule::kCubeRootLogOverN:
      p = alpha * std::cbrt(std::log(nd) / nd);
      break;
    case DensityRule::kInvSqrt:
      p = alpha / std::sqrt(nd);
      break;
    case DensityRule::kLogOverN:
      p = alpha * std::log(nd) / nd;
      break;
    case DensityRule::kAbsolute:
      break;
  }
  if (!std::isfinite(p)) throw std::invalid_argument("resolved density is not finite");
  return std::min(1.0, std::max(0.0, p));
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, double alpha,
                         std::size_t trial) {
  const std::int64_t alpha_key = std::llround(alpha * 1e6);
  std::uint64_t h = rng::combine(0x243f6a8885a308d3ULL, base_seed);
  h = rng::combine(h, static_cast<std::uint64_t>(n));
  h = rng::combine(h, static_cast<std::uint64_t>(alpha_key));
  h = rng::combine(h, static_cast<std::uint64_t>(trial));
  return h;
}

TrialResult run_trial(Property property, std::size_t n, double p,
                      std::uint64_t seed, const MetricFlags& metrics) {
  Graph g = generate_gnp({n, p, seed});
  TrialResult out;

  std::optional<SquareComplex> complex;
  auto the_complex = [&]() -> const SquareComplex& {
    if (!complex) complex = square_components(g);
    return *complex;
  };

  switch (property) {
    case Property::kAs: {
      AsResult as = is_as(g);
      out.success = as.verdict;
      if (metrics.blocks_examined)
        out.blocks_examined = static_cast<double>(as.blocks_examined);
      if (as.verdict) {
        const bool cfs = metrics.support_fraction
                             ? cfs_from_complex(g, the_complex()).verdict
                             : is_cfs_square_path(g).verdict;
        if (!cfs)
          throw std::logic_error(
              "augmented suspension trial without constructed-from-squares");
      }
      break;
    }
    case Property::kCfs: {
      if (metrics.support_fraction)
        out.success = cfs_from_complex(g, the_complex()).verdict;
      else
        out.success = is_cfs(g).verdict;
      break;
    }
    case Property::kConnected:
      out.success = is_connected(g);
      break;
  }
  if (metrics.support_fraction)
    out.support_fraction = largest_support_fraction(the_complex());
  return out;
}

std::size_t resolve_worker_count(std::size_t trials) {
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("ASCFS_THREADS")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && parsed >= 1)
      workers = std::min<std::size_t>(workers, parsed);
  }
  return std::max<std::size_t>(1, std::min(workers, trials));
}

namespace {

SweepRecord reduce_cell(const SweepConfig& config, std::size_t n, double alpha,
                        double p, const std::vector<TrialResult>& trials) {
  SweepRecord rec;
  rec.property = config.property;
  rec.n = n;
  rec.alpha = alpha;
  rec.p = p;
  rec.trials = trials.size();
  rec.base_seed = config.base_seed;
  double sf_sum = 0.0, be_sum = 0.0;
  for (const TrialResult& t : trials) {
    rec.successes += t.success;
    if (t.support_fraction) sf_sum += *t.support_fraction;
    if (t.blocks_examined) be_sum += *t.blocks_examined;
  }
  rec.p_hat = static_cast<double>(rec.successes) / static_cast<double>(rec.trials);
  const WilsonInterval ci = wilson_interval(rec.successes, rec.trials);
  rec.ci_lo = ci.lo;
  rec.ci_hi = ci.hi;
  if (config.metrics.support_fraction)
    rec.mean_support_fraction = sf_sum / static_cast<double>(rec.trials);
  if (config.metrics.blocks_examined)
    rec.mean_blocks_examined = be_sum / static_cast<double>(rec.trials);
  return rec;
}

void validate(const SweepConfig& config) {
  if (config.n_values.empty()) throw std::invalid_argument("sweep needs n values");
  if (config.alpha_values.empty())
    throw std::invalid_argument("sweep needs alpha values");
  if (config.trials_per_cell == 0)
    throw std::invalid_argument("sweep needs at least one trial per cell");
}

}  // namespace

std::vector<SweepRecord> run_sweep(
    const SweepConfig& config,
    const std::function<void(const SweepRecord&)>& on_record) {
  validate(config);
  std::vector<SweepRecord> records;
  records.reserve(config.n_values.size() * config.alpha_values.size());

  for (std::size_t n : config.n_values) {
    for (double alpha : config.alpha_values) {
      const double p = resolve_density(config.density_rule, alpha, n);
      const std::size_t trials = config.trials_per_cell;
      std::vector<TrialResult> results(trials);

      const std::size_t workers = resolve_worker_count(trials);
      std::atomic<std::size_t> next{0};
      std::mutex error_mutex;
      std::exception_ptr error;

      auto work = [&]() {
        while (true) {
          const std::size_t t = next.fetch_add(1);
          if (t >= trials) return;
          {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (error) return;
          }
          try {
            results[t] = run_trial(config.property, n, p,
                                   trial_seed(config.base_seed, n, alpha, t),
                                   config.metrics);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      };

      if (workers == 1) {
        work();
      } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
      }
      if (error) std::rethrow_exception(error);

      records.push_back(reduce_cell(config, n, alpha, p, results));
      if (on_record) on_record(records.back());
    }
  }
  return records;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  return run_sweep(config, nullptr);
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  SweepConfig config;
  try {
    config.property = property_from_token(j.at("property").get<std::string>());
    config.density_rule =
        density_rule_from_token(j.at("density_rule").get<std::string>());
    for (const auto& v : j.at("n_values")) {
      const auto n = v.get<std::int64_t>();
      if (n < 1) throw std::invalid_argument("n_values must be positive");
      config.n_values.push_back(static_cast<std::size_t>(n));
    }
    for (const auto& v : j.at("alpha_values")) {
      const double a = v.get<double>();
      if (!std::isfinite(a) || a < 0.0)
        throw std::invalid_argument("alpha_values must be finite and nonnegative");
      config.alpha_values.push_back(a);
    }
    if (j.contains("trials_per_cell")) {
      const auto t = j.at("trials_per_cell").get<std::int64_t>();
      if (t < 1) throw std::invalid_argument("trials_per_cell must be positive");
      config.trials_per_cell = static_cast<std::size_t>(t);
    }
    if (j.contains("base_seed"))
      config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("metrics")) {
      const auto& m = j.at("metrics");
      if (m.contains("support_fraction"))
        config.metrics.support_fraction = m.at("support_fraction").get<bool>();
      if (m.contains("blocks_examined"))
        config.metrics.blocks_examined = m.at("blocks_examined").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config field: ") + e.what());
  }
  return config;
}

const char* const kCsvHeader =
    "property,n,alpha,p,trials,successes,p_hat,ci_lo,ci_hi,"
    "mean_support_fraction,mean_blocks_examined,base_seed";

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_csv_row(std::ostream& out, const SweepRecord& r) {
  out << property_token(r.property) << ',' << r.n << ',' << format_double(r.alpha)
      << ',' << format_double(r.p) << ',' << r.trials << ',' << r.successes << ','
      << format_double(r.p_hat) << ',' << format_double(r.ci_lo) << ','
      << format_double(r.ci_hi) << ',';
  if (r.mean_support_fraction) out << format_double(*r.mean_support_fraction);
  out << ',';
  if (r.mean_blocks_examined) out << format_double(*r.mean_blocks_examined);
  out << ',' << r.base_seed << '\n';
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) write_csv_row(out, r);
}

}  // namespace ascfs
