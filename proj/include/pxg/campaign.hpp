#pragma once

// Verification campaigns: configuration, the claim catalogue grouped into
// checks, and a deterministic parallel runner.

#include <atomic>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pxg/px_graph.hpp"
#include "pxg/report.hpp"
#include "pxg/symmetry.hpp"

namespace pxg {

struct Config {
  int n_max = 7;
  int k_max = 4;
  std::size_t vertex_cap = 112;
  SearchBudget budget;
  std::string out_dir = ".";
  unsigned workers = 0;  // 0 means available parallelism
  bool timing = false;
};

/// Applies one key=value setting. Throws UsageError on unknown keys or bad
/// values.
void apply_setting(Config& config, std::string_view key, std::string_view value);
/// Reads key=value lines; blank lines and lines starting with '#' are skipped.
void load_config(Config& config, std::istream& in);
void load_config_file(Config& config, const std::string& path);
/// PX_BUDGET_MS, when set, becomes the search time limit.
void apply_environment(Config& config);

unsigned effective_workers(const Config& config) noexcept;

/// All (n,k) with 3 <= n <= n_max, 1 <= k <= min(n-1, k_max), n 2^k <= vertex_cap.
std::vector<PxParams> grid(const Config& config);

enum class Check { table, aut, phi, twins, interchange, scale, properties };

std::string_view to_string(Check c) noexcept;
Check parse_check(std::string_view name);
const std::vector<Check>& all_checks();

struct Claim {
  std::string name;
  std::function<VerificationReport(const Config&)> run;
};

/// Claims of one check. With `only`, instance-indexed claims are limited to
/// that instance.
std::vector<Claim> claims_for(Check check, const Config& config, const std::optional<PxParams>& only);

/// Runs claims on the configured workers; results keep claim order. A claim
/// that throws CapacityError reports status budget, any other exception fail.
std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, const Config& config);

std::vector<VerificationReport> run_campaign(const Config& config, const std::vector<Check>& checks,
                                             const std::optional<PxParams>& only = std::nullopt);

/// One JSON object per line, then the summary line.
void write_ndjson(std::ostream& out, const std::vector<VerificationReport>& reports);
bool all_pass(const std::vector<VerificationReport>& reports) noexcept;

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned workers, F&& f) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) slots[i].emplace(f(i));
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace pxg
