#include "pxg/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "pxg/errors.hpp"

namespace pxg {
namespace {

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

template <class T>
T parse_positive(std::string_view key, std::string_view text) {
  T value = parse_number<T>(key, text);
  if (value <= 0) throw UsageError(std::string(key) + " must be positive");
  return value;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::table, "table"},         {Check::aut, "aut"},     {Check::phi, "phi"},
    {Check::twins, "twins"},         {Check::interchange, "interchange"},
    {Check::scale, "scale"},         {Check::properties, "properties"},
};

}  // namespace

void apply_setting(Config& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "n_max") {
    config.n_max = parse_positive<int>(key, value);
  } else if (key == "k_max") {
    config.k_max = parse_positive<int>(key, value);
  } else if (key == "vertex_cap") {
    config.vertex_cap = parse_positive<std::size_t>(key, value);
  } else if (key == "generic_vertex_cap") {
    config.budget.generic_vertex_cap = parse_positive<std::size_t>(key, value);
  } else if (key == "max_subset_size") {
    config.budget.max_subset_size = parse_positive<int>(key, value);
  } else if (key == "max_checks") {
    config.budget.max_checks = parse_positive<std::uint64_t>(key, value);
  } else if (key == "node_limit") {
    config.budget.node_limit = parse_positive<std::uint64_t>(key, value);
  } else if (key == "max_colors") {
    config.budget.max_colors = parse_positive<int>(key, value);
  } else if (key == "time_limit_ms") {
    config.budget.time_limit = std::chrono::milliseconds(parse_positive<long long>(key, value));
  } else if (key == "workers") {
    config.workers = parse_positive<unsigned>(key, value);
  } else if (key == "out_dir") {
    if (value.empty()) throw UsageError("out_dir must not be empty");
    config.out_dir = std::string(value);
  } else if (key == "timing") {
    if (value != "true" && value != "false") throw UsageError("timing must be true or false");
    config.timing = value == "true";
  } else {
    throw UsageError("unknown config key '" + std::string(key) + "'");
  }
}

void load_config(Config& config, std::istream& in) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(number) + " is not key=value");
    }
    apply_setting(config, text.substr(0, eq), text.substr(eq + 1));
  }
}

void load_config_file(Config& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  load_config(config, in);
}

void apply_environment(Config& config) {
  if (const char* ms = std::getenv("PX_BUDGET_MS"); ms != nullptr && *ms != '\0') {
    config.budget.time_limit = std::chrono::milliseconds(parse_positive<long long>("PX_BUDGET_MS", ms));
  }
}

unsigned effective_workers(const Config& config) noexcept {
  if (config.workers > 0) return config.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PxParams> grid(const Config& config) {
  std::vector<PxParams> out;
  for (int n = 3; n <= config.n_max; ++n) {
    for (int k = 1; k <= std::min(n - 1, config.k_max); ++k) {
      if (k < 31 && (static_cast<std::size_t>(n) << k) <= config.vertex_cap) out.push_back(PxParams{n, k});
    }
  }
  return out;
}

std::string_view to_string(Check c) noexcept {
  for (auto [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "?";
}

Check parse_check(std::string_view name) {
  for (auto [check, text] : kCheckNames) {
    if (text == name) return check;
  }
  throw UsageError("unknown check '" + std::string(name) + "'");
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    for (auto [check, name] : kCheckNames) out.push_back(check);
    return out;
  }();
  return checks;
}

std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, const Config& config) {
  return parallel_map<VerificationReport>(claims.size(), effective_workers(config), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    try {
      report = claims[i].run(config);
    } catch (const CapacityError& e) {
      report = VerificationReport{claims[i].name, "bruteforce", e.what(), {}, 0, Status::budget};
    } catch (const std::exception& e) {
      report = VerificationReport{claims[i].name, "bruteforce", e.what(), {}, 0, Status::fail};
    }
    if (config.timing) {
      report.elapsed_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
  });
}

std::vector<VerificationReport> run_campaign(const Config& config, const std::vector<Check>& checks,
                                             const std::optional<PxParams>& only) {
  std::vector<Claim> claims;
  for (Check c : checks) {
    auto more = claims_for(c, config, only);
    claims.insert(claims.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return run_claims(claims, config);
}

void write_ndjson(std::ostream& out, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) out << r.to_json().dump() << '\n';
  out << summary_json(reports).dump() << '\n';
}

bool all_pass(const std::vector<VerificationReport>& reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::pass; });
}

}  // namespace pxg
