#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "permfact/characters.hpp"
#include "permfact/io.hpp"
#include "permfact/oracle.hpp"
#include "permfact/partition.hpp"
#include "permfact/spectral.hpp"
#include "permfact/transition_matrix.hpp"
#include "permfact/verify.hpp"

namespace permfact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr const char* kCacheEnv = "PERMFACT_CACHE_DIR";

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::optional<int> n;
  std::string mu_text;
  unsigned k = 0;
  unsigned terms = 8;
  std::string method = "spectral";
  std::string hook_signs = "published";
  std::string format = "text";
  std::string cache_dir;
  int max_n = kDefaultMaxN;
  unsigned jobs = 1;
  bool eigen = false;
  bool deep = false;
  std::string fault;
};

namespace detail {

using nlohmann::json;

inline Partition resolve_mu(const RunConfig& cfg) {
  if (cfg.mu_text.empty()) throw usage_error("--mu is required");
  Partition mu;
  try {
    mu = Partition::parse(cfg.mu_text);
  } catch (const std::exception& e) {
    throw usage_error(std::string("invalid partition literal '") + cfg.mu_text + "': " + e.what());
  }
  if (cfg.n && *cfg.n != mu.size())
    throw usage_error("mu " + mu.label() + " is a partition of " + std::to_string(mu.size()) + ", not " + std::to_string(*cfg.n));
  if (mu.size() < 1) throw usage_error("mu must be a partition of n >= 1");
  if (mu.size() > cfg.max_n) throw usage_error("n = " + std::to_string(mu.size()) + " exceeds --max-n " + std::to_string(cfg.max_n));
  return mu;
}

inline int resolve_n(const RunConfig& cfg, int min_n = 1) {
  if (!cfg.n) throw usage_error("--n is required");
  if (*cfg.n < min_n) throw usage_error("n >= " + std::to_string(min_n) + " required");
  if (*cfg.n > cfg.max_n) throw usage_error("n = " + std::to_string(*cfg.n) + " exceeds --max-n " + std::to_string(cfg.max_n));
  return *cfg.n;
}

inline std::string cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv(kCacheEnv)) return env;
  return {};
}

inline CharacterTable character_table(const RunConfig& cfg, int n, std::ostream& err) {
  const std::string dir = cache_dir(cfg);
  if (dir.empty()) return build_character_table(n, cfg.max_n, cfg.jobs);
  return io::CharacterTableCache(dir).load_or_build(n, cfg.max_n, cfg.jobs, err);
}

// Right-aligned grid with a label column.
inline void print_grid(std::ostream& out, const PartitionIndex& index, const DenseMatrix<Int>& m) {
  std::size_t label_w = 0;
  for (const auto& p : index) label_w = std::max(label_w, p.label().size());
  std::size_t cell_w = label_w;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cell_w = std::max(cell_w, to_decimal(m(r, c)).size());
  out << std::string(label_w, ' ');
  for (const auto& p : index) out << ' ' << std::setw(static_cast<int>(cell_w)) << p.label();
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << std::left << std::setw(static_cast<int>(label_w)) << index[r].label() << std::right;
    for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << std::setw(static_cast<int>(cell_w)) << to_decimal(m(r, c));
    out << '\n';
  }
}

struct MethodResult {
  std::string method;
  std::optional<std::string> value;
  std::string note;
  bool in_verdict = true;
};

inline HookSigns parse_signs(const std::string& s) { return s == "rederived" ? HookSigns::rederived : HookSigns::printed; }

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Partition mu = resolve_mu(cfg);
  const int n = mu.size();
  const bool all = cfg.method == "all";
  const bool single_cycle = mu.length() == 1;
  const bool two_part = mu.length() == 2;
  if (!all) {
    if (cfg.method == "brute" && n > kDefaultBruteMaxN)
      throw usage_error("method brute requires n <= " + std::to_string(kDefaultBruteMaxN));
    if (cfg.method == "goulden" && !single_cycle) throw usage_error("method goulden requires mu = (n)");
    if (cfg.method == "two-cycle" && !two_part) throw usage_error("method two-cycle requires a two-part mu");
  }

  std::vector<MethodResult> results;
  auto want = [&](const std::string& m) { return all || cfg.method == m; };
  if (want("spectral")) {
    const SpectralCounter counter(character_table(cfg, n, err));
    results.push_back({"spectral", to_decimal(counter.count(mu, cfg.k)), "", true});
  }
  if (want("matrix")) results.push_back({"matrix", to_decimal(count_matrix_method(mu, cfg.k, cfg.max_n)), "", true});
  if (want("brute")) {
    if (n <= kDefaultBruteMaxN)
      results.push_back({"brute", to_decimal(count_brute(mu, static_cast<int>(cfg.k))), "", true});
    else
      results.push_back({"brute", std::nullopt, "skipped: n > " + std::to_string(kDefaultBruteMaxN), false});
  }
  if (want("goulden")) {
    if (single_cycle)
      results.push_back({"goulden", to_decimal(count_goulden(n, cfg.k)), "", true});
    else
      results.push_back({"goulden", std::nullopt, "not applicable: mu is not a single cycle", false});
  }
  if (want("two-cycle")) {
    const auto two_cycle = [&](HookSigns signs) -> std::optional<std::string> {
      if (!two_part) return std::nullopt;
      return to_decimal(count_two_cycle(mu[0], mu[1], cfg.k, signs));
    };
    if (all) {
      const std::string na = "not applicable: mu does not have two parts";
      results.push_back({"two-cycle/published", two_cycle(HookSigns::printed),
                         two_part ? "published hook signs; reported, excluded from verdict" : na, false});
      results.push_back({"two-cycle/rederived", two_cycle(HookSigns::rederived), two_part ? "" : na, two_part});
    } else {
      results.push_back({"two-cycle", two_cycle(parse_signs(cfg.hook_signs)), cfg.hook_signs + " hook signs", true});
    }
  }

  bool match = true;
  std::optional<std::string> reference;
  for (const auto& r : results) {
    if (!r.in_verdict || !r.value) continue;
    if (!reference) reference = r.value;
    else if (*reference != *r.value) match = false;
  }

  if (cfg.format == "json") {
    if (!all) {
      out << io::count_to_json(mu, cfg.k, *results.front().value, results.front().method).dump(2) << '\n';
    } else {
      json rows = json::array();
      for (const auto& r : results) {
        json row{{"method", r.method}, {"count", r.value ? json(*r.value) : json(nullptr)}, {"in_verdict", r.in_verdict}};
        if (!r.note.empty()) row["note"] = r.note;
        rows.push_back(std::move(row));
      }
      out << json{{"n", n}, {"mu", io::to_json(mu)}, {"k", cfg.k}, {"results", rows}, {"verdict", match ? "MATCH" : "MISMATCH"}}.dump(2)
          << '\n';
    }
  } else if (cfg.format == "csv") {
    out << "method,count\n";
    for (const auto& r : results) out << r.method << ',' << (r.value ? *r.value : "") << '\n';
    if (all) out << "verdict," << (match ? "MATCH" : "MISMATCH") << '\n';
  } else if (!all) {
    out << *results.front().value << '\n';
  } else {
    out << "c_" << cfg.k << '(' << mu.label() << ")\n";
    for (const auto& r : results) {
      out << "  " << std::left << std::setw(20) << r.method << std::right << (r.value ? *r.value : "-");
      if (!r.note.empty()) out << "  (" << r.note << ')';
      out << '\n';
    }
    out << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

inline std::vector<std::size_t> eigen_order(const PartitionIndex& index) {
  std::vector<std::size_t> order(index.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rho(index[a]) < rho(index[b]); });
  return order;
}

inline int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  const int n = resolve_n(cfg, 2);
  const TransitionMatrix a = build_transition_matrix(n, cfg.max_n);
  const auto order = eigen_order(a.index());
  if (cfg.format == "json") {
    json j = io::matrix_to_json(a);
    if (cfg.eigen) {
      json pairs = json::array();
      for (std::size_t r : order) pairs.push_back({{"lambda", io::to_json(a.index()[r])}, {"rho", to_decimal(rho(a.index()[r]))}});
      j["eigen"] = pairs;
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << io::matrix_to_csv(a);
    if (cfg.eigen) {
      out << "\nlambda,rho\n";
      for (std::size_t r : order) out << a.index()[r].label() << ',' << rho(a.index()[r]) << '\n';
    }
  } else {
    print_grid(out, a.index(), a.entries());
    if (cfg.eigen) {
      out << "\neigenvalues (lambda, rho) sorted by rho:\n";
      for (std::size_t r : order) out << "  " << a.index()[r].label() << ' ' << rho(a.index()[r]) << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_chartable(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n = resolve_n(cfg);
  const CharacterTable t = character_table(cfg, n, err);
  if (cfg.format == "json")
    out << io::chartable_to_json(t).dump(2) << '\n';
  else if (cfg.format == "csv")
    out << io::chartable_to_csv(t);
  else
    print_grid(out, t.index(), t.values());
  return kExitOk;
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Partition mu = resolve_mu(cfg);
  if (cfg.terms < 1) throw usage_error("--terms must be >= 1");
  const SeriesPrefix s = series_prefix(SpectralCounter(character_table(cfg, mu.size(), err)), mu, cfg.terms);
  if (cfg.format == "json") {
    out << io::series_to_json(s).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "j,coefficient\n";
    for (std::size_t j = 0; j < s.coefficients.size(); ++j) out << j << ',' << to_decimal(s.coefficients[j]) << '\n';
  } else {
    for (std::size_t j = 0; j < s.coefficients.size(); ++j) out << (j ? ", " : "") << to_decimal(s.coefficients[j]);
    out << "\ncoefficients vanish unless j = " << s.parity << " (mod 2)\n";
  }
  return kExitOk;
}

inline std::optional<FaultInjection> parse_fault(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<long long> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      fields.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw usage_error("--inject-fault expects N,ROW,COL[,DELTA]");
    }
  }
  if (fields.size() < 3 || fields.size() > 4) throw usage_error("--inject-fault expects N,ROW,COL[,DELTA]");
  FaultInjection f{static_cast<int>(fields[0]), static_cast<std::size_t>(fields[1]), static_cast<std::size_t>(fields[2]),
                   fields.size() == 4 ? fields[3] : 1};
  if (f.n < 2 || f.n > kDefaultMaxN) throw usage_error("fault n out of range");
  const std::size_t dim = PartitionIndex(f.n).size();
  if (fields[1] < 0 || fields[2] < 0 || f.row >= dim || f.col >= dim) throw usage_error("fault entry outside A_n");
  if (f.delta == 0) throw usage_error("fault delta must be nonzero");
  return f;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.deep = cfg.deep;
  opt.max_n = cfg.max_n;
  opt.jobs = cfg.jobs;
  opt.fault = parse_fault(cfg.fault);
  const auto results = run_verification(opt);
  std::size_t failures = 0;
  for (const auto& r : results) failures += r.status == CheckStatus::fail;

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : results)
      rows.push_back({{"name", r.name}, {"scale", r.scale}, {"status", to_string(r.status)}, {"details", r.details}});
    out << json{{"deep", cfg.deep}, {"checks", rows}, {"failures", failures}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "status,name,scale\n";
    for (const auto& r : results) out << to_string(r.status) << ",\"" << r.name << "\",\"" << r.scale << "\"\n";
  } else {
    constexpr std::size_t kShown = 8;
    for (const auto& r : results) {
      out << std::left << std::setw(8) << to_string(r.status) << std::right << r.name;
      if (!r.scale.empty()) out << "  [" << r.scale << ']';
      out << '\n';
      for (std::size_t i = 0; i < r.details.size() && i < kShown; ++i) out << "         " << r.details[i] << '\n';
      if (r.details.size() > kShown) out << "         ... " << r.details.size() - kShown << " more\n";
    }
    out << (failures ? std::to_string(failures) + " check(s) failed" : std::string("all checks passed")) << '\n';
  }
  return failures ? kExitMismatch : kExitOk;
}

inline int cmd_partitions(const RunConfig& cfg, std::ostream& out) {
  const int n = resolve_n(cfg);
  const PartitionIndex index(n, cfg.max_n);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& p : index)
      rows.push_back({{"parts", io::to_json(p)},
                      {"length", p.length()},
                      {"z", to_decimal(z_value(p))},
                      {"class_size", to_decimal(class_size(p))},
                      {"rho", to_decimal(rho(p))},
                      {"conjugate", io::to_json(conjugate(p))}});
    out << json{{"n", n}, {"count", index.size()}, {"partitions", rows}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "partition,length,z,class_size,rho,conjugate\n";
    for (const auto& p : index)
      out << p.label() << ',' << p.length() << ',' << z_value(p) << ',' << class_size(p) << ',' << rho(p) << ','
          << conjugate(p).label() << '\n';
  } else {
    std::size_t w = 9;
    for (const auto& p : index) w = std::max(w, p.label().size());
    out << std::left << std::setw(static_cast<int>(w)) << "partition" << std::right << "  length  rho  conjugate\n";
    for (const auto& p : index)
      out << std::left << std::setw(static_cast<int>(w)) << p.label() << std::right << "  " << std::setw(6) << p.length()
          << "  " << std::setw(3) << rho(p) << "  " << conjugate(p).label() << '\n';
    out << index.size() << " partitions\n";
  }
  return kExitOk;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact factorization counts in the symmetric group", "permfact"};
  app.require_subcommand(1);
  app.fallthrough();
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--max-n", cfg.max_n, "Ceiling on n")->check(CLI::Range(1, 40));
    sub->add_option("--jobs", cfg.jobs, "Worker threads for character tables")->check(CLI::Range(1u, 256u));
    sub->add_option("--cache-dir", cfg.cache_dir, std::string("Character table cache; overrides $") + kCacheEnv);
  };
  const auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", cfg.n, "Degree n");
    if (required) opt->required();
  };

  auto* count = app.add_subcommand("count", "Number of k-fold transposition factorizations of a permutation of type mu");
  add_n(count, false);
  count->add_option("--mu", cfg.mu_text, "Cycle type, e.g. 3,1")->required();
  count->add_option("--k", cfg.k, "Number of factors")->required();
  count->add_option("--method", cfg.method, "Counting method")
      ->check(CLI::IsMember({"spectral", "matrix", "brute", "goulden", "two-cycle", "all"}));
  count->add_option("--hook-signs", cfg.hook_signs, "Sign convention for the two-cycle closed form")
      ->check(CLI::IsMember({"published", "rederived"}));
  add_common(count);

  auto* matrix = app.add_subcommand("matrix", "Transition matrix A_n");
  add_n(matrix, true);
  matrix->add_flag("--eigen", cfg.eigen, "Append (lambda, rho) pairs sorted by rho");
  add_common(matrix);

  auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
  add_n(chartable, true);
  add_common(chartable);

  auto* series = app.add_subcommand("series", "Prefix c_j(mu)/j! of the exponential generating function");
  add_n(series, false);
  series->add_option("--mu", cfg.mu_text, "Cycle type")->required();
  series->add_option("--terms", cfg.terms, "Number of coefficients");
  add_common(series);

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  verify->add_flag("--deep", cfg.deep, "Raise the check ceilings");
  verify->add_option("--inject-fault", cfg.fault, "Perturb A_n entry: N,ROW,COL[,DELTA] (canonical ranks)");
  add_common(verify);

  auto* partitions = app.add_subcommand("partitions", "Partitions of n in canonical order");
  add_n(partitions, true);
  add_common(partitions);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*count) return detail::cmd_count(cfg, out, err);
    if (*matrix) return detail::cmd_matrix(cfg, out);
    if (*chartable) return detail::cmd_chartable(cfg, out, err);
    if (*series) return detail::cmd_series(cfg, out, err);
    if (*verify) return detail::cmd_verify(cfg, out);
    if (*partitions) return detail::cmd_partitions(cfg, out);
  } catch (const consistency_error& e) {
    err << "mismatch: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace permfact::cli
