#include "zeck/cli.hpp"

#include "zeck/combinatorics.hpp"
#include "zeck/dist_stats.hpp"
#include "zeck/gauss.hpp"
#include "zeck/path_lab.hpp"
#include "zeck/seqgen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace zeck::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

// One command's output: echo of the command and its parameters, an optional
// summary object (JSON only) and a table of rows.
struct OutputRecord {
  std::string command;
  Json parameters = Json::object();
  Json summary = Json::object();
  Json rows = Json::array();
};

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void emit(const OutputRecord& rec, Format format, std::ostream& out) {
  if (format == Format::json) {
    Json doc;
    doc["command"] = rec.command;
    doc["parameters"] = rec.parameters;
    if (!rec.summary.empty()) doc["summary"] = rec.summary;
    doc["rows"] = rec.rows;
    out << doc.dump(2) << '\n';
    return;
  }
  if (rec.rows.empty()) return;
  bool first = true;
  for (const auto& [key, _] : rec.rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rec.rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << '\n';
  }
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("ZECK_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    const auto cap = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("ZECK_ENUM_CAP is not a non-negative integer: '") + env + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json gap_rows(const GapHistogram& h) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < h.per_dim.size(); ++j)
    for (const auto& [gap, count] : h.per_dim[j]) rows.push_back(Json{{"dim", j + 1}, {"gap", gap}, {"count", count}});
  return rows;
}

std::string path_text(const JumpPath& p) {
  std::string s;
  for (const auto& pt : p.points()) {
    if (!s.empty()) s += '>';
    for (std::size_t j = 0; j < pt.dim(); ++j) s += (j ? ":" : "") + std::to_string(pt[j]);
  }
  return s;
}

// ---- verification suites ----------------------------------------------------

struct CheckLog {
  Json rows = Json::array();
  bool all_passed = true;

  void record(const std::string& suite, const std::string& check, bool passed, const std::string& detail = "") {
    rows.push_back(Json{{"suite", suite}, {"check", check}, {"status", passed ? "PASS" : "FAIL"}, {"detail", detail}});
    all_passed = all_passed && passed;
  }
};

template <typename Seq>
bool strictly_decreasing(const Seq& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] < xs[i - 1])) return false;
  return true;
}

std::string join(const std::vector<double>& xs) {
  std::ostringstream ss;
  ss.precision(6);
  for (std::size_t i = 0; i < xs.size(); ++i) ss << (i ? " " : "") << xs[i];
  return ss.str();
}

void suite_moments(CheckLog& log) {
  std::string first_bad;
  for (unsigned d = 1; d <= 5 && first_bad.empty(); ++d)
    for (std::uint64_t n = 1; n <= 200; ++n)
      if (exact_mean(step_pmf(d, n + 1)) != predicted_mean(n)) {
        first_bad = "d=" + std::to_string(d) + " n=" + std::to_string(n);
        break;
      }
  log.record("moments", "mean == n/2 + 1 for d<=5, n<=200", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint64_t n = 1; n <= 200; ++n)
    if (exact_variance(step_pmf(2, n + 1)) != *predicted_variance(2, n)) {
      first_bad = "n=" + std::to_string(n);
      break;
    }
  log.record("moments", "2D variance == n^2/(8n-4) for n<=200", first_bad.empty(), first_bad);

  first_bad.clear();
  for (std::uint64_t n = 1; n <= 100; ++n)
    if (!squared_moment_identity(n).holds()) {
      first_bad = "n=" + std::to_string(n);
      break;
    }
  log.record("moments", "sum k^2 C(n,k)^2 == n^2 C(2n-2,n-1) for n<=100", first_bad.empty(), first_bad);

  first_bad.clear();
  std::string monotone_bad;
  for (std::uint64_t n = 1; n <= 100; ++n) {
    ExactRatio previous = 0;
    for (unsigned d = 1; d <= 5; ++d) {
      const auto var = exact_variance(step_pmf(d, n + 1));
      if (first_bad.empty() && var > make_ratio(static_cast<unsigned long>(n), 4))
        first_bad = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      if (monotone_bad.empty() && d > 1 && var > previous)
        monotone_bad = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      previous = var;
    }
  }
  log.record("moments", "variance <= n/4 for d<=5, n<=100", first_bad.empty(), first_bad);
  log.record("moments", "variance non-increasing in d for d<=5, n<=100", monotone_bad.empty(), monotone_bad);
}

void suite_chebyshev(CheckLog& log) {
  const std::vector<ExactRatio> epsilons{make_ratio(1, 9), make_ratio(1, 4), make_ratio(1, 3)};
  for (unsigned d = 1; d <= 4; ++d)
    for (const std::uint64_t n : {20u, 50u, 100u, 200u}) {
      const auto dist = step_pmf(d, n + 1);
      for (const auto& eps : epsilons) {
        const auto tail = chebyshev_tail(dist, eps);
        std::ostringstream detail;
        detail << "tail=" << to_double(tail.tail_prob) << " bound=" << tail.bound;
        log.record("chebyshev", "d=" + std::to_string(d) + " n=" + std::to_string(n) + " eps=" + to_string(eps),
                   tail.holds, detail.str());
      }
    }
}

void suite_asymptotic(CheckLog& log) {
  const std::vector<std::uint64_t> ns{25, 50, 100, 200, 400};
  bool exact = true;
  for (std::uint64_t n = 1; n <= 400 && exact; ++n) exact = count_ratio(1, n) == 1.0;
  log.record("asymptotic", "d=1 estimate equals 2^n exactly for n<=400", exact);
  for (unsigned d = 2; d <= 7; ++d) {
    std::vector<double> errors;
    for (const auto n : ns) errors.push_back(std::abs(count_ratio(d, n) - 1.0));
    log.record("asymptotic", "d=" + std::to_string(d) + " |ratio-1| strictly decreasing over n=25..400",
               strictly_decreasing(errors), join(errors));
  }
  const double r = count_ratio(2, 100);
  log.record("asymptotic", "d=2 n=100 ratio within 1%", r > 0.99 && r < 1.01, std::to_string(r));
}

void suite_gauss(CheckLog& log) {
  const std::vector<std::uint64_t> ns{50, 100, 200, 400};
  for (unsigned d = 1; d <= 3; ++d) {
    std::vector<double> ks;
    for (const auto n : ns) ks.push_back(ks_distance(step_pmf(d, n + 1)));
    log.record("gauss", "d=" + std::to_string(d) + " KS strictly decreasing over n=50..400", strictly_decreasing(ks),
               join(ks));
  }
  for (unsigned d = 1; d <= 4; ++d) {
    std::vector<ExactRatio> errors;
    std::vector<double> shown;
    for (const auto n : ns) {
      const ExactRatio ratio = exact_variance(step_pmf(d, n + 1)) * ExactRatio(4ul * d) / ExactRatio(static_cast<unsigned long>(n));
      errors.push_back(abs(ratio - 1));
      shown.push_back(to_double(errors.back()));
    }
    const bool ok = d == 1 ? std::ranges::all_of(errors, [](const ExactRatio& e) { return e == 0; })
                           : strictly_decreasing(errors);
    log.record("gauss",
               "d=" + std::to_string(d) +
                   (d == 1 ? " variance*4d/n == 1 exactly" : " |variance*4d/n - 1| strictly decreasing over n=50..400"),
               ok, join(shown));
  }
}

void suite_oracle(CheckLog& log) {
  const auto cap = enumeration_cap();
  for (unsigned d = 1; d <= 3; ++d)
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const auto paths = enumerate_paths(d, n, cap);
      std::vector<ExactInt> by_k(n + 1, 0);
      for (const auto& p : paths) by_k[p.length()] += 1;
      bool ok = ExactInt(static_cast<unsigned long>(paths.size())) == total_paths(d, n);
      for (std::uint64_t k = 1; k <= n; ++k) ok = ok && by_k[k] == path_count(d, k, n);
      log.record("oracle", "d=" + std::to_string(d) + " n=" + std::to_string(n) + " enumeration matches formula", ok,
                 std::to_string(paths.size()) + " paths");
    }
}

// ---- command handlers -------------------------------------------------------

struct Options {
  std::string format = "csv";
  unsigned dim = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t start = 0;
  std::string fit = "own";
  std::string suite;
  std::string kind = "simple";
  std::size_t terms = 0;
  std::string resume;
  std::string out_file;
  std::string grid_file;
  std::uint64_t m = 0;
  bool all = false;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  bool gaps = false;
};

int cmd_count(const Options& o, Format f, std::ostream& out) {
  OutputRecord rec{"count"};
  rec.parameters = Json{{"dim", o.dim}, {"n", o.n}};
  if (o.k) rec.parameters["k"] = o.k;
  const auto total = total_paths(o.dim, o.n);
  rec.summary["total"] = to_string(total);
  for (std::uint64_t k = 1; k <= o.n; ++k) {
    if (o.k && k != o.k) continue;
    rec.rows.push_back(Json{{"dim", o.dim}, {"n", o.n}, {"k", k}, {"paths", to_string(path_count(o.dim, k, o.n))},
                            {"total", to_string(total)}});
  }
  if (o.k > o.n)
    rec.rows.push_back(Json{{"dim", o.dim}, {"n", o.n}, {"k", o.k}, {"paths", "0"}, {"total", to_string(total)}});
  emit(rec, f, out);
  return kExitOk;
}

int cmd_dist(const Options& o, Format f, std::ostream& out) {
  const auto dist = step_pmf(o.dim, o.start);
  const auto fit = o.fit == "limit" ? FitParameters::limit : FitParameters::own_moments;
  const auto mean = exact_mean(dist);
  const auto variance = exact_variance(dist);
  const std::uint64_t n = o.start - 1;
  const double fit_mean = fit == FitParameters::limit ? n / 2.0 + 1.0 : to_double(mean);
  const double fit_var = fit == FitParameters::limit ? n / (4.0 * o.dim) : to_double(variance);

  OutputRecord rec{"dist"};
  rec.parameters = Json{{"dim", o.dim}, {"start", o.start}, {"fit", o.fit}};
  rec.summary["total"] = to_string(dist.total());
  rec.summary["mean"] = to_string(mean);
  rec.summary["variance"] = to_string(variance);
  rec.summary["fit_mean"] = fit_mean;
  rec.summary["fit_variance"] = fit_var;
  rec.summary["ks_distance"] = o.start >= 3 ? Json(ks_distance(dist, fit)) : Json(nullptr);
  for (std::uint64_t k = 1; k <= dist.max_steps(); ++k) {
    const double density = fit_var > 0 ? normal_density(static_cast<double>(k), fit_mean, fit_var) : std::nan("");
    rec.rows.push_back(Json{{"k", k},
                            {"paths", to_string(dist.count(k))},
                            {"p_exact", to_string(dist.probability(k))},
                            {"p_approx", to_double(dist.probability(k))},
                            {"gaussian_fit", std::isnan(density) ? Json(nullptr) : Json(density)}});
  }
  emit(rec, f, out);
  return kExitOk;
}

int cmd_moments(const Options& o, Format f, std::ostream& out) {
  const auto r = moment_report(o.dim, o.start);
  OutputRecord rec{"moments"};
  rec.parameters = Json{{"dim", o.dim}, {"start", o.start}};
  rec.rows.push_back(Json{{"dim", r.dim},
                          {"start", r.start},
                          {"mean", to_string(r.mean)},
                          {"variance", to_string(r.variance)},
                          {"predicted_mean", to_string(r.predicted_mean)},
                          {"predicted_variance", r.predicted_variance ? Json(to_string(*r.predicted_variance)) : Json()},
                          {"mean_deviation", to_string(ExactRatio(r.mean - r.predicted_mean))},
                          {"variance_deviation",
                           r.predicted_variance ? Json(to_string(ExactRatio(r.variance - *r.predicted_variance))) : Json()},
                          {"variance_bound", to_string(r.variance_bound)},
                          {"bound_holds", r.bound_holds}});
  emit(rec, f, out);
  return kExitOk;
}

int cmd_verify(const Options& o, Format f, std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<void(CheckLog&)>>> suites{
      {"moments", suite_moments}, {"chebyshev", suite_chebyshev}, {"asymptotic", suite_asymptotic},
      {"gauss", suite_gauss},     {"oracle", suite_oracle}};
  CheckLog log;
  for (const auto& [name, run_suite] : suites)
    if (o.suite == "all" || o.suite == name) run_suite(log);
  OutputRecord rec{"verify"};
  rec.parameters = Json{{"suite", o.suite}};
  rec.summary["passed"] = log.all_passed;
  rec.rows = log.rows;
  emit(rec, f, out);
  return log.all_passed ? kExitOk : kExitVerifyFailed;
}

int cmd_sequence(const Options& o, Format f, std::ostream& out) {
  const auto kind = parse_sequence_kind(o.kind);
  SequenceBuilder builder = o.resume.empty() ? SequenceBuilder(kind, o.dim) : SequenceBuilder(grid_from_json(read_file(o.resume)));
  if (builder.grid().kind() != kind || builder.grid().dim() != o.dim)
    throw std::invalid_argument("resume snapshot kind/dim does not match --kind/--dim");
  builder.grow_to(o.terms);
  const auto& grid = builder.grid();

  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw std::invalid_argument("cannot write '" + o.out_file + "'");
    file << grid_to_json(grid) << '\n';
  }

  OutputRecord rec{"sequence"};
  rec.parameters = Json{{"kind", o.kind}, {"dim", o.dim}, {"terms", o.terms}};
  rec.summary["next_candidate"] = grid.next_candidate();
  rec.summary["complete_diagonals"] = grid.complete_diagonals();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& e = grid.entries()[i];
    rec.rows.push_back(Json{{"index", i + 1}, {"a", e.pos.a}, {"b", grid.dim() == 2 ? Json(e.pos.b) : Json()}, {"value", e.value}});
  }
  emit(rec, f, out);
  return kExitOk;
}

int cmd_decompose(const Options& o, Format f, std::ostream& out) {
  const auto grid = grid_from_json(read_file(o.grid_file));
  std::vector<Decomposition> found;
  if (o.all) {
    found = enumerate_decompositions(grid, o.m);
  } else if (auto w = is_representable(grid, o.m)) {
    found.push_back(std::move(*w));
  }
  OutputRecord rec{"decompose"};
  rec.parameters = Json{{"grid", o.grid_file}, {"m", o.m}, {"all", o.all}};
  rec.summary["representable"] = !found.empty();
  rec.summary["decompositions"] = found.size();
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t p = 0; p < found[i].parts.size(); ++p) {
      const auto& e = found[i].parts[p];
      rec.rows.push_back(Json{{"decomposition", i + 1},
                              {"part", p + 1},
                              {"a", e.pos.a},
                              {"b", grid.dim() == 2 ? Json(e.pos.b) : Json()},
                              {"value", e.value}});
    }
  emit(rec, f, out);
  return kExitOk;
}

int cmd_sample(const Options& o, Format f, std::ostream& out) {
  const PathSampler sampler(o.dim, o.n);
  std::mt19937_64 rng(o.seed);
  std::vector<std::uint64_t> hits(o.n + 1, 0);
  GapHistogram gaps;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    const auto path = sampler.draw(rng);
    ++hits[path.length()];
    if (o.gaps) gaps.add(path);
  }
  OutputRecord rec{"sample"};
  rec.parameters = Json{{"dim", o.dim}, {"n", o.n}, {"count", o.count}, {"seed", o.seed}, {"gaps", o.gaps}};
  if (o.gaps) {
    rec.summary["total_steps"] = gaps.total_steps;
    rec.rows = gap_rows(gaps);
  } else {
    const auto dist = step_pmf(o.dim, o.n);
    for (std::uint64_t k = 1; k <= o.n; ++k)
      rec.rows.push_back(Json{{"k", k},
                              {"hits", hits[k]},
                              {"frequency", static_cast<double>(hits[k]) / static_cast<double>(o.count)},
                              {"p_exact", to_string(dist.probability(k))}});
  }
  emit(rec, f, out);
  return kExitOk;
}

int cmd_enumerate(const Options& o, Format f, std::ostream& out) {
  const auto paths = enumerate_paths(o.dim, o.n, enumeration_cap());
  OutputRecord rec{"enumerate"};
  rec.parameters = Json{{"dim", o.dim}, {"n", o.n}, {"gaps", o.gaps}};
  rec.summary["paths"] = paths.size();
  if (o.gaps) {
    rec.rows = gap_rows(gap_histogram(paths));
  } else {
    for (std::size_t i = 0; i < paths.size(); ++i)
      rec.rows.push_back(Json{{"path", i + 1}, {"length", paths[i].length()}, {"points", path_text(paths[i])}});
  }
  emit(rec, f, out);
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact step-count statistics of simple jump paths and greedy Zeckendorf lattice sequences", "zeck"};
  app.require_subcommand(1);
  Options o;
  const auto positive = CLI::PositiveNumber;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* count = app.add_subcommand("count", "Number of simple jump paths t_d(k,n) and s_d(n)");
  count->add_option("--dim", o.dim, "Dimension d")->required()->check(positive);
  count->add_option("--n", o.n, "Start coordinate n")->required()->check(positive);
  count->add_option("--k", o.k, "Only this step count")->check(positive);
  add_format(count);

  auto* dist = app.add_subcommand("dist", "Exact step-count pmf with a fitted Gaussian column");
  dist->add_option("--dim", o.dim, "Dimension d")->required()->check(positive);
  dist->add_option("--start", o.start, "Start coordinate (n + 1)")->required()->check(positive);
  dist->add_option("--fit", o.fit, "Gaussian parameters: own moments or the n/2+1, n/4d limit")
      ->check(CLI::IsMember({"own", "limit"}));
  add_format(dist);

  auto* moments = app.add_subcommand("moments", "Exact mean and variance against closed forms");
  moments->add_option("--dim", o.dim, "Dimension d")->required()->check(positive);
  moments->add_option("--start", o.start, "Start coordinate (n + 1)")->required()->check(positive);
  add_format(moments);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite; exit 1 on any failure");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"moments", "chebyshev", "asymptotic", "gauss", "oracle", "all"}));
  add_format(verify);

  auto* sequence = app.add_subcommand("sequence", "Build a greedy Zeckendorf diagonal sequence");
  sequence->add_option("--kind", o.kind, "simple or compound")->required()->check(CLI::IsMember({"simple", "compound"}));
  sequence->add_option("--dim", o.dim, "1 or 2")->required()->check(CLI::IsMember({1u, 2u}));
  sequence->add_option("--terms", o.terms, "Number of grid values")->required()->check(positive);
  sequence->add_option("--resume", o.resume, "Continue from a JSON snapshot");
  sequence->add_option("--out", o.out_file, "Write the final grid as a JSON snapshot");
  add_format(sequence);

  auto* decompose = app.add_subcommand("decompose", "Legal decompositions of M over a saved grid");
  decompose->add_option("--grid", o.grid_file, "JSON grid snapshot")->required();
  decompose->add_option("--m", o.m, "Integer to decompose")->required()->check(positive);
  decompose->add_flag("--all", o.all, "List every decomposition, not one witness");
  add_format(decompose);

  auto* sample = app.add_subcommand("sample", "Uniformly sampled paths: length frequencies or gap counts");
  sample->add_option("--dim", o.dim, "Dimension d")->required()->check(positive);
  sample->add_option("--n", o.n, "Start coordinate n")->required()->check(positive);
  sample->add_option("--count", o.count, "Number of samples")->required()->check(positive);
  sample->add_option("--seed", o.seed, "64-bit seed")->required();
  sample->add_flag("--gaps", o.gaps, "Emit the per-dimension gap histogram");
  add_format(sample);

  auto* enumerate = app.add_subcommand("enumerate", "Every path from (n,...,n), capped by ZECK_ENUM_CAP");
  enumerate->add_option("--dim", o.dim, "Dimension d")->required()->check(positive);
  enumerate->add_option("--n", o.n, "Start coordinate n")->required()->check(positive);
  enumerate->add_flag("--gaps", o.gaps, "Emit the per-dimension gap histogram");
  add_format(enumerate);

  std::vector<const char*> argv{"zeck"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kExitUsage;
  }

  const Format format = o.format == "json" ? Format::json : Format::csv;
  try {
    if (count->parsed()) return cmd_count(o, format, out);
    if (dist->parsed()) return cmd_dist(o, format, out);
    if (moments->parsed()) return cmd_moments(o, format, out);
    if (verify->parsed()) return cmd_verify(o, format, out);
    if (sequence->parsed()) return cmd_sequence(o, format, out);
    if (decompose->parsed()) return cmd_decompose(o, format, out);
    if (sample->parsed()) return cmd_sample(o, format, out);
    if (enumerate->parsed()) return cmd_enumerate(o, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace zeck::cli
