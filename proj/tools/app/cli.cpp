#include "cli.hpp"

#include <CLI11.hpp>

#include "bounds.hpp"
#include "cache.hpp"
#include "kfin/error.hpp"
#include "verify.hpp"

namespace kfin::app {

namespace {

FfinMethod parse_method(const std::string& text) {
  for (auto m : {FfinMethod::Auto, FfinMethod::Enumeration, FfinMethod::Analytic, FfinMethod::RadiusBounded}) {
    if (to_string(m) == text) return m;
  }
  throw InvalidArgument("unknown method '" + text + "'");
}

/// Runs `compute` through the file cache when one is configured.
template <typename Fn>
Json cached(const std::optional<ReportCache>& cache, const std::string& command, const std::string& spec,
            const Json& params, Fn compute) {
  if (!cache) return compute();
  const auto key = ReportCache::key(command, render(parse_group_spec(spec)), params);
  if (auto hit = cache->load(key)) return *hit;
  auto report = compute();
  cache->store(key, report);
  return report;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion-class invariants, trace matrices and conjugacy growth of finitely generated groups", "kfin"};
  app.require_subcommand(1);
  app.fallthrough();

  bool table = false;
  bool json = false;
  std::uint32_t radius = 12;
  std::string cache_dir;
  std::uint64_t max_ball = GroupOptions{}.max_ball;
  std::uint64_t order_cap = GroupOptions{}.order_cap;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string method = "auto";

  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", json, "JSON report (default)");
  fmt->add_flag("--table", table, "Tab-delimited report");
  fmt->require_option(0, 1);
  app.add_option("--radius", radius, "Word-metric radius for growth and radius-bounded searches")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, std::string("Report cache directory (overrides $") + kCacheEnv + ")");
  app.add_option("--max-ball", max_ball, "Largest word ball or orbit to materialize")->capture_default_str();
  app.add_option("--order-cap", order_cap, "Iteration cap for element orders")->capture_default_str();
  app.add_option("--seed", seed, "Seed for sampled identity checks")->capture_default_str();

  std::string spec;
  std::string element;
  std::int64_t dim = 0;
  ManifoldFlags flags;
  std::string corpus_path;

  auto* ffin = app.add_subcommand("ffin", "F and F^pol with the torsion class partition");
  ffin->add_option("spec", spec, "Group spec, e.g. 'Z/6' or 'D4 x Z^2'")->required();
  ffin->add_option("--method", method, "auto | enumeration | analytic | radius-bounded")->capture_default_str();

  auto* growth = app.add_subcommand("growth", "Conjugacy-class growth profile of an element");
  growth->add_option("spec", spec, "Group spec")->required();
  growth->add_option("element", element, "Element in per-family notation")->required();

  auto* trace = app.add_subcommand("trace-matrix", "Trace matrix over the torsion class representatives");
  trace->add_option("spec", spec, "Group spec")->required();

  auto* bounds = app.add_subcommand("bounds", "Rank bounds and manifold S(M), P(M) lower bounds");
  bounds->add_option("spec", spec, "Group spec standing in for pi_1(M)")->required();
  bounds->add_option("--dim", dim, "Manifold dimension")->required();
  bounds->add_flag("--oriented", flags.oriented, "Assert M is compact and oriented");
  bounds->add_flag("--spin-psc", flags.spin_psc, "Assert M is spin with a positive scalar curvature metric");

  auto* verify = app.add_subcommand("verify", "Cross-validate closed forms against brute force");
  verify->add_option("--corpus", corpus_path, "Corpus file, one spec per line");
  verify->add_option("--workers", workers, "Worker threads")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    RunOptions run;
    run.radius = radius;
    run.group.max_ball = max_ball;
    run.group.order_cap = order_cap;
    run.method = parse_method(method);

    std::optional<ReportCache> cache;
    if (auto dir = resolve_cache_dir(cache_dir)) cache.emplace(*dir);

    Json report;
    int code = kExitOk;
    if (*ffin) {
      report = cached(cache, "ffin", spec, run_parameters(run), [&] { return run_ffin(spec, run); });
    } else if (*growth) {
      auto params = run_parameters(run);
      params["element"] = element;
      report = cached(cache, "growth", spec, params, [&] { return run_growth(spec, element, run); });
    } else if (*trace) {
      report = cached(cache, "trace-matrix", spec, run_parameters(run), [&] { return run_trace_matrix(spec, run); });
    } else if (*bounds) {
      auto params = run_parameters(run);
      params["dim"] = dim;
      params["oriented"] = flags.oriented;
      params["spin_psc"] = flags.spin_psc;
      report = cached(cache, "bounds", spec, params, [&] { return run_bounds(spec, dim, flags, run); });
    } else if (*verify) {
      VerifyOptions vo;
      vo.run = run;
      vo.workers = workers;
      vo.seed = seed;
      const auto corpus = corpus_path.empty() ? default_corpus() : load_corpus(corpus_path);
      auto outcome = run_verify(corpus, vo);
      report = std::move(outcome.report);
      if (!outcome.ok) code = kExitVerifyFailed;
    }
    if (table) out << render_table(report);
    else out << report.dump(2) << "\n";
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Unsupported& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace kfin::app
