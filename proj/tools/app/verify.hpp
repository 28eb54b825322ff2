#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "report.hpp"

namespace kfin::app {

/// Cyclic groups to 60, two- and three-factor abelian products, D2..D40, S1..S6 and Dinf.
std::vector<std::string> default_corpus();
/// One spec per line; blank lines and '#' comments are skipped.
std::vector<std::string> load_corpus(const std::filesystem::path& path);

struct VerifyOptions {
  RunOptions run;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  /// Finite groups up to this order also get trace-matrix and sampled identity checks.
  std::uint64_t trace_limit = 500;
};

struct VerifyOutcome {
  Json report;
  bool ok = false;
};

/// Cross-validates every corpus entry. Entries are independent and may run on several
/// workers; the report lists them in corpus order and does not depend on the worker count.
VerifyOutcome run_verify(const std::vector<std::string>& corpus, const VerifyOptions& options);

}  // namespace kfin::app
