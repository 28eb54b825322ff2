#include "verify.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <thread>

#include "kfin/error.hpp"
#include "kfin/formulas.hpp"

namespace kfin::app {

std::vector<std::string> default_corpus() {
  std::vector<std::string> corpus;
  for (int n = 1; n <= 60; ++n) corpus.push_back("Z/" + std::to_string(n));
  for (int a = 1; a <= 10; ++a) {
    for (int b = 1; b <= 10; ++b) corpus.push_back("Z/" + std::to_string(a) + " x Z/" + std::to_string(b));
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) {
        corpus.push_back("Z/" + std::to_string(a) + " x Z/" + std::to_string(b) + " x Z/" + std::to_string(c));
      }
    }
  }
  for (int n = 2; n <= 40; ++n) corpus.push_back("D" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) corpus.push_back("S" + std::to_string(n));
  corpus.push_back("Dinf");
  return corpus;
}

std::vector<std::string> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read corpus file " + path.string());
  std::vector<std::string> corpus;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    corpus.push_back(line.substr(first, last - first + 1));
  }
  return corpus;
}

namespace {

Json big_to_json(const BigInt& v) {
  if (v.fits_ulong_p()) return Json(v.get_ui());
  return Json(v.get_str());
}

GroupAlgebraElement random_sparse(const Group& group, const std::vector<Element>& elements, std::mt19937_64& rng) {
  GroupAlgebraElement x(group);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (int t = 0; t < 3; ++t) x.add_term(elements[pick(rng)], Rational(BigInt(num(rng)), BigInt(den(rng))));
  return x;
}

/// Trace-matrix and exact identity checks on a small finite group.
Json algebra_checks(const Group& group, std::size_t f_value, std::mt19937_64& rng, bool& ok) {
  const auto m = trace_matrix(group);
  Json j{{"upper_triangular", m.upper_triangular},
         {"diagonal_bound", m.diagonal_bound},
         {"rank", m.rank},
         {"full_rank", m.rank == f_value}};
  ok = ok && m.upper_triangular && m.diagonal_bound && m.rank == f_value;

  const auto elements = group.enumerate_all();
  const ClassOracle oracle(group);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  bool projections = true;
  for (int t = 0; t < 2; ++t) projections = projections && is_projection(projection_pg(group, elements[pick(rng)]));
  const auto a = random_sparse(group, elements, rng);
  const auto b = random_sparse(group, elements, rng);
  const auto& h = elements[pick(rng)];
  const bool trace_property = trace_tau(oracle, h, a * b) == trace_tau(oracle, h, b * a);
  j["projections"] = projections;
  j["trace_property"] = trace_property;
  ok = ok && projections && trace_property;
  return j;
}

Json verify_entry(const std::string& spec, std::size_t index, const VerifyOptions& options, bool& ok) {
  Json j;
  j["spec"] = spec;
  try {
    const auto cv = cross_validate(spec, options.run.radius, options.run.group);
    j["spec"] = cv.spec;
    j["formula_value"] = cv.formula_value ? big_to_json(*cv.formula_value) : Json(nullptr);
    j["brute_force_value"] = cv.brute_force_value ? Json(*cv.brute_force_value) : Json(nullptr);
    j["brute_force_exact"] = cv.brute_force_exact;
    j["agree"] = cv.agree;
    if (cv.formula_value && cv.brute_force_value) {
      j["status"] = cv.agree ? "agree" : "disagree";
      ok = cv.agree;
    } else {
      j["status"] = cv.formula_value ? "formula-only" : "brute-force-only";
      ok = true;
    }
    j["note"] = cv.note;

    const Group group(parse_group_spec(spec), options.run.group);
    if (group.is_finite() && *group.size() <= options.trace_limit && cv.brute_force_value) {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(index)};
      std::mt19937_64 rng(seq);
      j["algebra"] = algebra_checks(group, *cv.brute_force_value, rng, ok);
    } else {
      j["algebra"] = nullptr;
    }
  } catch (const std::exception& e) {
    j["status"] = "error";
    j["note"] = e.what();
    ok = false;
  }
  return j;
}

}  // namespace

VerifyOutcome run_verify(const std::vector<std::string>& corpus, const VerifyOptions& options) {
  std::vector<Json> results(corpus.size());
  std::vector<char> passed(corpus.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      bool ok = false;
      results[i] = verify_entry(corpus[i], i, options, ok);
      passed[i] = ok;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyOutcome out;
  out.ok = true;
  std::size_t agree = 0, disagree = 0, errors = 0, partial = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.ok = out.ok && passed[i];
    const auto status = results[i]["status"].get<std::string>();
    if (status == "agree") ++agree;
    else if (status == "disagree") ++disagree;
    else if (status == "error") ++errors;
    else ++partial;
  }
  Json& r = out.report;
  r["schema"] = kSchema;
  r["command"] = "verify";
  r["seed"] = options.seed;
  r["radius"] = options.run.radius;
  r["corpus_size"] = corpus.size();
  r["results"] = results;
  r["summary"] = Json{{"agree", agree}, {"disagree", disagree}, {"partial", partial}, {"errors", errors}};
  r["ok"] = out.ok;
  return out;
}

}  // namespace kfin::app
