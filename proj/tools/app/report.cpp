#include "report.hpp"

#include <sstream>

namespace kfin::app {

Json run_parameters(const RunOptions& options) {
  return Json{{"radius", options.radius},
              {"method", to_string(options.method)},
              {"order_cap", options.group.order_cap},
              {"enumeration_cap", options.group.enumeration_cap},
              {"max_ball", options.group.max_ball}};
}

Json report_header(const std::string& command, const Group& group) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["group"] = group.name();
  j["finite"] = group.is_finite();
  if (auto n = group.size()) j["order"] = *n;
  else j["order"] = nullptr;
  return j;
}

std::string to_string(ClassMembership membership) {
  switch (membership) {
    case ClassMembership::FiniteEnumeration: return "finite-enumeration";
    case ClassMembership::AnalyticForm: return "analytic-form";
    case ClassMembership::OrbitSearch: return "orbit-search";
  }
  return "unknown";
}

Json to_json(const DegreeFit& fit) {
  return Json{{"degree", fit.degree},
              {"sphere_degree", fit.sphere_degree},
              {"slope", fit.slope},
              {"constant", fit.constant},
              {"residual", fit.residual},
              {"radii", Json::array({fit.first_radius, fit.last_radius})},
              {"degenerate", fit.degenerate},
              {"accepted", fit.accepted}};
}

Json to_json(const GpolVerdict& verdict) {
  Json j{{"kind", to_string(verdict.kind)}, {"degree", verdict.degree}, {"reason", verdict.reason}};
  j["radius"] = verdict.radius ? Json(*verdict.radius) : Json(nullptr);
  j["fit"] = verdict.fit ? to_json(*verdict.fit) : Json(nullptr);
  return j;
}

Json to_json(const PolyFullVerdict& verdict) {
  Json j{{"verdict", to_string(verdict.kind)}, {"reason", verdict.reason}};
  j["radius"] = verdict.radius ? Json(*verdict.radius) : Json(nullptr);
  return j;
}

Json run_ffin(const std::string& spec, const RunOptions& options) {
  const Group group(parse_group_spec(spec), options.group);
  const auto pol = compute_ffin_pol(group, options.radius, {options.method, options.radius});
  const auto& partition = pol.partition;

  Json j = report_header("ffin", group);
  j["method"] = to_string(partition.method);
  j["exact"] = partition.exact;
  j["search_radius"] = partition.search_radius ? Json(*partition.search_radius) : Json(nullptr);
  j["f_value"] = partition.f_value;
  j["f_pol_value"] = pol.f_pol_value;
  j["f_pol_certified"] = pol.certified;
  j["growth_radius"] = options.radius;
  j["poly_full"] = to_json(is_polynomially_full(group, options.radius));
  Json classes = Json::array();
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    const auto& cls = partition.classes[i];
    Json reps = Json::array();
    for (const auto& r : cls.conjugacy_reps) reps.push_back(group.format(r));
    classes.push_back(Json{{"representative", group.format(cls.representative)},
                           {"order", cls.order},
                           {"conjugacy_reps", reps},
                           {"gpol", to_json(pol.verdicts[i])}});
  }
  j["classes"] = classes;
  j["warnings"] = partition.warnings;
  return j;
}

Json run_growth(const std::string& spec, const std::string& element, const RunOptions& options) {
  const Group group(parse_group_spec(spec), options.group);
  const auto h = group.parse_element(element);
  const auto profile = conjugacy_growth(group, h, options.radius);

  Json j = report_header("growth", group);
  j["element"] = group.format(h);
  j["radius"] = options.radius;
  j["membership"] = to_string(profile.membership);
  j["conjugator_radius"] = profile.conjugator_radius;
  j["exact"] = profile.exact;
  j["complete"] = profile.complete;
  j["class_size"] = profile.class_size ? Json(*profile.class_size) : Json(nullptr);
  Json spheres = Json::array();
  for (std::size_t l = 0; l < profile.sphere_counts.size(); ++l) {
    spheres.push_back(Json{{"l", l}, {"n", profile.sphere_counts[l]}, {"cumulative", profile.cumulative[l]}});
  }
  j["spheres"] = spheres;
  j["fit"] = options.radius >= 4 ? to_json(fit_polynomial_degree(profile)) : Json(nullptr);
  j["verdict"] = to_json(classify_gpol(group, h, options.radius));
  return j;
}

Json run_trace_matrix(const std::string& spec, const RunOptions& options) {
  const Group group(parse_group_spec(spec), options.group);
  const auto partition = compute_ffin(group, {options.method, options.radius});
  std::vector<Element> reps;
  for (const auto& cls : partition.classes) reps.push_back(cls.representative);
  const auto report = trace_matrix(group, reps);

  Json j = report_header("trace-matrix", group);
  j["f_value"] = partition.f_value;
  j["exact"] = partition.exact;
  Json jr = Json::array();
  for (const auto& [s, d] : report.reps) jr.push_back(Json{{"element", group.format(s)}, {"order", d}});
  j["reps"] = jr;
  Json rows = Json::array();
  for (const auto& row : report.matrix) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  j["matrix"] = rows;
  Json diag = Json::array();
  for (const auto& x : report.diagonal) diag.push_back(x.to_string());
  j["diagonal"] = diag;
  j["upper_triangular"] = report.upper_triangular;
  j["diagonal_bound"] = report.diagonal_bound;
  j["rank"] = report.rank;
  j["full_rank"] = report.rank == report.reps.size();
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream out;
  const auto command = report.value("command", std::string{});
  for (const auto& [key, value] : report.items()) {
    if (value.is_primitive()) out << key << "\t" << cell(value) << "\n";
  }
  if (command == "ffin") {
    out << "\norder\trepresentative\tgpol\tconjugacy_reps\n";
    for (const auto& c : report["classes"]) {
      std::string reps;
      for (const auto& r : c["conjugacy_reps"]) reps += (reps.empty() ? "" : " ") + r.get<std::string>();
      out << c["order"] << "\t" << cell(c["representative"]) << "\t" << cell(c["gpol"]["kind"]) << "\t" << reps << "\n";
    }
  } else if (command == "growth") {
    out << "\nl\tn\tcumulative\n";
    for (const auto& s : report["spheres"]) out << s["l"] << "\t" << s["n"] << "\t" << s["cumulative"] << "\n";
  } else if (command == "trace-matrix") {
    out << "\n";
    for (std::size_t i = 0; i < report["matrix"].size(); ++i) {
      const auto& rep = report["reps"][i];
      out << cell(rep["element"]) << " (d=" << rep["order"] << ")";
      for (const auto& x : report["matrix"][i]) out << "\t" << cell(x);
      out << "\n";
    }
  } else if (command == "bounds") {
    for (const char* key : {"s_bound", "p_bound"}) {
      out << key << "_note\t" << cell(report["applicability"][key]) << "\n";
    }
  } else if (command == "verify") {
    out << "\nspec\tformula\tbrute_force\tstatus\n";
    for (const auto& e : report["results"]) {
      out << cell(e["spec"]) << "\t" << cell(e["formula_value"]) << "\t" << cell(e["brute_force_value"]) << "\t"
          << cell(e["status"]) << "\n";
    }
  }
  for (const auto& w : report.value("warnings", Json::array())) out << "warning\t" << cell(w) << "\n";
  return out.str();
}

}  // namespace kfin::app
