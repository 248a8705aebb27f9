#include "fewbranch/report.hpp"

namespace fewbranch {

using nlohmann::json;

namespace {

json edge_strings(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(to_string(e));
  return out;
}

}  // namespace

json to_json(const DegreeSumBound& bound) {
  if (bound.is_unbounded()) return "unbounded";
  return bound.value();
}

json to_json(const HypothesisReport& r) {
  return {{"connected", r.connected},         {"claw_free", r.claw_free}, {"sigma_value", to_json(r.sigma_value)},
          {"sigma_threshold", r.sigma_threshold}, {"satisfied", r.satisfied}, {"vacuous", r.vacuous}};
}

json to_json(const CountingCertificate& c) {
  json regions = json::array();
  for (const auto& r : c.regions)
    regions.push_back({{"region", r.name}, {"count", r.count}, {"capacity", r.capacity}, {"violated", r.violated()}});
  return {{"shape", std::string(to_string(c.shape))},
          {"applicable", c.applicable},
          {"sigma_order", c.sigma_order},
          {"special_set", c.special_set},
          {"special_set_independent", c.special_set_independent},
          {"regions", regions},
          {"degree_sum", c.degree_sum},
          {"capacity_total", c.capacity_total},
          {"sigma_bound", to_json(c.sigma_bound)},
          {"contradiction_margin", c.contradiction_margin},
          {"violated_regions", c.violated_regions()}};
}

json to_json(const SolveOutcome& o) {
  json trace = json::array();
  for (const auto& e : o.trace) trace.push_back(format_trace_line(e));
  json out = {{"status", std::string(to_string(o.status))},
              {"branch_count", o.branch_count()},
              {"leaf_count", leaf_count(o.tree)},
              {"leaves_after_reduction", o.leaves_after_reduction},
              {"tree", edge_strings(o.tree.edges())},
              {"trace", trace}};
  if (o.certificate) out["certificate"] = to_json(*o.certificate);
  return out;
}

json to_json(const TheoremCheck& check, const TheoremId& theorem) {
  json out = {{"theorem", theorem.to_string()},
              {"branch_bound", theorem.branch_bound()},
              {"hypotheses", to_json(check.hypotheses)},
              {"conclusion", check.conclusion ? json(*check.conclusion) : json(nullptr)}};
  if (check.solver) out["solver"] = to_json(*check.solver);
  if (check.oracle)
    out["oracle"] = {{"optimum", check.oracle->optimum},
                     {"exact", check.oracle->exact},
                     {"explored", check.oracle->explored},
                     {"witness", edge_strings(check.oracle->witness.edges())}};
  return out;
}

}  // namespace fewbranch
