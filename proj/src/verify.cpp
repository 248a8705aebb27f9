#include "fewbranch/verify.hpp"

#include <charconv>
#include <stdexcept>

namespace fewbranch {

TheoremId TheoremId::parse(std::string_view text) {
  if (text == "t14") return {Kind::T14, 2};
  if (text == "t15") return {Kind::T15, 2};
  if (text.starts_with("conj:")) {
    const auto digits = text.substr(5);
    int k = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty() && k >= 0)
      return {Kind::Conjecture, k};
  }
  throw std::invalid_argument("unknown theorem '" + std::string(text) + "' (expected t14, t15 or conj:<k>)");
}

std::string TheoremId::to_string() const {
  switch (kind) {
    case Kind::T14: return "t14";
    case Kind::T15: return "t15";
    case Kind::Conjecture: return "conj:" + std::to_string(k);
  }
  return "t14";
}

int TheoremId::sigma_order() const {
  switch (kind) {
    case Kind::T14: return 7;
    case Kind::T15: return 6;
    case Kind::Conjecture: return 2 * k + 3;
  }
  return 7;
}

long TheoremId::threshold(int n) const { return kind == Kind::T15 ? n - 5L : n - 2L; }

int TheoremId::branch_bound() const { return kind == Kind::Conjecture ? k : 2; }

HypothesisReport evaluate_hypotheses(const Graph& g, const TheoremId& theorem) {
  HypothesisReport r;
  r.connected = is_connected(g);
  r.claw_free = !find_claw(g).has_value();
  r.sigma_value = sigma_k(g, theorem.sigma_order());
  r.sigma_threshold = theorem.threshold(g.order());
  r.satisfied = r.connected && r.claw_free && r.sigma_value.at_least(r.sigma_threshold);
  r.vacuous = r.satisfied && r.sigma_value.is_unbounded();
  return r;
}

TheoremCheck check_theorem(const Graph& g, const TheoremId& theorem, const VerifyOptions& options) {
  TheoremCheck check;
  check.hypotheses = evaluate_hypotheses(g, theorem);
  if (!check.hypotheses.satisfied) return check;

  SolveOptions solve_options;
  solve_options.move_cap = options.move_cap;
  solve_options.oracle_cap = options.oracle_cap;
  check.solver = solve(g, solve_options);

  if (g.order() <= options.oracle_cap) {
    OracleOptions oracle;
    oracle.cap = options.oracle_cap;
    check.oracle = min_branch_vertices_exact(g, oracle);
    check.conclusion = check.oracle->optimum <= theorem.branch_bound();
  } else if (check.solver->branch_count() <= theorem.branch_bound()) {
    check.conclusion = true;
  }
  return check;
}

}  // namespace fewbranch
