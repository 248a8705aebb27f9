#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fewbranch/graph.hpp"
#include "fewbranch/oracle.hpp"
#include "fewbranch/solver.hpp"
#include "fewbranch/structure.hpp"

namespace fewbranch {

/// A degree-sum statement "sigma_k >= threshold(n) implies a spanning tree
/// with at most `branch_bound` branch vertices".
///
///   t14     sigma_7 >= n - 2, at most 2 branch vertices
///   t15     sigma_6 >= n - 5, at most 2 branch vertices
///   conj:k  sigma_{2k+3} >= n - 2, at most k branch vertices
struct TheoremId {
  enum class Kind { T14, T15, Conjecture };
  Kind kind = Kind::T14;
  int k = 2;

  /// Throws std::invalid_argument for anything but t14, t15, conj:<k>, k >= 0.
  static TheoremId parse(std::string_view text);
  std::string to_string() const;

  int sigma_order() const;
  long threshold(int n) const;
  int branch_bound() const;
  /// Leaf count the hypothesis guarantees: sigma_order - 1.
  int leaf_bound() const { return sigma_order() - 1; }

  friend bool operator==(const TheoremId&, const TheoremId&) = default;
};

struct HypothesisReport {
  bool connected = false;
  bool claw_free = false;
  DegreeSumBound sigma_value = DegreeSumBound::unbounded();
  long sigma_threshold = 0;
  bool satisfied = false;
  bool vacuous = false;  ///< satisfied only because sigma is unbounded
};

HypothesisReport evaluate_hypotheses(const Graph& g, const TheoremId& theorem);

struct VerifyOptions {
  int oracle_cap = 12;
  long move_cap = 0;
};

struct TheoremCheck {
  HypothesisReport hypotheses;
  /// Empty when the hypotheses fail, or when n exceeds the oracle cap and the
  /// solver did not reach the bound on its own.
  std::optional<bool> conclusion;
  std::optional<SolveOutcome> solver;
  std::optional<OracleResult> oracle;
};

/// Evaluates the hypotheses exactly; when they hold, solves and, for
/// n <= oracle_cap, settles the conclusion with the exact oracle.
TheoremCheck check_theorem(const Graph& g, const TheoremId& theorem, const VerifyOptions& options = {});

}  // namespace fewbranch
