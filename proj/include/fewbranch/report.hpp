#pragma once

#include "json.hpp"

#include "fewbranch/certificate.hpp"
#include "fewbranch/solver.hpp"
#include "fewbranch/verify.hpp"

namespace fewbranch {

// JSON views of result types. Sigma values serialize as a number or the
// string "unbounded"; trees as their sorted "u-v" edge strings.

nlohmann::json to_json(const DegreeSumBound& bound);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const CountingCertificate& certificate);
nlohmann::json to_json(const SolveOutcome& outcome);
nlohmann::json to_json(const TheoremCheck& check, const TheoremId& theorem);

}  // namespace fewbranch
