#pragma once

#include <json.hpp>

#include "biamalg/harness.hpp"
#include "biamalg/verdict.hpp"

namespace biamalg {

/// {"generators": [labels], "size": n}
nlohmann::json to_json(const Ideal& ideal);
/// {"kind", "elements": [labels], "ideals": [...], "polynomials": [[labels]], "detail"}
nlohmann::json to_json(const Witness& witness);
/// {"holds", "conclusive", "method", "note", "witness"}
nlohmann::json to_json(const Verdict& verdict);
/// {"theorem", "status", "hypotheses": [...], "conclusions": [...], "notes": [...]}
nlohmann::json to_json(const TheoremReport& report);

}  // namespace biamalg
