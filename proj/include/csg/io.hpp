#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "csg/analysis.hpp"
#include "csg/game.hpp"
#include "csg/spec.hpp"

namespace csg::io {

/// Parses the matrix text form "2,0;0,3": rows split by ';', entries by ','.
MatrixM parse_matrix_text(std::string_view text);  // throws SpecError on bad syntax

std::string format_matrix_text(const MatrixM& rows);

// Spec form: {"n1":2,"n2":3,"matrix":[[2,0],[0,3]]}, rows in canonical order.
nlohmann::ordered_json spec_to_json(const CompleteGameSpec& spec);
CompleteGameSpec spec_from_json(const nlohmann::json& j);  // validates

/// CSV row: n1,n2,r,"rows" with the matrix in text form.
std::string spec_to_csv(const CompleteGameSpec& spec);

// Game form: {"n":5,"minimal_winning":[[1,2],[3,4,5],...]}, coalitions as
// sorted voter lists in ascending mask order.
nlohmann::ordered_json game_to_json(const SimpleGame& g);
SimpleGame game_from_json(const nlohmann::json& j);  // validates

/// {"complete":true,"types":2,"classes":[[1,2],[3,4,5]],"spec":{...}} with
/// "spec" present only for two-type games, or
/// {"complete":false,"witness":{"i":1,"j":3,"s":[2]}}.
nlohmann::ordered_json classification_to_json(const SimpleGame& g, const Classification& c);

/// Full report for one spec: profiles, matrix rows, minimal winning
/// coalitions, maximal losing profiles, null voters.
nlohmann::ordered_json inspect_report(const CompleteGameSpec& spec);

} // namespace csg::io
