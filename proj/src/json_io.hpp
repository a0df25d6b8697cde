#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "gradedk.hpp"

namespace gkt {

using Json = nlohmann::json;

/// Parse with library errors mapped to ErrorKind::Parse.
Json parse_json(const std::string& text);

Json matrix_to_json(const ZMatrix& m);
ZMatrix matrix_from_json(const Json& j);

Json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

Json pair_to_json(const GradedKPair& p);
GradedKPair pair_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json graph_to_json(const OneGraph& g, const DeltaLabeling& d);
std::pair<OneGraph, DeltaLabeling> graph_from_json(const Json& j);

Json skeleton_to_json(const KGraphSkeleton& s);
KGraphSkeleton skeleton_from_json(const Json& j);

Json action_to_json(const FiniteAbelianAction& a);
FiniteAbelianAction action_from_json(const Json& j);

Json pgraph_to_json(const PGraphPresentation& p);
PGraphPresentation pgraph_from_json(const Json& j);

Json table_to_json(const FiniteCategoryTable& t);
FiniteCategoryTable table_from_json(const Json& j);

Json cocycle_table_to_json(const CocycleTable& t);
/// Accepts additive {0,1} tables and multiplicative {+1,-1} tables.
CocycleTable cocycle_table_from_json(const Json& j);

Json coboundary_to_json(const CoboundaryMap& b);

PvProblem pv_problem_from_json(const Json& j);
Json extension_to_json(const ExtensionResult& e);
Json pv_solution_to_json(const PvSolution& s);

Json limit_to_json(const LimitClassification& c);
/// {"group": presentation, "endo": matrix}
std::pair<Presentation, FgAbHom> limit_problem_from_json(const Json& j);

Json snf_to_json(const SnfDecomposition& s, bool verbose);

// Deterministic text renderings used by the command-line surface.
std::string render_pair(const GradedKPair& p);
std::string render_pv(const PvSolution& s);
std::string render_snf(const SnfDecomposition& s, bool verbose);

}  // namespace gkt
