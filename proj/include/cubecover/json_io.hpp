#ifndef CUBECOVER_JSON_IO_HPP
#define CUBECOVER_JSON_IO_HPP

#include <json.hpp>

#include "cubecover/bounds.hpp"
#include "cubecover/covering.hpp"
#include "cubecover/polychromatic.hpp"
#include "cubecover/solver.hpp"

// JSON wire formats shared by the CLI and the test harnesses. Covering
// sets travel as {"n":…, "d":…, "l":…, "members":["01*…", …]}.

namespace cubecover {

nlohmann::json covering_set_to_json(const CoveringSet& cs);
CoveringSet covering_set_from_json(const nlohmann::json& j);

nlohmann::json cover_report_to_json(const CoverReport& report);
nlohmann::json polychromatic_report_to_json(const PolychromaticReport& report,
                                            const ColorScheme& s);
nlohmann::json solve_result_to_json(const SolveResult& result);
nlohmann::json bound_report_to_json(const BoundReport& report);
nlohmann::json scheme_to_json(const ColorScheme& s);

}  // namespace cubecover

#endif  // CUBECOVER_JSON_IO_HPP
