#include "cubecover/json_io.hpp"

#include <string>

namespace cubecover {

using nlohmann::json;

json covering_set_to_json(const CoveringSet& cs) {
  json members = json::array();
  for (const Subcube& q : cs.members) members.push_back(format_subcube(q));
  return json{{"n", cs.params.n},
              {"d", cs.params.d},
              {"l", cs.params.l},
              {"members", std::move(members)}};
}

CoveringSet covering_set_from_json(const json& j) {
  CoveringSet cs;
  cs.params.n = j.at("n").get<int>();
  cs.params.d = j.at("d").get<int>();
  cs.params.l = j.at("l").get<int>();
  for (const auto& m : j.at("members")) {
    cs.members.push_back(parse_subcube(m.get<std::string>()));
  }
  return cs;
}

json cover_report_to_json(const CoverReport& report) {
  json j{{"ok", report.ok}, {"targets_checked", report.targets_checked}};
  if (report.witness) j["witness"] = format_subcube(*report.witness);
  return j;
}

json polychromatic_report_to_json(const PolychromaticReport& report,
                                  const ColorScheme& s) {
  json j{{"ok", report.ok}, {"palette", palette_size(s)}};
  if (report.witness) {
    j["witness"] = json{{"cube", format_subcube(report.witness->first)},
                        {"missing_color", report.witness->second}};
  }
  return j;
}

json solve_result_to_json(const SolveResult& result) {
  json cover = json::array();
  for (const Subcube& q : result.cover.members) cover.push_back(format_subcube(q));
  return json{{"n", result.cover.params.n},
              {"d", result.cover.params.d},
              {"l", result.cover.params.l},
              {"f", result.size},
              {"cover", std::move(cover)},
              {"proved_optimal", result.proved_optimal},
              {"nodes_explored", result.nodes_explored}};
}

json bound_report_to_json(const BoundReport& report) {
  json j{{"n", report.params.n},
         {"d", report.params.d},
         {"l", report.params.l},
         {"f_lower", report.f_lower},
         {"c_lower", rational_to_string(report.c_lower)},
         {"c_upper", rational_to_string(report.c_upper)},
         {"pc_lower", report.pc_lower},
         {"pc_upper", report.pc_upper},
         {"r_color", report.r_color},
         {"r_cover", report.r_cover}};
  if (report.c_codim_upper) {
    j["c_codim_upper"] = rational_to_string(*report.c_codim_upper);
    j["c_codim_note"] = "asymptotic envelope, not finite-n certified";
  }
  if (report.ex_upper) j["ex_upper"] = *report.ex_upper;
  return j;
}

json scheme_to_json(const ColorScheme& s) {
  return json{{"d", s.d},
              {"l", s.l},
              {"r", s.r},
              {"k", s.k},
              {"kprime", s.kprime},
              {"palette", palette_size(s)}};
}

}  // namespace cubecover
