#include <doctest.h>

#include "cubecover/json_io.hpp"

using namespace cubecover;
using nlohmann::json;

TEST_CASE("covering sets round-trip through JSON") {
  CoveringSet cs = construct_facet_cover(4, 2);
  json j = covering_set_to_json(cs);
  CHECK(j.at("n") == 4);
  CHECK(j.at("d") == 3);
  CHECK(j.at("l") == 2);
  CoveringSet back = covering_set_from_json(j);
  CHECK(back.params.n == cs.params.n);
  REQUIRE(back.members.size() == cs.members.size());
  for (std::size_t i = 0; i < cs.members.size(); ++i) {
    CHECK(back.members[i] == cs.members[i]);
  }
}

TEST_CASE("covering set JSON schema is exactly n,d,l,members") {
  json j = covering_set_to_json(construct_facet_cover(3, 1));
  CHECK(j.size() == 4);
  CHECK(j.contains("members"));
  CHECK(j.at("members").size() == 3);
}

TEST_CASE("report serializers carry witnesses") {
  CoveringSet empty;
  empty.params = Params{3, 2, 1};
  json bad = cover_report_to_json(verify_covering(empty));
  CHECK(bad.at("ok") == false);
  CHECK(bad.at("witness") == "**0");
  CHECK(bad.at("targets_checked") == 6);

  json solved = solve_result_to_json(solve_min_cover(build_incidence(Params{3, 2, 1})));
  CHECK(solved.at("f") == 3);
  CHECK(solved.at("proved_optimal") == true);
  CHECK(solved.at("cover").size() == 3);

  json bounds = bound_report_to_json(bound_report(Params{4, 2, 1}));
  CHECK(bounds.at("f_lower") == 8);
  CHECK(bounds.at("c_lower") == "1/4");
  CHECK(bounds.at("c_upper") == "1/2");
  CHECK(bounds.at("ex_upper") == 24);
}
