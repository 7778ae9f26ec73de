#include <doctest.h>

#include "cubecover/bounds.hpp"
#include "cubecover/covering.hpp"
#include "cubecover/polychromatic.hpp"
#include "cubecover/solver.hpp"

using namespace cubecover;

TEST_CASE("incidence dimensions and degrees") {
  IncidenceInstance i321 = build_incidence(Params{3, 2, 1});
  CHECK(i321.candidates.size() == 12);
  CHECK(i321.targets.size() == 6);
  for (const auto& row : i321.incidence) CHECK(row.size() == 2);

  IncidenceInstance i432 = build_incidence(Params{4, 3, 2});
  CHECK(i432.candidates.size() == 24);
  CHECK(i432.targets.size() == 8);
  for (const auto& row : i432.incidence) CHECK(row.size() == 2);

  IncidenceInstance i531 = build_incidence(Params{5, 3, 1});
  CHECK(i531.candidates.size() == 80);
  CHECK(i531.targets.size() == 40);
  for (const auto& row : i531.incidence) CHECK(row.size() == 6);
}

TEST_CASE("incidence rows agree with the containment predicate") {
  IncidenceInstance inst = build_incidence(Params{4, 2, 1});
  for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
    std::size_t k = 0;
    for (std::size_t t = 0; t < inst.targets.size(); ++t) {
      bool listed = k < inst.incidence[c].size() && inst.incidence[c][k] == t;
      CHECK(covers(inst.candidates[c], inst.targets[t]) == listed);
      if (listed) ++k;
    }
    CHECK(k == inst.incidence[c].size());
  }
}

TEST_CASE("incidence rejects oversized instances") {
  CHECK_THROWS_AS(build_incidence(Params{24, 12, 6}), ResourceError);
}

TEST_CASE("solver matches the facet optimum") {
  SolveResult r321 = solve_min_cover(build_incidence(Params{3, 2, 1}));
  CHECK(r321.size == 3);
  CHECK(r321.proved_optimal);
  CHECK(verify_covering(r321.cover).ok);

  SolveResult r432 = solve_min_cover(build_incidence(Params{4, 3, 2}));
  CHECK(r432.size == 4);
  CHECK(r432.proved_optimal);
  CHECK(verify_covering(r432.cover).ok);
}

TEST_CASE("solver meets the counting bound at (4,2,1)") {
  IncidenceInstance inst = build_incidence(Params{4, 2, 1});
  SolveResult result = solve_min_cover(inst);
  CHECK(result.size >= lower_bound_f(inst.params));
  CHECK(result.proved_optimal);
  CHECK(verify_covering(result.cover).ok);
}

TEST_CASE("solver never beats a constructive cover") {
  for (int n = 3; n <= 5; ++n) {
    for (int l = 0; l <= n - 2; ++l) {
      SolveResult result = solve_min_cover(build_incidence(Params{n, n - 1, l}));
      CHECK(result.size <= construct_facet_cover(n, l).members.size());
      CHECK(result.size >= lower_bound_f(Params{n, n - 1, l}));
    }
  }
}

TEST_CASE("brute force agrees with branch and bound on n <= 4") {
  struct Case {
    int n, d, l;
  };
  for (Case c : {Case{3, 2, 1}, Case{4, 2, 1}, Case{4, 3, 1}, Case{4, 3, 2}}) {
    IncidenceInstance inst = build_incidence(Params{c.n, c.d, c.l});
    SolveResult solved = solve_min_cover(inst);
    REQUIRE(solved.proved_optimal);
    auto brute = brute_force_min_cover(inst, solved.size);
    REQUIRE(brute.has_value());
    CAPTURE(c.n);
    CAPTURE(c.d);
    CAPTURE(c.l);
    CHECK(brute->members.size() == solved.size);
    CHECK(verify_covering(*brute).ok);
    if (solved.size > 1) {
      CHECK_FALSE(brute_force_min_cover(inst, solved.size - 1).has_value());
    }
  }
}

TEST_CASE("brute force with max_size 0 finds nothing") {
  IncidenceInstance inst = build_incidence(Params{3, 2, 1});
  CHECK_FALSE(brute_force_min_cover(inst, 0).has_value());
}

TEST_CASE("solver is deterministic") {
  IncidenceInstance inst = build_incidence(Params{4, 2, 1});
  SolveResult a = solve_min_cover(inst);
  SolveResult b = solve_min_cover(inst);
  CHECK(a.size == b.size);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.proved_optimal == b.proved_optimal);
  REQUIRE(a.cover.members.size() == b.cover.members.size());
  for (std::size_t i = 0; i < a.cover.members.size(); ++i) {
    CHECK(a.cover.members[i] == b.cover.members[i]);
  }
}

TEST_CASE("exhausted node budget is reported") {
  IncidenceInstance inst = build_incidence(Params{5, 3, 2});
  SolveResult result = solve_min_cover(inst, SolveBudget{10});
  if (!result.proved_optimal) {
    CHECK(result.nodes_explored >= 10);
  }
  CHECK(verify_covering(result.cover).ok);
  CHECK(result.size >= lower_bound_f(inst.params));
}

TEST_CASE("solver never beats pipeline or color-class covers") {
  const Params p{5, 3, 1};
  SolveResult solved = solve_min_cover(build_incidence(p));
  REQUIRE(solved.proved_optimal);

  CoveringSet pipeline = construct_pipeline_cover(p.n, p.d, p.l, 11);
  CHECK(solved.size <= pipeline.members.size());

  ColorScheme s = scheme(p.d, p.l);
  for (const ColorTuple& t : enumerate_colors(s)) {
    CoveringSet klass = color_class(p.n, s, t);
    CHECK(solved.size <= klass.members.size());
  }
}

TEST_CASE("exact densities stay within [c_lower, 1]") {
  struct Case {
    int n, d, l;
  };
  for (Case c : {Case{3, 2, 1}, Case{4, 2, 1}, Case{4, 3, 1}, Case{4, 3, 2},
                 Case{5, 4, 1}, Case{5, 4, 2}, Case{5, 4, 3}}) {
    SolveResult solved = solve_min_cover(build_incidence(Params{c.n, c.d, c.l}));
    REQUIRE(solved.proved_optimal);
    Rational density(BigInt(solved.size),
                     binomial(c.n, c.l) * BigInt(1ull << (c.n - c.l)));
    CHECK(density >= bounds_c(c.d, c.l).first);
    CHECK(density <= Rational(BigInt(1), BigInt(1)));
  }
}

TEST_CASE("density is non-decreasing from n=3 to n=4 at d=2") {
  SolveResult f32 = solve_min_cover(build_incidence(Params{3, 2, 1}));
  SolveResult f42 = solve_min_cover(build_incidence(Params{4, 2, 1}));
  REQUIRE(f32.proved_optimal);
  REQUIRE(f42.proved_optimal);
  Rational c32(BigInt(f32.size), BigInt(12));  // binom(3,1)*2^2
  Rational c42(BigInt(f42.size), BigInt(32));  // binom(4,1)*2^3
  CHECK(c32 <= c42);
}
