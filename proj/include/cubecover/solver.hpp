#ifndef CUBECOVER_SOLVER_HPP
#define CUBECOVER_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cubecover/covering.hpp"
#include "cubecover/subcube.hpp"

// Exact minimum (d,l)-covering via set cover over the candidate/target
// incidence, the ground-truth oracle for f at small n.

namespace cubecover {

// Bipartite incidence between candidate l-cubes and target d-cubes, both in
// canonical order. Every candidate covers exactly binom(n-l, d-l) targets.
struct IncidenceInstance {
  Params params;
  std::vector<Subcube> candidates;
  std::vector<Subcube> targets;
  std::vector<std::vector<std::uint32_t>> incidence;  // per candidate, ascending
};

// Materializes the covering relation. Throws ResourceError when candidate,
// target, or incidence counts exceed the in-memory budget.
IncidenceInstance build_incidence(const Params& p);

struct SolveBudget {
  std::uint64_t max_nodes = 100'000'000;
};

struct SolveResult {
  std::uint64_t size = 0;
  CoveringSet cover;
  std::uint64_t nodes_explored = 0;
  bool proved_optimal = false;
};

// Exact branch and bound. Branches on the uncovered target with the fewest
// remaining candidates (ties by canonical index) over those candidates in
// canonical order, with lower-bound pruning ceil(uncovered/max-degree) and
// a greedy initial incumbent. When the node budget runs out the best
// incumbent is returned with proved_optimal = false.
SolveResult solve_min_cover(const IncidenceInstance& inst, SolveBudget budget = {});

// Independent oracle: enumerates candidate subsets by increasing size (then
// lexicographically) and returns the first cover of size <= max_size, or
// nothing. Throws ResourceError when the enumeration explodes.
std::optional<CoveringSet> brute_force_min_cover(const IncidenceInstance& inst,
                                                 std::size_t max_size);

// Greedy cover (most new targets first, ties by canonical index); seeds the
// branch-and-bound incumbent.
std::vector<std::uint32_t> greedy_cover(const IncidenceInstance& inst);

}  // namespace cubecover

#endif  // CUBECOVER_SOLVER_HPP
