#ifndef CUBECOVER_COVERING_HPP
#define CUBECOVER_COVERING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cubecover/subcube.hpp"

// Constructions of (d,l)-covering sets: collections of l-dimensional
// subcubes of Q_n such that every d-dimensional subcube contains at least
// one of them, plus the exhaustive coverage verifier.

namespace cubecover {

// A (0,1)-labelling of a coordinate set; the dual encoding of a subcube's
// fixed coordinates. ones_mask ⊆ coords_mask holds the coordinates labelled
// 1, the rest of coords_mask is labelled 0, and the complement is free.
struct LabelledSet {
  int n = 0;
  std::uint32_t coords_mask = 0;
  std::uint32_t ones_mask = 0;

  friend bool operator==(const LabelledSet& a, const LabelledSet& b) = default;
};

LabelledSet labelled_from_subcube(const Subcube& q);
Subcube subcube_from_labelled(const LabelledSet& ls);

// A claimed (d,l)-covering set; members are dimension-l subcubes of Q_n,
// duplicate-free.
struct CoveringSet {
  Params params;
  std::vector<Subcube> members;
};

// Throws std::invalid_argument unless params are valid, every member lives
// in Q_n with dimension l, and no member repeats.
void validate_covering_set(const CoveringSet& cs);

// Blocks are k-subsets of {0,...,n-1} (as masks) such that every t-subset
// lies in at least one block.
struct CoveringDesign {
  int n = 0;
  int k = 0;
  int t = 0;
  std::vector<std::uint32_t> blocks;
};

// A partition of a vertex ground set into parts; an r-subset is a
// transversal when it meets every part exactly once.
struct CutPartition {
  std::vector<std::vector<int>> parts;
};

struct CoverReport {
  bool ok = false;
  std::optional<Subcube> witness;  // first uncovered target, canonical order
  std::uint64_t targets_checked = 0;
};

// Optimal cover of all facets (d = n-1) by l-dimensional subcubes, of size
// exactly ceil(2n/(n-l)). Lists the 2n (coordinate, bit) pairs
// (0,0),...,(n-1,0),(0,1),...,(n-1,1) on a cycle, cuts them into
// consecutive windows of length n-l (the last window wraps), and turns each
// window into a labelled set. A window covers the facet fixing coordinate i
// to bit b iff it contains the pair (i,b), and the windows jointly contain
// every pair.
CoveringSet construct_facet_cover(int n, int l);

// Greedy (n,k,t)-covering design: repeatedly adds the k-subset covering the
// most still-uncovered t-subsets, ties broken lexicographically.
CoveringDesign greedy_covering_design(int n, int k, int t);

// Cuts of {0,...,vertex_count-1} into r parts such that every r-subset of
// vertices is a transversal of at least one cut. Starts from a seeded batch
// of uniform random part assignments sized by the probabilistic cut-cover
// bound and appends further random cuts until coverage holds.
std::vector<CutPartition> random_cut_cover(int vertex_count, int r,
                                           std::uint64_t seed);

// For each cut, all 2^r labellings of the block that are constant on the
// cut's parts; identical labellings arising from different cuts appear
// once. Every cut must partition exactly the block's coordinates.
std::vector<LabelledSet> expand_cuts_to_labellings(
    int n, std::uint32_t block_mask, const std::vector<CutPartition>& cuts);

// General (d,l)-covering built from a greedy (n, n-l, n-d)-covering design
// whose blocks are labelled through seeded random cut covers. Members are
// globally deduplicated and canonically sorted.
CoveringSet construct_pipeline_cover(int n, int d, int l, std::uint64_t seed);

// Checks every dimension-d subcube of Q_n against the member list;
// targets_checked reports the full target count binom(n,d)*2^(n-d).
CoverReport verify_covering(const CoveringSet& cs);

}  // namespace cubecover

#endif  // CUBECOVER_COVERING_HPP
