#include "cubecover/covering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <string>

namespace cubecover {

namespace {

std::uint32_t low_bits(int n) {
  return n >= 32 ? 0xffffffffu : (std::uint32_t{1} << n) - 1;
}

// Unbiased uniform draw from [0, bound) off a fully specified engine, so
// outputs are identical across platforms (std::uniform_int_distribution is
// not portable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

// All size-k subsets of {0,...,n-1} as masks, lexicographic by sorted
// index sequence.
std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int x : c) mask |= std::uint32_t{1} << x;
    out.push_back(mask);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace

LabelledSet labelled_from_subcube(const Subcube& q) {
  return LabelledSet{q.n(), static_cast<std::uint32_t>(q.one_mask() | q.zero_mask()),
                     q.one_mask()};
}

Subcube subcube_from_labelled(const LabelledSet& ls) {
  if ((ls.ones_mask & ~ls.coords_mask) != 0) {
    throw std::invalid_argument("labelled set: labels outside the coordinate set");
  }
  std::uint32_t star = low_bits(ls.n) & ~ls.coords_mask;
  return Subcube(ls.n, star, ls.ones_mask);
}

void validate_covering_set(const CoveringSet& cs) {
  validate_params(cs.params);
  for (const Subcube& q : cs.members) {
    if (q.n() != cs.params.n) {
      throw std::invalid_argument("covering set: member ambient dimension " +
                                  std::to_string(q.n()) + " != n=" +
                                  std::to_string(cs.params.n));
    }
    if (q.dimension() != cs.params.l) {
      throw std::invalid_argument("covering set: member " + format_subcube(q) +
                                  " has dimension " + std::to_string(q.dimension()) +
                                  ", expected l=" + std::to_string(cs.params.l));
    }
  }
  std::vector<Subcube> sorted = cs.members;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("covering set: duplicate members");
  }
}

CoveringSet construct_facet_cover(int n, int l) {
  if (n < 2 || n > kMaxDimension) {
    throw std::invalid_argument("facet cover: n out of range: " + std::to_string(n));
  }
  if (l < 0 || l > n - 2) {
    throw std::invalid_argument("facet cover: need 0 <= l <= n-2, got l=" +
                                std::to_string(l));
  }
  const int m = n - l;
  const int windows = (2 * n + m - 1) / m;
  CoveringSet cs;
  cs.params = Params{n, n - 1, l};
  cs.members.reserve(windows);
  for (int w = 0; w < windows; ++w) {
    LabelledSet ls{n, 0, 0};
    for (int j = 0; j < m; ++j) {
      int pos = (w * m + j) % (2 * n);
      int coord = pos % n;
      int bit = pos / n;
      ls.coords_mask |= std::uint32_t{1} << coord;
      if (bit) ls.ones_mask |= std::uint32_t{1} << coord;
    }
    cs.members.push_back(subcube_from_labelled(ls));
  }
  return cs;
}

CoveringDesign greedy_covering_design(int n, int k, int t) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("covering design: n out of range: " + std::to_string(n));
  }
  if (!(1 <= t && t < k && k <= n)) {
    throw std::invalid_argument("covering design: need 1 <= t < k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k) +
                                " t=" + std::to_string(t));
  }

  const std::vector<std::uint32_t> t_sets = subsets_of_size(n, t);
  const std::vector<std::uint32_t> k_sets = subsets_of_size(n, k);
  std::vector<bool> covered(t_sets.size(), false);
  std::size_t remaining = t_sets.size();

  CoveringDesign design{n, k, t, {}};
  while (remaining > 0) {
    std::uint32_t best_block = 0;
    std::size_t best_gain = 0;
    for (std::uint32_t block : k_sets) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < t_sets.size(); ++i) {
        if (!covered[i] && (t_sets[i] & ~block) == 0) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_block = block;
      }
    }
    design.blocks.push_back(best_block);
    for (std::size_t i = 0; i < t_sets.size(); ++i) {
      if (!covered[i] && (t_sets[i] & ~best_block) == 0) {
        covered[i] = true;
        --remaining;
      }
    }
  }
  return design;
}

namespace {

bool cut_covers(const std::vector<int>& assignment, std::uint32_t subset, int r) {
  std::uint32_t seen = 0;
  std::uint32_t s = subset;
  while (s != 0) {
    int v = std::countr_zero(s);
    s &= s - 1;
    std::uint32_t part_bit = std::uint32_t{1} << assignment[v];
    if (seen & part_bit) return false;
    seen |= part_bit;
  }
  return std::popcount(seen) == r;
}

CutPartition assignment_to_cut(const std::vector<int>& assignment, int r) {
  CutPartition cut;
  cut.parts.assign(r, {});
  for (int v = 0; v < static_cast<int>(assignment.size()); ++v) {
    cut.parts[assignment[v]].push_back(v);
  }
  return cut;
}

}  // namespace

std::vector<CutPartition> random_cut_cover(int vertex_count, int r,
                                           std::uint64_t seed) {
  if (vertex_count < 1 || vertex_count > kMaxDimension) {
    throw std::invalid_argument("cut cover: vertex count out of range: " +
                                std::to_string(vertex_count));
  }
  if (r < 1 || r > vertex_count) {
    throw std::invalid_argument("cut cover: need 1 <= r <= vertex count, got r=" +
                                std::to_string(r));
  }

  if (r == 1) {
    std::vector<int> all(vertex_count);
    for (int v = 0; v < vertex_count; ++v) all[v] = 0;
    return {assignment_to_cut(all, 1)};
  }
  if (r == vertex_count) {
    std::vector<int> singleton(vertex_count);
    for (int v = 0; v < vertex_count; ++v) singleton[v] = v;
    return {assignment_to_cut(singleton, r)};
  }

  // A random cut makes a fixed r-set a transversal with probability
  // p = r!/r^r, so ~ r/(-ln(1-p)) * ln(#vertices) cuts suffice in
  // expectation; one extra cut cuts down on retries. Coverage is checked
  // outright and topped up, so the estimate only sizes the first batch.
  double p = 1.0;
  for (int i = 1; i <= r; ++i) p *= static_cast<double>(i) / r;
  double c = static_cast<double>(r) / (-std::log1p(-p)) + 1.0;
  int initial = static_cast<int>(std::ceil(c * std::log(vertex_count)));
  initial = std::max(initial, 1);

  std::mt19937_64 rng(seed);
  auto draw_assignment = [&]() {
    std::vector<int> a(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
      a[v] = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(r)));
    }
    return a;
  };

  std::vector<std::vector<int>> assignments;
  assignments.reserve(initial);
  for (int i = 0; i < initial; ++i) assignments.push_back(draw_assignment());

  std::vector<std::uint32_t> uncovered;
  for (std::uint32_t s : subsets_of_size(vertex_count, r)) {
    bool hit = false;
    for (const auto& a : assignments) {
      if (cut_covers(a, s, r)) {
        hit = true;
        break;
      }
    }
    if (!hit) uncovered.push_back(s);
  }

  while (!uncovered.empty()) {
    std::vector<int> a = draw_assignment();
    std::vector<std::uint32_t> still;
    for (std::uint32_t s : uncovered) {
      if (!cut_covers(a, s, r)) still.push_back(s);
    }
    if (still.size() < uncovered.size()) {
      assignments.push_back(std::move(a));
      uncovered = std::move(still);
    }
  }

  std::vector<CutPartition> cuts;
  cuts.reserve(assignments.size());
  for (const auto& a : assignments) cuts.push_back(assignment_to_cut(a, r));
  return cuts;
}

std::vector<LabelledSet> expand_cuts_to_labellings(
    int n, std::uint32_t block_mask, const std::vector<CutPartition>& cuts) {
  std::vector<LabelledSet> out;
  std::set<std::uint32_t> seen;  // ones masks; the block is fixed
  for (const CutPartition& cut : cuts) {
    std::uint32_t ground = 0;
    std::vector<std::uint32_t> part_masks;
    part_masks.reserve(cut.parts.size());
    for (const auto& part : cut.parts) {
      std::uint32_t pm = 0;
      for (int v : part) {
        if (v < 0 || v >= kMaxDimension) {
          throw std::invalid_argument("cut: vertex out of range: " + std::to_string(v));
        }
        std::uint32_t bit = std::uint32_t{1} << v;
        if ((ground & bit) || (bit & ~block_mask)) {
          throw std::invalid_argument("cut does not partition the block's coordinates");
        }
        ground |= bit;
        pm |= bit;
      }
      part_masks.push_back(pm);
    }
    if (ground != block_mask) {
      throw std::invalid_argument("cut does not partition the block's coordinates");
    }

    const std::size_t r = part_masks.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits) {
      std::uint32_t ones = 0;
      for (std::size_t j = 0; j < r; ++j) {
        if ((bits >> j) & 1) ones |= part_masks[j];
      }
      if (seen.insert(ones).second) {
        out.push_back(LabelledSet{n, block_mask, ones});
      }
    }
  }
  return out;
}

CoveringSet construct_pipeline_cover(int n, int d, int l, std::uint64_t seed) {
  validate_params(Params{n, d, l});

  CoveringDesign design = greedy_covering_design(n, n - l, n - d);

  std::vector<Subcube> members;
  for (std::size_t idx = 0; idx < design.blocks.size(); ++idx) {
    std::uint32_t block = design.blocks[idx];
    std::vector<int> block_coords;
    for (int v = 0; v < n; ++v) {
      if (block & (std::uint32_t{1} << v)) block_coords.push_back(v);
    }
    std::vector<CutPartition> cuts =
        random_cut_cover(n - l, n - d, seed ^ static_cast<std::uint64_t>(idx));
    // The cuts partition {0,...,n-l-1}; remap onto the block's coordinates.
    for (CutPartition& cut : cuts) {
      for (auto& part : cut.parts) {
        for (int& v : part) v = block_coords[v];
      }
    }
    for (const LabelledSet& ls : expand_cuts_to_labellings(n, block, cuts)) {
      members.push_back(subcube_from_labelled(ls));
    }
  }

  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());

  CoveringSet cs;
  cs.params = Params{n, d, l};
  cs.members = std::move(members);
  return cs;
}

CoverReport verify_covering(const CoveringSet& cs) {
  validate_covering_set(cs);
  CoverReport report;
  SubcubeEnumerator targets(cs.params.n, cs.params.d);
  report.targets_checked = targets.total();
  Subcube target;
  while (targets.next(target)) {
    bool hit = false;
    for (const Subcube& member : cs.members) {
      if (covers(member, target)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      report.ok = false;
      report.witness = target;
      return report;
    }
  }
  report.ok = true;
  return report;
}

}  // namespace cubecover
