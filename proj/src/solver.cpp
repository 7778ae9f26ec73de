#include "cubecover/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "cubecover/bounds.hpp"

namespace cubecover {

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxTargets = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxIncidenceEntries = std::uint64_t{1} << 26;

// Lexicographic rank of a sorted index combination among the size-k
// subsets of {0,...,n-1}.
std::uint64_t combination_rank(const std::vector<int>& coords, int n) {
  const int k = static_cast<int>(coords.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int j = prev + 1; j < coords[i]; ++j) {
      rank += binomial_u64(n - 1 - j, k - 1 - i);
    }
    prev = coords[i];
  }
  return rank;
}

std::uint64_t target_index(const Subcube& q) {
  const std::uint64_t patterns = std::uint64_t{1} << (q.n() - q.dimension());
  return combination_rank(q.star_coords(), q.n()) * patterns + fixed_pattern(q);
}

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(std::size_t bits) { return Bitset((bits + 63) / 64, 0); }

void set_bit(Bitset& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::size_t count_bits(const Bitset& b) {
  std::size_t total = 0;
  for (std::uint64_t w : b) total += std::popcount(w);
  return total;
}

std::size_t count_and(const Bitset& a, const Bitset& b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace

IncidenceInstance build_incidence(const Params& p) {
  validate_params(p);

  const std::uint64_t candidate_count =
      binomial_u64(p.n, p.l) << (p.n - p.l);
  const std::uint64_t target_count = binomial_u64(p.n, p.d) << (p.n - p.d);
  const std::uint64_t degree = binomial_u64(p.n - p.l, p.d - p.l);
  if (candidate_count > kMaxCandidates || target_count > kMaxTargets ||
      candidate_count * degree > kMaxIncidenceEntries) {
    throw ResourceError(
        "incidence: instance too large (" + std::to_string(candidate_count) +
        " candidates, " + std::to_string(target_count) + " targets, " +
        std::to_string(candidate_count * degree) + " incidences)");
  }

  IncidenceInstance inst;
  inst.params = p;
  inst.candidates = enumerate_subcubes(p.n, p.l);
  inst.targets = enumerate_subcubes(p.n, p.d);
  inst.incidence.resize(inst.candidates.size());

  // The targets containing candidate q arise by freeing d-l of its fixed
  // coordinates; their canonical indices are computed arithmetically.
  const int extra = p.d - p.l;
  for (std::size_t ci = 0; ci < inst.candidates.size(); ++ci) {
    const Subcube& q = inst.candidates[ci];
    std::vector<int> fixed = q.zero_coords();
    {
      std::vector<int> ones = q.one_coords();
      fixed.insert(fixed.end(), ones.begin(), ones.end());
      std::sort(fixed.begin(), fixed.end());
    }
    std::vector<std::uint32_t>& row = inst.incidence[ci];
    row.reserve(degree);
    std::vector<int> pick(extra);
    for (int i = 0; i < extra; ++i) pick[i] = i;
    while (true) {
      std::uint32_t freed = 0;
      for (int idx : pick) freed |= std::uint32_t{1} << fixed[idx];
      Subcube target(p.n, q.star_mask() | freed, q.one_mask() & ~freed);
      row.push_back(static_cast<std::uint32_t>(target_index(target)));
      int i = extra - 1;
      while (i >= 0 && pick[i] == static_cast<int>(fixed.size()) - extra + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(row.begin(), row.end());
  }
  return inst;
}

std::vector<std::uint32_t> greedy_cover(const IncidenceInstance& inst) {
  const std::size_t T = inst.targets.size();
  std::vector<bool> covered(T, false);
  std::size_t remaining = T;
  std::vector<std::uint32_t> chosen;
  while (remaining > 0) {
    std::size_t best_gain = 0;
    std::uint32_t best_c = 0;
    for (std::uint32_t c = 0; c < inst.candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::uint32_t t : inst.incidence[c]) {
        if (!covered[t]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_c = c;
      }
    }
    chosen.push_back(best_c);
    for (std::uint32_t t : inst.incidence[best_c]) {
      if (!covered[t]) {
        covered[t] = true;
        --remaining;
      }
    }
  }
  return chosen;
}

namespace {

struct Search {
  const IncidenceInstance& inst;
  std::size_t T, C;
  std::vector<Bitset> cand_cover;                    // candidate -> target bitset
  std::vector<std::vector<std::uint32_t>> by_target;  // target -> candidate ids
  std::vector<char> available;
  Bitset uncovered;
  std::vector<std::uint32_t> chosen;
  std::vector<std::uint32_t> best;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
  bool budget_hit = false;
  std::size_t root_lb;

  explicit Search(const IncidenceInstance& i, std::uint64_t budget)
      : inst(i), T(i.targets.size()), C(i.candidates.size()), max_nodes(budget) {
    cand_cover.assign(C, make_bitset(T));
    by_target.assign(T, {});
    for (std::size_t c = 0; c < C; ++c) {
      for (std::uint32_t t : inst.incidence[c]) {
        set_bit(cand_cover[c], t);
        by_target[t].push_back(static_cast<std::uint32_t>(c));
      }
    }
    available.assign(C, 1);
    uncovered = make_bitset(T);
    for (std::size_t t = 0; t < T; ++t) set_bit(uncovered, t);
  }

  void dfs() {
    if (budget_hit || best.size() == root_lb) return;
    const std::size_t u = count_bits(uncovered);
    if (u == 0) {
      if (chosen.size() < best.size()) best = chosen;
      return;
    }

    std::size_t maxdeg = 0;
    for (std::size_t c = 0; c < C; ++c) {
      if (!available[c]) continue;
      maxdeg = std::max(maxdeg, count_and(cand_cover[c], uncovered));
    }
    if (maxdeg == 0) return;
    if (chosen.size() + (u + maxdeg - 1) / maxdeg >= best.size()) return;

    // Fail-first: the uncovered target with the fewest live candidates.
    std::size_t pick = T;
    std::size_t pick_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t w = 0; w < uncovered.size() && pick_count > 1; ++w) {
      std::uint64_t word = uncovered[w];
      while (word != 0) {
        const std::size_t t = (w << 6) + std::countr_zero(word);
        word &= word - 1;
        std::size_t cnt = 0;
        for (std::uint32_t c : by_target[t]) cnt += available[c] ? 1 : 0;
        if (cnt < pick_count) {
          pick_count = cnt;
          pick = t;
          if (cnt <= 1) break;
        }
      }
    }
    if (pick_count == 0) return;

    std::vector<std::uint32_t> branch;
    branch.reserve(pick_count);
    for (std::uint32_t c : by_target[pick]) {
      if (available[c]) branch.push_back(c);
    }

    std::size_t excluded = 0;
    for (std::uint32_t c : branch) {
      if (++nodes > max_nodes) {
        budget_hit = true;
        break;
      }
      Bitset removed(uncovered.size());
      for (std::size_t w = 0; w < uncovered.size(); ++w) {
        removed[w] = uncovered[w] & cand_cover[c][w];
        uncovered[w] &= ~cand_cover[c][w];
      }
      chosen.push_back(c);
      dfs();
      chosen.pop_back();
      for (std::size_t w = 0; w < uncovered.size(); ++w) uncovered[w] |= removed[w];
      if (budget_hit || best.size() == root_lb) break;
      // Later branches search covers avoiding this candidate.
      available[c] = 0;
      ++excluded;
    }
    for (std::size_t i = 0; i < excluded; ++i) available[branch[i]] = 1;
  }
};

}  // namespace

SolveResult solve_min_cover(const IncidenceInstance& inst, SolveBudget budget) {
  const std::size_t T = inst.targets.size();
  const std::uint64_t degree = binomial_u64(inst.params.n - inst.params.l,
                                            inst.params.d - inst.params.l);
  const std::size_t root_lb = static_cast<std::size_t>(
      std::max<std::uint64_t>((T + degree - 1) / degree, lower_bound_f(inst.params)));

  SolveResult result;
  std::vector<std::uint32_t> incumbent = greedy_cover(inst);

  if (incumbent.size() > root_lb) {
    Search search(inst, budget.max_nodes);
    search.best = incumbent;
    search.root_lb = root_lb;
    search.dfs();
    incumbent = search.best;
    result.nodes_explored = search.nodes;
    result.proved_optimal = !search.budget_hit;
  } else {
    result.proved_optimal = true;
  }

  std::sort(incumbent.begin(), incumbent.end());
  result.size = incumbent.size();
  result.cover.params = inst.params;
  result.cover.members.reserve(incumbent.size());
  for (std::uint32_t c : incumbent) result.cover.members.push_back(inst.candidates[c]);
  return result;
}

std::optional<CoveringSet> brute_force_min_cover(const IncidenceInstance& inst,
                                                 std::size_t max_size) {
  const std::size_t T = inst.targets.size();
  const std::size_t C = inst.candidates.size();
  const std::uint64_t degree = binomial_u64(inst.params.n - inst.params.l,
                                            inst.params.d - inst.params.l);

  std::vector<Bitset> cand_cover(C, make_bitset(T));
  for (std::size_t c = 0; c < C; ++c) {
    for (std::uint32_t t : inst.incidence[c]) set_bit(cand_cover[c], t);
  }

  constexpr std::uint64_t kMaxSteps = 500'000'000;
  std::uint64_t steps = 0;
  std::vector<std::uint32_t> chosen;

  // First cover found at the smallest size, lexicographic within a size.
  auto extend = [&](auto&& self, std::size_t start, std::size_t remaining,
                    const Bitset& uncovered, std::size_t uncovered_count) -> bool {
    if (uncovered_count == 0) return true;
    if (remaining == 0) return false;
    if (remaining * degree < uncovered_count) return false;
    for (std::size_t c = start; c < C; ++c) {
      if (++steps > kMaxSteps) {
        throw ResourceError("brute force: enumeration exceeded " +
                            std::to_string(kMaxSteps) + " steps");
      }
      std::size_t hit = count_and(cand_cover[c], uncovered);
      if (hit == 0 && uncovered_count > 0) continue;
      Bitset next = uncovered;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] &= ~cand_cover[c][w];
      chosen.push_back(static_cast<std::uint32_t>(c));
      if (self(self, c + 1, remaining - 1, next, uncovered_count - hit)) return true;
      chosen.pop_back();
    }
    return false;
  };

  Bitset all = make_bitset(T);
  for (std::size_t t = 0; t < T; ++t) set_bit(all, t);

  for (std::size_t s = 0; s <= max_size; ++s) {
    chosen.clear();
    if (extend(extend, 0, s, all, T)) {
      CoveringSet cover;
      cover.params = inst.params;
      for (std::uint32_t c : chosen) cover.members.push_back(inst.candidates[c]);
      return cover;
    }
  }
  return std::nullopt;
}

}  // namespace cubecover
