#include "cubecover/polychromatic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace cubecover {

ColorScheme scheme(int d, int l) {
  if (!(d > l && l >= 0)) {
    throw std::invalid_argument("scheme: need d > l >= 0, got d=" + std::to_string(d) +
                                " l=" + std::to_string(l));
  }
  ColorScheme s;
  s.d = d;
  s.l = l;
  int q = (d + 1) / (l + 1);
  int rem = (d + 1) % (l + 1);
  if (rem == 0) {
    s.r = l + 1;  // residue taken in (0, l+1], never 0
    s.k = q;
    s.kprime = q;
  } else {
    s.r = rem;
    s.k = q + 1;
    s.kprime = q;
  }
  assert(s.r * s.k + (l + 1 - s.r) * s.kprime == d + 1);
  return s;
}

std::uint64_t palette_size(const ColorScheme& s) {
  std::uint64_t size = 1;
  for (int i = 0; i <= s.l; ++i) {
    size *= static_cast<std::uint64_t>(color_modulus(s, i));
  }
  return size;
}

int color_modulus(const ColorScheme& s, int i) {
  return i < s.r ? s.k : s.kprime;
}

std::vector<ColorTuple> enumerate_colors(const ColorScheme& s) {
  std::vector<ColorTuple> colors;
  ColorTuple current(s.l + 1, 0);
  while (true) {
    colors.push_back(current);
    int i = s.l;
    while (i >= 0 && current[i] == color_modulus(s, i) - 1) {
      current[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++current[i];
  }
  return colors;
}

ColorTuple color_of(const Subcube& q, const ColorScheme& s) {
  if (q.dimension() != s.l) {
    throw std::invalid_argument("color_of: subcube dimension " +
                                std::to_string(q.dimension()) +
                                " does not match scheme l=" + std::to_string(s.l));
  }
  SignatureVector w = signature(q);
  ColorTuple c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    c[i] = w[i] % color_modulus(s, static_cast<int>(i));
  }
  return c;
}

namespace {

void check_color(const ColorScheme& s, const ColorTuple& t, const char* who) {
  if (static_cast<int>(t.size()) != s.l + 1) {
    throw std::invalid_argument(std::string(who) + ": color tuple has " +
                                std::to_string(t.size()) + " entries, expected " +
                                std::to_string(s.l + 1));
  }
  for (int i = 0; i <= s.l; ++i) {
    if (t[i] < 0 || t[i] >= color_modulus(s, i)) {
      throw std::invalid_argument(std::string(who) + ": residue " +
                                  std::to_string(t[i]) + " at position " +
                                  std::to_string(i) + " outside its modulus");
    }
  }
}

}  // namespace

Subcube find_colored_subcube(const Subcube& c, const ColorTuple& target,
                             const ColorScheme& s) {
  if (c.dimension() != s.d) {
    throw std::invalid_argument("find_colored_subcube: cube dimension " +
                                std::to_string(c.dimension()) +
                                " does not match scheme d=" + std::to_string(s.d));
  }
  check_color(s, target, "find_colored_subcube");

  const std::vector<int> a = c.star_coords();  // ascending

  // Free coordinates of the result: strides of k along a for the first r
  // positions, then strides of kprime (1-based positions into a).
  std::vector<int> star_positions;  // 1-based indices into a
  star_positions.reserve(s.l);
  for (int i = 1; i <= s.l; ++i) {
    int pos = i <= s.r ? i * s.k : s.r * s.k + (i - s.r) * s.kprime;
    star_positions.push_back(pos);
  }
  std::uint32_t star = 0;
  for (int pos : star_positions) star |= std::uint32_t{1} << a[pos - 1];

  std::uint32_t one = c.one_mask();
  // Fix the remaining free coordinates of c gap by gap: the total one-count
  // in gap i (ones of c in the gap included) must hit the target residue.
  // Gap i between consecutive chosen coordinates holds modulus-1 spare
  // coordinates, so every residue is reachable.
  for (int gap = 0; gap <= s.l; ++gap) {
    int lo = gap == 0 ? -1 : a[star_positions[gap - 1] - 1];
    int hi = gap == s.l ? c.n() : a[star_positions[gap] - 1];
    int modulus = color_modulus(s, gap);

    int base = 0;
    std::vector<int> spare;
    for (int x = lo + 1; x < hi; ++x) {
      std::uint32_t bit = std::uint32_t{1} << x;
      if (c.one_mask() & bit) ++base;
      if ((c.star_mask() & bit) && !(star & bit)) spare.push_back(x);
    }

    int need = ((target[gap] - base) % modulus + modulus) % modulus;
    assert(need <= static_cast<int>(spare.size()));
    for (int j = 0; j < need; ++j) one |= std::uint32_t{1} << spare[j];
  }

  return Subcube(c.n(), star, one);
}

PolychromaticReport verify_polychromatic(
    int n, const ColorScheme& s,
    const std::function<ColorTuple(const Subcube&)>& coloring) {
  if (n <= s.d || n > kMaxDimension) {
    throw std::invalid_argument("verify_polychromatic: need d < n <= " +
                                std::to_string(kMaxDimension) + ", got n=" +
                                std::to_string(n) + " d=" + std::to_string(s.d));
  }

  const std::vector<ColorTuple> palette = enumerate_colors(s);
  const std::uint64_t colors = palette.size();
  std::vector<bool> seen(colors);

  PolychromaticReport report;
  SubcubeEnumerator targets(n, s.d);
  Subcube c;
  while (targets.next(c)) {
    std::fill(seen.begin(), seen.end(), false);
    std::uint64_t hit = 0;

    // All dimension-l subcubes of c: a choice of l free coordinates plus a
    // 0/1 assignment of the d-l others.
    const std::vector<int> stars = c.star_coords();
    const int d = s.d;
    const int m = d - s.l;
    std::vector<int> pick(s.l);
    for (int i = 0; i < s.l; ++i) pick[i] = i;
    while (true) {
      std::uint32_t sub_star = 0;
      for (int idx : pick) sub_star |= std::uint32_t{1} << stars[idx];
      std::vector<int> rest;
      rest.reserve(m);
      for (int idx = 0; idx < d; ++idx) {
        if (!(sub_star & (std::uint32_t{1} << stars[idx]))) rest.push_back(stars[idx]);
      }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        std::uint32_t one = c.one_mask();
        for (int j = 0; j < m; ++j) {
          if ((bits >> j) & 1) one |= std::uint32_t{1} << rest[j];
        }
        ColorTuple t = coloring(Subcube(n, sub_star, one));
        check_color(s, t, "verify_polychromatic");
        // Mixed-radix index; lexicographic tuple order is index order.
        std::uint64_t index = 0;
        for (int i = 0; i <= s.l; ++i) {
          index = index * static_cast<std::uint64_t>(color_modulus(s, i)) +
                  static_cast<std::uint64_t>(t[i]);
        }
        if (!seen[index]) {
          seen[index] = true;
          if (++hit == colors) break;
        }
      }
      if (hit == colors) break;
      int i = s.l - 1;
      while (i >= 0 && pick[i] == d - s.l + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < s.l; ++j) pick[j] = pick[j - 1] + 1;
    }

    if (hit != colors) {
      for (std::uint64_t i = 0; i < colors; ++i) {
        if (!seen[i]) {
          report.ok = false;
          report.witness = {c, palette[i]};
          return report;
        }
      }
    }
  }
  report.ok = true;
  return report;
}

PolychromaticReport verify_residue_coloring(int n, const ColorScheme& s) {
  return verify_polychromatic(
      n, s, [&s](const Subcube& q) { return color_of(q, s); });
}

CoveringSet color_class(int n, const ColorScheme& s, const ColorTuple& t) {
  if (n <= s.d || n > kMaxDimension) {
    throw std::invalid_argument("color_class: need d < n <= " +
                                std::to_string(kMaxDimension) + ", got n=" +
                                std::to_string(n) + " d=" + std::to_string(s.d));
  }
  check_color(s, t, "color_class");

  CoveringSet cs;
  cs.params = Params{n, s.d, s.l};
  SubcubeEnumerator stream(n, s.l);
  Subcube q;
  while (stream.next(q)) {
    if (color_of(q, s) == t) cs.members.push_back(q);
  }
  return cs;
}

}  // namespace cubecover
