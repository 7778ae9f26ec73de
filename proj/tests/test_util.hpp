#ifndef CUBECOVER_TEST_UTIL_HPP
#define CUBECOVER_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "cubecover/subcube.hpp"

namespace cubecover::test {

// All vertices of a subcube as n-bit masks; the independent expansion used
// to cross-check containment.
inline std::vector<std::uint32_t> vertex_set(const Subcube& q) {
  std::vector<int> stars = q.star_coords();
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << stars.size());
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << stars.size()); ++bits) {
    std::uint32_t v = q.one_mask();
    for (std::size_t i = 0; i < stars.size(); ++i) {
      if ((bits >> i) & 1) v |= std::uint32_t{1} << stars[i];
    }
    out.push_back(v);
  }
  return out;
}

// Vertex-set inclusion, the oracle for covers().
inline bool vertex_subset(const Subcube& inner, const Subcube& outer) {
  std::vector<std::uint32_t> in = vertex_set(inner);
  std::vector<std::uint32_t> out = vertex_set(outer);
  for (std::uint32_t v : in) {
    bool found = false;
    for (std::uint32_t w : out) {
      if (v == w) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Every subcube of Q_n across all dimensions.
inline std::vector<Subcube> all_subcubes(int n) {
  std::vector<Subcube> out;
  for (int dim = 0; dim <= n; ++dim) {
    for (const Subcube& q : enumerate_subcubes(n, dim)) out.push_back(q);
  }
  return out;
}

}  // namespace cubecover::test

#endif  // CUBECOVER_TEST_UTIL_HPP
