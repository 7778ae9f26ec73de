#ifndef CUBECOVER_POLYCHROMATIC_HPP
#define CUBECOVER_POLYCHROMATIC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cubecover/covering.hpp"
#include "cubecover/subcube.hpp"

// Residue coloring of the l-dimensional subcubes of Q_n under which every
// d-dimensional subcube sees every color, together with the verifier and
// color-class extraction.

namespace cubecover {

// Parameters of the residue coloring. r is the unique residue of d+1
// modulo l+1 taken in (0, l+1]; k and kprime are ceil((d+1)/(l+1)) and
// floor((d+1)/(l+1)). They satisfy r*k + (l+1-r)*kprime = d+1 and
// d-l = r*(k-1) + (l+1-r)*(kprime-1).
struct ColorScheme {
  int d = 0;
  int l = 0;
  int r = 0;
  int k = 0;
  int kprime = 0;
};

ColorScheme scheme(int d, int l);

// Number of colors the scheme uses: k^r * kprime^(l+1-r).
std::uint64_t palette_size(const ColorScheme& s);

// A color is an (l+1)-tuple of residues; the first r entries live modulo k,
// the rest modulo kprime.
using ColorTuple = std::vector<int>;

// Modulus of tuple position i (0-based).
int color_modulus(const ColorScheme& s, int i);

// All colors of the scheme in lexicographic order.
std::vector<ColorTuple> enumerate_colors(const ColorScheme& s);

// Entry i of the color is signature entry i reduced by the position's
// modulus. q must have dimension l.
ColorTuple color_of(const Subcube& q, const ColorScheme& s);

// A dimension-l subcube of c carrying the target color. The free
// coordinates are picked at fixed strides along the free coordinates of c
// (stride k for the first r, then kprime); each of the remaining free
// coordinates of c is fixed to 0 or 1, gap by gap, so that the gap's
// one-count matches the target residue. c must have dimension d.
Subcube find_colored_subcube(const Subcube& c, const ColorTuple& target,
                             const ColorScheme& s);

struct PolychromaticReport {
  bool ok = false;
  // First failing (target cube, missing color) in canonical order.
  std::optional<std::pair<Subcube, ColorTuple>> witness;
};

// True iff under `coloring` every dimension-d subcube of Q_n contains a
// dimension-l subcube of every color of the scheme.
PolychromaticReport verify_polychromatic(
    int n, const ColorScheme& s,
    const std::function<ColorTuple(const Subcube&)>& coloring);

// Convenience: verify the residue coloring itself.
PolychromaticReport verify_residue_coloring(int n, const ColorScheme& s);

// All dimension-l subcubes of Q_n whose residue color is t, packaged as a
// claimed (d,l)-covering set.
CoveringSet color_class(int n, const ColorScheme& s, const ColorTuple& t);

}  // namespace cubecover

#endif  // CUBECOVER_POLYCHROMATIC_HPP
