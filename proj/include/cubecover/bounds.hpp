#ifndef CUBECOVER_BOUNDS_HPP
#define CUBECOVER_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "cubecover/subcube.hpp"

// Closed-form bound calculators for the minimum covering number f, its
// density c = f / (binom(n,l) * 2^(n-l)), and the polychromatic number pc.
// All stored values are exact integers or rationals.

namespace cubecover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

BigInt binomial(int n, int k);

std::string rational_to_string(const Rational& r);

// Counting lower bound on f: every l-cube lies in binom(n-l, d-l) of the
// binom(n,d)*2^(n-d) target cubes, so at least
// ceil(2^(n-d)*binom(n,d) / binom(n-l,n-d)) members are needed.
std::uint64_t lower_bound_f(const Params& p);

// Bounds on the polychromatic number: the residue coloring gives
// k^r * kprime^(l+1-r) colors; no coloring beats binom(d+1, l+1).
std::pair<std::uint64_t, std::uint64_t> bounds_pc(int d, int l);

// Bounds on the limiting density c: lower 1/(2^(d-l)*binom(d,l)), upper
// ceil((d+1)/(l+1))^-r * floor((d+1)/(l+1))^-(l+1-r) with the residue
// r = (d-l) mod (l+1) taken in [0, l].
std::pair<Rational, Rational> bounds_c(int d, int l);

// Density upper bound when the codimensions n-d and n-l are treated as
// fixed: C / (2^(d-l)*binom(d,l)) where C = ceil(r*ln(n-l) / ln(Q)) with
// r = n-d >= 2 and Q = r^r/(r^r - r!). The ceiling is exact: C is the least
// integer with Q^C >= (n-l)^r. The value is an asymptotic envelope, not a
// finite-n certificate.
Rational c_codim_upper(int n, int d, int l);

// Edge count of Q_n minus the exact (or claimed) f^(1)(n,d); by the
// complement relation this is the largest d-cube-free edge count.
std::uint64_t turan_relation(int n, int d, std::uint64_t f1);

// Exact-arithmetic self-test of the identity
// binom(n,d)*binom(d,d-l) == binom(n,l)*binom(n-l,d-l).
bool verify_binomial_identity(int n, int d, int l);

// The full bound envelope for one parameter triple.
struct BoundReport {
  Params params;
  std::uint64_t f_lower = 0;
  Rational c_lower;
  Rational c_upper;
  std::uint64_t pc_lower = 0;
  std::uint64_t pc_upper = 0;
  int r_color = 0;  // residue of d+1 mod l+1 in (0, l+1] (coloring convention)
  int r_cover = 0;  // residue of d-l mod l+1 in [0, l] (density convention)
  // Present when n-d >= 2; an asymptotic envelope, not finite-n certified.
  std::optional<Rational> c_codim_upper;
  // Present when l == 1: edge budget left over by the covering lower bound.
  std::optional<std::uint64_t> ex_upper;
};

BoundReport bound_report(const Params& p);

}  // namespace cubecover

#endif  // CUBECOVER_BOUNDS_HPP
