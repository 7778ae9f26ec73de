#ifndef CUBECOVER_SUBCUBE_HPP
#define CUBECOVER_SUBCUBE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Subcubes of the n-dimensional hypercube, encoded as strings over {0,1,*}
// (leftmost character = coordinate 0) or as fixed-width coordinate masks.

namespace cubecover {

// Largest supported ambient dimension; keeps coordinate sets in 32-bit masks
// and full enumerations in memory.
inline constexpr int kMaxDimension = 24;

// Problem parameters: cover every d-dimensional subcube of Q_n by
// l-dimensional subcubes.
struct Params {
  int n = 0;
  int d = 0;
  int l = 0;
};

// Throws std::invalid_argument unless 0 <= l < d < n <= max_n.
void validate_params(const Params& p, int max_n = kMaxDimension);

// Raised by parse_subcube; index() is the offending character position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t index)
      : std::runtime_error(message), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Raised when an operation would exceed its memory or node budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subcube of Q_n: every coordinate is free (star), fixed to 1, or fixed
// to 0. dimension() = number of free coordinates.
class Subcube {
 public:
  Subcube() = default;

  // star and one must be disjoint subsets of the low n bits; the remaining
  // coordinates are fixed to 0.
  Subcube(int n, std::uint32_t star_mask, std::uint32_t one_mask);

  int n() const noexcept { return n_; }
  std::uint32_t star_mask() const noexcept { return star_; }
  std::uint32_t one_mask() const noexcept { return one_; }
  std::uint32_t zero_mask() const noexcept;
  int dimension() const noexcept;

  std::vector<int> star_coords() const;
  std::vector<int> one_coords() const;
  std::vector<int> zero_coords() const;

  friend bool operator==(const Subcube& a, const Subcube& b) = default;

 private:
  int n_ = 0;
  std::uint32_t star_ = 0;
  std::uint32_t one_ = 0;
};

// Text format {0,1,*}^n, character i = coordinate i.
Subcube parse_subcube(std::string_view text);
std::string format_subcube(const Subcube& q);

// True iff the vertex set of lower is contained in that of upper, i.e.
// zero(upper) ⊆ zero(lower) and one(upper) ⊆ one(lower). Both subcubes must
// share the ambient dimension.
bool covers(const Subcube& lower, const Subcube& upper);

// Ones of the subcube counted in the dimension()+1 gaps delimited by the
// sorted free coordinates s_1 < ... < s_l: entry 0 counts ones below s_1,
// entry j the ones strictly between s_j and s_{j+1}, and the last entry the
// ones above s_l. Entries sum to |one_coords()|.
using SignatureVector = std::vector<int>;
SignatureVector signature(const Subcube& q);

// Canonical order: ambient dimension, then star set (lexicographic as a
// sorted index sequence, for equal dimensions), then the fixed-coordinate
// bit pattern read from coordinate 0 onwards.
bool canonical_less(const Subcube& a, const Subcube& b);

// Pattern value of the fixed coordinates in canonical reading order.
std::uint64_t fixed_pattern(const Subcube& q);

// Restartable stream over all dimension-dim subcubes of Q_n in canonical
// order. Yields binom(n,dim) * 2^(n-dim) subcubes.
class SubcubeEnumerator {
 public:
  SubcubeEnumerator(int n, int dim);
  bool next(Subcube& out);
  void reset();
  std::uint64_t total() const noexcept { return total_; }

 private:
  int n_;
  int dim_;
  std::uint64_t total_;
  std::uint64_t pattern_count_;
  std::uint64_t pattern_ = 0;
  std::vector<int> stars_;
  bool done_ = false;
};

// Materialized enumeration; throws ResourceError when the stream would not
// fit the enumeration budget.
std::vector<Subcube> enumerate_subcubes(int n, int dim);

// Exact binomial coefficient in 64 bits; callers keep n small enough that
// no intermediate overflows (n <= 61).
std::uint64_t binomial_u64(int n, int k);

}  // namespace cubecover

#endif  // CUBECOVER_SUBCUBE_HPP
