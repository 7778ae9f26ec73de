#include "cubecover/subcube.hpp"

#include <algorithm>
#include <bit>

namespace cubecover {

namespace {

std::uint32_t low_bits(int n) {
  return n >= 32 ? 0xffffffffu : (std::uint32_t{1} << n) - 1;
}

std::vector<int> mask_coords(std::uint32_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    int c = std::countr_zero(mask);
    out.push_back(c);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

void validate_params(const Params& p, int max_n) {
  if (p.n > max_n) {
    throw std::invalid_argument("params: n = " + std::to_string(p.n) +
                                " exceeds maximum " + std::to_string(max_n));
  }
  if (!(0 <= p.l && p.l < p.d && p.d < p.n)) {
    throw std::invalid_argument("params: need 0 <= l < d < n, got n=" +
                                std::to_string(p.n) + " d=" + std::to_string(p.d) +
                                " l=" + std::to_string(p.l));
  }
}

Subcube::Subcube(int n, std::uint32_t star_mask, std::uint32_t one_mask)
    : n_(n), star_(star_mask), one_(one_mask) {
  if (n < 0 || n > kMaxDimension) {
    throw std::invalid_argument("subcube: ambient dimension out of range: " +
                                std::to_string(n));
  }
  std::uint32_t valid = low_bits(n);
  if ((star_ & ~valid) != 0 || (one_ & ~valid) != 0) {
    throw std::invalid_argument("subcube: coordinate mask exceeds ambient dimension");
  }
  if ((star_ & one_) != 0) {
    throw std::invalid_argument("subcube: star and one coordinates overlap");
  }
}

std::uint32_t Subcube::zero_mask() const noexcept {
  return low_bits(n_) & ~(star_ | one_);
}

int Subcube::dimension() const noexcept { return std::popcount(star_); }

std::vector<int> Subcube::star_coords() const { return mask_coords(star_); }
std::vector<int> Subcube::one_coords() const { return mask_coords(one_); }
std::vector<int> Subcube::zero_coords() const { return mask_coords(zero_mask()); }

Subcube parse_subcube(std::string_view text) {
  if (text.empty()) {
    throw ParseError("subcube string is empty", 0);
  }
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw ParseError("subcube string longer than maximum dimension " +
                         std::to_string(kMaxDimension),
                     kMaxDimension);
  }
  std::uint32_t star = 0;
  std::uint32_t one = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '*':
        star |= std::uint32_t{1} << i;
        break;
      case '1':
        one |= std::uint32_t{1} << i;
        break;
      case '0':
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, text[i]) +
                             "' at index " + std::to_string(i),
                         i);
    }
  }
  return Subcube(static_cast<int>(text.size()), star, one);
}

std::string format_subcube(const Subcube& q) {
  std::string out(static_cast<std::size_t>(q.n()), '0');
  for (int i = 0; i < q.n(); ++i) {
    std::uint32_t bit = std::uint32_t{1} << i;
    if (q.star_mask() & bit) {
      out[i] = '*';
    } else if (q.one_mask() & bit) {
      out[i] = '1';
    }
  }
  return out;
}

bool covers(const Subcube& lower, const Subcube& upper) {
  if (lower.n() != upper.n()) {
    throw std::invalid_argument("covers: ambient dimensions differ (" +
                                std::to_string(lower.n()) + " vs " +
                                std::to_string(upper.n()) + ")");
  }
  return (upper.zero_mask() & ~lower.zero_mask()) == 0 &&
         (upper.one_mask() & ~lower.one_mask()) == 0;
}

SignatureVector signature(const Subcube& q) {
  std::vector<int> stars = q.star_coords();
  SignatureVector w(stars.size() + 1, 0);
  std::uint32_t ones = q.one_mask();
  while (ones != 0) {
    int x = std::countr_zero(ones);
    ones &= ones - 1;
    // Gap index: number of star coordinates below x.
    std::size_t gap = 0;
    while (gap < stars.size() && stars[gap] < x) ++gap;
    w[gap] += 1;
  }
  return w;
}

std::uint64_t fixed_pattern(const Subcube& q) {
  std::uint64_t value = 0;
  for (int i = 0; i < q.n(); ++i) {
    std::uint32_t bit = std::uint32_t{1} << i;
    if (q.star_mask() & bit) continue;
    value = (value << 1) | ((q.one_mask() & bit) ? 1 : 0);
  }
  return value;
}

bool canonical_less(const Subcube& a, const Subcube& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.star_mask() != b.star_mask()) {
    // For equal-size star sets this is lexicographic order of the sorted
    // index sequences: the set holding the lowest differing coordinate wins.
    std::uint32_t diff = a.star_mask() ^ b.star_mask();
    std::uint32_t low = diff & (~diff + 1);
    return (a.star_mask() & low) != 0;
  }
  return fixed_pattern(a) < fixed_pattern(b);
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

SubcubeEnumerator::SubcubeEnumerator(int n, int dim) : n_(n), dim_(dim) {
  if (n < 0 || n > kMaxDimension) {
    throw std::invalid_argument("enumerate: ambient dimension out of range: " +
                                std::to_string(n));
  }
  if (dim < 0 || dim > n) {
    throw std::invalid_argument("enumerate: subcube dimension " + std::to_string(dim) +
                                " out of range for n=" + std::to_string(n));
  }
  pattern_count_ = std::uint64_t{1} << (n_ - dim_);
  total_ = binomial_u64(n_, dim_) * pattern_count_;
  reset();
}

void SubcubeEnumerator::reset() {
  stars_.resize(dim_);
  for (int i = 0; i < dim_; ++i) stars_[i] = i;
  pattern_ = 0;
  done_ = false;
}

bool SubcubeEnumerator::next(Subcube& out) {
  if (done_) return false;

  std::uint32_t star = 0;
  for (int s : stars_) star |= std::uint32_t{1} << s;
  std::uint32_t one = 0;
  int m = n_ - dim_;
  int t = 0;
  for (int i = 0; i < n_ && t < m; ++i) {
    if (star & (std::uint32_t{1} << i)) continue;
    if ((pattern_ >> (m - 1 - t)) & 1) one |= std::uint32_t{1} << i;
    ++t;
  }
  out = Subcube(n_, star, one);

  if (++pattern_ == pattern_count_) {
    pattern_ = 0;
    // Advance the star combination in lexicographic order.
    int i = dim_ - 1;
    while (i >= 0 && stars_[i] == n_ - dim_ + i) --i;
    if (i < 0) {
      done_ = true;
    } else {
      ++stars_[i];
      for (int j = i + 1; j < dim_; ++j) stars_[j] = stars_[j - 1] + 1;
    }
  }
  return true;
}

std::vector<Subcube> enumerate_subcubes(int n, int dim) {
  SubcubeEnumerator stream(n, dim);
  constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;
  if (stream.total() > kEnumerationLimit) {
    throw ResourceError("enumerate: " + std::to_string(stream.total()) +
                        " subcubes exceed the in-memory limit of " +
                        std::to_string(kEnumerationLimit));
  }
  std::vector<Subcube> out;
  out.reserve(stream.total());
  Subcube q;
  while (stream.next(q)) out.push_back(q);
  return out;
}

}  // namespace cubecover
