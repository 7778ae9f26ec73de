#include "cubecover/bounds.hpp"

#include <string>

#include "cubecover/polychromatic.hpp"

namespace cubecover {

namespace {

BigInt pow_big(BigInt base, int exp) {
  BigInt result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

std::uint64_t to_u64(const BigInt& v, const char* who) {
  if (v < 0 || v > BigInt(UINT64_MAX)) {
    throw std::overflow_error(std::string(who) + ": value does not fit 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::string rational_to_string(const Rational& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

std::uint64_t lower_bound_f(const Params& p) {
  validate_params(p);
  BigInt targets = binomial(p.n, p.d) * pow_big(2, p.n - p.d);
  BigInt per_member = binomial(p.n - p.l, p.n - p.d);
  return to_u64(ceil_div(targets, per_member), "lower_bound_f");
}

std::pair<std::uint64_t, std::uint64_t> bounds_pc(int d, int l) {
  ColorScheme s = scheme(d, l);  // validates d > l >= 0
  BigInt lower = pow_big(s.k, s.r) * pow_big(s.kprime, l + 1 - s.r);
  BigInt upper = binomial(d + 1, l + 1);
  return {to_u64(lower, "bounds_pc"), to_u64(upper, "bounds_pc")};
}

std::pair<Rational, Rational> bounds_c(int d, int l) {
  if (!(d > l && l >= 0)) {
    throw std::invalid_argument("bounds_c: need d > l >= 0, got d=" +
                                std::to_string(d) + " l=" + std::to_string(l));
  }
  Rational lower(BigInt(1), pow_big(2, d - l) * binomial(d, l));
  int r = (d - l) % (l + 1);
  BigInt k_ceil = (d + 1 + l) / (l + 1);  // ceil((d+1)/(l+1))
  BigInt k_floor = (d + 1) / (l + 1);
  Rational upper(BigInt(1), pow_big(k_ceil, r) * pow_big(k_floor, l + 1 - r));
  return {lower, upper};
}

Rational c_codim_upper(int n, int d, int l) {
  validate_params(Params{n, d, l}, /*max_n=*/1 << 20);
  int r = n - d;
  if (r < 2) {
    throw std::invalid_argument("c_codim_upper: need n-d >= 2, got " +
                                std::to_string(r));
  }
  BigInt r_to_r = pow_big(r, r);
  BigInt r_fact = 1;
  for (int i = 2; i <= r; ++i) r_fact *= i;

  // C = ceil(r*ln(n-l) / ln(r^r/(r^r-r!))); since both logs are positive
  // this is the least C with (r^r)^C >= (n-l)^r * (r^r-r!)^C, an exact
  // integer comparison.
  BigInt lhs_base = r_to_r;
  BigInt rhs_factor = r_to_r - r_fact;
  BigInt target = pow_big(n - l, r);
  int c_count = 0;
  BigInt lhs = 1;
  BigInt rhs = target;
  while (lhs < rhs) {
    lhs *= lhs_base;
    rhs *= rhs_factor;
    ++c_count;
  }
  return Rational(BigInt(c_count), pow_big(2, d - l) * binomial(d, l));
}

std::uint64_t turan_relation(int n, int d, std::uint64_t f1) {
  if (!(1 <= d && d < n && n <= 62)) {
    throw std::invalid_argument("turan_relation: need 1 <= d < n <= 62");
  }
  std::uint64_t edges = static_cast<std::uint64_t>(n) << (n - 1);
  if (f1 > edges) {
    throw std::invalid_argument("turan_relation: f exceeds the edge count of Q_n");
  }
  return edges - f1;
}

bool verify_binomial_identity(int n, int d, int l) {
  if (!(0 <= l && l <= d && d <= n)) {
    throw std::invalid_argument("verify_binomial_identity: need 0 <= l <= d <= n");
  }
  return binomial(n, d) * binomial(d, d - l) == binomial(n, l) * binomial(n - l, d - l);
}

BoundReport bound_report(const Params& p) {
  validate_params(p);
  BoundReport report;
  report.params = p;
  report.f_lower = lower_bound_f(p);
  auto [c_lo, c_hi] = bounds_c(p.d, p.l);
  report.c_lower = c_lo;
  report.c_upper = c_hi;
  auto [pc_lo, pc_hi] = bounds_pc(p.d, p.l);
  report.pc_lower = pc_lo;
  report.pc_upper = pc_hi;
  report.r_color = scheme(p.d, p.l).r;
  report.r_cover = (p.d - p.l) % (p.l + 1);
  if (p.n - p.d >= 2) {
    report.c_codim_upper = c_codim_upper(p.n, p.d, p.l);
  }
  if (p.l == 1) {
    std::uint64_t edges = static_cast<std::uint64_t>(p.n) << (p.n - 1);
    report.ex_upper = edges - report.f_lower;
  }
  return report;
}

}  // namespace cubecover
