#include <doctest.h>

#include "cubecover/bounds.hpp"
#include "cubecover/polychromatic.hpp"

using namespace cubecover;

TEST_CASE("counting lower bound on f") {
  CHECK(lower_bound_f(Params{3, 2, 1}) == 3);
  CHECK(lower_bound_f(Params{4, 2, 1}) == 8);
  CHECK(lower_bound_f(Params{5, 4, 1}) == 3);
}

TEST_CASE("lower bound specializes to the facet optimum for d = n-1") {
  for (int n = 3; n <= 12; ++n) {
    for (int l = 0; l <= n - 2; ++l) {
      std::uint64_t expected = (2ull * n + (n - l) - 1) / (n - l);
      CHECK(lower_bound_f(Params{n, n - 1, l}) == expected);
    }
  }
}

TEST_CASE("polychromatic bounds") {
  CHECK(bounds_pc(3, 1) == std::pair<std::uint64_t, std::uint64_t>{4, 6});
  CHECK(bounds_pc(5, 2) == std::pair<std::uint64_t, std::uint64_t>{8, 20});
  CHECK(bounds_pc(2, 1) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
}

TEST_CASE("polychromatic bounds are ordered and under the outer envelope") {
  // Outer envelope e^(l+1) * ((d+1)/(l+1))^(l+1) with a rational e > 2.718281828.
  const BigInt e_num = 2718281828;
  const BigInt e_den = 1000000000;
  for (int d = 1; d <= 20; ++d) {
    for (int l = 0; l < d; ++l) {
      auto [lo, hi] = bounds_pc(d, l);
      CHECK(lo <= hi);
      // lo <= (e_num/e_den)^(l+1) * ((d+1)/(l+1))^(l+1), cross-multiplied.
      BigInt lhs = BigInt(lo);
      BigInt rhs_num = 1;
      BigInt rhs_den = 1;
      for (int i = 0; i <= l; ++i) {
        rhs_num *= e_num * (d + 1);
        rhs_den *= e_den * (l + 1);
      }
      CHECK(lhs * rhs_den <= rhs_num);
    }
  }
}

TEST_CASE("density bounds") {
  auto [lo31, hi31] = bounds_c(3, 1);
  CHECK(lo31 == Rational(BigInt(1), BigInt(12)));
  CHECK(hi31 == Rational(BigInt(1), BigInt(4)));

  auto [lo21, hi21] = bounds_c(2, 1);
  CHECK(lo21 == Rational(BigInt(1), BigInt(4)));
  CHECK(hi21 == Rational(BigInt(1), BigInt(2)));

  for (int d = 1; d <= 16; ++d) {
    for (int l = 0; l < d; ++l) {
      auto [lo, hi] = bounds_c(d, l);
      CHECK(lo <= hi);
      // The density upper bound is exactly one over the palette size.
      CHECK(hi == Rational(BigInt(1), BigInt(palette_size(scheme(d, l)))));
    }
  }
}

TEST_CASE("fixed-codimension density upper bound") {
  CHECK(c_codim_upper(10, 8, 6) == Rational(BigInt(1), BigInt(28)));
  // C = ceil(2*ln3/ln2) = 4 at (10,8,7).
  CHECK(c_codim_upper(10, 8, 7) == Rational(BigInt(4), BigInt(2 * 8)));
  CHECK_THROWS_AS(c_codim_upper(5, 4, 2), std::invalid_argument);
}

TEST_CASE("edge-complement relation") {
  CHECK(turan_relation(3, 2, 3) == 9);
  CHECK(turan_relation(4, 3, 3) == 29);
  CHECK(turan_relation(5, 3, 0) == 80);
  CHECK_THROWS_AS(turan_relation(3, 2, 13), std::invalid_argument);
}

TEST_CASE("binomial product identity holds exactly") {
  CHECK(verify_binomial_identity(5, 3, 1));
  CHECK(verify_binomial_identity(4, 2, 2));
  CHECK(verify_binomial_identity(6, 4, 2));
  for (int n = 0; n <= 30; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (int l = 0; l <= d; ++l) {
        CHECK(verify_binomial_identity(n, d, l));
      }
    }
  }
}

TEST_CASE("bound report fields") {
  BoundReport report = bound_report(Params{10, 8, 6});
  CHECK(report.f_lower == lower_bound_f(Params{10, 8, 6}));
  CHECK(report.c_lower <= report.c_upper);
  CHECK(report.pc_lower <= report.pc_upper);
  REQUIRE(report.c_codim_upper.has_value());
  CHECK(*report.c_codim_upper == Rational(BigInt(1), BigInt(28)));
  CHECK_FALSE(report.ex_upper.has_value());

  BoundReport edge = bound_report(Params{4, 2, 1});
  REQUIRE(edge.ex_upper.has_value());
  CHECK(*edge.ex_upper == 32 - 8);
  CHECK(edge.c_codim_upper.has_value());  // n-d = 2

  BoundReport facet = bound_report(Params{4, 3, 1});
  CHECK_FALSE(facet.c_codim_upper.has_value());
  CHECK(facet.r_color == scheme(3, 1).r);
  CHECK(facet.r_cover == (3 - 1) % 2);
}

TEST_CASE("rational formatting") {
  CHECK(rational_to_string(Rational(BigInt(3), BigInt(12))) == "1/4");
  CHECK(rational_to_string(Rational(BigInt(5), BigInt(1))) == "5/1");
}
