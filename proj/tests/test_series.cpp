#include "doctest.h"
#include "rostkit/error.hpp"
#include "rostkit/series.hpp"

using namespace rostkit;

namespace {

// Multisets of parts from `parts` summing to n, counted by plain recursion.
long count_partitions(const std::vector<int>& parts, std::size_t from, int n) {
  if (n == 0) return 1;
  if (from == parts.size()) return 0;
  long total = 0;
  for (int k = 0; k * parts[from] <= n; ++k) total += count_partitions(parts, from + 1, n - k * parts[from]);
  return total;
}

std::vector<long> coeffs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("geometric product counts partitions") {
  for (const std::vector<int>& parts : {std::vector<int>{2, 3}, {1, 2}, {2, 4, 6, 8}, {1, 1, 1}, {3, 5, 9, 15}}) {
    const TruncatedSeries g = geometric_product(parts, 30);
    for (int n = 0; n <= 30; ++n) CHECK(g[n] == count_partitions(parts, 0, n));
  }
}

TEST_CASE("geometric product of G2 degrees") {
  // 1/((1-t^2)(1-t^3)) through t^10, by counting 2a + 3b = n by hand.
  CHECK(coeffs(geometric_product({2, 3}, 10)) == std::vector<long>{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2});
}

TEST_CASE("multiplication truncates to the smaller order") {
  const auto a = TruncatedSeries::polynomial({1, 1}, 5);
  const auto b = TruncatedSeries::polynomial({1, 1}, 3);
  const auto c = a * b;
  CHECK(c.order() == 3);
  CHECK(coeffs(c) == std::vector<long>{1, 2, 1, 0});
}

TEST_CASE("exact division") {
  const auto num = TruncatedSeries::polynomial({1, 0, 0, -1}, 10);
  const auto den = TruncatedSeries::polynomial({1, -1}, 10);
  const SeriesQuotient q = exact_div(num, den);
  CHECK(q.shift == 0);
  CHECK(q.polynomial_multiple);
  CHECK(coeffs(q.quotient) == std::vector<long>{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0});

  SUBCASE("common power of t cancels") {
    const auto a = TruncatedSeries::polynomial({0, 0, 2, 2}, 6);
    const auto b = TruncatedSeries::polynomial({0, 1, 1}, 6);
    const SeriesQuotient r = exact_div(a, b);
    CHECK(r.shift == 1);
    CHECK(r.quotient.order() == 5);
    CHECK(r.quotient[0] == 0);
    CHECK(r.quotient[1] == 2);
    CHECK(r.quotient[2] == 0);
  }
  SUBCASE("non-unit constant term is rejected") {
    CHECK_THROWS_AS(exact_div(num, TruncatedSeries::polynomial({2, 1}, 10)), DomainError);
  }
  SUBCASE("not a polynomial multiple") {
    const SeriesQuotient r = exact_div(TruncatedSeries::one(8), den);
    CHECK_FALSE(r.polynomial_multiple);
    for (int i = 0; i <= 8; ++i) CHECK(r.quotient[i] == 1);
  }
}

TEST_CASE("truncate and leq") {
  const auto s = geometric_product({1}, 10);
  CHECK(truncate(s, 4).order() == 4);
  CHECK_THROWS_AS(truncate(s, 11), DomainError);
  CHECK(leq(TruncatedSeries::polynomial({1, 0, 1, 0, 0, 1}, 10), geometric_product({2, 3}, 10)));
  CHECK_FALSE(leq(TruncatedSeries::polynomial({0, 1}, 10), geometric_product({2, 3}, 10)));
  CHECK_THROWS_AS(leq(TruncatedSeries::one(3), TruncatedSeries::one(4)), DomainError);
}

TEST_CASE("telescoping") {
  CHECK(coeffs(telescoping(2, 3, 6)) == std::vector<long>{1, 0, 1, 0, 1, 0, 0});
  CHECK(telescoping(4, 3, 8) * one_minus_t_pow(4, 8) == one_minus_t_pow(12, 8));
}

TEST_CASE("text form round trip") {
  const auto s = TruncatedSeries::polynomial({1, 0, -3, 12}, 5);
  CHECK(s.to_string() == "1 + 0*t - 3*t^2 + 12*t^3 + 0*t^4 + 0*t^5");
  CHECK(TruncatedSeries::parse(s.to_string()) == s);
  CHECK_THROWS_AS(TruncatedSeries::parse("1 + x"), DomainError);
}

TEST_CASE("polynomial long division") {
  std::vector<mpz_class> a = {-1, 0, 0, 1};
  std::vector<mpz_class> b = {-1, 1};
  const PolyDivision d = poly_divmod(a, b);
  CHECK(d.exact);
  CHECK(d.quotient == std::vector<mpz_class>{1, 1, 1});
  std::vector<mpz_class> c = {1, 0, 1};
  CHECK_FALSE(poly_divmod(c, b).exact);
  std::vector<mpz_class> two = {0, 2};
  CHECK_FALSE(poly_divmod(std::vector<mpz_class>{0, 0, 1}, two).exact);
}

TEST_CASE("big coefficients stay exact") {
  // Coefficient of t^200 in 1/(1-t)^8 is C(207, 7).
  const auto s = geometric_product({1, 1, 1, 1, 1, 1, 1, 1}, 200);
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), 207, 7);
  CHECK(s[200] == binom);
}
