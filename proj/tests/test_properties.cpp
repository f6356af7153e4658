#include <random>

#include "doctest.h"
#include "rostkit/schubert.hpp"
#include "rostkit/series.hpp"
#include "rostkit/smith.hpp"

using namespace rostkit;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order) {
  std::vector<mpz_class> c(static_cast<std::size_t>(order + 1));
  for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries random_nonneg(std::mt19937& rng, int order) {
  std::vector<mpz_class> c(static_cast<std::size_t>(order + 1));
  for (auto& x : c) x = static_cast<long>(rng() % 5);
  return TruncatedSeries(std::move(c));
}

GradedPoly random_poly(std::mt19937& rng, long p, int nvars, int degree) {
  GradedPoly f(p, nvars, degree);
  const int terms = 1 + static_cast<int>(rng() % 8);
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    int left = degree;
    for (int j = 0; j + 1 < nvars; ++j) {
      const int a = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(a);
      left -= a;
    }
    e[static_cast<std::size_t>(nvars - 1)] = static_cast<std::uint8_t>(left);
    f.add_term(e, 1 + static_cast<long>(rng() % static_cast<unsigned long>(p - 1)));
  }
  return f;
}

GradedPoly apply_word(const RootDatum& rd, const std::vector<int>& word, GradedPoly f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(rd, *it, f);
  return f;
}

}  // namespace

TEST_CASE("series ring laws on random instances") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = static_cast<int>(rng() % 12);
    const auto a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
    const auto zero = TruncatedSeries(order), one = TruncatedSeries::one(order);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK(a - a == zero);
    CHECK(-(-a) == a);
    const int n = static_cast<int>(rng() % static_cast<unsigned>(order + 1));
    CHECK(truncate(a * b, n) == truncate(a, n) * truncate(b, n));
    // Division by a series with unit constant term inverts multiplication.
    std::vector<mpz_class> u(b.coefficients().begin(), b.coefficients().end());
    u[0] = (rng() % 2) ? 1 : -1;
    const TruncatedSeries unit(std::move(u));
    CHECK(exact_div(a * unit, unit).quotient == a);
  }
}

TEST_CASE("coefficientwise order laws on random instances") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int order = static_cast<int>(rng() % 10);
    const auto a = random_nonneg(rng, order), b = random_nonneg(rng, order), c = random_nonneg(rng, order);
    CHECK(leq(a, a));
    if (leq(a, b) && leq(b, a)) CHECK(a == b);
    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    CHECK(leq(a, a + c));
    if (leq(a, b)) {
      CHECK(leq(a + c, b + c));
      CHECK(leq(a * c, b * c));  // c has nonnegative coefficients
      const int n = static_cast<int>(rng() % static_cast<unsigned>(order + 1));
      CHECK(leq(truncate(a, n), truncate(b, n)));
    }
  }
}

TEST_CASE("divided differences square to zero and satisfy the braid relations") {
  std::mt19937 rng(314);
  const std::vector<std::pair<DynkinType, int>> types = {
      {DynkinType::A, 2}, {DynkinType::B, 2}, {DynkinType::G, 2}, {DynkinType::A, 3}, {DynkinType::B, 3},
      {DynkinType::C, 3}, {DynkinType::A, 4}, {DynkinType::B, 4}, {DynkinType::D, 4}, {DynkinType::F, 4}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& [type, rank] = types[static_cast<std::size_t>(trial) % types.size()];
    const RootDatum rd = build_root_datum(type, rank);
    const long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
    const int degree = 2 + static_cast<int>(rng() % 5);
    const GradedPoly f = random_poly(rng, p, rank, degree);
    CAPTURE(rd.label());
    for (int i = 0; i < rank; ++i) CHECK(divided_difference(rd, i, divided_difference(rd, i, f)).is_zero());
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j) {
        const int m = coxeter_order(rd, i, j);
        if (m > degree) continue;
        std::vector<int> u, v;
        for (int k = 0; k < m; ++k) {
          u.push_back(k % 2 ? j : i);
          v.push_back(k % 2 ? i : j);
        }
        CHECK(apply_word(rd, u, f) == apply_word(rd, v, f));
      }
  }
}

TEST_CASE("characteristic map does not depend on the reduced word") {
  std::mt19937 rng(99);
  const std::vector<std::pair<DynkinType, int>> types = {
      {DynkinType::A, 2}, {DynkinType::B, 2}, {DynkinType::G, 2}, {DynkinType::A, 3}, {DynkinType::C, 3},
      {DynkinType::B, 3}, {DynkinType::A, 4}, {DynkinType::D, 4}};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& [type, rank] = types[static_cast<std::size_t>(trial) % types.size()];
    const RootDatum rd = build_root_datum(type, rank);
    const long p = std::vector<long>{3, 5, 7}[rng() % 3];
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(rd.num_positive_roots, 6)));
    const WeylWalk walk = weyl_walk(rd, len);
    const auto& layer = walk.layers[static_cast<std::size_t>(len)];
    const int idx = static_cast<int>(rng() % layer.size());
    const std::vector<int> word = walk.reduced_word(len, idx);
    // A commutation and a braid move give another reduced word of w.
    std::vector<int> other = word;
    for (std::size_t k = 0; k + 1 < other.size(); ++k) {
      const int a = other[k], b = other[k + 1];
      if (a != b && coxeter_order(rd, a, b) == 2) {
        std::swap(other[k], other[k + 1]);
        break;
      }
    }
    for (std::size_t k = 0; k + 2 < other.size(); ++k) {
      const int a = other[k], b = other[k + 1];
      if (a != b && other[k + 2] == a && coxeter_order(rd, a, b) == 3) {
        other[k] = b;
        other[k + 1] = a;
        other[k + 2] = b;
        break;
      }
    }
    const GradedPoly f = random_poly(rng, p, rank, len);
    CAPTURE(rd.label());
    CHECK(weyl_element(rd, other).matrix == weyl_element(rd, word).matrix);
    CHECK(char_map_along(rd, word, f) == char_map_along(rd, other, f));
    const FpVector coords = char_map_coords(rd, p, f);
    CHECK(coords[static_cast<std::size_t>(idx)] == char_map_along(rd, word, f));
  }
}

TEST_CASE("Smith forms of random matrices are certified") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = rng() % 6 + 1, c = rng() % 6 + 1;
    IntegerMatrix m(r, c);
    for (auto& x : m.data) x = static_cast<long>(rng() % 200) - 100;
    const SmithForm s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k)
      if (s.diagonal[k] != 0) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
      else CHECK(s.diagonal[k + 1] == 0);
  }
}
