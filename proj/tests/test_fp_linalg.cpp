#include <random>

#include "doctest.h"
#include "rostkit/error.hpp"
#include "rostkit/fp_linalg.hpp"

using namespace rostkit;

TEST_CASE("prime field") {
  const PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-15) == 6);
  CHECK_THROWS(PrimeField(8));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("nullspace vectors are killed and span the right dimension") {
  std::mt19937 rng(7);
  for (long p : {2L, 3L, 5L, 101L}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = rng() % 6 + 1, c = rng() % 7 + 1;
      FpMatrix m(r, c);
      for (auto& x : m.data) x = static_cast<std::uint32_t>(rng() % static_cast<unsigned long>(p));
      const auto ns = fp_nullspace(f, m);
      CHECK(ns.size() + fp_rank(f, m) == c);
      for (const auto& v : ns)
        for (std::size_t i = 0; i < r; ++i) {
          std::uint32_t acc = 0;
          for (std::size_t j = 0; j < c; ++j) acc = f.add(acc, f.mul(m.at(i, j), v[j]));
          CHECK(acc == 0);
        }
      EchelonBasis b(f, c);
      for (const auto& v : ns) CHECK(b.add(v));
      CHECK(b.size() == ns.size());
      for (const auto& v : ns) CHECK(b.contains(v));
    }
  }
}
