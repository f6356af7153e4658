#include <random>

#include "doctest.h"
#include "rostkit/error.hpp"
#include "rostkit/group.hpp"
#include "rostkit/motives.hpp"
#include "rostkit/schubert.hpp"

using namespace rostkit;

namespace {

// Long division of g by the linear form `lin` over F_p, always dividing the
// lex-largest remaining term by the lex-largest term of `lin`. Returns the
// quotient, or nothing when a remainder is left.
std::optional<GradedPoly> divide_by_linear(const GradedPoly& g, const GradedPoly& lin) {
  const long p = g.prime();
  const int n = g.nvars();
  const PrimeField f(p);
  const auto& [lead_e, lead_c] = *lin.terms().rbegin();
  int var = 0;
  while (lead_e[static_cast<std::size_t>(var)] == 0) ++var;
  GradedPoly rem = g;
  GradedPoly q(p, n, g.degree() - 1);
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms().rbegin();
    if (e[static_cast<std::size_t>(var)] == 0) return std::nullopt;
    Exponent qe = e;
    --qe[static_cast<std::size_t>(var)];
    const long qc = f.mul(c, f.inv(lead_c));
    const GradedPoly step = GradedPoly::monomial(p, qe, n, qc);
    q = q + step;
    rem = rem - step * lin;
  }
  return q;
}

GradedPoly root_form(const RootDatum& rd, long p, int i) {
  const LatticeAction act = lattice_action(rd);
  return GradedPoly::linear(p, act.root[static_cast<std::size_t>(i)]);
}

GradedPoly random_poly(std::mt19937& rng, long p, int nvars, int degree) {
  GradedPoly f(p, nvars, degree);
  for (int t = 0; t < 6; ++t) {
    Exponent e{};
    int left = degree;
    for (int j = 0; j + 1 < nvars; ++j) {
      const int a = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
      e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(a);
      left -= a;
    }
    e[static_cast<std::size_t>(nvars - 1)] = static_cast<std::uint8_t>(left);
    f.add_term(e, static_cast<long>(rng() % static_cast<unsigned long>(p)));
  }
  return f;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto x = GradedPoly::variable(3, 2, 0);
  const auto y = GradedPoly::variable(3, 2, 1);
  const auto s = (x + y) * (x + y) * (x + y);
  // (x + y)^3 = x^3 + y^3 in characteristic 3.
  CHECK(s == x * x * x + y * y * y);
  CHECK(s.to_string() == "x1^3 + x2^3");
  CHECK((x - x).is_zero());
}

TEST_CASE("divided differences agree with long division") {
  std::mt19937 rng(11);
  for (const char* sel : {"A2", "B2", "C3/ad", "G2", "A3/mu2", "D4/so", "B3/ad"}) {
    const RootDatum rd = root_datum_of(parse_group(sel));
    for (long p : {2L, 3L, 7L}) {
      for (int trial = 0; trial < 10; ++trial) {
        const int deg = 1 + static_cast<int>(rng() % 4);
        const GradedPoly f = random_poly(rng, p, rd.rank, deg);
        for (int i = 0; i < rd.rank; ++i) {
          const GradedPoly alpha = root_form(rd, p, i);
          if (alpha.is_zero()) continue;  // root vanishes mod p
          const auto oracle = divide_by_linear(f - reflect(rd, i, f), alpha);
          REQUIRE(oracle.has_value());
          CAPTURE(sel);
          CHECK(divided_difference(rd, i, f) == *oracle);
        }
      }
    }
  }
}

TEST_CASE("reflections are involutions and fix degree") {
  const RootDatum rd = build_root_datum(DynkinType::F, 4);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const GradedPoly f = random_poly(rng, 5, 4, 3);
    for (int i = 0; i < 4; ++i) CHECK(reflect(rd, i, reflect(rd, i, f)) == f);
  }
}

TEST_CASE("divided difference of a simple root") {
  // d_i(alpha_i) = 2 for every simple root.
  for (const char* sel : {"A3", "B3", "C3", "G2", "F4", "E6"}) {
    const RootDatum rd = root_datum_of(parse_group(sel));
    for (int i = 0; i < rd.rank; ++i) {
      const GradedPoly d = divided_difference(rd, i, root_form(rd, 101, i));
      CHECK(d.constant_term() == 2);
    }
  }
}

TEST_CASE("characteristic map in degree 1") {
  // A weight x goes to sum_i <x, alpha_i^vee> [s_i].
  const RootDatum rd = build_root_datum(DynkinType::A, 3);
  for (int j = 0; j < 3; ++j) {
    const FpVector v = char_map_coords(rd, 5, GradedPoly::variable(5, 3, j));
    const WeylWalk walk = weyl_walk(rd, 1);
    REQUIRE(v.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      const int i = walk.reduced_word(1, static_cast<int>(k))[0];
      CHECK(v[k] == (i == j ? 1u : 0u));
    }
  }
}

TEST_CASE("kernel generators reproduce the table") {
  struct Row {
    const char* sel;
    long p;
    std::vector<int> degrees;
  };
  for (const Row& r : {Row{"G2", 2, {2, 3}}, Row{"F4", 3, {2, 4, 6, 8}}, Row{"F4", 2, {2, 3, 8, 12}},
                       Row{"A1/ad", 2, {1}}, Row{"A2/ad", 3, {1, 2}}, Row{"A3/ad", 2, {1, 2, 3}},
                       Row{"A3/mu2", 2, {1, 2, 3}}, Row{"A4/ad", 5, {1, 2, 3, 4}}, Row{"C3/ad", 2, {1, 4, 6}},
                       Row{"D4/ad", 2, {1, 1, 2, 3}}}) {
    const RootDatum rd = root_datum_of(parse_group(r.sel));
    const KernelReport rep = kernel_and_generators(rd, r.p, rd.num_positive_roots);
    CAPTURE(r.sel);
    CHECK(rep.generator_degrees == r.degrees);
    CHECK(rep.matches_table1);
    CHECK_FALSE(rep.partial);
  }
}

TEST_CASE("kernel rank policy") {
  const RootDatum a5 = build_root_datum(DynkinType::A, 5);
  CHECK_THROWS_WITH_AS(kernel_and_generators(a5, 2, 3), doctest::Contains("opt-in"), DomainError);
  const RootDatum e7 = build_root_datum(DynkinType::E, 7);
  CHECK_THROWS_WITH_AS(kernel_and_generators(e7, 2, 3, {true}), doctest::Contains("enumeration cap"), DomainError);
  const RootDatum g2 = build_root_datum(DynkinType::G, 2);
  CHECK_THROWS_AS(kernel_and_generators(g2, 2, 7), DomainError);
  CHECK_THROWS_AS(kernel_and_generators(g2, 4, 3), DomainError);
}

TEST_CASE("image dimensions equal the multiplicities") {
  for (const auto& [sel, p] : {std::pair{"G2", 2L}, {"F4", 2L}, {"F4", 3L}, {"C3/ad", 2L}, {"A2/ad", 3L}}) {
    const GroupSpec g = parse_group(sel);
    const RootDatum rd = root_datum_of(g);
    const TruncatedSeries c = multiplicities(jprofile(g, p)).multiplicities;
    CAPTURE(sel);
    CHECK(image_dim_series(rd, p, c.order()) == c);
  }
  const RootDatum g2 = build_root_datum(DynkinType::G, 2);
  CHECK(image_dim_series(g2, 2, 6) == TruncatedSeries::polynomial({1, 2, 2, 1}, 6));
}

TEST_CASE("image is everything at a prime with no table row") {
  // F4 at p = 5: the kernel is generated in the degrees e_i, so the image in
  // degree d is the full length-d layer below degree 2.
  const RootDatum rd = build_root_datum(DynkinType::F, 4);
  const TruncatedSeries img = image_dim_series(rd, 5, 2);
  CHECK(img[0] == 1);
  CHECK(img[1] == 4);
  CHECK(img[2] == 9);
}
