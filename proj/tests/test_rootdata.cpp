#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "rostkit/error.hpp"
#include "rostkit/group.hpp"
#include "rostkit/rootdata.hpp"

using namespace rostkit;

namespace {

std::vector<std::pair<DynkinType, int>> small_types() {
  return {{DynkinType::A, 1}, {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4}, {DynkinType::B, 2},
          {DynkinType::B, 3}, {DynkinType::B, 4}, {DynkinType::C, 3}, {DynkinType::C, 4}, {DynkinType::D, 4},
          {DynkinType::D, 5}, {DynkinType::G, 2}, {DynkinType::F, 4}};
}

// Minimal length representatives of W / W_J counted per length: w is
// minimal iff w s_j is longer for every j in J, i.e. nu_j > 0.
std::vector<long> coset_counts(const RootDatum& rd, const std::set<int>& j_one_based) {
  const WeylWalk walk = weyl_walk(rd, rd.num_positive_roots);
  std::vector<long> out;
  for (const auto& layer : walk.layers) {
    long c = 0;
    for (const auto& node : layer) {
      bool minimal = true;
      for (int j : j_one_based) minimal = minimal && node.nu[static_cast<std::size_t>(j - 1)] > 0;
      c += minimal;
    }
    out.push_back(c);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<long> coeffs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_si());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("cartan matrices use the Bourbaki numbering") {
  CHECK(cartan_matrix(DynkinType::B, 2) == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(cartan_matrix(DynkinType::C, 2) == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(cartan_matrix(DynkinType::G, 2) == IntMatrix{{2, -1}, {-3, 2}});
  const IntMatrix e6 = cartan_matrix(DynkinType::E, 6);
  CHECK(e6[0][2] == -1);
  CHECK(e6[1][3] == -1);
  CHECK(e6[3][4] == -1);
}

TEST_CASE("positive roots and degrees") {
  struct Row {
    DynkinType t;
    int l;
    int n;
    std::vector<int> e;
  };
  for (const Row& r : {Row{DynkinType::A, 3, 6, {2, 3, 4}}, Row{DynkinType::B, 3, 9, {2, 4, 6}},
                       Row{DynkinType::D, 4, 12, {2, 4, 4, 6}}, Row{DynkinType::G, 2, 6, {2, 6}},
                       Row{DynkinType::F, 4, 24, {2, 6, 8, 12}}, Row{DynkinType::E, 6, 36, {2, 5, 6, 8, 9, 12}},
                       Row{DynkinType::E, 7, 63, {2, 6, 8, 10, 12, 14, 18}},
                       Row{DynkinType::E, 8, 120, {2, 8, 12, 14, 18, 20, 24, 30}}}) {
    const RootDatum rd = build_root_datum(r.t, r.l);
    CHECK(rd.num_positive_roots == r.n);
    CHECK(rd.degrees == r.e);
  }
}

TEST_CASE("enumerated Weyl lengths match the degree product") {
  for (const auto& [t, l] : small_types()) {
    const RootDatum rd = build_root_datum(t, l);
    const auto counts = weyl_enumerate(rd);
    const TruncatedSeries prod = length_gen_function(rd, rd.num_positive_roots);
    REQUIRE(counts.size() == static_cast<std::size_t>(rd.num_positive_roots + 1));
    std::uint64_t total = 0;
    for (int k = 0; k <= rd.num_positive_roots; ++k) {
      CHECK(prod[k] == static_cast<unsigned long>(counts[static_cast<std::size_t>(k)]));
      total += counts[static_cast<std::size_t>(k)];
    }
    CHECK(total == rd.weyl_order());
  }
}

TEST_CASE("G2 length counts") {
  const RootDatum rd = build_root_datum(DynkinType::G, 2);
  CHECK(weyl_enumerate(rd) == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 1});
}

TEST_CASE("parabolic Poincare polynomials match coset enumeration") {
  for (const auto& [t, l] : small_types()) {
    const RootDatum rd = build_root_datum(t, l);
    for (int mask = 0; mask < (1 << l); ++mask) {
      std::set<int> j;
      for (int i = 0; i < l; ++i)
        if (mask & (1 << i)) j.insert(i + 1);
      CAPTURE(rd.label());
      CAPTURE(mask);
      CHECK(coeffs(parabolic_poincare(rd, j, rd.num_positive_roots)) == coset_counts(rd, j));
    }
  }
}

TEST_CASE("Cayley plane") {
  const RootDatum e6 = build_root_datum(DynkinType::E, 6);
  const TruncatedSeries p = maximal_parabolic_poincare(e6, 1, 16);
  CHECK(p.degree() == 16);
  CHECK(p.coefficient_sum() == 27);
}

TEST_CASE("reduced words and inversions") {
  const RootDatum rd = build_root_datum(DynkinType::A, 3);
  const WeylElement w = weyl_element(rd, {0, 1, 0});
  CHECK(w.length == 3);
  CHECK(inversion_count(rd, w.matrix) == 3);
  CHECK_THROWS_AS(weyl_element(rd, {0, 0}), DomainError);
  CHECK(coxeter_order(rd, 0, 1) == 3);
  CHECK(coxeter_order(rd, 0, 2) == 2);
  const RootDatum g2 = build_root_datum(DynkinType::G, 2);
  CHECK(coxeter_order(g2, 0, 1) == 6);
}

TEST_CASE("walk words reproduce their elements") {
  const RootDatum rd = build_root_datum(DynkinType::B, 3);
  const WeylWalk walk = weyl_walk(rd, rd.num_positive_roots);
  for (int len = 0; len <= rd.num_positive_roots; ++len)
    for (std::size_t k = 0; k < walk.layers[static_cast<std::size_t>(len)].size(); ++k) {
      const auto word = walk.reduced_word(len, static_cast<int>(k));
      CHECK(static_cast<int>(word.size()) == len);
      CHECK(weyl_element(rd, word).length == len);
    }
}

TEST_CASE("enumeration cap") {
  const RootDatum e8 = build_root_datum(DynkinType::E, 8);
  CHECK_THROWS_WITH_AS(weyl_enumerate(e8), doctest::Contains("enumeration cap"), DomainError);
  CHECK(weyl_enumerate(e8, 2) == std::vector<std::uint64_t>{1, 8, 35});
  CHECK_THROWS_WITH_AS(weyl_walk(e8, 20, 1000), doctest::Contains("enumeration cap"), DomainError);
}

TEST_CASE("input validation") {
  CHECK_THROWS_WITH_AS(build_root_datum(DynkinType::E, 5), doctest::Contains("rank"), DomainError);
  CHECK_THROWS_WITH_AS(build_root_datum(DynkinType::B, 1), doctest::Contains("rank"), DomainError);
  CHECK_THROWS_WITH_AS(build_root_datum(DynkinType::A, 3, Isogeny::mu(3)), doctest::Contains("isogeny"),
                       DomainError);
  CHECK_THROWS_WITH_AS(build_root_datum(DynkinType::B, 3, Isogeny::parse("hs")), doctest::Contains("isogeny"),
                       DomainError);
}

TEST_CASE("character lattices") {
  // det of the lattice basis (in weight coordinates) is the index in the
  // weight lattice, i.e. the order of the quotient of the centre.
  auto det = [](const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    double d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c; r < n; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
      if (a[piv][c] == 0) return 0L;
      if (piv != c) std::swap(a[piv], a[c]), d = -d;
      d *= a[c][c];
      for (std::size_t r = c + 1; r < n; ++r) {
        const double f = a[r][c] / a[c][c];
        for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    return std::lround(std::abs(d));
  };
  CHECK(det(build_root_datum(DynkinType::A, 5).lattice_basis) == 1);
  CHECK(det(build_root_datum(DynkinType::A, 5, Isogeny::ad()).lattice_basis) == 6);
  CHECK(det(build_root_datum(DynkinType::A, 5, Isogeny::mu(2)).lattice_basis) == 2);
  CHECK(det(build_root_datum(DynkinType::A, 5, Isogeny::mu(3)).lattice_basis) == 3);
  CHECK(det(build_root_datum(DynkinType::D, 4, Isogeny::ad()).lattice_basis) == 4);
  CHECK(det(build_root_datum(DynkinType::D, 4, Isogeny::parse("so")).lattice_basis) == 2);
  CHECK(det(build_root_datum(DynkinType::D, 4, Isogeny::parse("hs")).lattice_basis) == 2);
  CHECK(det(build_root_datum(DynkinType::E, 6, Isogeny::ad()).lattice_basis) == 3);
}

TEST_CASE("torsion primes") {
  CHECK(torsion_primes(DynkinType::A, 4) == std::vector<int>{5});
  CHECK(torsion_primes(DynkinType::A, 5) == std::vector<int>{2, 3});
  CHECK(torsion_primes(DynkinType::A, 1) == std::vector<int>{2});
  CHECK(torsion_primes(DynkinType::B, 3) == std::vector<int>{2});
  CHECK(torsion_primes(DynkinType::G, 2) == std::vector<int>{2});
  CHECK(torsion_primes(DynkinType::F, 4) == std::vector<int>{2, 3});
  CHECK(torsion_primes(DynkinType::E, 8) == std::vector<int>{2, 3, 5});
  CHECK(torsion_primes({{DynkinType::G, 2}, {DynkinType::E, 8}}) == std::vector<int>{2, 3, 5});
}

TEST_CASE("group selectors") {
  const GroupSpec spin9 = parse_group("Spin9");
  CHECK(spin9.type == DynkinType::B);
  CHECK(spin9.rank == 4);
  CHECK(spin9.family == "Spin");
  const GroupSpec pgo12 = parse_group("PGO12");
  CHECK(pgo12.type == DynkinType::D);
  CHECK(pgo12.rank == 6);
  CHECK(pgo12.isogeny == Isogeny::ad());
  const GroupSpec a4 = parse_group("A4/mu5");
  CHECK(a4.family == "SL");
  CHECK(a4.bindings.at("n") == 5);
  CHECK(a4.bindings.at("m") == 5);
  CHECK(parse_group("E6/ad").display_name == "E6^ad");
  CHECK_THROWS_AS(parse_group("Q3"), DomainError);
  CHECK_THROWS_AS(parse_group("A3/mu3"), DomainError);
}
