#include <numeric>

#include "doctest.h"
#include "rostkit/error.hpp"
#include "rostkit/motives.hpp"

using namespace rostkit;

namespace {

JProfile profile(const char* sel, long p) { return jprofile(parse_group(sel), p); }

std::vector<long> coeffs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("Rost polynomials") {
  const RostParams r32 = RostParams::make(3, 2);
  CHECK(r32.d == 3);
  CHECK(coeffs(rost_poincare(r32)) == std::vector<long>{1, 0, 0, 1});
  const RostParams r33 = RostParams::make(3, 3);
  CHECK(r33.d == 4);
  CHECK(coeffs(rost_poincare(r33)) == std::vector<long>{1, 0, 0, 0, 1, 0, 0, 0, 1});
  for (int n = 2; n <= 6; ++n)
    for (long p : {2L, 3L, 5L, 7L, 11L}) CHECK(rost_poincare(RostParams::make(n, p)).coefficient_sum() == p);
  CHECK_THROWS_AS(RostParams::make(1, 2), DomainError);
  CHECK_THROWS_AS(RostParams::make(3, 4), DomainError);
}

TEST_CASE("profiles read from the table") {
  const JProfile g2 = profile("G2", 2);
  CHECK(g2.r == 1);
  CHECK(g2.d == std::vector<int>{3});
  CHECK(g2.k == std::vector<int>{1});
  CHECK(g2.kac_degrees == std::vector<int>{2, 3});

  const JProfile e8 = profile("E8", 2);
  CHECK(e8.d == std::vector<int>{3, 5, 9, 15});
  CHECK(e8.k == std::vector<int>{3, 2, 1, 1});

  const JProfile sl = profile("SL6/mu6", 3);
  CHECK(sl.d == std::vector<int>{1});
  CHECK(sl.k == std::vector<int>{1});
  CHECK(sl.kac_degrees == std::vector<int>{1, 2, 4, 5, 6});

  const JProfile o7 = profile("O+7", 2);
  CHECK(o7.r == 2);
  CHECK(o7.d == std::vector<int>{1, 3});
  CHECK(o7.k == std::vector<int>{2, 1});
  CHECK(o7.kac_degrees == std::vector<int>{2, 3});

  const JProfile spin9 = profile("Spin9", 2);
  CHECK(spin9.r == 1);
  CHECK(spin9.d == std::vector<int>{3});
  CHECK(spin9.k == std::vector<int>{1});
  CHECK(spin9.kac_degrees == std::vector<int>{1, 2, 3, 4, 8});

  SUBCASE("no row: r = 0 and the generators sit in the degrees") {
    const JProfile f4 = profile("F4", 5);
    CHECK(f4.table_row.empty());
    CHECK(f4.r == 0);
    CHECK(f4.kac_degrees == std::vector<int>{2, 6, 8, 12});
    CHECK(generic_rost_poincare(f4) == TruncatedSeries::one(0));
  }
}

TEST_CASE("equivariant series of the worked examples") {
  CHECK(equivariant_rost_series(profile("G2", 2), 64) == geometric_product({2, 3}, 64));
  CHECK(equivariant_rost_series(profile("F4", 3), 64) == geometric_product({2, 4, 6, 8}, 64));
  CHECK(equivariant_rost_series(profile("E8", 5), 64) == geometric_product({2, 6, 8, 12, 14, 18, 20, 24}, 64));
}

TEST_CASE("f7 identity over the table") {
  int equal = 0, mismatched = 0;
  for (const JProfile& jp : table_profiles()) {
    const F7Report r = f7_identity_report(jp, 64);
    CAPTURE(jp.group);
    CAPTURE(jp.p);
    if (jp.complete_intersection()) {
      CHECK(r.equal);
      CHECK_FALSE(r.count_mismatch);
      ++equal;
    } else {
      CHECK(r.count_mismatch);
      mismatched += !r.equal;
    }
  }
  CHECK(equal > 20);
  CHECK(mismatched > 0);
}

TEST_CASE("multiplicities") {
  const DecompositionReport g2 = multiplicities(profile("G2", 2));
  CHECK(g2.status == DecompositionReport::Status::Valid);
  CHECK(coeffs(g2.multiplicities) == std::vector<long>{1, 2, 2, 1});
  CHECK(g2.shifts == std::vector<int>{0, 1, 1, 2, 2, 3});
  CHECK(g2.total_check);

  for (const JProfile& jp : table_profiles()) {
    const DecompositionReport r = multiplicities(jp);
    CAPTURE(jp.group);
    CHECK(r.status == DecompositionReport::Status::Valid);
    CHECK(r.total_check);
    if (jp.complete_intersection()) {
      const mpz_class prod =
          std::accumulate(jp.kac_degrees.begin(), jp.kac_degrees.end(), mpz_class(1), std::multiplies<>());
      CHECK(r.multiplicities.coefficient_sum() == prod);
    }
  }
  const DecompositionReport e8 = multiplicities(profile("E8", 2));
  CHECK(e8.shifts.empty());
  CHECK(e8.notes.size() == 1);
}

TEST_CASE("canonical dimension") {
  CHECK(canonical_dimension(profile("G2", 2)).formula_b == 3);
  CHECK(canonical_dimension(profile("F4", 3)).formula_b == 8);
  CHECK(canonical_dimension(profile("E8", 2)).formula_b == 60);
  CHECK(canonical_dimension(profile("E8", 5)).formula_b == 24);
  for (const JProfile& jp : table_profiles()) {
    const CanonicalDimension cd = canonical_dimension(jp);
    CAPTURE(jp.group);
    if (jp.complete_intersection()) {
      CHECK(cd.agree);
    } else {
      CHECK_FALSE(cd.formula_a.has_value());
      CHECK_FALSE(cd.formula_a_reason.empty());
    }
  }
}

TEST_CASE("decomposition check") {
  SUBCASE("non-polynomial quotient") {
    const auto r = decomposition_check(TruncatedSeries::polynomial({1, 1, 1}, 2), TruncatedSeries::polynomial({1, 1}, 1));
    CHECK(r.status == DecompositionReport::Status::NonPolynomialQuotient);
    CHECK_FALSE(r.total_check);
  }
  SUBCASE("negative coefficient") {
    const auto r = decomposition_check(TruncatedSeries::polynomial({1, 0, -1}, 2), TruncatedSeries::polynomial({1, 1}, 1));
    CHECK(r.status == DecompositionReport::Status::NegativeCoefficient);
    CHECK(r.shifts.empty());
  }
}

TEST_CASE("split quadrics") {
  CHECK(coeffs(split_quadric_poincare(2)) == std::vector<long>{1, 2, 1});
  CHECK(coeffs(split_quadric_poincare(6)) == std::vector<long>{1, 1, 1, 2, 1, 1, 1});
  CHECK(coeffs(split_quadric_poincare(5)) == std::vector<long>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("presets") {
  for (int n = 2; n <= 4; ++n) {
    const PresetCheck pc = decomposition_preset("pfister", n);
    CHECK(pc.passed);
    CHECK(pc.report.shifts.size() == static_cast<std::size_t>(1 << (n - 1)));
    CHECK(pc.report.shifts.back() == (1 << (n - 1)) - 1);
    CHECK_FALSE(pc.report.notes.empty());
  }
  for (int n = 3; n <= 5; ++n) CHECK(decomposition_preset("pfister-sub", n).passed);
  const PresetCheck albert = decomposition_preset("albert", 0);
  CHECK(albert.passed);
  CHECK(coeffs(albert.report.multiplicities) == std::vector<long>(9, 1));
  CHECK(decomposition_preset("albert-sub", 0).passed);
  for (int p : {2, 3, 5, 7}) {
    CHECK(decomposition_preset("sb", p).passed);
    CHECK(decomposition_preset("sb-incidence", p).passed);
  }
  CHECK(decomposition_preset("g2", 0).passed);
  CHECK_THROWS_AS(decomposition_preset("nope", 0), DomainError);
  CHECK_THROWS_AS(decomposition_preset("sb", 4), DomainError);
}

TEST_CASE("torsion bounds") {
  const JProfile g2 = profile("G2", 2);
  const TruncatedSeries general = torsion_upper_bound(g2, false, 10);
  CHECK(leq(TruncatedSeries::polynomial({1, 0, 1, 0, 0, 1}, 10), general));
  const TruncatedSeries field = torsion_upper_bound(g2, true, 10);
  CHECK(field.order() == 3);
  for (const JProfile& jp : table_profiles()) {
    const TruncatedSeries b = torsion_upper_bound(jp, true, 64);
    CHECK(leq(TruncatedSeries::one(b.order()), b));
  }
}
