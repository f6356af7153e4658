#include "rostkit/motives.hpp"

#include <algorithm>
#include <numeric>

#include "rostkit/error.hpp"
#include "rostkit/fp_linalg.hpp"
#include "rostkit/rules.hpp"

namespace rostkit {
namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// A polynomial series re-expressed at another order: padding is exact for a
// polynomial, shrinking truncates.
TruncatedSeries at_order(const TruncatedSeries& poly, int order) {
  if (order <= poly.order()) return truncate(poly, order);
  return TruncatedSeries::polynomial(poly.coefficients(), order);
}

std::vector<int> ints(const std::vector<long>& xs) { return {xs.begin(), xs.end()}; }

int natural_degree(const JProfile& jp) {
  long deg = 0;
  for (std::size_t j = 0; j < jp.d.size(); ++j) deg += jp.d[j] * (ipow(jp.p, jp.k[j]) - 1);
  return static_cast<int>(deg);
}

}  // namespace

RostParams RostParams::make(int n, long p) {
  if (n < 2) throw DomainError("n: symbol length must be at least 2");
  if (!is_prime(p)) throw DomainError("p: " + std::to_string(p) + " is not prime");
  if (n > 40) throw DomainError("n: too large");
  const long num = ipow(p, n - 1) - 1;
  if (num % (p - 1) != 0) throw InternalError("(p^{n-1}-1)/(p-1) is not integral");
  return {n, p, num / (p - 1)};
}

TruncatedSeries rost_poincare(const RostParams& rp, std::optional<int> order) {
  const long top = (rp.p - 1) * rp.d;
  return telescoping(static_cast<int>(rp.d), static_cast<int>(rp.p), order.value_or(static_cast<int>(top)));
}

// ---------------------------------------------------------------- profiles

JProfile jprofile(const GroupSpec& g, long p, const DataTables& tables) {
  if (!is_prime(p)) throw DomainError("prime: " + std::to_string(p) + " is not prime");
  JProfile jp;
  jp.group = g.display_name;
  jp.selector = g.selector;
  jp.type = g.type;
  jp.rank = g.rank;
  jp.isogeny = g.isogeny;
  jp.p = p;
  jp.degrees = tables.degrees(g.type, g.rank);
  std::sort(jp.degrees.begin(), jp.degrees.end());

  rules::Bindings vars = g.bindings;
  vars["p"] = p;
  for (const JRow& row : tables.jrows()) {
    if (row.family != g.family) continue;
    if (row.isogeny && *row.isogeny != g.isogeny.label()) continue;
    if (row.condition && rules::eval_int(*row.condition, vars) == 0) continue;
    const auto primes = rules::eval_seq(row.primes, vars);
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) continue;

    jp.table_row = row.group;
    jp.r = static_cast<int>(rules::eval_int(row.r, vars));
    vars["r"] = jp.r;
    jp.d = ints(rules::eval_seq(row.d, vars));
    jp.k = ints(rules::eval_seq(row.k, vars));
    jp.kac_degrees = ints(rules::eval_seq(row.kac, vars));
    std::sort(jp.kac_degrees.begin(), jp.kac_degrees.end());
    const std::string where = "J-invariant row " + row.group + " for " + g.display_name + ": ";
    if (jp.r < 0 || static_cast<int>(jp.d.size()) != jp.r || static_cast<int>(jp.k.size()) != jp.r)
      throw DomainError(where + "r, d and k have inconsistent lengths");
    for (std::size_t j = 0; j < jp.d.size(); ++j)
      if (jp.d[j] <= 0 || jp.k[j] < 0) throw DomainError(where + "d must be positive and k nonnegative");
    for (int x : jp.kac_degrees)
      if (x <= 0) throw DomainError(where + "generator degrees must be positive");
    return jp;
  }
  jp.kac_degrees = jp.degrees;
  return jp;
}

std::vector<JProfile> table_profiles(const DataTables& tables) {
  const std::vector<std::pair<std::string, std::vector<long>>> reps = {
      {"SL2/mu2", {2}}, {"SL3/mu3", {3}}, {"SL4/mu2", {2}}, {"SL4/mu4", {2}}, {"SL6/mu2", {2}},
      {"SL6/mu3", {3}}, {"SL6/mu6", {2, 3}}, {"SL5/mu5", {5}}, {"SL8/mu8", {2}},
      {"PGSp4", {2}}, {"PGSp6", {2}}, {"PGSp8", {2}}, {"PGSp12", {2}},
      {"O+5", {2}}, {"O+6", {2}}, {"O+7", {2}}, {"O+8", {2}}, {"O+9", {2}}, {"O+10", {2}},
      {"Spin5", {2}}, {"Spin6", {2}}, {"Spin7", {2}}, {"Spin8", {2}}, {"Spin9", {2}}, {"Spin10", {2}},
      {"Spin11", {2}}, {"Spin12", {2}},
      {"PGO6", {2}}, {"PGO8", {2}}, {"PGO10", {2}}, {"PGO12", {2}}, {"PGO16", {2}},
      {"HSpin8", {2}}, {"HSpin12", {2}}, {"HSpin16", {2}},
      {"G2", {2}}, {"F4", {2, 3}}, {"E6", {2, 3}}, {"E6/ad", {3}}, {"E7", {2, 3}}, {"E7/ad", {2}},
      {"E8", {2, 3, 5}}};
  std::vector<JProfile> out;
  for (const auto& [sel, primes] : reps)
    for (long p : primes) out.push_back(jprofile(parse_group(sel), p, tables));
  return out;
}

TruncatedSeries generic_rost_poincare(const JProfile& jp, std::optional<int> order) {
  const int o = order.value_or(natural_degree(jp));
  TruncatedSeries s = TruncatedSeries::one(o);
  for (std::size_t j = 0; j < jp.d.size(); ++j)
    s = s * telescoping(jp.d[j], static_cast<int>(ipow(jp.p, jp.k[j])), o);
  return s;
}

// ---------------------------------------------------------------- decompositions

std::string status_name(DecompositionReport::Status s) {
  switch (s) {
    case DecompositionReport::Status::Valid: return "valid";
    case DecompositionReport::Status::NonPolynomialQuotient: return "non-polynomial quotient";
    case DecompositionReport::Status::NegativeCoefficient: return "negative coefficient";
  }
  return "valid";
}

DecompositionReport decomposition_check(const TruncatedSeries& whole, const TruncatedSeries& summand) {
  DecompositionReport rep;
  const auto a = trimmed(whole.coefficients());
  const auto b = trimmed(summand.coefficients());
  if (b.empty()) throw DomainError("summand: zero polynomial");
  const int wdeg = std::max(0, static_cast<int>(a.size()) - 1);
  rep.whole = TruncatedSeries::polynomial(a, wdeg);
  rep.summand = TruncatedSeries::polynomial(b, std::max(0, static_cast<int>(b.size()) - 1));
  const PolyDivision div = poly_divmod(a, b);
  const auto q = trimmed(div.quotient);
  rep.multiplicities = TruncatedSeries::polynomial(q, std::max(0, static_cast<int>(q.size()) - 1));
  if (!div.exact) {
    rep.status = DecompositionReport::Status::NonPolynomialQuotient;
  } else if (std::any_of(q.begin(), q.end(), [](const mpz_class& c) { return c < 0; })) {
    rep.status = DecompositionReport::Status::NegativeCoefficient;
  } else {
    rep.status = DecompositionReport::Status::Valid;
  }
  mpz_class qa = 0, qb = 0, qw = 0;
  for (const auto& c : q) qa += c;
  if (rep.status == DecompositionReport::Status::Valid) {
    if (qa <= kMaxListedShifts) {
      for (std::size_t i = 0; i < q.size(); ++i)
        for (mpz_class c = q[i]; c > 0; --c) rep.shifts.push_back(static_cast<int>(i));
    } else {
      rep.notes.push_back("shift multiset has " + qa.get_str() + " entries; see the multiplicity series");
    }
  }
  for (const auto& c : b) qb += c;
  for (const auto& c : a) qw += c;
  rep.total_check = div.exact && qa * qb == qw;
  return rep;
}

DecompositionReport multiplicities(const JProfile& jp, std::optional<int> order) {
  long n = 0;
  for (int e : jp.degrees) n += e - 1;
  const int top = static_cast<int>(n);
  TruncatedSeries flag = TruncatedSeries::one(top);
  for (int e : jp.degrees) flag = flag * telescoping(1, e, top);
  DecompositionReport rep = decomposition_check(flag, generic_rost_poincare(jp));
  if (order) {
    rep.multiplicities = at_order(rep.multiplicities, *order);
  }
  return rep;
}

TruncatedSeries equivariant_rost_series(const JProfile& jp, int trunc) {
  if (trunc < 0) throw DomainError("trunc must be nonnegative");
  const std::vector<int> ones(static_cast<std::size_t>(jp.rank), 1);
  TruncatedSeries s = geometric_product(ones, trunc);
  s = s * generic_rost_poincare(jp, trunc);
  for (int e : jp.degrees) {
    s = s * one_minus_t_pow(1, trunc);
    s = s * geometric_product({e}, trunc);
  }
  return s;
}

F7Report f7_identity_report(const JProfile& jp, int trunc) {
  F7Report rep;
  rep.lhs = equivariant_rost_series(jp, trunc);
  rep.rhs = geometric_product(jp.kac_degrees, trunc);
  rep.equal = rep.lhs == rep.rhs;
  rep.count_mismatch = !jp.complete_intersection();
  return rep;
}

CanonicalDimension canonical_dimension(const JProfile& jp) {
  CanonicalDimension cd;
  cd.formula_b = natural_degree(jp);
  if (jp.complete_intersection()) {
    const long se = std::accumulate(jp.degrees.begin(), jp.degrees.end(), 0L);
    const long sk = std::accumulate(jp.kac_degrees.begin(), jp.kac_degrees.end(), 0L);
    cd.formula_a = se - sk;
    cd.agree = *cd.formula_a == cd.formula_b;
  } else {
    cd.formula_a_reason = "generator list has " + std::to_string(jp.kac_degrees.size()) + " degrees, rank is " +
                          std::to_string(jp.rank);
  }
  return cd;
}

TruncatedSeries torsion_upper_bound(const JProfile& jp, bool over_field, int trunc) {
  TruncatedSeries b = geometric_product(jp.kac_degrees, trunc);
  if (!over_field) return b;
  const long cdim = canonical_dimension(jp).formula_b;
  return cdim < trunc ? truncate(b, static_cast<int>(cdim)) : b;
}

TruncatedSeries split_quadric_poincare(int dim, std::optional<int> order) {
  if (dim < 1) throw DomainError("dim: quadric dimension must be at least 1");
  TruncatedSeries s = telescoping(1, dim + 1, order.value_or(dim));
  if (dim % 2 == 0 && dim / 2 <= s.order()) s = s + TruncatedSeries::monomial(dim / 2, s.order());
  return s;
}

// ---------------------------------------------------------------- presets

std::vector<std::string> preset_names() {
  return {"pfister", "pfister-sub", "albert", "albert-sub", "sb", "sb-incidence", "g2"};
}

PresetCheck decomposition_preset(const std::string& name, int param) {
  PresetCheck pc;
  pc.name = name;
  auto ones_to = [](int top) { return telescoping(1, top + 1, top); };
  if (name == "pfister" || name == "pfister-sub") {
    const int n = param;
    if (n < 2 || n > 12) throw DomainError("n: Pfister presets need 2 <= n <= 12");
    const bool sub = name == "pfister-sub";
    const int dim = (1 << n) - (sub ? 3 : 2);
    const int count = (1 << (n - 1)) - (sub ? 1 : 0);
    pc.description = std::string(sub ? "Pfister neighbour quadric" : "Pfister quadric") + " of dimension " +
                     std::to_string(dim) + " over R_{" + std::to_string(n) + ",2}";
    pc.report = decomposition_check(split_quadric_poincare(dim), rost_poincare(RostParams::make(n, 2)));
    pc.expected = ones_to(count - 1);
    pc.report.notes.push_back("derived shifts 0.." + std::to_string(count - 1) + " (" + std::to_string(count) +
                              " summands); the stated upper index " + std::to_string(count) +
                              " would give " + std::to_string(count + 1) + " summands and is flagged");
  } else if (name == "albert" || name == "albert-sub") {
    const bool sub = name == "albert-sub";
    const RootDatum rd = sub ? build_root_datum(DynkinType::F, 4) : build_root_datum(DynkinType::E, 6);
    const int k = sub ? 4 : 1;
    const TruncatedSeries whole = maximal_parabolic_poincare(rd, k, rd.num_positive_roots);
    pc.description = sub ? "F4/P4 over R_{3,3}" : "Cayley plane E6/P1 over R_{3,3}";
    pc.report = decomposition_check(whole, rost_poincare(RostParams::make(3, 3)));
    pc.expected = ones_to(sub ? 7 : 8);
  } else if (name == "sb" || name == "sb-incidence") {
    const int p = param;
    if (!is_prime(p) || p > 97) throw DomainError("p: Severi-Brauer presets need a prime p <= 97");
    const bool sub = name == "sb-incidence";
    const TruncatedSeries base = ones_to(p - 1);
    const TruncatedSeries other = sub ? ones_to(p - 2) : base;
    const auto product = poly_mul(base.coefficients(), other.coefficients());
    const TruncatedSeries whole = TruncatedSeries::polynomial(product, static_cast<int>(product.size()) - 1);
    pc.description = sub ? "incidence variety in SB x SB^op over R_{2," + std::to_string(p) + "}"
                         : "SB x SB^op over R_{2," + std::to_string(p) + "}";
    pc.report = decomposition_check(whole, rost_poincare(RostParams::make(2, p)));
    pc.expected = sub ? ones_to(p - 2) : base;
  } else if (name == "g2") {
    const RootDatum rd = build_root_datum(DynkinType::G, 2);
    pc.description = "G2/P1 over R_{3,2}";
    pc.report = decomposition_check(maximal_parabolic_poincare(rd, 1, 5), rost_poincare(RostParams::make(3, 2)));
    pc.expected = ones_to(2);
  } else {
    throw DomainError("preset: unknown name '" + name + "'");
  }
  pc.passed = pc.report.status == DecompositionReport::Status::Valid && pc.report.total_check &&
              (!pc.expected || *pc.expected == pc.report.multiplicities);
  return pc;
}

}  // namespace rostkit
