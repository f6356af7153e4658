#include "rostkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rostkit/error.hpp"
#include "rostkit/gradedring.hpp"
#include "rostkit/motives.hpp"
#include "rostkit/rootdata.hpp"
#include "rostkit/schubert.hpp"

namespace rostkit {

namespace {

constexpr const char* kAnchorExample = "\"We compute the Poincar\\'e series for groups of types\"";
constexpr const char* kAnchorF7 = "\"The Poincar\\'e series of the (equivariant) motive R_{p,G}(G) equals\"";
constexpr const char* kAnchorTable = "\"degrees for generators of I_p\"";
constexpr const char* kAnchorCdimA = "\"a formula for the canonical dimension\"";
constexpr const char* kAnchorCdimB = "\"another formula for the canonical p-dimension\"";
constexpr const char* kAnchorQuotient = "\"the integers c_i are the coefficients of the quotient\"";
constexpr const char* kAnchorProduct = "\"where M=prod_{i=1}^l d_{i,p}\"";
constexpr const char* kAnchorWeyl = "\"the order of the Weyl group\"";
constexpr const char* kAnchorDegrees = "\"Degrees of fundamental polynomial invariants\"";
constexpr const char* kAnchorRost = "\"Poincar\\'e polynomial of a Rost motive corresponding to a pure symbol\"";
constexpr const char* kAnchorQuadrics = "\"Their motivic decompositions look as follows\"";
constexpr const char* kAnchorAlbert = "\"the Rost motive corresponding to the Serre--Rost invariant\"";
constexpr const char* kAnchorTorsion = "\"finitely generated abelian group\"";
constexpr const char* kAnchorG2Torsor = "\"There exists a G_2-torsor E over certain base scheme\"";
constexpr const char* kAnchorBgl2 = "\"we have even an isomorphism of rings\"";
constexpr const char* kAnchorOrder = "\"we write A \\preceq B\"";

std::string join(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

class Suite {
 public:
  void add(std::string id, const char* anchor, bool ok, std::string details) {
    checks_.push_back({std::move(id), anchor, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)});
  }
  void add(std::string id, const char* anchor, CheckStatus s, std::string details) {
    checks_.push_back({std::move(id), anchor, s, std::move(details)});
  }
  // Runs one check; a library exception is recorded as a failure.
  void run(const std::string& id, const char* anchor, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(id, anchor, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

void example_series(Suite& s, const DataTables& t) {
  const std::vector<std::tuple<std::string, long, std::vector<int>>> cases = {
      {"G2", 2, {2, 3}}, {"F4", 3, {2, 4, 6, 8}}, {"E8", 5, {2, 6, 8, 12, 14, 18, 20, 24}}};
  for (const auto& [sel, p, prod] : cases) {
    const std::string id = "example-series/" + sel + "/" + std::to_string(p);
    s.run(id, kAnchorExample, [&] {
      const auto lhs = equivariant_rost_series(jprofile(parse_group(sel), p, t), 64);
      const bool ok = lhs == geometric_product(prod, 64);
      s.add(id, kAnchorExample, ok, "equivariant series vs prod 1/(1-t^d), d in " + join(prod) + ", order 64");
    });
  }
}

void table_rows(Suite& s, const std::vector<JProfile>& profiles) {
  for (const auto& jp : profiles) {
    const std::string tag = jp.selector + "/" + std::to_string(jp.p);
    s.run("f7/" + tag, kAnchorF7, [&] {
      const F7Report r = f7_identity_report(jp, 64);
      std::string details = jp.group + " p=" + std::to_string(jp.p) + ": generators " + join(jp.kac_degrees) +
                            ", rank " + std::to_string(jp.rank) + (r.equal ? ", series agree" : ", series differ") +
                            " to order 64";
      if (r.equal) s.add("f7/" + tag, kAnchorF7, CheckStatus::Pass, details);
      else if (r.count_mismatch) s.add("f7/" + tag, kAnchorF7, CheckStatus::ExpectedMismatch, details + " (list length differs from rank)");
      else s.add("f7/" + tag, kAnchorF7, CheckStatus::Fail, details);
    });
    s.run("multiplicities/" + tag, kAnchorQuotient, [&] {
      const DecompositionReport r = multiplicities(jp);
      s.add("multiplicities/" + tag, kAnchorQuotient, r.status == DecompositionReport::Status::Valid && r.total_check,
            "P(G/B) / generic Rost polynomial: " + status_name(r.status) + ", c(1) = " +
                r.multiplicities.coefficient_sum().get_str());
    });
    if (!jp.complete_intersection()) continue;
    s.run("cdim/" + tag, kAnchorCdimB, [&] {
      const CanonicalDimension cd = canonical_dimension(jp);
      s.add("cdim/" + tag, kAnchorCdimB, cd.agree,
            "A=" + std::to_string(cd.formula_a.value_or(-1)) + " B=" + std::to_string(cd.formula_b));
    });
    s.run("generator-product/" + tag, kAnchorProduct, [&] {
      const mpz_class prod =
          std::accumulate(jp.kac_degrees.begin(), jp.kac_degrees.end(), mpz_class(1), std::multiplies<>());
      const mpz_class total = multiplicities(jp).multiplicities.coefficient_sum();
      s.add("generator-product/" + tag, kAnchorProduct, prod == total,
            "prod d_{i,p} = " + prod.get_str() + ", c(1) = " + total.get_str());
    });
  }
}

void cdim_spots(Suite& s, const DataTables& t) {
  const std::vector<std::tuple<std::string, long, long>> spots = {{"G2", 2, 3}, {"F4", 3, 8}, {"E8", 2, 60}, {"E8", 5, 24}};
  for (const auto& [sel, p, want] : spots) {
    const std::string id = "cdim-value/" + sel + "/" + std::to_string(p);
    s.run(id, kAnchorCdimA, [&] {
      const CanonicalDimension cd = canonical_dimension(jprofile(parse_group(sel), p, t));
      s.add(id, kAnchorCdimA, cd.agree && cd.formula_b == want,
            "A=" + std::to_string(cd.formula_a.value_or(-1)) + " B=" + std::to_string(cd.formula_b) +
                ", expected " + std::to_string(want));
    });
  }
}

void kernel_rows(Suite& s, const DataTables& t, bool large) {
  std::vector<std::pair<std::string, long>> cases = {
      {"G2", 2},    {"F4", 3},    {"F4", 2},    {"A1/ad", 2}, {"A2/ad", 3}, {"A3/ad", 2},
      {"A3/mu2", 2}, {"A4/ad", 5}, {"C2/ad", 2}, {"C3/ad", 2}, {"C4/ad", 2}, {"D4/ad", 2},
      {"B2", 2},    {"B3", 2},    {"B3/ad", 2}, {"B4", 2},    {"D4", 2},    {"D4/so", 2}};
  if (large) {
    const std::vector<std::pair<std::string, long>> more = {
        {"A5/mu2", 2}, {"A5/mu3", 3}, {"A5/ad", 2}, {"A5/ad", 3}, {"C5/ad", 2}, {"C6/ad", 2}, {"D5/ad", 2},
        {"D6/ad", 2}, {"B5", 2},     {"D5", 2},    {"B6", 2},    {"E6", 3},    {"E6/ad", 3}, {"E6", 2},
        {"E7", 2},    {"E7", 3},     {"E8", 2},    {"E8", 3},    {"E8", 5}};
    cases.insert(cases.end(), more.begin(), more.end());
  }
  for (const auto& [sel, p] : cases) {
    const std::string id = "kernel/" + sel + "/" + std::to_string(p);
    s.run(id, kAnchorTable, [&] {
      const GroupSpec g = parse_group(sel);
      const RootDatum rd = root_datum_of(g, t);
      const JProfile jp = jprofile(g, p, t);
      const int top = *std::max_element(jp.kac_degrees.begin(), jp.kac_degrees.end());
      // Small ranks run to the top degree N; larger ones stop at the last
      // table degree to keep memory bounded.
      const int max_deg = rd.rank <= 4 ? rd.num_positive_roots : std::min(top, rd.num_positive_roots);
      KernelReport r;
      try {
        r = kernel_and_generators(rd, p, max_deg, {rd.rank >= 5});
      } catch (const DomainError& e) {
        const std::string what = e.what();
        if (what.rfind("enumeration cap", 0) == 0) {
          s.add(id, kAnchorTable, CheckStatus::Skipped, "enumeration cap: " + rd.label() + " has rank " + std::to_string(rd.rank));
          return;
        }
        throw;
      }
      const std::string details = jp.group + " p=" + std::to_string(p) + ": recomputed " + join(r.generator_degrees) +
                                  ", table " + join(jp.kac_degrees) + ", degrees 0.." + std::to_string(max_deg);
      if (r.matches_table1 && !r.partial) s.add(id, kAnchorTable, CheckStatus::Pass, details);
      else if (!jp.complete_intersection()) s.add(id, kAnchorTable, CheckStatus::ExpectedMismatch, details + " (list length differs from rank)");
      else s.add(id, kAnchorTable, CheckStatus::Fail, details);
    });
  }
}

void image_rows(Suite& s, const DataTables& t) {
  const std::vector<std::tuple<std::string, long, long>> cases = {{"G2", 2, 6}, {"F4", 2, 576}, {"F4", 3, 384}};
  for (const auto& [sel, p, total] : cases) {
    const std::string id = "image-dims/" + sel + "/" + std::to_string(p);
    s.run(id, kAnchorProduct, [&] {
      const GroupSpec g = parse_group(sel);
      const RootDatum rd = root_datum_of(g, t);
      const JProfile jp = jprofile(g, p, t);
      const TruncatedSeries c = multiplicities(jp).multiplicities;
      const TruncatedSeries img = image_dim_series(rd, p, c.order());
      const bool ok = img == c && c.coefficient_sum() == total;
      s.add(id, kAnchorProduct, ok,
            "image dimensions " + img.to_string() + " vs c(t) " + c.to_string() + ", total " + img.coefficient_sum().get_str());
    });
  }
}

void root_data(Suite& s, const DataTables& t) {
  const std::vector<std::pair<DynkinType, int>> types = {
      {DynkinType::A, 1}, {DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::A, 4}, {DynkinType::B, 2},
      {DynkinType::B, 3}, {DynkinType::B, 4}, {DynkinType::C, 3}, {DynkinType::C, 4}, {DynkinType::D, 4},
      {DynkinType::G, 2}, {DynkinType::F, 4}};
  for (const auto& [type, rank] : types) {
    const RootDatum rd = build_root_datum(type, rank, Isogeny::sc(), t);
    const std::string id = "weyl-poincare/" + rd.label();
    s.run(id, kAnchorDegrees, [&] {
      const int n = rd.num_positive_roots;
      TruncatedSeries prod = TruncatedSeries::one(n);
      for (int e : rd.degrees) prod = prod * telescoping(1, e, n);
      std::vector<mpz_class> counts;
      for (auto c : weyl_enumerate(rd)) counts.emplace_back(static_cast<unsigned long>(c));
      const TruncatedSeries lg(std::move(counts));
      const mpz_class order = std::accumulate(rd.degrees.begin(), rd.degrees.end(), mpz_class(1), std::multiplies<>());
      const bool ok = lg == prod && lg.coefficient_sum() == order && rd.weyl_order() == order;
      s.add(id, kAnchorWeyl, ok,
            "enumerated length counts vs prod (1-t^e)/(1-t), e in " + join(rd.degrees) + "; |W| = " + order.get_str());
    });
  }
}

void rost_and_quadrics(Suite& s) {
  s.run("rost-sum", kAnchorRost, [&] {
    bool ok = true;
    for (int n = 2; n <= 5; ++n)
      for (long p : {2L, 3L, 5L, 7L}) ok = ok && rost_poincare(RostParams::make(n, p)).coefficient_sum() == p;
    s.add("rost-sum", kAnchorRost, ok, "coefficient sum of R_{n,p} equals p for n = 2..5, p = 2, 3, 5, 7");
  });
  const std::vector<std::pair<std::string, int>> presets = {
      {"pfister", 2}, {"pfister", 3}, {"pfister", 4}, {"pfister-sub", 3}, {"pfister-sub", 4}, {"albert", 0},
      {"albert-sub", 0}, {"sb", 2}, {"sb", 3}, {"sb", 5}, {"sb-incidence", 3}, {"g2", 0}};
  for (const auto& [name, param] : presets) {
    const std::string id = "decomposition/" + name + (param ? "/" + std::to_string(param) : "");
    const char* anchor = name.rfind("albert", 0) == 0 ? kAnchorAlbert : kAnchorQuadrics;
    s.run(id, anchor, [&] {
      const PresetCheck pc = decomposition_preset(name, param);
      s.add(id, anchor, pc.passed, pc.description + ": c(t) = " + pc.report.multiplicities.to_string());
    });
  }
}

void graded_rings(Suite& s) {
  s.run("chow-gl7-sl3", kAnchorG2Torsor, [&] {
    const auto comps = gl7_mod_sl3();
    const std::vector<std::string> want = {"Z", "0", "Z/2", "Z", "0", "Z/2", "0", "0", "0"};
    std::string got;
    bool ok = comps.size() == want.size();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      got += (i ? ", " : "") + comps[i].to_string();
      ok = ok && i < want.size() && comps[i].to_string() == want[i];
    }
    s.add("chow-gl7-sl3", kAnchorG2Torsor, ok, "degrees 0..8: " + got);
  });
  s.run("chow-gl7-sl3-ranks", kAnchorG2Torsor, [&] {
    const auto comps = gl7_mod_sl3();
    const TruncatedSeries rost = rost_poincare(RostParams::make(3, 2), 8);
    bool ok = true;
    for (const auto& c : comps) {
      ok = ok && rost[c.degree] == c.free_rank();
      const bool tors = c.degree == 2 || c.degree == 5;
      ok = ok && (tors ? c.torsion() == std::vector<mpz_class>{2} : c.torsion().empty());
    }
    s.add("chow-gl7-sl3-ranks", kAnchorG2Torsor, ok, "free ranks follow 1 + t^3, torsion Z/2 exactly in degrees 2 and 5");
  });
  s.run("bgl2-over-bsl3", kAnchorBgl2, [&] {
    const FreeModuleReport r = bgl2_over_bsl3_check(20);
    std::string details = "degrees 0..20, Hilbert series to order 20";
    for (const auto& f : r.failures) details += "; " + f;
    s.add("bgl2-over-bsl3", kAnchorBgl2, r.passed, details);
  });
}

void bounds(Suite& s, const std::vector<JProfile>& profiles, const DataTables& t) {
  s.run("torsion-bound/general-base", kAnchorTorsion, [&] {
    const auto tors = TruncatedSeries::polynomial({1, 0, 1, 0, 0, 1}, 10);
    s.add("torsion-bound/general-base", kAnchorTorsion, leq(tors, geometric_product({2, 3}, 10)),
          "1 + t^2 + t^5 <= 1/((1-t^2)(1-t^3)) to order 10");
  });
  s.run("torsion-bound/over-field", kAnchorTorsion, [&] {
    const JProfile jp = jprofile(parse_group("G2"), 2, t);
    const TruncatedSeries b = torsion_upper_bound(jp, true, 10);
    const auto tors = TruncatedSeries::polynomial({1, 0, 1, 0, 0, 1}, 10);
    const bool ok = b.order() == 3 && leq(truncate(tors, b.order()), b) && b.order() < tors.degree();
    s.add("torsion-bound/over-field", kAnchorTorsion, ok,
          "bound over a field truncated at cdim = " + std::to_string(b.order()) + ", so t^5 lies outside it");
  });
  s.run("torsion-bound/at-least-one", kAnchorOrder, [&] {
    bool ok = true;
    for (const auto& jp : profiles) {
      const TruncatedSeries b = torsion_upper_bound(jp, true, 64);
      ok = ok && leq(TruncatedSeries::one(b.order()), b);
    }
    s.add("torsion-bound/at-least-one", kAnchorOrder, ok, "1 <= bound over a field for every table row");
  });
  s.run("split-quadrics", kAnchorQuadrics, [&] {
    const bool ok = split_quadric_poincare(2) == TruncatedSeries::polynomial({1, 2, 1}, 2) &&
                    split_quadric_poincare(6) == TruncatedSeries::polynomial({1, 1, 1, 2, 1, 1, 1}, 6);
    s.add("split-quadrics", kAnchorQuadrics, ok, "dimension 2 and 6 cell counts");
  });
}

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::ExpectedMismatch: return "expected-mismatch";
  }
  return "fail";
}

CheckStatus parse_check_status(const std::string& s) {
  for (CheckStatus c : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Skipped, CheckStatus::ExpectedMismatch})
    if (check_status_name(c) == s) return c;
  throw DomainError("unknown check status '" + s + "'");
}

int VerificationReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

VerificationReport verify_all(Scope scope, const DataTables& tables) {
  Suite s;
  const std::vector<JProfile> profiles = table_profiles(tables);
  example_series(s, tables);
  table_rows(s, profiles);
  cdim_spots(s, tables);
  kernel_rows(s, tables, scope == Scope::Full);
  image_rows(s, tables);
  root_data(s, tables);
  rost_and_quadrics(s);
  graded_rings(s);
  bounds(s, profiles, tables);
  VerificationReport r;
  r.scope = scope == Scope::Full ? "full" : "quick";
  r.checks = s.take();
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check_id", c.id}, {"anchor", c.anchor}, {"status", check_status_name(c.status)}, {"details", c.details}});
  return {{"scope", r.scope},
          {"checks", checks},
          {"summary",
           {{"pass", r.count(CheckStatus::Pass)},
            {"fail", r.count(CheckStatus::Fail)},
            {"skipped", r.count(CheckStatus::Skipped)},
            {"expected_mismatch", r.count(CheckStatus::ExpectedMismatch)},
            {"total", r.checks.size()}}},
          {"exit_code", r.exit_code()}};
}

VerificationReport verification_from(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.scope = j.at("scope").get<std::string>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("check_id").get<std::string>(), c.at("anchor").get<std::string>(),
                          parse_check_status(c.at("status").get<std::string>()), c.at("details").get<std::string>()});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("verification report: ") + e.what());
  }
}

}  // namespace rostkit
