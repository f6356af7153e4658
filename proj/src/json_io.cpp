#include "rostkit/json_io.hpp"


#include "rostkit/error.hpp"

namespace rostkit::json_io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json big(const mpz_class& x) {
  if (x.fits_slong_p()) return static_cast<long>(x.get_si());
  return x.get_str();
}

mpz_class big_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

Json to_json(const TruncatedSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coefficients()) a.push_back(big(c));
  return a;
}

TruncatedSeries series_from(const Json& j) {
  return guarded("series", [&] {
    if (!j.is_array() || j.empty()) throw DomainError("series must be a nonempty array");
    std::vector<mpz_class> c;
    for (const auto& x : j) c.push_back(big_from(x));
    return TruncatedSeries(std::move(c));
  });
}

// ---------------------------------------------------------------- schubert

Json to_json(const KernelReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree},
                    {"dim_kernel", row.dim_kernel},
                    {"dim_image", row.dim_image},
                    {"new_generators", row.new_generators}});
  return {{"type", r.type},
          {"p", r.p},
          {"max_degree", r.max_degree},
          {"rows", rows},
          {"generator_degrees", r.generator_degrees},
          {"expected_degrees", r.expected_degrees},
          {"partial", r.partial},
          {"matches_table1", r.matches_table1}};
}

KernelReport kernel_report_from(const Json& j) {
  return guarded("kernel report", [&] {
    KernelReport r;
    r.type = j.at("type").get<std::string>();
    r.p = j.at("p").get<long>();
    r.max_degree = j.at("max_degree").get<int>();
    for (const auto& row : j.at("rows"))
      r.rows.push_back({row.at("degree").get<int>(), row.at("dim_kernel").get<std::size_t>(),
                        row.at("dim_image").get<std::size_t>(), row.at("new_generators").get<std::size_t>()});
    r.generator_degrees = j.at("generator_degrees").get<std::vector<int>>();
    r.expected_degrees = j.at("expected_degrees").get<std::vector<int>>();
    r.partial = j.at("partial").get<bool>();
    r.matches_table1 = j.at("matches_table1").get<bool>();
    return r;
  });
}

// ---------------------------------------------------------------- motives

Json to_json(const DecompositionReport& r) {
  return {{"status", status_name(r.status)},
          {"whole", to_json(r.whole)},
          {"summand", to_json(r.summand)},
          {"multiplicities", to_json(r.multiplicities)},
          {"shifts", r.shifts},
          {"total_check", r.total_check},
          {"notes", r.notes}};
}

DecompositionReport decomposition_from(const Json& j) {
  return guarded("decomposition report", [&] {
    DecompositionReport r;
    const auto s = j.at("status").get<std::string>();
    using S = DecompositionReport::Status;
    bool known = false;
    for (S st : {S::Valid, S::NonPolynomialQuotient, S::NegativeCoefficient})
      if (status_name(st) == s) {
        r.status = st;
        known = true;
      }
    if (!known) throw DomainError("unknown status " + s);
    r.whole = series_from(j.at("whole"));
    r.summand = series_from(j.at("summand"));
    r.multiplicities = series_from(j.at("multiplicities"));
    r.shifts = j.at("shifts").get<std::vector<int>>();
    r.total_check = j.at("total_check").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

Json to_json(const F7Report& r) {
  return {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}, {"count_mismatch", r.count_mismatch}};
}

F7Report f7_from(const Json& j) {
  return guarded("f7 report", [&] {
    F7Report r;
    r.lhs = series_from(j.at("lhs"));
    r.rhs = series_from(j.at("rhs"));
    r.equal = j.at("equal").get<bool>();
    r.count_mismatch = j.at("count_mismatch").get<bool>();
    return r;
  });
}

Json to_json(const CanonicalDimension& c) {
  Json j = {{"formula_b", c.formula_b}, {"agree", c.agree}};
  j["formula_a"] = c.formula_a ? Json(*c.formula_a) : Json(nullptr);
  if (!c.formula_a_reason.empty()) j["formula_a_reason"] = c.formula_a_reason;
  return j;
}

CanonicalDimension canonical_dimension_from(const Json& j) {
  return guarded("canonical dimension", [&] {
    CanonicalDimension c;
    if (!j.at("formula_a").is_null()) c.formula_a = j.at("formula_a").get<long>();
    c.formula_a_reason = j.value("formula_a_reason", std::string());
    c.formula_b = j.at("formula_b").get<long>();
    c.agree = j.at("agree").get<bool>();
    return c;
  });
}

Json to_json(const JProfile& jp) {
  return {{"group", jp.group},
          {"selector", jp.selector},
          {"table_row", jp.table_row},
          {"type", std::string(1, type_letter(jp.type))},
          {"rank", jp.rank},
          {"isogeny", jp.isogeny.label()},
          {"p", jp.p},
          {"r", jp.r},
          {"d", jp.d},
          {"k", jp.k},
          {"kac_degrees", jp.kac_degrees},
          {"degrees", jp.degrees}};
}

JProfile jprofile_from(const Json& j) {
  return guarded("profile", [&] {
    JProfile jp;
    jp.group = j.at("group").get<std::string>();
    jp.selector = j.at("selector").get<std::string>();
    jp.table_row = j.at("table_row").get<std::string>();
    const auto t = j.at("type").get<std::string>();
    if (t.size() != 1) throw DomainError("type must be one letter");
    jp.type = parse_type_letter(t[0]);
    jp.rank = j.at("rank").get<int>();
    jp.isogeny = Isogeny::parse(j.at("isogeny").get<std::string>());
    jp.p = j.at("p").get<long>();
    jp.r = j.at("r").get<int>();
    jp.d = j.at("d").get<std::vector<int>>();
    jp.k = j.at("k").get<std::vector<int>>();
    jp.kac_degrees = j.at("kac_degrees").get<std::vector<int>>();
    jp.degrees = j.at("degrees").get<std::vector<int>>();
    return jp;
  });
}

Json to_json(const PresetCheck& c) {
  Json j = {{"name", c.name}, {"description", c.description}, {"report", to_json(c.report)}, {"passed", c.passed}};
  j["expected"] = c.expected ? to_json(*c.expected) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------- graded rings

Json to_json(const GradedComponent& c) {
  Json f = Json::array();
  for (const auto& x : c.invariant_factors) f.push_back(big(x));
  return {{"degree", c.degree}, {"invariant_factors", f}, {"group", c.to_string()}};
}

GradedComponent component_from(const Json& j) {
  return guarded("graded component", [&] {
    GradedComponent c;
    c.degree = j.at("degree").get<int>();
    for (const auto& x : j.at("invariant_factors")) c.invariant_factors.push_back(big_from(x));
    return c;
  });
}

Json to_json(const FreeModuleReport& r) {
  Json degs = Json::array();
  for (const auto& d : r.degrees)
    degs.push_back({{"degree", d.degree},
                    {"monomials", d.monomials},
                    {"candidates", d.candidates},
                    {"rank", d.rank},
                    {"unimodular", d.unimodular},
                    {"ok", d.ok}});
  return {{"max_degree", r.max_degree},
          {"degrees", degs},
          {"direct_sum_ok", r.direct_sum_ok},
          {"relation_ok", r.relation_ok},
          {"hilbert_ok", r.hilbert_ok},
          {"passed", r.passed},
          {"failures", r.failures}};
}

FreeModuleReport free_module_from(const Json& j) {
  return guarded("free module report", [&] {
    FreeModuleReport r;
    r.max_degree = j.at("max_degree").get<int>();
    for (const auto& d : j.at("degrees"))
      r.degrees.push_back({d.at("degree").get<int>(), d.at("monomials").get<int>(), d.at("candidates").get<int>(),
                           d.at("rank").get<int>(), d.at("unimodular").get<bool>(), d.at("ok").get<bool>()});
    r.direct_sum_ok = j.at("direct_sum_ok").get<bool>();
    r.relation_ok = j.at("relation_ok").get<bool>();
    r.hilbert_ok = j.at("hilbert_ok").get<bool>();
    r.passed = j.at("passed").get<bool>();
    r.failures = j.at("failures").get<std::vector<std::string>>();
    return r;
  });
}

}  // namespace rostkit::json_io
