#include "rostkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rostkit/error.hpp"
#include "rostkit/gradedring.hpp"
#include "rostkit/json_io.hpp"
#include "rostkit/motives.hpp"
#include "rostkit/schubert.hpp"
#include "rostkit/verify.hpp"

namespace rostkit::cli {

namespace {

using json_io::Json;

struct Options {
  std::string format = "text";
  std::string data;
  std::string group;
  long prime = 2;
  int trunc = TruncatedSeries::kDefaultOrder;
  int n = 0;
  std::optional<int> max_deg;
  bool allow_large_rank = false;
  bool over_field = false;
  std::string preset;
  int param = 0;
  std::string whole;
  std::string summand;
  std::string presentation;
  std::string scope = "quick";
};

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

// Key/value lines with the keys padded to one column.
void print_fields(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& fields) {
  std::size_t w = 0;
  for (const auto& [k, v] : fields) w = std::max(w, k.size());
  for (const auto& [k, v] : fields) out << std::left << std::setw(static_cast<int>(w) + 2) << (k + ":") << v << "\n";
}

void print_table(std::ostream& out, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) w[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << std::right << std::setw(static_cast<int>(w[c])) << r[c];
      out << (c + 1 < r.size() ? "  " : "\n");
    }
  };
  line(head);
  for (const auto& r : rows) line(r);
}

TruncatedSeries polynomial_arg(const std::string& text, const char* what) {
  if (text.empty()) throw DomainError(std::string(what) + ": missing polynomial");
  if (text.find('t') != std::string::npos) return TruncatedSeries::parse(text);
  std::vector<mpz_class> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      c.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw DomainError(std::string(what) + ": bad coefficient '" + item + "'");
    }
  }
  if (c.empty()) throw DomainError(std::string(what) + ": missing polynomial");
  return TruncatedSeries(std::move(c));
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (!o.data.empty()) {
      loaded_ = DataTables::load(o.data);
      tables_ = &*loaded_;
    }
  }

  bool json() const { return o_.format == "json"; }
  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  JProfile profile() const { return jprofile(group(), o_.prime, *tables_); }
  GroupSpec group() const {
    if (o_.group.empty()) throw DomainError("--group is required");
    return parse_group(o_.group);
  }
  RootDatum datum() const { return root_datum_of(group(), *tables_); }
  int trunc() const {
    if (o_.trunc < 0) throw DomainError("--trunc must be nonnegative");
    return o_.trunc;
  }

  int series() {
    const TruncatedSeries s = equivariant_rost_series(profile(), trunc());
    if (json()) emit(json_io::to_json(s));
    else out_ << s.to_string() << "\n";
    return 0;
  }

  int rost() {
    TruncatedSeries s{0};
    if (!o_.group.empty()) {
      s = generic_rost_poincare(profile());
    } else {
      if (o_.n == 0) throw DomainError("rost needs --n (symbol length) or --group");
      s = rost_poincare(RostParams::make(o_.n, o_.prime));
    }
    if (json()) emit(json_io::to_json(s));
    else out_ << s.to_string() << "\n";
    return 0;
  }

  void print_decomposition(const DecompositionReport& r) {
    std::vector<std::pair<std::string, std::string>> f = {
        {"status", status_name(r.status)},
        {"whole", r.whole.to_string()},
        {"summand", r.summand.to_string()},
        {"multiplicities", r.multiplicities.to_string()},
        {"total check", r.total_check ? "ok" : "failed"}};
    if (!r.shifts.empty()) {
      std::string s;
      for (std::size_t i = 0; i < r.shifts.size(); ++i) s += (i ? " " : "") + std::to_string(r.shifts[i]);
      f.emplace_back("shifts", s);
    }
    for (const auto& n : r.notes) f.emplace_back("note", n);
    print_fields(out_, f);
  }

  int multiplicities_cmd() {
    const JProfile jp = profile();
    const DecompositionReport r = multiplicities(jp);
    if (json()) emit({{"profile", json_io::to_json(jp)}, {"report", json_io::to_json(r)}});
    else {
      print_fields(out_, {{"group", jp.group}, {"p", std::to_string(jp.p)}});
      print_decomposition(r);
    }
    return r.status == DecompositionReport::Status::Valid ? 0 : 1;
  }

  int candim() {
    const CanonicalDimension cd = canonical_dimension(profile());
    if (json()) {
      emit(json_io::to_json(cd));
    } else if (cd.formula_a) {
      out_ << "A=" << *cd.formula_a << " B=" << cd.formula_b << (cd.agree ? " agree" : " disagree") << "\n";
    } else {
      out_ << "A=undefined B=" << cd.formula_b << " (" << cd.formula_a_reason << ")\n";
    }
    return 0;
  }

  int torsion_bound() {
    const TruncatedSeries b = torsion_upper_bound(profile(), o_.over_field, trunc());
    if (json()) emit(json_io::to_json(b));
    else out_ << b.to_string() << "\n";
    return 0;
  }

  int kernel_degree(const RootDatum& rd, long p) const {
    if (o_.max_deg) return *o_.max_deg;
    if (rd.rank <= 4) return rd.num_positive_roots;
    const JProfile jp = jprofile(group_of(rd), p, *tables_);
    return std::min(*std::max_element(jp.kac_degrees.begin(), jp.kac_degrees.end()), rd.num_positive_roots);
  }

  int kac() {
    const RootDatum rd = datum();
    const KernelReport r = kernel_and_generators(rd, o_.prime, kernel_degree(rd, o_.prime), {o_.allow_large_rank});
    if (json()) {
      emit(json_io::to_json(r));
      return 0;
    }
    print_fields(out_, {{"type", r.type},
                        {"p", std::to_string(r.p)},
                        {"degrees", "0.." + std::to_string(r.max_degree)},
                        {"generator degrees", join(r.generator_degrees)},
                        {"table degrees", join(r.expected_degrees)},
                        {"matches table", r.matches_table1 ? "yes" : "no"},
                        {"partial", r.partial ? "yes" : "no"}});
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.rows)
      rows.push_back({std::to_string(row.degree), std::to_string(row.dim_kernel), std::to_string(row.dim_image),
                      std::to_string(row.new_generators)});
    print_table(out_, {"degree", "kernel", "image", "new generators"}, rows);
    return 0;
  }

  int image_dims() {
    const RootDatum rd = datum();
    const int md = o_.max_deg.value_or(rd.num_positive_roots);
    const TruncatedSeries s = image_dim_series(rd, o_.prime, md, {o_.allow_large_rank});
    if (json()) emit(json_io::to_json(s));
    else out_ << s.to_string() << "\n";
    return 0;
  }

  int decomp_check() {
    if (!o_.preset.empty()) {
      const PresetCheck pc = decomposition_preset(o_.preset, o_.param);
      if (json()) emit(json_io::to_json(pc));
      else {
        print_fields(out_, {{"preset", pc.name}, {"description", pc.description}});
        print_decomposition(pc.report);
        if (pc.expected) print_fields(out_, {{"expected", pc.expected->to_string()}});
        print_fields(out_, {{"result", pc.passed ? "pass" : "fail"}});
      }
      return pc.passed ? 0 : 1;
    }
    const DecompositionReport r =
        decomposition_check(polynomial_arg(o_.whole, "--whole"), polynomial_arg(o_.summand, "--summand"));
    if (json()) emit(json_io::to_json(r));
    else print_decomposition(r);
    return r.status == DecompositionReport::Status::Valid ? 0 : 1;
  }

  void print_components(const std::vector<GradedComponent>& comps) {
    if (json()) {
      Json a = Json::array();
      for (const auto& c : comps) a.push_back(json_io::to_json(c));
      emit(a);
      return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : comps) {
      std::string f;
      for (std::size_t i = 0; i < c.invariant_factors.size(); ++i)
        f += (i ? " " : "") + c.invariant_factors[i].get_str();
      rows.push_back({std::to_string(c.degree), c.to_string(), "[" + f + "]"});
    }
    print_table(out_, {"degree", "group", "invariant factors"}, rows);
  }

  int chow() {
    if (!o_.presentation.empty()) {
      std::ifstream in(o_.presentation);
      if (!in) throw DomainError("cannot read " + o_.presentation);
      std::stringstream ss;
      ss << in.rdbuf();
      const GradedPresentation pres = GradedPresentation::from_json(ss.str());
      std::vector<GradedComponent> comps;
      for (int d = 0; d <= o_.max_deg.value_or(8); ++d) comps.push_back(graded_component(pres, d));
      print_components(comps);
      return 0;
    }
    if (o_.preset == "gl7-sl3") {
      print_components(gl7_mod_sl3());
      return 0;
    }
    if (o_.preset == "bgl2") {
      const FreeModuleReport r = bgl2_over_bsl3_check(o_.max_deg.value_or(20));
      if (json()) emit(json_io::to_json(r));
      else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& d : r.degrees)
          rows.push_back({std::to_string(d.degree), std::to_string(d.monomials), std::to_string(d.candidates),
                          std::to_string(d.rank), d.unimodular ? "yes" : "no", d.ok ? "ok" : "FAIL"});
        print_table(out_, {"degree", "monomials", "candidates", "rank", "unimodular", "(a)"}, rows);
        print_fields(out_, {{"(a) direct sum", r.direct_sum_ok ? "ok" : "failed"},
                            {"(b) relation", r.relation_ok ? "ok" : "failed"},
                            {"(c) Hilbert series", r.hilbert_ok ? "ok" : "failed"}});
        for (const auto& f : r.failures) out_ << f << "\n";
      }
      return r.passed ? 0 : 1;
    }
    throw DomainError("chow needs --preset gl7-sl3|bgl2 or --presentation <file>");
  }

  int verify() {
    const VerificationReport r = verify_all(o_.scope == "full" ? Scope::Full : Scope::Quick, *tables_);
    if (json()) {
      emit(to_json(r));
      return r.exit_code();
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.checks) rows.push_back({check_status_name(c.status), c.id, c.details});
    std::size_t w0 = 0, w1 = 0;
    for (const auto& row : rows) {
      w0 = std::max(w0, row[0].size());
      w1 = std::max(w1, row[1].size());
    }
    for (const auto& row : rows)
      out_ << std::left << std::setw(static_cast<int>(w0) + 2) << row[0] << std::setw(static_cast<int>(w1) + 2) << row[1]
           << row[2] << "\n";
    out_ << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail) << " fail, "
         << r.count(CheckStatus::Skipped) << " skipped, " << r.count(CheckStatus::ExpectedMismatch)
         << " expected-mismatch (" << r.checks.size() << " checks, scope " << r.scope << ")\n";
    return r.exit_code();
  }

  int weyl() {
    const RootDatum rd = datum();
    const auto counts = weyl_enumerate(rd);
    if (json()) {
      emit({{"type", rd.label()},
            {"rank", rd.rank},
            {"degrees", rd.degrees},
            {"num_positive_roots", rd.num_positive_roots},
            {"order", rd.weyl_order()},
            {"length_counts", counts}});
      return 0;
    }
    std::string c;
    for (std::size_t i = 0; i < counts.size(); ++i) c += (i ? " " : "") + std::to_string(counts[i]);
    print_fields(out_, {{"type", rd.label()},
                        {"rank", std::to_string(rd.rank)},
                        {"degrees", join(rd.degrees)},
                        {"positive roots", std::to_string(rd.num_positive_roots)},
                        {"order", std::to_string(rd.weyl_order())},
                        {"length counts", c}});
    return 0;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::optional<DataTables> loaded_;
  const DataTables* tables_ = &DataTables::embedded();
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Poincare series, multiplicities and Chow-ring checks for Rost motives", "rostkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data", o.data, "Directory with degrees.json and jinvariant.json");

  auto group_opts = [&](CLI::App* c, bool need_group) {
    auto* g = c->add_option("--group", o.group, "Group selector, e.g. G2, E6/ad, A4/mu5, Spin9, PGO12");
    if (need_group) g->required();
    c->add_option("--prime", o.prime, "Prime p");
  };

  auto* series = app.add_subcommand("series", "Equivariant Rost series of a group");
  group_opts(series, true);
  series->add_option("--trunc", o.trunc, "Truncation order");
  auto* rost = app.add_subcommand("rost", "Rost polynomial R_{n,p}, or the generic one of a group");
  group_opts(rost, false);
  rost->add_option("--n", o.n, "Symbol length");
  auto* mult = app.add_subcommand("multiplicities", "Multiplicities of the Rost summand in the flag variety");
  group_opts(mult, true);
  auto* candim = app.add_subcommand("candim", "Canonical p-dimension by both formulas");
  group_opts(candim, true);
  auto* tb = app.add_subcommand("torsion-bound", "Upper bound for the torsion series");
  group_opts(tb, true);
  tb->add_option("--trunc", o.trunc, "Truncation order");
  tb->add_flag("--over-field", o.over_field, "Truncate at the canonical dimension");
  auto* kac = app.add_subcommand("kac", "Recompute generator degrees of the mod-p kernel");
  group_opts(kac, true);
  kac->add_option("--max-deg", o.max_deg, "Highest degree to compute");
  kac->add_flag("--allow-large-rank", o.allow_large_rank, "Allow ranks 5 and 6");
  auto* img = app.add_subcommand("image-dims", "Dimensions of the image of the characteristic map");
  group_opts(img, true);
  img->add_option("--max-deg", o.max_deg, "Highest degree to compute");
  img->add_flag("--allow-large-rank", o.allow_large_rank, "Allow ranks 5 and 6");
  auto* dc = app.add_subcommand("decomp-check", "Divide a Poincare polynomial by a summand");
  auto* preset = dc->add_option("--preset", o.preset, "pfister, pfister-sub, albert, albert-sub, sb, sb-incidence, g2");
  dc->add_option("--param", o.param, "n for the Pfister presets, p for the Severi-Brauer ones");
  dc->add_option("--whole", o.whole, "Whole polynomial, e.g. 1,2,1 or '1 + 2*t + 1*t^2'")->excludes(preset);
  dc->add_option("--summand", o.summand, "Summand polynomial")->excludes(preset);
  auto* chow = app.add_subcommand("chow", "Graded components of a presented ring");
  chow->add_option("--preset", o.preset, "gl7-sl3 or bgl2");
  chow->add_option("--presentation", o.presentation, "JSON presentation file");
  chow->add_option("--max-deg", o.max_deg, "Highest degree");
  auto* va = app.add_subcommand("verify-all", "Run the cross-check suite");
  va->add_option("--scope", o.scope, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  auto* weyl = app.add_subcommand("weyl", "Weyl group length counts");
  weyl->add_option("--group", o.group, "Group selector")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Runner r(o, out);
    if (*series) return r.series();
    if (*rost) return r.rost();
    if (*mult) return r.multiplicities_cmd();
    if (*candim) return r.candim();
    if (*tb) return r.torsion_bound();
    if (*kac) return r.kac();
    if (*img) return r.image_dims();
    if (*dc) return r.decomp_check();
    if (*chow) return r.chow();
    if (*va) return r.verify();
    if (*weyl) return r.weyl();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace rostkit::cli
