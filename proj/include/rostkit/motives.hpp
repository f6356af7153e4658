#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rostkit/group.hpp"
#include "rostkit/series.hpp"

namespace rostkit {

/// Rost motive of a pure symbol of length n mod p; d = (p^{n-1}-1)/(p-1).
struct RostParams {
  int n = 2;
  long p = 2;
  long d = 1;

  static RostParams make(int n, long p);
};

/// 1 + t^d + ... + t^{(p-1)d}.
TruncatedSeries rost_poincare(const RostParams& rp, std::optional<int> order = std::nullopt);

/// Maximal J-invariant data and generator degrees of I_p for a group and a
/// prime. A group/prime pair without a table row gets r = 0 and
/// kac_degrees = e_i.
struct JProfile {
  std::string group;       // display name, e.g. "E7^ad", "Spin_7"
  std::string selector;    // e.g. "E7/ad", "B3"
  std::string table_row;   // table "group" field, empty when no row applies
  DynkinType type = DynkinType::A;
  int rank = 0;
  Isogeny isogeny;
  long p = 2;
  int r = 0;
  std::vector<int> d;
  std::vector<int> k;
  std::vector<int> kac_degrees;
  /// Fundamental degrees e_1..e_l of the Weyl group.
  std::vector<int> degrees;

  /// Whether the kac list has exactly `rank` entries (a complete
  /// intersection shape, which the product formulas need).
  bool complete_intersection() const { return static_cast<int>(kac_degrees.size()) == rank; }
  friend bool operator==(const JProfile&, const JProfile&) = default;
};

JProfile jprofile(const GroupSpec& g, long p, const DataTables& tables = DataTables::embedded());

/// One concrete profile per table row, using small representative groups
/// for the parametric rows (several sizes each).
std::vector<JProfile> table_profiles(const DataTables& tables = DataTables::embedded());

/// prod_j (1 - t^{d_j p^{k_j}}) / (1 - t^{d_j}).
TruncatedSeries generic_rost_poincare(const JProfile& jp, std::optional<int> order = std::nullopt);

inline constexpr long kMaxListedShifts = 4096;

struct DecompositionReport {
  enum class Status { Valid, NonPolynomialQuotient, NegativeCoefficient };
  Status status = Status::Valid;
  TruncatedSeries whole{0};
  TruncatedSeries summand{0};
  /// c(t) = whole / summand.
  TruncatedSeries multiplicities{0};
  /// Shift i repeated c_i times (left empty above kMaxListedShifts entries).
  std::vector<int> shifts;
  /// c(1) * summand(1) == whole(1).
  bool total_check = false;
  /// Free-form remarks, e.g. a flagged index range.
  std::vector<std::string> notes;
  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

std::string status_name(DecompositionReport::Status s);

/// c(t) = P(G/B) / generic_rost_poincare, computed as an exact polynomial
/// division at full degree N.
DecompositionReport multiplicities(const JProfile& jp, std::optional<int> order = std::nullopt);

/// Exact polynomial division whole / summand.
DecompositionReport decomposition_check(const TruncatedSeries& whole, const TruncatedSeries& summand);

/// 1/(1-t)^l * prod_j (1-t^{d_j p^{k_j}})/(1-t^{d_j}) * prod_i (1-t)/(1-t^{e_i}).
TruncatedSeries equivariant_rost_series(const JProfile& jp, int trunc);

struct F7Report {
  TruncatedSeries lhs{0};
  TruncatedSeries rhs{0};
  bool equal = false;
  /// The kac list has a different length than the rank.
  bool count_mismatch = false;
  friend bool operator==(const F7Report&, const F7Report&) = default;
};

/// lhs = equivariant_rost_series, rhs = geometric_product(kac_degrees).
F7Report f7_identity_report(const JProfile& jp, int trunc);

struct CanonicalDimension {
  /// sum e_i - sum d_{i,p}; absent when the kac list length differs from l.
  std::optional<long> formula_a;
  std::string formula_a_reason;
  /// sum d_i (p^{k_i} - 1).
  long formula_b = 0;
  bool agree = false;
  friend bool operator==(const CanonicalDimension&, const CanonicalDimension&) = default;
};

CanonicalDimension canonical_dimension(const JProfile& jp);

/// geometric_product(kac_degrees, trunc), cut at formula B of the canonical
/// dimension when over_field.
TruncatedSeries torsion_upper_bound(const JProfile& jp, bool over_field, int trunc);

/// Odd D: 1 + t + ... + t^D; even D: the same plus t^{D/2}.
TruncatedSeries split_quadric_poincare(int dim, std::optional<int> order = std::nullopt);

/// Named decomposition presets.
struct PresetCheck {
  std::string name;
  std::string description;
  DecompositionReport report;
  /// Expected c(t) where the statement pins one down.
  std::optional<TruncatedSeries> expected;
  bool passed = false;
};

/// pfister, pfister-sub (param n); albert, albert-sub, g2 (param unused);
/// sb, sb-incidence (param p).
PresetCheck decomposition_preset(const std::string& name, int param);
std::vector<std::string> preset_names();

}  // namespace rostkit
