#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rostkit {

enum class DynkinType { A, B, C, D, E, F, G };

char type_letter(DynkinType t);
DynkinType parse_type_letter(char c);

/// One row of the degrees/torsion-prime table, parametric in the rank m.
struct DegreeRow {
  DynkinType type;
  int min_rank = 1;
  std::optional<int> max_rank;
  std::string degrees_rule;
  std::string torsion_primes_rule;
};

/// One record of the J-invariant table. Rules are evaluated by rules::eval_*
/// against the family bindings of a concrete group (see group.hpp).
struct JRow {
  std::string group;
  std::string family;
  std::optional<std::string> isogeny;
  std::optional<std::string> condition;
  std::string primes;
  std::string r;
  std::string d;
  std::string k;
  std::string kac;
};

/// Both data tables. The embedded copy is compiled in from data/*.json; a
/// directory holding replacement degrees.json / jinvariant.json can be loaded
/// instead.
class DataTables {
 public:
  static const DataTables& embedded();
  static DataTables load(const std::filesystem::path& dir);
  static DataTables from_json(const std::string& degrees_json, const std::string& jinvariant_json);

  /// Materialized degrees e_1..e_l for a type and rank.
  std::vector<int> degrees(DynkinType type, int rank) const;
  std::vector<int> torsion_primes(DynkinType type, int rank) const;
  /// Whether the type/rank pair has a row at all.
  bool admissible(DynkinType type, int rank) const;

  const std::vector<DegreeRow>& degree_rows() const { return degree_rows_; }
  const std::vector<JRow>& jrows() const { return jrows_; }

 private:
  const DegreeRow& row_for(DynkinType type, int rank) const;

  std::vector<DegreeRow> degree_rows_;
  std::vector<JRow> jrows_;
};

namespace embedded_data {
extern const char* const kDegreesJson;
extern const char* const kJinvariantJson;
}  // namespace embedded_data

}  // namespace rostkit
