#include "rostkit/tables.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rostkit/error.hpp"
#include "rostkit/rules.hpp"

namespace rostkit {

char type_letter(DynkinType t) { return "ABCDEFG"[static_cast<int>(t)]; }

DynkinType parse_type_letter(char c) {
  if (c < 'A' || c > 'G') throw DomainError(std::string("unknown Dynkin type '") + c + "'");
  return static_cast<DynkinType>(c - 'A');
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open data file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<std::string> optional_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

std::vector<int> to_ints(const std::vector<long>& xs) { return {xs.begin(), xs.end()}; }

}  // namespace

const DataTables& DataTables::embedded() {
  static const DataTables tables = from_json(embedded_data::kDegreesJson, embedded_data::kJinvariantJson);
  return tables;
}

DataTables DataTables::load(const std::filesystem::path& dir) {
  return from_json(read_file(dir / "degrees.json"), read_file(dir / "jinvariant.json"));
}

DataTables DataTables::from_json(const std::string& degrees_json, const std::string& jinvariant_json) {
  DataTables t;
  try {
    const auto deg = nlohmann::json::parse(degrees_json);
    for (const auto& row : deg.at("types")) {
      DegreeRow r;
      const auto letter = row.at("type").get<std::string>();
      if (letter.size() != 1) throw DomainError("degrees.json: bad type '" + letter + "'");
      r.type = parse_type_letter(letter[0]);
      const auto& range = row.at("rank_range");
      r.min_rank = range.at(0).get<int>();
      if (!range.at(1).is_null()) r.max_rank = range.at(1).get<int>();
      r.degrees_rule = row.at("degrees_rule").get<std::string>();
      r.torsion_primes_rule = row.at("torsion_primes_rule").get<std::string>();
      t.degree_rows_.push_back(std::move(r));
    }
    const auto jinv = nlohmann::json::parse(jinvariant_json);
    for (const auto& row : jinv.at("rows")) {
      JRow r;
      r.group = row.at("group").get<std::string>();
      r.family = row.at("family").get<std::string>();
      r.isogeny = optional_string(row, "isogeny");
      r.condition = optional_string(row, "condition");
      r.primes = row.at("primes").get<std::string>();
      r.r = row.at("r").get<std::string>();
      r.d = row.at("d").get<std::string>();
      r.k = row.at("k").get<std::string>();
      r.kac = row.at("kac").get<std::string>();
      t.jrows_.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed data table: ") + e.what());
  }
  return t;
}

bool DataTables::admissible(DynkinType type, int rank) const {
  for (const auto& r : degree_rows_)
    if (r.type == type && rank >= r.min_rank && (!r.max_rank || rank <= *r.max_rank)) return true;
  return false;
}

const DegreeRow& DataTables::row_for(DynkinType type, int rank) const {
  for (const auto& r : degree_rows_)
    if (r.type == type && rank >= r.min_rank && (!r.max_rank || rank <= *r.max_rank)) return r;
  throw DomainError(std::string("rank: no degree data for type ") + type_letter(type) + std::to_string(rank));
}

std::vector<int> DataTables::degrees(DynkinType type, int rank) const {
  return to_ints(rules::eval_seq(row_for(type, rank).degrees_rule, {{"m", rank}}));
}

std::vector<int> DataTables::torsion_primes(DynkinType type, int rank) const {
  return to_ints(rules::eval_seq(row_for(type, rank).torsion_primes_rule, {{"m", rank}}));
}

}  // namespace rostkit
