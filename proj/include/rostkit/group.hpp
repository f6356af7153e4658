#pragma once

#include <string>

#include "rostkit/rootdata.hpp"
#include "rostkit/rules.hpp"

namespace rostkit {

/// A concrete split simple group named by a selector, with the family name
/// and parameter bindings used to look it up in the J-invariant table.
struct GroupSpec {
  std::string selector;
  DynkinType type;
  int rank = 0;
  Isogeny isogeny;
  /// Family key of jinvariant.json: SL, PGSp, O+, Spin, PGO+, HSpin, Sp, G2,
  /// F4, E6, E7, E8.
  std::string family;
  /// n, m, l as they appear in the table rules (p is bound at lookup).
  rules::Bindings bindings;
  /// Human-readable classical name, e.g. "Spin_7", "PGO+_12", "E6^ad".
  std::string display_name;
};

/// Parses a group selector.
///
/// Dynkin form: <TYPE><rank>[/<isogeny>] with isogeny sc, ad, so, hs or
/// mu<m>, e.g. G2, F4, E6/ad, A4/mu5, D4/so.
/// Classical names: SL<n>, SL<n>/mu<m>, PGL<n>, Sp<n>, PGSp<n>, Spin<n>,
/// SO<n> (same as O+<n>), PGO<n> (n even), HSpin<n> (n divisible by 4).
/// The number in a classical name is the size of the defining matrices.
GroupSpec parse_group(const std::string& selector);

/// The group a root datum describes (family and bindings for table lookup).
GroupSpec group_of(const RootDatum& rd);

RootDatum root_datum_of(const GroupSpec& g, const DataTables& tables = DataTables::embedded());

}  // namespace rostkit
