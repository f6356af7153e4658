#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rostkit/series.hpp"
#include "rostkit/tables.hpp"

namespace rostkit {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

/// Which quotient of the simply connected group: sc, ad, mu<m> (type A:
/// SL_n/mu_m), so (type D: SO_2n) or hs (type D, even rank: half-spin).
struct Isogeny {
  enum class Kind { SimplyConnected, Adjoint, Quotient, SpecialOrthogonal, HalfSpin };
  Kind kind = Kind::SimplyConnected;
  int order = 1;  // m for Kind::Quotient

  static Isogeny sc() { return {}; }
  static Isogeny ad() { return {Kind::Adjoint, 1}; }
  static Isogeny mu(int m) { return {Kind::Quotient, m}; }
  static Isogeny parse(const std::string& label);
  std::string label() const;

  friend bool operator==(const Isogeny&, const Isogeny&) = default;
};

/// Root datum of a split simple group. Weights are written in the basis of
/// fundamental weights; cartan[i][j] = <alpha_i, alpha_j^vee>, so row i is the
/// simple root alpha_i. Indices are 0-based internally; public text uses 1..l.
struct RootDatum {
  DynkinType type;
  int rank = 0;
  Isogeny isogeny;
  IntMatrix cartan;
  /// Positive roots in simple-root coordinates, found by reflection closure.
  IntMatrix positive_roots;
  int num_positive_roots = 0;
  std::vector<int> degrees;
  /// Rows form a Z-basis of the character lattice, in weight coordinates.
  IntMatrix lattice_basis;

  const IntVector& simple_root(int i) const { return cartan.at(static_cast<std::size_t>(i)); }
  /// "G2", "E6/ad", "A3/mu2", ...
  std::string label() const;
  /// Order of W as the product of the degrees.
  std::uint64_t weyl_order() const;
};

/// Builds and validates a root datum. Rejects inadmissible input with a
/// message naming the offending field (type, rank or isogeny).
RootDatum build_root_datum(DynkinType type, int rank, Isogeny isogeny = Isogeny::sc(),
                           const DataTables& tables = DataTables::embedded());

/// Cartan matrix for a Dynkin type in Bourbaki numbering.
IntMatrix cartan_matrix(DynkinType type, int rank);

/// Matrix of the simple reflection s_i acting on weight coordinates (columns).
IntMatrix simple_reflection(const RootDatum& rd, int i);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);

struct WeylElement {
  IntMatrix matrix;
  int length = 0;
  std::vector<int> reduced_word;  // 0-based simple-reflection indices
};

/// s_{w_1} ... s_{w_k}; fails when the word is not reduced.
WeylElement weyl_element(const RootDatum& rd, const std::vector<int>& word);

/// Number of positive roots sent to negative roots by the matrix.
int inversion_count(const RootDatum& rd, const IntMatrix& m);

/// Bond order m_ij of s_i s_j.
int coxeter_order(const RootDatum& rd, int i, int j);

/// Elements of W up to a given length, layer by layer. Element w is tracked by
/// nu = w^{-1} rho; extending w by s_i on the right increases the length iff
/// nu_i > 0. Each node records its parent and the appended letter, so the
/// reduced word of a node is its parent's word followed by `letter`.
struct WeylWalk {
  struct Node {
    IntVector nu;
    int parent = -1;
    int letter = -1;
  };
  std::vector<std::vector<Node>> layers;

  std::vector<int> reduced_word(int length, int index) const;
};

/// Upper bound on rank for building WeylWalk / uncapped enumeration.
inline constexpr int kMaxEnumerationRank = 7;

/// Fails with DomainError naming the cap when more than node_cap elements
/// would be stored.
WeylWalk weyl_walk(const RootDatum& rd, int max_length, std::size_t node_cap = SIZE_MAX);

/// Number of Weyl elements of each length 0..cap (or 0..N when uncapped).
/// Uncapped enumeration is refused above rank 7 (use length_gen_function).
std::vector<std::uint64_t> weyl_enumerate(const RootDatum& rd, std::optional<int> length_cap = std::nullopt);

/// prod_i (1 - t^{e_i}) / (1 - t) truncated at trunc.
TruncatedSeries length_gen_function(const RootDatum& rd, int trunc);

/// P_W(t) / P_{W_J}(t) for the parabolic subgroup generated by the simple
/// reflections in `subset` (1-based indices).
TruncatedSeries parabolic_poincare(const RootDatum& rd, const std::set<int>& subset, int trunc);

/// Poincare polynomial of G/P_k for the maximal parabolic P_k (all simple
/// reflections except the k-th, 1-based).
TruncatedSeries maximal_parabolic_poincare(const RootDatum& rd, int k, int trunc);

/// Degrees of the Weyl group generated by the given simple reflections
/// (0-based), found by classifying the connected components of the subdiagram.
std::vector<int> subsystem_degrees(const RootDatum& rd, const std::set<int>& nodes,
                                   const DataTables& tables = DataTables::embedded());

/// Torsion primes of a simple group by Dynkin type (isogeny does not enter).
std::vector<int> torsion_primes(DynkinType type, int rank, Isogeny isogeny = Isogeny::sc(),
                                const DataTables& tables = DataTables::embedded());

/// Union over the simple factors of a semisimple group.
std::vector<int> torsion_primes(const std::vector<std::pair<DynkinType, int>>& factors,
                                const DataTables& tables = DataTables::embedded());

}  // namespace rostkit
