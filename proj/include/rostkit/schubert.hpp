#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "rostkit/fp_linalg.hpp"
#include "rostkit/rootdata.hpp"
#include "rostkit/series.hpp"

namespace rostkit {

using Exponent = std::array<std::uint8_t, 8>;

/// Homogeneous polynomial over F_p in the variables x_1..x_l, where x_j is
/// the j-th basis vector of the character lattice of the root datum (the
/// fundamental weights for a simply connected group).
class GradedPoly {
 public:
  GradedPoly(long p, int nvars, int degree);

  static GradedPoly constant(long p, int nvars, long c);
  /// The single variable x_j (0-based).
  static GradedPoly variable(long p, int nvars, int j);
  /// Linear form sum_j coeffs[j] x_j.
  static GradedPoly linear(long p, std::span<const int> coeffs);
  static GradedPoly monomial(long p, const Exponent& e, int nvars, long c = 1);

  long prime() const { return field_.p; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Exponent, std::uint32_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the degree-0 term (0 unless degree is 0).
  std::uint32_t constant_term() const;

  /// Adds c * x^e; e must have the declared degree.
  void add_term(const Exponent& e, long c);

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.field_.p == b.field_.p && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly scaled(long c) const;

  std::string to_string() const;

 private:
  PrimeField field_;
  int nvars_;
  int degree_;
  std::map<Exponent, std::uint32_t> terms_;
};

int exponent_degree(const Exponent& e, int nvars);

/// Reflection data of the character lattice needed by the operators:
/// pairing[j][i] = <x_j, alpha_i^vee> and root[i] = alpha_i in the x-basis.
struct LatticeAction {
  IntMatrix pairing;
  IntMatrix root;
};
LatticeAction lattice_action(const RootDatum& rd);

/// s_i f with s_i(x_j) = x_j - <x_j, alpha_i^vee> alpha_i.
GradedPoly reflect(const RootDatum& rd, int i, const GradedPoly& f);

/// (f - s_i f) / alpha_i over F_p (i is 0-based). The quotient is computed by
/// the twisted Leibniz rule and then checked by multiplying back; a failed
/// check raises InternalError.
GradedPoly divided_difference(const RootDatum& rd, int i, const GradedPoly& f);

/// Cap on Weyl elements visited when enumerating by length.
inline constexpr std::size_t kEnumerationCap = 2'000'000;

/// Coordinates of f under the characteristic map: for each Weyl element w of
/// length deg f, the constant term of d_{i_1} ... d_{i_d} f where
/// (i_1, ..., i_d) is a reduced word of w. Ordered as in weyl_walk.
FpVector char_map_coords(const RootDatum& rd, long p, const GradedPoly& f);

/// Same, along a caller-supplied word (0-based indices).
std::uint32_t char_map_along(const RootDatum& rd, const std::vector<int>& word, const GradedPoly& f);

struct KernelRow {
  int degree = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
  std::size_t new_generators = 0;
  friend bool operator==(const KernelRow&, const KernelRow&) = default;
};

struct KernelReport {
  std::string type;  // root datum label, e.g. "F4", "A3/ad"
  long p = 0;
  int max_degree = 0;
  std::vector<KernelRow> rows;
  std::vector<int> generator_degrees;
  /// max_degree too small to see every expected generator.
  bool partial = false;
  /// Expected generator degrees (J-invariant table or, for a prime without
  /// a table row, the degrees e_i) restricted to the computed range.
  std::vector<int> expected_degrees;
  bool matches_table1 = false;
  friend bool operator==(const KernelReport&, const KernelReport&) = default;
};

/// Ranks 1-4 always; 5-6 only with allow_large_rank (a warning goes to
/// stderr); 7 and above are refused.
struct KernelOptions {
  bool allow_large_rank = false;
};

KernelReport kernel_and_generators(const RootDatum& rd, long p, int max_deg, KernelOptions opts = {});

/// Coefficient d = dimension of the image of the characteristic map in
/// degree d, for d = 0..max_deg.
TruncatedSeries image_dim_series(const RootDatum& rd, long p, int max_deg, KernelOptions opts = {});

}  // namespace rostkit
