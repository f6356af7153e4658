#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "rostkit/series.hpp"

namespace rostkit {

/// Integer polynomial in named generators: exponent vector -> coefficient.
using IntPoly = std::map<std::vector<int>, mpz_class>;

struct GradedGenerator {
  std::string name;
  int degree = 1;
  friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

/// Z[generators] / (relations), graded by generator degrees.
struct GradedPresentation {
  std::vector<GradedGenerator> generators;
  std::vector<std::string> relation_text;
  std::vector<IntPoly> relations;
  std::vector<int> relation_degrees;

  /// Parses relations such as "2*x2", "x2^2", "y1^3 - y1*y2" against the
  /// generator names; rejects non-homogeneous relations.
  static GradedPresentation make(std::vector<GradedGenerator> generators, std::vector<std::string> relations);
  /// {"generators": [{"name": "x2", "degree": 2}, ...], "relations": [...]}.
  static GradedPresentation from_json(const std::string& text);
  std::string to_json() const;
};

/// Parses an expression over the named generators. Grammar: sums and
/// differences of products of integers, generator names, parenthesized
/// expressions and powers with nonnegative integer exponents.
IntPoly parse_polynomial(const std::string& text, const std::vector<GradedGenerator>& generators);
std::string polynomial_to_string(const IntPoly& f, const std::vector<GradedGenerator>& generators);
IntPoly poly_product(const IntPoly& a, const IntPoly& b);
IntPoly poly_difference(const IntPoly& a, const IntPoly& b);

struct GradedComponent {
  int degree = 0;
  /// Divisibility order, 0 entries (free summands) last; empty = trivial.
  std::vector<mpz_class> invariant_factors;

  int free_rank() const;
  std::vector<mpz_class> torsion() const;
  /// "Z", "Z/2", "0", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;
  friend bool operator==(const GradedComponent&, const GradedComponent&) = default;
};

/// Degree-d part of the presented ring, via the Smith normal form of the
/// matrix of (relation x monomial) products on the degree-d monomials.
GradedComponent graded_component(const GradedPresentation& pres, int degree);

/// Z[x2, x3] / (2 x2, x2^2, x3^2) with deg x_i = i.
GradedPresentation gl7_mod_sl3_presentation();
/// Components of degrees 0..8.
std::vector<GradedComponent> gl7_mod_sl3();

/// Degreewise checks that Z[y1, y2] (deg y_i = i) is free over
/// A = Z[y1^2 - y2, y1 y2] with basis 1, y1, y1^2.
struct BasisDegreeCheck {
  int degree = 0;
  int monomials = 0;   // size of the monomial basis of Z[y1, y2] in this degree
  int candidates = 0;  // products y1^j u^a v^b, j < 3
  int rank = 0;        // rank of the coefficient matrix
  bool unimodular = false;
  bool ok = false;
  friend bool operator==(const BasisDegreeCheck&, const BasisDegreeCheck&) = default;
};

struct FreeModuleReport {
  int max_degree = 0;
  std::vector<BasisDegreeCheck> degrees;
  /// (a): every degree passed.
  bool direct_sum_ok = false;
  /// (b): y1^3 = y1 y2 + y1 (y1^2 - y2).
  bool relation_ok = false;
  /// (c): 1/((1-t)(1-t^2)) = (1+t+t^2)/((1-t^2)(1-t^3)) to max(max_degree, 20).
  bool hilbert_ok = false;
  bool passed = false;
  /// "degree 7: (a) ..." lines for anything that failed.
  std::vector<std::string> failures;
  friend bool operator==(const FreeModuleReport&, const FreeModuleReport&) = default;
};

FreeModuleReport bgl2_over_bsl3_check(int max_deg);

}  // namespace rostkit
