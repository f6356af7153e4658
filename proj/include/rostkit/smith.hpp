#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace rostkit {

/// Dense integer matrix with arbitrary-precision entries.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntegerMatrix identity(std::size_t n);

  mpz_class& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
mpz_class determinant(const IntegerMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... with
/// nonnegative entries. Every call re-multiplies and checks the
/// determinants of U and V; a failure raises InternalError.
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
  /// Diagonal of d, length min(rows, cols).
  std::vector<mpz_class> diagonal;
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Invariant factors of Z^cols / (row span of m): nontrivial finite factors
/// in divisibility order, then one 0 per free summand.
std::vector<mpz_class> cokernel_invariants(const IntegerMatrix& m);

}  // namespace rostkit
