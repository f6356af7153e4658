#pragma once

#include <cstdint>
#include <vector>

namespace rostkit {

using FpVector = std::vector<std::uint32_t>;

/// Arithmetic in F_p for a prime p < 2^16.
struct PrimeField {
  std::uint32_t p;

  explicit PrimeField(long prime);
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p; }
  std::uint32_t neg(std::uint32_t a) const { return (p - a) % p; }
  std::uint32_t inv(std::uint32_t a) const;
  /// Representative of an arbitrary integer.
  std::uint32_t reduce(long a) const;
};

bool is_prime(long n);

/// Dense row-major matrix over F_p.
struct FpMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> data;

  FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

std::size_t fp_rank(const PrimeField& f, FpMatrix m);

/// Basis of {x : m x = 0}.
std::vector<FpVector> fp_nullspace(const PrimeField& f, FpMatrix m);

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis(const PrimeField& f, std::size_t n) : field_(f), n_(n) {}
  /// Adds v to the span; returns whether it was independent.
  bool add(FpVector v);
  bool contains(FpVector v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  void reduce(FpVector& v) const;

  PrimeField field_;
  std::size_t n_;
  std::vector<FpVector> rows_;        // each normalized: pivot entry 1
  std::vector<std::size_t> pivots_;
};

}  // namespace rostkit
