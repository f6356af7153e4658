#include "rostkit/fp_linalg.hpp"

#include <string>

#include "rostkit/error.hpp"

namespace rostkit {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(long prime) : p(static_cast<std::uint32_t>(prime)) {
  if (prime >= 65536 || !is_prime(prime)) throw DomainError("prime: " + std::to_string(prime) + " is not a prime below 65536");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p == 0) throw InternalError("inverse of zero in F_p");
  // a^(p-2) by square and multiply.
  std::uint32_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::reduce(long a) const {
  const long m = a % static_cast<long>(p);
  return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& f, FpMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
    const std::uint32_t inv = f.inv(m.at(r, c));
    for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = f.mul(m.at(r, k), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const std::uint32_t factor = m.at(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        if (m.at(r, k) != 0) m.at(i, k) = f.sub(m.at(i, k), f.mul(factor, m.at(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t fp_rank(const PrimeField& f, FpMatrix m) { return rref(f, m).size(); }

std::vector<FpVector> fp_nullspace(const PrimeField& f, FpMatrix m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

void EchelonBasis::reduce(FpVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t c = v[pivots_[k]];
    if (c == 0) continue;
    const FpVector& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < n_; ++j)
      if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
  }
}

bool EchelonBasis::add(FpVector v) {
  if (v.size() != n_) throw InternalError("echelon basis: vector length mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  const std::uint32_t inv = field_.inv(v[piv]);
  for (std::size_t j = piv; j < n_; ++j) v[j] = field_.mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(FpVector v) const {
  reduce(v);
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace rostkit
