#include "rostkit/smith.hpp"

#include <utility>

#include "rostkit/error.hpp"

namespace rostkit {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw InternalError("matrix product: shape mismatch");
  IntegerMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows != m.cols) throw InternalError("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  IntegerMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a != b)
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a != b)
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[dst] -= q * row[src]
void sub_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t c = 0; c < m.cols; ++c)
    if (m.at(src, c) != 0) m.at(dst, c) -= q * m.at(src, c);
}

void sub_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t r = 0; r < m.rows; ++r)
    if (m.at(r, src) != 0) m.at(r, dst) -= q * m.at(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm s{IntegerMatrix::identity(m.rows), m, IntegerMatrix::identity(m.cols), {}};
  IntegerMatrix& d = s.d;
  const std::size_t n = std::min(m.rows, m.cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t pr = d.rows, pc = d.cols;
      for (std::size_t r = t; r < d.rows; ++r)
        for (std::size_t c = t; c < d.cols; ++c)
          if (d.at(r, c) != 0 && (pr == d.rows || abs(d.at(r, c)) < abs(d.at(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == d.rows) break;
      swap_rows(d, t, pr);
      swap_rows(s.u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(s.v, t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < d.rows; ++r) {
        if (d.at(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(r, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        sub_row(d, r, t, q);
        sub_row(s.u, r, t, q);
        if (d.at(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < d.cols; ++c) {
        if (d.at(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, c).get_mpz_t(), d.at(t, t).get_mpz_t());
        sub_col(d, c, t, q);
        sub_col(s.v, c, t, q);
        if (d.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into row t and retry.
      std::size_t bad = d.rows;
      for (std::size_t r = t + 1; r < d.rows && bad == d.rows; ++r)
        for (std::size_t c = t + 1; c < d.cols; ++c)
          if (!mpz_divisible_p(d.at(r, c).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == d.rows) break;
      sub_row(d, t, bad, -1);
      sub_row(s.u, t, bad, -1);
    }
    if (d.at(t, t) < 0) {
      for (std::size_t c = 0; c < d.cols; ++c) d.at(t, c) = -d.at(t, c);
      for (std::size_t c = 0; c < s.u.cols; ++c) s.u.at(t, c) = -s.u.at(t, c);
    }
  }
  for (std::size_t t = 0; t < n; ++t) s.diagonal.push_back(d.at(t, t));

  // Defensive re-check of the factorization.
  if (!(s.u * m * s.v == d)) throw InternalError("Smith normal form: U*M*V != D");
  for (std::size_t r = 0; r < d.rows; ++r)
    for (std::size_t c = 0; c < d.cols; ++c)
      if (r != c && d.at(r, c) != 0) throw InternalError("Smith normal form: D is not diagonal");
  for (std::size_t t = 0; t + 1 < n; ++t)
    if (s.diagonal[t] == 0 ? s.diagonal[t + 1] != 0
                           : !mpz_divisible_p(s.diagonal[t + 1].get_mpz_t(), s.diagonal[t].get_mpz_t()))
      throw InternalError("Smith normal form: diagonal is not a divisibility chain");
  if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1)
    throw InternalError("Smith normal form: transform is not unimodular");
  return s;
}

std::vector<mpz_class> cokernel_invariants(const IntegerMatrix& m) {
  std::vector<mpz_class> out;
  std::size_t nonzero = 0;
  if (m.rows > 0) {
    const SmithForm s = smith_normal_form(m);
    for (const auto& x : s.diagonal)
      if (x != 0) {
        ++nonzero;
        if (x != 1) out.push_back(x);
      }
  }
  for (std::size_t k = nonzero; k < m.cols; ++k) out.emplace_back(0);
  return out;
}

}  // namespace rostkit
