#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rostkit {

/// Integer power series c_0 + c_1 t + ... + c_n t^n known exactly up to the
/// truncation order n. Coefficients past the order are unknown, never zero:
/// binary operations return min(order) of their operands.
class TruncatedSeries {
 public:
  static constexpr int kDefaultOrder = 64;

  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<mpz_class> coeffs);

  /// Polynomial with the given coefficients, known exactly up to `order`
  /// (a polynomial's higher coefficients are genuinely zero, so padding is
  /// exact here). Fails when the polynomial has a nonzero term past `order`.
  static TruncatedSeries polynomial(std::span<const mpz_class> coeffs, int order);
  static TruncatedSeries polynomial(std::initializer_list<long> coeffs, int order);
  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(int degree, int order, long coefficient = 1);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const mpz_class> coefficients() const { return coeffs_; }

  /// Highest index with a nonzero coefficient, or -1 for the zero series.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  mpz_class coefficient_sum() const;

  /// Canonical text form "c0 + c1*t + c2*t^2 + ..." listing every coefficient
  /// through the order.
  std::string to_string() const;
  static TruncatedSeries parse(const std::string& text);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<mpz_class> coeffs_;
};

/// Cauchy product truncated to the smaller order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

struct SeriesQuotient {
  TruncatedSeries quotient;
  /// Power of t cancelled from both operands before dividing.
  int shift = 0;
  /// Treating both operands as polynomials (their coefficient vectors):
  /// whether b divides a with zero remainder over Z.
  bool polynomial_multiple = false;
};

/// Power-series quotient a / b. After cancelling the common power of t, b must
/// have constant term +-1; the quotient is then known up to order
/// min(order) - shift.
SeriesQuotient exact_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients 0..n of c. Fails for n > order.
TruncatedSeries truncate(const TruncatedSeries& c, int n);

/// Coefficientwise a_i <= b_i. Orders must match.
bool leq(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod_d 1/(1 - t^d) truncated at `trunc`; the coefficient at k counts the
/// multisets of parts from `degrees` summing to k.
TruncatedSeries geometric_product(std::span<const int> degrees, int trunc);
TruncatedSeries geometric_product(std::initializer_list<int> degrees, int trunc);

/// 1 + t^step + t^{2 step} + ... + t^{(terms-1) step}, i.e. the telescoped
/// quotient (1 - t^{step*terms}) / (1 - t^step).
TruncatedSeries telescoping(int step, int terms, int order);

/// 1 - t^d at the given order.
TruncatedSeries one_minus_t_pow(int d, int order);

/// Long division of integer polynomials over Z. `exact` is false when the
/// remainder is nonzero or a leading-coefficient division is not integral.
struct PolyDivision {
  std::vector<mpz_class> quotient;
  std::vector<mpz_class> remainder;
  bool exact = false;
};
PolyDivision poly_divmod(std::span<const mpz_class> a, std::span<const mpz_class> b);

/// Exact (untruncated) product of two polynomials.
std::vector<mpz_class> poly_mul(std::span<const mpz_class> a, std::span<const mpz_class> b);

/// Drops trailing zero coefficients.
std::vector<mpz_class> trimmed(std::span<const mpz_class> coeffs);

}  // namespace rostkit
