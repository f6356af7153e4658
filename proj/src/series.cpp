#include "rostkit/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rostkit/error.hpp"

namespace rostkit {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw DomainError("series order must be nonnegative, got " + std::to_string(order));
  coeffs_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
}

TruncatedSeries::TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::polynomial(std::span<const mpz_class> coeffs, int order) {
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (static_cast<int>(k) <= order) {
      s.coeffs_[k] = coeffs[k];
    } else if (coeffs[k] != 0) {
      throw DomainError("polynomial has a nonzero term at degree " + std::to_string(k) +
                        " beyond order " + std::to_string(order));
    }
  }
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(std::initializer_list<long> coeffs, int order) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return polynomial(c, order);
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(0, order); }

TruncatedSeries TruncatedSeries::monomial(int degree, int order, long coefficient) {
  TruncatedSeries s(order);
  if (degree < 0) throw DomainError("negative monomial degree");
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = coefficient;
  return s;
}

int TruncatedSeries::degree() const {
  for (int k = order(); k >= 0; --k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0) return k;
  return -1;
}

mpz_class TruncatedSeries::coefficient_sum() const {
  mpz_class total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  for (int k = 0; k <= order(); ++k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (k == 0) {
      out << c.get_str();
    } else {
      out << (c < 0 ? " - " : " + ") << mpz_class(abs(c)).get_str() << "*t";
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

TruncatedSeries TruncatedSeries::parse(const std::string& text) {
  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> DomainError {
    return DomainError("cannot parse series at offset " + std::to_string(pos) + ": " + what);
  };
  bool first = true;
  skip_ws();
  while (pos < text.size()) {
    int sign = 1;
    if (!first) {
      if (text[pos] == '+') sign = 1;
      else if (text[pos] == '-') sign = -1;
      else throw fail("expected '+' or '-'");
      ++pos;
      skip_ws();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected coefficient");
    mpz_class c(text.substr(start, pos - start));
    int exponent = 0;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      if (pos >= text.size() || text[pos] != 't') throw fail("expected 't'");
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw fail("expected exponent");
        exponent = std::stoi(text.substr(start, pos - start));
      }
    }
    if (static_cast<int>(coeffs.size()) <= exponent) coeffs.resize(static_cast<std::size_t>(exponent) + 1, 0);
    coeffs[static_cast<std::size_t>(exponent)] += sign * c;
    first = false;
    skip_ws();
  }
  if (coeffs.empty()) throw fail("empty input");
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[static_cast<std::size_t>(k)] = a[k] + b[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

namespace {

int lowest_nonzero(const TruncatedSeries& s) {
  for (int k = 0; k <= s.order(); ++k)
    if (s[k] != 0) return k;
  return -1;
}

}  // namespace

SeriesQuotient exact_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int shift = lowest_nonzero(b);
  if (shift < 0) throw DomainError("division by the zero series");
  for (int k = 0; k < shift && k <= a.order(); ++k)
    if (a[k] != 0)
      throw DomainError("divisor starts at t^" + std::to_string(shift) +
                        " but dividend has a nonzero coefficient at t^" + std::to_string(k));
  const mpz_class& lead = b[shift];
  if (lead != 1 && lead != -1)
    throw DomainError("divisor has non-unit lowest coefficient " + lead.get_str());
  const int n = std::min(a.order(), b.order()) - shift;
  if (n < 0) throw DomainError("shift exceeds the known order of the operands");

  std::vector<mpz_class> qc(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    mpz_class acc = a[k + shift];
    for (int j = 1; j <= k && j + shift <= b.order(); ++j) acc -= b[j + shift] * qc[static_cast<std::size_t>(k - j)];
    qc[static_cast<std::size_t>(k)] = lead == 1 ? acc : mpz_class(-acc);
  }
  const auto division = poly_divmod(a.coefficients(), b.coefficients());
  return SeriesQuotient{TruncatedSeries(std::move(qc)), shift, division.exact};
}

TruncatedSeries truncate(const TruncatedSeries& c, int n) {
  if (n < 0) throw DomainError("truncation degree must be nonnegative");
  if (n > c.order())
    throw DomainError("cannot truncate at " + std::to_string(n) + ": series is only known to order " +
                      std::to_string(c.order()));
  std::vector<mpz_class> coeffs(c.coefficients().begin(), c.coefficients().begin() + n + 1);
  return TruncatedSeries(std::move(coeffs));
}

bool leq(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw DomainError("leq needs equal orders, got " + std::to_string(a.order()) + " and " +
                      std::to_string(b.order()));
  for (int k = 0; k <= a.order(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

TruncatedSeries geometric_product(std::span<const int> degrees, int trunc) {
  if (trunc < 0) throw DomainError("truncation order must be nonnegative");
  std::vector<mpz_class> c(static_cast<std::size_t>(trunc) + 1, 0);
  c[0] = 1;
  for (int d : degrees) {
    if (d < 1) throw DomainError("geometric_product needs positive degrees, got " + std::to_string(d));
    // multiply by 1/(1 - t^d): running sum with stride d
    for (int k = d; k <= trunc; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - d)];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries geometric_product(std::initializer_list<int> degrees, int trunc) {
  std::vector<int> d(degrees);
  return geometric_product(std::span<const int>(d), trunc);
}

TruncatedSeries telescoping(int step, int terms, int order) {
  if (step < 1 || terms < 1) throw DomainError("telescoping needs positive step and term count");
  std::vector<mpz_class> c(static_cast<std::size_t>(order) + 1, 0);
  for (int j = 0; j < terms && j * step <= order; ++j) c[static_cast<std::size_t>(j * step)] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries one_minus_t_pow(int d, int order) {
  if (d < 1) throw DomainError("one_minus_t_pow needs d >= 1");
  TruncatedSeries s = TruncatedSeries::one(order);
  return s - TruncatedSeries::monomial(d, order);
}

std::vector<mpz_class> trimmed(std::span<const mpz_class> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0) --n;
  return {coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<mpz_class> poly_mul(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  auto x = trimmed(a), y = trimmed(b);
  if (x.empty() || y.empty()) return {};
  std::vector<mpz_class> r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

PolyDivision poly_divmod(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  auto num = trimmed(a);
  const auto den = trimmed(b);
  if (den.empty()) throw DomainError("polynomial division by zero");
  PolyDivision out;
  out.exact = true;
  if (num.size() < den.size()) {
    out.remainder = num;
    out.exact = num.empty();
    return out;
  }
  const std::size_t dq = num.size() - den.size();
  out.quotient.assign(dq + 1, 0);
  const mpz_class& lead = den.back();
  for (std::size_t step = dq + 1; step-- > 0;) {
    const mpz_class& top = num[step + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      out.exact = false;
      break;
    }
    mpz_class q = top / lead;
    out.quotient[step] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[step + j] -= q * den[j];
  }
  out.remainder = trimmed(num);
  if (!out.remainder.empty()) out.exact = false;
  return out;
}

}  // namespace rostkit
