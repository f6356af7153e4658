#include "rostkit/schubert.hpp"

#include <algorithm>
#include <cstring>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "rostkit/error.hpp"
#include "rostkit/group.hpp"
#include "rostkit/motives.hpp"

namespace rostkit {

// ---------------------------------------------------------------- GradedPoly

int exponent_degree(const Exponent& e, int nvars) {
  int d = 0;
  for (int j = 0; j < nvars; ++j) d += e[j];
  return d;
}

GradedPoly::GradedPoly(long p, int nvars, int degree) : field_(p), nvars_(nvars), degree_(degree) {
  if (nvars < 1 || nvars > 8) throw DomainError("polynomial: 1 to 8 variables supported");
  if (degree < 0 || degree > 255) throw DomainError("polynomial: degree must lie in 0..255");
}

GradedPoly GradedPoly::constant(long p, int nvars, long c) {
  GradedPoly f(p, nvars, 0);
  f.add_term(Exponent{}, c);
  return f;
}

GradedPoly GradedPoly::variable(long p, int nvars, int j) {
  if (j < 0 || j >= nvars) throw DomainError("polynomial: variable index out of range");
  Exponent e{};
  e[j] = 1;
  return monomial(p, e, nvars);
}

GradedPoly GradedPoly::linear(long p, std::span<const int> coeffs) {
  GradedPoly f(p, static_cast<int>(coeffs.size()), 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Exponent e{};
    e[j] = 1;
    f.add_term(e, coeffs[j]);
  }
  return f;
}

GradedPoly GradedPoly::monomial(long p, const Exponent& e, int nvars, long c) {
  GradedPoly f(p, nvars, exponent_degree(e, nvars));
  f.add_term(e, c);
  return f;
}

std::uint32_t GradedPoly::constant_term() const {
  if (degree_ != 0 || terms_.empty()) return 0;
  return terms_.begin()->second;
}

void GradedPoly::add_term(const Exponent& e, long c) {
  for (int j = nvars_; j < 8; ++j)
    if (e[j] != 0) throw DomainError("polynomial: exponent uses a variable beyond nvars");
  if (exponent_degree(e, nvars_) != degree_) throw DomainError("polynomial: term degree differs from declared degree");
  const std::uint32_t v = field_.reduce(c);
  if (v == 0) return;
  auto [it, fresh] = terms_.emplace(e, v);
  if (!fresh) {
    it->second = field_.add(it->second, v);
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_compatible(const GradedPoly& a, const GradedPoly& b, bool same_degree) {
  if (a.prime() != b.prime() || a.nvars() != b.nvars() || (same_degree && a.degree() != b.degree()))
    throw DomainError("polynomial: operands differ in prime, variables or degree");
}

}  // namespace

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  require_compatible(a, b, true);
  GradedPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return a + b.scaled(-1); }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  require_compatible(a, b, false);
  GradedPoly r(a.prime(), a.nvars(), a.degree() + b.degree());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{};
      for (int j = 0; j < a.nvars(); ++j) {
        const int s = ea[j] + eb[j];
        e[j] = static_cast<std::uint8_t>(s);
      }
      r.add_term(e, static_cast<long>(a.field_.mul(ca, cb)));
    }
  return r;
}

GradedPoly GradedPoly::scaled(long c) const {
  GradedPoly r(field_.p, nvars_, degree_);
  const std::uint32_t k = field_.reduce(c);
  for (const auto& [e, v] : terms_) r.add_term(e, static_cast<long>(field_.mul(v, k)));
  return r;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const bool constant = exponent_degree(it->first, nvars_) == 0;
    if (it->second != 1 || constant) out << it->second;
    bool need_star = it->second != 1 || constant;
    for (int j = 0; j < nvars_; ++j) {
      if (it->first[j] == 0) continue;
      if (need_star) out << "*";
      out << "x" << (j + 1);
      if (it->first[j] > 1) out << "^" << static_cast<int>(it->first[j]);
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- lattice action

LatticeAction lattice_action(const RootDatum& rd) {
  const int l = rd.rank;
  const IntMatrix& b = rd.lattice_basis;
  LatticeAction la;
  la.pairing = b;
  // alpha_i = sum_j a_j x_j  <=>  a * B = cartan row i. Solve B^T a = row.
  la.root.assign(static_cast<std::size_t>(l), IntVector(static_cast<std::size_t>(l), 0));
  for (int i = 0; i < l; ++i) {
    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(l), std::vector<mpq_class>(l + 1));
    for (int r = 0; r < l; ++r) {
      for (int c = 0; c < l; ++c) m[r][c] = b[c][r];
      m[r][l] = rd.cartan[i][r];
    }
    for (int c = 0; c < l; ++c) {
      int piv = c;
      while (piv < l && m[piv][c] == 0) ++piv;
      if (piv == l) throw InternalError("character lattice basis is singular");
      std::swap(m[c], m[piv]);
      for (int r = 0; r < l; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const mpq_class f = m[r][c] / m[c][c];
        for (int k = c; k <= l; ++k) m[r][k] -= f * m[c][k];
      }
    }
    for (int j = 0; j < l; ++j) {
      const mpq_class a = m[j][l] / m[j][j];
      if (a.get_den() != 1) throw InternalError("simple root outside the character lattice");
      la.root[i][j] = static_cast<int>(a.get_num().get_si());
    }
  }
  return la;
}

namespace {

void check_index(const RootDatum& rd, int i) {
  if (i < 0 || i >= rd.rank) throw DomainError("simple-root index out of range");
}

void check_poly(const RootDatum& rd, const GradedPoly& f) {
  if (f.nvars() != rd.rank) throw DomainError("polynomial: variable count differs from the rank");
}

GradedPoly reflect_with(const LatticeAction& la, int i, const GradedPoly& f) {
  const long p = f.prime();
  const int l = f.nvars();
  std::vector<GradedPoly> images;
  for (int j = 0; j < l; ++j) {
    IntVector lin(static_cast<std::size_t>(l), 0);
    lin[j] = 1;
    for (int t = 0; t < l; ++t) lin[t] -= la.pairing[j][i] * la.root[i][t];
    images.push_back(GradedPoly::linear(p, lin));
  }
  GradedPoly out(p, l, f.degree());
  for (const auto& [e, c] : f.terms()) {
    GradedPoly term = GradedPoly::constant(p, l, c);
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < e[j]; ++k) term = term * images[j];
    out = out + term;
  }
  return out;
}

// Variable to split off a monomial: one fixed by s_i when there is one.
int leibniz_variable(const LatticeAction& la, int i, const Exponent& e, int l) {
  int j = -1;
  for (int t = 0; t < l; ++t) {
    if (e[t] == 0) continue;
    if (la.pairing[t][i] == 0) return t;
    if (j < 0) j = t;
  }
  return j;
}

// Divided difference of a monomial by the twisted Leibniz rule
//   d_i(x_j m) = <x_j, alpha_i^vee> m + s_i(x_j) d_i(m),
// picking x_j with zero pairing when possible so that s_i(x_j) = x_j.
class DividedDifference {
 public:
  DividedDifference(const LatticeAction& la, int i, long p, int nvars) : la_(la), i_(i), p_(p), l_(nvars) {}

  GradedPoly of(const GradedPoly& f) {
    if (f.degree() == 0) return GradedPoly(p_, l_, 0);
    GradedPoly out(p_, l_, f.degree() - 1);
    for (const auto& [e, c] : f.terms()) out = out + monomial(e).scaled(c);
    return out;
  }

 private:
  const GradedPoly& monomial(const Exponent& e) {
    auto it = memo_.find(e);
    if (it != memo_.end()) return it->second;
    const int j = leibniz_variable(la_, i_, e, l_);
    Exponent rest = e;
    --rest[j];
    const int d = exponent_degree(e, l_);
    const long c = la_.pairing[j][i_];
    GradedPoly result(p_, l_, d - 1);
    if (d == 1) {
      result = GradedPoly::constant(p_, l_, c);
    } else {
      IntVector lin(static_cast<std::size_t>(l_), 0);
      lin[j] = 1;
      for (int t = 0; t < l_; ++t) lin[t] -= static_cast<int>(c) * la_.root[i_][t];
      const GradedPoly inner = monomial(rest);
      result = GradedPoly::linear(p_, lin) * inner;
      if (c != 0) result = result + GradedPoly::monomial(p_, rest, l_, c);
    }
    return memo_.emplace(e, std::move(result)).first->second;
  }

  const LatticeAction& la_;
  int i_;
  long p_;
  int l_;
  std::map<Exponent, GradedPoly> memo_;
};

GradedPoly checked_divided_difference(const LatticeAction& la, int i, const GradedPoly& f) {
  DividedDifference dd(la, i, f.prime(), f.nvars());
  GradedPoly q = dd.of(f);
  if (f.degree() > 0) {
    const GradedPoly alpha = GradedPoly::linear(f.prime(), la.root[i]);
    if (!(alpha * q == f - reflect_with(la, i, f)))
      throw InternalError("inexact division: alpha_" + std::to_string(i + 1) + " * d_i f != f - s_i f");
  }
  return q;
}

}  // namespace

GradedPoly reflect(const RootDatum& rd, int i, const GradedPoly& f) {
  check_index(rd, i);
  check_poly(rd, f);
  return reflect_with(lattice_action(rd), i, f);
}

GradedPoly divided_difference(const RootDatum& rd, int i, const GradedPoly& f) {
  check_index(rd, i);
  check_poly(rd, f);
  return checked_divided_difference(lattice_action(rd), i, f);
}

std::uint32_t char_map_along(const RootDatum& rd, const std::vector<int>& word, const GradedPoly& f) {
  check_poly(rd, f);
  if (static_cast<int>(word.size()) != f.degree())
    throw DomainError("word length " + std::to_string(word.size()) + " differs from polynomial degree " +
                      std::to_string(f.degree()));
  const LatticeAction la = lattice_action(rd);
  GradedPoly g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_index(rd, *it);
    g = checked_divided_difference(la, *it, g);
  }
  return g.constant_term();
}

FpVector char_map_coords(const RootDatum& rd, long p, const GradedPoly& f) {
  check_poly(rd, f);
  if (f.prime() != p) throw DomainError("polynomial prime differs from requested prime");
  const int d = f.degree();
  if (d > rd.num_positive_roots) return {};
  const WeylWalk walk = weyl_walk(rd, d, kEnumerationCap);
  const LatticeAction la = lattice_action(rd);
  FpVector out;
  const auto& layer = walk.layers.at(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < layer.size(); ++k) {
    const auto word = walk.reduced_word(d, static_cast<int>(k));
    GradedPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = checked_divided_difference(la, *it, g);
    out.push_back(g.constant_term());
  }
  return out;
}

// ---------------------------------------------------------------- batch kernel engine

namespace {

std::uint64_t key_of(const Exponent& e) {
  std::uint64_t k = 0;
  std::memcpy(&k, e.data(), sizeof k);
  return k;
}

struct DegreePart {
  std::vector<Exponent> monomials;
  std::unordered_map<std::uint64_t, int> index;
  // times[k][j]: index in the next degree of monomial k times x_j.
  std::vector<std::vector<int>> times;
};

void enumerate_monomials(int l, int d, int var, Exponent& cur, std::vector<Exponent>& out) {
  if (var == l - 1) {
    cur[var] = static_cast<std::uint8_t>(d);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[var] = static_cast<std::uint8_t>(a);
    enumerate_monomials(l, d - a, var + 1, cur, out);
  }
  cur[var] = 0;
}

using SparseRow = std::vector<std::pair<int, std::uint32_t>>;

struct EngineResult {
  std::vector<KernelRow> rows;
  std::vector<int> generator_degrees;
};

void check_limits(const RootDatum& rd, int max_deg, const KernelOptions& opts) {
  if (rd.rank >= 7)
    throw DomainError("enumeration cap: kernel recomputation is limited to rank <= 6 (" + rd.label() + " has rank " +
                      std::to_string(rd.rank) + ")");
  if (rd.rank >= 5) {
    if (!opts.allow_large_rank)
      throw DomainError("rank: kernel recomputation for rank 5-6 is opt-in (" + rd.label() + ")");
    std::cerr << "warning: kernel recomputation for " << rd.label() << " (rank " << rd.rank
              << ") can take a long time and a lot of memory\n";
  }
  if (max_deg < 0 || max_deg > rd.num_positive_roots)
    throw DomainError("max_deg: must lie in 0.." + std::to_string(rd.num_positive_roots) + " for " + rd.label());
}

EngineResult run_engine(const RootDatum& rd, long p, int max_deg, bool find_generators) {
  const PrimeField field(p);
  const int l = rd.rank;
  const LatticeAction la = lattice_action(rd);

  std::vector<DegreePart> parts(static_cast<std::size_t>(max_deg) + 2);
  for (int d = 0; d <= max_deg + 1; ++d) {
    Exponent cur{};
    enumerate_monomials(l, d, 0, cur, parts[d].monomials);
    for (std::size_t k = 0; k < parts[d].monomials.size(); ++k)
      parts[d].index.emplace(key_of(parts[d].monomials[k]), static_cast<int>(k));
  }
  for (int d = 0; d <= max_deg; ++d) {
    auto& part = parts[d];
    part.times.assign(part.monomials.size(), std::vector<int>(static_cast<std::size_t>(l)));
    for (std::size_t k = 0; k < part.monomials.size(); ++k)
      for (int j = 0; j < l; ++j) {
        Exponent e = part.monomials[k];
        ++e[j];
        part.times[k][j] = parts[d + 1].index.at(key_of(e));
      }
  }

  // ops[i][d][k]: d_i of monomial k of degree d, over monomials of degree d-1.
  std::vector<std::vector<std::vector<SparseRow>>> ops(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    auto& op = ops[i];
    op.resize(static_cast<std::size_t>(max_deg) + 1);
    for (int d = 1; d <= max_deg; ++d) {
      const auto& mons = parts[d].monomials;
      op[d].resize(mons.size());
      std::vector<std::uint32_t> scratch(parts[d - 1].monomials.size(), 0);
      std::vector<int> touched;
      auto bump = [&](int idx, std::uint32_t v) {
        if (v == 0) return;
        if (scratch[idx] == 0) touched.push_back(idx);
        scratch[idx] = field.add(scratch[idx], v);
      };
      for (std::size_t k = 0; k < mons.size(); ++k) {
        const Exponent& e = mons[k];
        const int j = leibniz_variable(la, i, e, l);
        const long c = la.pairing[j][i];
        SparseRow row;
        if (d == 1) {
          if (field.reduce(c) != 0) row.push_back({0, field.reduce(c)});
        } else {
          Exponent rest = e;
          --rest[j];
          const int rest_idx = parts[d - 1].index.at(key_of(rest));
          const SparseRow& inner = op[d - 1][rest_idx];
          const auto& up = parts[d - 2].times;
          touched.clear();
          bump(rest_idx, field.reduce(c));
          for (const auto& [m, v] : inner) {
            bump(up[m][j], v);
            if (c == 0) continue;
            for (int t = 0; t < l; ++t)
              if (la.root[i][t] != 0) bump(up[m][t], field.mul(v, field.reduce(-c * la.root[i][t])));
          }
          std::sort(touched.begin(), touched.end());
          for (int idx : touched) {
            if (scratch[idx] != 0) row.push_back({idx, scratch[idx]});
            scratch[idx] = 0;
          }
        }
        op[d][k] = std::move(row);
      }
    }
  }

  const WeylWalk walk = weyl_walk(rd, max_deg, kEnumerationCap);
  EngineResult res;
  std::vector<FpVector> functionals{FpVector{1}};
  std::vector<FpVector> prev_kernel;
  for (int d = 0; d <= max_deg; ++d) {
    const std::size_t cols = parts[d].monomials.size();
    if (d > 0) {
      const auto& layer = walk.layers[d];
      std::vector<FpVector> next;
      next.reserve(layer.size());
      for (const auto& node : layer) {
        const FpVector& parent = functionals[node.parent];
        FpVector f(cols, 0);
        for (std::size_t k = 0; k < cols; ++k) {
          std::uint32_t acc = 0;
          for (const auto& [m, v] : ops[node.letter][d][k]) acc = field.add(acc, field.mul(v, parent[m]));
          f[k] = acc;
        }
        next.push_back(std::move(f));
      }
      functionals = std::move(next);
    }
    FpMatrix mat(functionals.size(), cols);
    for (std::size_t r = 0; r < functionals.size(); ++r)
      std::copy(functionals[r].begin(), functionals[r].end(), mat.data.begin() + static_cast<long>(r * cols));
    std::vector<FpVector> kernel = fp_nullspace(field, mat);
    KernelRow row;
    row.degree = d;
    row.dim_kernel = kernel.size();
    row.dim_image = cols - kernel.size();
    if (find_generators && d > 0 && !kernel.empty()) {
      EchelonBasis span(field, cols);
      const auto& up = parts[d - 1].times;
      for (const auto& v : prev_kernel) {
        if (span.size() == kernel.size()) break;
        for (int j = 0; j < l && span.size() < kernel.size(); ++j) {
          FpVector w(cols, 0);
          for (std::size_t m = 0; m < v.size(); ++m)
            if (v[m] != 0) w[up[m][j]] = v[m];
          span.add(std::move(w));
        }
      }
      row.new_generators = kernel.size() - span.size();
      for (std::size_t g = 0; g < row.new_generators; ++g) res.generator_degrees.push_back(d);
    }
    res.rows.push_back(row);
    prev_kernel = std::move(kernel);
  }
  return res;
}

}  // namespace

KernelReport kernel_and_generators(const RootDatum& rd, long p, int max_deg, KernelOptions opts) {
  check_limits(rd, max_deg, opts);
  EngineResult res = run_engine(rd, p, max_deg, true);
  KernelReport rep;
  rep.type = rd.label();
  rep.p = p;
  rep.max_degree = max_deg;
  rep.rows = std::move(res.rows);
  rep.generator_degrees = std::move(res.generator_degrees);
  const JProfile jp = jprofile(group_of(rd), p);
  for (int x : jp.kac_degrees)
    if (x <= max_deg) rep.expected_degrees.push_back(x);
  const int top = jp.kac_degrees.empty() ? 0 : *std::max_element(jp.kac_degrees.begin(), jp.kac_degrees.end());
  rep.partial = static_cast<int>(rep.generator_degrees.size()) < rd.rank || max_deg < top;
  rep.matches_table1 = rep.generator_degrees == rep.expected_degrees;
  return rep;
}

TruncatedSeries image_dim_series(const RootDatum& rd, long p, int max_deg, KernelOptions opts) {
  check_limits(rd, max_deg, opts);
  const EngineResult res = run_engine(rd, p, max_deg, false);
  std::vector<mpz_class> coeffs;
  for (const auto& row : res.rows) coeffs.emplace_back(static_cast<unsigned long>(row.dim_image));
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace rostkit
