#include "rostkit/gradedring.hpp"

#include <cctype>
#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "rostkit/error.hpp"
#include "rostkit/smith.hpp"

namespace rostkit {

// ---------------------------------------------------------------- polynomials

namespace {

void add_into(IntPoly& acc, const std::vector<int>& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

IntPoly constant_poly(const mpz_class& c, std::size_t n) {
  IntPoly p;
  add_into(p, std::vector<int>(n, 0), c);
  return p;
}

IntPoly poly_sum(const IntPoly& a, const IntPoly& b, int sign) {
  IntPoly r = a;
  for (const auto& [e, c] : b) add_into(r, e, sign * c);
  return r;
}

class ExprParser {
 public:
  ExprParser(const std::string& text, const std::vector<GradedGenerator>& gens) : s_(text), gens_(gens) {}

  IntPoly parse() {
    IntPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("relation \"" + s_ + "\": " + what + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPoly expr() {
    IntPoly acc = term();
    for (;;) {
      if (eat('+')) acc = poly_sum(acc, term(), 1);
      else if (eat('-')) acc = poly_sum(acc, term(), -1);
      else return acc;
    }
  }
  IntPoly term() {
    IntPoly acc = power();
    while (eat('*')) acc = poly_product(acc, power());
    return acc;
  }
  IntPoly power() {
    IntPoly base = unary();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      const int k = std::stoi(s_.substr(start, pos_ - start));
      IntPoly r = constant_poly(1, gens_.size());
      for (int i = 0; i < k; ++i) r = poly_product(r, base);
      return r;
    }
    return base;
  }
  IntPoly unary() {
    if (eat('-')) return poly_sum(IntPoly{}, unary(), -1);
    return atom();
  }
  IntPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      IntPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant_poly(mpz_class(s_.substr(start, pos_ - start)), gens_.size());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      for (std::size_t j = 0; j < gens_.size(); ++j)
        if (gens_[j].name == name) {
          std::vector<int> e(gens_.size(), 0);
          e[j] = 1;
          IntPoly p;
          p[e] = 1;
          return p;
        }
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  const std::vector<GradedGenerator>& gens_;
  std::size_t pos_ = 0;
};

int weighted_degree(const std::vector<int>& e, const std::vector<GradedGenerator>& gens) {
  int d = 0;
  for (std::size_t j = 0; j < e.size(); ++j) d += e[j] * gens[j].degree;
  return d;
}

void monomials_of_degree(const std::vector<GradedGenerator>& gens, int d, std::size_t j, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (j == gens.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int a = d / gens[j].degree; a >= 0; --a) {
    cur[j] = a;
    monomials_of_degree(gens, d - a * gens[j].degree, j + 1, cur, out);
  }
  cur[j] = 0;
}

std::vector<std::vector<int>> monomials_of_degree(const std::vector<GradedGenerator>& gens, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(gens.size(), 0);
  if (d >= 0) monomials_of_degree(gens, d, 0, cur, out);
  return out;
}

}  // namespace

IntPoly poly_product(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      add_into(r, e, ca * cb);
    }
  return r;
}

IntPoly poly_difference(const IntPoly& a, const IntPoly& b) { return poly_sum(a, b, -1); }

IntPoly parse_polynomial(const std::string& text, const std::vector<GradedGenerator>& generators) {
  return ExprParser(text, generators).parse();
}

std::string polynomial_to_string(const IntPoly& f, const std::vector<GradedGenerator>& generators) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const mpz_class& c = it->second;
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const mpz_class a = abs(c);
    bool constant = true;
    for (int x : it->first) constant = constant && x == 0;
    bool star = false;
    if (a != 1 || constant) {
      out << a.get_str();
      star = true;
    }
    for (std::size_t j = 0; j < it->first.size(); ++j) {
      if (it->first[j] == 0) continue;
      out << (star ? "*" : "") << generators[j].name;
      if (it->first[j] > 1) out << "^" << it->first[j];
      star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- presentations

GradedPresentation GradedPresentation::make(std::vector<GradedGenerator> generators, std::vector<std::string> relations) {
  GradedPresentation p;
  for (const auto& g : generators) {
    if (g.degree <= 0) throw DomainError("generator " + g.name + ": degree must be positive");
    if (g.name.empty()) throw DomainError("generator: empty name");
  }
  p.generators = std::move(generators);
  for (const auto& text : relations) {
    IntPoly f = parse_polynomial(text, p.generators);
    int deg = -1;
    for (const auto& [e, c] : f) {
      const int d = weighted_degree(e, p.generators);
      if (deg >= 0 && d != deg) throw DomainError("relation \"" + text + "\" is not homogeneous");
      deg = d;
    }
    p.relation_text.push_back(text);
    p.relations.push_back(std::move(f));
    p.relation_degrees.push_back(deg);
  }
  return p;
}

GradedPresentation GradedPresentation::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<GradedGenerator> gens;
    for (const auto& g : j.at("generators")) gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    std::vector<std::string> rels;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) rels.push_back(r.get<std::string>());
    return make(std::move(gens), std::move(rels));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("presentation JSON: ") + e.what());
  }
}

std::string GradedPresentation::to_json() const {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : generators) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  j["relations"] = relation_text;
  return j.dump();
}

// ---------------------------------------------------------------- components

int GradedComponent::free_rank() const {
  int r = 0;
  for (const auto& x : invariant_factors) r += x == 0;
  return r;
}

std::vector<mpz_class> GradedComponent::torsion() const {
  std::vector<mpz_class> t;
  for (const auto& x : invariant_factors)
    if (x != 0) t.push_back(x);
  return t;
}

std::string GradedComponent::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::vector<std::string> parts;
  const int f = free_rank();
  if (f == 1) parts.push_back("Z");
  if (f > 1) parts.push_back("Z^" + std::to_string(f));
  for (const auto& x : torsion()) parts.push_back("Z/" + x.get_str());
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

GradedComponent graded_component(const GradedPresentation& pres, int degree) {
  if (degree < 0) throw DomainError("degree must be nonnegative");
  GradedComponent comp;
  comp.degree = degree;
  const auto monos = monomials_of_degree(pres.generators, degree);
  if (monos.empty()) return comp;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;

  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const int rd = pres.relation_degrees[r];
    if (rd < 0 || rd > degree) continue;  // rd < 0: the zero relation
    for (const auto& m : monomials_of_degree(pres.generators, degree - rd)) {
      IntPoly mono;
      mono[m] = 1;
      const IntPoly prod = poly_product(pres.relations[r], mono);
      std::vector<mpz_class> row(monos.size());
      for (const auto& [e, c] : prod) row[index.at(e)] = c;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) {
    comp.invariant_factors.assign(monos.size(), mpz_class(0));
    return comp;
  }
  IntegerMatrix m(rows.size(), monos.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) m.at(i, j) = rows[i][j];
  comp.invariant_factors = cokernel_invariants(m);
  return comp;
}

GradedPresentation gl7_mod_sl3_presentation() {
  return GradedPresentation::make({{"x2", 2}, {"x3", 3}}, {"2*x2", "x2^2", "x3^2"});
}

std::vector<GradedComponent> gl7_mod_sl3() {
  const auto pres = gl7_mod_sl3_presentation();
  std::vector<GradedComponent> out;
  for (int d = 0; d <= 8; ++d) out.push_back(graded_component(pres, d));
  return out;
}

// ---------------------------------------------------------------- free module check

FreeModuleReport bgl2_over_bsl3_check(int max_deg) {
  if (max_deg < 6) throw DomainError("max degree must be at least 6");
  const std::vector<GradedGenerator> gens{{"y1", 1}, {"y2", 2}};
  const IntPoly y1 = parse_polynomial("y1", gens);
  const IntPoly u = parse_polynomial("y1^2 - y2", gens);
  const IntPoly v = parse_polynomial("y1*y2", gens);
  auto power = [&](const IntPoly& f, int k) {
    IntPoly r;
    r[{0, 0}] = 1;
    for (int i = 0; i < k; ++i) r = poly_product(r, f);
    return r;
  };

  FreeModuleReport rep;
  rep.max_degree = max_deg;
  rep.direct_sum_ok = true;
  for (int d = 0; d <= max_deg; ++d) {
    BasisDegreeCheck c;
    c.degree = d;
    const auto monos = monomials_of_degree(gens, d);
    c.monomials = static_cast<int>(monos.size());
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;

    std::vector<IntPoly> cands;
    for (int j = 0; j < 3; ++j)
      for (int b = 0; j + 3 * b <= d; ++b) {
        const int rest = d - j - 3 * b;
        if (rest % 2) continue;
        cands.push_back(poly_product(power(y1, j), poly_product(power(u, rest / 2), power(v, b))));
      }
    c.candidates = static_cast<int>(cands.size());

    IntegerMatrix m(cands.size(), monos.size());
    for (std::size_t i = 0; i < cands.size(); ++i)
      for (const auto& [e, coef] : cands[i]) m.at(i, index.at(e)) = coef;
    int rank = 0;
    if (!cands.empty())
      for (const auto& x : smith_normal_form(m).diagonal) rank += x != 0;
    c.rank = rank;
    c.unimodular = c.candidates == c.monomials && (c.monomials == 0 || abs(determinant(m)) == 1);
    c.ok = c.unimodular && c.monomials == d / 2 + 1;
    if (!c.ok) {
      rep.direct_sum_ok = false;
      rep.failures.push_back("degree " + std::to_string(d) + ": (a) " + std::to_string(c.candidates) +
                            " candidates, " + std::to_string(c.monomials) + " monomials, rank " +
                            std::to_string(c.rank) + (c.unimodular ? "" : ", not unimodular"));
    }
    rep.degrees.push_back(c);
  }

  const IntPoly lhs = power(y1, 3);
  const IntPoly rhs = poly_difference(poly_product(y1, parse_polynomial("y2", gens)),
                                      poly_difference(IntPoly{}, poly_product(y1, u)));
  rep.relation_ok = poly_difference(lhs, rhs).empty();
  if (!rep.relation_ok) rep.failures.push_back("(b) y1^3 != y1*y2 + y1*(y1^2 - y2)");

  const int order = std::max(max_deg, 20);
  const TruncatedSeries left = geometric_product({1, 2}, order);
  const TruncatedSeries right =
      TruncatedSeries::polynomial({1, 1, 1}, order) * geometric_product({2, 3}, order);
  rep.hilbert_ok = left == right;
  if (!rep.hilbert_ok) rep.failures.push_back("(c) Hilbert series differ through order " + std::to_string(order));

  rep.passed = rep.direct_sum_ok && rep.relation_ok && rep.hilbert_ok;
  return rep;
}

}  // namespace rostkit
