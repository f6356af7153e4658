#include "rostkit/rootdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_set>

#include "rostkit/error.hpp"

namespace rostkit {

// ---------------------------------------------------------------- isogeny

Isogeny Isogeny::parse(const std::string& label) {
  if (label.empty() || label == "sc") return sc();
  if (label == "ad") return ad();
  if (label == "so") return {Kind::SpecialOrthogonal, 1};
  if (label == "hs") return {Kind::HalfSpin, 1};
  if (label.rfind("mu", 0) == 0 && label.size() > 2 &&
      std::all_of(label.begin() + 2, label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const int m = std::stoi(label.substr(2));
    if (m < 1) throw DomainError("isogeny: mu<m> needs m >= 1");
    return mu(m);
  }
  throw DomainError("isogeny: unknown label '" + label + "' (expected sc, ad, so, hs or mu<m>)");
}

std::string Isogeny::label() const {
  switch (kind) {
    case Kind::SimplyConnected: return "sc";
    case Kind::Adjoint: return "ad";
    case Kind::Quotient: return "mu" + std::to_string(order);
    case Kind::SpecialOrthogonal: return "so";
    case Kind::HalfSpin: return "hs";
  }
  return "sc";
}

std::string RootDatum::label() const {
  std::string s = type_letter(type) + std::to_string(rank);
  if (isogeny.kind != Isogeny::Kind::SimplyConnected) s += "/" + isogeny.label();
  return s;
}

std::uint64_t RootDatum::weyl_order() const {
  std::uint64_t o = 1;
  for (int e : degrees) o *= static_cast<std::uint64_t>(e);
  return o;
}

// ---------------------------------------------------------------- matrices

IntMatrix identity_matrix(int n) {
  IntMatrix m(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

namespace {

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

void link(IntMatrix& c, int i, int j) {
  c[i][j] = -1;
  c[j][i] = -1;
}

// Integer adjugate and determinant by cofactor expansion over a Bareiss
// determinant; Cartan matrices are at most 8x8 here.
long determinant(IntMatrix m) {
  const std::size_t n = m.size();
  std::vector<std::vector<long>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i].assign(m[i].begin(), m[i].end());
  long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  IntMatrix adj(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVector row;
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      adj[j][i] = static_cast<int>(((i + j) % 2 ? -1 : 1) * determinant(minor));
    }
  return adj;
}

// Row-style Hermite normal form: returns a basis of the lattice spanned by
// the given integer rows (all of length n, spanning a rank-n lattice).
IntMatrix lattice_basis_of(IntMatrix rows, int n) {
  std::vector<std::vector<long>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  std::size_t top = 0;
  for (int col = 0; col < n; ++col) {
    for (;;) {
      std::size_t piv = a.size();
      for (std::size_t r = top; r < a.size(); ++r)
        if (a[r][col] != 0 && (piv == a.size() || std::labs(a[r][col]) < std::labs(a[piv][col]))) piv = r;
      if (piv == a.size()) break;
      std::swap(a[top], a[piv]);
      bool done = true;
      for (std::size_t r = top + 1; r < a.size(); ++r) {
        const long q = a[r][col] / a[top][col];
        for (int c = 0; c < n; ++c) a[r][c] -= q * a[top][c];
        if (a[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < a.size() && a[top][col] != 0) {
      if (a[top][col] < 0)
        for (auto& x : a[top]) x = -x;
      ++top;
    }
  }
  if (static_cast<int>(top) != n) throw InternalError("character lattice generators do not span a full-rank lattice");
  IntMatrix basis;
  for (std::size_t r = 0; r < top; ++r) basis.emplace_back(a[r].begin(), a[r].end());
  return basis;
}

bool is_positive_root(const IntVector& coords) {
  for (int x : coords)
    if (x != 0) return x > 0;
  throw InternalError("zero vector where a root was expected");
}

}  // namespace

IntMatrix cartan_matrix(DynkinType type, int l) {
  IntMatrix c = identity_matrix(l);
  for (auto& row : c)
    for (auto& x : row) x *= 2;
  switch (type) {
    case DynkinType::A:
      for (int i = 0; i + 1 < l; ++i) link(c, i, i + 1);
      break;
    case DynkinType::B:
      for (int i = 0; i + 1 < l; ++i) link(c, i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l short
      break;
    case DynkinType::C:
      for (int i = 0; i + 1 < l; ++i) link(c, i, i + 1);
      c[l - 1][l - 2] = -2;  // alpha_l long
      break;
    case DynkinType::D:
      for (int i = 0; i + 2 < l; ++i) link(c, i, i + 1);
      link(c, l - 3, l - 1);
      break;
    case DynkinType::E:
      // 1-3-4-5-6(-7-8), with 2 attached to 4.
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < l; ++i) link(c, i, i + 1);
      break;
    case DynkinType::F:
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c[1][2] = -2;
      break;
    case DynkinType::G:
      c[0][1] = -1;
      c[1][0] = -3;
      break;
  }
  return c;
}

IntMatrix simple_reflection(const RootDatum& rd, int i) {
  IntMatrix m = identity_matrix(rd.rank);
  for (int j = 0; j < rd.rank; ++j) m[j][i] -= rd.cartan[i][j];
  return m;
}

// ---------------------------------------------------------------- build

namespace {

IntMatrix positive_roots_by_closure(const IntMatrix& cartan) {
  const int l = static_cast<int>(cartan.size());
  std::vector<IntVector> roots;
  std::set<IntVector> seen;
  for (int i = 0; i < l; ++i) {
    IntVector e(static_cast<std::size_t>(l), 0);
    e[i] = 1;
    roots.push_back(e);
    seen.insert(e);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int i = 0; i < l; ++i) {
      const IntVector beta = roots[k];
      int pairing = 0;
      for (int j = 0; j < l; ++j) pairing += beta[j] * cartan[j][i];
      if (pairing == 0) continue;
      IntVector img = beta;
      img[i] -= pairing;
      if (std::all_of(img.begin(), img.end(), [](int x) { return x == 0; })) continue;
      if (!is_positive_root(img)) continue;
      if (seen.insert(img).second) roots.push_back(img);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const IntVector& a, const IntVector& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a > b;
  });
  return roots;
}

void check_rank(DynkinType type, int rank, const DataTables& tables) {
  if (rank < 1) throw DomainError("rank: must be positive");
  const bool ok = [&] {
    switch (type) {
      case DynkinType::E: return rank >= 6 && rank <= 8;
      case DynkinType::F: return rank == 4;
      case DynkinType::G: return rank == 2;
      case DynkinType::B:
      case DynkinType::C: return rank >= 2;
      case DynkinType::D: return rank >= 3;
      case DynkinType::A: return true;
    }
    return false;
  }();
  if (!ok || !tables.admissible(type, rank))
    throw DomainError(std::string("rank: ") + std::to_string(rank) + " is not admissible for type " + type_letter(type));
  if (rank > 64) throw DomainError("rank: too large");
}

IntMatrix lattice_generators(DynkinType type, int rank, const Isogeny& iso, const IntMatrix& cartan) {
  const auto fail = [&](const std::string& why) -> IntMatrix {
    throw DomainError("isogeny: " + iso.label() + " is not admissible for type " + type_letter(type) +
                      std::to_string(rank) + " (" + why + ")");
  };
  IntMatrix gens = cartan;
  auto add_weight = [&](int index, int multiple) {
    IntVector w(static_cast<std::size_t>(rank), 0);
    w[index] = multiple;
    gens.push_back(w);
  };
  switch (iso.kind) {
    case Isogeny::Kind::SimplyConnected: return identity_matrix(rank);
    case Isogeny::Kind::Adjoint: return gens;
    case Isogeny::Kind::Quotient:
      if (type != DynkinType::A) return fail("mu<m> quotients are defined for type A");
      if ((rank + 1) % iso.order != 0) return fail("m must divide rank+1");
      add_weight(0, iso.order);
      return gens;
    case Isogeny::Kind::SpecialOrthogonal:
      if (type != DynkinType::D) return fail("so is defined for type D");
      add_weight(0, 1);
      return gens;
    case Isogeny::Kind::HalfSpin:
      if (type != DynkinType::D || rank % 2 != 0) return fail("hs needs type D of even rank");
      add_weight(rank - 1, 1);
      return gens;
  }
  return gens;
}

}  // namespace

RootDatum build_root_datum(DynkinType type, int rank, Isogeny isogeny, const DataTables& tables) {
  check_rank(type, rank, tables);
  RootDatum rd;
  rd.type = type;
  rd.rank = rank;
  rd.isogeny = isogeny;
  rd.cartan = cartan_matrix(type, rank);
  rd.positive_roots = positive_roots_by_closure(rd.cartan);
  rd.num_positive_roots = static_cast<int>(rd.positive_roots.size());
  rd.degrees = tables.degrees(type, rank);
  std::sort(rd.degrees.begin(), rd.degrees.end());
  rd.lattice_basis = lattice_basis_of(lattice_generators(type, rank, isogeny, rd.cartan), rank);

  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if ((i == j && rd.cartan[i][j] != 2) || (i != j && rd.cartan[i][j] > 0))
        throw InternalError("Cartan matrix entry out of range");
  if (static_cast<int>(rd.degrees.size()) != rank)
    throw DomainError(std::string("degrees: table gives ") + std::to_string(rd.degrees.size()) + " degrees for " +
                      rd.label());
  int sum = 0;
  for (int e : rd.degrees) sum += e - 1;
  if (sum != rd.num_positive_roots)
    throw DomainError("degrees: sum of (e_i - 1) = " + std::to_string(sum) + " but N = " +
                      std::to_string(rd.num_positive_roots) + " for " + rd.label());
  return rd;
}

// ---------------------------------------------------------------- elements

int inversion_count(const RootDatum& rd, const IntMatrix& m) {
  const IntMatrix adj = adjugate(rd.cartan);
  int count = 0;
  for (const auto& beta : rd.positive_roots) {
    IntVector weight(static_cast<std::size_t>(rd.rank), 0);
    for (int j = 0; j < rd.rank; ++j)
      for (int k = 0; k < rd.rank; ++k) weight[k] += beta[j] * rd.cartan[j][k];
    const IntVector image = mat_vec(m, weight);
    // Simple-root coordinates up to the positive factor det(cartan).
    IntVector coords(static_cast<std::size_t>(rd.rank), 0);
    for (int k = 0; k < rd.rank; ++k)
      for (int j = 0; j < rd.rank; ++j) coords[j] += image[k] * adj[k][j];
    if (!is_positive_root(coords)) ++count;
  }
  return count;
}

WeylElement weyl_element(const RootDatum& rd, const std::vector<int>& word) {
  WeylElement w;
  w.matrix = identity_matrix(rd.rank);
  for (int i : word) {
    if (i < 0 || i >= rd.rank) throw DomainError("reflection index out of range");
    w.matrix = mat_mul(w.matrix, simple_reflection(rd, i));
  }
  w.length = inversion_count(rd, w.matrix);
  if (w.length != static_cast<int>(word.size())) throw DomainError("word is not reduced");
  w.reduced_word = word;
  return w;
}

int coxeter_order(const RootDatum& rd, int i, int j) {
  if (i == j) return 1;
  switch (rd.cartan[i][j] * rd.cartan[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InternalError("unexpected Cartan bond");
}

// ---------------------------------------------------------------- enumeration

namespace {

std::uint64_t pack(const IntVector& nu) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < nu.size(); ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(static_cast<std::int8_t>(nu[i]))) << (8 * i);
  return key;
}

IntVector unpack(std::uint64_t key, int rank) {
  IntVector nu(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) nu[i] = static_cast<std::int8_t>(static_cast<std::uint8_t>(key >> (8 * i)));
  return nu;
}

// nu -> s_i nu in weight coordinates.
void reflect(const RootDatum& rd, int i, IntVector& nu) {
  const int c = nu[i];
  for (int j = 0; j < rd.rank; ++j) nu[j] -= c * rd.cartan[i][j];
}

void require_packable(const RootDatum& rd) {
  if (rd.rank > 8) throw DomainError("rank: Weyl enumeration supports rank <= 8");
}

}  // namespace

std::vector<int> WeylWalk::reduced_word(int length, int index) const {
  std::vector<int> word(static_cast<std::size_t>(length));
  for (int d = length; d > 0; --d) {
    const Node& n = layers.at(static_cast<std::size_t>(d)).at(static_cast<std::size_t>(index));
    word[d - 1] = n.letter;
    index = n.parent;
  }
  return word;
}

WeylWalk weyl_walk(const RootDatum& rd, int max_length, std::size_t node_cap) {
  require_packable(rd);
  max_length = std::min(max_length, rd.num_positive_roots);
  WeylWalk walk;
  walk.layers.push_back({{IntVector(static_cast<std::size_t>(rd.rank), 1), -1, -1}});
  std::size_t stored = 1;
  for (int d = 0; d < max_length; ++d) {
    std::vector<WeylWalk::Node> next;
    std::unordered_set<std::uint64_t> seen;
    const auto& layer = walk.layers.back();
    for (std::size_t k = 0; k < layer.size(); ++k)
      for (int i = 0; i < rd.rank; ++i) {
        if (layer[k].nu[i] <= 0) continue;
        IntVector nu = layer[k].nu;
        reflect(rd, i, nu);
        if (seen.insert(pack(nu)).second) {
          next.push_back({std::move(nu), static_cast<int>(k), i});
          if (++stored > node_cap)
            throw DomainError("enumeration cap: more than " + std::to_string(node_cap) + " Weyl elements of " +
                              rd.label() + " up to length " + std::to_string(d + 1));
        }
      }
    walk.layers.push_back(std::move(next));
  }
  return walk;
}

std::vector<std::uint64_t> weyl_enumerate(const RootDatum& rd, std::optional<int> length_cap) {
  if (!length_cap && rd.rank > kMaxEnumerationRank)
    throw DomainError("enumeration cap: full enumeration of " + rd.label() +
                      " is refused (rank > 7); use length_gen_function or pass a length cap");
  require_packable(rd);
  const int top = length_cap ? std::min(*length_cap, rd.num_positive_roots) : rd.num_positive_roots;
  if (top < 0) throw DomainError("length cap must be nonnegative");
  std::vector<std::uint64_t> counts{1};
  std::vector<std::uint64_t> layer{pack(IntVector(static_cast<std::size_t>(rd.rank), 1))};
  for (int d = 0; d < top; ++d) {
    std::unordered_set<std::uint64_t> next;
    next.reserve(layer.size() * 2);
    for (std::uint64_t key : layer) {
      const IntVector nu = unpack(key, rd.rank);
      for (int i = 0; i < rd.rank; ++i) {
        if (nu[i] <= 0) continue;
        IntVector img = nu;
        reflect(rd, i, img);
        next.insert(pack(img));
      }
    }
    layer.assign(next.begin(), next.end());
    counts.push_back(layer.size());
  }
  return counts;
}

TruncatedSeries length_gen_function(const RootDatum& rd, int trunc) {
  if (trunc < 0) throw DomainError("trunc must be nonnegative");
  TruncatedSeries s = TruncatedSeries::one(trunc);
  for (int e : rd.degrees) s = s * telescoping(1, e, trunc);
  return s;
}

// ---------------------------------------------------------------- parabolics

std::vector<int> subsystem_degrees(const RootDatum& rd, const std::set<int>& nodes, const DataTables& tables) {
  std::vector<int> degrees;
  std::set<int> left = nodes;
  while (!left.empty()) {
    // Connected component of the first remaining node.
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();) {
        if (rd.cartan[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    const int size = static_cast<int>(comp.size());
    std::map<int, int> valence;
    int max_bond = 1;
    std::vector<std::pair<int, int>> double_bonds;
    for (int a : comp)
      for (int b : comp)
        if (a < b && rd.cartan[a][b] != 0) {
          ++valence[a];
          ++valence[b];
          const int bond = rd.cartan[a][b] * rd.cartan[b][a];
          max_bond = std::max(max_bond, bond);
          if (bond == 2) double_bonds.push_back({a, b});
        }
    DynkinType t = DynkinType::A;
    if (max_bond == 3) {
      t = DynkinType::G;
    } else if (max_bond == 2) {
      const auto [a, b] = double_bonds.front();
      t = (size == 4 && valence[a] == 2 && valence[b] == 2) ? DynkinType::F : DynkinType::B;
    } else {
      int branch = -1;
      for (int a : comp)
        if (valence[a] == 3) branch = a;
      if (branch >= 0) {
        std::vector<int> arms;
        for (int nb : comp) {
          if (rd.cartan[branch][nb] == 0 || nb == branch) continue;
          int len = 1, prev = branch, cur = nb;
          for (bool moved = true; moved;) {
            moved = false;
            for (int x : comp)
              if (x != prev && x != cur && rd.cartan[cur][x] != 0) {
                prev = cur;
                cur = x;
                ++len;
                moved = true;
                break;
              }
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        t = (arms[1] == 1) ? DynkinType::D : DynkinType::E;
      }
    }
    for (int e : tables.degrees(t, size)) degrees.push_back(e);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

TruncatedSeries parabolic_poincare(const RootDatum& rd, const std::set<int>& subset, int trunc) {
  if (trunc < 0) throw DomainError("trunc must be nonnegative");
  std::set<int> nodes;
  for (int i : subset) {
    if (i < 1 || i > rd.rank)
      throw DomainError("subset: simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rd.rank));
    nodes.insert(i - 1);
  }
  // Work at full polynomial degree N, then truncate.
  const int n = rd.num_positive_roots;
  const TruncatedSeries whole = length_gen_function(rd, n);
  TruncatedSeries part = TruncatedSeries::one(n);
  for (int e : subsystem_degrees(rd, nodes)) part = part * telescoping(1, e, n);
  const SeriesQuotient q = exact_div(whole, part);
  if (!q.polynomial_multiple || q.shift != 0)
    throw InternalError("parabolic quotient P_W / P_W_J left a remainder");
  const auto coeffs = q.quotient.coefficients();
  std::vector<mpz_class> out(static_cast<std::size_t>(trunc) + 1, 0);
  for (int k = 0; k <= trunc && k < static_cast<int>(coeffs.size()); ++k) out[k] = coeffs[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries maximal_parabolic_poincare(const RootDatum& rd, int k, int trunc) {
  if (k < 1 || k > rd.rank) throw DomainError("maximal parabolic index outside 1.." + std::to_string(rd.rank));
  std::set<int> subset;
  for (int i = 1; i <= rd.rank; ++i)
    if (i != k) subset.insert(i);
  return parabolic_poincare(rd, subset, trunc);
}

// ---------------------------------------------------------------- torsion

std::vector<int> torsion_primes(DynkinType type, int rank, Isogeny, const DataTables& tables) {
  if (!tables.admissible(type, rank))
    throw DomainError(std::string("rank: ") + std::to_string(rank) + " is not admissible for type " + type_letter(type));
  auto ps = tables.torsion_primes(type, rank);
  std::sort(ps.begin(), ps.end());
  return ps;
}

std::vector<int> torsion_primes(const std::vector<std::pair<DynkinType, int>>& factors, const DataTables& tables) {
  std::set<int> all;
  for (const auto& [t, r] : factors)
    for (int p : torsion_primes(t, r, Isogeny::sc(), tables)) all.insert(p);
  return {all.begin(), all.end()};
}

}  // namespace rostkit
