#include "rostkit/group.hpp"

#include <regex>

#include "rostkit/error.hpp"

namespace rostkit {
namespace {

GroupSpec from_dynkin(DynkinType type, int l, Isogeny iso) {
  GroupSpec g;
  g.type = type;
  g.rank = l;
  g.bindings["l"] = l;
  using K = Isogeny::Kind;
  auto bad = [&]() -> GroupSpec {
    throw DomainError("isogeny: " + iso.label() + " is not admissible for type " + type_letter(type) +
                      std::to_string(l));
  };
  switch (type) {
    case DynkinType::A: {
      const int n = l + 1;
      int m = 1;
      if (iso.kind == K::Adjoint) m = n;
      else if (iso.kind == K::Quotient) m = iso.order;
      else if (iso.kind != K::SimplyConnected) return bad();
      if (n % m != 0) throw DomainError("isogeny: mu" + std::to_string(m) + " needs m | " + std::to_string(n));
      iso = m == 1 ? Isogeny::sc() : m == n ? Isogeny::ad() : Isogeny::mu(m);
      g.family = "SL";
      g.bindings["n"] = n;
      g.bindings["m"] = m;
      g.display_name = m == 1 ? "SL_" + std::to_string(n)
                              : m == n ? "PGL_" + std::to_string(n)
                                       : "SL_" + std::to_string(n) + "/mu_" + std::to_string(m);
      break;
    }
    case DynkinType::B:
      if (iso.kind == K::SimplyConnected) {
        g.family = "Spin";
        g.display_name = "Spin_" + std::to_string(2 * l + 1);
      } else if (iso.kind == K::Adjoint || iso.kind == K::SpecialOrthogonal) {
        iso = Isogeny::ad();
        g.family = "O+";
        g.display_name = "O+_" + std::to_string(2 * l + 1);
      } else {
        return bad();
      }
      g.bindings["n"] = 2 * l + 1;
      break;
    case DynkinType::C:
      if (iso.kind == K::SimplyConnected) {
        g.family = "Sp";
        g.display_name = "Sp_" + std::to_string(2 * l);
      } else if (iso.kind == K::Adjoint) {
        g.family = "PGSp";
        g.display_name = "PGSp_" + std::to_string(2 * l);
      } else {
        return bad();
      }
      g.bindings["n"] = 2 * l;
      break;
    case DynkinType::D:
      if (iso.kind == K::SimplyConnected) {
        g.family = "Spin";
        g.bindings["n"] = 2 * l;
        g.display_name = "Spin_" + std::to_string(2 * l);
      } else if (iso.kind == K::SpecialOrthogonal) {
        g.family = "O+";
        g.bindings["n"] = 2 * l;
        g.display_name = "O+_" + std::to_string(2 * l);
      } else if (iso.kind == K::Adjoint) {
        g.family = "PGO+";
        g.bindings["n"] = l;
        g.display_name = "PGO+_" + std::to_string(2 * l);
      } else if (iso.kind == K::HalfSpin) {
        g.family = "HSpin";
        g.bindings["n"] = l;
        g.display_name = "Spin+-_" + std::to_string(2 * l);
      } else {
        return bad();
      }
      break;
    case DynkinType::E:
    case DynkinType::F:
    case DynkinType::G: {
      if (iso.kind != K::SimplyConnected && iso.kind != K::Adjoint) return bad();
      g.family = std::string(1, type_letter(type)) + std::to_string(l);
      g.display_name = g.family;
      if (type == DynkinType::E && (l == 6 || l == 7)) g.display_name += iso.kind == K::Adjoint ? "^ad" : "^sc";
      break;
    }
  }
  g.isogeny = iso;
  return g;
}

int to_int(const std::string& s) {
  if (s.size() > 6) throw DomainError("group: number too large in selector");
  return std::stoi(s);
}

}  // namespace

GroupSpec parse_group(const std::string& selector) {
  static const std::regex dynkin(R"(^([A-G])(\d+)(?:/([A-Za-z]+\d*))?$)");
  static const std::regex classical(R"(^(SL|PGL|Sp|PGSp|Spin|SO|O\+|PGO\+?|HSpin)(\d+)(?:/mu(\d+))?$)");
  std::smatch m;
  GroupSpec g;
  if (std::regex_match(selector, m, dynkin)) {
    const DynkinType type = parse_type_letter(m[1].str()[0]);
    const int l = to_int(m[2].str());
    g = from_dynkin(type, l, m[3].matched ? Isogeny::parse(m[3].str()) : Isogeny::sc());
  } else if (std::regex_match(selector, m, classical)) {
    const std::string fam = m[1].str();
    const int n = to_int(m[2].str());
    if (m[3].matched && fam != "SL") throw DomainError("group: /mu<m> only applies to SL<n>");
    auto need = [&](bool ok, const std::string& why) {
      if (!ok) throw DomainError("group: " + selector + " " + why);
    };
    if (fam == "SL" || fam == "PGL") {
      need(n >= 2, "needs n >= 2");
      const int mm = fam == "PGL" ? n : m[3].matched ? to_int(m[3].str()) : 1;
      g = from_dynkin(DynkinType::A, n - 1, Isogeny::mu(mm));
    } else if (fam == "Sp" || fam == "PGSp") {
      need(n >= 4 && n % 2 == 0, "needs even n >= 4");
      g = from_dynkin(DynkinType::C, n / 2, fam == "Sp" ? Isogeny::sc() : Isogeny::ad());
    } else if (fam == "Spin" || fam == "SO" || fam == "O+") {
      need(n >= 5, "needs n >= 5");
      const bool spin = fam == "Spin";
      if (n % 2 == 1) g = from_dynkin(DynkinType::B, (n - 1) / 2, spin ? Isogeny::sc() : Isogeny::ad());
      else g = from_dynkin(DynkinType::D, n / 2, spin ? Isogeny::sc() : Isogeny{Isogeny::Kind::SpecialOrthogonal, 1});
    } else if (fam == "PGO" || fam == "PGO+") {
      need(n >= 6 && n % 2 == 0, "needs even n >= 6");
      g = from_dynkin(DynkinType::D, n / 2, Isogeny::ad());
    } else {
      need(n >= 8 && n % 4 == 0, "needs n divisible by 4 and n >= 8");
      g = from_dynkin(DynkinType::D, n / 2, Isogeny{Isogeny::Kind::HalfSpin, 1});
    }
  } else {
    throw DomainError("group: cannot parse selector '" + selector +
                      "' (expected e.g. G2, E6/ad, A4/mu5, Spin9, PGO12)");
  }
  g.selector = selector;
  (void)build_root_datum(g.type, g.rank, g.isogeny);
  return g;
}

GroupSpec group_of(const RootDatum& rd) {
  GroupSpec g = from_dynkin(rd.type, rd.rank, rd.isogeny);
  g.selector = rd.label();
  return g;
}

RootDatum root_datum_of(const GroupSpec& g, const DataTables& tables) {
  return build_root_datum(g.type, g.rank, g.isogeny, tables);
}

}  // namespace rostkit
