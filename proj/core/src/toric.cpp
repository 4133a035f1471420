#include "hsc/toric.hpp"

#include "hsc/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hsc {

std::string to_string(const PerturbedScalar& s) {
  std::string out = to_string(s.base);
  if (s.delta == 0) return out;
  Integer mag = abs(s.delta);
  return out + (s.delta > 0 ? "+" : "-") + (mag == 1 ? std::string() : to_string(mag)) + "δ";
}

ToricDomain ToricDomain::ellipsoid(const Rational& a, const Rational& b) {
  if (a <= 0 || b < a) throw InvalidDomain("ellipsoid requires 0 < a <= b");
  ToricDomain d;
  d.kind = DomainKind::Ellipsoid;
  d.a = a;
  d.b = b;
  return d;
}

ToricDomain ToricDomain::polydisk(const Rational& a, const Rational& b) {
  if (a <= 0 || b < a) throw InvalidDomain("polydisk requires 0 < a <= b");
  ToricDomain d;
  d.kind = DomainKind::Polydisk;
  d.a = a;
  d.b = b;
  return d;
}

ToricDomain ToricDomain::polygon(std::vector<std::pair<Rational, Rational>> vertices) {
  bool has_origin = false, has_x = false, has_y = false;
  for (const auto& [x, y] : vertices) {
    if (x < 0 || y < 0) throw InvalidDomain("polygon vertices must lie in the first quadrant");
    if (x == 0 && y == 0) has_origin = true;
    if (x > 0) has_x = true;
    if (y > 0) has_y = true;
  }
  if (!has_origin) throw InvalidDomain("polygon must contain the origin as a vertex");
  if (!has_x || !has_y) throw InvalidDomain("polygon must have positive extent along both axes");
  ToricDomain d;
  d.kind = DomainKind::Polygon;
  d.vertices = std::move(vertices);
  return d;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<Rational, Rational> parse_pair(std::string_view s, std::string_view context) {
  auto parts = split(s, ',');
  if (parts.size() != 2) throw ParseError("expected two coordinates in '" + std::string(context) + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

}  // namespace

ToricDomain parse_domain(std::string_view literal) {
  auto colon = literal.find(':');
  if (colon == std::string_view::npos) throw ParseError("domain literal needs a kind prefix: '" + std::string(literal) + "'");
  std::string_view kind = literal.substr(0, colon);
  std::string_view body = literal.substr(colon + 1);
  if (kind == "ellipsoid") {
    auto [a, b] = parse_pair(body, literal);
    return ToricDomain::ellipsoid(a, b);
  }
  if (kind == "polydisk") {
    auto [a, b] = parse_pair(body, literal);
    return ToricDomain::polydisk(a, b);
  }
  if (kind == "polygon") {
    std::vector<std::pair<Rational, Rational>> verts;
    for (auto v : split(body, ';')) verts.push_back(parse_pair(v, literal));
    return ToricDomain::polygon(std::move(verts));
  }
  throw ParseError("unknown domain kind '" + std::string(kind) + "'");
}

std::string domain_literal(const ToricDomain& d) {
  switch (d.kind) {
    case DomainKind::Ellipsoid:
      return "ellipsoid:" + to_string(d.a) + "," + to_string(d.b);
    case DomainKind::Polydisk:
      return "polydisk:" + to_string(d.a) + "," + to_string(d.b);
    case DomainKind::Polygon: {
      std::string s = "polygon:";
      for (std::size_t k = 0; k < d.vertices.size(); ++k) {
        if (k) s += ";";
        s += to_string(d.vertices[k].first) + "," + to_string(d.vertices[k].second);
      }
      return s;
    }
  }
  return {};
}

PerturbedScalar dual_norm(const ToricDomain& d, long i, long j) {
  const long ai = std::labs(i), aj = std::labs(j);
  const bool second = d.perturbation == PerturbedCoordinate::Second;
  switch (d.kind) {
    case DomainKind::Ellipsoid: {
      // Vertices (a,0) and (0,b), the perturbed one shifted by δ.
      PerturbedScalar x{Rational(ai) * d.a, second ? Integer(0) : Integer(ai)};
      PerturbedScalar y{Rational(aj) * d.b, second ? Integer(aj) : Integer(0)};
      return std::max(x, y);
    }
    case DomainKind::Polydisk:
      return {Rational(ai) * d.a + Rational(aj) * d.b, Integer(second ? aj : ai)};
    case DomainKind::Polygon: {
      Rational top = 0;
      for (const auto& [x, y] : d.vertices) top = std::max(top, second ? y : x);
      PerturbedScalar best;
      for (const auto& [x, y] : d.vertices) {
        bool shifted = (second ? y : x) == top;
        PerturbedScalar v{Rational(ai) * x + Rational(aj) * y,
                          shifted ? Integer(second ? aj : ai) : Integer(0)};
        best = std::max(best, v);
      }
      return best;
    }
  }
  return {};
}

LatticePair argmin_pair(const ToricDomain& d, long q) {
  if (q < 1) throw InvalidDomain("argmin_pair requires q >= 1");
  LatticePair best{q, 0};
  PerturbedScalar best_val = dual_norm(d, best);
  bool tie = false;
  for (long j = 1; j <= q; ++j) {
    PerturbedScalar v = dual_norm(d, q - j, j);
    if (v < best_val) {
      best = {q - j, j};
      best_val = v;
      tie = false;
    } else if (v == best_val) {
      tie = true;
    }
  }
  if (tie)
    throw NonUniqueMinimizer("argmin over i+j=" + std::to_string(q) + " is not unique for " + domain_literal(d));
  return best;
}

PerturbedScalar gh_capacity(const ToricDomain& d, long q) { return dual_norm(d, argmin_pair(d, q)); }

std::vector<ReebOrbitEntry> reeb_spectrum(const Rational& a, const Rational& b, long count) {
  if (a <= 0 || b < a) throw InvalidDomain("reeb_spectrum requires 0 < a <= b");
  std::vector<ReebOrbitEntry> out;
  out.reserve(count > 0 ? count : 0);
  long ks = 1, kl = 1;
  while (static_cast<long>(out.size()) < count) {
    PerturbedScalar s{Rational(ks) * a, Integer(0)};
    PerturbedScalar l{Rational(kl) * b, Integer(kl)};
    ReebOrbitEntry e;
    if (s < l) {
      e.action = s;
      e.family = OrbitFamily::Short;
      e.multiplicity = ks++;
    } else {
      e.action = l;
      e.family = OrbitFamily::Long;
      e.multiplicity = kl++;
    }
    e.ordinal = static_cast<long>(out.size()) + 1;
    e.degree = canonical_degree(e.ordinal);
    out.push_back(std::move(e));
  }
  return out;
}

long orbit_multiplicity(const Rational& a, const Rational& b, long q) {
  return reeb_spectrum(a, b, q).back().multiplicity;
}

}  // namespace hsc
