#pragma once

#include "hsc/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsc {

// base + delta_coeff * δ for an infinitesimal δ > 0. Ordered lexicographically.
struct PerturbedScalar {
  Rational base{0};
  Integer delta{0};

  PerturbedScalar() = default;
  PerturbedScalar(Rational b, Integer d = 0) : base(std::move(b)), delta(std::move(d)) {}

  PerturbedScalar& operator+=(const PerturbedScalar& o) {
    base += o.base;
    delta += o.delta;
    return *this;
  }
  friend PerturbedScalar operator+(PerturbedScalar l, const PerturbedScalar& r) { return l += r; }
  friend PerturbedScalar operator*(const Integer& k, const PerturbedScalar& s) {
    return {Rational(k) * s.base, k * s.delta};
  }

  friend bool operator==(const PerturbedScalar& l, const PerturbedScalar& r) {
    return l.base == r.base && l.delta == r.delta;
  }
  friend std::strong_ordering operator<=>(const PerturbedScalar& l, const PerturbedScalar& r) {
    int c = cmp(l.base, r.base);
    if (c == 0) c = cmp(l.delta, r.delta);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

std::string to_string(const PerturbedScalar& s);

struct LatticePair {
  long i = 0;
  long j = 0;
  friend auto operator<=>(const LatticePair&, const LatticePair&) = default;
};

enum class DomainKind { Ellipsoid, Polydisk, Polygon };
enum class PerturbedCoordinate { First, Second };

struct ToricDomain {
  DomainKind kind = DomainKind::Ellipsoid;
  Rational a{1};
  Rational b{1};
  std::vector<std::pair<Rational, Rational>> vertices;  // Polygon only
  PerturbedCoordinate perturbation = PerturbedCoordinate::Second;

  static ToricDomain ellipsoid(const Rational& a, const Rational& b);
  static ToricDomain polydisk(const Rational& a, const Rational& b);
  static ToricDomain polygon(std::vector<std::pair<Rational, Rational>> vertices);

  bool is_ellipsoid() const { return kind == DomainKind::Ellipsoid; }
};

// `ellipsoid:a,b`, `polydisk:a,b`, `polygon:x1,y1;x2,y2;...`
ToricDomain parse_domain(std::string_view literal);
std::string domain_literal(const ToricDomain& d);

// max over the symmetrized domain of <v, w>; accepts signed coordinates.
PerturbedScalar dual_norm(const ToricDomain& d, long i, long j);
inline PerturbedScalar dual_norm(const ToricDomain& d, LatticePair v) { return dual_norm(d, v.i, v.j); }

LatticePair argmin_pair(const ToricDomain& d, long q);
PerturbedScalar gh_capacity(const ToricDomain& d, long q);

enum class OrbitFamily { Short, Long };

struct ReebOrbitEntry {
  PerturbedScalar action;
  OrbitFamily family = OrbitFamily::Short;
  long multiplicity = 1;
  long ordinal = 1;
  long degree = -4;
};

std::vector<ReebOrbitEntry> reeb_spectrum(const Rational& a, const Rational& b, long count);
long orbit_multiplicity(const Rational& a, const Rational& b, long q);

// Grading of the q-th canonical generator.
inline long canonical_degree(long q) { return -2 - 2 * q; }

}  // namespace hsc
