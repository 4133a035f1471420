#pragma once

#include "hsc/dgla.hpp"
#include "hsc/toric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hsc {

enum class Space { V, BarV };

long homology_rank(Space space, const ToricDomain& domain, long degree, const Truncation& t);

struct PersistenceBar {
  long degree = 0;
  PerturbedScalar birth;
  std::optional<PerturbedScalar> death;  // nullopt: semi-infinite
};

struct Barcode {
  // Finite bars of positive length and all semi-infinite bars, sorted by (birth, death).
  std::vector<PersistenceBar> bars;
  std::map<long, long> p;  // semi-infinite generators τ per degree
  std::map<long, long> l;  // cycles that later become boundaries (ξ)
  std::map<long, long> r;  // chains whose boundary is a ξ (ζ)
  std::map<long, long> chain_dim;
};

Barcode barcode(const ToricDomain& domain, long degree, const Truncation& t);

// Smallest action level at which the homology class of the cycle x is represented.
// x must be a degree-homogeneous cycle of the bar complex.
PerturbedScalar class_birth(const ToricDomain& domain, const BarElement& x, const Truncation& t);

// True when x lies in the image of the bar differential (x homogeneous).
bool is_boundary(const BarElement& x);

}  // namespace hsc
