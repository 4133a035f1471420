#pragma once

#include "hsc/canonical.hpp"
#include "hsc/dgla.hpp"
#include "hsc/persistence.hpp"
#include "hsc/rational.hpp"
#include "hsc/toric.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsc {

// t^{k1}⊙...⊙t^{km}, written `t0*t2^2`; t^k stands for A_{k+1}.
struct CapacityWord {
  std::vector<long> exponents;  // sorted
};

CapacityWord parse_capacity_word(std::string_view literal);
std::string to_string(const CapacityWord& w);
CanWord to_canonical(const CapacityWord& w);

// ⟨(Φ_tgt ∘ Ψ_src)^k(A_{q1},...,A_{qk}), A_{Σq+k−1}⟩.
Rational structure_coefficient(EllipsoidModel& src, EllipsoidModel& tgt, const std::vector<long>& qs);
Rational structure_coefficient(const Rational& src_a, const Rational& src_b, const Rational& tgt_a,
                               const Rational& tgt_b, const std::vector<long>& qs,
                               ConstantsMode mode = ConstantsMode::Geometric);

// The k with 3d−1 = k + ⌊k/(x+δ)⌋, if any.
std::optional<long> solve_k(long d, const Rational& x);

// S_{d;1,x}; throws NoValidK.
Rational s_d(long d, const Rational& x, ConstantsMode mode = ConstantsMode::Geometric);
Rational s_d(long d, EllipsoidModel& source, EllipsoidModel& target);

struct ObstructionOptions {
  long max_k = 8;
  long max_q = 30;
  // Skip witnesses whose inequality cannot fail, without computing their coefficient.
  bool violations_only = false;
  ConstantsMode mode = ConstantsMode::Geometric;
};

struct ObstructionVerdict {
  long k = 0;
  std::vector<long> qs;
  Rational coeff;
  PerturbedScalar lhs;  // Σ c_{q_s} of the codomain
  PerturbedScalar rhs;  // c_{Σq+k−1} of the embedded ellipsoid
  bool violated = false;
  long max_k = 0;
  long max_q = 0;
};

// Witnesses against embedding E(a,b) into E(a2,b2) after stabilization. Multisets are
// visited in a fixed order; `progress` (if set) receives the number visited so far.
std::vector<ObstructionVerdict> obstruct_ellipsoid(const Rational& a, const Rational& b, const Rational& a2,
                                                   const Rational& b2, const ObstructionOptions& opts,
                                                   const std::function<void(std::size_t)>& progress = {});

// p/q ≥ (7+3√5)/2, decided with integers only.
bool at_least_tau4(const Integer& p, const Integer& q);

struct RseepVerdict {
  long d = 0;
  bool applies = false;
  bool nonzero = false;
  Rational value;
};

RseepVerdict rseep_check(long p, long q, ConstantsMode mode = ConstantsMode::Geometric);

PerturbedScalar gb_capacity_ellipsoid(const Rational& a, const Rational& b, const CapacityWord& w,
                                      ConstantsMode mode = ConstantsMode::Geometric);

// The skinny-ellipsoid representative β_{q1,0}⊙...⊙β_{qm,0} of a capacity word.
BarElement skinny_representative(const CapacityWord& w);

PerturbedScalar spectral_invariant(const ToricDomain& domain, const CapacityWord& w, const Truncation& t);

bool is_maximal_short_orbit(long p, long q, long d);

enum class PolydiskVariant { Cube, Ball };

Rational nonzero_coeff_polydisk(long d, PolydiskVariant variant);

// Lower bound on c for P(1,a)×C^N into P(c,c)×C^N (Cube) or B^4(c)×C^N (Ball). It holds
// provided nonzero_coeff_polydisk(d, variant) ≠ 0 for every d; callers verify a finite range.
Rational polydisk_embedding_bound(const Rational& a, PolydiskVariant variant);

}  // namespace hsc
