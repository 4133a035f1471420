#include "hsc/invariants.hpp"

#include "hsc/errors.hpp"

#include <algorithm>

namespace hsc {

CapacityWord parse_capacity_word(std::string_view literal) {
  CapacityWord w;
  if (literal.empty()) throw ParseError("empty capacity word");
  std::size_t start = 0;
  while (true) {
    auto star = literal.find('*', start);
    auto item = literal.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    if (item.size() < 2 || item[0] != 't') throw ParseError("capacity word factors look like t3 or t3^2, got '" + std::string(item) + "'");
    auto caret = item.find('^');
    Rational k = parse_rational(item.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
    Rational times = caret == std::string_view::npos ? Rational(1) : parse_rational(item.substr(caret + 1));
    if (k.get_den() != 1 || k < 0 || times.get_den() != 1 || times < 1 || times > 64)
      throw ParseError("bad capacity word factor '" + std::string(item) + "'");
    for (long r = 0; r < times.get_num().get_si(); ++r) w.exponents.push_back(k.get_num().get_si());
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  std::sort(w.exponents.begin(), w.exponents.end());
  return w;
}

std::string to_string(const CapacityWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.exponents.size();) {
    std::size_t run = 1;
    while (k + run < w.exponents.size() && w.exponents[k + run] == w.exponents[k]) ++run;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(w.exponents[k]);
    if (run > 1) s += "^" + std::to_string(run);
    k += run;
  }
  return s;
}

CanWord to_canonical(const CapacityWord& w) {
  CanWord out;
  for (long k : w.exponents) out.push_back(k + 1);
  return out;
}

Rational structure_coefficient(EllipsoidModel& src, EllipsoidModel& tgt, const std::vector<long>& qs) {
  if (qs.empty()) throw InvalidDomain("structure coefficient needs at least one q");
  Rational c = 1;
  std::vector<LatticePair> inputs;
  for (long q : qs) {
    if (q < 1) throw InvalidDomain("q must be positive");
    c *= src.normalization_constant(q);
    inputs.push_back(src.argmin(q));
  }
  return c * tgt.phi(inputs).coeff;
}

Rational structure_coefficient(const Rational& src_a, const Rational& src_b, const Rational& tgt_a,
                               const Rational& tgt_b, const std::vector<long>& qs, ConstantsMode mode) {
  EllipsoidModel src(src_a, src_b, mode), tgt(tgt_a, tgt_b, mode);
  return structure_coefficient(src, tgt, qs);
}

std::optional<long> solve_k(long d, const Rational& x) {
  if (d < 1 || x <= 0) return std::nullopt;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  for (long k = 1; k <= 3 * d - 1; ++k) {
    Integer kq = Integer(k) * q;
    Integer fl = (kq % p == 0) ? Integer(kq / p - 1) : Integer(kq / p);
    if (Integer(k) + fl == 3 * d - 1) return k;
  }
  return std::nullopt;
}

Rational s_d(long d, EllipsoidModel& source, EllipsoidModel& target) {
  if (d < 1) throw InvalidDomain("d must be positive");
  auto k = solve_k(d, target.domain().b / target.domain().a);
  if (!k) throw NoValidK("no k solves 3d-1 = k + floor(k/x) for d=" + std::to_string(d));
  Rational c = structure_coefficient(source, target, std::vector<long>(d, 2));
  return c / Rational(factorial(d) * *k);
}

Rational s_d(long d, const Rational& x, ConstantsMode mode) {
  if (!solve_k(d, x)) throw NoValidK("no k solves 3d-1 = k + floor(k/x) for d=" + std::to_string(d));
  EllipsoidModel source(1, 1, mode), target(1, x, mode);
  return s_d(d, source, target);
}

std::vector<ObstructionVerdict> obstruct_ellipsoid(const Rational& a, const Rational& b, const Rational& a2,
                                                   const Rational& b2, const ObstructionOptions& opts,
                                                   const std::function<void(std::size_t)>& progress) {
  if (opts.max_k < 1 || opts.max_q < 1) throw InvalidDomain("search bounds must be at least 1");
  EllipsoidModel embedded(a, b, opts.mode), codomain(a2, b2, opts.mode);
  std::vector<PerturbedScalar> small_cap(opts.max_q + 1);
  for (long q = 1; q <= opts.max_q; ++q) small_cap[q] = gh_capacity(codomain.domain(), q);

  std::vector<ObstructionVerdict> out;
  std::size_t visited = 0;
  std::vector<long> qs;
  auto visit = [&]() {
    ++visited;
    if (progress && visited % 4096 == 0) progress(visited);
    const long k = static_cast<long>(qs.size());
    long target = k - 1;
    PerturbedScalar lhs;
    for (long q : qs) {
      target += q;
      lhs += small_cap[q];
    }
    PerturbedScalar rhs = gh_capacity(embedded.domain(), target);
    bool violated = lhs < rhs;
    if (opts.violations_only && !violated) return;
    Rational c = structure_coefficient(codomain, embedded, qs);
    if (c == 0) return;
    out.push_back({k, qs, c, lhs, rhs, violated, opts.max_k, opts.max_q});
  };
  auto rec = [&](auto& self, long min_q) -> void {
    if (!qs.empty()) visit();
    if (static_cast<long>(qs.size()) == opts.max_k) return;
    for (long q = min_q; q <= opts.max_q; ++q) {
      qs.push_back(q);
      self(self, q);
      qs.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const ObstructionVerdict& x, const ObstructionVerdict& y) {
    return std::tie(x.k, x.qs) < std::tie(y.k, y.qs);
  });
  return out;
}

bool at_least_tau4(const Integer& p, const Integer& q) {
  if (q <= 0) throw InvalidDomain("denominator must be positive");
  Integer gap = 2 * p - 7 * q;
  return gap >= 0 && gap * gap >= 45 * q * q;
}

RseepVerdict rseep_check(long p, long q, ConstantsMode mode) {
  if (p < 1 || q < 1) throw InvalidDomain("p and q must be positive");
  if ((p + q) % 3 != 0) throw PQNotMultipleOfThree("p + q must be divisible by 3");
  RseepVerdict v;
  v.d = (p + q) / 3;
  v.applies = at_least_tau4(p, q);
  v.value = s_d(v.d, ratio(p, q), mode);
  v.nonzero = v.value != 0;
  return v;
}

BarElement skinny_representative(const CapacityWord& w) {
  if (w.exponents.empty()) throw InvalidDomain("capacity word must be nonempty");
  Word word;
  for (long k : w.exponents) word.push_back(Generator::beta(k + 1, 0));
  return BarElement(std::move(word));
}

PerturbedScalar gb_capacity_ellipsoid(const Rational& a, const Rational& b, const CapacityWord& w,
                                      ConstantsMode mode) {
  EllipsoidModel model(a, b, mode);
  CanElement image = model.phi_hat(skinny_representative(w));
  std::optional<PerturbedScalar> best;
  for (const auto& [word, c] : image) {
    PerturbedScalar s;
    for (long q : word) s += gh_capacity(model.domain(), q);
    if (!best || *best < s) best = s;
  }
  if (!best) throw Error("capacity word maps to zero");
  return *best;
}

PerturbedScalar spectral_invariant(const ToricDomain& domain, const CapacityWord& w, const Truncation& t) {
  return class_birth(domain, skinny_representative(w), t);
}

bool is_maximal_short_orbit(long p, long q, long d) {
  if (p < 1 || q < 1 || d < 1 || p + q != 3 * d) throw PQDMismatch("requires p + q = 3d");
  const long cost_cap = 3 * d;
  // reach[parts][sum][cost], parts counted up to 2.
  std::vector<std::vector<std::vector<char>>> reach(
      3, std::vector<std::vector<char>>(p + 1, std::vector<char>(cost_cap + 1, 0)));
  reach[0][0][0] = 1;
  for (long k = 1; k <= p; ++k) {
    const long cost = k + (k * q + p - 1) / p;
    for (long s = k; s <= p; ++s)
      for (long c = cost; c <= cost_cap; ++c)
        for (int parts = 0; parts < 3; ++parts)
          if (reach[parts][s - k][c - cost]) reach[std::min(parts + 1, 2)][s][c] = 1;
  }
  return !reach[2][p][cost_cap];
}

Rational nonzero_coeff_polydisk(long d, PolydiskVariant variant) {
  if (d < 1) throw InvalidDomain("d must be positive");
  ToricDomain p11 = ToricDomain::polydisk(1, 1);
  Word w;
  Word target;
  if (variant == PolydiskVariant::Cube) {
    for (long k = 0; k + 1 < d; ++k) w.push_back(Generator::beta(1, 0));
    w.push_back(Generator::beta(0, 1));
    target.push_back(Generator::beta(2 * d - 1, 0));
  } else {
    for (long k = 0; k < d; ++k) w.push_back(Generator::beta(1, 1));
    target.push_back(Generator::beta(3 * d - 1, 0));
  }
  return am_reduce(p11, BarElement(std::move(w))).coeff(target);
}

Rational polydisk_embedding_bound(const Rational& a, PolydiskVariant variant) {
  if (a < 1) throw InvalidDomain("a must be at least 1");
  return variant == PolydiskVariant::Cube ? std::min(a, Rational(2)) : std::min(Rational(a + 1), Rational(3));
}

}  // namespace hsc
