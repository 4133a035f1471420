#include "properties.hpp"

#include "oracles.hpp"
#include "table1.hpp"

#include <hsc/canonical.hpp>
#include <hsc/dgla.hpp>
#include <hsc/errors.hpp>
#include <hsc/invariants.hpp>
#include <hsc/order.hpp>
#include <hsc/persistence.hpp>
#include <hsc/toric.hpp>

#include <random>
#include <sstream>

namespace hsc::test {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long max_num, long max_den) {
  return ratio(uniform(rng, 1, max_num), uniform(rng, 1, max_den));
}

// 0 < a ≤ b with small numerators and denominators.
std::pair<Rational, Rational> random_ab(Rng& rng) {
  Rational a = random_rational(rng, 12, 4), b = random_rational(rng, 12, 4);
  if (b < a) std::swap(a, b);
  return {a, b};
}

ToricDomain random_ellipsoid(Rng& rng) {
  auto [a, b] = random_ab(rng);
  return ToricDomain::ellipsoid(a, b);
}

ToricDomain random_domain(Rng& rng) {
  auto [a, b] = random_ab(rng);
  return uniform(rng, 0, 1) ? ToricDomain::ellipsoid(a, b) : ToricDomain::polydisk(a, b);
}

Generator random_generator(Rng& rng, long max_weight) {
  while (true) {
    long w = uniform(rng, 1, max_weight);
    long i = uniform(rng, 0, w);
    if (uniform(rng, 0, 1) && i >= 1 && i <= w - 1) return Generator::alpha(i, w - i);
    return Generator::beta(i, w - i);
  }
}

Element random_element(Rng& rng, long max_weight, long terms) {
  Element e;
  for (long t = 0; t < terms; ++t) e.add(random_generator(rng, max_weight), Rational(uniform(rng, -5, 5)));
  return e;
}

Word random_word(Rng& rng, long max_length, long max_weight) {
  Word w;
  long n = uniform(rng, 1, max_length);
  long budget = max_weight;
  for (long k = 0; k < n && budget >= 1; ++k) {
    Generator g = random_generator(rng, std::min(budget, max_weight));
    budget -= g.weight();
    w.push_back(g);
  }
  return w;
}

Word random_beta_word(Rng& rng, long max_length, long max_size) {
  // size = Σ(weight + 1); keeps the degree at or above −2·max_size.
  Word w;
  long n = uniform(rng, 1, max_length);
  long budget = max_size;
  for (long k = 0; k < n && budget >= 2; ++k) {
    long weight = uniform(rng, 1, budget - 1);
    long i = uniform(rng, 0, weight);
    w.push_back(Generator::beta(i, weight - i));
    budget -= weight + 1;
  }
  return w;
}

std::vector<LatticePair> random_inputs(Rng& rng, long max_k, long max_weight) {
  std::vector<LatticePair> in;
  long k = uniform(rng, 1, max_k);
  long budget = max_weight;
  for (long s = 0; s < k && budget >= 1; ++s) {
    long w = uniform(rng, 1, std::max(1L, std::min(budget, max_weight / k + 3)));
    w = std::min(w, budget);
    long i = uniform(rng, 0, w);
    in.push_back({i, w - i});
    budget -= w;
  }
  return in;
}

CapacityWord random_capacity_word(Rng& rng, long max_size) {
  // t^k has degree −4−2k; max_size bounds Σ(k+2).
  CapacityWord w;
  long budget = max_size;
  long n = uniform(rng, 1, 3);
  for (long s = 0; s < n && budget >= 2; ++s) {
    long k = uniform(rng, 0, budget - 2);
    w.exponents.push_back(k);
    budget -= k + 2;
  }
  std::sort(w.exponents.begin(), w.exponents.end());
  return w;
}

template <class T>
std::string show(const T& x) {
  return to_string(x);
}

std::string show_inputs(const std::vector<LatticePair>& in) {
  std::string s;
  for (const auto& p : in) s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  return s;
}

std::string show_domain(const ToricDomain& d) { return domain_literal(d); }

long sign(long degree_product) { return (degree_product % 2 == 0) ? 1 : -1; }

Element psi_phi(EllipsoidModel& m, const Element& x) {
  Element out;
  for (const auto& [g, c] : x.terms()) {
    if (g.odd()) continue;
    auto r = m.phi1(g.i, g.j);
    Element image = m.psi1(r.target);
    image *= c * r.coeff;
    out += image;
  }
  return out;
}

}  // namespace

PropertyResult d_squared_zero(Seed seed, long cases) {
  PropertyResult r{"differential squares to zero", 0, {}};
  for (long i = 0; i <= 30; ++i)
    for (long j = 0; i + j <= 30; ++j) {
      if (i == 0 && j == 0) continue;
      for (int fam = 0; fam < 2; ++fam) {
        if (fam == 0 && (i < 1 || j < 1)) continue;
        Generator g = fam == 0 ? Generator::alpha(i, j) : Generator::beta(i, j);
        if (!differential(differential(g)).zero()) {
          r.failure = "∂∂" + show(g) + " ≠ 0";
          return r;
        }
      }
    }
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    Element x = random_element(rng, 30, 4);
    if (!differential(differential(x)).zero()) {
      r.failure = "∂∂(" + show(x) + ") ≠ 0";
      return r;
    }
  }
  return r;
}

PropertyResult graded_jacobi(Seed seed, long cases) {
  PropertyResult r{"graded Jacobi identity", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    Generator x = random_generator(rng, 6), y = random_generator(rng, 6), z = random_generator(rng, 6);
    long dx = x.degree(), dy = y.degree(), dz = z.degree();
    Element sum = bracket(bracket(Element(x), Element(y)), Element(z));
    sum += Rational(sign(dy * dz)) * bracket(bracket(Element(x), Element(z)), Element(y));
    sum += Rational(sign(dx * (dy + dz))) * bracket(bracket(Element(y), Element(z)), Element(x));
    if (!sum.zero()) {
      r.failure = "Jacobi fails on " + show(x) + ", " + show(y) + ", " + show(z) + ": " + show(sum);
      return r;
    }
  }
  return r;
}

PropertyResult leibniz(Seed seed, long cases) {
  PropertyResult r{"Leibniz rule", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    Generator x = random_generator(rng, 12), y = random_generator(rng, 12);
    Element sum = differential(bracket(x, y));
    sum += bracket(differential(Element(x)), Element(y));
    sum += Rational(sign(x.degree())) * bracket(Element(x), differential(Element(y)));
    if (!sum.zero()) {
      r.failure = "Leibniz fails on " + show(x) + ", " + show(y) + ": " + show(sum);
      return r;
    }
  }
  return r;
}

PropertyResult bar_differential_squared_zero(Seed seed, long cases) {
  PropertyResult r{"bar differential squares to zero", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    BarElement x;
    long terms = uniform(rng, 1, 3);
    for (long t = 0; t < terms; ++t) x.add(random_word(rng, 4, 12), Rational(uniform(rng, -3, 3)));
    BarElement dd = bar_differential(bar_differential(x));
    if (!dd.zero()) {
      r.failure = "ℓ̂ℓ̂(" + show(x) + ") = " + show(dd);
      return r;
    }
  }
  return r;
}

PropertyResult bar_differential_degree_and_weight(Seed seed, long cases) {
  PropertyResult r{"bar differential raises degree by one and trades one unit of weight or length", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    Word w = random_word(rng, 4, 12);
    BarElement x;
    x.add(w, 1);
    if (x.zero()) continue;
    const Word& canonical = x.terms().begin()->first;
    BarElement image = bar_differential(canonical);
    for (const auto& [v, coeff] : image.terms()) {
      bool internal = v.size() == canonical.size() && word_weight(v) == word_weight(canonical) - 1;
      bool merged = v.size() + 1 == canonical.size() && word_weight(v) == word_weight(canonical);
      if (word_degree(v) != word_degree(canonical) + 1 || !(internal || merged)) {
        r.failure = "term " + show(v) + " of ℓ̂(" + show(canonical) + ")";
        return r;
      }
    }
  }
  return r;
}

PropertyResult bar_differential_filtered(Seed seed, long cases) {
  PropertyResult r{"bar differential preserves the action filtration", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    ToricDomain dom = random_domain(rng);
    Word w = random_word(rng, 4, 12);
    BarElement x;
    x.add(w, 1);
    if (x.zero()) continue;
    const Word& canonical = x.terms().begin()->first;
    auto image = bar_action(dom, bar_differential(canonical));
    if (image && word_action(dom, canonical) < *image) {
      r.failure = "action grows on " + show(canonical) + " at " + show_domain(dom);
      return r;
    }
  }
  return r;
}

PropertyResult barcode_counts_consistent(Seed seed, long cases) {
  PropertyResult r{"barcode counts match homology ranks and chain dimensions", 0, {}};
  Rng rng(seed);
  const long lo = -11, hi = -4;
  for (long c = 0; c < cases; ++c, ++r.cases) {
    ToricDomain dom = random_domain(rng);
    std::map<long, Barcode> codes;
    Integer euler_chain = 0, euler_p = 0;
    for (long d = lo - 1; d <= hi; ++d) codes.emplace(d, barcode(dom, d, required_truncation_around(d)));
    for (long d = lo; d <= hi; ++d) {
      Barcode& bc = codes.at(d);
      long semi = 0;
      for (const auto& b : bc.bars) semi += !b.death;
      long rank = homology_rank(Space::BarV, dom, d, required_truncation_around(d));
      long dim = bc.chain_dim[d];
      if (semi != bc.p[d] || rank != bc.p[d] || dim != bc.p[d] + bc.l[d] + bc.r[d] || bc.l[d] != codes.at(d - 1).r[d - 1]) {
        std::ostringstream os;
        os << show_domain(dom) << " degree " << d << ": semi " << semi << " p " << bc.p[d] << " rank " << rank
           << " dim " << dim << " l " << bc.l[d] << " r " << bc.r[d];
        r.failure = os.str();
        return r;
      }
      long s = (d % 2 == 0) ? 1 : -1;
      euler_chain += s * dim;
      euler_p += s * bc.p[d];
    }
    long s_lo = (lo % 2 == 0) ? 1 : -1, s_hi = (hi % 2 == 0) ? 1 : -1;
    if (euler_chain != euler_p + s_lo * codes.at(lo).l[lo] + s_hi * codes.at(hi).r[hi]) {
      r.failure = "Euler characteristic mismatch at " + show_domain(dom);
      return r;
    }
  }
  return r;
}

PropertyResult phi_kills_boundaries(Seed seed, long cases) {
  PropertyResult r{"Φ¹ vanishes on boundaries", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    EllipsoidModel m(a, b);
    for (long i = 1; i <= 25; ++i)
      for (long j = 1; j <= 25; ++j) {
        std::map<long, Rational> total;
        auto boundary = differential(Generator::alpha(i, j));
        for (const auto& [g, coeff] : boundary.terms()) {
          auto p = m.phi1(g.i, g.j);
          total[p.target] += coeff * p.coeff;
        }
        for (const auto& [q, v] : total)
          if (v != 0) {
            r.failure = "Φ¹(∂α_{" + std::to_string(i) + "," + std::to_string(j) + "}) ≠ 0 at E(" + show(a) + "," +
                        show(b) + ")";
            return r;
          }
      }
  }
  return r;
}

PropertyResult homotopy_identity(Seed seed, long cases) {
  PropertyResult r{"h¹∂ + ∂h¹ = 1 − Ψ¹Φ¹", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    EllipsoidModel m(a, b);
    Element x = random_element(rng, 20, 4);
    Element lhs = m.homotopy_h1(differential(x)) + differential(m.homotopy_h1(x));
    Element rhs = x - psi_phi(m, x);
    if (lhs != rhs) {
      r.failure = "fails on " + show(x) + " at E(" + show(a) + "," + show(b) + ")";
      return r;
    }
  }
  return r;
}

PropertyResult phi_order_independent(Seed seed, long cases) {
  PropertyResult r{"Φ^k independent of rewrite order", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    EllipsoidModel m(a, b);
    auto in = random_inputs(rng, 4, 14);
    auto canonical = m.phi(in);
    for (int trial = 0; trial < 3; ++trial) {
      auto shuffled = m.phi_random_order(in, rng);
      if (shuffled.coeff != canonical.coeff || shuffled.target != canonical.target) {
        r.failure = show_inputs(in) + " at E(" + show(a) + "," + show(b) + "): " + show(canonical.coeff) + " vs " +
                    show(shuffled.coeff);
        return r;
      }
    }
  }
  return r;
}

PropertyResult phi_filtered(Seed seed, long cases) {
  PropertyResult r{"Φ^k is filtered and has degree zero", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    EllipsoidModel m(a, b);
    auto in = random_inputs(rng, 4, 14);
    auto out = m.phi(in);
    long expected = static_cast<long>(in.size()) - 1;
    PerturbedScalar input_action;
    for (const auto& p : in) {
      expected += p.i + p.j;
      input_action += dual_norm(m.domain(), p);
    }
    if (out.target != expected) {
      r.failure = "target A_" + std::to_string(out.target) + " for " + show_inputs(in);
      return r;
    }
    if (out.coeff != 0 && input_action < gh_capacity(m.domain(), out.target)) {
      r.failure = "action grows on " + show_inputs(in) + " at E(" + show(a) + "," + show(b) + ")";
      return r;
    }
  }
  return r;
}

PropertyResult phi_hat_psi_hat_identity(Seed seed, long cases) {
  PropertyResult r{"Φ̂∘Ψ̂ is the identity on canonical words", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    EllipsoidModel m(a, b);
    CanWord w;
    long budget = 12, n = uniform(rng, 1, 4);
    for (long s = 0; s < n && budget >= 1; ++s) {
      long q = uniform(rng, 1, budget);
      w.push_back(q);
      budget -= q;
    }
    std::sort(w.begin(), w.end());
    CanElement image = m.phi_hat(m.psi_hat(w));
    if (image != CanElement{{w, Rational(1)}}) {
      r.failure = show(w) + " ↦ " + show(image) + " at E(" + show(a) + "," + show(b) + ")";
      return r;
    }
  }
  return r;
}

PropertyResult am_reduce_homologous_and_minimal(Seed seed, long cases) {
  PropertyResult r{"action-minimal reduction is homologous, minimal and idempotent", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    ToricDomain dom = random_domain(rng);
    BarElement x(random_beta_word(rng, 3, 7));
    BarElement y = am_reduce(dom, x);
    for (const auto& [w, coeff] : y.terms())
      for (const auto& g : w)
        if (argmin_pair(dom, g.weight()) != LatticePair{g.i, g.j}) {
          r.failure = show(x) + " reduces to non-minimal " + show(w) + " at " + show_domain(dom);
          return r;
        }
    if (am_reduce(dom, y) != y) {
      r.failure = "not idempotent on " + show(x) + " at " + show_domain(dom);
      return r;
    }
    if (!is_boundary(x - y)) {
      r.failure = show(x) + " − " + show(y) + " is not a boundary";
      return r;
    }
  }
  return r;
}

PropertyResult constants_are_one(Seed seed, long cases) {
  PropertyResult r{"normalization constants equal one", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    EllipsoidModel m(a, b);
    for (long q = 1; q <= 60; ++q)
      if (m.normalization_constant(q) != 1) {
        r.failure = "C_" + std::to_string(q) + " at E(" + show(a) + "," + show(b) + ") = " + show(m.normalization_constant(q));
        return r;
      }
  }
  return r;
}

PropertyResult capacity_matches_merged_spectrum(Seed seed, long cases) {
  PropertyResult r{"ellipsoid capacities are the merged action spectrum", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    ToricDomain dom = ToricDomain::ellipsoid(a, b);
    auto merged = merged_spectrum(a, b, 50);
    auto spectrum = reeb_spectrum(a, b, 50);
    for (long q = 1; q <= 50; ++q) {
      auto cap = gh_capacity(dom, q);
      if (cap != merged[q - 1] || cap != spectrum[q - 1].action || cap != ellipsoid_capacity_by_enumeration(a, b, q)) {
        r.failure = "q=" + std::to_string(q) + " at E(" + show(a) + "," + show(b) + "): " + show(cap) + " vs " +
                    show(merged[q - 1]);
        return r;
      }
    }
  }
  return r;
}

PropertyResult dual_norm_triangle_and_monotone(Seed seed, long cases) {
  PropertyResult r{"dual norm is subadditive and monotone", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    ToricDomain dom = random_domain(rng);
    for (int t = 0; t < 40; ++t) {
      long i = uniform(rng, -20, 20), j = uniform(rng, -20, 20), k = uniform(rng, -20, 20), l = uniform(rng, -20, 20);
      if (dual_norm(dom, i, j) + dual_norm(dom, k, l) < dual_norm(dom, i + k, j + l)) {
        r.failure = "triangle inequality at " + show_domain(dom);
        return r;
      }
      long p = uniform(rng, 1, 20), q = uniform(rng, 1, 20);
      if (dual_norm(dom, p, q) < dual_norm(dom, p - 1, q) || dual_norm(dom, p, q) < dual_norm(dom, p, q - 1)) {
        r.failure = "monotonicity at " + show_domain(dom);
        return r;
      }
    }
  }
  return r;
}

PropertyResult argmin_scale_invariant(Seed seed, long cases) {
  PropertyResult r{"argmin is invariant under rescaling", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    Rational t = random_rational(rng, 9, 7);
    ToricDomain d1 = ToricDomain::ellipsoid(a, b), d2 = ToricDomain::ellipsoid(t * a, t * b);
    for (long q = 1; q <= 40; ++q)
      if (argmin_pair(d1, q) != argmin_pair(d2, q)) {
        r.failure = "q=" + std::to_string(q) + " at E(" + show(a) + "," + show(b) + ") scaled by " + show(t);
        return r;
      }
  }
  return r;
}

PropertyResult capacity_monotone_under_inclusion(Seed seed, long cases) {
  PropertyResult r{"capacities grow under inclusion", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    Rational a2 = a + random_rational(rng, 3, 3) - 1 / Rational(3), b2 = b + random_rational(rng, 3, 3);
    if (a2 < a) a2 = a;
    if (b2 < a2) b2 = a2;
    ToricDomain small = ToricDomain::ellipsoid(a, b), big = ToricDomain::ellipsoid(a2, b2);
    for (long q = 1; q <= 30; ++q)
      if (gh_capacity(big, q) < gh_capacity(small, q)) {
        r.failure = "q=" + std::to_string(q) + ": " + show_domain(small) + " vs " + show_domain(big);
        return r;
      }
  }
  return r;
}

PropertyResult spectral_matches_gb(Seed seed, long cases) {
  PropertyResult r{"bar-complex spectral invariant equals the canonical-model capacity", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    CapacityWord w = random_capacity_word(rng, 7);
    ToricDomain dom = ToricDomain::ellipsoid(a, b);
    long degree = word_degree(skinny_representative(w).terms().begin()->first);
    auto spectral = spectral_invariant(dom, w, required_truncation_around(degree));
    auto gb = gb_capacity_ellipsoid(a, b, w);
    if (spectral != gb) {
      r.failure = show(w) + " at E(" + show(a) + "," + show(b) + "): " + show(spectral) + " vs " + show(gb);
      return r;
    }
  }
  return r;
}

PropertyResult gb_monotone(Seed seed, long cases) {
  PropertyResult r{"canonical-model capacity grows under inclusion", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    Rational a2 = a + random_rational(rng, 2, 3), b2 = b + random_rational(rng, 2, 3);
    if (b2 < a2) b2 = a2;
    CapacityWord w = random_capacity_word(rng, 12);
    if (gb_capacity_ellipsoid(a2, b2, w) < gb_capacity_ellipsoid(a, b, w)) {
      r.failure = show(w) + " at E(" + show(a) + "," + show(b) + ") ⊂ E(" + show(a2) + "," + show(b2) + ")";
      return r;
    }
  }
  return r;
}

PropertyResult inclusion_has_no_obstruction(Seed seed, long cases) {
  PropertyResult r{"inclusions are never obstructed", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    Rational a2 = a + random_rational(rng, 2, 3) - 1 / Rational(2), b2 = b + random_rational(rng, 2, 3) - 1 / Rational(2);
    if (a2 < a) a2 = a;
    if (b2 < b) b2 = b;
    if (b2 < a2) b2 = a2;
    ObstructionOptions opts;
    opts.max_k = 3;
    opts.max_q = 8;
    for (const auto& v : obstruct_ellipsoid(a, b, a2, b2, opts))
      if (v.violated) {
        r.failure = "E(" + show(a) + "," + show(b) + ") into E(" + show(a2) + "," + show(b2) + ") flagged by k=" +
                    std::to_string(v.k);
        return r;
      }
  }
  return r;
}

PropertyResult sd_stabilizes(Seed seed, long cases) {
  PropertyResult r{"S_{d;1,x} is independent of x once x ≥ 3d", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    long d = uniform(rng, 1, 8);
    Rational x = Rational(3 * d) + ratio(uniform(rng, 0, 40), uniform(rng, 1, 5));
    Rational v = s_d(d, x);
    if (v != Rational(std::string(kStableS[d - 1]))) {
      r.failure = "d=" + std::to_string(d) + " x=" + show(x) + " gives " + show(v);
      return r;
    }
  }
  return r;
}

PropertyResult rseep_value_is_sd(Seed seed, long cases) {
  PropertyResult r{"stabilized criterion value equals S_d and its gate is exact", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    long q, p;
    do q = uniform(rng, 1, 8);
    while (q % 3 == 0);
    do p = uniform(rng, q + 1, 36);
    while ((p + q) % 3 != 0 || gcd_long(p, q) != 1);
    auto v = rseep_check(p, q);
    Rational expected = s_d((p + q) / 3, ratio(p, q));
    if (v.value != expected || v.nonzero != (expected != 0) || v.applies != at_least_tau4_float(p, q)) {
      r.failure = "p=" + std::to_string(p) + " q=" + std::to_string(q);
      return r;
    }
  }
  return r;
}

PropertyResult generator_maximality_matches_enumeration(Seed seed, long cases) {
  PropertyResult r{"partial order and generator maximality match enumeration", 0, {}};
  Rng rng(seed);
  for (long c = 0; c < cases; ++c, ++r.cases) {
    auto [a, b] = random_ab(rng);
    long q = uniform(rng, 2, 9);
    // Words of the same degree as A_q with at least two factors: partitions of q+1 into parts ≥ 2.
    bool dominated = false;
    std::vector<long> parts;
    std::function<void(long, long)> rec = [&](long rem, long max_part) {
      if (dominated) return;
      if (rem == 0) {
        if (parts.size() < 2) return;
        std::vector<long> w;
        for (long p : parts) w.push_back(p - 1);
        if (partial_order_by_enumeration({q}, w, a, b) != partial_order_leq({q}, w, a, b)) {
          r.failure = "partial order disagrees at A_" + std::to_string(q);
        }
        dominated = dominated || partial_order_by_enumeration({q}, w, a, b);
        return;
      }
      for (long p = std::min(rem, max_part); p >= 2; --p) {
        parts.push_back(p);
        rec(rem - p, p);
        parts.pop_back();
      }
    };
    rec(q + 1, q + 1);
    if (r.failure) return r;
    if (is_maximal_generator(a, b, q) == dominated) {
      r.failure = "A_" + std::to_string(q) + " at E(" + show(a) + "," + show(b) + ")";
      return r;
    }
    // Random word pairs for the partial order itself.
    std::vector<long> lhs, rhs;
    for (long k = uniform(rng, 1, 2); k > 0; --k) lhs.push_back(uniform(rng, 1, 6));
    for (long k = uniform(rng, 1, 4); k > 0; --k) rhs.push_back(uniform(rng, 1, 6));
    if (partial_order_leq(lhs, rhs, a, b) != partial_order_by_enumeration(lhs, rhs, a, b)) {
      r.failure = "word pair " + show(lhs) + " ⩽ " + show(rhs) + " at E(" + show(a) + "," + show(b) + ")";
      return r;
    }
  }
  return r;
}

}  // namespace hsc::test
