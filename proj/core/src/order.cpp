#include "hsc/order.hpp"

#include "hsc/errors.hpp"

#include <map>
#include <optional>

namespace hsc {

bool partial_order_leq(const CanWord& lhs, const CanWord& rhs, const Rational& a, const Rational& b) {
  if (lhs.empty() || rhs.size() < lhs.size()) return false;
  if (rhs.size() > 24) throw InvalidDomain("partial order search supports at most 24 factors");
  const ToricDomain dom = ToricDomain::ellipsoid(a, b);
  const std::size_t n = rhs.size();
  const unsigned full = (1u << n) - 1;

  std::vector<PerturbedScalar> rhs_action(n);
  for (std::size_t k = 0; k < n; ++k) rhs_action[k] = gh_capacity(dom, rhs[k]);
  std::vector<PerturbedScalar> lhs_action(lhs.size());
  for (std::size_t k = 0; k < lhs.size(); ++k) lhs_action[k] = gh_capacity(dom, lhs[k]);

  std::map<std::pair<std::size_t, unsigned>, bool> memo;
  // Can lhs[idx..] be matched exactly by the rhs factors in `mask`?
  auto rec = [&](auto& self, std::size_t idx, unsigned mask) -> bool {
    if (idx == lhs.size()) return mask == 0;
    if (mask == 0) return false;
    auto key = std::make_pair(idx, mask);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    const long want_degree = canonical_degree(lhs[idx]);
    for (unsigned sub = mask; sub && !ok; sub = (sub - 1) & mask) {
      long deg = 0;
      PerturbedScalar act;
      for (std::size_t k = 0; k < n; ++k)
        if (sub & (1u << k)) {
          deg += canonical_degree(rhs[k]);
          act += rhs_action[k];
        }
      if (deg != want_degree || act < lhs_action[idx]) continue;
      ok = self(self, idx + 1, mask & ~sub);
    }
    memo.emplace(key, ok);
    return ok;
  };
  return rec(rec, 0, full);
}

bool is_maximal_generator(const Rational& a, const Rational& b, long q) {
  if (q < 1) throw InvalidDomain("q must be positive");
  const ToricDomain dom = ToricDomain::ellipsoid(a, b);
  std::vector<PerturbedScalar> cap(q + 1);
  for (long s = 1; s <= q; ++s) cap[s] = gh_capacity(dom, s);
  // A word A_{q1}⊙...⊙A_{qm} has degree −2(Σ(q_s+1)); index sizes by n = Σ(q_s+1).
  const long target = q + 1;
  std::vector<std::optional<PerturbedScalar>> any(target + 1), multi(target + 1);
  for (long n = 2; n <= target; ++n) {
    for (long s = 1; s + 1 <= n; ++s) {
      long rest = n - (s + 1);
      if (rest == 0) {
        if (!any[n] || *any[n] < cap[s]) any[n] = cap[s];
        continue;
      }
      if (!any[rest]) continue;
      PerturbedScalar v = cap[s] + *any[rest];
      if (!any[n] || *any[n] < v) any[n] = v;
      if (!multi[n] || *multi[n] < v) multi[n] = v;
    }
  }
  return !multi[target] || *multi[target] < cap[q];
}

}  // namespace hsc
