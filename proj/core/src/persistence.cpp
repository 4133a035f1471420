#include "hsc/persistence.hpp"

#include "hsc/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hsc {

namespace {

using SparseVec = std::map<long, Rational>;

void axpy(SparseVec& v, const Rational& c, const SparseVec& w) {
  for (const auto& [k, x] : w) {
    auto [it, inserted] = v.try_emplace(k, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second == 0) v.erase(it);
    }
  }
}

// Column reduction keyed by the largest nonzero row index.
class Reducer {
 public:
  SparseVec reduce(SparseVec v) const {
    while (!v.empty()) {
      auto low = v.rbegin()->first;
      auto it = by_low_.find(low);
      if (it == by_low_.end()) break;
      Rational c = -v.rbegin()->second / it->second.rbegin()->second;
      axpy(v, c, it->second);
    }
    return v;
  }
  // Returns the pivot row of the reduced vector, or -1 if it reduced to zero.
  long insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return -1;
    long low = v.rbegin()->first;
    by_low_.emplace(low, std::move(v));
    return low;
  }
  std::size_t rank() const { return by_low_.size(); }

 private:
  std::unordered_map<long, SparseVec> by_low_;
};

// Degree-homogeneous basis ordered by increasing action, ties by word order.
struct Basis {
  std::vector<Word> words;
  std::vector<PerturbedScalar> actions;
  std::map<Word, long> index;
};

Basis make_basis(const ToricDomain* domain, long degree, long max_length) {
  Basis b;
  auto words = words_of_degree(degree, max_length);
  std::vector<std::pair<PerturbedScalar, Word>> tagged;
  tagged.reserve(words.size());
  for (auto& w : words) tagged.emplace_back(domain ? word_action(*domain, w) : PerturbedScalar{}, std::move(w));
  std::sort(tagged.begin(), tagged.end());
  for (auto& [a, w] : tagged) {
    b.index.emplace(w, static_cast<long>(b.words.size()));
    b.words.push_back(std::move(w));
    b.actions.push_back(std::move(a));
  }
  return b;
}

SparseVec to_sparse(const BarElement& x, const Basis& target) {
  SparseVec v;
  for (const auto& [w, c] : x.terms()) {
    auto it = target.index.find(w);
    if (it == target.index.end())
      throw TruncationTooSmall("word " + to_string(w) + " falls outside the truncated basis");
    v.emplace(it->second, c);
  }
  return v;
}

long max_length_for(Space space, const Truncation& t) { return space == Space::V ? 1 : t.max_length; }

}  // namespace

long homology_rank(Space space, const ToricDomain& domain, long degree, const Truncation& t) {
  check_truncation(t, degree);
  const long len = max_length_for(space, t);
  Basis below = make_basis(nullptr, degree - 1, len);
  Basis here = make_basis(nullptr, degree, len);
  Basis above = make_basis(nullptr, degree + 1, len);
  (void)domain;
  Reducer in, out;
  for (const auto& w : below.words) in.insert(to_sparse(bar_differential(w), here));
  for (const auto& w : here.words) out.insert(to_sparse(bar_differential(w), above));
  return static_cast<long>(here.words.size() - in.rank() - out.rank());
}

Barcode barcode(const ToricDomain& domain, long degree, const Truncation& t) {
  check_truncation(t, degree);
  Basis below = make_basis(&domain, degree - 1, t.max_length);
  Basis here = make_basis(&domain, degree, t.max_length);
  Basis above = make_basis(&domain, degree + 1, t.max_length);

  Barcode bc;
  bc.chain_dim[degree - 1] = static_cast<long>(below.words.size());
  bc.chain_dim[degree] = static_cast<long>(here.words.size());
  bc.chain_dim[degree + 1] = static_cast<long>(above.words.size());

  Reducer in;
  std::set<long> killed;
  for (std::size_t c = 0; c < below.words.size(); ++c) {
    long low = in.insert(to_sparse(bar_differential(below.words[c]), here));
    if (low < 0) continue;
    killed.insert(low);
    ++bc.l[degree];
    ++bc.r[degree - 1];
    if (here.actions[low] < below.actions[c])
      bc.bars.push_back({degree, here.actions[low], below.actions[c]});
  }

  Reducer out;
  for (std::size_t c = 0; c < here.words.size(); ++c) {
    long low = out.insert(to_sparse(bar_differential(here.words[c]), above));
    if (low >= 0) {
      ++bc.r[degree];
      ++bc.l[degree + 1];
      continue;
    }
    if (killed.count(static_cast<long>(c))) continue;
    ++bc.p[degree];
    bc.bars.push_back({degree, here.actions[c], std::nullopt});
  }
  bc.p.try_emplace(degree, 0);
  bc.l.try_emplace(degree, 0);
  bc.r.try_emplace(degree, 0);

  std::stable_sort(bc.bars.begin(), bc.bars.end(), [](const PersistenceBar& x, const PersistenceBar& y) {
    if (x.birth != y.birth) return x.birth < y.birth;
    if (x.death.has_value() != y.death.has_value()) return x.death.has_value();
    return x.death.has_value() && *x.death < *y.death;
  });
  return bc;
}

namespace {

long homogeneous_degree(const BarElement& x) {
  if (x.zero()) throw InvalidDomain("zero element has no degree");
  long d = word_degree(x.terms().begin()->first);
  for (const auto& [w, c] : x.terms())
    if (word_degree(w) != d) throw InvalidDomain("element is not degree-homogeneous");
  return d;
}

SparseVec restrict_from(const SparseVec& v, long cutoff) {
  SparseVec out;
  for (auto it = v.lower_bound(cutoff); it != v.end(); ++it) out.insert(*it);
  return out;
}

}  // namespace

bool is_boundary(const BarElement& x) {
  if (x.zero()) return true;
  long degree = homogeneous_degree(x);
  long len = required_truncation_around(degree).max_length;
  Basis below = make_basis(nullptr, degree - 1, len);
  Basis here = make_basis(nullptr, degree, len);
  Reducer in;
  for (const auto& w : below.words) in.insert(to_sparse(bar_differential(w), here));
  return in.reduce(to_sparse(x, here)).empty();
}

PerturbedScalar class_birth(const ToricDomain& domain, const BarElement& x, const Truncation& t) {
  long degree = homogeneous_degree(x);
  check_truncation(t, degree);
  if (!bar_differential(x).zero()) throw InvalidDomain("element is not a cycle: " + to_string(x));

  Basis below = make_basis(&domain, degree - 1, t.max_length);
  Basis here = make_basis(&domain, degree, t.max_length);
  std::vector<SparseVec> boundaries;
  boundaries.reserve(below.words.size());
  for (const auto& w : below.words) boundaries.push_back(to_sparse(bar_differential(w), here));
  SparseVec target = to_sparse(x, here);

  // cutoff = first basis index whose action exceeds the candidate level.
  auto representable_below = [&](long cutoff) {
    Reducer r;
    for (const auto& b : boundaries) r.insert(restrict_from(b, cutoff));
    return r.reduce(restrict_from(target, cutoff)).empty();
  };

  if (representable_below(0)) throw InvalidDomain("element is a boundary; its class is zero");
  // Candidate levels are the distinct actions; search the smallest feasible one.
  std::vector<long> level_ends;
  for (std::size_t k = 0; k < here.words.size(); ++k)
    if (k + 1 == here.words.size() || here.actions[k] != here.actions[k + 1]) level_ends.push_back(static_cast<long>(k) + 1);
  std::size_t lo = 0, hi = level_ends.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (representable_below(level_ends[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return here.actions[level_ends[lo] - 1];
}

}  // namespace hsc
