#include "hsc/canonical.hpp"

#include "hsc/errors.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <tuple>

namespace hsc {

std::string to_string(ConstantsMode m) { return m == ConstantsMode::Geometric ? "geometric" : "ones"; }

ConstantsMode parse_constants_mode(std::string_view s) {
  if (s == "geometric") return ConstantsMode::Geometric;
  if (s == "ones") return ConstantsMode::AllOnes;
  throw ParseError("constants mode must be 'geometric' or 'ones', got '" + std::string(s) + "'");
}

std::string to_string(const CanWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += "A" + std::to_string(w[k]);
  }
  return s;
}

std::string to_string(const CanElement& x) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    Rational m = abs(c);
    if (m != 1) s += to_string(m) + "*";
    s += to_string(w);
  }
  return s;
}

long can_degree(const CanWord& w) {
  long d = 0;
  for (long q : w) d += canonical_degree(q);
  return d;
}

namespace {

constexpr long kMaxIndex = 255;

inline char16_t pack(long i, long j) {
  if (i < 0 || j < 0 || i > kMaxIndex || j > kMaxIndex)
    throw InvalidDomain("lattice index out of the supported range 0..255");
  return static_cast<char16_t>((i << 8) | j);
}
inline long unpack_i(char16_t p) { return p >> 8; }
inline long unpack_j(char16_t p) { return p & 0xff; }

void insert_sorted(std::u16string& key, char16_t p) {
  key.insert(std::upper_bound(key.begin(), key.end(), p), p);
}

}  // namespace

EllipsoidModel::EllipsoidModel(const Rational& a, const Rational& b, ConstantsMode mode)
    : domain_(ToricDomain::ellipsoid(a, b)), mode_(mode), istar_(1, 0), constants_(1, Rational(1)) {}

void EllipsoidModel::ensure_argmin(long q) {
  while (static_cast<long>(istar_.size()) <= q) {
    long next = static_cast<long>(istar_.size());
    LatticePair p = argmin_pair(domain_, next);
    istar_.push_back(p.i);
    Rational c = 1;
    if (mode_ == ConstantsMode::Geometric) {
      long kappa = orbit_multiplicity(domain_.a, domain_.b, next);
      long g = gcd_long(p.i, p.j);
      c = ratio(g, gcd_long(g, kappa));
    }
    constants_.push_back(c);
  }
}

LatticePair EllipsoidModel::argmin(long q) {
  if (q < 1) throw InvalidDomain("q must be positive");
  ensure_argmin(q);
  return {istar_[q], q - istar_[q]};
}

bool EllipsoidModel::minimal(long i, long j) {
  ensure_argmin(i + j);
  return istar_[i + j] == i;
}

Rational EllipsoidModel::normalization_constant(long q) {
  if (q < 1) throw InvalidDomain("q must be positive");
  ensure_argmin(q);
  return constants_[q];
}

Element EllipsoidModel::psi1(long q) {
  LatticePair p = argmin(q);
  return Element(Generator::beta(p.i, p.j), normalization_constant(q));
}

PhiResult EllipsoidModel::phi1(long i, long j) {
  const long q = i + j;
  if (i < 0 || j < 0 || q == 0) throw InvalidDomain("phi1 needs a nonzero beta index");
  LatticePair s = argmin(q);
  Rational c = ratio(factorial(s.i) * factorial(s.j), factorial(i) * factorial(j));
  c /= normalization_constant(q);
  return {c, q};
}

EllipsoidModel::MemoKey EllipsoidModel::encode(const std::vector<LatticePair>& inputs) {
  MemoKey key;
  key.reserve(inputs.size());
  for (const auto& p : inputs) {
    if (p.i == 0 && p.j == 0) throw InvalidDomain("beta index (0,0) is not a generator");
    key.push_back(pack(p.i, p.j));
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<LatticePair> EllipsoidModel::decode(const MemoKey& key) {
  std::vector<LatticePair> out;
  out.reserve(key.size());
  for (char16_t p : key) out.push_back({unpack_i(p), unpack_j(p)});
  return out;
}

std::string EllipsoidModel::key_string(const MemoKey& key) {
  std::string s;
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (k) s += "|";
    s += std::to_string(unpack_i(key[k])) + "," + std::to_string(unpack_j(key[k]));
  }
  return s;
}

EllipsoidModel::MemoKey EllipsoidModel::parse_key(std::string_view s) {
  std::vector<LatticePair> pairs;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto bar = s.find('|', start);
    auto item = s.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    auto comma = item.find(',');
    if (comma == std::string_view::npos) throw ParseError("bad memo key '" + std::string(s) + "'");
    Rational i = parse_rational(item.substr(0, comma)), j = parse_rational(item.substr(comma + 1));
    pairs.push_back({i.get_num().get_si(), j.get_num().get_si()});
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return encode(pairs);
}

// Recursive evaluation of Φ^k. `choose` returns the position of the input to rewrite
// given the positions of the non-minimal inputs (ascending key order).
template <class Choose>
Rational EllipsoidModel::eval(const MemoKey& key, Memo& memo, Choose& choose) {
  if (key.size() == 1) return phi1(unpack_i(key[0]), unpack_j(key[0])).coeff;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::size_t pos = key.size();
  {
    long top = 0;
    for (char16_t p : key) top = std::max(top, unpack_i(p) + unpack_j(p));
    ensure_argmin(top);
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < key.size(); ++k) {
      long i = unpack_i(key[k]), j = unpack_j(key[k]);
      if (istar_[i + j] != i) candidates.push_back(k);
    }
    if (!candidates.empty()) pos = choose(candidates);
  }
  if (pos == key.size()) {
    memo.emplace(key, Rational(0));
    return Rational(0);
  }

  const long i1 = unpack_i(key[pos]), j1 = unpack_j(key[pos]);
  MemoKey rest = key;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));

  // Both branches come from ℓ̂ of an α⊙β...β primitive; the first rewrites toward
  // larger i, the second toward larger j.
  const bool up = i1 < istar_[i1 + j1];
  Rational acc;
  {
    MemoKey next = rest;
    insert_sorted(next, up ? pack(i1 + 1, j1 - 1) : pack(i1 - 1, j1 + 1));
    acc = Rational(up ? i1 + 1 : j1 + 1) * eval(next, memo, choose);
  }
  for (std::size_t m = 0; m < rest.size(); ++m) {
    if (m > 0 && rest[m] == rest[m - 1]) continue;
    std::size_t mult = 1;
    while (m + mult < rest.size() && rest[m + mult] == rest[m]) ++mult;
    const long im = unpack_i(rest[m]), jm = unpack_j(rest[m]);
    long coeff = up ? (i1 + 1) * jm - j1 * im : i1 * jm - (j1 + 1) * im;
    if (coeff == 0) continue;
    MemoKey next = rest;
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(m));
    insert_sorted(next, up ? pack(i1 + im + 1, j1 + jm) : pack(i1 + im, j1 + jm + 1));
    Rational v = eval(next, memo, choose);
    if (v == 0) continue;
    v *= static_cast<long>(mult) * coeff;
    if (up)
      acc -= v;
    else
      acc += v;
  }
  acc /= Rational(up ? j1 : i1);
  memo.emplace(key, acc);
  return acc;
}

PhiResult EllipsoidModel::phi(const std::vector<LatticePair>& inputs) {
  if (inputs.empty()) throw InvalidDomain("phi needs at least one input");
  MemoKey key = encode(inputs);
  long target = static_cast<long>(inputs.size()) - 1;
  for (const auto& p : inputs) target += p.i + p.j;
  auto largest = [](const std::vector<std::size_t>& c) { return c.back(); };
  return {eval(key, memo_, largest), target};
}

PhiResult EllipsoidModel::phi_random_order(const std::vector<LatticePair>& inputs, std::mt19937_64& rng) {
  if (inputs.empty()) throw InvalidDomain("phi needs at least one input");
  MemoKey key = encode(inputs);
  long target = static_cast<long>(inputs.size()) - 1;
  for (const auto& p : inputs) target += p.i + p.j;
  Memo local;
  auto random_pick = [&rng](const std::vector<std::size_t>& c) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    return c[pick(rng)];
  };
  return {eval(key, local, random_pick), target};
}

CanElement EllipsoidModel::phi_hat(const BarElement& x) {
  CanElement out;
  for (const auto& [w, c] : x.terms()) {
    if (std::any_of(w.begin(), w.end(), [](const Generator& g) { return g.odd(); })) continue;
    const std::size_t n = w.size();
    // Enumerate set partitions of the factor positions via restricted growth strings.
    std::vector<std::size_t> block(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t blocks) {
      if (k == n) {
        std::vector<std::vector<LatticePair>> parts(blocks);
        for (std::size_t m = 0; m < n; ++m) parts[block[m]].push_back({w[m].i, w[m].j});
        Rational coeff = c;
        CanWord word;
        for (const auto& part : parts) {
          PhiResult r = phi(part);
          if (r.coeff == 0) return;
          coeff *= r.coeff;
          word.push_back(r.target);
        }
        std::sort(word.begin(), word.end());
        auto [it, inserted] = out.try_emplace(word, coeff);
        if (!inserted) {
          it->second += coeff;
          if (it->second == 0) out.erase(it);
        }
        return;
      }
      for (std::size_t b = 0; b <= blocks; ++b) {
        block[k] = b;
        rec(k + 1, b == blocks ? blocks + 1 : blocks);
      }
    };
    if (n > 0) rec(0, 0);
  }
  return out;
}

BarElement EllipsoidModel::psi_hat(const CanWord& w) {
  Word word;
  Rational c = 1;
  for (long q : w) {
    LatticePair p = argmin(q);
    word.push_back(Generator::beta(p.i, p.j));
    c *= normalization_constant(q);
  }
  return BarElement(std::move(word), c);
}

Element EllipsoidModel::homotopy_h1(const Element& x) {
  // tel(i,j) = ᾱ_{i+1,j} + ᾱ_{i+2,j-1} + ... + ᾱ_{i+j,1}; ∂tel(i,j) = β̄_{i,j} − β̄_{i+j,0}.
  auto tel = [](long i, long j) {
    Element e;
    for (long t = 0; t < j; ++t) {
      Generator g = Generator::alpha(i + 1 + t, j - t);
      e.add(g, barred_scale(g));
    }
    return e;
  };
  Element out;
  for (const auto& [g, c] : x.terms()) {
    if (g.family == Family::Alpha) continue;
    LatticePair s = argmin(g.i + g.j);
    // h(β̄_{i,j}) = tel(i,j) − tel(argmin); β_{i,j} = β̄_{i,j} / (i! j!).
    Element h = tel(g.i, g.j) - tel(s.i, s.j);
    out += (c / barred_scale(g)) * h;
  }
  return out;
}

BarElement am_reduce(const ToricDomain& domain, const BarElement& x) {
  std::map<long, long> istar;
  auto star = [&](long q) {
    auto it = istar.find(q);
    if (it != istar.end()) return it->second;
    long i = argmin_pair(domain, q).i;
    istar.emplace(q, i);
    return i;
  };
  auto distance = [&](const Word& w) {
    long d = 0;
    for (const auto& g : w) d += std::labs(g.i - star(g.i + g.j));
    return d;
  };

  // Words wait in order of (length, total distance to the argmins); every rewrite
  // strictly lowers that pair, so a word is complete when it reaches the top.
  using Slot = std::tuple<long, long, Word>;
  std::map<Slot, Rational> pending;
  BarElement out;
  auto push = [&](Word w, const Rational& c) {
    if (c == 0) return;
    std::sort(w.begin(), w.end());
    long dist = distance(w);
    if (dist == 0) {
      out.add_canonical(w, c);
      return;
    }
    Slot s{static_cast<long>(w.size()), dist, std::move(w)};
    auto [it, inserted] = pending.try_emplace(std::move(s), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };

  for (const auto& [w, c] : x.terms()) {
    for (const auto& g : w)
      if (g.family != Family::Beta) throw InvalidDomain("am_reduce accepts beta-only words");
    push(w, c);
  }

  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const Word& w = std::get<2>(node.key());
    const Rational c = node.mapped();

    std::size_t pos = w.size();
    for (std::size_t k = w.size(); k-- > 0;)
      if (star(w[k].i + w[k].j) != w[k].i) {
        pos = k;
        break;
      }
    const long i1 = w[pos].i, j1 = w[pos].j;
    const bool up = i1 < star(i1 + j1);
    Word rest;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (k != pos) rest.push_back(w[k]);

    Word moved = rest;
    moved.push_back(up ? Generator::beta(i1 + 1, j1 - 1) : Generator::beta(i1 - 1, j1 + 1));
    push(std::move(moved), c * ratio(up ? i1 + 1 : j1 + 1, up ? j1 : i1));
    for (std::size_t m = 0; m < rest.size(); ++m) {
      const long im = rest[m].i, jm = rest[m].j;
      long coeff = up ? (i1 + 1) * jm - j1 * im : i1 * jm - (j1 + 1) * im;
      if (coeff == 0) continue;
      Word merged;
      for (std::size_t k = 0; k < rest.size(); ++k)
        if (k != m) merged.push_back(rest[k]);
      merged.push_back(up ? Generator::beta(i1 + im + 1, j1 + jm) : Generator::beta(i1 + im, j1 + jm + 1));
      Rational f = c * ratio(coeff, up ? j1 : i1);
      push(std::move(merged), up ? Rational(-f) : f);
    }
  }
  return out;
}

// ---- cache file ----

namespace {

std::string section_of(const EllipsoidModel& m) {
  return domain_literal(m.domain()) + "\t" + to_string(m.mode());
}

// Lines of the file after the header, or empty when missing or from another version.
std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  if (!in) return lines;
  std::string line;
  if (!std::getline(in, line) || line != PhiCache::kHeader) return lines;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(std::move(line));
  return lines;
}

// Splits "domain \t mode \t key \t coeff \t q" at the third tab.
bool split_line(const std::string& line, std::string& section, std::string& rest) {
  std::size_t t1 = line.find('\t');
  if (t1 == std::string::npos) return false;
  std::size_t t2 = line.find('\t', t1 + 1);
  if (t2 == std::string::npos) return false;
  section = line.substr(0, t2);
  rest = line.substr(t2 + 1);
  return true;
}

}  // namespace

std::size_t PhiCache::load_into(EllipsoidModel& model) const {
  const std::string mine = section_of(model);
  std::size_t n = 0;
  for (const auto& line : read_lines(path_)) {
    std::string section, rest;
    if (!split_line(line, section, rest) || section != mine) continue;
    std::istringstream fields(rest);
    std::string key, coeff, q;
    if (!std::getline(fields, key, '\t') || !std::getline(fields, coeff, '\t') || !std::getline(fields, q, '\t'))
      continue;
    try {
      model.memo_insert(EllipsoidModel::parse_key(key), parse_rational(coeff));
      ++n;
    } catch (const Error&) {
      continue;
    }
  }
  return n;
}

void PhiCache::store_from(const EllipsoidModel& model) const {
  const std::string mine = section_of(model);
  std::vector<std::string> kept;
  for (auto& line : read_lines(path_)) {
    std::string section, rest;
    if (split_line(line, section, rest) && section != mine) kept.push_back(std::move(line));
  }
  std::vector<std::pair<std::string, std::string>> entries;
  entries.reserve(model.memo().size());
  for (const auto& [key, value] : model.memo()) {
    long q = static_cast<long>(key.size()) - 1;
    for (const auto& p : EllipsoidModel::decode(key)) q += p.i + p.j;
    entries.emplace_back(EllipsoidModel::key_string(key), to_string(value) + "\t" + std::to_string(q));
  }
  std::sort(entries.begin(), entries.end());

  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << kHeader << "\n";
    for (const auto& line : kept) out << line << "\n";
    for (const auto& [k, v] : entries) out << mine << "\t" << k << "\t" << v << "\n";
    if (!out) throw Error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

std::map<std::string, std::size_t> PhiCache::inspect() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& line : read_lines(path_)) {
    std::string section, rest;
    if (split_line(line, section, rest)) ++counts[section];
  }
  return counts;
}

void PhiCache::clear() const {
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

}  // namespace hsc
