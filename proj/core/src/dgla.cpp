#include "hsc/dgla.hpp"

#include "hsc/errors.hpp"

#include <algorithm>
#include <functional>

namespace hsc {

Generator Generator::alpha(long i, long j) {
  if (i < 1 || j < 1) throw InvalidDomain("alpha generator needs i, j >= 1");
  return {Family::Alpha, i, j};
}

Generator Generator::beta(long i, long j) {
  if (i < 0 || j < 0 || (i == 0 && j == 0)) throw InvalidDomain("beta generator needs (i,j) != (0,0), i, j >= 0");
  return {Family::Beta, i, j};
}

std::string to_string(const Generator& g) {
  return std::string(g.family == Family::Alpha ? "a:" : "b:") + std::to_string(g.i) + "," + std::to_string(g.j);
}

Generator parse_generator(std::string_view s) {
  if (s.size() < 3 || s[1] != ':' || (s[0] != 'a' && s[0] != 'b'))
    throw ParseError("generator literal must look like a:i,j or b:i,j, got '" + std::string(s) + "'");
  auto body = s.substr(2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("generator literal needs i,j: '" + std::string(s) + "'");
  Rational i = parse_rational(body.substr(0, comma));
  Rational j = parse_rational(body.substr(comma + 1));
  if (i.get_den() != 1 || j.get_den() != 1 || !i.get_num().fits_slong_p() || !j.get_num().fits_slong_p())
    throw ParseError("generator indices must be integers: '" + std::string(s) + "'");
  long ii = i.get_num().get_si(), jj = j.get_num().get_si();
  try {
    return s[0] == 'a' ? Generator::alpha(ii, jj) : Generator::beta(ii, jj);
  } catch (const InvalidDomain& e) {
    throw ParseError(e.what());
  }
}

PerturbedScalar action_of_generator(const ToricDomain& d, const Generator& g) { return dual_norm(d, g.i, g.j); }

void Element::add(const Generator& g, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

Rational Element::coeff(const Generator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

std::string term_string(const Rational& c, const std::string& body, bool first) {
  std::string s;
  if (c < 0)
    s += first ? "-" : " - ";
  else if (!first)
    s += " + ";
  Rational m = abs(c);
  if (m != 1) s += to_string(m) + "*";
  return s + body;
}

}  // namespace

std::string to_string(const Element& e) {
  if (e.zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : e.terms()) {
    s += term_string(c, to_string(g), first);
    first = false;
  }
  return s;
}

Element differential(const Generator& g) {
  Element out;
  if (g.family == Family::Beta) return out;
  // ∂α_{i,j} = j β_{i-1,j} - i β_{i,j-1}; both targets are nonzero since i, j >= 1.
  out.add(Generator::beta(g.i - 1, g.j), Rational(g.j));
  out.add(Generator::beta(g.i, g.j - 1), Rational(-g.i));
  return out;
}

Element differential(const Element& x) {
  Element out;
  for (const auto& [g, c] : x.terms()) out += c * differential(g);
  return out;
}

Element bracket(const Generator& x, const Generator& y) {
  Element out;
  if (x.family == Family::Beta && y.family == Family::Beta) return out;
  long coeff = x.i * y.j - x.j * y.i;
  if (x.family == Family::Alpha && y.family == Family::Alpha) {
    out.add(Generator::alpha(x.i + y.i, x.j + y.j), Rational(coeff));
    return out;
  }
  // [α,β] = [β,α] with the coefficient read from the α entry first.
  const Generator& a = x.family == Family::Alpha ? x : y;
  const Generator& b = x.family == Family::Alpha ? y : x;
  out.add(Generator::beta(a.i + b.i, a.j + b.j), Rational(a.i * b.j - a.j * b.i));
  return out;
}

Element bracket(const Element& x, const Element& y) {
  Element out;
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, d] : y.terms()) out += (c * d) * bracket(g, h);
  return out;
}

Rational barred_scale(const Generator& g) {
  if (g.family == Family::Alpha) return Rational(factorial(g.i - 1) * factorial(g.j - 1));
  return Rational(factorial(g.i) * factorial(g.j));
}

Element to_barred(const Element& x) {
  Element out;
  for (const auto& [g, c] : x.terms()) out.add(g, c / barred_scale(g));
  return out;
}

Element from_barred(const Element& x) {
  Element out;
  for (const auto& [g, c] : x.terms()) out.add(g, c * barred_scale(g));
  return out;
}

long word_degree(const Word& w) {
  long d = 0;
  for (const auto& g : w) d += g.degree();
  return d;
}

long word_weight(const Word& w) {
  long s = 0;
  for (const auto& g : w) s += g.weight();
  return s;
}

PerturbedScalar word_action(const ToricDomain& d, const Word& w) {
  PerturbedScalar s;
  for (const auto& g : w) s += action_of_generator(d, g);
  return s;
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += to_string(w[k]);
  }
  return s;
}

Word parse_word(std::string_view literal) {
  Word w;
  std::size_t start = 0;
  while (true) {
    auto pos = literal.find('*', start);
    w.push_back(parse_generator(literal.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return w;
}

std::optional<int> canonicalize(Word& w) {
  int sign = 1;
  // Insertion sort; every transposition of two odd factors flips the sign.
  for (std::size_t k = 1; k < w.size(); ++k) {
    for (std::size_t m = k; m > 0 && w[m] < w[m - 1]; --m) {
      if (w[m].odd() && w[m - 1].odd()) sign = -sign;
      std::swap(w[m], w[m - 1]);
    }
  }
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k].odd() && w[k] == w[k - 1]) return std::nullopt;
  return sign;
}

void BarElement::add(Word w, const Rational& c) {
  if (c == 0) return;
  auto sign = canonicalize(w);
  if (!sign) return;
  add_canonical(w, *sign > 0 ? c : Rational(-c));
}

void BarElement::add_canonical(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BarElement& BarElement::operator+=(const BarElement& o) {
  for (const auto& [w, c] : o.terms_) add_canonical(w, c);
  return *this;
}

BarElement& BarElement::operator-=(const BarElement& o) {
  for (const auto& [w, c] : o.terms_) add_canonical(w, -c);
  return *this;
}

BarElement& BarElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Rational BarElement::coeff(const Word& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string to_string(const BarElement& x) {
  if (x.zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    s += term_string(c, to_string(w), first);
    first = false;
  }
  return s;
}

std::optional<PerturbedScalar> bar_action(const ToricDomain& d, const BarElement& x) {
  std::optional<PerturbedScalar> best;
  for (const auto& [w, c] : x.terms()) {
    auto a = word_action(d, w);
    if (!best || *best < a) best = a;
  }
  return best;
}

BarElement bar_differential(const Word& w) {
  BarElement out;
  const std::size_t n = w.size();
  // Parity of the degree sum of the factors before each position.
  std::vector<int> prefix(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] ^ (w[k].odd() ? 1 : 0);

  for (std::size_t p = 0; p < n; ++p) {
    Element d = differential(w[p]);
    if (d.zero()) continue;
    bool neg = w[p].odd() && prefix[p];
    Word rest;
    rest.reserve(n);
    rest.push_back(w[p]);
    for (std::size_t k = 0; k < n; ++k)
      if (k != p) rest.push_back(w[k]);
    for (const auto& [g, c] : d.terms()) {
      rest[0] = g;
      out.add(rest, neg ? Rational(-c) : c);
    }
  }

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      Element br = bracket(w[p], w[q]);
      if (br.zero()) continue;
      // Move w[p] to the front, then w[q] right behind it.
      int before_q = prefix[q] ^ (w[p].odd() ? 1 : 0);
      bool neg = (w[p].odd() && prefix[p]) ^ (w[q].odd() && before_q);
      Word rest;
      rest.reserve(n - 1);
      rest.push_back(w[p]);
      for (std::size_t k = 0; k < n; ++k)
        if (k != p && k != q) rest.push_back(w[k]);
      for (const auto& [g, c] : br.terms()) {
        rest[0] = g;
        out.add(rest, neg ? Rational(-c) : c);
      }
    }
  }
  return out;
}

BarElement bar_differential(const BarElement& x) {
  BarElement out;
  for (const auto& [w, c] : x.terms()) {
    BarElement d = bar_differential(w);
    d *= c;
    out += d;
  }
  return out;
}

Truncation required_truncation(long degree) {
  if (degree > -4) return {0, 0};
  return {(-degree) / 4, (-degree - 2) / 2};
}

Truncation required_truncation_around(long degree) {
  Truncation t{0, 0};
  for (long d = degree - 1; d <= degree + 1; ++d) {
    Truncation r = required_truncation(d);
    t.max_length = std::max(t.max_length, r.max_length);
    t.max_weight = std::max(t.max_weight, r.max_weight);
  }
  return t;
}

void check_truncation(const Truncation& t, long degree) {
  Truncation need = required_truncation_around(degree);
  if (t.max_length < need.max_length || t.max_weight < need.max_weight)
    throw TruncationTooSmall("degree " + std::to_string(degree) + " needs max length >= " +
                             std::to_string(need.max_length) + " and max weight >= " +
                             std::to_string(need.max_weight));
}

std::vector<Word> words_of_degree(long degree, long max_length) {
  std::vector<Word> out;
  if (degree > -4 || max_length < 1) return out;
  // All generators of degree >= `degree`, in canonical order.
  std::vector<Generator> gens;
  const long max_w = (-degree - 1) / 2;
  for (long w = 1; w <= max_w; ++w)
    for (long i = 1; i < w; ++i)
      if (-1 - 2 * w >= degree) gens.push_back({Family::Alpha, i, w - i});
  for (long w = 1; w <= max_w; ++w)
    for (long i = 0; i <= w; ++i)
      if (-2 - 2 * w >= degree) gens.push_back({Family::Beta, i, w - i});
  std::sort(gens.begin(), gens.end());

  Word cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t start, long remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<long>(cur.size()) >= max_length || remaining > -4) return;
    for (std::size_t k = start; k < gens.size(); ++k) {
      const Generator& g = gens[k];
      long r = remaining - g.degree();
      if (r > 0) continue;
      if (r != 0 && r > -4) continue;
      cur.push_back(g);
      rec(g.odd() ? k + 1 : k, r);
      cur.pop_back();
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hsc
