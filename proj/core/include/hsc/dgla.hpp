#pragma once

#include "hsc/rational.hpp"
#include "hsc/toric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsc {

enum class Family { Alpha, Beta };

struct Generator {
  Family family = Family::Beta;
  long i = 0;
  long j = 0;

  static Generator alpha(long i, long j);
  static Generator beta(long i, long j);

  long weight() const { return i + j; }
  long degree() const { return family == Family::Alpha ? -1 - 2 * (i + j) : -2 - 2 * (i + j); }
  bool odd() const { return family == Family::Alpha; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string to_string(const Generator& g);
Generator parse_generator(std::string_view literal);

PerturbedScalar action_of_generator(const ToricDomain& d, const Generator& g);

// Finite Q-linear combination of generators; zero coefficients are never stored.
class Element {
 public:
  Element() = default;
  Element(const Generator& g, const Rational& c = 1) { add(g, c); }

  void add(const Generator& g, const Rational& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element l, const Element& r) { return l += r; }
  friend Element operator-(Element l, const Element& r) { return l -= r; }
  friend Element operator*(const Rational& c, Element e) { return e *= c; }

  Rational coeff(const Generator& g) const;
  bool zero() const { return terms_.empty(); }
  const std::map<Generator, Rational>& terms() const { return terms_; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<Generator, Rational> terms_;
};

std::string to_string(const Element& e);

Element differential(const Element& x);
Element bracket(const Element& x, const Element& y);
Element differential(const Generator& g);
Element bracket(const Generator& x, const Generator& y);

// Barred basis: ᾱ_{i,j} = (i-1)!(j-1)! α_{i,j}, β̄_{i,j} = i!j! β_{i,j}.
Rational barred_scale(const Generator& g);
// Coordinates of x in the barred basis, keyed by the underlying generator.
Element to_barred(const Element& x);
Element from_barred(const Element& x);

// Canonically ordered multiset of generators.
using Word = std::vector<Generator>;

long word_degree(const Word& w);
long word_weight(const Word& w);
PerturbedScalar word_action(const ToricDomain& d, const Word& w);
std::string to_string(const Word& w);
Word parse_word(std::string_view literal);

// Sorts factors into canonical order. Returns the Koszul sign of the reordering,
// or nullopt when a repeated odd factor makes the word vanish.
std::optional<int> canonicalize(Word& w);

class BarElement {
 public:
  BarElement() = default;
  BarElement(Word w, const Rational& c = 1) { add(std::move(w), c); }

  // Canonicalizes w (with its sign) before accumulating.
  void add(Word w, const Rational& c);
  void add_canonical(const Word& w, const Rational& c);
  BarElement& operator+=(const BarElement& o);
  BarElement& operator-=(const BarElement& o);
  BarElement& operator*=(const Rational& c);
  friend BarElement operator+(BarElement l, const BarElement& r) { return l += r; }
  friend BarElement operator-(BarElement l, const BarElement& r) { return l -= r; }

  Rational coeff(const Word& canonical) const;
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  friend bool operator==(const BarElement&, const BarElement&) = default;

 private:
  std::map<Word, Rational> terms_;
};

std::string to_string(const BarElement& x);
// Max action over words with a nonzero coefficient; zero element gives nullopt.
std::optional<PerturbedScalar> bar_action(const ToricDomain& d, const BarElement& x);

BarElement bar_differential(const Word& w);
BarElement bar_differential(const BarElement& x);

// Word-length and weight limits of a truncated bar complex.
struct Truncation {
  long max_length = 0;
  long max_weight = 0;
};

// Smallest truncation under which every word of degree D is present.
Truncation required_truncation(long degree);
// Smallest truncation covering degrees degree-1, degree and degree+1.
Truncation required_truncation_around(long degree);
void check_truncation(const Truncation& t, long degree);

// Every canonical word of the given degree with at most max_length factors
// (max_length = 1 restricts to V itself).
std::vector<Word> words_of_degree(long degree, long max_length);

}  // namespace hsc
