#pragma once

#include "hsc/canonical.hpp"
#include "hsc/rational.hpp"

namespace hsc {

// lhs ⩽ rhs: the factors of rhs split into blocks, one per factor v of lhs, each block
// having total degree |v| and total action at least that of v. Actions are the
// capacities of E(a, b+δ).
bool partial_order_leq(const CanWord& lhs, const CanWord& rhs, const Rational& a, const Rational& b);

// True when no word other than A_q itself dominates A_q in the partial order, i.e. no
// word of A's with the same degree and at least the same action has two or more factors.
bool is_maximal_generator(const Rational& a, const Rational& b, long q);

}  // namespace hsc
