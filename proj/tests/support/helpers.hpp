#pragma once

#include <hsc/rational.hpp>
#include <hsc/toric.hpp>

#include <string>

namespace hsc::test {

inline Rational R(const char* s) { return parse_rational(s); }
inline PerturbedScalar PS(const char* base, long delta = 0) { return {parse_rational(base), delta}; }

}  // namespace hsc::test
