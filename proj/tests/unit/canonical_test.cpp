#include "helpers.hpp"

#include <hsc/canonical.hpp>
#include <hsc/errors.hpp>
#include <hsc/invariants.hpp>
#include <hsc/persistence.hpp>

#include <doctest.h>

using namespace hsc;
using hsc::test::R;

namespace {

Generator a(long i, long j) { return Generator::alpha(i, j); }
Generator b(long i, long j) { return Generator::beta(i, j); }

}  // namespace

TEST_CASE("constants modes parse") {
  CHECK(parse_constants_mode("geometric") == ConstantsMode::Geometric);
  CHECK(parse_constants_mode("ones") == ConstantsMode::AllOnes);
  CHECK(to_string(ConstantsMode::AllOnes) == "ones");
  CHECK_THROWS_AS(parse_constants_mode("unit"), ParseError);
}

TEST_CASE("Ψ¹ and the normalization constants") {
  EllipsoidModel ball(1, 1), skinny(1, 100);
  CHECK(ball.psi1(2) == Element(b(1, 1)));
  for (long q = 1; q <= 100; ++q) CHECK(skinny.psi1(q) == Element(b(q, 0)));
  CHECK(skinny.normalization_constant(5) == 1);
  CHECK(ball.normalization_constant(4) == 1);
  CHECK(ball.normalization_constant(2) == 1);
  CHECK(ball.argmin(4) == LatticePair{2, 2});
  BarElement expected(Word{b(1, 1), b(1, 1)});
  CHECK(ball.psi_hat({2, 2}) == expected);
}

TEST_CASE("Φ¹") {
  EllipsoidModel m(1, 100);
  auto r = m.phi1(3, 2);
  CHECK(r.coeff == 10);
  CHECK(r.target == 5);
  r = m.phi1(4, 1);
  CHECK(r.coeff == 5);
  CHECK(r.target == 5);
  EllipsoidModel e(2, R("7/3"));
  for (long q = 1; q <= 30; ++q) {
    auto p = e.argmin(q);
    auto s = e.phi1(p.i, p.j);
    CHECK(s.target == q);
    CHECK(s.coeff == 1 / e.normalization_constant(q));
  }
  CHECK_THROWS_AS(m.phi1(0, 0), InvalidDomain);
}

TEST_CASE("Φ^k worked examples") {
  EllipsoidModel m(1, 100);
  auto two = m.phi({{1, 1}, {1, 1}});
  CHECK(two.coeff == 10);
  CHECK(two.target == 5);
  auto three = m.phi({{1, 1}, {1, 1}, {1, 1}});
  CHECK(three.coeff == 192);
  CHECK(three.target == 8);
  auto minimal = m.phi({{2, 0}, {2, 0}});
  CHECK(minimal.coeff == 0);
  CHECK(minimal.target == 5);
  CHECK_THROWS_AS(m.phi({}), InvalidDomain);
  CHECK_THROWS_AS(m.phi({{0, 0}}), InvalidDomain);
}

TEST_CASE("memo keys") {
  std::vector<LatticePair> in{{3, 1}, {0, 2}, {3, 1}};
  auto key = EllipsoidModel::encode(in);
  CHECK(key == EllipsoidModel::encode({{0, 2}, {3, 1}, {3, 1}}));
  CHECK(EllipsoidModel::decode(key) == std::vector<LatticePair>{{0, 2}, {3, 1}, {3, 1}});
  CHECK(EllipsoidModel::key_string(key) == "0,2|3,1|3,1");
  CHECK(EllipsoidModel::parse_key("0,2|3,1|3,1") == key);
  CHECK_THROWS_AS(EllipsoidModel::parse_key("0;2"), ParseError);
  CHECK_THROWS_AS(EllipsoidModel::encode({{300, 1}}), InvalidDomain);
}

TEST_CASE("Φ̂ on bar elements") {
  EllipsoidModel m(1, 100);
  CanElement image = m.phi_hat(BarElement(Word{b(1, 1), b(1, 1)}));
  CHECK(image == CanElement{{{5}, Rational(10)}, {{2, 2}, Rational(4)}});
  CHECK(m.phi_hat(BarElement(Word{a(1, 1), b(1, 0)})).empty());
  CHECK(m.phi_hat(BarElement(Word{a(2, 1)})).empty());
  EllipsoidModel ball(1, 1);
  CHECK(ball.phi_hat(ball.psi_hat({1, 2, 2})) == CanElement{{{1, 2, 2}, Rational(1)}});
  CHECK(can_degree({2, 2}) == -12);
}

TEST_CASE("action-minimal reduction") {
  auto cube = ToricDomain::polydisk(1, 1);
  BarElement x(Word{b(1, 0), b(1, 0), b(1, 0), b(0, 1)});
  CHECK(am_reduce(cube, x).coeff(Word{b(7, 0)}) == 42);
  BarElement minimal(Word{b(1, 0), b(2, 0)}, 3);
  CHECK(am_reduce(cube, minimal) == minimal);
  CHECK(am_reduce(ToricDomain::ellipsoid(1, 100), BarElement(Word{b(1, 1)})) == BarElement(Word{b(2, 0)}, 2));
  CHECK_THROWS_AS(am_reduce(cube, BarElement(Word{a(1, 1), b(1, 0)})), InvalidDomain);
}

TEST_CASE("homotopy h¹") {
  EllipsoidModel m(1, R("5/2"));
  for (long i = 1; i <= 5; ++i)
    for (long j = 1; j <= 5; ++j) CHECK(m.homotopy_h1(Element(a(i, j))).zero());
  for (long q = 1; q <= 12; ++q) {
    auto p = m.argmin(q);
    CHECK(m.homotopy_h1(Element(b(p.i, p.j))).zero());
  }
  Element x = Element(b(3, 2), 2) + Element(a(1, 4), -1);
  Element lhs = m.homotopy_h1(differential(x)) + differential(m.homotopy_h1(x));
  Element psi_phi;
  auto r = m.phi1(3, 2);
  psi_phi = m.psi1(r.target);
  psi_phi *= 2 * r.coeff;
  CHECK(lhs == x - psi_phi);
}

TEST_CASE("constants switch leaves structure coefficients unchanged") {
  EllipsoidModel geo(1, R("19/2")), ones(1, R("19/2"), ConstantsMode::AllOnes);
  CHECK(geo.phi({{1, 1}, {1, 1}, {1, 1}}).coeff == ones.phi({{1, 1}, {1, 1}, {1, 1}}).coeff);
  CHECK(s_d(5, R("14"), ConstantsMode::AllOnes) == 217);
}
