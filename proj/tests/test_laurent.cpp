#include <doctest.h>

#include "parahoric/intmat.hpp"
#include "parahoric/laurent.hpp"
#include "parahoric/mpoly.hpp"

using namespace parahoric;

TEST_CASE("laurent arithmetic") {
  Laurent a = Laurent::v(1) + Laurent(1);   // v + 1
  Laurent b = Laurent::v(-1) - Laurent(1);  // v^-1 - 1
  Laurent p = a * b;                        // 1 - v + v^-1 - 1 = v^-1 - v
  CHECK(p == Laurent::v(-1) - Laurent::v(1));
  CHECK(p.minDegree() == -1);
  CHECK(p.maxDegree() == 1);
  CHECK((a - a).isZero());
  CHECK(Laurent::q(2) == Laurent::v(4));
  CHECK(Laurent(3).isConstant());
}

TEST_CASE("laurent exact division") {
  Laurent q = Laurent::q();
  Laurent num = q * q - Laurent(1);
  auto quo = num.divideExact(q - Laurent(1));
  REQUIRE(quo);
  CHECK(*quo == q + Laurent(1));
  CHECK_FALSE(Laurent(1).divideExact(q + Laurent(1)));
  CHECK(*Laurent::v(-3).divideExact(Laurent::v(2)) == Laurent::v(-5));
}

TEST_CASE("laurent serialization round trip") {
  Laurent a = Laurent::monomial(Rational(-3, 7), -4) + Laurent::monomial(2, 5);
  CHECK(a.serialize() == "-3/7:-4,2:5");
  CHECK(Laurent::parse(a.serialize()) == a);
  CHECK(Laurent().serialize() == "0");
  CHECK(Laurent::parse("0").isZero());
  CHECK_THROWS(Laurent::parse("1:x"));
}

TEST_CASE("laurent evaluation") {
  Laurent a = Laurent::v(2) - Laurent::v(-1);
  CHECK(a.evaluate(Rational(2)) == Rational(7, 2));
  CHECK(a.evaluate(2.0) == doctest::Approx(3.5));
}

TEST_CASE("rational parsing") {
  CHECK(parseRational("-6/4") == Rational(-3, 2));
  CHECK(formatRational(Rational(4, 2)) == "2");
}

TEST_CASE("mpoly arithmetic and division") {
  MPoly s1 = MPoly::monomial(3, 1, {0, 1, 0});
  MPoly s2 = MPoly::monomial(3, 1, {0, 0, 1});
  MPoly one(3, 1);
  MPoly f = (s1 + s2) * (s1 - s2);
  CHECK(f == s1 * s1 - s2 * s2);
  auto g = f.divideExact(s1 + s2);
  REQUIRE(g);
  CHECK(*g == s1 - s2);
  CHECK_FALSE((s1 + one).divideExact(s2 + one));
  MPoly lv = MPoly::fromLaurent(3, Laurent::v(2) + Laurent(1));
  auto parts = (lv * s1).splitByTorus();
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->second == Laurent::v(2) + Laurent(1));
  CHECK(f.evaluate({Rational(1), Rational(3), Rational(1, 2)}) == Rational(35, 4));
}

TEST_CASE("integer matrices") {
  IMat a{{2, -1}, {-1, 2}};
  CHECK(determinant(a) == 3);
  auto snf = smithNormalForm(a);
  CHECK(snf.rank == 2);
  CHECK(snf.invariants == std::vector<long long>{1, 3});
  IMat b{{1, 1, 0}, {0, 1, 1}};
  auto ker = integerKernel(b);
  REQUIRE(ker.size() == 1);
  CHECK(matVec(b, ker[0]) == IVec{0, 0});
  CHECK((ker[0] == IVec{1, -1, 1} || ker[0] == IVec{-1, 1, -1}));
  CHECK(parseVec(formatVec({3, -2})) == IVec{3, -2});
  QMat q{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK(solveQ(q, {Rational(3), Rational(2)}) == QVec{Rational(1), Rational(1)});
}
