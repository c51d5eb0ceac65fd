#include <doctest.h>

#include "parahoric/spectral.hpp"

using namespace parahoric;

namespace {

// s^e in the torus variables with nvars = rank + 1
MPoly mono(int rank, const IVec& e, const Rational& c = 1) {
  MPoly::Exps x(rank + 1, 0);
  for (int i = 0; i < rank; ++i) x[i + 1] = e[i];
  return MPoly::monomial(rank + 1, c, x);
}

MPoly trace(const SymMatrix& m) {
  MPoly t(m[0][0].nvars());
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

TEST_CASE("dimension of J-fixed vectors") {
  AffineWeyl a2(RootDatum::build("A2"));
  CHECK(jfixedDimension(a2, 0) == 6);
  CHECK(jfixedDimension(a2, a2.hyperspecial()) == 1);
  CHECK(jfixedDimension(a2, 0b001) == 3);
  AffineWeyl c2(RootDatum::build("C2"));
  CHECK(jfixedDimension(c2, 0b010) == 4);
  // {s0, s1} is the second special vertex: its finite image is all of W
  CHECK(jfixedDimension(c2, 0b011) == 1);
  CHECK(jfixedDimension(c2, 0b101) == 2);
  HeckeAlgebra H(c2);
  BernsteinCalculus B(H);
  PrincipalSeriesModel m(B);
  for (Mask J : c2.properParahorics()) {
    CAPTURE(J);
    DimensionCheck dc = jfixedDimensionCheck(m, J);
    CHECK(dc.ok());
    CHECK(dc.cosets == jfixedDimension(c2, J));
  }
}

TEST_CASE("principal series in rank one") {
  AffineWeyl a1(RootDatum::build("A1"));
  HeckeAlgebra H(a1);
  BernsteinCalculus B(H);
  PrincipalSeriesModel m(B);
  CHECK(m.dimension() == 2);
  CHECK(m.act(H.one()) == m.identity());
  // trace of theta_a is the W-symmetrized character
  CHECK(trace(m.act(H.theta({1}))) == mono(1, {1}) + mono(1, {-1}));
  CHECK(trace(m.act(H.theta({2}))) == mono(1, {2}) + mono(1, {-2}));
  CentralElement z = CentralElement::orbitSum(a1.datum(), {1});
  for (Mask J : {0u, 0b01u, 0b10u}) {
    CAPTURE(J);
    for (auto route : {ScalarRoute::Bernstein, ScalarRoute::HeckeBasis}) {
      ScalarResult r = centralScalar(m, z, J, route);
      CHECK(r.ok());
      CHECK(r.value == mono(1, {1}) + mono(1, {-1}));
    }
  }
  CHECK(m.rankAtPoint(m.act(H.bernsteinFunction({1}))) == 2);
}

TEST_CASE("closed form and inversion") {
  RootDatum a2 = RootDatum::build("A2");
  CentralElement z = CentralElement::orbitSum(a2, {1, 0});
  MPoly f = closedFormScalar(z, 2);
  CHECK(f == mono(2, {-1, 0}) + mono(2, {1, -1}) + mono(2, {0, 1}));
  CHECK(isWeylInvariant(f, a2));
  CHECK_FALSE(isWeylInvariant(mono(2, {1, 0}), a2));
  auto back = inverseFromScalar(f, 2);
  REQUIRE(back);
  CHECK(*back == z);
  CHECK(substituteLattice(mono(2, {1, 0}), IMat{{0, 1}, {1, 0}}) == mono(2, {0, 1}));
  // at v = s_i = 1 the closed form counts the orbit
  CHECK(f.evaluate({Rational(1), Rational(1), Rational(1)}) == 3);
}

TEST_CASE("fourier transform") {
  AffineWeyl a1(RootDatum::build("A1"));
  CentralElement z1 = CentralElement::orbitSum(a1.datum(), {1});
  CHECK(fourierTransform(a1, z1, 0) == mono(1, {1}, 2) + mono(1, {-1}, 2));
  CHECK(fourierTransform(a1, z1, a1.hyperspecial()) == mono(1, {1}) + mono(1, {-1}));
  CentralElement z2 = CentralElement::orbitSum(a1.datum(), {2});
  CentralElement sum = z1;
  sum += z2;
  CHECK(fourierRank(a1, {z1, z2, sum}, 0) == 2);
}

TEST_CASE("constant term to a Levi") {
  RootDatum a2 = RootDatum::build("A2");
  CentralElement z = CentralElement::orbitSum(a2, {1, 0});
  auto dec = constantTermSpectral(a2, z, 0b010);
  REQUIRE(dec);
  // W_M-orbits {(1,0), (-1,1)} and {(0,-1)}
  CHECK(dec->orbitCoordinates.size() == 2);
  CHECK(dec->orbitCoordinates.count({1, 0}) == 1);
  CHECK(dec->orbitCoordinates.count({0, -1}) == 1);
  for (const auto& [k, c] : dec->orbitCoordinates) CHECK(c == Laurent(1));
  CHECK(levelOrbitSum(a2, {1, 0}, 0b010).coeffs.size() == 2);
  CentralElement nonInvariant = CentralElement::point({1, 0});
  CHECK_FALSE(constantTermSpectral(a2, nonInvariant, 0b010));
}

TEST_CASE("unramified characters") {
  auto c = UnramifiedCharacter::parse("s1=2, s2=1/4, v=3", 2);
  CHECK_FALSE(c.symbolic);
  CHECK(c.v == doctest::Approx(3));
  CHECK(std::abs(c.value({2, 1}) - std::complex<double>(1.0, 0)) < 1e-12);
  auto u = UnramifiedCharacter::parse("s1=cis:0.5", 1);
  CHECK(std::abs(std::abs(u.value({7})) - 1.0) < 1e-12);
  CHECK(UnramifiedCharacter::parse("symbolic", 2).symbolic);
  CHECK_THROWS_AS(UnramifiedCharacter::parse("s1", 1), std::invalid_argument);
  CHECK_THROWS_AS(UnramifiedCharacter::numeric({0.0}, 2.0), std::invalid_argument);
}
