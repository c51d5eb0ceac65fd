#include <doctest.h>

#include "parahoric/basechange.hpp"

using namespace parahoric;

namespace {

CentralElement orbit(const RootDatum& d, const IVec& mu) { return CentralElement::orbitSum(d, mu); }

}  // namespace

TEST_CASE("split base change multiplies cocharacters by r") {
  for (int r : {1, 2, 3}) {
    CAPTURE(r);
    RootDatum a2 = RootDatum::build("A2");
    BaseChangeContext ctx(a2, DiagramAutomorphism::build(a2, "id", r));
    CHECK(ctx.split());
    CHECK(ctx.normCochar({1, -2}) == IVec{r, -2 * r});
    CHECK(ctx.baseChange(orbit(a2, {1, 0})) == orbit(a2, {r, 0}));
    CHECK(ctx.baseChange(orbit(a2, {0, 0})) == orbit(a2, {0, 0}));
  }
}

TEST_CASE("unitary base change in rank two") {
  RootDatum a2 = RootDatum::build("A2");
  BaseChangeContext ctx(a2, DiagramAutomorphism::build(a2, "flip", 2));
  CHECK_FALSE(ctx.split());
  CHECK(ctx.fixedRank() == 1);
  CHECK(ctx.normCochar({1, 0}) == IVec{1, 1});
  CHECK(ctx.normCochar({1, -1}) == IVec{0, 0});
  // W(1,0) = {(1,0), (-1,1), (0,-1)} pushes forward to (1,1), (0,0), (-1,-1)
  CentralElement b = ctx.baseChange(orbit(a2, {1, 0}));
  CentralElement expect;
  for (const IVec& x : {IVec{1, 1}, IVec{0, 0}, IVec{-1, -1}}) expect.coeffs[x] = Laurent(1);
  CHECK(b == expect);
  auto coords = ctx.relativeOrbitCoordinates(b);
  REQUIRE(coords);
  CHECK(coords->size() == 2);
  CHECK(coords->at({1, 1}) == Laurent(1));
  CHECK(coords->at({0, 0}) == Laurent(1));
  CHECK(ctx.relativeOrbit({1, 1}).size() == 2);
  CHECK_FALSE(ctx.normInvariants(CentralElement::point({1, 0})));
}

TEST_CASE("dual norm and scalars") {
  for (const char* t : {"A2", "A3", "GL3"}) {
    std::string label = t;
    CAPTURE(label);
    RootDatum d = RootDatum::build(t);
    BaseChangeContext ctx(d, DiagramAutomorphism::build(d, "flip", 2));
    CHECK(static_cast<int>(ctx.dualNorm().size()) == d.rank());
    for (const auto& mu : d.dominantUpTo(2)) {
      CentralElement phi = orbit(d, mu);
      CHECK(ctx.fSideScalar(ctx.baseChange(phi)) == ctx.eSideScalarAtNorm(phi));
    }
    IVec nu(d.rank(), 0);
    nu[0] = 2;
    CHECK(ctx.fixedCoordinates(ctx.normCochar(nu)).size() == static_cast<size_t>(ctx.fixedRank()));
  }
}

TEST_CASE("coset counts on both sides") {
  RootDatum a2 = RootDatum::build("A2");
  AffineWeyl aw(a2);
  BaseChangeContext ctx(aw.datum(), DiagramAutomorphism::build(aw.datum(), "flip", 2));
  CHECK(ctx.eSideCosets(aw, 0) == 6);
  CHECK(ctx.fSideCosets(aw, 0) == 2);
  CHECK(ctx.thetaFixedCosets(aw, 0) == 2);
  CHECK(ctx.eSideCosets(aw, aw.hyperspecial()) == 1);
  CHECK(ctx.fSideCosets(aw, aw.hyperspecial()) == 1);
}

TEST_CASE("compatibility checks") {
  struct Case {
    const char* type;
    const char* theta;
    int r;
  };
  for (const Case& c : {Case{"A1", "id", 2}, Case{"A2", "id", 3}, Case{"A2", "flip", 2}, Case{"C2", "id", 2}}) {
    std::string label = std::string(c.type) + " " + c.theta + " r=" + std::to_string(c.r);
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(c.type));
    const RootDatum& d = aw.datum();
    BaseChangeContext ctx(d, DiagramAutomorphism::build(d, c.theta, c.r));
    HeckeAlgebra H(aw);
    BernsteinCalculus B(H);
    PrincipalSeriesModel m(B);
    IVec mu = d.dominantUpTo(1).back();
    CentralElement phi = orbit(d, mu);
    CentralElement psi = orbit(d, d.dominantUpTo(2).back());
    CHECK(verifySpectralCharacterization(ctx, aw, phi, 0).ok);
    CHECK(verifyBcChangeParahoric(ctx, m, phi, 0, aw.hyperspecial()).ok);
    CHECK(verifyBcHomomorphism(ctx, phi, psi, &H).ok);
    for (Mask M = 0; M <= d.simpleMask(); M += 2)
      if (isThetaStableMask(ctx.theta(), M)) CHECK(verifyBcConstantTerm(ctx, phi, M).ok);
    for (int w : ctx.relative().relativeWeyl) CHECK(verifyBcWConjugation(ctx, aw, phi, w, 0).ok);
    if (ctx.split()) CHECK(verifySplitBaseChange(ctx, H, mu, aw.hyperspecial()).ok);
  }
}
