// Randomized properties with small hand-rolled generators; every generator is
// seeded so failures reproduce.
#include <doctest.h>

#include "parahoric/cones.hpp"

#include <random>

using namespace parahoric;

namespace {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational() {
    Rational r(integer(-9, 9), integer(1, 6));
    r.canonicalize();
    return r;
  }
  Laurent laurent() {
    Laurent l;
    for (int i = integer(0, 3); i > 0; --i) l += Laurent::monomial(rational(), integer(-4, 4));
    return l;
  }
  IVec vec(int n, int radius) {
    IVec v(n);
    for (auto& x : v) x = integer(-radius, radius);
    return v;
  }
  QVec qvec(int n) {
    QVec v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[rng() % xs.size()];
  }
  HeckeElement hecke(const HeckeAlgebra& H, const std::vector<AffElem>& pool) {
    HeckeElement h = H.zero();
    for (int i = integer(1, 3); i > 0; --i) h.add(pick(pool), laurent() + Laurent(1));
    return h;
  }
};

}  // namespace

TEST_CASE("laurent ring laws") {
  Gen g(101);
  for (int i = 0; i < 300; ++i) {
    Laurent a = g.laurent(), b = g.laurent(), c = g.laurent();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(Laurent::parse(a.serialize()) == a);
    if (!b.isZero()) {
      auto d = (a * b).divideExact(b);
      REQUIRE(d);
      CHECK(*d == a);
    }
  }
}

TEST_CASE("orbit invariants") {
  Gen g(202);
  for (const char* t : {"A2", "C2", "G2", "A3", "GL3"}) {
    RootDatum d = RootDatum::build(t);
    for (int i = 0; i < 40; ++i) {
      IVec x = g.vec(d.rank(), 4);
      auto orb = d.orbit(x);
      CHECK(d.weyl().size() % static_cast<int>(orb.size()) == 0);
      IVec dom = d.dominantRep(x);
      CHECK(d.isDominant(dom));
      CHECK(std::find(orb.begin(), orb.end(), dom) != orb.end());
      int w = g.integer(0, d.weyl().size() - 1);
      CHECK(d.orbitNorm(d.weyl().act(w, x)) == d.orbitNorm(x));
    }
  }
}

TEST_CASE("affine length laws") {
  Gen g(303);
  for (const char* t : {"A1", "PGL2", "A2", "C2", "G2", "GL2", "A3"}) {
    std::string label = t;
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(t));
    auto pool = aw.ball(3);
    for (int i = 0; i < 200; ++i) {
      const AffElem& x = g.pick(pool);
      const AffElem& y = g.pick(pool);
      CHECK(aw.length(aw.mul(x, y)) <= aw.length(x) + aw.length(y));
      CHECK(aw.length(aw.inverse(x)) == aw.length(x));
      CHECK(aw.mul(x, aw.inverse(x)) == aw.identity());
      int k = g.integer(0, aw.numGenerators() - 1);
      CHECK(std::abs(aw.length(aw.mul(x, aw.generator(k))) - aw.length(x)) == 1);
      CHECK(aw.parseKey(aw.key(x)) == x);
    }
  }
}

TEST_CASE("hecke algebra laws") {
  Gen g(404);
  for (const char* t : {"A2", "C2", "PGL2"}) {
    std::string label = t;
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(t));
    HeckeAlgebra H(aw);
    auto pool = aw.ball(2);
    for (int i = 0; i < 12; ++i) {
      HeckeElement a = g.hecke(H, pool), b = g.hecke(H, pool), c = g.hecke(H, pool);
      CHECK(H.multiply(H.multiply(a, b), c) == H.multiply(a, H.multiply(b, c)));
      CHECK(H.iota(H.multiply(a, b)) == H.multiply(H.iota(b), H.iota(a)));
      CHECK(H.parse(H.serialize(a)) == a);
    }
    const int n = aw.rank();
    for (int i = 0; i < 12; ++i) {
      IVec l1 = g.vec(n, 2), l2 = g.vec(n, 2);
      CHECK(H.multiply(H.theta(l1), H.theta(l2)) == H.theta(add(l1, l2)));
    }
  }
}

TEST_CASE("central elements act by their closed-form scalar") {
  Gen g(505);
  for (const char* t : {"A2", "C2"}) {
    std::string label = t;
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(t));
    const RootDatum& d = aw.datum();
    HeckeAlgebra H(aw);
    BernsteinCalculus B(H);
    PrincipalSeriesModel m(B);
    auto Js = aw.properParahorics();
    for (int i = 0; i < 6; ++i) {
      IVec mu = d.dominantRep(g.vec(d.rank(), 2));
      CentralElement z = CentralElement::orbitSum(d, mu);
      CHECK(H.isCentral(H.fromCentral(z)));
      Mask J = g.pick(Js);
      CHECK(centralScalar(m, z, J).ok());
    }
  }
}

TEST_CASE("base change is a ring homomorphism") {
  Gen g(606);
  struct Case {
    const char* type;
    const char* theta;
    int r;
  };
  for (const Case& c : {Case{"A2", "flip", 2}, Case{"A2", "id", 3}, Case{"GL3", "flip", 4}, Case{"G2", "id", 2}}) {
    std::string label = std::string(c.type) + " " + c.theta;
    CAPTURE(label);
    RootDatum d = RootDatum::build(c.type);
    BaseChangeContext ctx(d, DiagramAutomorphism::build(d, c.theta, c.r));
    for (int i = 0; i < 10; ++i) {
      CentralElement f = CentralElement::orbitSum(d, g.vec(d.rank(), 2)).scaled(g.laurent() + Laurent(2));
      CentralElement h = CentralElement::orbitSum(d, g.vec(d.rank(), 2));
      CHECK(ctx.baseChange(f * h) == ctx.baseChange(f) * ctx.baseChange(h));
      CHECK(ctx.fSideScalar(ctx.baseChange(f)) == ctx.eSideScalarAtNorm(f));
      IVec nu = g.vec(d.rank(), 3);
      CHECK(ctx.isThetaFixed(ctx.normCochar(nu)));
    }
  }
}

TEST_CASE("cone identities at random rational points") {
  Gen g(707);
  for (const char* t : {"A2", "C2", "G2", "A3", "GL2", "B3"}) {
    std::string label = t;
    CAPTURE(label);
    RootDatum d = RootDatum::build(t);
    ConeContext cc(d);
    auto Ps = cc.parabolics();
    for (int i = 0; i < 200; ++i) {
      QVec H = g.qvec(d.rank());
      Mask Q = g.pick(Ps);
      CHECK(cc.arthurSum(Q, H) == (Q == cc.full() ? 1 : 0));
      // the positive chamber lies inside the cone spanned by the simple coroots
      if (cc.tau(0, H)) CHECK(cc.tauHat(0, H));
      QVec once = cc.project(H, Q);
      CHECK(cc.project(once, Q) == once);
    }
  }
}

TEST_CASE("fixed-point values are relative-Weyl symmetric") {
  Gen g(808);
  for (const char* t : {"A2", "A3", "GL3", "C2"}) {
    std::string label = t;
    CAPTURE(label);
    RootDatum d = RootDatum::build(t);
    const char* theta = std::string(t) == "C2" ? "id" : "flip";
    BaseChangeContext ctx(d, DiagramAutomorphism::build(d, theta, 2));
    int tried = 0;
    for (int i = 0; i < 60 && tried < 8; ++i) {
      IVec nu = g.vec(d.rank(), 3);
      if (!isThetaRegular(ctx, nu)) continue;
      ++tried;
      MPoly base = atiyahBott(ctx, nu).value;
      for (int u : ctx.relative().relativeWeyl) {
        MPoly moved = atiyahBott(ctx, d.weyl().act(u, nu)).value;
        CHECK(moved == base);
        CHECK(substituteLattice(base, d.weyl().matrix(u)) == base);
      }
    }
    CHECK(tried > 0);
  }
}
