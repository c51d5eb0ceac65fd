// Values recomputed here by methods that do not share code paths with the
// library routines they are compared against.
#include <doctest.h>

#include "parahoric/cones.hpp"
#include "parahoric/cosets.hpp"

#include <set>

using namespace parahoric;

namespace {

// Closure of the simple reflections x -> x - <alpha_k, x> alpha_k^vee as matrices.
std::set<IMat> bruteWeyl(const RootDatum& d) {
  const int n = d.rank();
  std::vector<IMat> gens;
  for (int k = 1; k <= d.semisimpleRank(); ++k) {
    IMat s = identityMatrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s[i][j] -= d.coroot(k)[i] * d.alpha(k)[j];
    gens.push_back(s);
  }
  std::set<IMat> seen{identityMatrix(n)};
  std::vector<IMat> frontier{identityMatrix(n)};
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        IMat h = matMul(s, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Number of integers strictly between a and b.
long long between(const Rational& a, const Rational& b) {
  Rational lo = a < b ? a : b, hi = a < b ? b : a;
  mpz_class l, h;
  mpz_fdiv_q(l.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_cdiv_q(h.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  mpz_class c = h - l - 1;
  return c < 0 ? 0 : c.get_si();
}

// Affine root hyperplanes separating a generic alcove point from its image.
long long galleryLength(const AffineWeyl& aw, const AffElem& x) {
  const RootDatum& d = aw.datum();
  QVec p = aw.baseBarycenter();
  QVec xp(d.rank());
  IVec lam = aw.lambda(x);
  const IMat& m = d.weyl().matrix(x.w);
  for (int i = 0; i < d.rank(); ++i) {
    xp[i] = lam[i];
    for (int j = 0; j < d.rank(); ++j) xp[i] += m[i][j] * p[j];
  }
  long long count = 0;
  for (int r : d.positiveRoots()) {
    Rational a = 0, b = 0;
    for (int i = 0; i < d.rank(); ++i) {
      a += d.roots()[r].covector[i] * p[i];
      b += d.roots()[r].covector[i] * xp[i];
    }
    count += between(a, b);
  }
  return count;
}

// Orbits of W_M x pbar(W_J) acting on W by left and right multiplication.
int bruteDoubleCosets(const AffineWeyl& aw, Mask M, Mask J) {
  const WeylGroup& W = aw.datum().weyl();
  std::vector<int> left = aw.datum().parabolicSubgroup(M);
  std::vector<int> right = aw.finiteProjection(J);
  std::vector<bool> done(W.size(), false);
  int count = 0;
  for (int w = 0; w < W.size(); ++w) {
    if (done[w]) continue;
    ++count;
    for (int a : left)
      for (int b : right) done[W.mul(W.mul(a, w), b)] = true;
  }
  return count;
}

IVec someRegular(const RootDatum& d, const BaseChangeContext& ctx) {
  for (int a = 1;; ++a) {
    IVec nu(d.rank(), 0);
    for (int i = 0; i < d.rank(); ++i) nu[i] = a + i;
    if (isThetaRegular(ctx, nu)) return nu;
  }
}

Laurent qInteger(int d) {
  Laurent s;
  for (int i = 0; i < d; ++i) s += Laurent::q(i);
  return s;
}

}  // namespace

TEST_CASE("weyl groups by matrix closure and invariant degrees") {
  struct Case {
    const char* type;
    std::vector<int> degrees;
  };
  const Case cases[] = {{"A1", {2}},       {"A2", {2, 3}},    {"A3", {2, 3, 4}}, {"B2", {2, 4}},
                        {"C2", {2, 4}},    {"G2", {2, 6}},    {"B3", {2, 4, 6}}, {"C3", {2, 4, 6}},
                        {"GL3", {2, 3}},   {"PGL2", {2}}};
  for (const auto& c : cases) {
    std::string label = c.type;
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(c.type));
    const RootDatum& d = aw.datum();
    std::set<IMat> brute = bruteWeyl(d);
    CHECK(static_cast<int>(brute.size()) == d.weyl().size());
    for (int w = 0; w < d.weyl().size(); ++w) CHECK(brute.count(d.weyl().matrix(w)) == 1);
    // Poincare polynomial of W is the product of the q-integers [d_i]
    Laurent p(1);
    for (int deg : c.degrees) p *= qInteger(deg);
    CHECK(aw.poincare(aw.hyperspecial()) == p);
  }
}

TEST_CASE("affine length equals the number of separating hyperplanes") {
  for (const char* t : {"A1", "PGL2", "A2", "C2", "G2", "GL2"}) {
    std::string label = t;
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(t));
    for (const auto& x : aw.ball(4)) CHECK(aw.length(x) == galleryLength(aw, x));
  }
  AffineWeyl a3(RootDatum::build("A3"));
  for (const auto& x : a3.ball(3)) CHECK(a3.length(x) == galleryLength(a3, x));
}

TEST_CASE("double coset counts by orbit partition") {
  for (const char* t : {"A2", "C2", "G2", "A3", "B3"}) {
    std::string label = t;
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(t));
    for (Mask M = 0; M <= aw.datum().simpleMask(); M += 2)
      for (Mask J : aw.properParahorics())
        CHECK(static_cast<int>(pgjRepresentatives(aw, M, J).reps.size()) == bruteDoubleCosets(aw, M, J));
  }
}

TEST_CASE("theta-fixed Weyl elements by matrix commutation") {
  for (const char* t : {"A2", "A3", "GL2", "GL3"}) {
    std::string label = t;
    CAPTURE(label);
    RootDatum d = RootDatum::build(t);
    auto theta = DiagramAutomorphism::build(d, "flip", 2);
    std::set<int> fixed;
    for (int w = 0; w < d.weyl().size(); ++w)
      if (matMul(theta.matrix, d.weyl().matrix(w)) == matMul(d.weyl().matrix(w), theta.matrix)) fixed.insert(w);
    BaseChangeContext ctx(d, theta);
    CHECK(std::set<int>(ctx.relative().relativeWeyl.begin(), ctx.relative().relativeWeyl.end()) == fixed);
    IVec nu = someRegular(d, ctx);
    AtiyahBottResult ab = atiyahBott(ctx, nu);
    CHECK(std::set<int>(ab.fixedPoints.begin(), ab.fixedPoints.end()) == fixed);
  }
}

TEST_CASE("minuscule spherical functions") {
  struct Case {
    const char* type;
    IVec lambda;
    int twoRhoPairing;  // <2 rho, lambda>
  };
  for (const Case& c : {Case{"PGL2", {1}, 1}, Case{"A2", {1, 0}, 2}, Case{"A2", {0, 1}, 2}, Case{"A3", {0, 1, 0}, 4},
                        Case{"C2", {0, 1}, 3}}) {
    std::string label = std::string(c.type) + " " + formatVec(c.lambda);
    CAPTURE(label);
    AffineWeyl aw(RootDatum::build(c.type));
    const RootDatum& d = aw.datum();
    REQUIRE(d.pairing(d.twoRho(), c.lambda) == c.twoRhoPairing);
    HeckeAlgebra H(aw);
    // 1_{K t K} is the sum of T_x over the double coset W t W
    std::set<AffElem> dc;
    AffElem t = aw.translation(c.lambda);
    for (int u = 0; u < d.weyl().size(); ++u)
      for (int w = 0; w < d.weyl().size(); ++w) dc.insert(aw.mul(aw.mul(aw.finite(u), t), aw.finite(w)));
    HeckeElement kk = H.zero();
    for (const auto& x : dc) kk.add(x, Laurent(1));
    CentralElement z = CentralElement::orbitSum(d, c.lambda);
    CHECK(H.toParahoric(z, aw.hyperspecial()) == kk.scaled(Laurent::v(-c.twoRhoPairing)));
  }
}

TEST_CASE("bernstein relation at a minuscule weight") {
  AffineWeyl aw(RootDatum::build("A2"));
  HeckeAlgebra H(aw);
  const RootDatum& d = aw.datum();
  IVec w1{1, 0};
  HeckeElement T1 = H.basis(aw.generator(1)), T2 = H.basis(aw.generator(2));
  Laurent qm1 = Laurent::q() - Laurent(1);
  // <alpha_1, w1> = 1 collapses the divided difference to theta_{w1}
  CHECK(H.multiply(T1, H.theta(w1)) == H.multiply(H.theta(d.reflect(1, w1)), T1) + H.theta(w1).scaled(qm1));
  // <alpha_2, w1> = 0 gives commutation
  CHECK(H.multiply(T2, H.theta(w1)) == H.multiply(H.theta(w1), T2));
}
