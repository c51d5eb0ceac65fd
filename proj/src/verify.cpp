#include "parahoric/verify.hpp"

#include "parahoric/basechange.hpp"
#include "parahoric/cones.hpp"
#include "parahoric/cosets.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>

namespace parahoric {

void RunConfig::validate() const {
  if (lengthCutoff <= 0) throw std::invalid_argument("--length-cutoff must be positive");
  if (orbitCutoff <= 0) throw std::invalid_argument("--orbit-cutoff must be positive");
  if (samples <= 0) throw std::invalid_argument("--samples must be positive");
  if (r <= 0) throw std::invalid_argument("--r must be positive");
}

bool VerificationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Accumulates one check; only the first counterexample is kept.
class Tally {
 public:
  Tally(std::string label, std::string statement) {
    rec_.label = std::move(label);
    rec_.statement = std::move(statement);
  }
  void expect(bool cond, const std::function<std::string()>& witness) {
    ++rec_.cases;
    if (cond) return;
    if (rec_.pass) rec_.counterexample = witness();
    rec_.pass = false;
    ++failures_;
  }
  void note(const std::string& s) { rec_.note += (rec_.note.empty() ? "" : "; ") + s; }
  CheckRecord done() {
    if (failures_) note("failures=" + std::to_string(failures_));
    return rec_;
  }

 private:
  CheckRecord rec_;
  long long failures_ = 0;
};

std::string levi(const RootDatum& d, Mask M) {
  if (M == 0) return "B";
  if (M == d.simpleMask()) return "G";
  std::string s;
  for (int k = 1; k <= d.semisimpleRank(); ++k)
    if (hasBit(M, k)) s += (s.empty() ? "alpha" : ",alpha") + std::to_string(k);
  return s;
}

std::vector<Mask> leviMasks(const RootDatum& d) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= d.simpleMask(); m += 2) out.push_back(m);
  return out;
}

std::vector<IVec> box(int n, int radius) {
  std::vector<IVec> out;
  IVec x(n, -radius);
  for (;;) {
    out.push_back(x);
    int i = 0;
    while (i < n && x[i] == radius) x[i++] = -radius;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

IVec someStrictlyDominant(const RootDatum& d) {
  for (int b = 1;; ++b)
    for (const auto& x : d.dominantUpTo(b))
      if (d.isStrictlyDominant(x)) return x;
}

// State shared by the suites of one run.
struct Env {
  const RunConfig& cfg;
  AffineWeyl aw;
  DiagramAutomorphism theta;
  StructureCache* cache;
  std::unique_ptr<HeckeAlgebra> H;
  std::unique_ptr<BernsteinCalculus> B;
  std::unique_ptr<PrincipalSeriesModel> model;
  std::unique_ptr<BaseChangeContext> ctx;

  Env(const RunConfig& c, StructureCache* cache_)
      : cfg(c), aw(RootDatum::build(c.type)), theta(DiagramAutomorphism::build(aw.datum(), c.theta, c.r)),
        cache(cache_) {}

  const RootDatum& datum() const { return aw.datum(); }
  HeckeAlgebra& hecke() {
    if (!H) H = std::make_unique<HeckeAlgebra>(aw, std::vector<int>{}, cache);
    return *H;
  }
  BernsteinCalculus& bernstein() {
    if (!B) B = std::make_unique<BernsteinCalculus>(hecke());
    return *B;
  }
  PrincipalSeriesModel& principal() {
    if (!model) model = std::make_unique<PrincipalSeriesModel>(bernstein());
    return *model;
  }
  BaseChangeContext& bc() {
    if (!ctx) ctx = std::make_unique<BaseChangeContext>(datum(), theta);
    return *ctx;
  }
  std::vector<IVec> mus() const { return datum().dominantUpTo(cfg.orbitCutoff); }
  std::vector<Mask> stableParahorics() const {
    std::vector<Mask> out;
    for (Mask J : aw.properParahorics())
      if (isThetaStableMask(theta, J)) out.push_back(J);
    return out;
  }
};

using Checks = std::vector<CheckRecord>;

// ------------------------------------------------------------------ weyl

void suiteWeyl(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const WeylGroup& W = d.weyl();
  const AffineWeyl& aw = e.aw;
  {
    Tally t("weyl-regular-orbit", "|W| equals the orbit size of a regular vector; the longest element has length |Phi+|");
    IVec reg = someStrictlyDominant(d);
    t.expect(static_cast<int>(d.orbit(reg).size()) == W.size(), [&] { return "regular=" + formatVec(reg); });
    t.expect(W.length(W.longest()) == static_cast<int>(d.positiveRoots().size()), [] { return "longest"; });
    t.note("order=" + std::to_string(W.size()));
    out.push_back(t.done());
  }
  {
    Tally t("weyl-orbit-dominant", "each orbit has one dominant member and its size divides |W|");
    for (const auto& x : box(d.rank(), 2)) {
      auto orb = d.orbit(x);
      int dom = 0;
      for (const auto& y : orb) dom += d.isDominant(y);
      t.expect(dom == 1 && W.size() % static_cast<int>(orb.size()) == 0, [&] { return "lambda=" + formatVec(x); });
    }
    out.push_back(t.done());
  }
  const auto ball = aw.ball(e.cfg.lengthCutoff);
  {
    Tally t("affine-length", "l(x^-1) = l(x), |l(xs) - l(x)| = 1, reduced words have l(x) letters and multiply back to x");
    for (const auto& x : ball) {
      int lx = aw.length(x);
      bool ok = aw.length(aw.inverse(x)) == lx;
      for (int k = 0; k < aw.numGenerators(); ++k) ok = ok && std::abs(aw.length(aw.mul(x, aw.generator(k))) - lx) == 1;
      auto wd = aw.reducedWord(x);
      AffElem y = wd.omega;
      for (int k : wd.letters) y = aw.mul(y, aw.generator(k));
      ok = ok && static_cast<int>(wd.letters.size()) == lx && y == x && aw.length(wd.omega) == 0;
      t.expect(ok, [&] { return "x=" + aw.key(x); });
    }
    t.note("ball=" + std::to_string(ball.size()));
    out.push_back(t.done());
  }
  {
    Tally t("affine-length-subadditive", "l(xy) <= l(x) + l(y) with matching parity");
    auto small = aw.ball(e.cfg.lengthCutoff / 2);
    for (const auto& x : small)
      for (const auto& y : small) {
        int a = aw.length(aw.mul(x, y)), b = aw.length(x) + aw.length(y);
        t.expect(a <= b && (b - a) % 2 == 0, [&] { return "x=" + aw.key(x) + " y=" + aw.key(y); });
      }
    out.push_back(t.done());
  }
  {
    Tally t("affine-length-gallery", "l(x) counts affine root hyperplanes separating the base alcove from its image");
    const AlcovePoint p = aw.baseBarycenter();
    for (const auto& x : ball) {
      AlcovePoint q = aw.act(x, p);
      long long walls = 0;
      for (int r : d.positiveRoots()) {
        QVec a = toQ(d.roots()[r].covector);
        Rational u = 0, v = 0;
        for (size_t i = 0; i < a.size(); ++i) {
          u += a[i] * p[i];
          v += a[i] * q[i];
        }
        mpz_class fu, fv;
        mpz_fdiv_q(fu.get_mpz_t(), u.get_num_mpz_t(), u.get_den_mpz_t());
        mpz_fdiv_q(fv.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        walls += std::abs(mpz_class(fv - fu).get_si());
      }
      t.expect(walls == aw.length(x), [&] { return "x=" + aw.key(x) + " walls=" + std::to_string(walls); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("omega-group", "Omega elements have length 0 and permute the affine generators by conjugation");
    const auto& om = aw.omega();
    for (size_t i = 0; i < om.elements.size(); ++i) {
      const AffElem& w = om.elements[i];
      bool ok = aw.length(w) == 0;
      for (int k = 0; k < aw.numGenerators(); ++k)
        ok = ok && aw.mul(aw.mul(w, aw.generator(k)), aw.inverse(w)) == aw.generator(om.conjugation[i][k]);
      t.expect(ok, [&] { return "omega=" + aw.key(w); });
    }
    if (om.finite()) {
      long long zero = 0;
      for (const auto& x : aw.ball(0)) zero += aw.length(x) == 0;
      t.expect(zero == om.order(), [&] { return "length-zero count " + std::to_string(zero); });
      t.note("order=" + std::to_string(om.order()));
    } else {
      t.note("free rank " + std::to_string(om.freeRank));
    }
    out.push_back(t.done());
  }
  {
    Tally t("parahoric-finite", "each proper W_J is a finite subgroup of W_aff projecting injectively to W");
    for (Mask J : aw.properParahorics()) {
      auto G = aw.parahoricGroup(J);
      std::set<AffElem> S(G.begin(), G.end());
      bool ok = aw.finiteProjection(J).size() == G.size();
      for (const auto& x : G) {
        ok = ok && aw.reducedWord(x).omega == aw.identity();
        for (int k = 0; k < aw.numGenerators(); ++k)
          if (hasBit(J, k)) ok = ok && S.count(aw.mul(x, aw.generator(k)));
      }
      ok = ok && aw.poincare(J).evaluate(Rational(1)) == static_cast<long>(G.size());
      t.expect(ok, [&] { return "J=" + aw.parahoricName(J); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("min-coset-reps", "minimal representatives of W_M\\W are the elements with no left descent in M, one per coset");
    for (Mask M : leviMasks(d)) {
      auto reps = minCosetReps(d, M);
      bool ok = reps.size() * d.parabolicSubgroup(M).size() == static_cast<size_t>(W.size());
      for (int w : reps)
        for (int k = 1; k <= d.semisimpleRank(); ++k)
          if (hasBit(M, k)) ok = ok && W.length(W.mul(W.simple(k), w)) > W.length(w);
      t.expect(ok, [&] { return "M=" + levi(d, M); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("bruhat-order", "x <= x, x < xs when l(xs) > l(x), and not xs <= x");
    for (const auto& x : aw.ball(std::min(e.cfg.lengthCutoff, 4))) {
      bool ok = aw.bruhatLeq(x, x);
      for (int k = 0; k < aw.numGenerators(); ++k) {
        AffElem y = aw.mul(x, aw.generator(k));
        if (aw.length(y) > aw.length(x)) ok = ok && aw.bruhatLeq(x, y) && !aw.bruhatLeq(y, x);
      }
      t.expect(ok, [&] { return "x=" + aw.key(x); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("relative-weyl", "W^theta commutes with theta, preserves the fixed lattice, acts faithfully and is generated by folding generators");
    const auto& rel = e.bc().relative();
    for (int w : rel.relativeWeyl) {
      bool ok = matMul(W.matrix(w), e.theta.matrix) == matMul(e.theta.matrix, W.matrix(w));
      for (const auto& b : rel.fixedBasis) ok = ok && e.theta.apply(W.act(w, b)) == W.act(w, b);
      t.expect(ok, [&] { return "w=" + W.wordString(w); });
    }
    t.expect(rel.generatedByFoldingGenerators && rel.faithfulOnFixedLattice, [] { return "generation/faithfulness"; });
    if (e.theta.isIdentity())
      t.expect(static_cast<int>(rel.relativeWeyl.size()) == W.size(), [] { return "theta = id but W^theta != W"; });
    t.note("|W^theta|=" + std::to_string(rel.relativeWeyl.size()));
    out.push_back(t.done());
  }
}

// ----------------------------------------------------------------- hecke

void suiteHecke(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const AffineWeyl& aw = e.aw;
  HeckeAlgebra& H = e.hecke();
  const Laurent q = Laurent::q();
  {
    Tally t("hecke-quadratic", "T_s^2 = (q - 1) T_s + q");
    for (int k = 0; k < aw.numGenerators(); ++k) {
      HeckeElement Ts = H.basis(aw.generator(k));
      HeckeElement rhs = Ts.scaled(q - Laurent(1)) + H.one().scaled(q);
      t.expect(H.multiply(Ts, Ts) == rhs, [&] { return "s" + std::to_string(k); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("hecke-braid", "braid relations for every pair of affine generators of finite order");
    for (int a = 0; a < aw.numGenerators(); ++a)
      for (int b = a + 1; b < aw.numGenerators(); ++b) {
        AffElem st = aw.mul(aw.generator(a), aw.generator(b)), pw = st;
        int m = 1;
        while (pw != aw.identity() && m <= 6) {
          pw = aw.mul(pw, st);
          ++m;
        }
        if (pw != aw.identity()) continue;
        HeckeElement lhs = H.one(), rhs = H.one();
        AffElem word = aw.identity();
        for (int i = 0; i < m; ++i) {
          lhs = H.rightMulGenerator(lhs, i % 2 ? b : a);
          rhs = H.rightMulGenerator(rhs, i % 2 ? a : b);
          word = aw.mul(word, aw.generator(i % 2 ? b : a));
        }
        t.expect(lhs == rhs && lhs == H.basis(word), [&] { return "s" + std::to_string(a) + ",s" + std::to_string(b); });
      }
    out.push_back(t.done());
  }
  const auto small = aw.ball(2);
  {
    Tally t("hecke-omega-units", "T_w T_x = T_wx for length-zero w");
    for (const auto& w : aw.omega().elements)
      for (const auto& x : small)
        t.expect(H.multiply(H.basis(w), H.basis(x)) == H.basis(aw.mul(w, x)), [&] { return "w=" + aw.key(w) + " x=" + aw.key(x); });
    out.push_back(t.done());
  }
  {
    Tally t("hecke-associativity", "(T_x T_y) T_z = T_x (T_y T_z) on short elements");
    const size_t m = std::min<size_t>(small.size(), 10);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < m; ++k) {
          HeckeElement x = H.basis(small[i]), y = H.basis(small[j]), z = H.basis(small[k]);
          t.expect(H.multiply(H.multiply(x, y), z) == H.multiply(x, H.multiply(y, z)),
                   [&] { return aw.key(small[i]) + " " + aw.key(small[j]) + " " + aw.key(small[k]); });
        }
    out.push_back(t.done());
  }
  const IVec delta = someStrictlyDominant(d);
  {
    Tally t("theta-well-defined", "theta_lambda does not depend on the dominant decomposition lambda = l1 - l2");
    for (const auto& l : box(d.rank(), 2)) {
      IVec l1, l2;
      H.canonicalSplit(l, l1, l2);
      t.expect(H.thetaFrom(l1, l2) == H.thetaFrom(add(l1, delta), add(l2, delta)), [&] { return "lambda=" + formatVec(l); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("theta-multiplicative", "theta_lambda theta_mu = theta_{lambda + mu}");
    auto pts = box(d.rank(), 1);
    for (const auto& a : pts)
      for (const auto& b : pts)
        t.expect(H.multiply(H.theta(a), H.theta(b)) == H.theta(add(a, b)),
                 [&] { return "lambda=" + formatVec(a) + " mu=" + formatVec(b); });
    out.push_back(t.done());
  }
  {
    Tally t("indicator-idempotent", "1_J * 1_J = P_J(q) 1_J");
    for (Mask J : aw.properParahorics()) {
      HeckeElement I = H.indicator(J);
      t.expect(H.multiply(I, I) == I.scaled(H.poincare(J)), [&] { return "J=" + aw.parahoricName(J); });
    }
    out.push_back(t.done());
  }
  const auto mus = e.mus();
  {
    Tally t("bernstein-centrality", "z_mu commutes with every T_s, every T_omega and the translations generating the lattice");
    for (const auto& mu : mus)
      t.expect(H.isCentral(H.bernsteinFunction(mu)), [&] { return "mu=" + formatVec(mu); });
    t.expect(!H.isCentral(H.basis(aw.generator(1))), [] { return "T_s1 reported central"; });
    t.note("mu count=" + std::to_string(mus.size()));
    out.push_back(t.done());
  }
  {
    Tally t("bernstein-injectivity", "z -> z * 1_J is injective on span{z_mu} (rank over Q(v) via a specialization of v)");
    const Rational v0(7, 5);
    for (Mask J : aw.properParahorics()) {
      std::vector<HeckeElement> imgs;
      std::set<AffElem> support;
      for (const auto& mu : mus) {
        imgs.push_back(H.toParahoric(CentralElement::orbitSum(d, mu), J));
        for (const auto& [x, c] : imgs.back().terms()) support.insert(x);
      }
      QMat M;
      for (const auto& h : imgs) {
        QVec row;
        for (const auto& x : support) row.push_back(h.coeff(x).evaluate(v0));
        M.push_back(row);
      }
      int rk = rankQ(M);
      t.expect(rk == static_cast<int>(mus.size()), [&] { return "J=" + aw.parahoricName(J) + " rank=" + std::to_string(rk); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("parahoric-bi-invariance", "z * 1_J absorbs T_s on both sides for s in J");
    for (Mask J : aw.properParahorics())
      for (const auto& mu : mus)
        t.expect(H.isBiInvariant(H.toParahoric(CentralElement::orbitSum(d, mu), J), J),
                 [&] { return "J=" + aw.parahoricName(J) + " mu=" + formatVec(mu); });
    out.push_back(t.done());
  }
  {
    Tally t("iota-duality", "the anti-involution T_x -> T_{x^-1} sends z_mu to z_{-w0 mu}");
    for (const auto& mu : mus)
      t.expect(H.iota(H.bernsteinFunction(mu)) == H.bernsteinFunction(d.dominantRep(neg(mu))),
               [&] { return "mu=" + formatVec(mu); });
    out.push_back(t.done());
  }
}

// ------------------------------------------------------------- bernstein

void suiteBernstein(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const AffineWeyl& aw = e.aw;
  HeckeAlgebra& H = e.hecke();
  BernsteinCalculus& B = e.bernstein();
  PrincipalSeriesModel& m = e.principal();
  const auto mus = e.mus();
  {
    Tally t("bernstein-basis-roundtrip", "T_x rewritten in the basis theta_lambda T_w converts back to T_x");
    for (const auto& x : aw.ball(std::min(e.cfg.lengthCutoff, 4)))
      t.expect(B.toHecke(B.fromBasis(x)) == H.basis(x), [&] { return "x=" + aw.key(x); });
    out.push_back(t.done());
  }
  {
    Tally t("bernstein-scalar", "z_mu * 1_J acts on the J-fixed principal series by the orbit sum of chi(-lambda)");
    for (Mask J : aw.properParahorics())
      for (const auto& mu : mus) {
        auto r = centralScalar(m, CentralElement::orbitSum(d, mu), J);
        t.expect(r.ok(), [&] { return "J=" + aw.parahoricName(J) + " mu=" + formatVec(mu) + " " + r.detail; });
      }
    out.push_back(t.done());
  }
  {
    Tally t("bernstein-scalar-routes", "scalar via the Bernstein basis equals scalar via the T-basis expansion");
    for (Mask J : aw.properParahorics())
      for (const auto& mu : mus) {
        auto z = CentralElement::orbitSum(d, mu);
        auto a = centralScalar(m, z, J, ScalarRoute::Bernstein);
        auto b = centralScalar(m, z, J, ScalarRoute::HeckeBasis);
        t.expect(a.scalar && b.scalar && a.value == b.value,
                 [&] { return "J=" + aw.parahoricName(J) + " mu=" + formatVec(mu); });
      }
    out.push_back(t.done());
  }
  {
    Tally t("jfixed-dimension", "rank of 1_J on the principal series equals |W/Wbar_J| and its trace is P_J(q) times that");
    for (Mask J : aw.properParahorics()) {
      auto c = jfixedDimensionCheck(m, J);
      t.expect(c.ok(), [&] {
        return "J=" + aw.parahoricName(J) + " cosets=" + std::to_string(c.cosets) + " rank=" + std::to_string(c.rankOfProjector);
      });
    }
    out.push_back(t.done());
  }
  {
    Tally t("fourier-invariance", "Fourier transforms of z_mu are W-invariant and linearly independent for each J");
    std::vector<CentralElement> zs;
    for (const auto& mu : mus) zs.push_back(CentralElement::orbitSum(d, mu));
    for (Mask J : aw.properParahorics()) {
      for (size_t i = 0; i < zs.size(); ++i)
        t.expect(isWeylInvariant(fourierTransform(aw, zs[i], J), d),
                 [&] { return "J=" + aw.parahoricName(J) + " mu=" + formatVec(mus[i]); });
      t.expect(fourierRank(aw, zs, J) == static_cast<int>(zs.size()), [&] { return "rank J=" + aw.parahoricName(J); });
    }
    out.push_back(t.done());
  }
}

// ---------------------------------------------------------------- satake

void suiteSatake(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const AffineWeyl& aw = e.aw;
  HeckeAlgebra& H = e.hecke();
  PrincipalSeriesModel& m = e.principal();
  const Mask K = aw.hyperspecial();
  const auto mus = e.mus();
  std::vector<Mask> chain;
  for (Mask J = 0; J <= K; J += 2)
    if ((J & K) == J) chain.push_back(J);
  {
    Tally t("satake-change-parahoric", "Iwahori -> J -> K: (z * 1_I) * 1_J / P_I = z * 1_J and the composite equals the direct map");
    for (const auto& mu : mus) {
      auto z = CentralElement::orbitSum(d, mu);
      HeckeElement zi = H.toParahoric(z, 0), zk = H.toParahoric(z, K);
      for (Mask J : chain) {
        HeckeElement zj = H.changeParahoric(zi, 0, J);
        bool ok = zj == H.toParahoric(z, J) && H.changeParahoric(zj, J, K) == zk;
        t.expect(ok, [&] { return "J=" + aw.parahoricName(J) + " mu=" + formatVec(mu); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("satake-scalar", "the spherical image is K-bi-invariant and acts by the Satake orbit sum");
    for (const auto& mu : mus) {
      auto z = CentralElement::orbitSum(d, mu);
      HeckeElement zk = H.changeParahoric(H.toParahoric(z, 0), 0, K);
      auto r = scalarOfElement(m, zk, K, closedFormScalar(z, d.rank()));
      t.expect(H.isBiInvariant(zk, K) && r.ok(), [&] { return "mu=" + formatVec(mu) + " " + r.detail; });
    }
    out.push_back(t.done());
  }
  {
    Tally t("change-parahoric-precondition", "change of parahoric rejects J1 not contained in J2");
    for (Mask J1 : aw.properParahorics())
      for (Mask J2 : aw.properParahorics()) {
        if ((J1 & J2) == J1) continue;
        bool threw = false;
        try {
          H.changeParahoric(H.indicator(J1), J1, J2);
        } catch (const std::invalid_argument&) {
          threw = true;
        }
        t.expect(threw, [&] { return "J1=" + aw.parahoricName(J1) + " J2=" + aw.parahoricName(J2); });
      }
    out.push_back(t.done());
  }
  {
    Tally t("constant-term-centers", "z_mu viewed over W_M decomposes into W_M-orbit sums reproducing it");
    for (Mask M : leviMasks(d))
      for (const auto& mu : mus)
        t.expect(constantTermSpectral(d, CentralElement::orbitSum(d, mu), M).has_value(),
                 [&] { return "M=" + levi(d, M) + " mu=" + formatVec(mu); });
    out.push_back(t.done());
  }
}

// ------------------------------------------------------------ basechange

void suiteBaseChange(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const AffineWeyl& aw = e.aw;
  BaseChangeContext& ctx = e.bc();
  const auto mus = e.mus();
  const auto Js = e.stableParahorics();
  const bool small = d.rank() <= 2;
  auto run = [&](Tally& t, const CheckOutcome& o, const std::string& where) {
    t.expect(o.ok, [&] { return where + " " + o.detail; });
  };
  if (ctx.split()) {
    Tally t("bc-split", "split data: b(z_mu) = z_{r mu} as functions and as J-level T-expansions");
    for (const auto& mu : mus)
      for (Mask J : Js) run(t, verifySplitBaseChange(ctx, e.hecke(), mu, J), "mu=" + formatVec(mu) + " J=" + aw.parahoricName(J));
    out.push_back(t.done());
  }
  {
    Tally t("bc-spectral", "ch_t(b phi) = ch_Nt(phi), Fourier constant C and theta-fixed coset count");
    for (const auto& mu : mus)
      for (Mask J : Js)
        run(t, verifySpectralCharacterization(ctx, aw, CentralElement::orbitSum(d, mu), J),
            "mu=" + formatVec(mu) + " J=" + aw.parahoricName(J));
    out.push_back(t.done());
  }
  {
    Tally t("bc-change-parahoric", "b commutes with change of parahoric J1 -> J2");
    for (const auto& mu : mus)
      for (Mask J1 : Js)
        for (Mask J2 : Js) {
          if ((J1 & J2) != J1 || J1 == J2) continue;
          if (!small && J1 != 0) continue;
          run(t, verifyBcChangeParahoric(ctx, e.principal(), CentralElement::orbitSum(d, mu), J1, J2),
              "mu=" + formatVec(mu) + " J1=" + aw.parahoricName(J1) + " J2=" + aw.parahoricName(J2));
        }
    if (!small) t.note("rank 3: J1 = iwahori only");
    out.push_back(t.done());
  }
  {
    Tally t("bc-constant-term", "constant term to a theta-stable Levi commutes with b");
    for (Mask M : leviMasks(d)) {
      if (!isThetaStableMask(e.theta, M)) continue;
      for (const auto& mu : mus)
        run(t, verifyBcConstantTerm(ctx, CentralElement::orbitSum(d, mu), M), "M=" + levi(d, M) + " mu=" + formatVec(mu));
    }
    out.push_back(t.done());
  }
  {
    Tally t("bc-w-conjugation", "w-conjugation by W^theta commutes with b and transports coset labels");
    for (int w : ctx.relative().relativeWeyl)
      for (const auto& mu : mus)
        for (Mask J : Js)
          run(t, verifyBcWConjugation(ctx, aw, CentralElement::orbitSum(d, mu), w, J),
              "w=" + d.weyl().wordString(w) + " mu=" + formatVec(mu) + " J=" + aw.parahoricName(J));
    out.push_back(t.done());
  }
  {
    Tally t("bc-homomorphism", "b(f * g) = b(f) * b(g); Bernstein map multiplicative at rank <= 2");
    for (const auto& a : mus)
      for (const auto& b : mus)
        run(t, verifyBcHomomorphism(ctx, CentralElement::orbitSum(d, a), CentralElement::orbitSum(d, b), small ? &e.hecke() : nullptr),
            "mu=" + formatVec(a) + " nu=" + formatVec(b));
    out.push_back(t.done());
  }
  {
    Tally t("bc-norm-invariance", "the norm maps W-orbit sums to W^theta-invariant functions");
    for (const auto& mu : mus) {
      bool ok = false;
      try {
        ok = ctx.normInvariants(CentralElement::orbitSum(d, mu)).has_value();
      } catch (const std::exception&) {
        ok = false;
      }
      t.expect(ok, [&] { return "mu=" + formatVec(mu); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("bc-degree-one", "with theta = id and r = 1 base change is the identity");
    BaseChangeContext one(d, DiagramAutomorphism::build(d, "id", 1));
    for (const auto& mu : mus) {
      auto z = CentralElement::orbitSum(d, mu);
      t.expect(one.baseChange(z) == z, [&] { return "mu=" + formatVec(mu); });
    }
    out.push_back(t.done());
  }
}

// -------------------------------------------------------- descent-cosets

void suiteCosets(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const AffineWeyl& aw = e.aw;
  {
    Tally t("coset-bijection-counts", "|W_M\\W/Wbar_J| from minimal representatives equals the brute-force double-coset partition");
    for (Mask M : leviMasks(d))
      for (Mask J : aw.properParahorics()) {
        auto reps = pgjRepresentatives(aw, M, J).reps.size();
        auto brute = doubleCosets(d, M, aw.finiteProjection(J)).size();
        t.expect(reps == brute, [&] { return "M=" + levi(d, M) + " J=" + aw.parahoricName(J); });
      }
    out.push_back(t.done());
  }
  {
    Tally t("theta-fixed-reps", "every theta-stable double coset has a theta-fixed minimal representative");
    long long stable = 0;
    for (Mask M : leviMasks(d)) {
      if (!isThetaStableMask(e.theta, M)) continue;
      for (Mask J : e.stableParahorics()) {
        auto r = thetaFixedReps(aw, M, J, e.theta);
        stable += r.stableCosets;
        t.expect(r.ok(), [&] { return "M=" + levi(d, M) + " J=" + aw.parahoricName(J); });
      }
    }
    t.note("stable cosets=" + std::to_string(stable));
    out.push_back(t.done());
  }
  {
    const int cutoff = std::min(e.cfg.lengthCutoff, 6);
    Tally t("cell-labels", "equal Iwasawa cells force theta(w) = w, tau = tau0 and lambda = -nu");
    long long tuples = 0, equal = 0;
    for (Mask M : leviMasks(d)) {
      if (!isThetaStableMask(e.theta, M)) continue;
      auto s = cellLabelSweep(aw, M, 0, e.theta, cutoff);
      tuples += s.tuples;
      equal += s.equalCells;
      t.expect(s.violations == 0, [&] { return "M=" + levi(d, M) + " " + s.firstViolation; });
    }
    t.note("cutoff=" + std::to_string(cutoff) + " tuples=" + std::to_string(tuples) + " equal=" + std::to_string(equal));
    out.push_back(t.done());
  }
  {
    Tally t("min-rep-positivity", "minimal representatives keep Phi_M^+ positive and the image alcove on the positive side of Delta_M");
    for (Mask M : leviMasks(d)) t.expect(minimalRepsPreservePositivity(aw, M), [&] { return "M=" + levi(d, M); });
    out.push_back(t.done());
  }
  {
    Tally t("iwasawa-cells", "cell labels are minimal members of x W_J, idempotent, and differ from x by W_J");
    const auto ball = aw.ball(std::min(e.cfg.lengthCutoff, 4));
    for (Mask J : aw.properParahorics()) {
      auto G = aw.parahoricGroup(J);
      std::set<AffElem> S(G.begin(), G.end());
      for (const auto& x : ball) {
        AffElem c = iwasawaCell(aw, x, J);
        bool ok = S.count(aw.mul(aw.inverse(x), c)) && aw.length(c) <= aw.length(x) && iwasawaCell(aw, c, J) == c;
        t.expect(ok, [&] { return "x=" + aw.key(x) + " J=" + aw.parahoricName(J); });
      }
    }
    out.push_back(t.done());
  }
  if (d.label() == "C2") {
    Tally t("sp4-facet", "s_alpha2 fixes omega1/2 but not s_alpha1(omega1/2)");
    AlcovePoint p = aw.fundamentalCoweight(1);
    for (auto& x : p) x /= 2;
    AffElem s1 = aw.generator(1), s2 = aw.generator(2);
    t.expect(aw.fixes(s2, p), [] { return "s2 does not fix omega1/2"; });
    t.expect(!aw.fixes(s2, aw.act(s1, p)), [] { return "s2 fixes s1(omega1/2)"; });
    out.push_back(t.done());
  }
}

// ----------------------------------------------------------------- cones

void suiteCones(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  const int n = d.rank();
  ConeContext cc(d);
  BaseChangeContext& ctx = e.bc();
  std::mt19937_64 rng(e.cfg.seed);
  auto randomPoint = [&](int radius) {
    IVec x(n);
    for (auto& c : x) c = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
    return x;
  };
  std::vector<IVec> pts;
  for (int i = 0; i < e.cfg.samples; ++i) pts.push_back(randomPoint(10));
  {
    Tally t("arthur-identity", "sum over P >= Q of (-1)^(a_P - a_G) tauhat_P tau_Q^P = [Q = G]");
    for (const auto& x : pts)
      for (Mask Q : cc.parabolics()) {
        int s = cc.arthurSum(Q, toQ(x));
        t.expect(s == (Q == cc.full() ? 1 : 0), [&] { return "Q=" + cc.parabolicName(Q) + " H=" + formatVec(x); });
      }
    t.note("seed=" + std::to_string(e.cfg.seed) + " points=" + std::to_string(pts.size()));
    out.push_back(t.done());
  }
  if (d.semisimpleRank() == 1) {
    Tally t("arthur-rank-one", "rank one: tau = tauhat and the sum for Q = B is tau - tauhat = 0");
    for (const auto& x : pts) {
      bool a = cc.tau(0, toQ(x)), b = cc.tauHat(0, toQ(x));
      t.expect(a == b && cc.arthurSum(0, toQ(x)) == int(a) - int(b), [&] { return "H=" + formatVec(x); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("acute-in-obtuse", "tau_P(H) = 1 implies tauhat_P(H) = 1");
    for (const auto& x : pts)
      for (Mask M : cc.parabolics())
        t.expect(!cc.tau(M, toQ(x)) || cc.tauHat(M, toQ(x)), [&] { return "P=" + cc.parabolicName(M) + " H=" + formatVec(x); });
    out.push_back(t.done());
  }
  {
    Tally t("levi-projection", "the W_M-average is idempotent and W_M-invariant");
    for (Mask M : cc.parabolics())
      for (size_t i = 0; i < std::min<size_t>(pts.size(), 50); ++i) {
        QVec h = cc.hMap(pts[i], M);
        bool ok = cc.project(h, M) == h;
        for (int w : d.parabolicSubgroup(M)) ok = ok && cc.hMap(d.weyl().act(w, pts[i]), M) == h;
        t.expect(ok, [&] { return "M=" + cc.parabolicName(M) + " lambda=" + formatVec(pts[i]); });
      }
    out.push_back(t.done());
  }
  {
    Tally t("chi-eigenvalue", "chi_N(lambda) = 1 iff every root of N_P contracts at the norm");
    for (size_t i = 0; i < std::min<size_t>(pts.size(), 2000); ++i)
      for (Mask M : cc.parabolics()) {
        if (!isThetaStableMask(e.theta, M)) continue;
        const IVec& x = pts[i];
        t.expect(cc.chiN(ctx, x, M) == cc.contractsLieN(ctx, x, M), [&] { return "P=" + cc.parabolicName(M) + " lambda=" + formatVec(x); });
      }
    out.push_back(t.done());
  }
  {
    const int per = n <= 2 ? 100 : 10;
    Tally t("hales-chambers", "chihat_N(w .) is constant on every chamber for all P and w");
    auto hc = halesChambers(cc, ctx, per, e.cfg.seed);
    t.expect(hc.violations == 0, [&] { return "violations=" + std::to_string(hc.violations); });
    t.note(std::string(hc.exact ? "exact" : "sampled") + " hyperplanes=" + std::to_string(hc.hyperplanes.size()) +
           " chambers=" + std::to_string(hc.chambers.size()) + " samples/chamber=" + std::to_string(per));
    out.push_back(t.done());
    Tally w("wprime-well-defined", "W'(P) does not depend on the sample point of the chamber");
    for (size_t i = 0; i < hc.chambers.size(); ++i)
      for (Mask M : hc.parabolics) {
        auto s = wprimeSet(cc, ctx, M, hc.chambers[i]);
        w.expect(s.has_value(), [&] { return "chamber=" + std::to_string(i) + " P=" + cc.parabolicName(M); });
        if (s && M == cc.full())
          w.expect(static_cast<int>(s->size()) == d.weyl().size(), [&] { return "P=G chamber " + std::to_string(i); });
      }
    out.push_back(w.done());
  }
  {
    Tally t("compact-trace", "mu = 0 gives 0 for proper P; P = G gives the full orbit sum");
    const int nv = n + 1;
    for (Mask M : cc.parabolics()) {
      if (!isThetaStableMask(e.theta, M)) continue;
      MPoly zero = compactTraceFunctional(cc, ctx, M, 0, IVec(n, 0));
      t.expect(M == cc.full() ? zero == MPoly(nv, Rational(1)) : zero.isZero(), [&] { return "P=" + cc.parabolicName(M); });
    }
    for (const auto& mu : e.mus())
      for (int eta = 0; eta < d.weyl().size(); ++eta) {
        MPoly full = compactTraceFunctional(cc, ctx, cc.full(), eta, mu);
        t.expect(full == closedFormScalar(CentralElement::orbitSum(d, neg(mu)), n),
                 [&] { return "mu=" + formatVec(mu) + " eta=" + d.weyl().wordString(eta); });
      }
    out.push_back(t.done());
  }
  {
    Tally t("unitary-part", "theta-fixed xi has |xi(nu)| = 1 on norm-zero nu (tolerance 1e-10)");
    auto rep = unitaryPartInvariance(ctx, 1000, e.cfg.seed);
    t.expect(rep.ok(), [&] { return rep.firstFailure; });
    t.note("trials=" + std::to_string(rep.trials) + " kernel rank=" + std::to_string(rep.kernelRank) +
           " worst deviation below 1e-12: " + (rep.worstDeviation < 1e-12 ? "yes" : "no"));
    out.push_back(t.done());
  }
}

// ----------------------------------------------------------- atiyah-bott

void suiteAtiyahBott(Env& e, Checks& out) {
  const RootDatum& d = e.datum();
  BaseChangeContext& ctx = e.bc();
  std::vector<IVec> regular;
  for (const auto& x : box(d.rank(), 3))
    if (isThetaRegular(ctx, x) && regular.size() < 24) regular.push_back(x);
  const auto& rel = ctx.relative().relativeWeyl;
  Tally fp("ab-fixed-points", "brute-force fixed points theta(w) = w are exactly W^theta");
  Tally cls("ab-class-function", "the value is unchanged under nu -> u nu for u in W^theta");
  Tally sym("ab-character-symmetry", "the value is unchanged under xi -> u xi for u in W^theta");
  Tally unit("ab-unit-denominator", "exactly one fixed point has denominator 1");
  for (const auto& nu : regular) {
    auto r = atiyahBott(ctx, nu);
    fp.expect(r.fixedPointsMatchRelativeWeyl && r.fixedPoints.size() == rel.size(), [&] { return "nu=" + formatVec(nu); });
    unit.expect(r.unitDenominators.size() == 1, [&] { return "nu=" + formatVec(nu); });
    for (int u : rel) {
      cls.expect(atiyahBott(ctx, d.weyl().act(u, nu)).value == r.value,
                 [&] { return "nu=" + formatVec(nu) + " u=" + d.weyl().wordString(u); });
      sym.expect(substituteLattice(r.value, d.weyl().matrix(u)) == r.value,
                 [&] { return "nu=" + formatVec(nu) + " u=" + d.weyl().wordString(u); });
    }
  }
  fp.note("regular points=" + std::to_string(regular.size()) + " |W^theta|=" + std::to_string(rel.size()));
  out.push_back(fp.done());
  out.push_back(cls.done());
  out.push_back(sym.done());
  out.push_back(unit.done());
  {
    Tally t("ab-nonregular-rejected", "non-regular nu is rejected");
    bool threw = false;
    try {
      atiyahBott(ctx, IVec(d.rank(), 0));
    } catch (const std::domain_error&) {
      threw = true;
    }
    t.expect(threw, [] { return "nu=0 accepted"; });
    out.push_back(t.done());
  }
  if (d.semisimpleRank() == 1 && ctx.theta().isIdentity()) {
    Tally t("ab-rank-one", "rank one, theta = id: value = v^-|<alpha,nu>| (s^nu + s^(s nu))");
    const int nv = d.rank() + 1;
    for (const auto& nu : regular) {
      int k = std::abs(dot(d.alpha(1), nu));
      IVec snu = d.reflect(1, nu);
      MPoly::Exps a(nv, 0), b(nv, 0);
      a[0] = b[0] = -k;
      for (int i = 0; i < d.rank(); ++i) {
        a[i + 1] = nu[i];
        b[i + 1] = snu[i];
      }
      MPoly expected = MPoly::monomial(nv, 1, a) + MPoly::monomial(nv, 1, b);
      t.expect(atiyahBott(ctx, nu).value == expected, [&] { return "nu=" + formatVec(nu); });
    }
    out.push_back(t.done());
  }
}

using SuiteFn = void (*)(Env&, Checks&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"weyl", suiteWeyl},           {"hecke", suiteHecke}, {"bernstein", suiteBernstein},
      {"satake", suiteSatake},       {"basechange", suiteBaseChange}, {"descent-cosets", suiteCosets},
      {"cones", suiteCones},         {"atiyah-bott", suiteAtiyahBott},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

VerificationReport runSuite(const std::string& suite, const RunConfig& cfg, StructureCache* cache) {
  cfg.validate();
  bool known = suite == "all";
  for (const auto& n : suiteNames()) known = known || n == suite;
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  auto t0 = std::chrono::steady_clock::now();
  Env env(cfg, cache);
  VerificationReport rep;
  rep.suite = suite;
  rep.config = cfg;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    Checks checks;
    fn(env, checks);
    for (auto& c : checks) {
      if (suite == "all") c.label = name + "/" + c.label;
      rep.checks.push_back(std::move(c));
    }
  }
  if (cache) cache->flush();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace parahoric
