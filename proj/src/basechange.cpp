#include "parahoric/basechange.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace parahoric {

namespace {

MPoly fMonomial(int nvars, const Laurent& c, const IVec& exps) {
  MPoly r(nvars);
  MPoly::Exps e(nvars, 0);
  for (size_t i = 0; i < exps.size(); ++i) e[i + 1] = exps[i];
  for (const auto& [deg, coef] : c.terms()) {
    e[0] = deg;
    r += MPoly::monomial(nvars, coef, e);
  }
  return r;
}

std::string pv(const MPoly& p) { return p.pretty(); }

}  // namespace

BaseChangeContext::BaseChangeContext(const RootDatum& d, DiagramAutomorphism theta)
    : d_(d), theta_(std::move(theta)), rel_(fold(d, theta_)) {
  for (int w : rel_.relativeWeyl) relMats_.push_back(d_.weyl().matrix(w));
}

IVec BaseChangeContext::normCochar(const IVec& nu) const {
  IVec acc(d_.rank(), 0), x = nu;
  for (int i = 0; i < r(); ++i) {
    acc = add(acc, x);
    x = theta_.apply(x);
  }
  return acc;
}

IVec BaseChangeContext::fixedCoordinates(const IVec& x) const {
  QVec c;
  if (!coordinatesIn(rel_.fixedBasis, x, c)) throw std::invalid_argument("vector is not theta-fixed: " + formatVec(x));
  IVec out;
  for (const auto& q : c) {
    if (q.get_den() != 1) throw std::logic_error("fixed basis is not a lattice basis");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

std::optional<CentralElement> BaseChangeContext::normInvariants(const CentralElement& f) const {
  if (!f.isInvariant(d_)) return std::nullopt;
  CentralElement out;
  for (const auto& [nu, c] : f.coeffs) {
    CentralElement t = CentralElement::point(normCochar(nu)).scaled(c);
    out += t;
  }
  if (!out.isInvariantUnder(relMats_)) throw std::logic_error("norm image is not W^theta-invariant");
  return out;
}

CentralElement BaseChangeContext::baseChange(const CentralElement& phi) const {
  auto out = normInvariants(phi);
  if (!out) throw std::invalid_argument("base change needs a W-invariant function");
  return *out;
}

std::vector<IVec> BaseChangeContext::relativeOrbit(const IVec& x) const {
  std::set<IVec> s;
  for (const auto& g : relMats_) s.insert(matVec(g, x));
  return {s.begin(), s.end()};
}

std::optional<std::map<IVec, Laurent>> BaseChangeContext::relativeOrbitCoordinates(const CentralElement& f) const {
  if (!f.isInvariantUnder(relMats_)) return std::nullopt;
  std::map<IVec, Laurent> out;
  for (const auto& [l, c] : f.coeffs) {
    auto orb = relativeOrbit(l);
    if (orb.back() == l) out[l] = c;
  }
  return out;
}

MPoly BaseChangeContext::fSideScalar(const CentralElement& f) const {
  MPoly r(fixedRank() + 1);
  for (const auto& [l, c] : f.coeffs) r += fMonomial(fixedRank() + 1, c, neg(fixedCoordinates(l)));
  return r;
}

MPoly BaseChangeContext::eSideScalarAtNorm(const CentralElement& phi) const {
  MPoly r(fixedRank() + 1);
  for (const auto& [nu, c] : phi.coeffs) r += fMonomial(fixedRank() + 1, c, neg(fixedCoordinates(normCochar(nu))));
  return r;
}

std::vector<MPoly> BaseChangeContext::dualNorm() const {
  std::vector<MPoly> out;
  for (int i = 0; i < d_.rank(); ++i) {
    IVec e(d_.rank(), 0);
    e[i] = 1;
    out.push_back(fMonomial(fixedRank() + 1, Laurent(1), fixedCoordinates(normCochar(e))));
  }
  return out;
}

MPoly BaseChangeContext::dualNormValue(const IVec& nu) const {
  // Characters are multiplicative, so (Nt)(nu) = prod (Nt)(e_i)^{nu_i};
  // monomial powers reduce to exponent arithmetic.
  auto images = dualNorm();
  IVec exps(fixedRank(), 0);
  for (int i = 0; i < d_.rank(); ++i) {
    const auto& e = images[i].terms().begin()->first;
    for (int j = 0; j < fixedRank(); ++j) exps[j] += nu[i] * e[j + 1];
  }
  return fMonomial(fixedRank() + 1, Laurent(1), exps);
}

int BaseChangeContext::eSideCosets(const AffineWeyl& aw, Mask J) const {
  return d_.weyl().size() / static_cast<int>(aw.finiteProjection(J).size());
}

int BaseChangeContext::fSideCosets(const AffineWeyl& aw, Mask J) const {
  int fixedJ = 0;
  for (int w : aw.finiteProjection(J))
    if (theta_.applyWeyl(d_, w) == w) ++fixedJ;
  return static_cast<int>(rel_.relativeWeyl.size()) / fixedJ;
}

int BaseChangeContext::thetaFixedCosets(const AffineWeyl& aw, Mask J) const {
  auto H = aw.finiteProjection(J);
  const WeylGroup& W = d_.weyl();
  std::set<std::vector<int>> cosets, fixed;
  for (int w = 0; w < W.size(); ++w) {
    std::vector<int> c;
    for (int h : H) c.push_back(W.mul(w, h));
    std::sort(c.begin(), c.end());
    if (!cosets.insert(c).second) continue;
    std::vector<int> img;
    for (int x : c) img.push_back(theta_.applyWeyl(d_, x));
    std::sort(img.begin(), img.end());
    if (img == c) fixed.insert(c);
  }
  return static_cast<int>(fixed.size());
}

CheckOutcome verifySpectralCharacterization(const BaseChangeContext& ctx, const AffineWeyl& aw,
                                            const CentralElement& phi, Mask J) {
  CheckOutcome out;
  CentralElement b = ctx.baseChange(phi);
  MPoly lhs = ctx.fSideScalar(b), rhs = ctx.eSideScalarAtNorm(phi);
  if (lhs != rhs) {
    out.ok = false;
    out.detail = "ch_t(b phi) = " + pv(lhs) + " but ch_Nt(phi) = " + pv(rhs);
    return out;
  }
  // Fourier transforms differ by C = |W/Wbar_J| / |W^theta/Wbar_J^theta|.
  int dimE = ctx.eSideCosets(aw, J), dimF = ctx.fSideCosets(aw, J);
  MPoly fE = rhs * MPoly(rhs.nvars(), Rational(dimE));
  MPoly fF = lhs * MPoly(lhs.nvars(), Rational(dimF));
  Rational C(dimE, dimF);
  C.canonicalize();
  if (fE != fF * MPoly(fF.nvars(), C)) {
    out.ok = false;
    out.detail = "Fourier transforms are not proportional by " + formatRational(C);
    return out;
  }
  if (ctx.thetaFixedCosets(aw, J) != dimF) {
    out.ok = false;
    out.detail = "theta-fixed cosets of W/Wbar_J do not match |W^theta/Wbar_J^theta|";
    return out;
  }
  // Adjunction on monomials: t(N nu) = (Nt)(nu).
  for (const auto& [nu, c] : phi.coeffs) {
    MPoly direct = ctx.fSideScalar(CentralElement::point(ctx.normCochar(nu)));
    MPoly viaDual = ctx.dualNormValue(neg(nu));
    if (direct != viaDual) {
      out.ok = false;
      out.detail = "adjunction fails at nu = " + formatVec(nu);
      return out;
    }
  }
  return out;
}

CheckOutcome verifyBcChangeParahoric(const BaseChangeContext& ctx, const PrincipalSeriesModel& m,
                                     const CentralElement& phi, Mask J1, Mask J2) {
  CheckOutcome out;
  const HeckeAlgebra& H = m.calculus().algebra();
  if (!isThetaStableMask(ctx.theta(), J1) || !isThetaStableMask(ctx.theta(), J2)) {
    out.ok = false;
    out.detail = "parahorics must be theta-stable";
    return out;
  }
  HeckeElement h1 = H.toParahoric(phi, J1);
  HeckeElement h2 = H.changeParahoric(h1, J1, J2);
  if (h2 != H.toParahoric(phi, J2)) {
    out.ok = false;
    out.detail = "E-side change of parahoric differs from phi * 1_J2";
    return out;
  }
  // B_J^{-1} recovered from the principal series at each level.
  auto s1 = centralScalar(m, phi, J1);
  auto s2 = scalarRelative(m.act(h2), m.act(H.indicator(J2)));
  if (!s1.scalar || !s2.scalar) {
    out.ok = false;
    out.detail = "non-scalar action while reading B^{-1}";
    return out;
  }
  auto inv1 = inverseFromScalar(s1.value, ctx.datum().rank());
  auto inv2 = inverseFromScalar(s2.value, ctx.datum().rank());
  if (!inv1 || !inv2 || !(*inv1 == *inv2)) {
    out.ok = false;
    out.detail = "B_J^{-1} differs between levels";
    return out;
  }
  CentralElement b1 = ctx.baseChange(*inv1), b2 = ctx.baseChange(*inv2);
  if (!(b1 == b2)) {
    out.ok = false;
    out.detail = "b_1 and b_2 disagree";
    return out;
  }
  if (ctx.split()) {
    // Concrete F-side algebra: compare T-expansions.
    HeckeElement lhs = H.toParahoric(b2, J2);
    HeckeElement rhs = H.changeParahoric(H.toParahoric(b1, J1), J1, J2);
    if (lhs != rhs) {
      out.ok = false;
      out.detail = "split T-expansions differ after change of parahoric";
    }
  }
  return out;
}

CheckOutcome verifyBcConstantTerm(const BaseChangeContext& ctx, const CentralElement& phi, Mask M) {
  CheckOutcome out;
  const RootDatum& d = ctx.datum();
  if (!isThetaStableMask(ctx.theta(), M)) {
    out.ok = false;
    out.detail = "Levi must be theta-stable";
    return out;
  }
  std::vector<IMat> relM;
  for (int w : d.parabolicSubgroup(M))
    if (ctx.theta().applyWeyl(d, w) == w) relM.push_back(d.weyl().matrix(w));
  // Route 1: base change, then view over W_M^theta.
  CentralElement route1 = ctx.baseChange(phi);
  // Route 2: view over W_M, push each W_M-orbit sum through the norm.
  auto ct = constantTermSpectral(d, phi, M);
  if (!ct) {
    out.ok = false;
    out.detail = "constant term is not W_M-invariant";
    return out;
  }
  CentralElement route2;
  for (const auto& [l, c] : ct->orbitCoordinates) {
    CentralElement orbit = levelOrbitSum(d, l, M);
    CentralElement pushed;
    for (const auto& [nu, a] : orbit.coeffs) pushed += CentralElement::point(ctx.normCochar(nu)).scaled(a);
    if (!pushed.isInvariantUnder(relM)) {
      out.ok = false;
      out.detail = "norm of a W_M-orbit sum is not W_M^theta-invariant";
      return out;
    }
    route2 += pushed.scaled(c);
  }
  if (!route1.isInvariantUnder(relM) || !(route1 == route2)) {
    out.ok = false;
    out.detail = "constant term and base change do not commute";
  }
  return out;
}

CheckOutcome verifyBcWConjugation(const BaseChangeContext& ctx, const AffineWeyl& aw, const CentralElement& phi,
                                  int w, Mask J) {
  CheckOutcome out;
  const RootDatum& d = ctx.datum();
  const WeylGroup& W = d.weyl();
  if (ctx.theta().applyWeyl(d, w) != w) {
    out.ok = false;
    out.detail = "w is not theta-fixed";
    return out;
  }
  // B^{-1}(^w phi) = B^{-1}(phi): the stored function is W-invariant.
  CentralElement moved;
  for (const auto& [l, c] : phi.coeffs) moved.coeffs[W.act(w, l)] = c;
  if (!(moved == phi)) {
    out.ok = false;
    out.detail = "stored function is not invariant under w";
    return out;
  }
  CentralElement b = ctx.baseChange(phi), bw;
  for (const auto& [l, c] : b.coeffs) bw.coeffs[W.act(w, l)] = c;
  if (!(bw == ctx.baseChange(moved)) || !(bw == b)) {
    out.ok = false;
    out.detail = "b(^w phi) differs from ^w(b phi)";
    return out;
  }
  // Label transport: x Wbar_J -> x w^{-1} (w Wbar_J w^{-1}) is a bijection of coset tables.
  auto Hj = aw.finiteProjection(J);
  std::vector<int> Hw;
  for (int h : Hj) Hw.push_back(W.mul(W.mul(w, h), W.inverse(w)));
  auto c1 = doubleCosets(d, 0, Hj), c2 = doubleCosets(d, 0, Hw);
  if (c1.size() != c2.size()) {
    out.ok = false;
    out.detail = "conjugate parahoric has a different coset count";
    return out;
  }
  std::map<int, int> owner2;
  for (size_t i = 0; i < c2.size(); ++i)
    for (int x : c2[i].members) owner2[x] = static_cast<int>(i);
  std::set<int> hit;
  for (const auto& c : c1) {
    std::set<int> targets;
    for (int x : c.members) targets.insert(owner2[W.mul(x, W.inverse(w))]);
    if (targets.size() != 1 || !hit.insert(*targets.begin()).second) {
      out.ok = false;
      out.detail = "coset labels are not transported bijectively";
      return out;
    }
  }
  return out;
}

CheckOutcome verifyBcHomomorphism(const BaseChangeContext& ctx, const CentralElement& f, const CentralElement& g,
                                  const HeckeAlgebra* H) {
  CheckOutcome out;
  CentralElement lhs = ctx.baseChange(f * g);
  CentralElement rhs = ctx.baseChange(f) * ctx.baseChange(g);
  if (!(lhs == rhs)) {
    out.ok = false;
    out.detail = "b(f*g) = " + lhs.describe() + " but b(f)*b(g) = " + rhs.describe();
    return out;
  }
  if (H && H->multiply(H->fromCentral(f), H->fromCentral(g)) != H->fromCentral(f * g)) {
    out.ok = false;
    out.detail = "Bernstein map is not multiplicative";
  }
  return out;
}

CheckOutcome verifySplitBaseChange(const BaseChangeContext& ctx, const HeckeAlgebra& H, const IVec& mu, Mask J) {
  CheckOutcome out;
  if (!ctx.split()) {
    out.ok = false;
    out.detail = "data is not split";
    return out;
  }
  const RootDatum& d = ctx.datum();
  CentralElement b = ctx.baseChange(CentralElement::orbitSum(d, mu));
  CentralElement target = CentralElement::orbitSum(d, scale(mu, ctx.r()));
  if (!(b == target)) {
    out.ok = false;
    out.detail = "b(z_mu) = " + b.describe() + " is not z_{r mu}";
    return out;
  }
  if (H.toParahoric(b, J) != H.toParahoric(target, J)) {
    out.ok = false;
    out.detail = "J-level T-expansions differ";
  }
  return out;
}

}  // namespace parahoric
