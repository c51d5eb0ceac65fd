#include "parahoric/cosets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace parahoric {

std::vector<int> minCosetReps(const RootDatum& d, Mask M) {
  const WeylGroup& W = d.weyl();
  std::vector<int> out;
  for (int w = 0; w < W.size(); ++w) {
    bool ok = true;
    int winv = W.inverse(w);
    for (int k = 1; k <= d.semisimpleRank() && ok; ++k) {
      if (!hasBit(M, k)) continue;
      int r = d.rootIndex(d.alpha(k));
      ok = d.roots()[d.rootAct(winv, r)].positive;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<DoubleCoset> doubleCosets(const RootDatum& d, Mask M, const std::vector<int>& H) {
  const WeylGroup& W = d.weyl();
  std::vector<int> WM = d.parabolicSubgroup(M);
  std::vector<int> owner(W.size(), -1);
  std::vector<DoubleCoset> out;
  // Weyl indices are in ShortLex order, so the first uncovered element is the
  // canonical minimal representative of its double coset.
  for (int w = 0; w < W.size(); ++w) {
    if (owner[w] >= 0) continue;
    DoubleCoset dc;
    dc.rep = w;
    std::set<int> mem;
    for (int u : WM)
      for (int h : H) mem.insert(W.mul(W.mul(u, w), h));
    dc.members.assign(mem.begin(), mem.end());
    for (int x : dc.members) owner[x] = static_cast<int>(out.size());
    out.push_back(dc);
  }
  return out;
}

CosetTable pgjRepresentatives(const AffineWeyl& aw, Mask M, Mask J) {
  CosetTable t;
  t.kind = "double";
  for (const auto& dc : doubleCosets(aw.datum(), M, aw.finiteProjection(J))) t.reps.push_back(aw.finite(dc.rep));
  t.thetaFixed.assign(t.reps.size(), false);
  t.thetaStable.assign(t.reps.size(), false);
  return t;
}

bool isThetaStableMask(const DiagramAutomorphism& t, Mask m) {
  for (size_t k = 0; k < t.perm.size(); ++k)
    if (hasBit(m, static_cast<int>(k)) && !hasBit(m, t.perm[k])) return false;
  return true;
}

ThetaFixedReport thetaFixedReps(const AffineWeyl& aw, Mask M, Mask J, const DiagramAutomorphism& t) {
  if (!isThetaStableMask(t, M) || !isThetaStableMask(t, J))
    throw std::invalid_argument("parabolic and parahoric must be theta-stable");
  const RootDatum& d = aw.datum();
  auto cosets = doubleCosets(d, M, aw.finiteProjection(J));
  std::vector<int> owner(d.weyl().size(), -1);
  for (size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i].members) owner[x] = static_cast<int>(i);
  std::vector<int> minimal = minCosetReps(d, M);
  std::set<int> minimalSet(minimal.begin(), minimal.end());

  ThetaFixedReport rep;
  rep.table.kind = "double";
  for (size_t i = 0; i < cosets.size(); ++i) {
    int img = owner[t.applyWeyl(d, cosets[i].rep)];
    bool stable = img == static_cast<int>(i);
    int chosen = cosets[i].rep;
    bool fixed = false;
    if (stable) {
      ++rep.stableCosets;
      for (int x : cosets[i].members)  // ascending index = ShortLex order
        if (minimalSet.count(x) && t.applyWeyl(d, x) == x) {
          chosen = x;
          fixed = true;
          break;
        }
      if (!fixed) rep.failures.push_back(static_cast<int>(i));
    }
    rep.table.reps.push_back(aw.finite(chosen));
    rep.table.thetaFixed.push_back(fixed);
    rep.table.thetaStable.push_back(stable);
  }
  return rep;
}

AffElem iwasawaCell(const AffineWeyl& aw, const AffElem& x, Mask J) {
  AffElem best = x;
  bool first = true;
  for (const auto& y : aw.parahoricGroup(J)) {
    AffElem c = aw.mul(x, y);
    if (first || aw.shortLexLess(c, best)) best = c;
    first = false;
  }
  return best;
}

std::vector<int> mSideReps(const AffineWeyl& aw, Mask M, int w, Mask J) {
  const RootDatum& d = aw.datum();
  const WeylGroup& W = d.weyl();
  std::set<int> conj;
  for (int h : aw.finiteProjection(J)) conj.insert(W.mul(W.mul(w, h), W.inverse(w)));
  std::vector<int> Hp;
  for (int u : d.parabolicSubgroup(M))
    if (conj.count(u)) Hp.push_back(u);
  std::set<int> covered;
  std::vector<int> reps;
  for (int u : d.parabolicSubgroup(M)) {  // ascending = ShortLex
    if (covered.count(u)) continue;
    reps.push_back(u);
    for (int h : Hp) covered.insert(W.mul(u, h));
  }
  return reps;
}

CellLabelResult cellLabelCheck(const AffineWeyl& aw, const IVec& nu, const IVec& lambda, int tau, int tau0, int w,
                         Mask J, const DiagramAutomorphism& t) {
  int tw = t.applyWeyl(aw.datum(), w);
  AffElem x1 = aw.mul(aw.mul(aw.translation(neg(lambda)), aw.finite(tau0)), aw.finite(w));
  AffElem x2 = aw.mul(aw.mul(aw.translation(nu), aw.finite(tau)), aw.finite(tw));
  CellLabelResult r;
  r.cellsEqual = iwasawaCell(aw, x1, J) == iwasawaCell(aw, x2, J);
  r.thetaFixed = tw == w;
  r.tauEqual = tau == tau0;
  r.lambdaMatches = lambda == neg(nu);
  return r;
}

CellLabelSweep cellLabelSweep(const AffineWeyl& aw, Mask M, Mask J, const DiagramAutomorphism& t, int cutoff) {
  const RootDatum& d = aw.datum();
  CellLabelSweep sweep;
  auto table = thetaFixedReps(aw, M, J, t).table;
  auto groupJ = aw.parahoricGroup(J);
  std::set<AffElem> groupSet(groupJ.begin(), groupJ.end());
  std::set<IVec> translations;
  for (const auto& x : aw.ball(cutoff + d.weyl().length(d.weyl().longest()))) translations.insert(aw.lambda(x));
  for (const auto& wr : table.reps) {
    int w = wr.w;
    int tw = t.applyWeyl(d, w);
    auto reps0 = mSideReps(aw, M, w, J);
    auto reps1 = mSideReps(aw, M, tw, J);
    for (int tau0 : reps0)
      for (const auto& lam : translations) {
        AffElem x1 = aw.mul(aw.mul(aw.translation(neg(lam)), aw.finite(tau0)), aw.finite(w));
        if (aw.length(x1) > cutoff) continue;
        AffElem x1inv = aw.inverse(x1);
        for (int tau : reps1)
          for (const auto& nu : translations) {
            AffElem x2 = aw.mul(aw.mul(aw.translation(nu), aw.finite(tau)), aw.finite(tw));
            if (aw.length(x2) > cutoff) continue;
            ++sweep.tuples;
            bool equal = groupSet.count(aw.mul(x1inv, x2)) > 0;
            if (!equal) continue;
            ++sweep.equalCells;
            bool ok = tw == w && tau == tau0 && lam == neg(nu);
            if (!ok) {
              ++sweep.violations;
              if (sweep.firstViolation.empty())
                sweep.firstViolation = "w=" + d.weyl().wordString(w) + " tau=" + d.weyl().wordString(tau) +
                                       " tau0=" + d.weyl().wordString(tau0) + " lambda=" + formatVec(lam) +
                                       " nu=" + formatVec(nu);
            }
          }
      }
  }
  return sweep;
}

bool minimalRepsPreservePositivity(const AffineWeyl& aw, Mask M) {
  const RootDatum& d = aw.datum();
  AlcovePoint p = aw.baseBarycenter();
  for (int w : minCosetReps(d, M)) {
    int winv = d.weyl().inverse(w);
    for (int r : d.positiveRoots()) {
      const Root& rt = d.roots()[r];
      bool inM = true;
      for (int k = 1; k <= d.semisimpleRank(); ++k)
        if (rt.coeffs[k - 1] != 0 && !hasBit(M, k)) inM = false;
      if (!inM) continue;
      if (!d.roots()[d.rootAct(winv, r)].positive) return false;
    }
    AlcovePoint wp = aw.act(aw.finite(w), p);
    for (int k = 1; k <= d.semisimpleRank(); ++k) {
      if (!hasBit(M, k)) continue;
      Rational v = 0;
      for (int i = 0; i < d.rank(); ++i) v += d.alpha(k)[i] * wp[i];
      if (v <= 0) return false;
    }
  }
  return true;
}

}  // namespace parahoric
