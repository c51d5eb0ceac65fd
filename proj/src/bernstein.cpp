#include "parahoric/bernstein.hpp"

#include <stdexcept>

namespace parahoric {

void BernsteinForm::add(const IVec& lambda, int u, const Laurent& c) {
  if (c.isZero()) return;
  auto [it, fresh] = terms.emplace(std::make_pair(lambda, u), c);
  if (fresh) return;
  it->second += c;
  if (it->second.isZero()) terms.erase(it);
}

void BernsteinForm::addScaled(const BernsteinForm& o, const Laurent& c) {
  for (const auto& [k, a] : o.terms) add(k.first, k.second, a * c);
}

BernsteinCalculus::BernsteinCalculus(const HeckeAlgebra& H) : H_(H), aw_(H.group()), d_(H.datum()) {
  if (!H.equalParameters()) throw std::invalid_argument("Bernstein calculus implemented for equal parameters only");
  AffElem s0 = aw_.generator(0);
  s0Coroot_ = aw_.lambda(s0);
  s0Finite_ = s0.w;
  if (!d_.isDominant(s0Coroot_)) throw std::logic_error("highest coroot is not dominant");
  s0TranslationLength_ = aw_.length(aw_.translation(s0Coroot_));
}

BernsteinForm BernsteinCalculus::theta(const IVec& lambda) {
  BernsteinForm f;
  f.add(lambda, 0, Laurent(1));
  return f;
}

BernsteinForm BernsteinCalculus::finiteBasis(int w) const {
  BernsteinForm f;
  f.add(IVec(d_.rank(), 0), w, Laurent(1));
  return f;
}

BernsteinForm BernsteinCalculus::leftMulSimple(int k, const BernsteinForm& f) const {
  const WeylGroup& W = d_.weyl();
  const int s = W.simple(k);
  const IVec& a = d_.alpha(k);
  const IVec& ac = d_.coroot(k);
  const Laurent q = Laurent::q(), qm1 = Laurent::q() - Laurent(1);
  BernsteinForm r;
  for (const auto& [key, c] : f.terms) {
    const auto& [lam, u] = key;
    int pr = dot(a, lam);
    IVec slam = sub(lam, scale(ac, pr));
    // theta_{s lambda} T_s T_u
    int su = W.mul(s, u);
    if (W.length(su) > W.length(u)) {
      r.add(slam, su, c);
    } else {
      r.add(slam, u, c * qm1);
      r.add(slam, su, c * q);
    }
    // (q-1) * geometric quotient, times T_u
    Laurent cq = c * qm1;
    if (pr > 0) {
      for (int i = 0; i < pr; ++i) r.add(sub(lam, scale(ac, i)), u, cq);
    } else if (pr < 0) {
      for (int i = 1; i <= -pr; ++i) r.add(add(lam, scale(ac, i)), u, -cq);
    }
  }
  return r;
}

BernsteinForm BernsteinCalculus::leftMulFinite(int w, const BernsteinForm& f) const {
  const auto& word = d_.weyl().word(w);
  BernsteinForm r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = leftMulSimple(*it, r);
  return r;
}

BernsteinForm BernsteinCalculus::rightMulSimple(const BernsteinForm& f, int k) const {
  const WeylGroup& W = d_.weyl();
  const int s = W.simple(k);
  const Laurent q = Laurent::q(), qm1 = Laurent::q() - Laurent(1);
  BernsteinForm r;
  for (const auto& [key, c] : f.terms) {
    const auto& [lam, u] = key;
    int us = W.mul(u, s);
    if (W.length(us) > W.length(u)) {
      r.add(lam, us, c);
    } else {
      r.add(lam, u, c * qm1);
      r.add(lam, us, c * q);
    }
  }
  return r;
}

BernsteinForm BernsteinCalculus::rightMulSimpleInverse(const BernsteinForm& f, int k) const {
  const WeylGroup& W = d_.weyl();
  const int s = W.simple(k);
  const Laurent qinv = Laurent::q(-1);
  BernsteinForm r;
  for (const auto& [key, c] : f.terms) {
    const auto& [lam, u] = key;
    int us = W.mul(u, s);
    if (W.length(us) < W.length(u)) {
      r.add(lam, us, c);
    } else {
      r.add(lam, us, c * qinv);
      r.add(lam, u, c * (qinv - Laurent(1)));
    }
  }
  return r;
}

const BernsteinForm& BernsteinCalculus::finiteTimesTheta(int w, const IVec& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ftMemo_.find({w, lambda});
    if (it != ftMemo_.end()) return it->second;
  }
  BernsteinForm f;
  if (w == 0) {
    f = theta(lambda);
  } else {
    // T_w = T_s T_{sw} with the first letter of the reduced word.
    int k = d_.weyl().word(w).front();
    int rest = d_.weyl().mul(d_.weyl().simple(k), w);
    f = leftMulSimple(k, finiteTimesTheta(rest, lambda));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return ftMemo_.emplace(std::make_pair(w, lambda), std::move(f)).first->second;
}

BernsteinForm BernsteinCalculus::rightMulTheta(const BernsteinForm& f, const IVec& mu) const {
  BernsteinForm r;
  for (const auto& [key, c] : f.terms) {
    const auto& [lam, u] = key;
    for (const auto& [k2, c2] : finiteTimesTheta(u, mu).terms) r.add(add(lam, k2.first), k2.second, c * c2);
  }
  return r;
}

BernsteinForm BernsteinCalculus::multiply(const BernsteinForm& a, const BernsteinForm& b) const {
  BernsteinForm r;
  for (const auto& [key, c] : b.terms) {
    const auto& [mu, v] = key;
    BernsteinForm part = rightMulTheta(a, mu);
    for (int k : d_.weyl().word(v)) part = rightMulSimple(part, k);
    r.addScaled(part, c);
  }
  return r;
}

BernsteinForm BernsteinCalculus::omegaForm(const AffElem& omega) const {
  // omega = t_lambda u with lambda dominant: T_omega = v^{l(t_lambda)} theta_lambda T_{u^{-1}}^{-1}.
  IVec lam = aw_.lambda(omega);
  if (!d_.isDominant(lam)) throw std::logic_error("length-zero element with non-dominant translation");
  BernsteinForm f = theta(lam);
  const auto& word = d_.weyl().word(d_.weyl().inverse(omega.w));
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = rightMulSimpleInverse(f, *it);
  BernsteinForm r;
  r.addScaled(f, Laurent::v(aw_.length(aw_.translation(lam))));
  return r;
}

BernsteinForm BernsteinCalculus::fromBasis(const AffElem& x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = basisMemo_.find(x);
    if (it != basisMemo_.end()) return it->second;
  }
  BernsteinForm f;
  auto rd = aw_.rightDescents(x);
  if (rd.empty()) {
    f = omegaForm(x);
  } else {
    int k = rd.front();
    BernsteinForm prev = fromBasis(aw_.mul(x, aw_.generator(k)));
    if (k > 0) {
      f = rightMulSimple(prev, k);
    } else {
      // T_{s_0} = v^{l(t)} theta_{highest coroot} T_{s_alpha}^{-1}
      f = rightMulTheta(prev, s0Coroot_);
      const auto& word = d_.weyl().word(s0Finite_);
      for (auto it = word.rbegin(); it != word.rend(); ++it) f = rightMulSimpleInverse(f, *it);
      BernsteinForm g;
      g.addScaled(f, Laurent::v(s0TranslationLength_));
      f = std::move(g);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  basisMemo_.emplace(x, f);
  return f;
}

BernsteinForm BernsteinCalculus::fromHecke(const HeckeElement& h) const {
  BernsteinForm r;
  for (const auto& [x, c] : h.terms()) r.addScaled(fromBasis(x), c);
  return r;
}

BernsteinForm BernsteinCalculus::fromCentral(const CentralElement& z) const {
  BernsteinForm r;
  for (const auto& [l, c] : z.coeffs) r.add(l, 0, c);
  return r;
}

HeckeElement BernsteinCalculus::toHecke(const BernsteinForm& f) const {
  HeckeElement r = H_.zero();
  for (const auto& [key, c] : f.terms) r.addScaled(H_.rightMulBasis(H_.theta(key.first), aw_.finite(key.second)), c);
  return r;
}

}  // namespace parahoric
