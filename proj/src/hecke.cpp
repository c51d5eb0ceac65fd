#include "parahoric/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parahoric {

// ---------------------------------------------------------------- HeckeElement

Laurent HeckeElement::coeff(const AffElem& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Laurent() : it->second;
}

void HeckeElement::add(const AffElem& x, const Laurent& c) {
  if (c.isZero()) return;
  auto [it, fresh] = terms_.emplace(x, c);
  if (fresh) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

void HeckeElement::addScaled(const HeckeElement& o, const Laurent& c) {
  for (const auto& [x, a] : o.terms_) add(x, a * c);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, a] : o.terms_) add(x, a);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, a] : o.terms_) add(x, -a);
  return *this;
}

HeckeElement HeckeElement::scaled(const Laurent& c) const {
  HeckeElement r(tag_);
  if (c.isZero()) return r;
  for (const auto& [x, a] : terms_) r.terms_.emplace(x, a * c);
  return r;
}

std::optional<HeckeElement> HeckeElement::divided(const Laurent& d) const {
  HeckeElement r(tag_);
  for (const auto& [x, a] : terms_) {
    auto qt = a.divideExact(d);
    if (!qt) return std::nullopt;
    r.terms_.emplace(x, *qt);
  }
  return r;
}

int HeckeElement::maxLength(const AffineWeyl& aw) const {
  int m = 0;
  for (const auto& [x, a] : terms_) m = std::max(m, aw.length(x));
  return m;
}

// -------------------------------------------------------------- CentralElement

CentralElement CentralElement::orbitSum(const RootDatum& d, const IVec& mu) {
  CentralElement z;
  for (const auto& l : d.orbit(mu)) z.coeffs[l] = Laurent(1);
  return z;
}

CentralElement CentralElement::point(const IVec& lambda) {
  CentralElement z;
  z.coeffs[lambda] = Laurent(1);
  return z;
}

bool CentralElement::isInvariant(const RootDatum& d) const {
  for (const auto& [l, c] : coeffs)
    for (int k = 1; k <= d.semisimpleRank(); ++k) {
      auto it = coeffs.find(d.reflect(k, l));
      if (it == coeffs.end() || it->second != c) return false;
    }
  return true;
}

bool CentralElement::isInvariantUnder(const std::vector<IMat>& group) const {
  for (const auto& [l, c] : coeffs)
    for (const auto& g : group) {
      auto it = coeffs.find(matVec(g, l));
      if (it == coeffs.end() || it->second != c) return false;
    }
  return true;
}

CentralElement CentralElement::operator*(const CentralElement& o) const {
  CentralElement r;
  for (const auto& [a, ca] : coeffs)
    for (const auto& [b, cb] : o.coeffs) {
      Laurent& slot = r.coeffs[add(a, b)];
      slot += ca * cb;
    }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();) it = it->second.isZero() ? r.coeffs.erase(it) : ++it;
  return r;
}

CentralElement& CentralElement::operator+=(const CentralElement& o) {
  for (const auto& [l, c] : o.coeffs) {
    Laurent& slot = coeffs[l];
    slot += c;
    if (slot.isZero()) coeffs.erase(l);
  }
  return *this;
}

CentralElement CentralElement::scaled(const Laurent& c) const {
  CentralElement r;
  if (c.isZero()) return r;
  for (const auto& [l, a] : coeffs) r.coeffs[l] = a * c;
  return r;
}

std::optional<std::map<IVec, Laurent>> CentralElement::orbitCoordinates(const RootDatum& d) const {
  if (!isInvariant(d)) return std::nullopt;
  std::map<IVec, Laurent> out;
  for (const auto& [l, c] : coeffs)
    if (d.isDominant(l)) out[l] = c;
  return out;
}

std::string CentralElement::describe() const {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : coeffs) {
    if (!s.empty()) s += ";";
    s += formatVec(l) + "=" + c.serialize();
  }
  return s;
}

// ---------------------------------------------------------------- HeckeAlgebra

namespace {

// Coxeter order of s_i s_j, or 0 when infinite (checked up to a generous bound).
int coxeterOrder(const AffineWeyl& aw, int i, int j) {
  AffElem p = aw.mul(aw.generator(i), aw.generator(j));
  AffElem x = p;
  for (int m = 1; m <= 12; ++m) {
    if (x == aw.identity()) return m;
    x = aw.mul(x, p);
  }
  return 0;
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(const AffineWeyl& aw, std::vector<int> weights, StructureCache* cache)
    : aw_(aw), weights_(std::move(weights)), cache_(cache) {
  const int g = aw_.numGenerators();
  if (weights_.empty()) weights_.assign(g, 1);
  if (static_cast<int>(weights_.size()) != g) throw std::invalid_argument("parameter list has wrong length");
  for (int c : weights_)
    if (c < 1) throw std::invalid_argument("parameter weights must be positive");
  // Conjugate generators must carry equal parameters.
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      int m = coxeterOrder(aw_, i, j);
      if (m % 2 == 1 && weights_[i] != weights_[j])
        throw std::invalid_argument("parameters differ on conjugate generators");
    }
  for (const auto& conj : aw_.omega().conjugation)
    for (int k = 0; k < g; ++k)
      if (weights_[k] != weights_[conj[k]]) throw std::invalid_argument("parameters not stable under Omega");
  tag_ = "q";
  if (!equalParameters()) {
    tag_ += ":";
    for (int k = 0; k < g; ++k) tag_ += (k ? "," : "") + std::to_string(weights_[k]);
  }
}

bool HeckeAlgebra::equalParameters() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int c) { return c == 1; });
}

int HeckeAlgebra::weightedLength(const AffElem& x) const {
  if (equalParameters()) return aw_.length(x);
  int s = 0;
  for (int k : aw_.reducedWord(x).letters) s += weights_[k];
  return s;
}

void HeckeAlgebra::checkTag(const HeckeElement& h) const {
  if (h.tag() != tag_) throw std::invalid_argument("Hecke elements from algebras with different parameters");
}

HeckeElement HeckeAlgebra::basis(const AffElem& x) const {
  HeckeElement h(tag_);
  h.add(x, Laurent(1));
  return h;
}

HeckeElement HeckeAlgebra::rightMulGenerator(const HeckeElement& h, int k) const {
  const AffElem s = aw_.generator(k);
  const Laurent qs = parameter(k);
  HeckeElement r(tag_);
  for (const auto& [x, c] : h.terms()) {
    AffElem y = aw_.mul(x, s);
    if (aw_.length(y) > aw_.length(x)) {
      r.add(y, c);
    } else {
      r.add(x, c * (qs - Laurent(1)));
      r.add(y, c * qs);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::leftMulGenerator(int k, const HeckeElement& h) const {
  const AffElem s = aw_.generator(k);
  const Laurent qs = parameter(k);
  HeckeElement r(tag_);
  for (const auto& [x, c] : h.terms()) {
    AffElem y = aw_.mul(s, x);
    if (aw_.length(y) > aw_.length(x)) {
      r.add(y, c);
    } else {
      r.add(x, c * (qs - Laurent(1)));
      r.add(y, c * qs);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::rightMulGeneratorInverse(const HeckeElement& h, int k) const {
  const AffElem s = aw_.generator(k);
  const Laurent qinv = Laurent::q(-weights_[k]);
  HeckeElement r(tag_);
  for (const auto& [x, c] : h.terms()) {
    AffElem y = aw_.mul(x, s);
    if (aw_.length(y) < aw_.length(x)) {
      r.add(y, c);
    } else {
      r.add(y, c * qinv);
      r.add(x, c * (qinv - Laurent(1)));
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::rightMulOmega(const HeckeElement& h, const AffElem& w) const {
  HeckeElement r(tag_);
  for (const auto& [x, c] : h.terms()) r.add(aw_.mul(x, w), c);
  return r;
}

HeckeElement HeckeAlgebra::leftMulOmega(const AffElem& w, const HeckeElement& h) const {
  HeckeElement r(tag_);
  for (const auto& [x, c] : h.terms()) r.add(aw_.mul(w, x), c);
  return r;
}

HeckeElement HeckeAlgebra::rightMulBasis(const HeckeElement& h, const AffElem& x) const {
  auto wd = aw_.reducedWord(x);
  HeckeElement r = rightMulOmega(h, wd.omega);
  for (int k : wd.letters) r = rightMulGenerator(r, k);
  return r;
}

HeckeElement HeckeAlgebra::leftMulBasis(const AffElem& x, const HeckeElement& h) const {
  auto wd = aw_.reducedWord(x);
  HeckeElement r = h;
  for (auto it = wd.letters.rbegin(); it != wd.letters.rend(); ++it) r = leftMulGenerator(*it, r);
  return leftMulOmega(wd.omega, r);
}

HeckeElement HeckeAlgebra::rightMulBasisInverse(const HeckeElement& h, const AffElem& x) const {
  auto wd = aw_.reducedWord(x);
  HeckeElement r = h;
  for (auto it = wd.letters.rbegin(); it != wd.letters.rend(); ++it) r = rightMulGeneratorInverse(r, *it);
  return rightMulOmega(r, aw_.inverse(wd.omega));
}

HeckeElement HeckeAlgebra::basisProduct(const AffElem& x, const AffElem& y) const {
  {
    std::lock_guard<std::mutex> lock(memoMu_);
    auto it = productMemo_.find({x, y});
    if (it != productMemo_.end()) return it->second;
  }
  const std::string xk = aw_.key(x), yk = aw_.key(y);
  HeckeElement r(tag_);
  std::optional<std::string> stored;
  if (cache_) stored = cache_->lookup(datum().label(), tag_, xk, yk);
  if (stored) {
    r = parse(*stored);
  } else {
    r = rightMulBasis(basis(x), y);
    if (cache_) cache_->insert(datum().label(), tag_, aw_.length(x) + aw_.length(y), xk, yk, serialize(r));
  }
  std::lock_guard<std::mutex> lock(memoMu_);
  productMemo_.emplace(std::make_pair(x, y), r);
  return r;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  checkTag(a);
  checkTag(b);
  HeckeElement r(tag_);
  if (a.size() * b.size() <= 64) {
    for (const auto& [x, ca] : a.terms())
      for (const auto& [y, cb] : b.terms()) r.addScaled(basisProduct(x, y), ca * cb);
  } else if (b.size() <= a.size()) {
    for (const auto& [y, cb] : b.terms()) r.addScaled(rightMulBasis(a, y), cb);
  } else {
    for (const auto& [x, ca] : a.terms()) r.addScaled(leftMulBasis(x, b), ca);
  }
  return r;
}

void HeckeAlgebra::canonicalSplit(const IVec& lambda, IVec& l1, IVec& l2) const {
  const auto& basisVecs = datum().dominantBasis();
  QVec c;
  if (!coordinatesIn(basisVecs, lambda, c)) throw std::logic_error("dominant basis does not span the lattice");
  const int n = datum().rank();
  l1.assign(n, 0);
  l2.assign(n, 0);
  for (size_t i = 0; i < basisVecs.size(); ++i) {
    if (c[i].get_den() != 1) throw std::logic_error("dominant basis is not a lattice basis");
    int ci = static_cast<int>(c[i].get_num().get_si());
    if (ci > 0) l1 = add(l1, scale(basisVecs[i], ci));
    if (ci < 0) l2 = add(l2, scale(basisVecs[i], -ci));
  }
}

HeckeElement HeckeAlgebra::thetaFrom(const IVec& l1, const IVec& l2) const {
  if (!datum().isDominant(l1) || !datum().isDominant(l2))
    throw std::invalid_argument("theta decomposition needs dominant parts");
  AffElem t1 = aw_.translation(l1), t2 = aw_.translation(l2);
  HeckeElement h = rightMulBasisInverse(basis(t1), t2);
  return h.scaled(Laurent::v(weightedLength(t2) - weightedLength(t1)));
}

HeckeElement HeckeAlgebra::theta(const IVec& lambda) const {
  {
    std::lock_guard<std::mutex> lock(memoMu_);
    auto it = thetaMemo_.find(lambda);
    if (it != thetaMemo_.end()) return it->second;
  }
  IVec l1, l2;
  canonicalSplit(lambda, l1, l2);
  HeckeElement h = thetaFrom(l1, l2);
  std::lock_guard<std::mutex> lock(memoMu_);
  thetaMemo_.emplace(lambda, h);
  return h;
}

HeckeElement HeckeAlgebra::indicator(Mask J) const {
  HeckeElement h(tag_);
  for (const auto& w : aw_.parahoricGroup(J)) h.add(w, Laurent(1));
  return h;
}

Laurent HeckeAlgebra::poincare(Mask J) const {
  Laurent p;
  for (const auto& w : aw_.parahoricGroup(J)) p += Laurent::q(weightedLength(w));
  return p;
}

HeckeElement HeckeAlgebra::fromCentral(const CentralElement& z) const {
  HeckeElement h(tag_);
  for (const auto& [l, c] : z.coeffs) h.addScaled(theta(l), c);
  return h;
}

HeckeElement HeckeAlgebra::bernsteinFunction(const IVec& mu) const {
  return fromCentral(CentralElement::orbitSum(datum(), mu));
}

HeckeElement HeckeAlgebra::toParahoric(const CentralElement& z, Mask J) const {
  HeckeElement zh = fromCentral(z);
  HeckeElement r(tag_);
  for (const auto& w : aw_.parahoricGroup(J)) r += rightMulBasis(zh, w);
  return r;
}

HeckeElement HeckeAlgebra::changeParahoric(const HeckeElement& h, Mask J1, Mask J2) const {
  checkTag(h);
  if ((J1 & ~J2) != 0) throw std::invalid_argument("change of parahoric needs J1 contained in J2");
  if (!aw_.isProperParahoric(J2)) throw std::invalid_argument("target parahoric is not proper");
  HeckeElement r(tag_);
  for (const auto& w : aw_.parahoricGroup(J2)) r += rightMulBasis(h, w);
  auto out = r.divided(poincare(J1));
  if (!out) throw std::domain_error("change of parahoric: input is not right 1_J1-invariant");
  return *out;
}

bool HeckeAlgebra::commutesWith(const HeckeElement& h, const HeckeElement& g) const {
  return multiply(h, g) == multiply(g, h);
}

bool HeckeAlgebra::isCentral(const HeckeElement& h) const {
  checkTag(h);
  for (int k = 0; k < aw_.numGenerators(); ++k)
    if (rightMulGenerator(h, k) != leftMulGenerator(k, h)) return false;
  for (const auto& w : aw_.omega().elements)
    if (rightMulOmega(h, w) != leftMulOmega(w, h)) return false;
  // theta_lambda is a scalar multiple of T_{t_lambda} for dominant lambda.
  for (const auto& l : datum().dominantBasis()) {
    AffElem t = aw_.translation(l);
    if (rightMulBasis(h, t) != leftMulBasis(t, h)) return false;
  }
  return true;
}

bool HeckeAlgebra::isBiInvariant(const HeckeElement& h, Mask J) const {
  for (int k = 0; k < aw_.numGenerators(); ++k) {
    if (!hasBit(J, k)) continue;
    HeckeElement target = h.scaled(parameter(k));
    if (leftMulGenerator(k, h) != target || rightMulGenerator(h, k) != target) return false;
  }
  return true;
}

HeckeElement HeckeAlgebra::iota(const HeckeElement& h) const {
  HeckeElement r(tag_);
  for (const auto& [x, c] : h.terms()) r.add(aw_.inverse(x), c);
  return r;
}

std::string HeckeAlgebra::serialize(const HeckeElement& h) const {
  if (h.isZero()) return "0";
  std::string s;
  for (const auto& [x, c] : h.terms()) {
    if (!s.empty()) s += ";";
    s += aw_.key(x) + "=" + c.serialize();
  }
  return s;
}

HeckeElement HeckeAlgebra::parse(const std::string& s) const {
  HeckeElement h(tag_);
  if (s == "0") return h;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed Hecke term: " + item);
    h.add(aw_.parseKey(item.substr(0, eq)), Laurent::parse(item.substr(eq + 1)));
  }
  return h;
}

}  // namespace parahoric
