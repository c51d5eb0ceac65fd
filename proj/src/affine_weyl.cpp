#include "parahoric/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parahoric {

AffineWeyl::AffineWeyl(RootDatum d) : d_(std::move(d)) {
  if (d_.rank() > kMaxRank) throw std::invalid_argument("lattice rank above the supported maximum");
  numPos_ = static_cast<int>(d_.positiveRoots().size());
  const Root& top = d_.roots()[d_.highestRoot()];
  IMat refl = identityMatrix(d_.rank());
  for (int i = 0; i < d_.rank(); ++i)
    for (int j = 0; j < d_.rank(); ++j) refl[i][j] -= top.coroot[i] * top.covector[j];
  s0_ = translation(top.coroot);
  s0_.w = d_.weyl().find(refl);
  buildOmega();
}

AffElem AffineWeyl::translation(const IVec& lambda) const {
  if (static_cast<int>(lambda.size()) != rank()) throw std::invalid_argument("translation has wrong rank");
  AffElem x;
  for (int i = 0; i < rank(); ++i) x.lam[i] = lambda[i];
  return x;
}

AffElem AffineWeyl::finite(int w) const {
  AffElem x;
  x.w = w;
  return x;
}

AffElem AffineWeyl::generator(int k) const {
  if (k == 0) return s0_;
  return finite(d_.weyl().simple(k));
}

IVec AffineWeyl::lambda(const AffElem& x) const { return IVec(x.lam.begin(), x.lam.begin() + rank()); }

AffElem AffineWeyl::mul(const AffElem& x, const AffElem& y) const {
  const IMat& m = d_.weyl().matrix(x.w);
  AffElem z;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    int s = x.lam[i];
    for (int j = 0; j < n; ++j) s += m[i][j] * y.lam[j];
    z.lam[i] = s;
  }
  z.w = d_.weyl().mul(x.w, y.w);
  return z;
}

AffElem AffineWeyl::inverse(const AffElem& x) const {
  int wi = d_.weyl().inverse(x.w);
  const IMat& m = d_.weyl().matrix(wi);
  AffElem z;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s -= m[i][j] * x.lam[j];
    z.lam[i] = s;
  }
  z.w = wi;
  return z;
}

bool AffineWeyl::isPositiveAfter(int w, int root) const {
  return d_.rootAct(d_.weyl().inverse(w), root) < numPos_;
}

int AffineWeyl::length(const AffElem& x) const {
  // Number of affine root hyperplanes separating the base alcove from its image.
  int winv = d_.weyl().inverse(x.w);
  int len = 0;
  const int n = rank();
  for (int r = 0; r < numPos_; ++r) {
    const IVec& a = d_.roots()[r].covector;
    int m = 0;
    for (int i = 0; i < n; ++i) m += a[i] * x.lam[i];
    if (d_.rootAct(winv, r) < numPos_) len += std::abs(m);
    else len += std::abs(m - 1);
  }
  return len;
}

std::vector<int> AffineWeyl::rightDescents(const AffElem& x) const {
  std::vector<int> out;
  int lx = length(x);
  for (int k = 0; k < numGenerators(); ++k)
    if (length(mul(x, generator(k))) < lx) out.push_back(k);
  return out;
}

std::vector<int> AffineWeyl::leftDescents(const AffElem& x) const {
  std::vector<int> out;
  int lx = length(x);
  for (int k = 0; k < numGenerators(); ++k)
    if (length(mul(generator(k), x)) < lx) out.push_back(k);
  return out;
}

AffineWeyl::Word AffineWeyl::reducedWord(const AffElem& x) const {
  AffElem y = x;
  for (;;) {
    auto rd = rightDescents(y);
    if (rd.empty()) break;
    y = mul(y, generator(rd.front()));
  }
  Word wd;
  wd.omega = y;
  AffElem rest = mul(inverse(y), x);
  for (;;) {
    auto ld = leftDescents(rest);
    if (ld.empty()) break;
    wd.letters.push_back(ld.front());
    rest = mul(generator(ld.front()), rest);
  }
  if (rest != identity()) throw std::logic_error("reduced word extraction failed");
  return wd;
}

std::vector<AffElem> AffineWeyl::bruhatInterval(const AffElem& y) const {
  Word wd = reducedWord(y);
  std::set<AffElem> prods = {identity()};
  for (int k : wd.letters) {
    std::vector<AffElem> add;
    for (const auto& u : prods) add.push_back(mul(u, generator(k)));
    prods.insert(add.begin(), add.end());
  }
  std::vector<AffElem> out;
  for (const auto& u : prods) out.push_back(mul(wd.omega, u));
  return out;
}

bool AffineWeyl::bruhatLeq(const AffElem& x, const AffElem& y) const {
  if (length(x) > length(y)) return false;
  auto iv = bruhatInterval(y);
  return std::find(iv.begin(), iv.end(), x) != iv.end();
}

std::string AffineWeyl::key(const AffElem& x) const {
  return formatVec(lambda(x)) + "|" + d_.weyl().wordString(x.w);
}

AffElem AffineWeyl::parseKey(const std::string& s) const {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad element key: " + s);
  AffElem x = translation(parseVec(s.substr(0, bar)));
  std::string word = s.substr(bar + 1);
  int w = 0;
  if (word != "e") {
    for (size_t i = 0; i < word.size();) {
      if (word[i] != 's') throw std::invalid_argument("bad finite word: " + word);
      size_t j = i + 1;
      while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
      int k = std::stoi(word.substr(i + 1, j - i - 1));
      if (k < 1 || k > d_.semisimpleRank()) throw std::invalid_argument("bad finite word: " + word);
      w = d_.weyl().mul(w, d_.weyl().simple(k));
      i = j;
    }
  }
  x.w = w;
  return x;
}

std::string AffineWeyl::wordString(const AffElem& x) const {
  Word wd = reducedWord(x);
  std::string s;
  if (wd.omega != identity()) s += "w[" + key(wd.omega) + "]";
  for (int k : wd.letters) s += "s" + std::to_string(k);
  return s.empty() ? "e" : s;
}

bool AffineWeyl::shortLexLess(const AffElem& x, const AffElem& y) const {
  int lx = length(x), ly = length(y);
  if (lx != ly) return lx < ly;
  Word a = reducedWord(x), b = reducedWord(y);
  if (a.omega != b.omega) return a.omega < b.omega;
  return a.letters < b.letters;
}

long long AffineWeyl::OmegaGroup::order() const {
  if (freeRank > 0) return -1;
  long long o = 1;
  for (long long t : torsion) o *= t;
  return o;
}

void AffineWeyl::buildOmega() {
  IMat cor(rank(), IVec(d_.semisimpleRank()));
  for (int i = 0; i < rank(); ++i)
    for (int k = 1; k <= d_.semisimpleRank(); ++k) cor[i][k - 1] = d_.coroot(k)[i];
  SmithResult snf = smithNormalForm(cor);
  for (long long t : snf.invariants)
    if (t > 1) omega_.torsion.push_back(t);
  omega_.freeRank = rank() - snf.rank;

  IVec lam(rank(), -1);
  std::set<AffElem> found;
  for (;;) {
    for (int w = 0; w < d_.weyl().size(); ++w) {
      AffElem x = translation(lam);
      x.w = w;
      if (length(x) == 0) found.insert(x);
    }
    int i = 0;
    while (i < rank() && lam[i] == 1) lam[i++] = -1;
    if (i == rank()) break;
    ++lam[i];
  }
  if (omega_.finite()) {
    std::set<AffElem> closure = {identity()};
    std::deque<AffElem> queue = {identity()};
    while (!queue.empty()) {
      AffElem x = queue.front();
      queue.pop_front();
      for (const auto& g : found) {
        AffElem y = mul(x, g);
        if (closure.insert(y).second) queue.push_back(y);
      }
    }
    if (static_cast<long long>(closure.size()) != omega_.order())
      throw std::logic_error("length-zero elements do not match the lattice quotient");
    found = closure;
  }
  found.insert(identity());
  omega_.elements.assign(found.begin(), found.end());
  for (const auto& om : omega_.elements) {
    std::vector<int> perm(numGenerators(), -1);
    AffElem oi = inverse(om);
    for (int k = 0; k < numGenerators(); ++k) {
      AffElem c = mul(mul(om, generator(k)), oi);
      for (int j = 0; j < numGenerators(); ++j)
        if (generator(j) == c) perm[k] = j;
      if (perm[k] < 0) throw std::logic_error("length-zero element does not normalise the generators");
    }
    omega_.conjugation.push_back(perm);
  }
}

std::vector<AffElem> AffineWeyl::ball(int cutoff) const {
  const int bound = cutoff + numPos_;
  std::vector<AffElem> out;
  IVec lam(rank(), -bound);
  for (;;) {
    for (int w = 0; w < d_.weyl().size(); ++w) {
      AffElem x = translation(lam);
      x.w = w;
      if (length(x) <= cutoff) out.push_back(x);
    }
    int i = 0;
    while (i < rank() && lam[i] == bound) lam[i++] = -bound;
    if (i == rank()) break;
    ++lam[i];
  }
  std::sort(out.begin(), out.end(), [this](const AffElem& a, const AffElem& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::vector<AffElem> AffineWeyl::parahoricGroup(Mask J) const {
  if (!isProperParahoric(J)) throw std::invalid_argument("parahoric generator set must be proper");
  std::set<AffElem> seen = {identity()};
  std::deque<AffElem> queue = {identity()};
  while (!queue.empty()) {
    AffElem x = queue.front();
    queue.pop_front();
    for (int k = 0; k < numGenerators(); ++k) {
      if (!hasBit(J, k)) continue;
      AffElem y = mul(x, generator(k));
      if (seen.insert(y).second) queue.push_back(y);
    }
    if (seen.size() > 20000) throw std::logic_error("parahoric subgroup is not finite");
  }
  std::vector<AffElem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [this](const AffElem& a, const AffElem& b) {
    int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::vector<int> AffineWeyl::finiteProjection(Mask J) const {
  std::set<int> ws;
  for (const auto& x : parahoricGroup(J)) ws.insert(x.w);
  return {ws.begin(), ws.end()};
}

Laurent AffineWeyl::poincare(Mask J) const {
  Laurent p;
  for (const auto& x : parahoricGroup(J)) p += Laurent::q(length(x));
  return p;
}

std::vector<Mask> AffineWeyl::properParahorics() const {
  std::vector<Mask> out;
  for (Mask J = 0; J < allGenerators(); ++J) out.push_back(J);
  return out;
}

Mask AffineWeyl::parseParahoric(const std::string& s) const {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t.empty() || t == "iwahori" || t == "i") return 0;
  if (t == "k" || t == "hyperspecial") return hyperspecial();
  Mask m = 0;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && item[0] == 's') item = item.substr(1);
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("bad parahoric descriptor: " + s);
    int k = std::stoi(item);
    if (k < 0 || k >= numGenerators()) throw std::invalid_argument("parahoric generator out of range: " + s);
    m |= 1u << k;
  }
  if (!isProperParahoric(m)) throw std::invalid_argument("parahoric generator set must be proper: " + s);
  return m;
}

std::string AffineWeyl::parahoricName(Mask J) const {
  if (J == 0) return "iwahori";
  std::string s;
  for (int k = 0; k < numGenerators(); ++k)
    if (hasBit(J, k)) s += (s.empty() ? "s" : ",s") + std::to_string(k);
  return s;
}

AlcovePoint AffineWeyl::act(const AffElem& x, const AlcovePoint& p) const {
  const IMat& m = d_.weyl().matrix(x.w);
  AlcovePoint out(rank());
  for (int i = 0; i < rank(); ++i) {
    Rational s = x.lam[i];
    for (int j = 0; j < rank(); ++j) s += m[i][j] * p[j];
    out[i] = s;
  }
  return out;
}

AlcovePoint AffineWeyl::fundamentalCoweight(int k) const {
  const int l = d_.semisimpleRank();
  QMat c(l, QVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c[i][j] = d_.cartanMatrix()[i][j];
  QVec e(l, 0);
  e[k - 1] = 1;
  QVec coef = solveQ(c, e);
  AlcovePoint x(rank(), 0);
  for (int m = 1; m <= l; ++m)
    for (int i = 0; i < rank(); ++i) x[i] += coef[m - 1] * d_.coroot(m)[i];
  return x;
}

AlcovePoint AffineWeyl::baseBarycenter() const {
  const int l = d_.semisimpleRank();
  const Root& top = d_.roots()[d_.highestRoot()];
  AlcovePoint b(rank(), 0);
  for (int k = 1; k <= l; ++k) {
    AlcovePoint w = fundamentalCoweight(k);
    for (int i = 0; i < rank(); ++i) b[i] += w[i] / top.coeffs[k - 1];
  }
  for (auto& c : b) c /= (l + 1);
  return b;
}

bool AffineWeyl::inBaseAlcove(const AlcovePoint& p) const {
  for (int r : d_.positiveRoots()) {
    Rational v = 0;
    for (int i = 0; i < rank(); ++i) v += d_.roots()[r].covector[i] * p[i];
    if (v <= 0 || v >= 1) return false;
  }
  return true;
}

AffElem AffineWeyl::thetaAct(const DiagramAutomorphism& t, const AffElem& x) const {
  AffElem y = translation(t.apply(lambda(x)));
  y.w = t.applyWeyl(d_, x.w);
  return y;
}

}  // namespace parahoric
