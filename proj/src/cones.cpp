#include "parahoric/cones.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace parahoric {

namespace {

Rational dotQ(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Primitive integer representative with positive leading entry.
IVec normalizeCovector(const QVec& c) {
  mpz_class l = 1;
  for (const auto& x : c) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& x : c) {
    mpz_class v = x.get_num() * (l / x.get_den());
    z.push_back(v);
    g = gcd(g, v);
  }
  IVec out;
  if (g == 0) return out;
  int sign = 0;
  for (const auto& v : z)
    if (sign == 0 && v != 0) sign = v > 0 ? 1 : -1;
  for (const auto& v : z) out.push_back(static_cast<int>(mpz_class(v / g * sign).get_si()));
  return out;
}

// Uniform in [lo, hi] without relying on library distributions, so sampled
// reports are reproducible across standard library implementations.
long long uniformInt(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double uniformReal(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

IVec unitVector(int n, int i) {
  IVec e(n, 0);
  e[i] = 1;
  return e;
}

// A particular rational solution of A c = m for m in the column space of A.
QVec solveConsistent(const IMat& A, const IVec& m) {
  const int n = static_cast<int>(A.size());
  std::vector<int> cols, rows;
  QMat colSet;
  for (int j = 0; j < n; ++j) {
    QMat trial = colSet;
    QVec col;
    for (int i = 0; i < n; ++i) col.push_back(A[i][j]);
    trial.push_back(col);
    if (rankQ(trial) > static_cast<int>(colSet.size())) {
      colSet = trial;
      cols.push_back(j);
    }
  }
  QMat rowSet;
  for (int i = 0; i < n && rowSet.size() < cols.size(); ++i) {
    QVec row;
    for (int j : cols) row.push_back(A[i][j]);
    QMat trial = rowSet;
    trial.push_back(row);
    if (rankQ(trial) > static_cast<int>(rowSet.size())) {
      rowSet = trial;
      rows.push_back(i);
    }
  }
  QVec rhs;
  for (int i : rows) rhs.push_back(m[i]);
  QVec sol = rowSet.empty() ? QVec() : solveQ(rowSet, rhs);
  QVec c(n, Rational(0));
  for (size_t k = 0; k < cols.size(); ++k) c[cols[k]] = sol[k];
  for (int i = 0; i < n; ++i) {
    Rational v = 0;
    for (int j = 0; j < n; ++j) v += A[i][j] * c[j];
    if (v != m[i]) throw std::logic_error("target outside the image of (theta - 1)^T");
  }
  return c;
}

IMat normMatrix(const BaseChangeContext& ctx) {
  const int n = ctx.datum().rank();
  IMat N(n, IVec(n, 0)), P = identityMatrix(n);
  for (int i = 0; i < ctx.r(); ++i) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) N[a][b] += P[a][b];
    P = matMul(ctx.theta().matrix, P);
  }
  return N;
}

}  // namespace

ConeContext::ConeContext(const RootDatum& d) : d_(d) {
  const int l = d.semisimpleRank();
  QMat C(l, QVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) C[i][j] = d.cartan(i + 1, j + 1);
  cartanInverse_.assign(l, QVec(l));
  for (int j = 0; j < l; ++j) {
    QVec e(l, Rational(0));
    e[j] = 1;
    QVec col = solveQ(C, e);
    for (int i = 0; i < l; ++i) cartanInverse_[i][j] = col[i];
  }
  const int n = d.rank();
  projections_.resize(full() + 1);
  for (Mask M : parabolics()) {
    auto group = d.parabolicSubgroup(M);
    QMat P(n, QVec(n, Rational(0)));
    for (int w : group)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P[i][j] += d.weyl().matrix(w)[i][j];
    for (auto& row : P)
      for (auto& x : row) x /= static_cast<long>(group.size());
    projections_[M] = P;
  }
}

int ConeContext::aP(Mask M) const {
  int m = 0;
  for (int k = 1; k <= d_.semisimpleRank(); ++k) m += hasBit(M, k);
  return d_.rank() - m;
}

std::vector<Mask> ConeContext::parabolics() const {
  std::vector<Mask> out;
  for (Mask m = 0; m <= full(); m += 2) out.push_back(m);
  return out;
}

std::vector<Mask> ConeContext::containing(Mask Q) const {
  std::vector<Mask> out;
  for (Mask m : parabolics())
    if ((m & Q) == Q) out.push_back(m);
  return out;
}

QVec ConeContext::project(const QVec& H, Mask M) const {
  const QMat& P = projections_.at(M);
  QVec r(H.size(), Rational(0));
  for (size_t i = 0; i < H.size(); ++i)
    for (size_t j = 0; j < H.size(); ++j) r[i] += P[i][j] * H[j];
  return r;
}

Rational ConeContext::rootValue(int k, const QVec& H) const { return dotQ(toQ(d_.alpha(k)), H); }

QVec ConeContext::corootCoordinates(const QVec& H) const {
  const int l = d_.semisimpleRank();
  QVec c(l, Rational(0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c[i] += cartanInverse_[i][j] * rootValue(j + 1, H);
  return c;
}

QVec ConeContext::fundamentalWeight(int k) const {
  QVec w(d_.rank(), Rational(0));
  for (int j = 1; j <= d_.semisimpleRank(); ++j)
    for (int i = 0; i < d_.rank(); ++i) w[i] += cartanInverse_[k - 1][j - 1] * d_.alpha(j)[i];
  return w;
}

bool ConeContext::tau(Mask M, const QVec& H) const {
  QVec HP = project(H, M);
  for (int k = 1; k <= d_.semisimpleRank(); ++k)
    if (hasBit(deltaP(M), k) && rootValue(k, HP) <= 0) return false;
  return true;
}

bool ConeContext::tauHat(Mask M, const QVec& H) const {
  QVec c = corootCoordinates(H);
  for (int k = 1; k <= d_.semisimpleRank(); ++k)
    if (hasBit(deltaP(M), k) && c[k - 1] <= 0) return false;
  return true;
}

bool ConeContext::tauRelative(Mask MQ, Mask MP, const QVec& H) const {
  QVec HQ = project(H, MQ);
  for (int k = 1; k <= d_.semisimpleRank(); ++k)
    if (hasBit(MP, k) && !hasBit(MQ, k) && rootValue(k, HQ) <= 0) return false;
  return true;
}

int ConeContext::arthurSum(Mask MQ, const QVec& H) const {
  int s = 0;
  for (Mask MP : containing(MQ)) {
    if (!tauHat(MP, H) || !tauRelative(MQ, MP, H)) continue;
    s += (aP(MP) - aG()) % 2 == 0 ? 1 : -1;
  }
  return s;
}

bool ConeContext::chiN(const BaseChangeContext& ctx, const IVec& lambda, Mask M) const {
  if (!isThetaStableMask(ctx.theta(), M)) throw std::invalid_argument("parabolic is not theta-stable");
  return tau(M, hMap(ctx.normCochar(lambda), M));
}

bool ConeContext::chiHatN(const BaseChangeContext& ctx, const IVec& lambda, Mask M) const {
  if (!isThetaStableMask(ctx.theta(), M)) throw std::invalid_argument("parabolic is not theta-stable");
  return tauHat(M, hMap(ctx.normCochar(lambda), M));
}

bool ConeContext::contractsLieN(const BaseChangeContext& ctx, const IVec& lambda, Mask M) const {
  QVec H = hMap(ctx.normCochar(lambda), M);
  for (int r : d_.positiveRoots()) {
    const Root& rt = d_.roots()[r];
    bool inM = true;
    for (int k = 1; k <= d_.semisimpleRank(); ++k)
      if (rt.coeffs[k - 1] != 0 && !hasBit(M, k)) inM = false;
    if (inM) continue;
    // |beta(m)| = q^{-<beta, H>} < 1
    if (dotQ(toQ(rt.covector), H) <= 0) return false;
  }
  return true;
}

std::string ConeContext::parabolicName(Mask M) const {
  if (M == 0) return "B";
  if (M == full()) return "G";
  std::string s;
  for (int k = 1; k <= d_.semisimpleRank(); ++k)
    if (hasBit(M, k)) s += (s.empty() ? "alpha" : ",alpha") + std::to_string(k);
  return s;
}

Mask ConeContext::parseParabolic(const std::string& s) const {
  if (s == "B" || s == "b" || s == "borel" || s.empty()) return 0;
  if (s == "G" || s == "g") return full();
  Mask m = 0;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t digits = tok.find_first_of("0123456789");
    if (digits == std::string::npos) throw std::invalid_argument("bad parabolic: " + s);
    int k = std::stoi(tok.substr(digits));
    if (k < 1 || k > d_.semisimpleRank()) throw std::invalid_argument("simple root out of range: " + tok);
    m |= 1u << k;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return m;
}

// ------------------------------------------------------------ Hales chambers

namespace {

int signOf(const IVec& c, const IVec& x) {
  long long s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += static_cast<long long>(c[i]) * x[i];
  return (s > 0) - (s < 0);
}

int halfPlane(const IVec& d) { return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1; }

long long cross(const IVec& a, const IVec& b) {
  return static_cast<long long>(a[0]) * b[1] - static_cast<long long>(a[1]) * b[0];
}

bool angleLess(const IVec& a, const IVec& b) {
  int ha = halfPlane(a), hb = halfPlane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace

ChamberDecomposition halesChambers(const ConeContext& cc, const BaseChangeContext& ctx, int samplesPerChamber,
                                   std::uint64_t seed) {
  const RootDatum& d = cc.datum();
  const int n = d.rank();
  ChamberDecomposition out;
  for (Mask M : cc.parabolics())
    if (isThetaStableMask(ctx.theta(), M)) out.parabolics.push_back(M);

  std::set<IVec> planes;
  for (int r : d.positiveRoots()) {
    IVec c = normalizeCovector(toQ(d.roots()[r].covector));
    if (!c.empty()) planes.insert(c);
  }
  IMat N = normMatrix(ctx);
  for (Mask M : out.parabolics)
    for (int k = 1; k <= d.semisimpleRank(); ++k) {
      if (!hasBit(cc.deltaP(M), k)) continue;
      QVec wk = cc.fundamentalWeight(k);
      for (int w = 0; w < d.weyl().size(); ++w) {
        IMat Nw = matMul(N, d.weyl().matrix(w));
        QVec cov(n, Rational(0));
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i) cov[j] += wk[i] * Nw[i][j];
        IVec c = normalizeCovector(cov);
        if (!c.empty()) planes.insert(c);  // zero covectors give no wall
      }
    }
  std::vector<IVec> H(planes.begin(), planes.end());
  for (const auto& c : H) out.hyperplanes.push_back(toQ(c));

  std::mt19937_64 rng(seed);
  auto signVector = [&](const IVec& x) {
    std::vector<int> s;
    for (const auto& c : H) s.push_back(signOf(c, x));
    return s;
  };

  std::vector<std::vector<IVec>> groups;
  if (n == 1) {
    out.exact = true;
    if (H.empty()) {
      groups.push_back({});
      for (int i = 0; i < samplesPerChamber; ++i) groups.back().push_back({static_cast<int>(uniformInt(rng, -1000, 1000))});
    } else {
      for (int sgn : {1, -1}) {
        groups.push_back({});
        for (int i = 0; i < samplesPerChamber; ++i)
          groups.back().push_back({sgn * static_cast<int>(uniformInt(rng, 1, 1000))});
      }
    }
  } else if (n == 2) {
    out.exact = true;
    std::vector<IVec> dirs;
    for (const auto& c : H) {
      dirs.push_back({-c[1], c[0]});
      dirs.push_back({c[1], -c[0]});
    }
    std::sort(dirs.begin(), dirs.end(), angleLess);
    if (dirs.empty()) {
      groups.push_back({});
      for (int i = 0; i < samplesPerChamber; ++i)
        groups.back().push_back({static_cast<int>(uniformInt(rng, -1000, 1000)), static_cast<int>(uniformInt(rng, -1000, 1000))});
    }
    for (size_t i = 0; i < dirs.size(); ++i) {
      const IVec& a = dirs[i];
      const IVec& b = dirs[(i + 1) % dirs.size()];
      groups.push_back({});
      for (int s = 0; s < samplesPerChamber; ++s) {
        IVec x(2);
        if (cross(a, b) > 0) {
          long long p = uniformInt(rng, 1, 1000), q = uniformInt(rng, 1, 1000);
          x = {static_cast<int>(p * a[0] + q * b[0]), static_cast<int>(p * a[1] + q * b[1])};
        } else {
          // Half-plane chamber: left of a.
          long long p = uniformInt(rng, -1000, 1000), q = uniformInt(rng, 1, 1000);
          x = {static_cast<int>(p * a[0] - q * a[1]), static_cast<int>(p * a[1] + q * a[0])};
        }
        groups.back().push_back(x);
      }
    }
  } else {
    // Sampled certificate: group random points by sign vector.
    std::map<std::vector<int>, std::vector<IVec>> bySign;
    const int draws = std::max(2000, samplesPerChamber * 200);
    for (int i = 0; i < draws; ++i) {
      IVec x(n);
      for (auto& c : x) c = static_cast<int>(uniformInt(rng, -60, 60));
      auto s = signVector(x);
      if (std::find(s.begin(), s.end(), 0) != s.end()) continue;
      auto& g = bySign[s];
      if (static_cast<int>(g.size()) < samplesPerChamber) g.push_back(x);
    }
    for (auto& [s, g] : bySign) groups.push_back(g);
  }

  const WeylGroup& W = d.weyl();
  for (auto& g : groups) {
    Chamber ch;
    ch.samples = g;
    if (!g.empty()) ch.signs = signVector(g.front());
    for (size_t pi = 0; pi < out.parabolics.size(); ++pi) {
      std::vector<int> pat(W.size(), -1);
      for (const auto& x : g) {
        if (signVector(x) != ch.signs) {
          ch.constant = false;
          ++out.violations;
        }
        for (int w = 0; w < W.size(); ++w) {
          int val = cc.chiHatN(ctx, W.act(w, x), out.parabolics[pi]);
          if (pat[w] == -1) pat[w] = val;
          if (pat[w] != val) {
            ch.constant = false;
            ++out.violations;
          }
        }
      }
      ch.pattern.push_back(pat);
    }
    out.chambers.push_back(std::move(ch));
  }
  return out;
}

std::optional<std::vector<int>> wprimeSet(const ConeContext& cc, const BaseChangeContext& ctx, Mask M,
                                          const Chamber& ch) {
  const WeylGroup& W = cc.datum().weyl();
  std::vector<int> out;
  for (int w = 0; w < W.size(); ++w) {
    int first = -1;
    for (const auto& x : ch.samples) {
      int val = cc.chiHatN(ctx, W.act(w, x), M);
      if (first == -1) first = val;
      if (val != first) return std::nullopt;
    }
    if (first == 1) out.push_back(w);
  }
  return out;
}

// ------------------------------------------------------- compact traces

MPoly compactTraceFunctional(const ConeContext& cc, const BaseChangeContext& ctx, Mask M, int eta, const IVec& mu) {
  const RootDatum& d = cc.datum();
  const int nv = d.rank() + 1;
  MPoly r(nv);
  int etaInv = d.weyl().inverse(eta);
  for (const auto& l : d.orbit(mu)) {
    if (!cc.chiHatN(ctx, l, M)) continue;
    IVec x = d.weyl().act(etaInv, l);
    MPoly::Exps e(nv, 0);
    for (int i = 0; i < d.rank(); ++i) e[i + 1] = x[i];
    r += MPoly::monomial(nv, 1, e);
  }
  return r;
}

bool isThetaRegular(const BaseChangeContext& ctx, const IVec& nu) {
  IVec Nn = ctx.normCochar(nu);
  for (const auto& rt : ctx.datum().roots())
    if (dot(rt.covector, Nn) == 0) return false;
  return true;
}

AtiyahBottResult atiyahBott(const BaseChangeContext& ctx, const IVec& nu) {
  const RootDatum& d = ctx.datum();
  const WeylGroup& W = d.weyl();
  if (!isThetaRegular(ctx, nu)) throw std::domain_error("nu is not theta-regular: " + formatVec(nu));
  AtiyahBottResult res;
  // Fixed points: w with theta(w) = w, theta acting by permuting word letters.
  for (int w = 0; w < W.size(); ++w) {
    int img = 0;
    for (int k : W.word(w)) img = W.mul(img, W.simple(ctx.theta().perm[k]));
    if (img == w) res.fixedPoints.push_back(w);
  }
  res.fixedPointsMatchRelativeWeyl = res.fixedPoints == ctx.relative().relativeWeyl;

  // theta-orbits of roots of N (theta acts on covectors).
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(d.roots().size(), false);
  for (size_t r = 0; r < d.roots().size(); ++r) {
    if (!d.roots()[r].positive || seen[r]) continue;
    std::vector<int> orb;
    int cur = static_cast<int>(r);
    while (!seen[cur]) {
      seen[cur] = true;
      orb.push_back(cur);
      cur = d.rootIndex(ctx.theta().applyCovector(d.roots()[cur].covector));
    }
    orbits.push_back(orb);
  }

  const IVec twoRho = d.twoRho();
  const int nv = d.rank() + 1;
  res.value = MPoly(nv);
  for (int w : res.fixedPoints) {
    IVec mu = W.act(W.inverse(w), nu);
    int vexp = -dot(twoRho, mu);  // delta^{1/2}(mu) = q^{-<rho, mu>}
    bool unit = true;
    for (const auto& orb : orbits) {
      int s = 0;
      for (int r : orb) s += dot(d.roots()[r].covector, mu);
      if (s == 0) throw std::domain_error("indeterminate denominator");
      if (s < 0) {
        vexp += 2 * s;  // |1 - x| = |x| = q^{-s}
        unit = false;
      }
    }
    if (unit) res.unitDenominators.push_back(w);
    MPoly::Exps e(nv, 0);
    e[0] = vexp;
    for (int i = 0; i < d.rank(); ++i) e[i + 1] = mu[i];
    res.value += MPoly::monomial(nv, 1, e);
  }
  return res;
}

UnitaryReport unitaryPartInvariance(const BaseChangeContext& ctx, int trials, std::uint64_t seed, double tolerance) {
  const RootDatum& d = ctx.datum();
  const int n = d.rank();
  UnitaryReport rep;
  auto kernel = integerKernel(normMatrix(ctx));
  rep.kernelRank = static_cast<int>(kernel.size());

  // xi(x) = exp(2 pi i <c, x>) is theta-fixed iff A c is integral, A = (theta - 1)^T.
  IMat thetaMinusOne = ctx.theta().matrix;
  for (int i = 0; i < n; ++i) thetaMinusOne[i][i] -= 1;
  const IMat A = transpose(thetaMinusOne);
  const auto freeDirs = integerKernel(A);
  // Integral targets m for A c = m: the saturation of the image of A.
  std::vector<IVec> targets;
  auto fixedLattice = integerKernel(thetaMinusOne);
  if (fixedLattice.empty()) {
    for (int i = 0; i < n; ++i) targets.push_back(unitVector(n, i));
  } else {
    targets = integerKernel(IMat(fixedLattice.begin(), fixedLattice.end()));
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<std::complex<double>> c(n, 0.0);
    for (const auto& k : freeDirs) {
      std::complex<double> a(uniformReal(rng), 0.4 * uniformReal(rng) - 0.2);
      for (int j = 0; j < n; ++j) c[j] += a * static_cast<double>(k[j]);
    }
    IVec m(n, 0);
    for (const auto& b : targets) m = add(m, scale(b, static_cast<int>(uniformInt(rng, -3, 3))));
    QVec torsion = solveConsistent(A, m);
    for (int j = 0; j < n; ++j) c[j] += torsion[j].get_d();
    auto xi = [&](const IVec& x) {
      std::complex<double> e = 0.0;
      for (int j = 0; j < n; ++j) e += c[j] * static_cast<double>(x[j]);
      return std::exp(std::complex<double>(0, 2 * M_PI) * e);
    };
    IVec nu(n, 0);
    for (const auto& b : kernel) nu = add(nu, scale(b, static_cast<int>(uniformInt(rng, -3, 3))));
    double dev = std::abs(std::abs(xi(nu)) - 1.0);
    for (int j = 0; j < n; ++j) {
      IVec e = unitVector(n, j);
      dev = std::max(dev, std::abs(xi(ctx.theta().apply(e)) / xi(e) - 1.0));
    }
    rep.worstDeviation = std::max(rep.worstDeviation, dev);
    ++rep.trials;
    if (dev > tolerance) {
      ++rep.failures;
      if (rep.firstFailure.empty()) rep.firstFailure = "nu=" + formatVec(nu) + " m=" + formatVec(m);
    }
  }
  return rep;
}

}  // namespace parahoric
