#include "parahoric/spectral.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parahoric {

namespace {

MPoly laurentTimesMonomial(int nvars, const Laurent& c, const IVec& torusExps) {
  MPoly r(nvars);
  MPoly::Exps e(nvars, 0);
  for (size_t i = 0; i < torusExps.size(); ++i) e[i + 1] = torusExps[i];
  for (const auto& [deg, coef] : c.terms()) {
    e[0] = deg;
    r += MPoly::monomial(nvars, coef, e);
  }
  return r;
}

std::vector<Rational> samplePoint(int rank, unsigned salt) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::vector<Rational> p(rank + 1);
  p[0] = Rational(7 + 2 * static_cast<int>(salt), 5);
  for (int i = 1; i <= rank; ++i) p[i] = Rational(primes[(i + salt) % 12], primes[(i + salt + 5) % 12]);
  for (auto& r : p) r.canonicalize();
  return p;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

// -------------------------------------------------------- UnramifiedCharacter

UnramifiedCharacter UnramifiedCharacter::symbolicCharacter(int rank) {
  UnramifiedCharacter c;
  c.rank = rank;
  return c;
}

UnramifiedCharacter UnramifiedCharacter::numeric(std::vector<std::complex<double>> coords, double v) {
  for (const auto& z : coords)
    if (std::abs(z) == 0) throw std::invalid_argument("character coordinates must be invertible");
  if (!(v > 0)) throw std::invalid_argument("v must be positive");
  UnramifiedCharacter c;
  c.rank = static_cast<int>(coords.size());
  c.symbolic = false;
  c.coords = std::move(coords);
  c.v = v;
  return c;
}

UnramifiedCharacter UnramifiedCharacter::parse(const std::string& spec, int rank) {
  std::string s = trim(spec);
  if (s.empty() || s == "symbolic") return symbolicCharacter(rank);
  std::vector<std::complex<double>> coords(rank, 1.0);
  double v = std::sqrt(2.0);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected name=value in character spec: " + item);
    std::string key = trim(item.substr(0, eq)), val = trim(item.substr(eq + 1));
    std::complex<double> z;
    if (val.rfind("cis:", 0) == 0) {
      z = std::polar(1.0, std::stod(val.substr(4)));
    } else {
      z = parseRational(val).get_d();
    }
    if (key == "v") {
      v = z.real();
    } else if (key.size() > 1 && key[0] == 's') {
      int i = std::stoi(key.substr(1));
      if (i < 1 || i > rank) throw std::invalid_argument("character coordinate out of range: " + key);
      coords[i - 1] = z;
    } else {
      throw std::invalid_argument("unknown character coordinate: " + key);
    }
  }
  return numeric(coords, v);
}

MPoly UnramifiedCharacter::monomial(const IVec& lambda) const {
  return laurentTimesMonomial(nvars(), Laurent(1), lambda);
}

std::complex<double> UnramifiedCharacter::value(const IVec& lambda) const {
  if (symbolic) throw std::logic_error("numeric value requested from a symbolic character");
  std::complex<double> r = 1.0;
  for (int i = 0; i < rank; ++i) r *= std::pow(coords[i], lambda[i]);
  return r;
}

std::string UnramifiedCharacter::describe() const {
  if (symbolic) return "symbolic";
  std::ostringstream os;
  os.precision(12);
  for (int i = 0; i < rank; ++i) os << "s" << i + 1 << "=" << coords[i].real() << (coords[i].imag() >= 0 ? "+" : "") << coords[i].imag() << "i,";
  os << "v=" << v;
  return os.str();
}

// ------------------------------------------------------------ free helpers

MPoly closedFormScalar(const CentralElement& z, int rank) {
  MPoly r(rank + 1);
  for (const auto& [l, c] : z.coeffs) r += laurentTimesMonomial(rank + 1, c, neg(l));
  return r;
}

MPoly substituteLattice(const MPoly& f, const IMat& g) {
  MPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    IVec t(e.begin() + 1, e.end());
    IVec u = matVec(g, t);
    MPoly::Exps ne(e.size());
    ne[0] = e[0];
    for (size_t i = 0; i < u.size(); ++i) ne[i + 1] = u[i];
    r += MPoly::monomial(f.nvars(), c, ne);
  }
  return r;
}

bool isWeylInvariant(const MPoly& f, const RootDatum& d) {
  for (int k = 1; k <= d.semisimpleRank(); ++k)
    if (substituteLattice(f, d.weyl().matrix(d.weyl().simple(k))) != f) return false;
  return true;
}

Rational evaluateAt(const MPoly& f, int rank, unsigned salt) { return f.evaluate(samplePoint(rank, salt)); }

// ------------------------------------------------------- PrincipalSeriesModel

PrincipalSeriesModel::PrincipalSeriesModel(const BernsteinCalculus& B) : B_(B), d_(B.algebra().datum()) {}

SymMatrix PrincipalSeriesModel::identity() const {
  SymMatrix m(dimension(), std::vector<MPoly>(dimension(), MPoly(nvars())));
  for (int i = 0; i < dimension(); ++i) m[i][i] = MPoly(nvars(), Rational(1));
  return m;
}

SymMatrix PrincipalSeriesModel::act(const BernsteinForm& f) const {
  const int n = dimension();
  SymMatrix m(n, std::vector<MPoly>(n, MPoly(nvars())));
  for (int w = 0; w < n; ++w) {
    BernsteinForm g = B_.leftMulFinite(w, f);
    // theta_lambda passes through the tensor as chi(-lambda).
    for (const auto& [key, c] : g.terms) m[w][key.second] += laurentTimesMonomial(nvars(), c, neg(key.first));
  }
  return m;
}

SymMatrix PrincipalSeriesModel::act(const HeckeElement& h) const { return act(B_.fromHecke(h)); }

int PrincipalSeriesModel::rankAtPoint(const SymMatrix& m, unsigned salt) const {
  auto p = samplePoint(d_.rank(), salt);
  QMat q;
  for (const auto& row : m) {
    QVec r;
    for (const auto& e : row) r.push_back(e.evaluate(p));
    q.push_back(r);
  }
  return rankQ(q);
}

ScalarResult scalarRelative(const SymMatrix& A, const SymMatrix& B) {
  ScalarResult res;
  const MPoly* pivotA = nullptr;
  const MPoly* pivotB = nullptr;
  for (size_t i = 0; i < B.size() && !pivotB; ++i)
    for (size_t j = 0; j < B[i].size(); ++j)
      if (!B[i][j].isZero()) {
        pivotA = &A[i][j];
        pivotB = &B[i][j];
        break;
      }
  if (!pivotB) {
    res.detail = "projector acts by zero";
    return res;
  }
  auto c = pivotA->divideExact(*pivotB);
  if (!c) {
    res.detail = "pivot quotient is not a Laurent polynomial";
    return res;
  }
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A[i].size(); ++j)
      if (A[i][j] != *c * B[i][j]) {
        res.detail = "action is not scalar at entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return res;
      }
  res.scalar = true;
  res.value = *c;
  return res;
}

ScalarResult centralScalar(const PrincipalSeriesModel& m, const CentralElement& z, Mask J, ScalarRoute route) {
  const BernsteinCalculus& B = m.calculus();
  const HeckeAlgebra& H = B.algebra();
  const int rank = H.datum().rank();
  SymMatrix A, P;
  if (route == ScalarRoute::Bernstein) {
    BernsteinForm ind = B.fromHecke(H.indicator(J));
    A = m.act(B.multiply(B.fromCentral(z), ind));
    P = m.act(ind);
  } else {
    A = m.act(H.toParahoric(z, J));
    P = m.act(H.indicator(J));
  }
  ScalarResult res = scalarRelative(A, P);
  res.closedForm = closedFormScalar(z, rank);
  res.matchesClosedForm = res.scalar && res.value == res.closedForm;
  if (res.scalar && !res.matchesClosedForm) res.detail = "scalar differs from orbit-sum closed form";
  return res;
}

ScalarResult scalarOfElement(const PrincipalSeriesModel& m, const HeckeElement& h, Mask J, const MPoly& expected) {
  const HeckeAlgebra& H = m.calculus().algebra();
  ScalarResult res = scalarRelative(m.act(h), m.act(H.indicator(J)));
  res.closedForm = expected;
  res.matchesClosedForm = res.scalar && res.value == expected;
  if (res.scalar && !res.matchesClosedForm) res.detail = "scalar differs from expected value";
  return res;
}

std::optional<CentralElement> inverseFromScalar(const MPoly& scalar, int rank) {
  CentralElement z;
  for (const auto& [torus, coef] : scalar.splitByTorus()) {
    if (static_cast<int>(torus.size()) != rank) return std::nullopt;
    z.coeffs[neg(IVec(torus.begin(), torus.end()))] = coef;
  }
  return z;
}

int jfixedDimension(const AffineWeyl& aw, Mask J, Mask M) {
  return static_cast<int>(pgjRepresentatives(aw, M, J).reps.size());
}

DimensionCheck jfixedDimensionCheck(const PrincipalSeriesModel& m, Mask J) {
  const HeckeAlgebra& H = m.calculus().algebra();
  DimensionCheck c;
  c.cosets = jfixedDimension(H.group(), J);
  SymMatrix P = m.act(H.indicator(J));
  c.rankOfProjector = m.rankAtPoint(P);
  MPoly tr(m.nvars());
  for (int i = 0; i < m.dimension(); ++i) tr += P[i][i];
  c.traceMatches = tr == MPoly::fromLaurent(m.nvars(), H.poincare(J) * Laurent(c.cosets));
  return c;
}

MPoly fourierTransform(const AffineWeyl& aw, const CentralElement& z, Mask J) {
  MPoly s = closedFormScalar(z, aw.rank());
  return s * MPoly(s.nvars(), Rational(jfixedDimension(aw, J)));
}

int fourierRank(const AffineWeyl& aw, const std::vector<CentralElement>& zs, Mask J) {
  std::vector<MPoly> fs;
  std::set<MPoly::Exps> cols;
  for (const auto& z : zs) {
    fs.push_back(fourierTransform(aw, z, J));
    for (const auto& [e, c] : fs.back().terms()) cols.insert(e);
  }
  QMat m;
  for (const auto& f : fs) {
    QVec row;
    for (const auto& e : cols) {
      auto it = f.terms().find(e);
      row.push_back(it == f.terms().end() ? Rational(0) : it->second);
    }
    m.push_back(row);
  }
  return rankQ(m);
}

CentralElement levelOrbitSum(const RootDatum& d, const IVec& lambda, Mask M) {
  CentralElement z;
  for (int w : d.parabolicSubgroup(M)) z.coeffs[d.weyl().act(w, lambda)] = Laurent(1);
  return z;
}

std::optional<LevelDecomposition> constantTermSpectral(const RootDatum& d, const CentralElement& z, Mask M) {
  std::vector<IMat> gens;
  for (int k = 1; k <= d.semisimpleRank(); ++k)
    if (hasBit(M, k)) gens.push_back(d.weyl().matrix(d.weyl().simple(k)));
  if (!z.isInvariantUnder(gens)) return std::nullopt;
  LevelDecomposition out;
  out.function = z;
  for (const auto& [l, c] : z.coeffs) {
    bool dom = true;
    for (int k = 1; k <= d.semisimpleRank(); ++k)
      if (hasBit(M, k) && dot(d.alpha(k), l) < 0) dom = false;
    if (dom) out.orbitCoordinates[l] = c;
  }
  // The decomposition must reproduce the function.
  CentralElement back;
  for (const auto& [l, c] : out.orbitCoordinates) back += levelOrbitSum(d, l, M).scaled(c);
  if (!(back == z)) return std::nullopt;
  return out;
}

}  // namespace parahoric
