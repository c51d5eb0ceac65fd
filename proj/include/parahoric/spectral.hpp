#pragma once

#include "parahoric/bernstein.hpp"
#include "parahoric/cosets.hpp"
#include "parahoric/mpoly.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// Point of the dual torus. Symbolic mode uses indeterminates s_1..s_n (MPoly
// variables 1..n, with v in variable 0); numeric mode stores complex
// coordinates and a real v = sqrt(q).
struct UnramifiedCharacter {
  int rank = 0;
  bool symbolic = true;
  double v = 0;
  std::vector<std::complex<double>> coords;

  static UnramifiedCharacter symbolicCharacter(int rank);
  static UnramifiedCharacter numeric(std::vector<std::complex<double>> coords, double v);
  // "symbolic", or "s1=2, s2=1/3, v=3"; "cis:x" gives the unit complex number at angle x.
  static UnramifiedCharacter parse(const std::string& spec, int rank);

  int nvars() const { return rank + 1; }
  MPoly monomial(const IVec& lambda) const;  // s^lambda
  std::complex<double> value(const IVec& lambda) const;
  std::string describe() const;
};

using SymMatrix = std::vector<std::vector<MPoly>>;

// sum over the support of c(lambda) * s^{-lambda}: the scalar ch_chi with chi composed with inversion.
MPoly closedFormScalar(const CentralElement& z, int rank);
// Substitution s^e -> s^{g e} on the torus variables.
MPoly substituteLattice(const MPoly& f, const IMat& g);
bool isWeylInvariant(const MPoly& f, const RootDatum& d);
Rational evaluateAt(const MPoly& f, int rank, unsigned salt = 0);

// chi (x)_R H with theta_lambda acting through chi(-lambda); basis T_w, w in W.
class PrincipalSeriesModel {
 public:
  explicit PrincipalSeriesModel(const BernsteinCalculus& B);

  const BernsteinCalculus& calculus() const { return B_; }
  int dimension() const { return d_.weyl().size(); }
  int nvars() const { return d_.rank() + 1; }

  // Matrix of the right action; row w holds the coordinates of e_w . h.
  SymMatrix act(const BernsteinForm& f) const;
  SymMatrix act(const HeckeElement& h) const;
  SymMatrix identity() const;
  int rankAtPoint(const SymMatrix& m, unsigned salt = 0) const;

 private:
  const BernsteinCalculus& B_;
  const RootDatum& d_;
};

struct ScalarResult {
  bool scalar = false;
  MPoly value;
  MPoly closedForm;
  bool matchesClosedForm = false;
  std::string detail;
  bool ok() const { return scalar && matchesClosedForm; }
};

// Scalar c with A = c B, where B is the action of 1_J; detail explains failures.
ScalarResult scalarRelative(const SymMatrix& A, const SymMatrix& B);

enum class ScalarRoute { Bernstein, HeckeBasis };

// Scalar by which z * 1_J acts on the 1_J-image, compared with the closed form.
ScalarResult centralScalar(const PrincipalSeriesModel& m, const CentralElement& z, Mask J,
                           ScalarRoute route = ScalarRoute::Bernstein);
// Scalar of an arbitrary J-level element h (e.g. a change-of-parahoric image).
ScalarResult scalarOfElement(const PrincipalSeriesModel& m, const HeckeElement& h, Mask J, const MPoly& expected);

// Recover B^{-1} from a symbolic scalar by reading its monomials.
std::optional<CentralElement> inverseFromScalar(const MPoly& scalar, int rank);

int jfixedDimension(const AffineWeyl& aw, Mask J, Mask M = 0);

struct DimensionCheck {
  int cosets = 0;
  int rankOfProjector = 0;
  bool traceMatches = false;
  bool ok() const { return traceMatches && cosets == rankOfProjector; }
};
DimensionCheck jfixedDimensionCheck(const PrincipalSeriesModel& m, Mask J);

// Trace of z on the J-fixed vectors of the full principal series.
MPoly fourierTransform(const AffineWeyl& aw, const CentralElement& z, Mask J);
// Rank of the coefficient matrix of the transforms of the given elements.
int fourierRank(const AffineWeyl& aw, const std::vector<CentralElement>& zs, Mask J);

// The same invariant function viewed over W_M, decomposed into W_M-orbit sums
// indexed by M-dominant representatives.
struct LevelDecomposition {
  CentralElement function;
  std::map<IVec, Laurent> orbitCoordinates;
};
std::optional<LevelDecomposition> constantTermSpectral(const RootDatum& d, const CentralElement& z, Mask M);
CentralElement levelOrbitSum(const RootDatum& d, const IVec& lambda, Mask M);

}  // namespace parahoric
