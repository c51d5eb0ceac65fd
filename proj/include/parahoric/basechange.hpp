#pragma once

#include "parahoric/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// E-side datum with theta and r = [E:F], plus the folded F-side data. F-side
// lattice vectors are kept in E-coordinates (elements of X^theta); F-side
// characters use one variable per vector of the fixed basis.
class BaseChangeContext {
 public:
  BaseChangeContext(const RootDatum& d, DiagramAutomorphism theta);

  const RootDatum& datum() const { return d_; }
  const DiagramAutomorphism& theta() const { return theta_; }
  int r() const { return theta_.degree; }
  bool split() const { return theta_.isIdentity(); }
  const RelativeDatum& relative() const { return rel_; }
  const std::vector<IMat>& relativeWeylMatrices() const { return relMats_; }
  int fixedRank() const { return static_cast<int>(rel_.fixedBasis.size()); }

  IVec normCochar(const IVec& nu) const;
  // Integral coordinates of a theta-fixed vector in the fixed basis.
  IVec fixedCoordinates(const IVec& x) const;
  bool isThetaFixed(const IVec& x) const { return theta_.apply(x) == x; }

  // Pushforward t_nu -> t_{N nu}; nullopt if f is not W-invariant. Throws if
  // the output fails W^theta-invariance.
  std::optional<CentralElement> normInvariants(const CentralElement& f) const;
  CentralElement baseChange(const CentralElement& phi) const;
  // Decomposition of an F-side invariant function into W^theta-orbit sums,
  // keyed by the lexicographically largest orbit member.
  std::optional<std::map<IVec, Laurent>> relativeOrbitCoordinates(const CentralElement& f) const;
  std::vector<IVec> relativeOrbit(const IVec& x) const;

  // Symbolic scalars in the F-side variables: ch_t(f) = sum c(lambda) t(-lambda).
  MPoly fSideScalar(const CentralElement& f) const;
  // ch_{Nt}(phi) = sum c(nu) t(-N nu).
  MPoly eSideScalarAtNorm(const CentralElement& phi) const;
  // (Nt)(e_i) for each E-lattice basis vector, as F-side monomials.
  std::vector<MPoly> dualNorm() const;
  // (Nt)(nu) rebuilt multiplicatively from dualNorm().
  MPoly dualNormValue(const IVec& nu) const;

  // |W / Wbar_J| and |W^theta / Wbar_J^theta|.
  int eSideCosets(const AffineWeyl& aw, Mask J) const;
  int fSideCosets(const AffineWeyl& aw, Mask J) const;
  int thetaFixedCosets(const AffineWeyl& aw, Mask J) const;

 private:
  const RootDatum& d_;
  DiagramAutomorphism theta_;
  RelativeDatum rel_;
  std::vector<IMat> relMats_;
};

struct CheckOutcome {
  bool ok = true;
  std::string detail;
};

// Spectral characterization ch_t(b phi) = ch_{Nt}(phi) and the Fourier constant.
CheckOutcome verifySpectralCharacterization(const BaseChangeContext& ctx, const AffineWeyl& aw,
                                            const CentralElement& phi, Mask J);
// b_2(phi * 1_{J2}) = b_1(phi) * 1_{J2}. For split data this is checked on
// T-expansions; in general through B_J^{-1} read off the principal series.
CheckOutcome verifyBcChangeParahoric(const BaseChangeContext& ctx, const PrincipalSeriesModel& m,
                                     const CentralElement& phi, Mask J1, Mask J2);
// Constant term to the theta-stable Levi M commutes with base change.
CheckOutcome verifyBcConstantTerm(const BaseChangeContext& ctx, const CentralElement& phi, Mask M);
// w-conjugation for w in W^theta: invariance of stored functions and transport
// of the double-coset labels J -> wJw^{-1}.
CheckOutcome verifyBcWConjugation(const BaseChangeContext& ctx, const AffineWeyl& aw, const CentralElement& phi,
                                  int w, Mask J);
// b(f * g) = b(f) * b(g) for lattice convolution, plus the Hecke-side product
// B(f * g) = B(f) B(g) when the algebra is supplied.
CheckOutcome verifyBcHomomorphism(const BaseChangeContext& ctx, const CentralElement& f, const CentralElement& g,
                                  const HeckeAlgebra* H = nullptr);
// Split data: b(z_mu) = z_{r mu} as invariant functions and as J-level T-expansions.
CheckOutcome verifySplitBaseChange(const BaseChangeContext& ctx, const HeckeAlgebra& H, const IVec& mu, Mask J);

}  // namespace parahoric
