#pragma once

#include "parahoric/affine_weyl.hpp"
#include "parahoric/cache.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// Finite T-basis expansion. The parameter tag identifies the algebra an
// element belongs to; products of elements with different tags are rejected.
class HeckeElement {
 public:
  using Terms = std::map<AffElem, Laurent>;

  HeckeElement() = default;
  explicit HeckeElement(std::string tag) : tag_(std::move(tag)) {}

  const std::string& tag() const { return tag_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Laurent coeff(const AffElem& x) const;

  void add(const AffElem& x, const Laurent& c);
  void addScaled(const HeckeElement& o, const Laurent& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement scaled(const Laurent& c) const;
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  bool operator==(const HeckeElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

  // Exact division of every coefficient; nullopt if some division fails.
  std::optional<HeckeElement> divided(const Laurent& d) const;
  int maxLength(const AffineWeyl& aw) const;

 private:
  std::string tag_ = "q";
  Terms terms_;
};

// W-invariant finitely supported function on the lattice (an element of R^W),
// also used for plain lattice functions when invariance is not required.
struct CentralElement {
  std::map<IVec, Laurent> coeffs;

  static CentralElement orbitSum(const RootDatum& d, const IVec& mu);
  static CentralElement point(const IVec& lambda);
  bool isInvariant(const RootDatum& d) const;
  bool isInvariantUnder(const std::vector<IMat>& group) const;
  // Lattice convolution: t_a * t_b = t_{a+b}.
  CentralElement operator*(const CentralElement& o) const;
  CentralElement& operator+=(const CentralElement& o);
  CentralElement scaled(const Laurent& c) const;
  bool operator==(const CentralElement& o) const { return coeffs == o.coeffs; }
  bool isZero() const { return coeffs.empty(); }
  // Dominant-representative decomposition into orbit sums; nullopt if not invariant.
  std::optional<std::map<IVec, Laurent>> orbitCoordinates(const RootDatum& d) const;
  std::string describe() const;
};

class HeckeAlgebra {
 public:
  // Parameters q_s = v^{2 c_s}, c_s >= 1, indexed by affine labels 0..l; empty
  // means equal parameters q. Weights must be constant on conjugacy classes.
  explicit HeckeAlgebra(const AffineWeyl& aw, std::vector<int> weights = {}, StructureCache* cache = nullptr);

  const AffineWeyl& group() const { return aw_; }
  const RootDatum& datum() const { return aw_.datum(); }
  const std::string& tag() const { return tag_; }
  bool equalParameters() const;
  Laurent parameter(int k) const { return Laurent::q(weights_[k]); }
  // Sum of parameter weights along a reduced word; equals the length for equal parameters.
  int weightedLength(const AffElem& x) const;

  HeckeElement zero() const { return HeckeElement(tag_); }
  HeckeElement one() const { return basis(aw_.identity()); }
  HeckeElement basis(const AffElem& x) const;

  HeckeElement rightMulGenerator(const HeckeElement& h, int k) const;
  HeckeElement leftMulGenerator(int k, const HeckeElement& h) const;
  HeckeElement rightMulGeneratorInverse(const HeckeElement& h, int k) const;
  HeckeElement rightMulOmega(const HeckeElement& h, const AffElem& w) const;
  HeckeElement leftMulOmega(const AffElem& w, const HeckeElement& h) const;
  HeckeElement rightMulBasis(const HeckeElement& h, const AffElem& x) const;
  HeckeElement leftMulBasis(const AffElem& x, const HeckeElement& h) const;
  HeckeElement rightMulBasisInverse(const HeckeElement& h, const AffElem& x) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;
  // Memoized (and optionally persisted) T_x T_y.
  HeckeElement basisProduct(const AffElem& x, const AffElem& y) const;

  // theta_lambda through its canonical dominant decomposition.
  HeckeElement theta(const IVec& lambda) const;
  // theta_{l1 - l2} through an explicit decomposition into dominant l1, l2.
  HeckeElement thetaFrom(const IVec& l1, const IVec& l2) const;
  void canonicalSplit(const IVec& lambda, IVec& l1, IVec& l2) const;

  HeckeElement indicator(Mask J) const;
  Laurent poincare(Mask J) const;

  HeckeElement fromCentral(const CentralElement& z) const;  // sum of c_lambda theta_lambda
  HeckeElement bernsteinFunction(const IVec& mu) const;     // z_mu at Iwahori level
  HeckeElement toParahoric(const CentralElement& z, Mask J) const;  // z * 1_J
  // (h * 1_{J2}) / P_{J1}; throws unless J1 is contained in J2.
  HeckeElement changeParahoric(const HeckeElement& h, Mask J1, Mask J2) const;

  bool commutesWith(const HeckeElement& h, const HeckeElement& g) const;
  // Commutes with all T_s, the listed T_omega, and theta_lambda on the dominant basis.
  bool isCentral(const HeckeElement& h) const;
  // T_s h = h T_s = q_s h for every s in J.
  bool isBiInvariant(const HeckeElement& h, Mask J) const;
  // Anti-involution T_x -> T_{x^{-1}}.
  HeckeElement iota(const HeckeElement& h) const;

  std::string serialize(const HeckeElement& h) const;
  HeckeElement parse(const std::string& s) const;

 private:
  void checkTag(const HeckeElement& h) const;
  const AffineWeyl& aw_;
  std::vector<int> weights_;
  std::string tag_;
  StructureCache* cache_;
  mutable std::mutex memoMu_;
  mutable std::map<IVec, HeckeElement> thetaMemo_;
  mutable std::map<std::pair<AffElem, AffElem>, HeckeElement> productMemo_;
};

}  // namespace parahoric
