#pragma once

#include "parahoric/hecke.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace parahoric {

// Element of the Bernstein presentation: sum of c * theta_lambda * T_u with u
// in the finite Weyl group.
struct BernsteinForm {
  std::map<std::pair<IVec, int>, Laurent> terms;

  void add(const IVec& lambda, int u, const Laurent& c);
  void addScaled(const BernsteinForm& o, const Laurent& c);
  bool isZero() const { return terms.empty(); }
  bool operator==(const BernsteinForm& o) const { return terms == o.terms; }
};

// Bernstein-Lusztig calculus over an equal-parameter Hecke algebra:
//   T_s theta_lambda = theta_{s lambda} T_s + (q-1)(theta_lambda - theta_{s lambda})/(1 - theta_{-alpha^vee}).
class BernsteinCalculus {
 public:
  explicit BernsteinCalculus(const HeckeAlgebra& H);

  const HeckeAlgebra& algebra() const { return H_; }

  static BernsteinForm theta(const IVec& lambda);
  BernsteinForm finiteBasis(int w) const;

  BernsteinForm leftMulSimple(int k, const BernsteinForm& f) const;
  BernsteinForm leftMulFinite(int w, const BernsteinForm& f) const;
  BernsteinForm rightMulSimple(const BernsteinForm& f, int k) const;
  BernsteinForm rightMulSimpleInverse(const BernsteinForm& f, int k) const;
  BernsteinForm rightMulTheta(const BernsteinForm& f, const IVec& mu) const;
  BernsteinForm multiply(const BernsteinForm& a, const BernsteinForm& b) const;

  // T_w theta_lambda, memoized.
  const BernsteinForm& finiteTimesTheta(int w, const IVec& lambda) const;
  // Expansion of T_x, memoized through the reduced word.
  BernsteinForm fromBasis(const AffElem& x) const;
  BernsteinForm fromHecke(const HeckeElement& h) const;
  BernsteinForm fromCentral(const CentralElement& z) const;
  HeckeElement toHecke(const BernsteinForm& f) const;

 private:
  BernsteinForm omegaForm(const AffElem& omega) const;
  const HeckeAlgebra& H_;
  const AffineWeyl& aw_;
  const RootDatum& d_;
  IVec s0Coroot_;
  int s0Finite_ = 0;
  int s0TranslationLength_ = 0;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, IVec>, BernsteinForm> ftMemo_;
  mutable std::map<AffElem, BernsteinForm> basisMemo_;
};

}  // namespace parahoric
