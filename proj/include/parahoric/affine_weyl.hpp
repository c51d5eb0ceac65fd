#pragma once

#include "parahoric/laurent.hpp"
#include "parahoric/rootdata.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace parahoric {

constexpr int kMaxRank = 3;

// Element t_lambda * w of the extended affine Weyl group X semidirect W.
struct AffElem {
  std::array<int, kMaxRank> lam{};
  int w = 0;
  auto operator<=>(const AffElem&) const = default;
};

using AlcovePoint = QVec;

class AffineWeyl {
 public:
  explicit AffineWeyl(RootDatum d);

  const RootDatum& datum() const { return d_; }
  int rank() const { return d_.rank(); }
  int numGenerators() const { return d_.semisimpleRank() + 1; }
  Mask allGenerators() const { return (1u << numGenerators()) - 1; }

  AffElem identity() const { return {}; }
  AffElem translation(const IVec& lambda) const;
  AffElem finite(int w) const;
  AffElem generator(int k) const;  // s_0 for k = 0, simple reflection s_k otherwise
  IVec lambda(const AffElem& x) const;

  AffElem mul(const AffElem& x, const AffElem& y) const;
  AffElem inverse(const AffElem& x) const;
  int length(const AffElem& x) const;
  bool isPositiveAfter(int w, int root) const;  // w^{-1} beta_root > 0

  struct Word {
    AffElem omega;
    std::vector<int> letters;  // x = omega * s_{letters[0]} * ... ; ShortLex-minimal letters
  };
  Word reducedWord(const AffElem& x) const;
  std::vector<int> rightDescents(const AffElem& x) const;
  std::vector<int> leftDescents(const AffElem& x) const;

  bool bruhatLeq(const AffElem& x, const AffElem& y) const;
  std::vector<AffElem> bruhatInterval(const AffElem& y) const;

  // Canonical text key "lambda|finite word", e.g. "1,0|s1s2".
  std::string key(const AffElem& x) const;
  AffElem parseKey(const std::string& s) const;
  std::string wordString(const AffElem& x) const;
  bool shortLexLess(const AffElem& x, const AffElem& y) const;

  // Omega = length-zero elements, isomorphic to X / Q^vee.
  struct OmegaGroup {
    std::vector<long long> torsion;  // nontrivial invariant factors
    int freeRank = 0;
    std::vector<AffElem> elements;   // all elements when finite, generators otherwise
    std::vector<std::vector<int>> conjugation;  // omega s_k omega^{-1} = s_{conjugation[k]}
    bool finite() const { return freeRank == 0; }
    long long order() const;
  };
  const OmegaGroup& omega() const { return omega_; }

  // All elements of length <= cutoff whose translation has sup-norm <= cutoff + #positive roots.
  std::vector<AffElem> ball(int cutoff) const;

  // Parahoric subgroups, indexed by masks over the affine labels 0..l.
  bool isProperParahoric(Mask J) const { return J != allGenerators(); }
  std::vector<AffElem> parahoricGroup(Mask J) const;
  std::vector<int> finiteProjection(Mask J) const;
  Laurent poincare(Mask J) const;  // sum of q^{l(w)} over the parahoric group
  std::vector<Mask> properParahorics() const;
  Mask hyperspecial() const { return d_.simpleMask(); }
  Mask parseParahoric(const std::string& s) const;
  std::string parahoricName(Mask J) const;

  // Affine action on rational points of X (x) Q.
  AlcovePoint act(const AffElem& x, const AlcovePoint& p) const;
  bool fixes(const AffElem& x, const AlcovePoint& p) const { return act(x, p) == p; }
  AlcovePoint fundamentalCoweight(int k) const;
  AlcovePoint baseBarycenter() const;
  bool inBaseAlcove(const AlcovePoint& p) const;

  AffElem thetaAct(const DiagramAutomorphism& t, const AffElem& x) const;

 private:
  RootDatum d_;
  AffElem s0_;
  int numPos_ = 0;
  OmegaGroup omega_;
  void buildOmega();
};

}  // namespace parahoric
