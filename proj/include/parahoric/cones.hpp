#pragma once

#include "parahoric/basechange.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace parahoric {

// Standard parabolics P = MN are identified by the Levi mask M over labels
// 1..l; Delta_P is the complement of M in Delta_0. P = G is the full mask and
// P = B is the empty mask.
class ConeContext {
 public:
  explicit ConeContext(const RootDatum& d);

  const RootDatum& datum() const { return d_; }
  Mask full() const { return d_.simpleMask(); }
  Mask deltaP(Mask M) const { return full() & ~M; }
  int aP(Mask M) const;  // dim a_M
  int aG() const { return d_.rank() - d_.semisimpleRank(); }
  std::vector<Mask> parabolics() const;              // all Levi masks
  std::vector<Mask> containing(Mask Q) const;        // Levi masks M_P with M_Q in M_P

  // W_M-average: the projection a_0 -> a_M.
  QVec project(const QVec& H, Mask M) const;
  QVec hMap(const IVec& lambda, Mask M) const { return project(toQ(lambda), M); }
  Rational rootValue(int k, const QVec& H) const;
  // c_alpha(H) with H = sum c_alpha alpha^vee mod a_G.
  QVec corootCoordinates(const QVec& H) const;
  // Covector of the fundamental weight dual to alpha_k^vee (kills a_G).
  QVec fundamentalWeight(int k) const;

  // alpha(H_P) > 0 for alpha in Delta_P.
  bool tau(Mask M, const QVec& H) const;
  // c_alpha(H) > 0 for alpha in Delta_P.
  bool tauHat(Mask M, const QVec& H) const;
  // Relative acute cone tau_Q^P evaluated at H_Q.
  bool tauRelative(Mask MQ, Mask MP, const QVec& H) const;
  int arthurSum(Mask MQ, const QVec& H) const;

  // Norm-composed cone functions; the Levi must be theta-stable.
  bool chiN(const BaseChangeContext& ctx, const IVec& lambda, Mask M) const;
  bool chiHatN(const BaseChangeContext& ctx, const IVec& lambda, Mask M) const;
  // Eigenvalue criterion: |beta(N m)| < 1 for every root beta of N_P.
  bool contractsLieN(const BaseChangeContext& ctx, const IVec& lambda, Mask M) const;

  std::string parabolicName(Mask M) const;
  Mask parseParabolic(const std::string& s) const;

 private:
  const RootDatum& d_;
  QMat cartanInverse_;
  std::vector<QMat> projections_;  // indexed by Levi mask
};

// ------------------------------------------------------------ Hales chambers

struct Chamber {
  std::vector<int> signs;                   // sign of each hyperplane covector
  std::vector<IVec> samples;                // lattice points inside the chamber
  // pattern[p][w] = chi_hat_N(w lambda) for Levi mask p (index into parabolics())
  std::vector<std::vector<int>> pattern;
  bool constant = true;
};

struct ChamberDecomposition {
  std::vector<QVec> hyperplanes;  // normalized covectors
  std::vector<Mask> parabolics;
  std::vector<Chamber> chambers;
  bool exact = false;  // exact enumeration (rank <= 2) or sampled
  long long violations = 0;
};

ChamberDecomposition halesChambers(const ConeContext& cc, const BaseChangeContext& ctx, int samplesPerChamber,
                                   std::uint64_t seed);
// W'(P): Weyl elements w with chi_hat_N(w mu) = 1 for mu in the chamber;
// nullopt if the set depends on the sample.
std::optional<std::vector<int>> wprimeSet(const ConeContext& cc, const BaseChangeContext& ctx, Mask M,
                                          const Chamber& ch);

// ------------------------------------------------------- compact traces

// sum over lambda in W mu of chi_hat_N(lambda) * xi(eta^{-1} lambda), symbolic xi.
MPoly compactTraceFunctional(const ConeContext& cc, const BaseChangeContext& ctx, Mask M, int eta, const IVec& mu);

struct AtiyahBottResult {
  MPoly value;
  std::vector<int> fixedPoints;         // brute-force theta(w) = w by word permutation
  std::vector<int> unitDenominators;    // fixed points whose denominator is 1
  bool fixedPointsMatchRelativeWeyl = false;
};
// Throws std::domain_error when nu is not theta-regular.
AtiyahBottResult atiyahBott(const BaseChangeContext& ctx, const IVec& nu);
bool isThetaRegular(const BaseChangeContext& ctx, const IVec& nu);

struct UnitaryReport {
  int trials = 0;
  int failures = 0;
  double worstDeviation = 0;
  int kernelRank = 0;
  std::string firstFailure;
  bool ok() const { return failures == 0; }
};
// theta-fixed numeric xi and norm-zero nu: |xi(nu)| = 1 within tolerance.
UnitaryReport unitaryPartInvariance(const BaseChangeContext& ctx, int trials, std::uint64_t seed,
                                    double tolerance = 1e-10);

}  // namespace parahoric
