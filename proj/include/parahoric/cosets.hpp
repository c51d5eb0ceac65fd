#pragma once

#include "parahoric/affine_weyl.hpp"

#include <string>
#include <vector>

namespace parahoric {

// Elements w with w^{-1} alpha > 0 for every simple alpha in M.
std::vector<int> minCosetReps(const RootDatum& d, Mask M);

struct DoubleCoset {
  int rep = 0;                // canonical representative (see pgjRepresentatives)
  std::vector<int> members;   // sorted Weyl indices
};

// Partition of W into W_M w H double cosets for a subgroup H of W.
std::vector<DoubleCoset> doubleCosets(const RootDatum& d, Mask M, const std::vector<int>& H);

struct CosetTable {
  std::string kind;  // "left", "right", "double", "iwasawa"
  std::vector<AffElem> reps;
  std::vector<bool> thetaFixed;
  std::vector<bool> thetaStable;
};

// One minimal representative per double coset W_M \ W / pbar(W_J).
CosetTable pgjRepresentatives(const AffineWeyl& aw, Mask M, Mask J);

struct ThetaFixedReport {
  CosetTable table;
  int stableCosets = 0;
  std::vector<int> failures;  // indices of theta-stable double cosets without theta-fixed minimal reps
  bool ok() const { return failures.empty(); }
};

// Representatives chosen theta-fixed whenever the double coset is theta-stable.
ThetaFixedReport thetaFixedReps(const AffineWeyl& aw, Mask M, Mask J, const DiagramAutomorphism& t);

// Minimal-length member of x W_J (ShortLex tie-break).
AffElem iwasawaCell(const AffineWeyl& aw, const AffElem& x, Mask J);

struct CellLabelResult {
  bool cellsEqual = false;
  bool thetaFixed = false;
  bool tauEqual = false;
  bool lambdaMatches = false;
  bool consistent() const { return !cellsEqual || (thetaFixed && tauEqual && lambdaMatches); }
};

CellLabelResult cellLabelCheck(const AffineWeyl& aw, const IVec& nu, const IVec& lambda, int tau, int tau0,
                         int w, Mask J, const DiagramAutomorphism& t);

// Representatives of W_M / (W_M cap w pbar(W_J) w^{-1}), the M-side cell labels.
std::vector<int> mSideReps(const AffineWeyl& aw, Mask M, int w, Mask J);

struct CellLabelSweep {
  long long tuples = 0;
  long long equalCells = 0;
  long long violations = 0;
  std::string firstViolation;
};
// Exhaustive sweep of tuples with both elements of length <= cutoff.
CellLabelSweep cellLabelSweep(const AffineWeyl& aw, Mask M, Mask J, const DiagramAutomorphism& t, int cutoff);

// Inversion-set and alcove-side conditions for minimal coset representatives.
bool minimalRepsPreservePositivity(const AffineWeyl& aw, Mask M);

bool isThetaStableMask(const DiagramAutomorphism& t, Mask m);

}  // namespace parahoric
