#pragma once

#include "parahoric/intmat.hpp"

#include <istream>
#include <map>
#include <string>
#include <vector>

namespace parahoric {

// Simple reflections are labelled 1..l throughout; label 0 is reserved for the
// affine reflection s_0. A subset of simple labels is a bitmask with bit k for s_k.
using Mask = unsigned;

inline bool hasBit(Mask m, int k) { return (m >> k) & 1u; }

struct Root {
  IVec covector;  // root as a linear form on the cocharacter lattice
  IVec coroot;    // matching coroot in the lattice
  IVec coeffs;    // coordinates in the simple roots
  bool positive = false;
  int height = 0;
};

// Finite Weyl group acting on the lattice, closed under the simple reflections.
class WeylGroup {
 public:
  int size() const { return static_cast<int>(mats_.size()); }
  const IMat& matrix(int w) const { return mats_[w]; }
  // ShortLex-minimal reduced word in labels 1..l.
  const std::vector<int>& word(int w) const { return words_[w]; }
  int length(int w) const { return static_cast<int>(words_[w].size()); }
  int inverse(int w) const { return inv_[w]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int simple(int k) const { return simple_[k]; }
  int longest() const { return longest_; }
  int find(const IMat& m) const;
  IVec act(int w, const IVec& x) const { return matVec(mats_[w], x); }
  std::string wordString(int w) const;

 private:
  friend class RootDatum;
  std::vector<IMat> mats_;
  std::vector<std::vector<int>> words_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> simple_;  // indexed by label, simple_[0] unused
  std::map<IMat, int> index_;
  int longest_ = 0;
};

class RootDatum {
 public:
  static RootDatum build(const std::string& tag);
  static std::vector<std::string> supportedTypes();

  const std::string& label() const { return label_; }
  int rank() const { return n_; }             // lattice rank
  int semisimpleRank() const { return l_; }   // number of simple roots
  const IVec& alpha(int k) const { return simpleRoots_[k - 1]; }
  const IVec& coroot(int k) const { return simpleCoroots_[k - 1]; }
  // cartan(i,j) = <alpha_i, coroot_j>, labels 1..l
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const IMat& cartanMatrix() const { return cartan_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<int>& positiveRoots() const { return positive_; }
  int highestRoot() const { return highest_; }
  int rootIndex(const IVec& covector) const;
  // index of w.beta_r as a root (w acting on covectors by beta o w^{-1})
  int rootAct(int w, int r) const { return rootAct_[w][r]; }
  const WeylGroup& weyl() const { return weyl_; }
  const std::vector<IVec>& dominantBasis() const { return dominantBasis_; }

  int pairing(const IVec& covector, const IVec& x) const { return dot(covector, x); }
  bool isDominant(const IVec& x) const;
  bool isStrictlyDominant(const IVec& x) const;
  IVec reflect(int k, const IVec& x) const;
  std::vector<IVec> orbit(const IVec& x) const;
  IVec dominantRep(const IVec& x) const;
  // sum of positive roots as a covector
  IVec twoRho() const;
  Mask simpleMask() const { return ((1u << (l_ + 1)) - 1) & ~1u; }
  // elements of the standard parabolic subgroup W_M for the given simple labels
  std::vector<int> parabolicSubgroup(Mask m) const;
  // max over the orbit of the sup-norm of lattice coordinates
  int orbitNorm(const IVec& x) const;
  // dominant lattice vectors with orbitNorm <= bound, sorted
  std::vector<IVec> dominantUpTo(int bound) const;

 private:
  void finish();
  std::string label_;
  int n_ = 0, l_ = 0;
  std::vector<IVec> simpleRoots_, simpleCoroots_;
  IMat cartan_;
  std::vector<Root> roots_;
  std::vector<int> positive_;
  std::map<IVec, int> rootIndex_;
  int highest_ = -1;
  std::vector<std::vector<int>> rootAct_;
  WeylGroup weyl_;
  std::vector<IVec> dominantBasis_;
};

// Lattice automorphism permuting the simple roots and coroots.
struct DiagramAutomorphism {
  IMat matrix;
  IMat inverse;
  std::vector<int> perm;  // perm[k] for labels 0..l, perm[0] = 0
  int order = 1;
  int degree = 1;  // extension degree r, divisible by order

  static DiagramAutomorphism build(const RootDatum& d, const std::string& desc, int r);
  IVec apply(const IVec& x) const { return matVec(matrix, x); }
  IVec applyCovector(const IVec& a) const { return vecMat(a, inverse); }
  int applyWeyl(const RootDatum& d, int w) const;
  bool isIdentity() const;
  std::string describe() const;
};

struct RelativeDatum {
  std::vector<IVec> fixedBasis;           // Z-basis of the theta-fixed sublattice
  std::vector<int> relativeWeyl;          // W^theta, sorted by index
  std::vector<IVec> restrictedRoots;      // nonzero restrictions, in fixedBasis duals
  std::vector<int> foldingGenerators;     // longest elements of theta-orbits of simple labels
  bool generatedByFoldingGenerators = false;
  bool faithfulOnFixedLattice = false;
};

RelativeDatum fold(const RootDatum& d, const DiagramAutomorphism& theta);

// Plain-text datum description: "type = A2", "theta = 2,1" (or "flip"), "r = 2".
struct DatumConfig {
  std::string type;
  std::string theta = "id";
  int r = 1;
};
DatumConfig parseDatumConfig(std::istream& in);

}  // namespace parahoric
