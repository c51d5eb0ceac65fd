#pragma once

#include "parahoric/laurent.hpp"

#include <string>
#include <vector>

namespace parahoric {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

IMat identityMatrix(int n);
IMat matMul(const IMat& a, const IMat& b);
IVec matVec(const IMat& a, const IVec& x);
IVec vecMat(const IVec& row, const IMat& a);
IMat transpose(const IMat& a);
int dot(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(const IVec& a, int k);
IVec neg(const IVec& a);
bool isZero(const IVec& a);
long long determinant(const IMat& a);

// Diagonal of the Smith normal form (nonzero invariant factors, ascending
// divisibility), plus the rank.
struct SmithResult {
  std::vector<long long> invariants;
  int rank = 0;
};
SmithResult smithNormalForm(const IMat& a);

// Z-basis of {x in Z^m : a x = 0}, returned as vectors.
std::vector<IVec> integerKernel(const IMat& a);

// Exact rational linear algebra.
QVec toQ(const IVec& x);
int rankQ(QMat m);
// Solves a x = b for square invertible a; throws otherwise.
QVec solveQ(const QMat& a, const QVec& b);
// Coordinates of x in the given (independent) column basis; nullopt-like
// failure signalled by returning false.
bool coordinatesIn(const std::vector<IVec>& basis, const IVec& x, QVec& coords);

std::string formatVec(const IVec& v);
IVec parseVec(const std::string& s);
std::string formatQVec(const QVec& v);

}  // namespace parahoric
