#include "parahoric/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parahoric {

IMat identityMatrix(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat matMul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j])
        for (size_t l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
  return c;
}

IVec matVec(const IMat& a, const IVec& x) {
  IVec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

IVec vecMat(const IVec& row, const IMat& a) {
  IVec y(a.empty() ? 0 : a[0].size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) y[j] += row[i] * a[i][j];
  return y;
}

IMat transpose(const IMat& a) {
  if (a.empty()) return {};
  IMat t(a[0].size(), IVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

int dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec add(const IVec& a, const IVec& b) {
  IVec c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

IVec scale(const IVec& a, int k) {
  IVec c = a;
  for (auto& x : c) x *= k;
  return c;
}

IVec neg(const IVec& a) { return scale(a, -1); }

bool isZero(const IVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

long long determinant(const IMat& a) {
  size_t n = a.size();
  QMat m(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  Rational det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.get_num().get_si();
}

SmithResult smithNormalForm(const IMat& a0) {
  std::vector<std::vector<long long>> a;
  for (const auto& row : a0) a.emplace_back(row.begin(), row.end());
  size_t n = a.size(), m = n ? a[0].size() : 0;
  SmithResult res;
  size_t t = 0;
  while (t < n && t < m) {
    // pivot: smallest nonzero absolute value in the remaining block
    long long best = 0;
    size_t pi = 0, pj = 0;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        long long f = a[i][t] / a[t][t];
        for (size_t j = t; j < m; ++j) a[i][j] -= f * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m; ++j) {
        long long f = a[t][j] / a[t][t];
        for (size_t i = t; i < n; ++i) a[i][j] -= f * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility condition on the remaining block
        for (size_t i = t + 1; i < n && clean; ++i)
          for (size_t j = t + 1; j < m && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (size_t k = t; k < m; ++k) a[t][k] += a[i][k];
              clean = false;
            }
      }
    }
    res.invariants.push_back(std::llabs(a[t][t]));
    ++t;
  }
  res.rank = static_cast<int>(res.invariants.size());
  return res;
}

std::vector<IVec> integerKernel(const IMat& a) {
  // Column operations a -> a U with U unimodular, tracked on U; columns of U
  // whose image is zero span the kernel.
  size_t n = a.size(), m = n ? a[0].size() : 0;
  std::vector<std::vector<long long>> A;
  for (const auto& row : a) A.emplace_back(row.begin(), row.end());
  std::vector<std::vector<long long>> U(m, std::vector<long long>(m, 0));
  for (size_t i = 0; i < m; ++i) U[i][i] = 1;
  auto colOp = [&](size_t dst, size_t src, long long f) {
    for (size_t i = 0; i < n; ++i) A[i][dst] -= f * A[i][src];
    for (size_t i = 0; i < m; ++i) U[i][dst] -= f * U[i][src];
  };
  auto colSwap = [&](size_t x, size_t y) {
    for (size_t i = 0; i < n; ++i) std::swap(A[i][x], A[i][y]);
    for (size_t i = 0; i < m; ++i) std::swap(U[i][x], U[i][y]);
  };
  size_t piv = 0;
  for (size_t r = 0; r < n && piv < m; ++r) {
    for (;;) {
      size_t best = m;
      for (size_t j = piv; j < m; ++j)
        if (A[r][j] != 0 && (best == m || std::llabs(A[r][j]) < std::llabs(A[r][best]))) best = j;
      if (best == m) break;
      colSwap(piv, best);
      bool done = true;
      for (size_t j = piv + 1; j < m; ++j) {
        if (A[r][j] == 0) continue;
        colOp(j, piv, A[r][j] / A[r][piv]);
        if (A[r][j] != 0) done = false;
      }
      if (done) {
        ++piv;
        break;
      }
    }
  }
  std::vector<IVec> ker;
  for (size_t j = piv; j < m; ++j) {
    IVec v(m);
    for (size_t i = 0; i < m; ++i) v[i] = static_cast<int>(U[i][j]);
    ker.push_back(v);
  }
  return ker;
}

QVec toQ(const IVec& x) {
  QVec q(x.size());
  for (size_t i = 0; i < x.size(); ++i) q[i] = x[i];
  return q;
}

int rankQ(QMat m) {
  int rank = 0;
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
    size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

QVec solveQ(const QMat& a, const QVec& b) {
  size_t n = a.size();
  QMat m = a;
  for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("solveQ: singular system");
    std::swap(m[p], m[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

bool coordinatesIn(const std::vector<IVec>& basis, const IVec& x, QVec& coords) {
  // Least-squares-free exact solve: pick independent rows of the basis matrix.
  size_t k = basis.size(), n = x.size();
  QMat m(n, QVec(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
    m[i][k] = x[i];
  }
  size_t row = 0;
  std::vector<size_t> pivCol;
  for (size_t c = 0; c < k; ++c) {
    size_t p = row;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[row]);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[row][c];
      for (size_t j = c; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivCol.push_back(c);
    ++row;
  }
  for (size_t r = row; r < n; ++r)
    if (m[r][k] != 0) return false;
  coords.assign(k, 0);
  for (size_t r = 0; r < row; ++r) coords[pivCol[r]] = m[r][k] / m[r][pivCol[r]];
  return true;
}

std::string formatVec(const IVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

IVec parseVec(const std::string& s) {
  IVec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int x = std::stoi(item, &pos);
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw std::invalid_argument("bad integer vector: " + s);
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty integer vector");
  return v;
}

std::string formatQVec(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace parahoric
