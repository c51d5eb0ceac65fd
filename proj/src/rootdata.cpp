#include "parahoric/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parahoric {

namespace {

IMat cartanFor(const std::string& tag) {
  if (tag == "A2") return {{2, -1}, {-1, 2}};
  if (tag == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  if (tag == "B2") return {{2, -2}, {-1, 2}};
  if (tag == "C2") return {{2, -1}, {-2, 2}};
  if (tag == "G2") return {{2, -1}, {-3, 2}};
  if (tag == "B3") return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  if (tag == "C3") return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  return {};
}

}  // namespace

std::vector<std::string> RootDatum::supportedTypes() {
  return {"A1", "SL2", "PGL2", "GL2", "GL3", "A2", "A3", "B2", "C2", "G2", "B3", "C3"};
}

int WeylGroup::find(const IMat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::string WeylGroup::wordString(int w) const {
  if (words_[w].empty()) return "e";
  std::string s;
  for (int k : words_[w]) s += "s" + std::to_string(k);
  return s;
}

RootDatum RootDatum::build(const std::string& tag) {
  RootDatum d;
  d.label_ = tag;
  if (tag == "A1" || tag == "SL2") {
    d.n_ = d.l_ = 1;
    d.simpleRoots_ = {{2}};
    d.simpleCoroots_ = {{1}};
    d.dominantBasis_ = {{1}};
  } else if (tag == "PGL2") {
    d.n_ = d.l_ = 1;
    d.simpleRoots_ = {{1}};
    d.simpleCoroots_ = {{2}};
    d.dominantBasis_ = {{1}};
  } else if (tag == "GL2" || tag == "GL3") {
    d.n_ = tag == "GL2" ? 2 : 3;
    d.l_ = d.n_ - 1;
    for (int i = 0; i < d.l_; ++i) {
      IVec a(d.n_, 0);
      a[i] = 1;
      a[i + 1] = -1;
      d.simpleRoots_.push_back(a);
      d.simpleCoroots_.push_back(a);
    }
    for (int i = 0; i < d.n_; ++i) {
      IVec b(d.n_, 0);
      for (int j = 0; j <= i; ++j) b[j] = 1;
      d.dominantBasis_.push_back(b);
    }
  } else {
    IMat c = cartanFor(tag);
    if (c.empty()) throw std::invalid_argument("unsupported root datum type: " + tag);
    // Coweight lattice: simple roots are the coordinate functionals and the
    // coroot alpha_j^vee has coordinates given by column j of the Cartan matrix.
    d.n_ = d.l_ = static_cast<int>(c.size());
    for (int i = 0; i < d.n_; ++i) {
      IVec a(d.n_, 0), cv(d.n_, 0);
      a[i] = 1;
      for (int k = 0; k < d.n_; ++k) cv[k] = c[k][i];
      d.simpleRoots_.push_back(a);
      d.simpleCoroots_.push_back(cv);
      d.dominantBasis_.push_back(a);
    }
  }
  d.finish();
  return d;
}

void RootDatum::finish() {
  cartan_.assign(l_, IVec(l_, 0));
  for (int i = 0; i < l_; ++i)
    for (int j = 0; j < l_; ++j) cartan_[i][j] = dot(simpleRoots_[i], simpleCoroots_[j]);
  for (int i = 0; i < l_; ++i)
    if (cartan_[i][i] != 2) throw std::logic_error("simple root pairing is not 2");

  // Roots with coroots and simple-root coordinates by closure.
  std::map<IVec, Root> found;
  std::deque<IVec> queue;
  for (int i = 0; i < l_; ++i) {
    Root r;
    r.covector = simpleRoots_[i];
    r.coroot = simpleCoroots_[i];
    r.coeffs.assign(l_, 0);
    r.coeffs[i] = 1;
    found[r.covector] = r;
    queue.push_back(r.covector);
  }
  while (!queue.empty()) {
    Root r = found[queue.front()];
    queue.pop_front();
    for (int k = 0; k < l_; ++k) {
      int p = dot(r.covector, simpleCoroots_[k]);
      int pv = dot(simpleRoots_[k], r.coroot);
      Root s;
      s.covector = sub(r.covector, scale(simpleRoots_[k], p));
      s.coroot = sub(r.coroot, scale(simpleCoroots_[k], pv));
      s.coeffs = r.coeffs;
      s.coeffs[k] -= p;
      if (!found.count(s.covector)) {
        found[s.covector] = s;
        queue.push_back(s.covector);
      }
    }
    if (found.size() > 200) throw std::logic_error("root system is not finite");
  }
  std::vector<Root> pos, negs;
  for (auto& [k, r] : found) {
    r.height = 0;
    for (int c : r.coeffs) r.height += c;
    r.positive = r.height > 0;
    bool allNonneg = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c >= 0; });
    bool allNonpos = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c <= 0; });
    if (!allNonneg && !allNonpos) throw std::logic_error("root with mixed-sign coordinates");
    if (r.positive) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    return a.height != b.height ? a.height < b.height : a.coeffs < b.coeffs;
  });
  for (const auto& r : pos) negs.push_back(found[neg(r.covector)]);
  roots_ = pos;
  roots_.insert(roots_.end(), negs.begin(), negs.end());
  positive_.clear();
  for (size_t i = 0; i < pos.size(); ++i) positive_.push_back(static_cast<int>(i));
  highest_ = pos.empty() ? -1 : static_cast<int>(pos.size()) - 1;
  for (size_t i = 0; i < roots_.size(); ++i) rootIndex_[roots_[i].covector] = static_cast<int>(i);

  // Weyl group: breadth-first in ShortLex order of words.
  WeylGroup& W = weyl_;
  std::vector<IMat> gens(l_ + 1);
  for (int k = 1; k <= l_; ++k) {
    IMat m = identityMatrix(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m[i][j] -= simpleCoroots_[k - 1][i] * simpleRoots_[k - 1][j];
    gens[k] = m;
  }
  W.mats_ = {identityMatrix(n_)};
  W.words_ = {{}};
  W.index_[W.mats_[0]] = 0;
  std::vector<int> level = {0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int w : level)
      for (int k = 1; k <= l_; ++k) {
        IMat m = matMul(W.mats_[w], gens[k]);
        if (W.index_.count(m)) continue;
        int id = static_cast<int>(W.mats_.size());
        W.index_[m] = id;
        W.mats_.push_back(m);
        auto word = W.words_[w];
        word.push_back(k);
        W.words_.push_back(word);
        next.push_back(id);
      }
    if (W.mats_.size() > 5000) throw std::logic_error("Weyl group is not finite");
    level = next;
  }
  int N = W.size();
  W.mul_.assign(N, std::vector<int>(N, -1));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) W.mul_[a][b] = W.find(matMul(W.mats_[a], W.mats_[b]));
  W.inv_.assign(N, -1);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (W.mul_[a][b] == 0) W.inv_[a] = b;
  W.simple_.assign(l_ + 1, -1);
  for (int k = 1; k <= l_; ++k) W.simple_[k] = W.find(gens[k]);
  W.longest_ = 0;
  for (int w = 0; w < N; ++w)
    if (W.length(w) > W.length(W.longest_)) W.longest_ = w;

  rootAct_.assign(N, std::vector<int>(roots_.size(), -1));
  for (int w = 0; w < N; ++w)
    for (size_t r = 0; r < roots_.size(); ++r) {
      IVec img = vecMat(roots_[r].covector, W.mats_[W.inv_[w]]);
      rootAct_[w][r] = rootIndex(img);
      if (rootAct_[w][r] < 0) throw std::logic_error("Weyl group does not permute the roots");
    }
}

int RootDatum::rootIndex(const IVec& covector) const {
  auto it = rootIndex_.find(covector);
  return it == rootIndex_.end() ? -1 : it->second;
}

bool RootDatum::isDominant(const IVec& x) const {
  for (int k = 1; k <= l_; ++k)
    if (dot(alpha(k), x) < 0) return false;
  return true;
}

bool RootDatum::isStrictlyDominant(const IVec& x) const {
  for (int k = 1; k <= l_; ++k)
    if (dot(alpha(k), x) <= 0) return false;
  return true;
}

IVec RootDatum::reflect(int k, const IVec& x) const {
  return sub(x, scale(coroot(k), dot(alpha(k), x)));
}

std::vector<IVec> RootDatum::orbit(const IVec& x) const {
  std::set<IVec> seen = {x};
  std::deque<IVec> queue = {x};
  while (!queue.empty()) {
    IVec y = queue.front();
    queue.pop_front();
    for (int k = 1; k <= l_; ++k) {
      IVec z = reflect(k, y);
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

IVec RootDatum::dominantRep(const IVec& x) const {
  IVec y = x;
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 1; k <= l_; ++k)
      if (dot(alpha(k), y) < 0) {
        y = reflect(k, y);
        changed = true;
      }
  }
  return y;
}

IVec RootDatum::twoRho() const {
  IVec s(n_, 0);
  for (int r : positive_) s = add(s, roots_[r].covector);
  return s;
}

std::vector<int> RootDatum::parabolicSubgroup(Mask m) const {
  std::vector<int> out;
  for (int w = 0; w < weyl_.size(); ++w) {
    bool ok = true;
    for (int k : weyl_.word(w)) ok = ok && hasBit(m, k);
    if (ok) out.push_back(w);
  }
  return out;
}

int RootDatum::orbitNorm(const IVec& x) const {
  int best = 0;
  for (const auto& y : orbit(x))
    for (int c : y) best = std::max(best, std::abs(c));
  return best;
}

std::vector<IVec> RootDatum::dominantUpTo(int bound) const {
  std::vector<IVec> out;
  IVec x(n_, -bound);
  for (;;) {
    if (isDominant(x) && orbitNorm(x) <= bound) out.push_back(x);
    int i = 0;
    while (i < n_ && x[i] == bound) x[i++] = -bound;
    if (i == n_) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    int na = 0, nb = 0;
    for (int c : a) na += std::abs(c);
    for (int c : b) nb += std::abs(c);
    return na != nb ? na < nb : a < b;
  });
  return out;
}

DiagramAutomorphism DiagramAutomorphism::build(const RootDatum& d, const std::string& desc, int r) {
  const int n = d.rank(), l = d.semisimpleRank();
  DiagramAutomorphism t;
  t.perm.resize(l + 1);
  for (int k = 0; k <= l; ++k) t.perm[k] = k;
  bool isGL = d.label().rfind("GL", 0) == 0;
  if (desc == "id" || desc.empty()) {
    t.matrix = identityMatrix(n);
  } else if (desc == "flip" && isGL) {
    t.matrix.assign(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) t.matrix[i][n - 1 - i] = -1;
    for (int k = 1; k <= l; ++k) t.perm[k] = l + 1 - k;
  } else {
    std::string list = desc;
    if (desc == "flip") {
      list.clear();
      for (int k = 1; k <= l; ++k) list += (k > 1 ? "," : "") + std::to_string(l + 1 - k);
    } else if (desc.rfind("perm:", 0) == 0) {
      list = desc.substr(5);
    }
    IVec p;
    try {
      p = parseVec(list);
    } catch (const std::exception&) {
      throw std::invalid_argument("unrecognised theta descriptor: " + desc);
    }
    if (static_cast<int>(p.size()) != l) throw std::invalid_argument("theta permutation has wrong length");
    for (int k = 1; k <= l; ++k) t.perm[k] = p[k - 1];
    if (isGL || n != l) throw std::invalid_argument("explicit theta permutations need a semisimple lattice");
    // Theta is determined on the coroot span: theta * A = A_pi.
    QMat a(n, QVec(n)), api(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int k = 1; k <= l; ++k) {
        a[i][k - 1] = d.coroot(k)[i];
        if (t.perm[k] < 1 || t.perm[k] > l) throw std::invalid_argument("theta permutation out of range");
        api[i][k - 1] = d.coroot(t.perm[k])[i];
      }
    // Solve row by row: theta_row * A = api_row.
    QMat at(n, QVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at[i][j] = a[j][i];
    t.matrix.assign(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) {
      QVec row = solveQ(at, api[i]);
      for (int j = 0; j < n; ++j) {
        if (row[j].get_den() != 1) throw std::invalid_argument("theta is not integral on the lattice");
        t.matrix[i][j] = static_cast<int>(row[j].get_num().get_si());
      }
    }
  }
  long long det = determinant(t.matrix);
  if (det != 1 && det != -1) throw std::invalid_argument("theta is not a lattice automorphism");
  // integer inverse via adjugate-free solve
  QMat m(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = t.matrix[i][j];
  t.inverse.assign(n, IVec(n, 0));
  for (int j = 0; j < n; ++j) {
    QVec e(n, 0);
    e[j] = 1;
    QVec col = solveQ(m, e);
    for (int i = 0; i < n; ++i) t.inverse[i][j] = static_cast<int>(col[i].get_num().get_si());
  }
  for (int k = 1; k <= l; ++k) {
    if (t.apply(d.coroot(k)) != d.coroot(t.perm[k]))
      throw std::invalid_argument("theta does not permute the simple coroots");
    if (t.applyCovector(d.alpha(k)) != d.alpha(t.perm[k]))
      throw std::invalid_argument("theta does not permute the simple roots");
  }
  IMat p = t.matrix;
  t.order = 1;
  while (p != identityMatrix(n)) {
    p = matMul(p, t.matrix);
    if (++t.order > 24) throw std::invalid_argument("theta has no finite order");
  }
  if (r < 1 || r % t.order != 0)
    throw std::invalid_argument("extension degree must be a positive multiple of the order of theta");
  t.degree = r;
  return t;
}

int DiagramAutomorphism::applyWeyl(const RootDatum& d, int w) const {
  return d.weyl().find(matMul(matMul(matrix, d.weyl().matrix(w)), inverse));
}

bool DiagramAutomorphism::isIdentity() const { return matrix == identityMatrix(static_cast<int>(matrix.size())); }

std::string DiagramAutomorphism::describe() const {
  std::string s = "perm=";
  for (size_t k = 1; k < perm.size(); ++k) s += (k > 1 ? "," : "") + std::to_string(perm[k]);
  return s + " order=" + std::to_string(order) + " r=" + std::to_string(degree);
}

RelativeDatum fold(const RootDatum& d, const DiagramAutomorphism& theta) {
  const WeylGroup& W = d.weyl();
  const int n = d.rank(), l = d.semisimpleRank();
  RelativeDatum rel;
  for (int w = 0; w < W.size(); ++w)
    if (matMul(theta.matrix, W.matrix(w)) == matMul(W.matrix(w), theta.matrix)) rel.relativeWeyl.push_back(w);

  IMat diff = theta.matrix;
  for (int i = 0; i < n; ++i) diff[i][i] -= 1;
  rel.fixedBasis = integerKernel(diff);

  std::set<IVec> restr;
  for (const auto& r : d.roots()) {
    IVec x;
    for (const auto& b : rel.fixedBasis) x.push_back(dot(r.covector, b));
    if (!isZero(x)) restr.insert(x);
  }
  rel.restrictedRoots.assign(restr.begin(), restr.end());

  // Folding generators: the longest element of each theta-orbit of simple labels.
  std::vector<bool> seen(l + 1, false);
  for (int k = 1; k <= l; ++k) {
    if (seen[k]) continue;
    Mask orbitMask = 0;
    for (int j = k; !seen[j]; j = theta.perm[j]) {
      seen[j] = true;
      orbitMask |= 1u << j;
    }
    int best = 0;
    for (int w : d.parabolicSubgroup(orbitMask))
      if (W.length(w) > W.length(best)) best = w;
    rel.foldingGenerators.push_back(best);
  }
  std::set<int> gen = {0};
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int g : rel.foldingGenerators) {
      int x = W.mul(w, g);
      if (gen.insert(x).second) queue.push_back(x);
    }
  }
  rel.generatedByFoldingGenerators =
      std::vector<int>(gen.begin(), gen.end()) == rel.relativeWeyl;

  std::set<std::vector<IVec>> images;
  bool stable = true;
  for (int w : rel.relativeWeyl) {
    std::vector<IVec> img;
    for (const auto& b : rel.fixedBasis) {
      IVec y = W.act(w, b);
      stable = stable && theta.apply(y) == y;
      img.push_back(y);
    }
    images.insert(img);
  }
  rel.faithfulOnFixedLattice = stable && images.size() == rel.relativeWeyl.size();
  return rel;
}

DatumConfig parseDatumConfig(std::istream& in) {
  DatumConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "type") cfg.type = val;
    else if (key == "theta") cfg.theta = val;
    else if (key == "r") cfg.r = std::stoi(val);
    else throw std::invalid_argument("unknown datum config key: " + key);
  }
  if (cfg.type.empty()) throw std::invalid_argument("datum config lacks a type");
  return cfg;
}

}  // namespace parahoric
