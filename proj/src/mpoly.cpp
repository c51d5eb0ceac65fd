#include "parahoric/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace parahoric {

MPoly::MPoly(int nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.emplace(Exps(nvars, 0), c).first->second.canonicalize();
}

MPoly MPoly::monomial(int nvars, const Rational& c, const Exps& e) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("monomial arity mismatch");
  MPoly r(nvars);
  if (c != 0) r.terms_.emplace(e, c).first->second.canonicalize();
  return r;
}

MPoly MPoly::fromLaurent(int nvars, const Laurent& l) {
  MPoly r(nvars);
  for (const auto& [e, c] : l.terms()) {
    Exps x(nvars, 0);
    x[0] = e;
    r.terms_.emplace(std::move(x), c);
  }
  return r;
}

void MPoly::check(const MPoly& o) const {
  if (nvars_ != o.nvars_ && !isZero() && !o.isZero())
    throw std::invalid_argument("MPoly arity mismatch");
}

void MPoly::addScaledMonomial(const MPoly& b, const Rational& c, const Exps& e) {
  check(b);
  if (c == 0) return;
  if (nvars_ == 0) nvars_ = b.nvars_;
  for (const auto& [x, a] : b.terms_) {
    Exps y = x;
    for (int k = 0; k < nvars_; ++k) y[k] += e[k];
    auto [it, inserted] = terms_.try_emplace(std::move(y), 0);
    it->second += c * a;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.isZero()) return *this;
  addScaledMonomial(o, 1, Exps(o.nvars_, 0));
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.isZero()) return *this;
  addScaledMonomial(o, -1, Exps(o.nvars_, 0));
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [x, c] : r.terms_) c = -c;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check(b);
  MPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [x, c] : b.terms_) r.addScaledMonomial(a, c, x);
  return r;
}

std::optional<MPoly> MPoly::divideExact(const MPoly& d) const {
  if (d.isZero()) throw std::domain_error("division by zero MPoly");
  if (isZero()) return MPoly(nvars_);
  check(d);
  // Lex-leading-term division; the quotient exponents must lie in the box
  // [min(this) - max(d), max(this) - min(d)] coordinatewise, which bounds the loop.
  const int n = nvars_;
  Exps lo(n, 0), hi(n, 0);
  auto bounds = [n](const MPoly& p, Exps& mn, Exps& mx) {
    mn = p.terms_.begin()->first;
    mx = mn;
    for (const auto& [x, c] : p.terms_)
      for (int k = 0; k < n; ++k) {
        mn[k] = std::min(mn[k], x[k]);
        mx[k] = std::max(mx[k], x[k]);
      }
  };
  Exps amin, amax, dmin, dmax;
  bounds(*this, amin, amax);
  bounds(d, dmin, dmax);
  for (int k = 0; k < n; ++k) {
    lo[k] = amin[k] - dmax[k];
    hi[k] = amax[k] - dmin[k];
  }
  const auto& [dlead, dc] = *d.terms_.rbegin();
  MPoly rem = *this, quo(n);
  while (!rem.isZero()) {
    const auto& [rlead, rc] = *rem.terms_.rbegin();
    Exps e(n);
    for (int k = 0; k < n; ++k) {
      e[k] = rlead[k] - dlead[k];
      if (e[k] < lo[k] || e[k] > hi[k]) return std::nullopt;
    }
    Rational c = rc / dc;
    quo.terms_.emplace(e, c);
    rem.addScaledMonomial(d, -c, e);
  }
  return quo;
}

std::map<MPoly::Exps, Laurent> MPoly::splitByTorus() const {
  std::map<Exps, Laurent> out;
  for (const auto& [x, c] : terms_) {
    Exps t(x.begin() + 1, x.end());
    out[t] += Laurent::monomial(c, x[0]);
  }
  return out;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_ && !isZero())
    throw std::invalid_argument("evaluation point arity mismatch");
  Rational sum = 0;
  for (const auto& [x, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < nvars_; ++k) {
      Rational base = x[k] >= 0 ? point[k] : Rational(1) / point[k];
      for (int j = 0; j < std::abs(x[k]); ++j) t *= base;
    }
    sum += t;
  }
  return sum;
}

std::string MPoly::pretty(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [x, c] = *it;
    Rational a = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (x[k] == 0) continue;
      std::string nm = k < static_cast<int>(names.size()) ? names[k]
                       : (k == 0 ? std::string("v") : "s" + std::to_string(k));
      if (!mono.empty()) mono += "*";
      mono += nm;
      if (x[k] != 1) mono += "^" + std::to_string(x[k]);
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace parahoric
