#pragma once

#include "parahoric/laurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// Multivariate Laurent polynomial over Q. Variable 0 is v (q = v^2);
// variables 1..n are the torus coordinates s_1..s_n.
class MPoly {
 public:
  using Exps = std::vector<int>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  MPoly(int nvars, const Rational& c);

  static MPoly monomial(int nvars, const Rational& c, const Exps& e);
  // Laurent polynomial in v placed in variable 0.
  static MPoly fromLaurent(int nvars, const Laurent& l);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  // this += c * x^e * b
  void addScaledMonomial(const MPoly& b, const Rational& c, const Exps& e);

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  std::optional<MPoly> divideExact(const MPoly& d) const;

  // Group terms by the exponents of variables 1..n; the value is the Laurent
  // polynomial in v collected from variable 0.
  std::map<Exps, Laurent> splitByTorus() const;

  // Substitute v and s_i by rationals (all nonzero).
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string pretty(const std::vector<std::string>& names = {}) const;

 private:
  void check(const MPoly& o) const;
  int nvars_ = 0;
  std::map<Exps, Rational> terms_;
};

}  // namespace parahoric
