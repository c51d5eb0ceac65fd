#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parahoric {

using Rational = mpq_class;

Rational parseRational(const std::string& s);
std::string formatRational(const Rational& r);

// Laurent polynomial in v with rational coefficients, q = v^2.
// Terms are kept sorted by exponent with no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<int, Rational>;

  Laurent() = default;
  Laurent(long c);
  Laurent(const Rational& c);

  static Laurent monomial(const Rational& c, int e);
  static Laurent v(int e = 1) { return monomial(1, e); }
  static Laurent q(int e = 1) { return monomial(1, 2 * e); }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(int e) const;
  int minDegree() const;
  int maxDegree() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent operator-() const;
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);

  // a += c * v^e * b, without temporaries
  void addScaled(const Laurent& b, const Rational& c, int e);

  Laurent shifted(int k) const;
  std::optional<Laurent> divideExact(const Laurent& d) const;

  Rational evaluate(const Rational& v) const;
  double evaluate(double v) const;

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  bool operator<(const Laurent& o) const;

  // "c0:e0,c1:e1,..." with "0" for the zero polynomial.
  std::string serialize() const;
  static Laurent parse(const std::string& s);
  std::string pretty() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

}  // namespace parahoric
