#include "parahoric/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace parahoric {

Rational parseRational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string formatRational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Laurent::Laurent(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

// Callers may pass unreduced fractions; GMP arithmetic requires canonical form.
Laurent::Laurent(const Rational& c) {
  if (c != 0) {
    terms_.emplace_back(0, c);
    terms_.back().second.canonicalize();
  }
}

Laurent Laurent::monomial(const Rational& c, int e) {
  Laurent r;
  if (c != 0) {
    r.terms_.emplace_back(e, c);
    r.terms_.back().second.canonicalize();
  }
  return r;
}

bool Laurent::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational Laurent::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

int Laurent::minDegree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.front().first;
}

int Laurent::maxDegree() const {
  if (terms_.empty()) throw std::logic_error("degree of zero polynomial");
  return terms_.back().first;
}

void Laurent::normalize() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.second == 0; }),
               terms_.end());
}

void Laurent::addScaled(const Laurent& b, const Rational& c, int e) {
  if (c == 0 || b.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->first < j->first + e)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == terms_.end() || j->first + e < i->first) {
      out.emplace_back(j->first + e, c * j->second);
      ++j;
    } else {
      Rational s = i->second + c * j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  addScaled(o, 1, 0);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  addScaled(o, -1, 0);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.isZero() || b.isZero()) return {};
  if (b.terms_.size() == 1) {
    Laurent r = a;
    for (auto& t : r.terms_) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return r;
  }
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  Laurent r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

std::optional<Laurent> Laurent::divideExact(const Laurent& d) const {
  if (d.isZero()) throw std::domain_error("division by zero Laurent polynomial");
  if (isZero()) return Laurent();
  // Shift both to ordinary polynomials with nonzero constant term, then long-divide.
  int a0 = minDegree(), d0 = d.minDegree();
  std::vector<Rational> num(maxDegree() - a0 + 1), den(d.maxDegree() - d0 + 1);
  for (const auto& [e, c] : terms_) num[e - a0] = c;
  for (const auto& [e, c] : d.terms_) den[e - d0] = c;
  if (num.size() < den.size()) return std::nullopt;
  std::vector<Rational> quo(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (size_t k = quo.size(); k-- > 0;) {
    Rational c = num[k + den.size() - 1] / lead;
    quo[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) return std::nullopt;
  Laurent r;
  for (size_t k = 0; k < quo.size(); ++k)
    if (quo[k] != 0) r.terms_.emplace_back(static_cast<int>(k) + a0 - d0, quo[k]);
  return r;
}

Rational Laurent::evaluate(const Rational& v) const {
  if (v == 0) throw std::domain_error("Laurent evaluation at v = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? v : Rational(1) / v;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    sum += c * p;
  }
  return sum;
}

double Laurent::evaluate(double v) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(v, e);
  return sum;
}

bool Laurent::operator<(const Laurent& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t k = 0; k < n; ++k) {
    if (terms_[k].first != o.terms_[k].first) return terms_[k].first < o.terms_[k].first;
    if (terms_[k].second != o.terms_[k].second) return terms_[k].second < o.terms_[k].second;
  }
  return terms_.size() < o.terms_.size();
}

std::string Laurent::serialize() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += ',';
    s += terms_[k].second.get_str();
    s += ':';
    s += std::to_string(terms_[k].first);
  }
  return s;
}

Laurent Laurent::parse(const std::string& s) {
  Laurent r;
  if (s == "0" || s.empty()) return r;
  std::stringstream ss(s);
  std::string item;
  std::map<int, Rational> acc;
  while (std::getline(ss, item, ',')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad Laurent term: " + item);
    acc[std::stoi(item.substr(colon + 1))] += parseRational(item.substr(0, colon));
  }
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, c);
  return r;
}

std::string Laurent::pretty() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < terms_.size(); ++k) {
    const auto& [e, c] = terms_[k];
    Rational a = abs(c);
    if (k == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = (a == 1);
    if (!unit || e == 0) s += a.get_str();
    if (e != 0) {
      s += "v";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace parahoric
