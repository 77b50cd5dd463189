#ifndef COXLINE_FORM_HPP
#define COXLINE_FORM_HPP

#include "coxline/arith.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace coxline {

using PlaneExps = std::array<long, 3>;   // exponents of x, y, z
using PlanePoint = std::array<Rational, 3>;

/// Degree-d monomials x^i y^j z^k in graded lex order with x > y > z.
inline std::vector<PlaneExps> plane_monomials(long d) {
  std::vector<PlaneExps> out;
  if (d < 0) return out;
  for (long i = d; i >= 0; --i) {
    for (long j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  }
  return out;
}

/// Homogeneous polynomial in x, y, z with rational coefficients. Terms are
/// kept in descending lex order (x > y > z); zero coefficients are dropped.
class HomogeneousForm {
 public:
  using Terms = std::map<PlaneExps, Rational, std::greater<>>;

  explicit HomogeneousForm(long degree = 0) : degree_(degree) {}

  static HomogeneousForm constant(const Rational& c) {
    HomogeneousForm f(0);
    f.add_term({0, 0, 0}, c);
    return f;
  }
  static HomogeneousForm linear(const Rational& cx, const Rational& cy, const Rational& cz) {
    HomogeneousForm f(1);
    f.add_term({1, 0, 0}, cx);
    f.add_term({0, 1, 0}, cy);
    f.add_term({0, 0, 1}, cz);
    return f;
  }

  long degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const PlaneExps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const PlaneExps& e, const Rational& c) {
    if (e[0] + e[1] + e[2] != degree_) {
      throw DomainError("term degree does not match form degree " + std::to_string(degree_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  HomogeneousForm& operator+=(const HomogeneousForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend HomogeneousForm operator+(HomogeneousForm f, const HomogeneousForm& g) { return f += g; }

  friend HomogeneousForm operator*(const Rational& k, const HomogeneousForm& f) {
    HomogeneousForm g(f.degree_);
    for (const auto& [e, c] : f.terms_) g.add_term(e, k * c);
    return g;
  }

  friend HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g) {
    HomogeneousForm h(f.degree_ + g.degree_);
    for (const auto& [e1, c1] : f.terms_) {
      for (const auto& [e2, c2] : g.terms_) {
        h.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
      }
    }
    return h;
  }

  HomogeneousForm pow(long k) const {
    HomogeneousForm r = constant(1);
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// d/dx (var 0), d/dy (var 1), d/dz (var 2).
  HomogeneousForm partial(std::size_t var) const {
    HomogeneousForm g(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      PlaneExps f = e;
      f[var] -= 1;
      g.add_term(f, c * e[var]);
    }
    return g;
  }

  Rational evaluate(const PlanePoint& p) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t v = 0; v < 3; ++v) {
        for (long k = 0; k < e[v]; ++k) t *= p[v];
      }
      sum += t;
    }
    return sum;
  }

  /// Coefficients against plane_monomials(degree()).
  std::vector<Rational> coefficient_vector() const {
    std::vector<Rational> v;
    for (const auto& e : plane_monomials(degree_)) v.push_back(coeff(e));
    return v;
  }

  friend bool operator==(const HomogeneousForm& f, const HomogeneousForm& g) {
    if (f.is_zero() && g.is_zero()) return true;
    return f.degree_ == g.degree_ && f.terms_ == g.terms_;
  }

  /// e.g. "x - 2*z"
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = abs(c);
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      bool unit = e == PlaneExps{0, 0, 0};
      if (mag != 1 || unit) os << mag << (unit ? "" : "*");
      bool need_star = false;
      static constexpr const char* names[] = {"x", "y", "z"};
      for (std::size_t v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (need_star) os << '*';
        os << names[v];
        if (e[v] > 1) os << '^' << e[v];
        need_star = true;
      }
      first = false;
    }
    return os.str();
  }

 private:
  long degree_;
  Terms terms_;
};

}  // namespace coxline

#endif  // COXLINE_FORM_HPP
