#ifndef COXLINE_COXMONO_HPP
#define COXLINE_COXMONO_HPP

// Monomials in R = k[l, s_1..s_n, e_1..e_n] graded by Pic(X):
//   deg l = L - E_1 - ... - E_n,  deg s_i = L - E_i,  deg e_i = E_i.
// Standard monomials are those outside the initial ideal
// (s_1 e_1, ..., s_{n-2} e_{n-2}); in each degree they count dim (R/J)_D.

#include "coxline/picard.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxline {

using Exponent = long;

struct CoxMonomial {
  Exponent lambda = 0;
  std::vector<Exponent> sigma;
  std::vector<Exponent> epsilon;

  static CoxMonomial unit(std::size_t n) { return {0, std::vector<Exponent>(n, 0), std::vector<Exponent>(n, 0)}; }
  /// s_i e_i, 1-based.
  static CoxMonomial s_e(std::size_t n, std::size_t i) {
    CoxMonomial m = unit(n);
    m.sigma.at(i - 1) = 1;
    m.epsilon.at(i - 1) = 1;
    return m;
  }
  /// l e_1 ... e_n
  static CoxMonomial l_all_e(std::size_t n) {
    CoxMonomial m = unit(n);
    m.lambda = 1;
    std::fill(m.epsilon.begin(), m.epsilon.end(), 1);
    return m;
  }

  std::size_t n() const { return sigma.size(); }

  Exponent total_degree() const {
    Exponent t = lambda;
    for (auto x : sigma) t += x;
    for (auto x : epsilon) t += x;
    return t;
  }

  bool is_unit() const { return total_degree() == 0; }

  CoxMonomial& operator*=(const CoxMonomial& o) {
    lambda += o.lambda;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      sigma[i] += o.sigma.at(i);
      epsilon[i] += o.epsilon.at(i);
    }
    return *this;
  }
  friend CoxMonomial operator*(CoxMonomial x, const CoxMonomial& y) { return x *= y; }

  bool divides(const CoxMonomial& o) const {
    if (lambda > o.lambda) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] > o.sigma[i] || epsilon[i] > o.epsilon[i]) return false;
    }
    return true;
  }

  /// o / *this; requires divides(o).
  CoxMonomial quotient_of(const CoxMonomial& o) const {
    CoxMonomial q = o;
    q.lambda -= lambda;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      q.sigma[i] -= sigma[i];
      q.epsilon[i] -= epsilon[i];
    }
    return q;
  }

  friend CoxMonomial lcm(const CoxMonomial& x, const CoxMonomial& y) {
    CoxMonomial m = x;
    m.lambda = std::max(x.lambda, y.lambda);
    for (std::size_t i = 0; i < m.sigma.size(); ++i) {
      m.sigma[i] = std::max(x.sigma[i], y.sigma[i]);
      m.epsilon[i] = std::max(x.epsilon[i], y.epsilon[i]);
    }
    return m;
  }

  friend bool coprime(const CoxMonomial& x, const CoxMonomial& y) {
    if (x.lambda && y.lambda) return false;
    for (std::size_t i = 0; i < x.sigma.size(); ++i) {
      if ((x.sigma[i] && y.sigma[i]) || (x.epsilon[i] && y.epsilon[i])) return false;
    }
    return true;
  }

  friend bool operator==(const CoxMonomial&, const CoxMonomial&) = default;

  /// e.g. "l*s1*e2^2"; the unit prints as "1".
  std::string str() const {
    std::string out;
    auto put = [&](const std::string& name, Exponent e) {
      if (e == 0) return;
      if (!out.empty()) out += '*';
      out += name;
      if (e > 1) out += '^' + std::to_string(e);
    };
    put("l", lambda);
    for (std::size_t i = 0; i < sigma.size(); ++i) put("s" + std::to_string(i + 1), sigma[i]);
    for (std::size_t i = 0; i < epsilon.size(); ++i) put("e" + std::to_string(i + 1), epsilon[i]);
    return out.empty() ? "1" : out;
  }
};

/// Linear extension of the generator degrees: d = lambda + sum sigma_i,
/// a_i = lambda + sigma_i - epsilon_i.
inline DivisorClass degree_of(const CoxMonomial& m) {
  Exponent d = m.lambda;
  for (auto s : m.sigma) d += s;
  std::vector<Integer> a;
  a.reserve(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) a.emplace_back(m.lambda + m.sigma[i] - m.epsilon[i]);
  return {Integer(d), std::move(a)};
}

/// Number of polynomial generators l, s_i, e_i.
inline std::size_t generator_count(std::size_t n) { return 2 * n + 1; }

/// True when some s_i e_i with i <= n-2 divides m.
inline bool in_initial_ideal(const CoxMonomial& m) {
  const std::size_t n = m.n();
  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (m.sigma[i] > 0 && m.epsilon[i] > 0) return true;
  }
  return false;
}

struct StandardMonomialSet {
  DivisorClass degree;
  std::vector<CoxMonomial> monomials;  // ascending l, then ascending sigma_{n-1}

  std::size_t size() const { return monomials.size(); }
};

/// Standard monomials of degree D. For fixed l the exponents at the first
/// n-2 indices are forced (sigma_i = max(a_i - l, 0), epsilon_i = max(l - a_i, 0));
/// the free choice is the split of the remaining degree between s_{n-1} and s_n.
inline StandardMonomialSet enumerate_standard_monomials(const DivisorClass& D) {
  const std::size_t n = D.n();
  StandardMonomialSet out{D, {}};
  const long d = to_long(D.d(), "degree d");
  if (d < 0) return out;
  std::vector<long> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = to_long(D.a()[i], "multiplicity");

  for (long l = 0; l <= d; ++l) {
    CoxMonomial m = CoxMonomial::unit(n);
    m.lambda = l;
    long rest = d - l;
    for (std::size_t i = 0; i + 2 < n; ++i) {
      m.sigma[i] = std::max(a[i] - l, 0L);
      m.epsilon[i] = std::max(l - a[i], 0L);
      rest -= m.sigma[i];
    }
    const std::size_t p = n - 2, q = n - 1;
    const long lo_p = std::max(a[p] - l, 0L);
    const long lo_q = std::max(a[q] - l, 0L);
    for (long sp = lo_p; sp <= rest - lo_q; ++sp) {
      m.sigma[p] = sp;
      m.sigma[q] = rest - sp;
      m.epsilon[p] = l + m.sigma[p] - a[p];
      m.epsilon[q] = l + m.sigma[q] - a[q];
      if (!(degree_of(m) == D) || in_initial_ideal(m)) {
        throw std::logic_error("standard monomial enumeration produced " + m.str() +
                               " outside degree " + D.str());
      }
      out.monomials.push_back(m);
    }
  }
  return out;
}

/// S(l) = d + 1 - l - sum_k max(a_k - l, 0) for l = 0..d, unclamped.
inline std::vector<Integer> closed_form_terms(const DivisorClass& D) {
  std::vector<Integer> terms;
  const long d = to_long(D.d(), "degree d");
  for (long l = 0; l <= d; ++l) {
    Integer s = D.d() + 1 - l;
    for (const auto& ak : D.a()) {
      if (ak > l) s -= ak - l;
    }
    terms.push_back(std::move(s));
  }
  return terms;
}

/// sum_{l=0}^{d} S(l); defined on nef classes only, where every S(l) >= 0.
inline Integer count_standard_monomials_closed_form(const DivisorClass& D) {
  if (!is_nef(D)) {
    throw DomainError("closed-form count requires a nef class, got " + D.str() +
                      "; use enumerate_standard_monomials");
  }
  Integer total = 0;
  for (const auto& s : closed_form_terms(D)) {
    if (s < 0) throw std::logic_error("negative S(l) on nef class " + D.str());
    total += s;
  }
  return total;
}

/// dim (R/J)_D, counted through the initial ideal.
inline std::size_t hilbert_function_RmodJ(const DivisorClass& D) {
  return enumerate_standard_monomials(D).size();
}

/// Every monomial of R in degree D, initial ideal included. Order: ascending
/// l, then sigma lexicographically ascending.
inline std::vector<CoxMonomial> enumerate_monomials_of_degree(const DivisorClass& D) {
  const std::size_t n = D.n();
  std::vector<CoxMonomial> out;
  const long d = to_long(D.d(), "degree d");
  if (d < 0) return out;
  std::vector<long> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = to_long(D.a()[i], "multiplicity");

  CoxMonomial m = CoxMonomial::unit(n);
  std::function<void(std::size_t, long)> place = [&](std::size_t i, long rest) {
    if (i + 1 == n) {
      if (rest < std::max(a[i] - m.lambda, 0L)) return;
      m.sigma[i] = rest;
      m.epsilon[i] = m.lambda + rest - a[i];
      out.push_back(m);
      return;
    }
    for (long s = std::max(a[i] - m.lambda, 0L); s <= rest; ++s) {
      m.sigma[i] = s;
      m.epsilon[i] = m.lambda + s - a[i];
      place(i + 1, rest - s);
    }
  };
  for (long l = 0; l <= d; ++l) {
    m.lambda = l;
    place(0, d - l);
  }
  return out;
}

}  // namespace coxline

#endif  // COXLINE_COXMONO_HPP
