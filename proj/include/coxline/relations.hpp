#ifndef COXLINE_RELATIONS_HPP
#define COXLINE_RELATIONS_HPP

// The ideal J = (g_1, ..., g_{n-2}) with
//   g_i = s_i e_i + a_i s_{n-1} e_{n-1} + b_i s_n e_n,
// read off from the linear dependencies among the lines through q.
//
// Monomial order: graded lex with s_1 > ... > s_n > e_1 > ... > e_n > l.
// Under it the leading monomial of g_i is s_i e_i, and these are pairwise
// coprime, which makes {g_i} a Groebner basis.

#include "coxline/coxmono.hpp"
#include "coxline/linalg.hpp"
#include "coxline/oracle.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace coxline {

/// Graded lex, variables s_1 > ... > s_n > e_1 > ... > e_n > l.
inline bool grlex_less(const CoxMonomial& x, const CoxMonomial& y) {
  const Exponent tx = x.total_degree(), ty = y.total_degree();
  if (tx != ty) return tx < ty;
  for (std::size_t i = 0; i < x.n(); ++i) {
    if (x.sigma[i] != y.sigma[i]) return x.sigma[i] < y.sigma[i];
  }
  for (std::size_t i = 0; i < x.n(); ++i) {
    if (x.epsilon[i] != y.epsilon[i]) return x.epsilon[i] < y.epsilon[i];
  }
  return x.lambda < y.lambda;
}

struct GrlexGreater {
  bool operator()(const CoxMonomial& x, const CoxMonomial& y) const { return grlex_less(y, x); }
};

/// Polynomial in R; terms stored leading-first.
class GradedPolynomial {
 public:
  using Terms = std::map<CoxMonomial, Rational, GrlexGreater>;

  GradedPolynomial() = default;

  static GradedPolynomial monomial(const CoxMonomial& m, const Rational& c = 1) {
    GradedPolynomial p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const CoxMonomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  void add_term(const CoxMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const CoxMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// p += c * m * q
  void add_multiple(const Rational& c, const CoxMonomial& m, const GradedPolynomial& q) {
    for (const auto& [mono, coeff] : q.terms_) add_term(m * mono, c * coeff);
  }

  GradedPolynomial& operator+=(const GradedPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedPolynomial& operator-=(const GradedPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend GradedPolynomial operator+(GradedPolynomial p, const GradedPolynomial& q) { return p += q; }
  friend GradedPolynomial operator-(GradedPolynomial p, const GradedPolynomial& q) { return p -= q; }

  /// All terms share one Pic(X)-degree (the zero polynomial qualifies).
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const DivisorClass D = degree_of(leading_monomial());
    for (const auto& [m, c] : terms_) {
      if (!(degree_of(m) == D)) return false;
    }
    return true;
  }

  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational mag = abs(c);
      out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (mag != 1 || m.is_unit()) out += mag.get_str() + (m.is_unit() ? "" : "*");
      if (!m.is_unit()) out += m.str();
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;
};

/// g_index = s_index e_index + a s_{n-1} e_{n-1} + b s_n e_n, index in [1, n-2].
struct Relation {
  std::size_t index = 0;
  Rational a;
  Rational b;

  friend bool operator==(const Relation&, const Relation&) = default;
};

inline GradedPolynomial relation_polynomial(std::size_t n, const Relation& r) {
  GradedPolynomial g;
  g.add_term(CoxMonomial::s_e(n, r.index), 1);
  g.add_term(CoxMonomial::s_e(n, n - 1), r.a);
  g.add_term(CoxMonomial::s_e(n, n), r.b);
  return g;
}

inline std::vector<GradedPolynomial> relation_polynomials(std::size_t n, const std::vector<Relation>& rels) {
  std::vector<GradedPolynomial> gs;
  for (const auto& r : rels) gs.push_back(relation_polynomial(n, r));
  return gs;
}

/// Solves ell_i + a ell_{n-1} + b ell_n = 0 for every i <= n-2.
inline std::vector<Relation> derive_relations(const PointConfig& cfg) {
  const std::size_t n = cfg.n();
  std::vector<Relation> rels;
  if (n < 3) return rels;
  const LineForms lf = line_forms(cfg);
  const auto u = lf.through[n - 2].coefficient_vector();
  const auto v = lf.through[n - 1].coefficient_vector();
  std::size_t r0 = 3, r1 = 3;
  for (std::size_t r = 0; r < 3 && r0 == 3; ++r) {
    for (std::size_t s = r + 1; s < 3; ++s) {
      if (u[r] * v[s] - u[s] * v[r] != 0) {
        r0 = r;
        r1 = s;
        break;
      }
    }
  }
  if (r0 == 3) throw ConfigurationDegeneracy("lines through q and p_{n-1}, p_n coincide");
  const Rational det = u[r0] * v[r1] - u[r1] * v[r0];

  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const auto w = lf.through[i - 1].coefficient_vector();
    // a u + b v = -w on coordinates r0, r1 (Cramer).
    Relation rel{i, (-w[r0] * v[r1] + w[r1] * v[r0]) / det, (-u[r0] * w[r1] + u[r1] * w[r0]) / det};
    HomogeneousForm check = lf.through[i - 1] + rel.a * lf.through[n - 2] + rel.b * lf.through[n - 1];
    if (!check.is_zero()) {
      throw ConfigurationDegeneracy("lines through q are not in one pencil: residual " + check.str());
    }
    if (rel.a == 0 || rel.b == 0) {
      throw ConfigurationDegeneracy("relation g" + std::to_string(i) + " has a zero coefficient");
    }
    rels.push_back(std::move(rel));
  }
  return rels;
}

/// One division step: p -= coeff * multiplier * g_divisor.
struct ReductionStep {
  std::size_t divisor = 0;  // relation index, 1-based as in g_i
  CoxMonomial multiplier;
  Rational coeff;
};

struct NormalFormResult {
  GradedPolynomial remainder;
  std::vector<ReductionStep> trace;
};

/// Multivariate division by the relations, divisors tried in ascending
/// index. The remainder is supported on standard monomials.
inline NormalFormResult normal_form_traced(const GradedPolynomial& p, const std::vector<Relation>& rels,
                                           std::size_t n) {
  if (!p.is_homogeneous()) throw DomainError("normal_form: input is not multihomogeneous: " + p.str());
  const auto gs = relation_polynomials(n, rels);
  NormalFormResult out;
  GradedPolynomial work = p;
  while (!work.is_zero()) {
    const CoxMonomial lm = work.leading_monomial();
    const Rational lc = work.leading_coeff();
    bool divided = false;
    for (std::size_t k = 0; k < gs.size(); ++k) {
      if (gs[k].is_zero() || !gs[k].leading_monomial().divides(lm)) continue;
      ReductionStep step{rels[k].index, gs[k].leading_monomial().quotient_of(lm), lc / gs[k].leading_coeff()};
      work.add_multiple(-step.coeff, step.multiplier, gs[k]);
      out.trace.push_back(std::move(step));
      divided = true;
      break;
    }
    if (!divided) {
      out.remainder.add_term(lm, lc);
      work.add_term(lm, -lc);
    }
  }
  return out;
}

inline GradedPolynomial normal_form(const GradedPolynomial& p, const std::vector<Relation>& rels, std::size_t n) {
  return normal_form_traced(p, rels, n).remainder;
}

/// S-polynomial of g_i and g_j (1-based positions in rels).
inline GradedPolynomial s_polynomial(std::size_t i, std::size_t j, const std::vector<Relation>& rels, std::size_t n) {
  const GradedPolynomial gi = relation_polynomial(n, rels.at(i - 1));
  const GradedPolynomial gj = relation_polynomial(n, rels.at(j - 1));
  const CoxMonomial m = lcm(gi.leading_monomial(), gj.leading_monomial());
  GradedPolynomial s;
  s.add_multiple(1 / gi.leading_coeff(), gi.leading_monomial().quotient_of(m), gi);
  s.add_multiple(-1 / gj.leading_coeff(), gj.leading_monomial().quotient_of(m), gj);
  return s;
}

inline NormalFormResult spoly_reduce_traced(std::size_t i, std::size_t j, const std::vector<Relation>& rels,
                                            std::size_t n) {
  if (!(1 <= i && i < j && j <= rels.size())) {
    throw DomainError("spoly_reduce needs 1 <= i < j <= " + std::to_string(rels.size()));
  }
  return normal_form_traced(s_polynomial(i, j, rels, n), rels, n);
}

/// Normal form of S(g_i, g_j); zero for a Groebner basis.
inline GradedPolynomial spoly_reduce(std::size_t i, std::size_t j, const std::vector<Relation>& rels, std::size_t n) {
  return spoly_reduce_traced(i, j, rels, n).remainder;
}

/// Leading monomial of g_i is s_i e_i and the leading monomials are pairwise coprime.
inline bool leading_terms_coprime(const std::vector<Relation>& rels, std::size_t n) {
  const auto gs = relation_polynomials(n, rels);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    if (gs[k].is_zero() || !(gs[k].leading_monomial() == CoxMonomial::s_e(n, rels[k].index))) return false;
    for (std::size_t m = k + 1; m < gs.size(); ++m) {
      if (!coprime(gs[k].leading_monomial(), gs[m].leading_monomial())) return false;
    }
  }
  return true;
}

inline HomogeneousForm realize_polynomial(const LineForms& lf, const GradedPolynomial& p) {
  HomogeneousForm f;
  for (const auto& [m, c] : p.terms()) f += c * realize_monomial(lf, m);
  return f;
}

/// ell_i + a ell_{n-1} + b ell_n vanishes identically.
inline bool verify_relation_geometrically(const PointConfig& cfg, const Relation& r) {
  return realize_polynomial(line_forms(cfg), relation_polynomial(cfg.n(), r)).is_zero();
}

inline bool verify_relations_geometrically(const PointConfig& cfg, const std::vector<Relation>& rels) {
  for (const auto& r : rels) {
    if (!verify_relation_geometrically(cfg, r)) return false;
  }
  return true;
}

/// dim span { normal_form(m) : m a monomial of degree D }.
inline std::size_t normal_form_span_dimension(const DivisorClass& D, const std::vector<Relation>& rels) {
  const std::size_t n = D.n();
  const auto standard = enumerate_standard_monomials(D).monomials;
  std::map<CoxMonomial, std::size_t, GrlexGreater> column;
  for (std::size_t k = 0; k < standard.size(); ++k) column.emplace(standard[k], k);
  RationalMatrix M(0, standard.size());
  if (standard.empty()) return 0;
  for (const auto& m : enumerate_monomials_of_degree(D)) {
    const GradedPolynomial nf = normal_form(GradedPolynomial::monomial(m), rels, n);
    std::vector<Rational> row(standard.size());
    for (const auto& [mono, c] : nf.terms()) {
      auto it = column.find(mono);
      if (it == column.end()) throw std::logic_error("normal form left the standard monomials: " + mono.str());
      row[it->second] = c;
    }
    M.append_row(row);
  }
  return exact_rank(M);
}

}  // namespace coxline

#endif  // COXLINE_RELATIONS_HPP
