#ifndef COXLINE_ORACLE_HPP
#define COXLINE_ORACLE_HPP

// Ground truth by interpolation. Sections of dL - sum a_i E_i are plane
// curves of degree d with multiplicity >= a_i at p_i, so h^0 is the
// dimension of the kernel of the fat-point evaluation conditions on the
// space of degree-d forms, computed exactly over Q.
//
// Coordinates: Y = {y = 0}, p_i = (t_i : 0 : 1), and q an external point
// with q_y != 0. The section s_i is realized as the line through q and p_i,
// l as the line Y, and each e_i contributes no factor in the plane.

#include "coxline/coxmono.hpp"
#include "coxline/form.hpp"
#include "coxline/linalg.hpp"
#include "coxline/picard.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace coxline {

class PointConfig {
 public:
  PointConfig(std::vector<Rational> t, PlanePoint q)
      : t_(std::move(t)), y_(t_.size(), Rational(0)), q_(std::move(q)) {
    if (t_.size() < 2) throw DomainError("a point configuration needs n >= 2 points");
    for (std::size_t i = 0; i < t_.size(); ++i) {
      for (std::size_t j = i + 1; j < t_.size(); ++j) {
        if (t_[i] == t_[j]) {
          throw DomainError("points p" + std::to_string(i + 1) + " and p" + std::to_string(j + 1) +
                            " coincide (t = " + to_string(t_[i]) + ")");
        }
      }
    }
    if (q_[1] == 0) throw DomainError("q must lie off the line y = 0");
  }

  /// t_i = i - 1, q = (0 : 1 : 0).
  static PointConfig standard(std::size_t n) {
    std::vector<Rational> t;
    for (std::size_t i = 0; i < n; ++i) t.emplace_back(static_cast<long>(i));
    return {std::move(t), PlanePoint{Rational(0), Rational(1), Rational(0)}};
  }

  std::size_t n() const { return t_.size(); }
  const std::vector<Rational>& t() const { return t_; }
  const PlanePoint& q() const { return q_; }

  /// p_i = (x_i : y_i : 1), 1-based.
  PlanePoint point(std::size_t i) const { return {t_.at(i - 1), y_.at(i - 1), Rational(1)}; }

  bool collinear() const {
    for (const auto& y : y_) {
      if (y != 0) return false;
    }
    return true;
  }

  /// Test mode: the same configuration with p_i lifted to (t_i : y : 1). The
  /// result is no longer a blow-up at collinear points, so every identity in
  /// this library may fail for it; it exists to exercise negative controls.
  PointConfig with_point_off_line(std::size_t i, const Rational& y) const {
    PointConfig c = *this;
    c.y_.at(i - 1) = y;
    return c;
  }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<Rational> t_;
  std::vector<Rational> y_;
  PlanePoint q_;
};

struct LineForms {
  HomogeneousForm line_y;               // the line Y through all p_i
  std::vector<HomogeneousForm> through; // line through q and p_i, index i-1
};

/// Line through two projective points, scaled so that its leading nonzero
/// coefficient (x, then y, then z) is 1.
inline HomogeneousForm line_through(const PlanePoint& u, const PlanePoint& v) {
  std::array<Rational, 3> c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                            u[0] * v[1] - u[1] * v[0]};
  std::size_t lead = 0;
  while (lead < 3 && c[lead] == 0) ++lead;
  if (lead == 3) throw ConfigurationDegeneracy("line through two coincident points");
  const Rational s = c[lead];
  for (auto& x : c) x /= s;
  return HomogeneousForm::linear(c[0], c[1], c[2]);
}

inline LineForms line_forms(const PointConfig& cfg) {
  LineForms lf{HomogeneousForm::linear(0, 1, 0), {}};
  for (std::size_t i = 1; i <= cfg.n(); ++i) lf.through.push_back(line_through(cfg.q(), cfg.point(i)));
  return lf;
}

/// Rows expressing "all partial derivatives of order < order vanish at p"
/// on the coefficient space of degree-d forms (basis plane_monomials(d)).
/// Derivatives are taken in the affine chart z = 1, which contains p.
/// Produces C(order + 1, 2) rows.
inline std::vector<std::vector<Rational>> fat_point_conditions(const PlanePoint& p, long order,
                                                               long d) {
  std::vector<std::vector<Rational>> rows;
  if (order <= 0 || d < 0) return rows;
  const Rational px = p[0] / p[2], py = p[1] / p[2];
  std::vector<Rational> xpow(d + 1), ypow(d + 1);
  xpow[0] = ypow[0] = 1;
  for (long k = 1; k <= d; ++k) {
    xpow[k] = xpow[k - 1] * px;
    ypow[k] = ypow[k - 1] * py;
  }
  // falling[e][k] = e (e-1) ... (e-k+1)
  std::vector<std::vector<Integer>> falling(d + 1);
  for (long e = 0; e <= d; ++e) {
    falling[e].assign(e + 1, Integer(1));
    for (long k = 1; k <= e; ++k) falling[e][k] = falling[e][k - 1] * (e - k + 1);
  }
  const auto basis = plane_monomials(d);
  for (long total = 0; total < order; ++total) {
    for (long dx = total; dx >= 0; --dx) {
      const long dy = total - dx;
      std::vector<Rational> row(basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const long i = basis[c][0], j = basis[c][1];
        if (i < dx || j < dy) continue;
        if (py == 0 && j != dy) continue;
        if (px == 0 && i != dx) continue;
        row[c] = Rational(falling[i][dx] * falling[j][dy]) * xpow[i - dx] * ypow[j - dy];
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Stacked fat-point conditions for D; negative multiplicities impose nothing.
inline RationalMatrix constraint_matrix(const PointConfig& cfg, const DivisorClass& D) {
  const long d = to_long(D.d(), "degree d");
  RationalMatrix M(0, plane_monomials(d).size());
  for (std::size_t i = 1; i <= D.n(); ++i) {
    if (D.a(i) <= 0) continue;
    for (auto& row : fat_point_conditions(cfg.point(i), to_long(D.a(i), "multiplicity"), d)) {
      M.append_row(row);
    }
  }
  return M;
}

/// dim of degree-d forms with multiplicity >= a_i at p_i.
inline Integer h0_rank(const PointConfig& cfg, const DivisorClass& D) {
  if (cfg.n() != D.n()) throw DimensionError("configuration and class disagree on n");
  if (D.d() < 0) return 0;
  const RationalMatrix M = constraint_matrix(cfg, D);
  return Integer(static_cast<unsigned long>(M.cols() - exact_rank(M)));
}

inline HomogeneousForm realize_monomial(const LineForms& lf, const CoxMonomial& m) {
  HomogeneousForm f = lf.line_y.pow(m.lambda);
  for (std::size_t i = 0; i < m.n(); ++i) f = f * lf.through.at(i).pow(m.sigma[i]);
  return f;
}

/// l^lambda prod s_i^sigma_i prod e_i^epsilon_i  ->  ell_Y^lambda prod ell_i^sigma_i.
inline HomogeneousForm realize_monomial(const PointConfig& cfg, const CoxMonomial& m) {
  return realize_monomial(line_forms(cfg), m);
}

/// M v = 0.
inline bool annihilates(const RationalMatrix& M, const std::vector<Rational>& v) {
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Rational dot = 0;
    for (std::size_t c = 0; c < M.cols(); ++c) {
      if (M(r, c) != 0 && v[c] != 0) dot += M(r, c) * v[c];
    }
    if (dot != 0) return false;
  }
  return true;
}

/// True when f has degree d and multiplicity >= a_i at every p_i.
inline bool satisfies_vanishing(const PointConfig& cfg, const HomogeneousForm& f,
                                const DivisorClass& D) {
  if (f.is_zero()) return true;
  if (Integer(f.degree()) != D.d()) return false;
  return annihilates(constraint_matrix(cfg, D), f.coefficient_vector());
}

struct BasisCheck {
  std::size_t monomials = 0;      // standard monomials of degree D
  std::size_t rank = 0;           // rank of their realized forms
  Integer h0;                     // interpolation dimension
  bool vanishing_ok = true;       // every realized form lies in H^0(D)

  bool passed() const {
    return vanishing_ok && rank == monomials && Integer(static_cast<unsigned long>(monomials)) == h0;
  }
};

inline BasisCheck check_basis(const PointConfig& cfg, const LineForms& lf, const DivisorClass& D) {
  if (!is_effective(D)) throw DomainError("basis check needs an effective class, got " + D.str());
  if (cfg.n() != D.n()) throw DimensionError("configuration and class disagree on n");
  const auto std_set = enumerate_standard_monomials(D);
  const RationalMatrix C = constraint_matrix(cfg, D);
  BasisCheck r;
  r.monomials = std_set.size();
  r.h0 = Integer(static_cast<unsigned long>(C.cols() - exact_rank(C)));
  RationalMatrix M(0, C.cols());
  for (const auto& m : std_set.monomials) {
    const HomogeneousForm f = realize_monomial(lf, m);
    auto coeffs = f.coefficient_vector();
    if (Integer(f.degree()) != D.d() || !annihilates(C, coeffs)) r.vanishing_ok = false;
    M.append_row(coeffs);
  }
  r.rank = exact_rank(M);
  return r;
}

/// The standard monomials of degree D realize a basis of H^0(D).
inline bool verify_basis_independence(const PointConfig& cfg, const DivisorClass& D) {
  return check_basis(cfg, line_forms(cfg), D).passed();
}

}  // namespace coxline

#endif  // COXLINE_ORACLE_HPP
