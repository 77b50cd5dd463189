#ifndef COXLINE_PICARD_HPP
#define COXLINE_PICARD_HPP

// Picard lattice of the blow-up X of P^2 at n collinear points.
//
// A class is written dL - a_1 E_1 - ... - a_n E_n with L the pullback of a
// line and E_i the exceptional curves. The intersection form is L^2 = 1,
// E_i^2 = -1, all mixed products zero. Effective classes form the free monoid
// on {L - E_1 - ... - E_n, E_1, ..., E_n}; nef classes form the free monoid
// on {L, L - E_1, ..., L - E_n}.

#include "coxline/arith.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace coxline {

class DivisorClass {
 public:
  /// Class dL - sum a_i E_i. Requires a.size() >= 2.
  DivisorClass(Integer d, std::vector<Integer> a) : d_(std::move(d)), a_(std::move(a)) {
    if (a_.size() < 2) {
      throw DomainError(
          "need n >= 2 blown-up points; for n = 1 the surface is toric and its Cox ring is "
          "the polynomial ring k[x, s1, s2, e]");
    }
  }

  DivisorClass(long d, std::initializer_list<long> a)
      : DivisorClass(Integer(d), [&] {
          std::vector<Integer> v;
          for (long x : a) v.emplace_back(x);
          return v;
        }()) {}

  static DivisorClass zero(std::size_t n) { return {Integer(0), std::vector<Integer>(n, 0)}; }
  /// L
  static DivisorClass line(std::size_t n) { return {Integer(1), std::vector<Integer>(n, 0)}; }
  /// E_i, 1-based.
  static DivisorClass exceptional(std::size_t n, std::size_t i) {
    std::vector<Integer> a(n, 0);
    a.at(i - 1) = -1;
    return {Integer(0), std::move(a)};
  }
  /// L - E_i, 1-based.
  static DivisorClass pencil(std::size_t n, std::size_t i) {
    std::vector<Integer> a(n, 0);
    a.at(i - 1) = 1;
    return {Integer(1), std::move(a)};
  }
  /// L - E_1 - ... - E_n, the strict transform of the line through all points.
  static DivisorClass collinear_line(std::size_t n) {
    return {Integer(1), std::vector<Integer>(n, 1)};
  }

  std::size_t n() const { return a_.size(); }
  const Integer& d() const { return d_; }
  const std::vector<Integer>& a() const { return a_; }
  /// a_i, 1-based.
  const Integer& a(std::size_t i) const { return a_.at(i - 1); }

  Integer sum_a() const {
    Integer s = 0;
    for (const auto& x : a_) s += x;
    return s;
  }

  DivisorClass& operator+=(const DivisorClass& o) {
    check_rank(o);
    d_ += o.d_;
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  DivisorClass& operator-=(const DivisorClass& o) {
    check_rank(o);
    d_ -= o.d_;
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
  friend DivisorClass operator*(const Integer& k, DivisorClass x) {
    x.d_ *= k;
    for (auto& v : x.a_) v *= k;
    return x;
  }
  friend DivisorClass operator*(long k, const DivisorClass& x) { return Integer(k) * x; }

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.d_ == y.d_ && x.a_ == y.a_;
  }
  /// Lexicographic in (n, d, a_1, ..., a_n).
  friend bool operator<(const DivisorClass& x, const DivisorClass& y) {
    if (x.n() != y.n()) return x.n() < y.n();
    if (x.d_ != y.d_) return x.d_ < y.d_;
    return x.a_ < y.a_;
  }

  /// "(d; a1, ..., an)"
  std::string str() const {
    std::ostringstream os;
    os << '(' << d_ << ';';
    for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? ", " : " ") << a_[i];
    os << ')';
    return os.str();
  }

  void check_rank(const DivisorClass& o) const {
    if (o.n() != n()) {
      throw DimensionError("divisor classes on blow-ups at " + std::to_string(n()) + " and " +
                           std::to_string(o.n()) + " points");
    }
  }

 private:
  Integer d_;
  std::vector<Integer> a_;
};

/// d_A d_B - sum a_i b_i.
inline Integer intersect(const DivisorClass& A, const DivisorClass& B) {
  A.check_rank(B);
  Integer r = A.d() * B.d();
  for (std::size_t i = 0; i < A.n(); ++i) r -= A.a()[i] * B.a()[i];
  return r;
}

/// K = -3L + E_1 + ... + E_n.
inline DivisorClass canonical_class(std::size_t n) {
  return {Integer(-3), std::vector<Integer>(n, -1)};
}

/// Riemann-Roch: chi(D) = 1 + (D.D - D.K)/2.
inline Integer chi(const DivisorClass& D) {
  Integer twice = intersect(D, D) - intersect(D, canonical_class(D.n()));
  mpz_divexact_ui(twice.get_mpz_t(), twice.get_mpz_t(), 2);
  return 1 + twice;
}

/// Coordinates in the basis (L - E_1 - ... - E_n, E_1, ..., E_n).
struct EffectiveCoords {
  Integer m;
  std::vector<Integer> c;

  DivisorClass to_class() const {
    std::vector<Integer> a;
    a.reserve(c.size());
    for (const auto& ci : c) a.push_back(m - ci);
    return {m, std::move(a)};
  }
};

/// Coordinates in the basis (L, L - E_1, ..., L - E_n).
struct NefCoords {
  Integer b;
  std::vector<Integer> b_i;

  DivisorClass to_class() const {
    Integer d = b;
    for (const auto& x : b_i) d += x;
    return {d, b_i};
  }
};

inline EffectiveCoords effective_basis_coords(const DivisorClass& D) {
  EffectiveCoords e{D.d(), {}};
  e.c.reserve(D.n());
  for (const auto& ai : D.a()) e.c.push_back(D.d() - ai);
  return e;
}

inline bool is_effective(const DivisorClass& D) {
  if (D.d() < 0) return false;
  for (const auto& ai : D.a()) {
    if (D.d() - ai < 0) return false;
  }
  return true;
}

inline std::optional<EffectiveCoords> effective_coords(const DivisorClass& D) {
  if (!is_effective(D)) return std::nullopt;
  return effective_basis_coords(D);
}

inline bool is_nef(const DivisorClass& D) {
  for (const auto& ai : D.a()) {
    if (ai < 0) return false;
  }
  return D.d() >= D.sum_a();
}

inline std::optional<NefCoords> nef_coords(const DivisorClass& D) {
  if (!is_nef(D)) return std::nullopt;
  return NefCoords{D.d() - D.sum_a(), D.a()};
}

/// Fixed components removed while passing from an effective class to its
/// nef part.
struct StripResult {
  DivisorClass nef_part;
  std::vector<Integer> exceptional_removed;  // copies of E_i, index i-1
  Integer collinear_line_removed;            // copies of L - E_1 - ... - E_n

  bool empty() const {
    if (collinear_line_removed != 0) return false;
    for (const auto& k : exceptional_removed) {
      if (k != 0) return false;
    }
    return true;
  }
};

/// Subtracts negative curves G with D.G < 0 until the class is nef. The
/// generators are visited in the order E_1, ..., E_n, L - sum E_i and the
/// loop repeats until no intersection is negative. A run of identical
/// one-copy subtractions of the same generator is applied in one step.
inline StripResult strip_base_components(const DivisorClass& D) {
  if (!is_effective(D)) {
    throw DomainError("strip_base_components: " + D.str() + " is not effective");
  }
  const std::size_t n = D.n();
  Integer d = D.d();
  std::vector<Integer> a = D.a();
  StripResult r{DivisorClass::zero(n), std::vector<Integer>(n, 0), Integer(0)};

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      // D.E_i = a_i; each E_i removed raises it by one.
      if (a[i] < 0) {
        r.exceptional_removed[i] -= a[i];
        a[i] = 0;
        changed = true;
      }
    }
    Integer slack = d;
    for (const auto& ai : a) slack -= ai;
    if (slack < 0) {
      // Each copy of L - sum E_i raises D.(L - sum E_i) by n - 1.
      Integer step = n - 1;
      Integer k;
      mpz_cdiv_q(k.get_mpz_t(), Integer(-slack).get_mpz_t(), step.get_mpz_t());
      d -= k;
      for (auto& ai : a) ai -= k;
      r.collinear_line_removed += k;
      changed = true;
    }
  }
  r.nef_part = DivisorClass(d, std::move(a));
  if (!is_nef(r.nef_part)) {
    throw std::logic_error("strip_base_components ended on a non-nef class");
  }
  return r;
}

/// dim H^0(X, O(D)): zero off the effective cone, otherwise chi of the nef part.
inline Integer h0(const DivisorClass& D) {
  if (!is_effective(D)) return 0;
  return chi(strip_base_components(D).nef_part);
}

}  // namespace coxline

#endif  // COXLINE_PICARD_HPP
