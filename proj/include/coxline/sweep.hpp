#ifndef COXLINE_SWEEP_HPP
#define COXLINE_SWEEP_HPP

// Cross-verification sweep over nef classes dL - sum a_i E_i with d <= d_max.
//
// Per nef class D, all of these must agree exactly:
//   |standard monomials of degree D|, sum_l S(l), chi(D), h0(D) via
//   stripping, and the interpolation rank of the fat-point conditions;
// additionally S(l) >= 0 for every l, the realized standard monomials must
// form a basis of H^0(D), and each non-nef effective neighbour D + G
// (G a negative curve) must have h0 via stripping equal to its
// interpolation rank. Classes with a_i >= 0 and sum a_i = d + 1 (just
// outside the nef cone, still in the h^1 = 0 region) are checked for
// rank = chi. Relations are checked once per configuration.

#include "coxline/coxmono.hpp"
#include "coxline/oracle.hpp"
#include "coxline/picard.hpp"
#include "coxline/relations.hpp"
#include "coxline/serialize.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace coxline {

struct SweepFailure {
  DivisorClass divisor;
  std::string check;
  std::string expected;
  std::string got;
};

struct SweepOptions {
  long d_max = 4;
  std::size_t max_classes = 0;  // 0: no bound
  bool check_closures = true;
  bool check_h1_region = true;
};

struct SweepReport {
  std::size_t n = 0;
  long d_max = 0;
  std::size_t classes_checked = 0;           // nef classes
  std::size_t closure_classes_checked = 0;   // non-nef effective neighbours
  std::size_t region_classes_checked = 0;    // sum a_i = d + 1 boundary
  std::size_t relation_pairs_checked = 0;
  bool complete = true;
  std::vector<SweepFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Calls f on every nef class with 0 <= d <= d_max, lexicographic in (d, a).
/// Stops early when f returns false.
inline void for_each_nef_class(std::size_t n, long d_max, const std::function<bool(const DivisorClass&)>& f) {
  std::vector<Integer> a(n);
  bool go = true;
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long d, long budget) {
    if (!go) return;
    if (i == n) {
      go = f(DivisorClass(Integer(d), a));
      return;
    }
    for (long ai = 0; ai <= budget && go; ++ai) {
      a[i] = ai;
      rec(i + 1, d, budget - ai);
    }
  };
  for (long d = 0; d <= d_max && go; ++d) rec(0, d, d);
}

/// Classes with a_i >= 0 and sum a_i = d + 1, d <= d_max, lexicographic.
inline std::vector<DivisorClass> h1_boundary_classes(std::size_t n, long d_max) {
  std::vector<DivisorClass> out;
  std::vector<Integer> a(n);
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long d, long left) {
    if (i + 1 == n) {
      a[i] = left;
      out.emplace_back(Integer(d), a);
      return;
    }
    for (long ai = 0; ai <= left; ++ai) {
      a[i] = ai;
      rec(i + 1, d, left - ai);
    }
  };
  for (long d = 0; d <= d_max; ++d) rec(0, d, d + 1);
  return out;
}

/// Negative generators E_1..E_n and L - sum E_i, in that order.
inline std::vector<DivisorClass> negative_curves(std::size_t n) {
  std::vector<DivisorClass> gs;
  for (std::size_t i = 1; i <= n; ++i) gs.push_back(DivisorClass::exceptional(n, i));
  gs.push_back(DivisorClass::collinear_line(n));
  return gs;
}

inline void check_relations(const PointConfig& cfg, const std::vector<Relation>& rels, SweepReport& rep) {
  const std::size_t n = cfg.n();
  const DivisorClass L = DivisorClass::line(n);
  auto fail = [&](std::string check, std::string expected, std::string got) {
    rep.failures.push_back({L, std::move(check), std::move(expected), std::move(got)});
  };
  const std::size_t expected_count = n >= 2 ? n - 2 : 0;
  if (rels.size() != expected_count) fail("relation_count", std::to_string(expected_count), std::to_string(rels.size()));
  const LineForms lf = line_forms(cfg);
  for (const auto& r : rels) {
    const std::string tag = "g" + std::to_string(r.index);
    if (r.a == 0 || r.b == 0) fail("relation_nonzero:" + tag, "a, b != 0", r.a.get_str() + ", " + r.b.get_str());
    const GradedPolynomial g = relation_polynomial(n, r);
    for (const auto& [m, c] : g.terms()) {
      if (!(degree_of(m) == L)) fail("relation_degree:" + tag, L.str(), degree_of(m).str());
    }
    const HomogeneousForm residual = realize_polynomial(lf, g);
    if (!residual.is_zero()) fail("relation_geometric:" + tag, "0", residual.str());
  }
  if (!leading_terms_coprime(rels, n)) fail("leading_terms_coprime", "true", "false");
  for (std::size_t i = 1; i <= rels.size(); ++i) {
    for (std::size_t j = i + 1; j <= rels.size(); ++j) {
      const GradedPolynomial nf = spoly_reduce(i, j, rels, n);
      ++rep.relation_pairs_checked;
      if (!nf.is_zero()) fail("spoly:g" + std::to_string(i) + ",g" + std::to_string(j), "0", nf.str());
    }
  }
  // Degree-L census: n + 1 monomials, n - 2 of them in the initial ideal.
  const auto all_L = enumerate_monomials_of_degree(L);
  const auto in_ideal = std::count_if(all_L.begin(), all_L.end(), [](const CoxMonomial& m) { return in_initial_ideal(m); });
  if (all_L.size() != n + 1) fail("census_degree_L", std::to_string(n + 1), std::to_string(all_L.size()));
  if (static_cast<std::size_t>(in_ideal) != expected_count) {
    fail("census_initial_ideal", std::to_string(expected_count), std::to_string(in_ideal));
  }
}

inline void check_nef_class(const PointConfig& cfg, const LineForms& lf, const DivisorClass& D, SweepReport& rep,
                            bool closures) {
  auto fail = [&](const DivisorClass& C, std::string check, const Integer& expected, const std::string& got) {
    rep.failures.push_back({C, std::move(check), expected.get_str(), got});
  };
  const Integer x = chi(D);
  const Integer enumerated(static_cast<unsigned long>(hilbert_function_RmodJ(D)));
  const auto terms = closed_form_terms(D);
  Integer closed = 0;
  for (std::size_t l = 0; l < terms.size(); ++l) {
    if (terms[l] < 0) fail(D, "counting_lemma:l=" + std::to_string(l), Integer(0), terms[l].get_str());
    if (terms[l] > 0) closed += terms[l];
  }
  const Integer stripped = h0(D);
  const BasisCheck bc = check_basis(cfg, lf, D);
  const Integer& rank = bc.h0;
  if (enumerated != x) fail(D, "standard_monomials", x, enumerated.get_str());
  if (closed != x) fail(D, "closed_form", x, closed.get_str());
  if (stripped != x) fail(D, "h0_stripping", x, stripped.get_str());
  if (rank != x) fail(D, "oracle_rank", x, rank.get_str());

  if (!bc.passed()) {
    fail(D, "basis_realization", x,
         "monomials=" + std::to_string(bc.monomials) + " rank=" + std::to_string(bc.rank) + " h0=" + bc.h0.get_str() +
             (bc.vanishing_ok ? "" : " vanishing=false"));
  }

  if (!closures) return;
  for (const auto& G : negative_curves(D.n())) {
    const DivisorClass C = D + G;
    if (is_nef(C)) continue;
    ++rep.closure_classes_checked;
    const Integer expected = h0(C);
    const Integer got = h0_rank(cfg, C);
    if (expected != got) fail(C, "closure_h0_stripping", expected, got.get_str());
  }
}

/// Runs every check for one configuration against the given relations
/// (normally derive_relations(cfg); tests pass corrupted ones).
inline SweepReport run_sweep(const PointConfig& cfg, const std::vector<Relation>& rels, const SweepOptions& opt) {
  SweepReport rep;
  rep.n = cfg.n();
  rep.d_max = opt.d_max;
  if (opt.d_max < 0) throw DomainError("d_max must be >= 0");
  check_relations(cfg, rels, rep);
  const LineForms lf = line_forms(cfg);
  for_each_nef_class(cfg.n(), opt.d_max, [&](const DivisorClass& D) {
    if (opt.max_classes != 0 && rep.classes_checked >= opt.max_classes) {
      rep.complete = false;
      return false;
    }
    check_nef_class(cfg, lf, D, rep, opt.check_closures);
    ++rep.classes_checked;
    return true;
  });
  if (opt.check_h1_region && rep.complete) {
    for (const auto& D : h1_boundary_classes(cfg.n(), opt.d_max)) {
      ++rep.region_classes_checked;
      const Integer x = chi(D), rank = h0_rank(cfg, D);
      if (x != rank) rep.failures.push_back({D, "h1_vanishing_region", x.get_str(), rank.get_str()});
    }
  }
  std::stable_sort(rep.failures.begin(), rep.failures.end(), [](const SweepFailure& p, const SweepFailure& q) {
    if (p.divisor < q.divisor) return true;
    if (q.divisor < p.divisor) return false;
    return p.check < q.check;
  });
  return rep;
}

inline SweepReport run_sweep(const PointConfig& cfg, const SweepOptions& opt) {
  return run_sweep(cfg, derive_relations(cfg), opt);
}

inline Json to_json(const SweepFailure& f) {
  return Json{{"divisor", to_json(f.divisor)}, {"check", f.check}, {"expected", f.expected}, {"got", f.got}};
}

inline Json to_json(const SweepReport& r) {
  Json fs = Json::array();
  for (const auto& f : r.failures) fs.push_back(to_json(f));
  return Json{{"n", r.n},
              {"d_max", r.d_max},
              {"classes_checked", r.classes_checked},
              {"closure_classes_checked", r.closure_classes_checked},
              {"region_classes_checked", r.region_classes_checked},
              {"relation_pairs_checked", r.relation_pairs_checked},
              {"complete", r.complete},
              {"failures", std::move(fs)}};
}

}  // namespace coxline

#endif  // COXLINE_SWEEP_HPP
