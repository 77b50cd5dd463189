// coxline: query divisor classes, bases and relations of the Cox ring of
// the blow-up of P^2 at n collinear points, and run the verification sweep.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage/config error.

#include "coxline/coxline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace coxline;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string config_path;
  bool json = false;
};

std::string join(const std::vector<std::string>& toks) {
  std::string s;
  for (const auto& t : toks) s += (s.empty() ? "" : " ") + t;
  return s;
}

/// Config from --config, or the standard one with the given n.
PointConfig resolve_config(const Globals& g, std::optional<std::size_t> n) {
  if (!g.config_path.empty()) {
    PointConfig cfg = load_config(g.config_path);
    if (n && *n != cfg.n()) {
      throw ParseError("configuration has n = " + std::to_string(cfg.n()) + ", input needs n = " + std::to_string(*n));
    }
    return cfg;
  }
  return PointConfig::standard(n.value_or(3));
}

DivisorClass read_class(const Globals& g, const std::vector<std::string>& toks) {
  DivisorClass D = parse_divisor(join(toks));
  resolve_config(g, D.n());
  return D;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const Globals& g, const std::vector<std::string>& toks) {
  const DivisorClass D = read_class(g, toks);
  const auto eff = effective_coords(D);
  const auto nef = nef_coords(D);
  std::optional<StripResult> stripped;
  if (eff) stripped = strip_base_components(D);

  if (g.json) {
    Json j{{"class", to_json(D)}, {"n", D.n()}, {"effective", eff.has_value()}};
    if (eff) {
      Json c = Json::array();
      for (const auto& x : eff->c) c.push_back(to_json(x));
      j["effective_coords"] = Json{{"m", to_json(eff->m)}, {"c", std::move(c)}};
    } else {
      j["effective_coords"] = nullptr;
    }
    j["nef"] = nef.has_value();
    if (nef) {
      Json bi = Json::array();
      for (const auto& x : nef->b_i) bi.push_back(to_json(x));
      j["nef_coords"] = Json{{"b", to_json(nef->b)}, {"b_i", std::move(bi)}};
    } else {
      j["nef_coords"] = nullptr;
    }
    j["chi"] = to_json(chi(D));
    j["h0"] = to_json(h0(D));
    if (stripped) {
      Json ex = Json::array();
      for (const auto& x : stripped->exceptional_removed) ex.push_back(to_json(x));
      j["stripped"] = Json{{"nef_part", to_json(stripped->nef_part)},
                           {"exceptional_removed", std::move(ex)},
                           {"collinear_line_removed", to_json(stripped->collinear_line_removed)}};
    } else {
      j["stripped"] = nullptr;
    }
    print(j);
    return kOk;
  }

  std::cout << "class      " << D.str() << "  (n = " << D.n() << ")\n";
  std::cout << "effective  " << (eff ? "true" : "false");
  if (eff) {
    std::cout << "  m = " << eff->m << ", c = (";
    for (std::size_t i = 0; i < eff->c.size(); ++i) std::cout << (i ? ", " : "") << eff->c[i];
    std::cout << ')';
  }
  std::cout << "\nnef        " << (nef ? "true" : "false");
  if (nef) {
    std::cout << "  b = " << nef->b << ", b_i = (";
    for (std::size_t i = 0; i < nef->b_i.size(); ++i) std::cout << (i ? ", " : "") << nef->b_i[i];
    std::cout << ')';
  }
  std::cout << "\nchi        " << chi(D) << "\nh0         " << h0(D) << '\n';
  if (stripped) {
    std::cout << "nef part   " << stripped->nef_part.str() << "  removed:";
    if (stripped->empty()) std::cout << " nothing";
    for (std::size_t i = 0; i < stripped->exceptional_removed.size(); ++i) {
      if (stripped->exceptional_removed[i] != 0) std::cout << " E" << i + 1 << " x" << stripped->exceptional_removed[i];
    }
    if (stripped->collinear_line_removed != 0) std::cout << " (L-sumE) x" << stripped->collinear_line_removed;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_h0(const Globals& g, const std::vector<std::string>& toks) {
  const DivisorClass D = read_class(g, toks);
  const PointConfig cfg = resolve_config(g, D.n());
  const Integer formula = h0(D);
  const Integer rank = h0_rank(cfg, D);
  if (g.json) {
    print(Json{{"class", to_json(D)}, {"h0", to_json(formula)}, {"oracle_rank", to_json(rank)}, {"agree", formula == rank}});
  } else {
    std::cout << "h0 " << formula << "  (interpolation rank " << rank << (formula == rank ? ", agrees" : ", MISMATCH")
              << ")\n";
  }
  return formula == rank ? kOk : kCheckFailed;
}

int cmd_basis(const Globals& g, const std::vector<std::string>& toks) {
  const DivisorClass D = read_class(g, toks);
  const PointConfig cfg = resolve_config(g, D.n());
  if (!is_effective(D)) {
    if (g.json) {
      print(Json{{"class", to_json(D)}, {"h0", 0}, {"monomials", Json::array()}, {"independent", true}});
    } else {
      std::cout << "h0 = 0, empty basis\n";
    }
    return kOk;
  }
  const LineForms lf = line_forms(cfg);
  const auto basis = enumerate_standard_monomials(D);
  const BasisCheck bc = check_basis(cfg, lf, D);
  if (g.json) {
    Json rows = Json::array();
    for (const auto& m : basis.monomials) {
      rows.push_back(Json{{"monomial", to_json(m)}, {"form", to_json(realize_monomial(lf, m))}});
    }
    print(Json{{"class", to_json(D)},
               {"h0", to_json(bc.h0)},
               {"count", bc.monomials},
               {"rank", bc.rank},
               {"vanishing_ok", bc.vanishing_ok},
               {"independent", bc.passed()},
               {"monomials", std::move(rows)}});
  } else {
    std::cout << "degree " << D.str() << ": " << basis.size() << " standard monomials\n";
    for (const auto& m : basis.monomials) std::cout << "  " << m.str() << "  ->  " << realize_monomial(lf, m).str() << '\n';
    std::cout << "rank " << bc.rank << ", h0 " << bc.h0 << ", vanishing " << (bc.vanishing_ok ? "ok" : "FAILED") << ": "
              << (bc.passed() ? "independent basis" : "NOT a basis") << '\n';
  }
  return bc.passed() ? kOk : kCheckFailed;
}

int cmd_relations(const Globals& g, std::optional<std::size_t> n) {
  const PointConfig cfg = resolve_config(g, g.config_path.empty() ? n : std::nullopt);
  const std::size_t N = cfg.n();
  const auto rels = derive_relations(cfg);
  const bool geometric = verify_relations_geometrically(cfg, rels);
  const bool coprime_lt = leading_terms_coprime(rels, N);
  bool all_zero = true;

  if (g.json) {
    Json rj = Json::array();
    for (const auto& r : rels) {
      Json x = to_json(r);
      x["geometric"] = verify_relation_geometrically(cfg, r);
      rj.push_back(std::move(x));
    }
    Json pairs = Json::array();
    for (std::size_t i = 1; i <= rels.size(); ++i) {
      for (std::size_t j = i + 1; j <= rels.size(); ++j) {
        const auto res = spoly_reduce_traced(i, j, rels, N);
        all_zero = all_zero && res.remainder.is_zero();
        pairs.push_back(Json{{"i", i},
                             {"j", j},
                             {"zero", res.remainder.is_zero()},
                             {"remainder", to_json(res.remainder)},
                             {"trace", to_json(res.trace)}});
      }
    }
    print(Json{{"config", to_json(cfg)},
               {"polynomial_ring", rels.empty()},
               {"generators", generator_count(N)},
               {"relations", std::move(rj)},
               {"leading_terms_coprime", coprime_lt},
               {"spolynomials", std::move(pairs)}});
  } else if (rels.empty()) {
    std::cout << "n = " << N << ": polynomial ring, no relations (" << generator_count(N) << " free generators)\n";
  } else {
    std::cout << "n = " << N << ": " << rels.size() << " relations, " << generator_count(N) << " generators\n";
    for (const auto& r : rels) {
      std::cout << "  g" << r.index << " = " << relation_polynomial(N, r).str() << "   ["
                << (verify_relation_geometrically(cfg, r) ? "vanishes on the plane" : "DOES NOT VANISH") << "]\n";
    }
    std::cout << "leading terms coprime: " << (coprime_lt ? "yes" : "NO") << '\n';
    std::cout << "S-polynomial normal forms:\n";
    for (std::size_t i = 1; i <= rels.size(); ++i) {
      std::cout << "  ";
      for (std::size_t j = 1; j <= rels.size(); ++j) {
        if (j <= i) {
          std::cout << " .";
          continue;
        }
        const bool zero = spoly_reduce(i, j, rels, N).is_zero();
        all_zero = all_zero && zero;
        std::cout << (zero ? " 0" : " X");
      }
      std::cout << '\n';
    }
  }
  return geometric && coprime_lt && all_zero ? kOk : kCheckFailed;
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = detail::trim(item);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad --n-list entry '" + item + "' (expected e.g. \"3,4,5\")");
    }
    const auto v = std::stoul(item);
    if (v < 2) throw ParseError("--n-list entries must be >= 2");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("--n-list is empty");
  return out;
}

struct VerifyFlags {
  long d_max = 4;
  std::string n_list;
  std::size_t max_classes = 0;
  bool corrupt_relation = false;
  bool inject_noncollinear = false;
};

int cmd_verify(const Globals& g, const VerifyFlags& f) {
  if (f.d_max < 0) throw ParseError("--dmax must be >= 0");
  std::optional<PointConfig> loaded;
  if (!g.config_path.empty()) loaded = load_config(g.config_path);
  const std::vector<std::size_t> ns =
      f.n_list.empty() ? std::vector<std::size_t>{loaded ? loaded->n() : 3, 4, 5} : parse_n_list(f.n_list);
  std::vector<std::size_t> list = ns;
  if (f.n_list.empty() && loaded) list = {loaded->n()};

  SweepOptions opt;
  opt.d_max = f.d_max;
  opt.max_classes = f.max_classes;
  bool ok = true;
  Json reports = Json::array();
  for (std::size_t n : list) {
    PointConfig cfg = loaded && loaded->n() == n ? *loaded : PointConfig::standard(n);
    // Relations come from the collinear configuration; the injected point only
    // affects the geometric checks.
    auto rels = derive_relations(cfg);
    if (f.inject_noncollinear) cfg = cfg.with_point_off_line(std::min<std::size_t>(3, n), Rational(1));
    if (f.corrupt_relation && !rels.empty()) rels.front().a += 1;
    const SweepReport rep = run_sweep(cfg, rels, opt);
    ok = ok && rep.passed();
    if (g.json) {
      reports.push_back(to_json(rep));
      continue;
    }
    std::cout << "n = " << n << ", d <= " << rep.d_max << ": " << rep.classes_checked << " nef classes, "
              << rep.closure_classes_checked << " neighbours, " << rep.region_classes_checked << " boundary classes, "
              << rep.relation_pairs_checked << " S-pairs" << (rep.complete ? "" : " [INCOMPLETE]") << ": "
              << (rep.passed() ? "ok" : std::to_string(rep.failures.size()) + " failures") << '\n';
    for (const auto& fl : rep.failures) {
      std::cout << "  " << fl.divisor.str() << "  " << fl.check << ": expected " << fl.expected << ", got " << fl.got
                << '\n';
    }
  }
  if (g.json) print(Json{{"passed", ok}, {"reports", std::move(reports)}});
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cox ring of the blow-up of P^2 at n collinear points"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "point configuration file (keys n, t, q)");
  app.add_flag("--json", g.json, "machine-readable output");

  std::vector<std::string> class_tokens;
  const char* class_help = "divisor class \"d a1 ... an\"";
  auto* classify = app.add_subcommand("classify", "cone membership, decompositions, chi and h0 of a class");
  classify->add_option("class", class_tokens, class_help)->required();
  auto* h0cmd = app.add_subcommand("h0", "h0 by formula and by interpolation");
  h0cmd->add_option("class", class_tokens, class_help)->required();
  auto* basis = app.add_subcommand("basis", "standard-monomial basis and its realization as plane curves");
  basis->add_option("class", class_tokens, class_help)->required();

  std::size_t rel_n = 3;
  auto* relations = app.add_subcommand("relations", "trinomial relations, geometric and Groebner checks");
  auto* rel_n_opt = relations->add_option("--n", rel_n, "number of points when no --config is given");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "cross-verification sweep over nef classes");
  verify->add_option("--dmax", vf.d_max, "largest degree d in the sweep");
  verify->add_option("--n-list", vf.n_list, "comma-separated point counts, e.g. \"3,4,5\"");
  verify->add_option("--max-classes", vf.max_classes, "stop after this many nef classes per n (report incomplete)");
  verify->add_flag("--corrupt-relation", vf.corrupt_relation, "test mode: perturb the coefficient a_1");
  verify->add_flag("--inject-noncollinear", vf.inject_noncollinear, "test mode: lift p_3 off the line");

  // Negative multiplicities ("0 -1 0 0") must reach the positional.
  for (auto* sub : {classify, h0cmd, basis}) sub->positionals_at_end();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(g, class_tokens);
    if (h0cmd->parsed()) return cmd_h0(g, class_tokens);
    if (basis->parsed()) return cmd_basis(g, class_tokens);
    if (relations->parsed()) {
      return cmd_relations(g, rel_n_opt->count() || g.config_path.empty() ? std::optional<std::size_t>(rel_n) : std::nullopt);
    }
    if (verify->parsed()) return cmd_verify(g, vf);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
