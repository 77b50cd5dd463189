// Small tour of the library for five points on a line: the degree-L
// census, the relations, and one basis realized as plane curves.

#include "coxline/coxline.hpp"

#include <iostream>

int main() {
  using namespace coxline;
  const PointConfig cfg = PointConfig::standard(5);
  const std::size_t n = cfg.n();

  const DivisorClass L = DivisorClass::line(n);
  std::cout << "monomials of degree L: " << enumerate_monomials_of_degree(L).size() << ", h0(L) = " << h0(L) << '\n';

  for (const auto& r : derive_relations(cfg)) std::cout << "g" << r.index << " = " << relation_polynomial(n, r).str() << '\n';

  const DivisorClass D(3, {1, 1, 0, 0, 1});
  const LineForms lf = line_forms(cfg);
  std::cout << "basis of " << D.str() << ":\n";
  for (const auto& m : enumerate_standard_monomials(D).monomials) {
    std::cout << "  " << m.str() << " -> " << realize_monomial(lf, m).str() << '\n';
  }
  std::cout << "independent: " << std::boolalpha << verify_basis_independence(cfg, D) << '\n';
}
