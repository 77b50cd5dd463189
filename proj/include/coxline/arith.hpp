#ifndef COXLINE_ARITH_HPP
#define COXLINE_ARITH_HPP

#include <gmpxx.h>

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coxline {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two lattice vectors of different rank are combined.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside the region where it is defined.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Malformed user input: divisor strings, config files, rationals.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Internal invariant violated by a point configuration (should be unreachable
/// for configurations that passed validation).
struct ConfigurationDegeneracy : std::logic_error {
  using std::logic_error::logic_error;
};

/// k(k-1)/2 for every integer k, so C(0,2) = C(1,2) = 0 and C(-1,2) = 1.
inline Integer binom2(const Integer& k) {
  Integer r = k * (k - 1);
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
  return r;
}

/// Narrow to long for loop bounds; enumeration over astronomically large
/// degrees is not meaningful anyway.
inline long to_long(const Integer& v, std::string_view what = "value") {
  if (!v.fits_slong_p()) {
    throw DomainError(std::string(what) + " out of enumerable range: " + v.get_str());
  }
  return v.get_si();
}

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string_view num = std::string_view(s).substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1")
                                                    : std::string_view(s).substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false)) {
    throw ParseError("malformed rational '" + s + "' (expected p or p/q)");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  Integer p(num_s, 10), q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace coxline

#endif  // COXLINE_ARITH_HPP
