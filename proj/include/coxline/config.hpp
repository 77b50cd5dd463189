#ifndef COXLINE_CONFIG_HPP
#define COXLINE_CONFIG_HPP

// Text input: point-configuration files and divisor-class strings.
//
// Config file, one key per line, '#' starts a comment:
//   n = 4
//   t = ["0", "1/2", "2", "3"]
//   q = ["0", "1", "0"]
// Quotes and brackets are optional. Missing t defaults to 0, 1, ..., n-1;
// missing q defaults to (0 : 1 : 0); missing n is taken from t.

#include "coxline/oracle.hpp"
#include "coxline/picard.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace coxline {

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(const std::string& value) {
  std::string v = trim(value);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') throw ParseError("unterminated list: " + v);
    v = v.substr(1, v.size() - 2);
  }
  for (char& c : v) {
    if (c == ',') c = ' ';
  }
  std::vector<std::string> items;
  std::istringstream is(v);
  for (std::string tok; is >> tok;) {
    if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') tok = tok.substr(1, tok.size() - 2);
    items.push_back(tok);
  }
  return items;
}

}  // namespace detail

inline PointConfig parse_config(std::string_view text) {
  std::optional<long> n;
  std::optional<std::vector<Rational>> t;
  std::optional<PlanePoint> q;

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = detail::trim(std::string_view(line).substr(0, eq));
    const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
    const auto where = "config line " + std::to_string(lineno) + ": ";
    if (key == "n") {
      auto items = detail::split_list(value);
      Rational v = items.size() == 1 ? parse_rational(items[0]) : Rational(-1);
      if (items.size() != 1 || v.get_den() != 1 || v < 2 || !v.get_num().fits_slong_p()) {
        throw ParseError(where + "n must be an integer >= 2");
      }
      n = v.get_num().get_si();
    } else if (key == "t") {
      std::vector<Rational> ts;
      for (const auto& item : detail::split_list(value)) ts.push_back(parse_rational(item));
      t = std::move(ts);
    } else if (key == "q") {
      auto items = detail::split_list(value);
      if (items.size() != 3) throw ParseError(where + "q needs three coordinates");
      q = PlanePoint{parse_rational(items[0]), parse_rational(items[1]), parse_rational(items[2])};
    } else {
      throw ParseError(where + "unknown key '" + key + "'");
    }
  }

  if (!n && !t) throw ParseError("config must set n or t");
  if (!n) n = static_cast<long>(t->size());
  if (!t) t = PointConfig::standard(static_cast<std::size_t>(*n)).t();
  if (static_cast<long>(t->size()) != *n) {
    throw ParseError("config: n = " + std::to_string(*n) + " but t lists " + std::to_string(t->size()) + " values");
  }
  if (!q) q = PlanePoint{Rational(0), Rational(1), Rational(0)};
  try {
    return PointConfig(std::move(*t), std::move(*q));
  } catch (const DomainError& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

inline PointConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

/// "d a1 ... an", whitespace separated. When n is given the count must match.
inline DivisorClass parse_divisor(std::string_view text, std::optional<std::size_t> n = std::nullopt) {
  static constexpr const char* grammar = "expected whitespace-separated integers \"d a1 ... an\" with n >= 2";
  std::istringstream is{std::string(text)};
  std::vector<Integer> vals;
  for (std::string tok; is >> tok;) {
    std::string digits = tok[0] == '-' || tok[0] == '+' ? tok.substr(1) : tok;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad integer '" + tok + "' in divisor class; " + grammar);
    }
    vals.emplace_back(tok[0] == '+' ? digits : tok, 10);
  }
  if (vals.size() < 3) throw ParseError(std::string("divisor class too short; ") + grammar);
  if (n && vals.size() - 1 != *n) {
    throw ParseError("divisor class has " + std::to_string(vals.size() - 1) + " multiplicities but the configuration has n = " +
                     std::to_string(*n));
  }
  Integer d = vals.front();
  vals.erase(vals.begin());
  return {std::move(d), std::move(vals)};
}

}  // namespace coxline

#endif  // COXLINE_CONFIG_HPP
