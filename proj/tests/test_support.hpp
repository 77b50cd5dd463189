#ifndef COXLINE_TEST_SUPPORT_HPP
#define COXLINE_TEST_SUPPORT_HPP

#include "coxline/coxline.hpp"

#include <functional>
#include <random>
#include <vector>

namespace coxline::testing {

/// Every class (d; a) with d in [0, d_max] and a_i in [a_lo, a_hi].
inline std::vector<DivisorClass> box(std::size_t n, long d_max, long a_lo, long a_hi) {
  std::vector<DivisorClass> out;
  std::vector<Integer> a(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long d) {
    if (i == n) {
      out.emplace_back(Integer(d), a);
      return;
    }
    for (long v = a_lo; v <= a_hi; ++v) {
      a[i] = v;
      rec(i + 1, d);
    }
  };
  for (long d = 0; d <= d_max; ++d) rec(0, d);
  return out;
}

inline DivisorClass random_class(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Integer> a;
  for (std::size_t i = 0; i < n; ++i) a.emplace_back(dist(rng));
  return {Integer(dist(rng)), std::move(a)};
}

inline Integer C2(long k) { return Integer(k) * (k - 1) / 2; }

}  // namespace coxline::testing

#endif  // COXLINE_TEST_SUPPORT_HPP
