#ifndef COXLINE_LINALG_HPP
#define COXLINE_LINALG_HPP

#include "coxline/arith.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace coxline {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    data_.resize((rows_ + 1) * cols_);
    ++rows_;
  }

  static RationalMatrix identity(std::size_t k) {
    RationalMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of an integer matrix by Bareiss fraction-free elimination. Every
/// division below is exact; the matrix is consumed.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Integer& piv = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = piv * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

/// Rank over Q. Each row is scaled by the lcm of its denominators, which
/// leaves the rank unchanged, then eliminated fraction-free.
inline std::size_t exact_rank(const RationalMatrix& M) {
  std::vector<std::vector<Integer>> z(M.rows(), std::vector<Integer>(M.cols()));
  for (std::size_t r = 0; r < M.rows(); ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < M.cols(); ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), M(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < M.cols(); ++c) {
      z[r][c] = M(r, c).get_num() * (den / M(r, c).get_den());
    }
  }
  return bareiss_rank(std::move(z));
}

}  // namespace coxline

#endif  // COXLINE_LINALG_HPP
