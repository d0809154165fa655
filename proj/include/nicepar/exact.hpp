#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nicepar {

/// Errors raised by the library. The CLI maps these onto exit codes.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct unsupported_operation : error {
  using error::error;
};
struct invalid_subdiagram : error {
  using error::error;
};
struct precondition_error : error {
  using error::error;
};
struct invalid_partition : error {
  using error::error;
};
struct inconsistency_error : error {
  using error::error;
};
struct indeterminate_error : error {
  using error::error;
};

/// Dense matrix over exact rationals. Rank decisions are certain: no
/// floating point anywhere near this type.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  ExactMatrix operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw error("matrix product shape mismatch");
    ExactMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const mpq_class& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          const mpq_class& w = other.at(k, j);
          if (w != 0) out.at(i, j) += v * w;
        }
      }
    return out;
  }

  ExactMatrix operator+(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw error("matrix sum shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
  }

  bool operator==(const ExactMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  /// Exact rank by fraction-free (Bareiss) elimination on a denominator-
  /// cleared copy. Pivots favour small entries to damp coefficient growth.
  std::size_t rank() const;

  std::size_t nullity() const { return cols_ - rank(); }

 private:
  std::size_t rows_, cols_;
  std::vector<mpq_class> data_;
};

inline std::size_t ExactMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols_; ++j) {
      const mpq_class& v = at(i, j);
      if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      const mpq_class& v = at(i, j);
      if (v != 0) {
        mpq_class scaled = v * lcm;
        m[i][j] = scaled.get_num();
      }
    }
  }

  std::size_t rank = 0;
  mpz_class prev = 1;
  std::size_t nr = rows_, nc = cols_;
  for (std::size_t step = 0; rank < nr && rank < nc; ++step) {
    // Smallest nonzero pivot in the remaining block (by absolute size).
    std::size_t pr = nr, pc = nc;
    for (std::size_t i = rank; i < nr; ++i)
      for (std::size_t j = rank; j < nc; ++j) {
        if (m[i][j] == 0) continue;
        if (pr == nr || mpz_cmpabs(m[i][j].get_mpz_t(), m[pr][pc].get_mpz_t()) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr == nr) break;
    if (pr != rank) std::swap(m[pr], m[rank]);
    if (pc != rank)
      for (std::size_t i = 0; i < nr; ++i) std::swap(m[i][pc], m[i][rank]);

    const mpz_class& piv = m[rank][rank];
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = rank + 1; j < nc; ++j) {
        mpz_class t = m[i][j] * piv - m[i][rank] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][rank] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace nicepar
