#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "bgm/errors.hpp"

namespace bgm {

using BigInt = boost::multiprecision::cpp_int;

/// Dense or triplet-sparse integer matrix with arbitrary-precision entries.
/// Boundary matrices of the bar resolution are built sparse (at most four
/// nonzeros per row); everything SNF-sized is dense.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), dense_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(const std::vector<BigInt>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }

  /// Sparse constructor: triplets (row, col, value). Duplicate coordinates
  /// are rejected.
  static IntMatrix from_triplets(
      std::size_t rows, std::size_t cols,
      const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& t);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool sparse() const { return sparse_; }

  BigInt& at(std::size_t r, std::size_t c) { return dense_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return dense_[r * cols_ + c];
  }

  /// Value accessor valid for both storage forms.
  BigInt get(std::size_t r, std::size_t c) const;

  struct Triplet {
    std::size_t row, col;
    std::int64_t value;
  };
  const std::vector<Triplet>& triplets() const { return triplets_; }

  IntMatrix to_dense() const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  bool sparse_ = false;
  std::vector<BigInt> dense_;
  std::vector<Triplet> triplets_;
};

/// U * A * V = D with U, V unimodular and a nonnegative diagonal D whose
/// entries form a divisibility chain.
struct SnfDecomposition {
  IntMatrix U, D, V;
};

/// Exact Smith normal form. Pivoting picks the entry of minimal absolute
/// value, breaking ties by lowest row then lowest column.
SnfDecomposition snf(const IntMatrix& A);

}  // namespace bgm
