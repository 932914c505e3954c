#include "bgm/intmatrix.hpp"

#include <algorithm>
#include <set>

namespace bgm {

IntMatrix IntMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& t) {
  IntMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.sparse_ = true;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  m.triplets_.reserve(t.size());
  for (const auto& [r, c, v] : t) {
    if (r >= rows || c >= cols) throw Error("triplet out of bounds");
    if (!seen.insert({r, c}).second) throw Error("duplicate triplet coordinate");
    if (v != 0) m.triplets_.push_back({r, c, v});
  }
  return m;
}

BigInt IntMatrix::get(std::size_t r, std::size_t c) const {
  if (!sparse_) return dense_[r * cols_ + c];
  for (const auto& t : triplets_)
    if (t.row == r && t.col == c) return t.value;
  return 0;
}

IntMatrix IntMatrix::to_dense() const {
  if (!sparse_) return *this;
  IntMatrix m(rows_, cols_);
  for (const auto& t : triplets_) m.at(t.row, t.col) = t.value;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix d = to_dense();
  IntMatrix m(d.cols_, d.rows_);
  for (std::size_t r = 0; r < d.rows_; ++r)
    for (std::size_t c = 0; c < d.cols_; ++c) m.at(c, r) = d.at(r, c);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix x = a.to_dense(), y = b.to_dense();
  if (x.cols_ != y.rows_) throw Error("dimension mismatch in product");
  IntMatrix m(x.rows_, y.cols_);
  for (std::size_t r = 0; r < x.rows_; ++r)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const BigInt& v = x.at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < y.cols_; ++c) m.at(r, c) += v * y.at(k, c);
    }
  return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  IntMatrix x = a.to_dense(), y = b.to_dense();
  return x.dense_ == y.dense_;
}

namespace {

// Row/column elementary operations tracked in U (rows) and V (cols).
void row_op(IntMatrix& A, IntMatrix& U, std::size_t dst, std::size_t src,
            const BigInt& q) {
  for (std::size_t c = 0; c < A.cols(); ++c) A.at(dst, c) -= q * A.at(src, c);
  for (std::size_t c = 0; c < U.cols(); ++c) U.at(dst, c) -= q * U.at(src, c);
}

void col_op(IntMatrix& A, IntMatrix& V, std::size_t dst, std::size_t src,
            const BigInt& q) {
  for (std::size_t r = 0; r < A.rows(); ++r) A.at(r, dst) -= q * A.at(r, src);
  for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, dst) -= q * V.at(r, src);
}

void row_swap(IntMatrix& A, IntMatrix& U, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
  for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
}

void col_swap(IntMatrix& A, IntMatrix& V, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
  for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
}

void row_negate(IntMatrix& A, IntMatrix& U, std::size_t i) {
  for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) = -A.at(i, c);
  for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
}

}  // namespace

SnfDecomposition snf(const IntMatrix& Ain) {
  IntMatrix A = Ain.to_dense();
  const std::size_t r = A.rows(), c = A.cols();
  IntMatrix U = IntMatrix::identity(r), V = IntMatrix::identity(c);

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Minimal nonzero absolute value in the trailing block, ties broken by
      // lowest row then column.
      std::size_t pr = t, pc = t;
      BigInt best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          BigInt v = abs(A.at(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) goto done;  // trailing block is zero
      row_swap(A, U, t, pr);
      col_swap(A, V, t, pc);
      if (A.at(t, t) < 0) row_negate(A, U, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A.at(i, t) == 0) continue;
        BigInt q = A.at(i, t) / A.at(t, t);
        row_op(A, U, i, t, q);
        if (A.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A.at(t, j) == 0) continue;
        BigInt q = A.at(t, j) / A.at(t, t);
        col_op(A, V, j, t, q);
        if (A.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry, otherwise fold the offender
      // into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (A.at(i, j) % A.at(t, t) != 0) {
            row_op(A, U, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:;

  IntMatrix D(r, c);
  for (std::size_t t = 0; t < steps; ++t) D.at(t, t) = A.at(t, t);
  return {std::move(U), std::move(D), std::move(V)};
}

}  // namespace bgm
