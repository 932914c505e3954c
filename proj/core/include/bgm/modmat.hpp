#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bgm/intmatrix.hpp"

namespace bgm {

/// Dense matrix over Z/m with entries in [0, m). The workhorse behind
/// kernel_mod, quotient_invariants and hom_kernel; m is at most the group
/// order in every caller, so plain 64-bit arithmetic is exact.
struct ModMatrix {
  std::uint64_t m = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;  // row-major

  ModMatrix() = default;
  ModMatrix(std::uint64_t mod, std::size_t r, std::size_t c)
      : m(mod), rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static ModMatrix from_rows(std::uint64_t m,
                             const std::vector<std::vector<std::uint64_t>>& rows,
                             std::size_t cols);
  static ModMatrix reduce(const IntMatrix& A, std::uint64_t m);
};

std::vector<std::uint64_t> mod_mat_vec(const ModMatrix& A,
                                       const std::vector<std::uint64_t>& x);

/// Diagonalization U*A*V = D over Z/m with U, V invertible mod m. Diagonal
/// entries are divisors of m (never zero unless the whole row/col block is
/// zero); V^{-1} is tracked alongside V.
struct ModSnf {
  std::uint64_t m = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> diag;  // length min(rows, cols), divisors of m; 0 = absent pivot
  ModMatrix U, V, Vinv;

  /// Generators of {x : A x = 0 (mod m)}, zero vectors dropped.
  std::vector<std::vector<std::uint64_t>> kernel() const;

  /// A particular solution of A x = b (mod m), if one exists.
  std::optional<std::vector<std::uint64_t>> solve(
      const std::vector<std::uint64_t>& b) const;
};

ModSnf mod_snf(const ModMatrix& A, bool want_U = true);

/// Incremental row-space echelonization over Z/m for matrices fed row by
/// row (sparse rows welcome). Pivot rows are never back-reduced, which keeps
/// them sparse for bar-resolution boundary matrices.
class ModEchelon {
 public:
  ModEchelon(std::uint64_t m, std::size_t cols);

  void add_row(const std::vector<std::pair<std::size_t, std::uint64_t>>& row);
  void add_dense_row(const std::vector<std::uint64_t>& row);

  /// The accumulated row basis as a dense matrix (rows sorted by pivot column).
  ModMatrix basis() const;
  std::size_t rank() const { return order_.size(); }
  std::uint64_t modulus() const { return m_; }
  std::size_t cols() const { return cols_; }

 private:
  std::uint64_t m_;
  std::size_t cols_;
  std::vector<int> pivot_of_col_;          // -1 if none
  std::vector<std::vector<std::uint64_t>> rows_;  // dense pivot rows
  std::vector<std::size_t> order_;         // row indices sorted by pivot col
  std::vector<std::uint64_t> work_;
  std::vector<std::uint16_t> modtab_;  // x % m_ for x < 2*m_*m_, small moduli

  void insert(std::vector<std::uint64_t>& r);
};

/// Generators of the solution module of A x = 0 (mod m). Rows may be fed as
/// a sparse stream to avoid materializing huge boundary matrices.
std::vector<std::vector<std::uint64_t>> kernel_mod(const IntMatrix& A,
                                                   std::uint64_t m);
std::vector<std::vector<std::uint64_t>> kernel_mod(const ModEchelon& rows);

// Small modular helpers shared across modules.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);
/// A unit u (mod m) with u*a = gcd(a, m) (mod m).
std::uint64_t unit_to_gcd(std::uint64_t a, std::uint64_t m);

}  // namespace bgm
