#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bgm/errors.hpp"

namespace bgm {

using FpVec = std::vector<std::uint32_t>;

/// Subspace of F_p^d held as a reduced-row-echelon basis: nonzero rows,
/// strictly increasing pivot columns, pivot entries 1, pivot columns cleared.
struct FpSubspace {
  std::uint32_t p = 0;
  std::size_t ambient_dim = 0;
  std::vector<FpVec> basis;

  static FpSubspace zero(std::uint32_t p, std::size_t dim) {
    return {p, dim, {}};
  }
  static FpSubspace full(std::uint32_t p, std::size_t dim);
  static FpSubspace span(std::uint32_t p, std::size_t dim,
                         const std::vector<FpVec>& vectors);

  std::size_t dim() const { return basis.size(); }
  bool contains(const FpVec& v) const;
  bool contains(const FpSubspace& other) const;
  FpSubspace sum(const FpSubspace& other) const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b) = default;
};

/// Orthogonal complement under the standard dot product (the pairing between
/// a space and its dual in coordinates).
FpSubspace fp_orthogonal(const FpSubspace& s);

/// Visits every k-dimensional subspace of F_p^d exactly once via canonical
/// RREF matrices.
void for_each_subspace(std::uint32_t p, std::size_t d, std::size_t k,
                       const std::function<void(const FpSubspace&)>& fn);

/// Gaussian binomial [d choose k]_p, the number of such subspaces.
std::uint64_t gaussian_binomial(std::uint64_t d, std::uint64_t k, std::uint64_t p);

}  // namespace bgm
