#include "bgm/fp.hpp"

#include <algorithm>

namespace bgm {

namespace {

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  // p is a small prime; Fermat is plenty.
  std::uint32_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(r) * b % p;
    b = static_cast<std::uint64_t>(b) * b % p;
    e >>= 1;
  }
  return r;
}

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref(std::vector<FpVec>& rows, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t d = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::uint32_t inv = fp_inv(rows[r][c] % p, p);
    for (auto& v : rows[r]) v = static_cast<std::uint64_t>(v) * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      std::uint32_t f = rows[i][c] % p;
      if (!f) continue;
      for (std::size_t j = 0; j < d; ++j)
        rows[i][j] = (rows[i][j] + static_cast<std::uint64_t>(p - f) * rows[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

FpSubspace FpSubspace::full(std::uint32_t p, std::size_t dim) {
  FpSubspace s{p, dim, {}};
  for (std::size_t i = 0; i < dim; ++i) {
    FpVec e(dim, 0);
    e[i] = 1;
    s.basis.push_back(std::move(e));
  }
  return s;
}

FpSubspace FpSubspace::span(std::uint32_t p, std::size_t dim,
                            const std::vector<FpVec>& vectors) {
  FpSubspace s{p, dim, {}};
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error("vector dimension mismatch");
    FpVec w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = v[i] % p;
    s.basis.push_back(std::move(w));
  }
  rref(s.basis, p);
  return s;
}

bool FpSubspace::contains(const FpVec& v) const {
  FpVec w(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) w[i] = v[i] % p;
  for (const auto& row : basis) {
    std::size_t piv = 0;
    while (piv < ambient_dim && row[piv] == 0) ++piv;
    std::uint32_t f = w[piv];
    if (!f) continue;
    for (std::size_t j = 0; j < ambient_dim; ++j)
      w[j] = (w[j] + static_cast<std::uint64_t>(p - f) * row[j]) % p;
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (const auto& row : other.basis)
    if (!contains(row)) return false;
  return true;
}

FpSubspace FpSubspace::sum(const FpSubspace& other) const {
  std::vector<FpVec> all = basis;
  all.insert(all.end(), other.basis.begin(), other.basis.end());
  return span(p, ambient_dim, all);
}

FpSubspace fp_orthogonal(const FpSubspace& s) {
  const std::uint32_t p = s.p;
  const std::size_t d = s.ambient_dim;
  std::vector<FpVec> rows = s.basis;
  std::vector<std::size_t> pivots = rref(rows, p);
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<FpVec> out;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    FpVec w(d, 0);
    w[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      w[pivots[i]] = (p - rows[i][f] % p) % p;
    out.push_back(std::move(w));
  }
  return FpSubspace::span(p, d, out);
}

void for_each_subspace(std::uint32_t p, std::size_t d, std::size_t k,
                       const std::function<void(const FpSubspace&)>& fn) {
  if (k > d) return;
  if (k == 0) {
    fn(FpSubspace::zero(p, d));
    return;
  }
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // Free positions: (row, col) with col > piv[row] and col not a pivot.
    std::vector<bool> is_pivot(d, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < d; ++c)
        if (!is_pivot[c]) free_pos.push_back({r, c});

    std::vector<std::uint32_t> vals(free_pos.size(), 0);
    for (;;) {
      FpSubspace s{p, d, std::vector<FpVec>(k, FpVec(d, 0))};
      for (std::size_t r = 0; r < k; ++r) s.basis[r][piv[r]] = 1;
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        s.basis[free_pos[i].first][free_pos[i].second] = vals[i];
      fn(s);
      // odometer
      std::size_t i = 0;
      while (i < vals.size() && ++vals[i] == p) vals[i++] = 0;
      if (i == vals.size()) break;
    }

    // next pivot combination in lexicographic order
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (piv[i] + (k - i) < d) {
        ++piv[i];
        for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

std::uint64_t gaussian_binomial(std::uint64_t d, std::uint64_t k, std::uint64_t p) {
  if (k > d) return 0;
  auto pw = [&](std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= p;
    return r;
  };
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= pw(d - i) - 1;
    den *= pw(i + 1) - 1;
  }
  return num / den;
}

}  // namespace bgm
