#include "bgm/modmat.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace bgm {

namespace {

std::uint64_t umod(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

// Extended gcd on int64; inputs here are bounded by the modulus.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x,
                     std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t x, y;
  std::int64_t g = ext_gcd(static_cast<std::int64_t>(a % m),
                           static_cast<std::int64_t>(m), x, y);
  if (g != 1) throw Error("element not invertible");
  return umod(x, m);
}

std::uint64_t unit_to_gcd(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a == 0) return 1;
  std::uint64_t g = std::gcd(a, m);
  std::uint64_t a1 = a / g, m1 = m / g;
  std::uint64_t u = (m1 == 1) ? 1 : mod_inverse(a1 % m1, m1);
  // Lift u to a unit mod m; u = u0 + k*(m/g) stays a solution of u*a = g.
  while (std::gcd(u, m) != 1) u += m1;
  return u % m == 0 ? 1 : u % m;
}

ModMatrix ModMatrix::from_rows(std::uint64_t m,
                               const std::vector<std::vector<std::uint64_t>>& rows,
                               std::size_t cols) {
  ModMatrix A(m, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) A.at(r, c) = rows[r][c] % m;
  return A;
}

ModMatrix ModMatrix::reduce(const IntMatrix& A, std::uint64_t m) {
  ModMatrix B(m, A.rows(), A.cols());
  if (A.sparse()) {
    for (const auto& t : A.triplets())
      B.at(t.row, t.col) = (B.at(t.row, t.col) + umod(t.value, m)) % m;
  } else {
    for (std::size_t r = 0; r < A.rows(); ++r)
      for (std::size_t c = 0; c < A.cols(); ++c) {
        BigInt v = A.at(r, c) % static_cast<std::int64_t>(m);
        if (v < 0) v += static_cast<std::int64_t>(m);
        B.at(r, c) = v.convert_to<std::uint64_t>();
      }
  }
  return B;
}

std::vector<std::uint64_t> mod_mat_vec(const ModMatrix& A,
                                       const std::vector<std::uint64_t>& x) {
  std::vector<std::uint64_t> out(A.rows, 0);
  for (std::size_t r = 0; r < A.rows; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < A.cols; ++c)
      acc = (acc + A.at(r, c) % A.m * (x[c] % A.m)) % A.m;
    out[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// ModEchelon

ModEchelon::ModEchelon(std::uint64_t m, std::size_t cols)
    : m_(m), cols_(cols), pivot_of_col_(cols, -1), work_(cols, 0) {
  if (m < 2) throw Error("modulus must be at least 2");
  // For small moduli a reduction table beats a hardware divide in the
  // row-elimination inner loop (indices stay below 2*m*m).
  if (m <= 1024) {
    modtab_.resize(2 * m * m);
    for (std::size_t x = 0; x < modtab_.size(); ++x)
      modtab_[x] = static_cast<std::uint16_t>(x % m);
  }
}

void ModEchelon::add_row(
    const std::vector<std::pair<std::size_t, std::uint64_t>>& row) {
  std::fill(work_.begin(), work_.end(), 0);
  for (const auto& [c, v] : row) work_[c] = (work_[c] + v) % m_;
  insert(work_);
}

void ModEchelon::add_dense_row(const std::vector<std::uint64_t>& row) {
  for (std::size_t c = 0; c < cols_; ++c) work_[c] = row[c] % m_;
  insert(work_);
}

void ModEchelon::insert(std::vector<std::uint64_t>& r) {
  for (std::size_t j = 0; j < cols_; ++j) {
    std::uint64_t e = r[j];
    if (e == 0) continue;
    int pi = pivot_of_col_[j];
    if (pi < 0) {
      // Install: scale so the pivot entry is gcd(e, m), a divisor of m.
      std::uint64_t u = unit_to_gcd(e, m_);
      if (u != 1)
        for (std::size_t c = j; c < cols_; ++c) r[c] = r[c] * u % m_;
      pivot_of_col_[j] = static_cast<int>(rows_.size());
      rows_.push_back(r);
      order_.push_back(rows_.size() - 1);
      return;
    }
    auto& p = rows_[static_cast<std::size_t>(pi)];
    std::uint64_t pv = p[j];
    if (e % pv == 0) {
      std::uint64_t q = (e / pv) % m_;
      const std::uint64_t d = m_ - q;
      if (!modtab_.empty()) {
        const std::uint16_t* tab = modtab_.data();
        for (std::size_t c = j; c < cols_; ++c)
          if (p[c] != 0) r[c] = tab[r[c] + d * p[c]];
      } else {
        for (std::size_t c = j; c < cols_; ++c)
          if (p[c] != 0) r[c] = (r[c] + d * p[c]) % m_;
      }
    } else {
      // Fold the incoming row into the pivot so the pivot becomes the gcd.
      std::int64_t x, y;
      std::int64_t g = ext_gcd(static_cast<std::int64_t>(pv),
                               static_cast<std::int64_t>(e), x, y);
      std::uint64_t xm = umod(x, m_), ym = umod(y, m_);
      std::uint64_t qp = (e / static_cast<std::uint64_t>(g)) % m_;
      std::uint64_t qr = (pv / static_cast<std::uint64_t>(g)) % m_;
      if (!modtab_.empty()) {
        const std::uint16_t* tab = modtab_.data();
        for (std::size_t c = j; c < cols_; ++c) {
          std::uint64_t pc = p[c], rc = r[c];
          p[c] = tab[xm * pc + ym * rc];
          r[c] = tab[(m_ - qp) * pc + qr * rc];
        }
      } else {
        for (std::size_t c = j; c < cols_; ++c) {
          std::uint64_t pc = p[c], rc = r[c];
          p[c] = (xm * pc + ym * rc) % m_;
          r[c] = ((m_ - qp) * pc % m_ + qr * rc) % m_;
        }
      }
    }
  }
}

ModMatrix ModEchelon::basis() const {
  // Rows sorted by pivot column for determinism.
  std::vector<std::pair<std::size_t, std::size_t>> piv;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_of_col_[c] >= 0)
      piv.push_back({c, static_cast<std::size_t>(pivot_of_col_[c])});
  ModMatrix B(m_, piv.size(), cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) B.at(i, c) = rows_[piv[i].second][c];
  return B;
}

// ---------------------------------------------------------------------------
// mod_snf

namespace {

struct SnfWork {
  std::uint64_t m;
  ModMatrix A, U, V, Vinv;
  bool want_U;

  void row_sub(std::size_t dst, std::size_t src, std::uint64_t q) {
    q %= m;
    if (q == 0) return;
    std::uint64_t nq = m - q;
    for (std::size_t c = 0; c < A.cols; ++c)
      A.at(dst, c) = (A.at(dst, c) + nq * A.at(src, c)) % m;
    if (want_U)
      for (std::size_t c = 0; c < U.cols; ++c)
        U.at(dst, c) = (U.at(dst, c) + nq * U.at(src, c)) % m;
  }

  // rows dst <- x*dst + y*src ; src <- a*dst_old + b*src (2x2 unimodular)
  void row_combine(std::size_t i, std::size_t k, std::uint64_t x,
                   std::uint64_t y, std::uint64_t a, std::uint64_t b) {
    for (std::size_t c = 0; c < A.cols; ++c) {
      std::uint64_t vi = A.at(i, c), vk = A.at(k, c);
      A.at(i, c) = (x * vi + y * vk) % m;
      A.at(k, c) = (a * vi + b * vk) % m;
    }
    if (want_U)
      for (std::size_t c = 0; c < U.cols; ++c) {
        std::uint64_t vi = U.at(i, c), vk = U.at(k, c);
        U.at(i, c) = (x * vi + y * vk) % m;
        U.at(k, c) = (a * vi + b * vk) % m;
      }
  }

  void col_sub(std::size_t dst, std::size_t src, std::uint64_t q) {
    q %= m;
    if (q == 0) return;
    std::uint64_t nq = m - q;
    for (std::size_t r = 0; r < A.rows; ++r)
      A.at(r, dst) = (A.at(r, dst) + nq * A.at(r, src)) % m;
    for (std::size_t r = 0; r < V.rows; ++r)
      V.at(r, dst) = (V.at(r, dst) + nq * V.at(r, src)) % m;
    for (std::size_t c = 0; c < Vinv.cols; ++c)
      Vinv.at(src, c) = (Vinv.at(src, c) + q * Vinv.at(dst, c)) % m;
  }

  void col_combine(std::size_t i, std::size_t k, std::uint64_t x,
                   std::uint64_t y, std::uint64_t a, std::uint64_t b,
                   std::uint64_t bi, std::uint64_t byi, std::uint64_t ai,
                   std::uint64_t xi) {
    // cols: i <- x*i + y*k, k <- a*i_old + b*k. Inverse rows of Vinv use the
    // inverse matrix [[b, -y], [-a, x]] (det = 1).
    for (std::size_t r = 0; r < A.rows; ++r) {
      std::uint64_t vi = A.at(r, i), vk = A.at(r, k);
      A.at(r, i) = (x * vi + y * vk) % m;
      A.at(r, k) = (a * vi + b * vk) % m;
    }
    for (std::size_t r = 0; r < V.rows; ++r) {
      std::uint64_t vi = V.at(r, i), vk = V.at(r, k);
      V.at(r, i) = (x * vi + y * vk) % m;
      V.at(r, k) = (a * vi + b * vk) % m;
    }
    for (std::size_t c = 0; c < Vinv.cols; ++c) {
      std::uint64_t ri = Vinv.at(i, c), rk = Vinv.at(k, c);
      Vinv.at(i, c) = (bi * ri + byi * rk) % m;
      Vinv.at(k, c) = (ai * ri + xi * rk) % m;
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    if (want_U)
      for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (std::size_t c = 0; c < Vinv.cols; ++c)
      std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }

  void row_scale(std::size_t i, std::uint64_t u) {
    if (u == 1) return;
    for (std::size_t c = 0; c < A.cols; ++c) A.at(i, c) = A.at(i, c) * u % m;
    if (want_U)
      for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) = U.at(i, c) * u % m;
  }

  // Clear row t and column t beyond the pivot at (t, t).
  void clear_cross(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < A.rows; ++i) {
        std::uint64_t e = A.at(i, t);
        if (e == 0) continue;
        std::uint64_t p = A.at(t, t);
        if (e % p == 0) {
          row_sub(i, t, e / p % m);
        } else {
          std::int64_t x, y;
          std::int64_t g = ext_gcd(static_cast<std::int64_t>(p),
                                   static_cast<std::int64_t>(e), x, y);
          row_combine(t, i, umod(x, m), umod(y, m),
                      umod(-static_cast<std::int64_t>(e / g), m),
                      (p / static_cast<std::uint64_t>(g)) % m);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < A.cols; ++j) {
        std::uint64_t e = A.at(t, j);
        if (e == 0) continue;
        std::uint64_t p = A.at(t, t);
        if (e % p == 0) {
          col_sub(j, t, e / p % m);
        } else {
          std::int64_t x, y;
          std::int64_t g = ext_gcd(static_cast<std::int64_t>(p),
                                   static_cast<std::int64_t>(e), x, y);
          std::uint64_t xm = umod(x, m), ym = umod(y, m);
          std::uint64_t am = umod(-static_cast<std::int64_t>(e / g), m);
          std::uint64_t bm = (p / static_cast<std::uint64_t>(g)) % m;
          col_combine(t, j, xm, ym, am, bm, /*bi=*/bm,
                      /*byi=*/umod(static_cast<std::int64_t>(e / g), m),
                      /*ai=*/umod(-y, m), /*xi=*/xm);
          dirty = true;
        }
      }
    }
  }
};

std::uint64_t diag_val(std::uint64_t d, std::uint64_t m) { return d == 0 ? m : d; }

}  // namespace

ModSnf mod_snf(const ModMatrix& Ain, bool want_U) {
  const std::uint64_t m = Ain.m;
  SnfWork w{m, Ain, ModMatrix(m, want_U ? Ain.rows : 0, want_U ? Ain.rows : 0),
            ModMatrix(m, Ain.cols, Ain.cols), ModMatrix(m, Ain.cols, Ain.cols),
            want_U};
  for (std::size_t i = 0; i < w.U.rows; ++i) w.U.at(i, i) = 1;
  for (std::size_t i = 0; i < w.V.rows; ++i) {
    w.V.at(i, i) = 1;
    w.Vinv.at(i, i) = 1;
  }

  const std::size_t steps = std::min(Ain.rows, Ain.cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: minimal (gcd with m, centered representative), lowest row/col.
    std::size_t pr = t, pc = t;
    std::uint64_t bg = 0, bv = 0;
    bool found = false;
    for (std::size_t i = t; i < w.A.rows; ++i)
      for (std::size_t j = t; j < w.A.cols; ++j) {
        std::uint64_t v = w.A.at(i, j);
        if (v == 0) continue;
        std::uint64_t g = std::gcd(v, m);
        std::uint64_t cv = std::min(v, m - v);
        if (!found || g < bg || (g == bg && cv < bv)) {
          found = true;
          bg = g;
          bv = cv;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);
    w.clear_cross(t);
    w.row_scale(t, unit_to_gcd(w.A.at(t, t), m));
  }

  // Divisibility chain among the diagonal divisors (0 stands for m).
  for (std::size_t t = 0; t < steps; ++t)
    for (std::size_t k = t + 1; k < steps; ++k) {
      std::uint64_t dt = diag_val(w.A.at(t, t), m), dk = diag_val(w.A.at(k, k), m);
      if (dk % dt != 0) {
        w.col_sub(t, k, m - 1);  // col t += col k
        w.clear_cross(t);
        w.row_scale(t, unit_to_gcd(w.A.at(t, t), m));
      }
    }

  ModSnf out;
  out.m = m;
  out.rows = Ain.rows;
  out.cols = Ain.cols;
  out.diag.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diag[t] = w.A.at(t, t);
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  out.Vinv = std::move(w.Vinv);
  return out;
}

std::vector<std::vector<std::uint64_t>> ModSnf::kernel() const {
  std::vector<std::vector<std::uint64_t>> gens;
  for (std::size_t i = 0; i < cols; ++i) {
    std::uint64_t d = (i < diag.size()) ? diag_val(diag[i], m) : m;
    std::uint64_t scale = (m / d) % m;
    if (d == m) scale = 1;  // entry is 0 mod m, the column is free
    if (d != m && scale == 0) continue;  // d == 1 contributes nothing
    std::vector<std::uint64_t> g(cols);
    bool nonzero = false;
    for (std::size_t r = 0; r < cols; ++r) {
      g[r] = V.at(r, i) * scale % m;
      nonzero |= g[r] != 0;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  return gens;
}

std::optional<std::vector<std::uint64_t>> ModSnf::solve(
    const std::vector<std::uint64_t>& b) const {
  if (b.size() != rows) throw Error("solve: rhs size mismatch");
  std::vector<std::uint64_t> c(rows, 0);
  if (U.rows != rows) throw Error("solve requires mod_snf with want_U");
  for (std::size_t i = 0; i < rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < rows; ++j) acc = (acc + U.at(i, j) * (b[j] % m)) % m;
    c[i] = acc;
  }
  std::vector<std::uint64_t> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < diag.size()) {
      std::uint64_t d = diag_val(diag[i], m);
      if (c[i] % std::gcd(d, m) != 0) return std::nullopt;
      if (i < cols) y[i] = (c[i] / std::gcd(d, m)) % m;
      if (d == m && c[i] != 0) return std::nullopt;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<std::uint64_t> x(cols, 0);
  for (std::size_t r = 0; r < cols; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc = (acc + V.at(r, j) * y[j]) % m;
    x[r] = acc;
  }
  return x;
}

std::vector<std::vector<std::uint64_t>> kernel_mod(const ModEchelon& rows) {
  ModMatrix B = rows.basis();
  if (B.rows == 0) {
    // Zero matrix: the kernel is everything.
    std::vector<std::vector<std::uint64_t>> gens;
    for (std::size_t i = 0; i < rows.cols(); ++i) {
      std::vector<std::uint64_t> g(rows.cols(), 0);
      g[i] = 1;
      gens.push_back(std::move(g));
    }
    return gens;
  }
  return mod_snf(B, /*want_U=*/false).kernel();
}

std::vector<std::vector<std::uint64_t>> kernel_mod(const IntMatrix& A,
                                                   std::uint64_t m) {
  if (m < 2) throw Error("kernel_mod: modulus must be at least 2");
  ModEchelon ech(m, A.cols());
  if (A.sparse()) {
    // Group triplets by row.
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows(A.rows());
    for (const auto& t : A.triplets())
      rows[t.row].push_back({t.col, umod(t.value, m)});
    for (auto& r : rows) ech.add_row(r);
  } else {
    ModMatrix B = ModMatrix::reduce(A, m);
    std::vector<std::uint64_t> row(A.cols());
    for (std::size_t r = 0; r < B.rows; ++r) {
      for (std::size_t c = 0; c < B.cols; ++c) row[c] = B.at(r, c);
      ech.add_dense_row(row);
    }
  }
  return kernel_mod(ech);
}

}  // namespace bgm
