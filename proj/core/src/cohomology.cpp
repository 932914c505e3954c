#include "bgm/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bgm/modmat.hpp"

namespace bgm {

namespace {

// Sparse row accumulator: merges repeated columns before emitting triplets.
using SparseTriplet = std::tuple<std::size_t, std::size_t, std::int64_t>;

void emit_row(std::vector<SparseTriplet>& out, std::size_t row,
              std::vector<std::pair<std::size_t, std::int64_t>>& terms) {
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    std::int64_t v = 0;
    while (j < terms.size() && terms[j].first == terms[i].first)
      v += terms[j++].second;
    if (v != 0) out.push_back({row, terms[i].first, v});
    i = j;
  }
  terms.clear();
}

}  // namespace

bool CocycleVector::is_cocycle() const {
  const auto& G = *group;
  for (Elt g = 1; g < G.order; ++g)
    for (Elt h = 1; h < G.order; ++h)
      for (Elt k = 1; k < G.order; ++k) {
        std::int64_t lhs = static_cast<std::int64_t>(value(h, k)) -
                           static_cast<std::int64_t>(value(G.mul(g, h), k)) +
                           static_cast<std::int64_t>(value(g, G.mul(h, k))) -
                           static_cast<std::int64_t>(value(g, h));
        if (((lhs % static_cast<std::int64_t>(m)) + m) % m != 0) return false;
      }
  return true;
}

std::pair<IntMatrix, IntMatrix> boundary_matrices(GroupPtr g, std::uint64_t m,
                                                  std::size_t row_cap) {
  if (m < 2) throw Error("modulus must be at least 2");
  const std::size_t n = g->order;
  const std::size_t k1 = n - 1;  // 1-cochain coordinates
  if (k1 * k1 * k1 > row_cap) throw CapExceeded("boundary row cap");
  auto pair_ix = [&](Elt a, Elt b) {
    return static_cast<std::size_t>(a - 1) * k1 + (b - 1);
  };
  std::vector<SparseTriplet> t1, t2;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  for (Elt a = 1; a < n; ++a)
    for (Elt b = 1; b < n; ++b) {
      Elt ab = g->mul(a, b);
      terms.push_back({static_cast<std::size_t>(a - 1), 1});
      terms.push_back({static_cast<std::size_t>(b - 1), 1});
      if (ab != 0) terms.push_back({static_cast<std::size_t>(ab - 1), -1});
      emit_row(t1, pair_ix(a, b), terms);
    }
  for (Elt a = 1; a < n; ++a)
    for (Elt b = 1; b < n; ++b)
      for (Elt c = 1; c < n; ++c) {
        std::size_t row = pair_ix(a, b) * k1 + (c - 1);
        Elt ab = g->mul(a, b), bc = g->mul(b, c);
        terms.push_back({pair_ix(b, c), 1});
        if (ab != 0) terms.push_back({pair_ix(ab, c), -1});
        if (bc != 0) terms.push_back({pair_ix(a, bc), 1});
        terms.push_back({pair_ix(a, b), -1});
        emit_row(t2, row, terms);
      }
  return {IntMatrix::from_triplets(k1 * k1, k1, t1),
          IntMatrix::from_triplets(k1 * k1 * k1, k1 * k1, t2)};
}

SchurMultiplier schur_multiplier_mod(GroupPtr g, std::uint64_t m,
                                     std::size_t row_cap) {
  const std::size_t n = g->order;
  if (m % n != 0) throw Error("modulus must be a multiple of the group order");
  SchurMultiplier out;
  out.group = g;
  out.m = m;
  if (n == 1 || m < 2) {
    out.presentation = PresentedAbelianGroup::from_invariant_factors({}, {}, m);
    return out;
  }
  const std::size_t amb = (n - 1) * (n - 1);
  auto [d1, d2] = boundary_matrices(g, m, row_cap);
  auto cocycles = kernel_mod(d2, m);

  // Coboundary generators: columns of d1.
  std::vector<std::vector<std::uint64_t>> bnd(n - 1,
                                              std::vector<std::uint64_t>(amb, 0));
  for (const auto& t : d1.triplets())
    bnd[t.col][t.row] = static_cast<std::uint64_t>(
        ((t.value % static_cast<std::int64_t>(m)) + m) % m);

  // Carry classes: one character per invariant factor of the abelianization.
  auto der = derived_subgroup(g);
  auto q = quotient(g, der);
  auto factors = abelian_invariants(q.group);
  if (!factors.empty()) {
    auto model = abelian_group(factors);
    auto iso = is_isomorphic(q.group, model);
    if (!iso) throw Error("abelianization model mismatch");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::uint64_t d = factors[i];
      std::uint64_t radix_below = 1;
      for (std::size_t j = 0; j < i; ++j) radix_below *= factors[j];
      // c(x): lift of the i-th coordinate character into {0..m-1}.
      std::vector<std::uint64_t> c(n);
      for (Elt x = 0; x < n; ++x) {
        std::uint64_t digit = iso->images[q.projection.images[x]] / radix_below % d;
        c[x] = digit * (m / d);
      }
      std::vector<std::uint64_t> carry(amb, 0);
      for (Elt a = 1; a < n; ++a)
        for (Elt b = 1; b < n; ++b) {
          std::uint64_t s = c[a] + c[b] - c[g->mul(a, b)];
          carry[static_cast<std::size_t>(a - 1) * (n - 1) + (b - 1)] =
              (s / m) % m;
        }
      bnd.push_back(std::move(carry));
    }
  }
  out.presentation = quotient_invariants(cocycles, bnd, amb, m);
  out.boundary_span = std::move(bnd);
  return out;
}

SchurMultiplier schur_multiplier(GroupPtr g, std::size_t cap,
                                 std::size_t row_cap) {
  if (g->order > cap) throw CapExceeded("cohomology order cap");
  return schur_multiplier_mod(g, std::max<std::uint64_t>(g->order, 2), row_cap);
}

std::vector<Subgroup> bicyclic_subgroups(GroupPtr g) {
  std::set<std::vector<bool>> seen;
  std::vector<Subgroup> out;
  for (Elt a = 0; a < g->order; ++a)
    for (Elt b = a; b < g->order; ++b) {
      if (g->mul(a, b) != g->mul(b, a)) continue;
      auto h = closure(g, {a, b});
      if (seen.insert(h.mask).second) out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members < y.members;
  });
  return out;
}

CocycleVector restrict_cocycle(const CocycleVector& c, const Subgroup& a) {
  if (a.parent.get() != c.group.get())
    throw NotSubgroup("restriction target is not a subgroup of the source");
  auto sub = subgroup_as_group(a);
  const std::size_t k = sub.group->order;
  CocycleVector out{sub.group, c.m, std::vector<std::uint64_t>((k - 1) * (k - 1), 0)};
  for (Elt x = 1; x < k; ++x)
    for (Elt y = 1; y < k; ++y)
      out.values[out.pair_index(x, y)] =
          c.value(sub.to_parent[x], sub.to_parent[y]);
  return out;
}

PresentedAbelianGroup b0(GroupPtr g, B0Mode mode, std::size_t cap,
                         std::size_t row_cap) {
  auto M = schur_multiplier(g, cap, row_cap);
  const std::uint64_t m = M.m;
  if (M.presentation.trivial()) return M.presentation;
  const std::size_t r = M.presentation.invariant_factors.size();

  std::vector<Subgroup> subs;
  if (mode == B0Mode::bicyclic) {
    subs = bicyclic_subgroups(g);
  } else {
    for (auto& h : all_subgroups(g, std::max<std::size_t>(g->order, 128)))
      if (h.is_abelian()) subs.push_back(std::move(h));
  }

  std::vector<std::uint64_t> codomain_factors;
  std::vector<std::vector<std::uint64_t>> images(r);
  for (const auto& A : subs) {
    if (A.size() < 4) continue;  // H^2 of 1, C2, C3 is trivial
    auto sub = subgroup_as_group(A);
    auto H2A = schur_multiplier_mod(sub.group, m, row_cap);
    if (H2A.presentation.trivial()) continue;
    const auto& fac = H2A.presentation.invariant_factors;

    // Column matrix [witnesses | boundary span]; class coordinates of a
    // restricted cocycle are the witness-column coefficients of any solution.
    const std::size_t amb = (A.size() - 1) * (A.size() - 1);
    const std::size_t w = fac.size(), bnd = H2A.boundary_span.size();
    ModMatrix S(m, amb, w + bnd);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t c = 0; c < amb; ++c)
        S.at(c, i) = H2A.presentation.witnesses[i][c];
    for (std::size_t i = 0; i < bnd; ++i)
      for (std::size_t c = 0; c < amb; ++c)
        S.at(c, w + i) = H2A.boundary_span[i][c] % m;
    auto solver = mod_snf(S, /*want_U=*/true);

    for (std::size_t k = 0; k < r; ++k) {
      auto rest = restrict_cocycle(M.witness(k), A);
      auto sol = solver.solve(rest.values);
      if (!sol) throw Error("restricted cocycle outside the expected span");
      for (std::size_t i = 0; i < w; ++i)
        images[k].push_back((*sol)[i] % fac[i]);
    }
    codomain_factors.insert(codomain_factors.end(), fac.begin(), fac.end());
  }

  PresentedAbelianGroup codomain;  // direct sum in listed order (no chain)
  codomain.generators = codomain_factors.size();
  codomain.invariant_factors = codomain_factors;

  auto ker = hom_kernel(M.presentation, codomain, images);
  // Convert coefficient witnesses over M's generators into cocycles.
  std::vector<std::vector<std::uint64_t>> cocycle_witnesses;
  const std::size_t amb = (g->order - 1) * (g->order - 1);
  for (const auto& coeff : ker.witnesses) {
    std::vector<std::uint64_t> w(amb, 0);
    for (std::size_t k = 0; k < r; ++k) {
      if (coeff[k] % m == 0) continue;
      for (std::size_t c = 0; c < amb; ++c)
        w[c] = (w[c] + coeff[k] % m * M.presentation.witnesses[k][c]) % m;
    }
    cocycle_witnesses.push_back(std::move(w));
  }
  ker.witnesses = std::move(cocycle_witnesses);
  ker.witness_modulus = m;
  return ker;
}

SylowVerdict b0_sylow_reduction(GroupPtr g, std::size_t cap,
                                std::size_t row_cap) {
  SylowVerdict v;
  v.zero = true;
  for (std::uint64_t p : prime_divisors(g->order)) {
    SylowVerdict::PerPrime row;
    row.p = p;
    auto s = sylow_subgroup(g, p);
    row.sylow_order = s.size();
    row.cyclic = s.is_cyclic();
    if (!row.cyclic) {
      auto sub = subgroup_as_group(s);
      row.b0_factors = b0(sub.group, B0Mode::bicyclic, cap, row_cap)
                           .invariant_factors;
      if (!row.b0_factors.empty()) v.zero = false;
    }
    v.primes.push_back(std::move(row));
  }
  return v;
}

}  // namespace bgm
