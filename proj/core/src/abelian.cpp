#include "bgm/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace bgm {

PresentedAbelianGroup PresentedAbelianGroup::from_relations(
    std::size_t generators, const IntMatrix& relations) {
  if (relations.cols() != generators)
    throw Error("relation width does not match generator count");
  PresentedAbelianGroup g;
  g.generators = generators;
  g.relations = relations;
  SnfDecomposition s = snf(relations);
  for (std::size_t i = 0; i < generators; ++i) {
    BigInt d = (i < std::min(relations.rows(), relations.cols()))
                   ? s.D.at(i, i)
                   : BigInt(0);
    if (d == 0)
      throw InfiniteQuotient("presented group is infinite (zero invariant factor)");
    if (d != 1) g.invariant_factors.push_back(d.convert_to<std::uint64_t>());
  }
  std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
  return g;
}

PresentedAbelianGroup PresentedAbelianGroup::from_invariant_factors(
    std::vector<std::uint64_t> factors,
    std::vector<std::vector<std::uint64_t>> witnesses,
    std::uint64_t witness_modulus) {
  PresentedAbelianGroup g;
  for (std::uint64_t f : factors) {
    if (f == 0) throw InfiniteQuotient("zero invariant factor");
    if (f == 1) throw Error("invariant factor 1 must be stripped");
  }
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i + 1] % factors[i] != 0)
      throw Error("invariant factors must form a divisibility chain");
  g.generators = factors.size();
  g.invariant_factors = std::move(factors);
  std::vector<BigInt> d(g.invariant_factors.begin(), g.invariant_factors.end());
  g.relations = IntMatrix::diagonal(d);
  g.witnesses = std::move(witnesses);
  g.witness_modulus = witness_modulus;
  return g;
}

std::uint64_t PresentedAbelianGroup::order() const {
  std::uint64_t o = 1;
  for (std::uint64_t f : invariant_factors) o *= f;
  return o;
}

PresentedAbelianGroup quotient_invariants(
    const std::vector<std::vector<std::uint64_t>>& span_gens,
    const std::vector<std::vector<std::uint64_t>>& sub_gens, std::size_t ambient,
    std::uint64_t m) {
  const std::size_t s = span_gens.size(), t = sub_gens.size();

  // Membership of each sub generator in the span.
  {
    ModMatrix S(m, ambient, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t c = 0; c < ambient; ++c) S.at(c, i) = span_gens[i][c] % m;
    ModSnf snfS = mod_snf(S, /*want_U=*/true);
    for (const auto& g : sub_gens) {
      std::vector<std::uint64_t> b(ambient);
      for (std::size_t c = 0; c < ambient; ++c) b[c] = g[c] % m;
      if (!snfS.solve(b))
        throw MembershipError("sub generator outside the span");
    }
  }
  if (s == 0) return PresentedAbelianGroup::from_invariant_factors({}, {}, m);

  // Relation module of the presentation on the span generators:
  // {x : x*S is in <sub> + m Z^ambient}, found as the x-block of the kernel
  // of the stacked columns [S | T].
  ModMatrix M(m, ambient, s + t);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t c = 0; c < ambient; ++c) M.at(c, i) = span_gens[i][c] % m;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t c = 0; c < ambient; ++c)
      M.at(c, s + i) = sub_gens[i][c] % m;
  auto ker = mod_snf(M, /*want_U=*/false).kernel();

  ModMatrix R(m, ker.size(), s);
  for (std::size_t r = 0; r < ker.size(); ++r)
    for (std::size_t i = 0; i < s; ++i) R.at(r, i) = ker[r][i];
  ModSnf rel = mod_snf(R, /*want_U=*/false);

  std::vector<std::uint64_t> factors;
  std::vector<std::vector<std::uint64_t>> witnesses;
  for (std::size_t i = 0; i < s; ++i) {
    std::uint64_t d = (i < rel.diag.size() && rel.diag[i] != 0) ? rel.diag[i] : m;
    if (d == 1) continue;
    factors.push_back(d);
    // Generator i of the transformed presentation is sum_j Vinv[i][j] * g_j.
    std::vector<std::uint64_t> w(ambient, 0);
    for (std::size_t j = 0; j < s; ++j) {
      std::uint64_t coef = rel.Vinv.at(i, j);
      if (coef == 0) continue;
      for (std::size_t c = 0; c < ambient; ++c)
        w[c] = (w[c] + coef * span_gens[j][c]) % m;
    }
    witnesses.push_back(std::move(w));
  }
  return PresentedAbelianGroup::from_invariant_factors(factors, witnesses, m);
}

PresentedAbelianGroup hom_kernel(
    const PresentedAbelianGroup& domain, const PresentedAbelianGroup& codomain,
    const std::vector<std::vector<std::uint64_t>>& images) {
  const std::size_t s = domain.invariant_factors.size();
  const std::size_t q = codomain.invariant_factors.size();
  if (images.size() != s) throw Error("hom_kernel: one image per domain generator");
  std::uint64_t m = 1;
  for (std::uint64_t d : domain.invariant_factors) m = std::lcm(m, d);
  for (std::uint64_t e : codomain.invariant_factors) m = std::lcm(m, e);

  // A relator d_i * g_i must map to zero in the codomain.
  for (std::size_t i = 0; i < s; ++i) {
    if (images[i].size() != q) throw Error("hom_kernel: image width mismatch");
    for (std::size_t j = 0; j < q; ++j) {
      std::uint64_t e = codomain.invariant_factors[j];
      if (domain.invariant_factors[i] % e == 0) continue;
      if (domain.invariant_factors[i] * (images[i][j] % e) % e != 0)
        throw IllFormedHom("relator maps to a nontrivial element");
    }
  }
  if (s == 0) return PresentedAbelianGroup::from_invariant_factors({}, {}, m);

  // x is in the kernel iff sum_i x_i F_ij = 0 mod e_j for every j.
  ModMatrix B(m, q, s);
  for (std::size_t j = 0; j < q; ++j) {
    std::uint64_t scale = m / codomain.invariant_factors[j];
    for (std::size_t i = 0; i < s; ++i)
      B.at(j, i) = scale % m * (images[i][j] % m) % m;
  }
  auto sol = mod_snf(B, /*want_U=*/false).kernel();

  std::vector<std::vector<std::uint64_t>> span = sol, sub;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::uint64_t> r(s, 0);
    r[i] = domain.invariant_factors[i] % m;
    sub.push_back(r);
    span.push_back(std::move(r));
  }
  return quotient_invariants(span, sub, s, m);
}

std::vector<std::uint64_t> invariant_factor_normal_form(
    std::vector<std::uint64_t> cyclic_orders) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> exps;
  for (std::uint64_t n : cyclic_orders) {
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      std::uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      exps[p].push_back(e);
    }
    if (n > 1) exps[n].push_back(1);
  }
  std::size_t k = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.rbegin(), es.rend());
    k = std::max(k, es.size());
  }
  std::vector<std::uint64_t> factors(k, 1);
  for (auto& [p, es] : exps)
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::uint64_t pw = 1;
      for (std::uint32_t e = 0; e < es[i]; ++e) pw *= p;
      factors[i] *= pw;  // largest factor first
    }
  std::reverse(factors.begin(), factors.end());
  factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());
  return factors;
}

}  // namespace bgm
