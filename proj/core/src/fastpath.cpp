#include "bgm/fastpath.hpp"

#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace bgm {
namespace {

/// Coordinates of every element of an elementary abelian subgroup with
/// respect to a greedily chosen basis.  Returns the basis; fills `coords`
/// (parent index -> coordinate vector of final length).
std::vector<Elt> elementary_coordinates(const Group& g,
                                        const std::vector<Elt>& members,
                                        std::uint32_t p,
                                        std::map<Elt, FpVec>& coords) {
  std::vector<Elt> basis;
  coords.clear();
  coords[0] = {};
  for (Elt v : members) {
    if (coords.count(v)) continue;
    basis.push_back(v);
    std::map<Elt, FpVec> next = coords;
    for (const auto& [x, c] : coords) {
      Elt cur = x;
      for (std::uint32_t k = 1; k < p; ++k) {
        cur = g.mul(cur, v);
        FpVec cc = c;
        cc.push_back(k);
        next.emplace(cur, std::move(cc));
      }
    }
    coords = std::move(next);
  }
  for (auto& [x, c] : coords) c.resize(basis.size(), 0);
  return basis;
}

bool elementary_abelian(const Group& g, const std::vector<Elt>& members,
                        std::uint32_t p) {
  for (Elt a : members) {
    if (a != 0 && g.element_order(a) != p) return false;
    for (Elt b : members)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  }
  return true;
}

std::size_t fp_rank(std::uint32_t p, std::size_t dim,
                    const std::vector<FpVec>& rows) {
  return FpSubspace::span(p, dim, rows).dim();
}

}  // namespace

GammaData gamma_from_group(GroupPtr g) {
  return gamma_from_group(g, frattini_subgroup(g));
}

GammaData gamma_from_group(GroupPtr g, const Subgroup& v) {
  std::uint64_t p64 = 0;
  if (!is_p_group(g, p64)) throw NotApplicable("gamma: not a p-group");
  if (p64 == 2)
    throw EvenPrimeUnsupported("gamma: p = 2 is outside the fast path");
  const auto p = static_cast<std::uint32_t>(p64);
  if (v.parent != g) throw NotSubgroup("gamma: V has a different parent");

  for (Elt z : v.members)
    for (Elt x = 0; x < g->order; ++x)
      if (g->mul(z, x) != g->mul(x, z))
        throw NotApplicable("gamma: V is not central");
  if (!elementary_abelian(*g, v.members, p))
    throw NotApplicable("gamma: V is not elementary abelian");
  for (Elt d : derived_subgroup(g).members)
    if (!v.contains(d))
      throw NotApplicable("gamma: commutators do not land in V");

  auto q = quotient(g, v);
  if (!elementary_abelian(*q.group,
                          [&] {
                            std::vector<Elt> all(q.group->order);
                            for (std::size_t i = 0; i < all.size(); ++i)
                              all[i] = static_cast<Elt>(i);
                            return all;
                          }(),
                          p))
    throw NotApplicable("gamma: G/V is not elementary abelian");

  std::map<Elt, FpVec> vcoords;
  auto vbasis = elementary_coordinates(*g, v.members, p, vcoords);
  std::map<Elt, FpVec> ucoords;
  std::vector<Elt> qall(q.group->order);
  for (std::size_t i = 0; i < qall.size(); ++i) qall[i] = static_cast<Elt>(i);
  auto ubasis = elementary_coordinates(*q.group, qall, p, ucoords);

  GammaData gamma;
  gamma.p = p;
  gamma.dim_u = ubasis.size();
  gamma.dim_v = vbasis.size();
  const std::size_t w = wedge_dim(gamma.dim_u);
  gamma.matrix.assign(gamma.dim_v, FpVec(w, 0));
  for (std::size_t i = 0; i < ubasis.size(); ++i)
    for (std::size_t j = i + 1; j < ubasis.size(); ++j) {
      Elt ui = q.section[ubasis[i]], uj = q.section[ubasis[j]];
      Elt c = g->commutator(ui, uj);
      if (!v.contains(c)) throw NotApplicable("gamma: commutator escapes V");
      // Representative independence: shifting either argument by a central
      // element leaves the commutator unchanged, so spot-check one shift.
      if (!v.members.empty()) {
        Elt z = v.members.back();
        if (g->commutator(g->mul(ui, z), uj) != c)
          throw Error("gamma: commutator depends on coset representative");
      }
      const FpVec& cc = vcoords.at(c);
      for (std::size_t r = 0; r < gamma.dim_v; ++r)
        gamma.matrix[r][wedge_index(i, j, gamma.dim_u)] = cc[r];
    }

  // Surjectivity of gamma onto V, i.e. [G,G] = V: the transpose must have
  // full rank dim_v.
  std::vector<FpVec> cols(w, FpVec(gamma.dim_v, 0));
  for (std::size_t r = 0; r < gamma.dim_v; ++r)
    for (std::size_t c = 0; c < w; ++c) cols[c][r] = gamma.matrix[r][c];
  if (fp_rank(p, gamma.dim_v, cols) != gamma.dim_v)
    throw NotApplicable("gamma: not surjective onto V");
  return gamma;
}

FpVec wedge_product(std::uint32_t p, const FpVec& u, const FpVec& v) {
  if (u.size() != v.size()) throw Error("wedge_product: dimension mismatch");
  const std::size_t d = u.size();
  FpVec out(wedge_dim(d), 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::uint64_t pos = static_cast<std::uint64_t>(u[i]) * v[j] % p;
      std::uint64_t neg = static_cast<std::uint64_t>(u[j]) * v[i] % p;
      out[wedge_index(i, j, d)] =
          static_cast<std::uint32_t>((pos + p - neg) % p);
    }
  return out;
}

void two_dim_subspaces(std::uint32_t p, std::size_t d,
                       const std::function<void(const FpSubspace&)>& fn) {
  if (d < 2) throw Error("two_dim_subspaces: need dimension at least 2");
  for_each_subspace(p, d, 2, fn);
}

FastpathCertificate b0_fastpath(const GammaData& gamma) {
  const std::uint32_t p = gamma.p;
  const std::size_t d = gamma.dim_u;
  const std::size_t w = wedge_dim(d);
  FastpathCertificate cert;
  cert.k2 = FpSubspace::span(p, w, gamma.matrix);
  cert.s2 = fp_orthogonal(cert.k2);

  std::vector<FpVec> dec;
  if (d >= 2)
    two_dim_subspaces(p, d, [&](const FpSubspace& sub) {
      FpVec wv = wedge_product(p, sub.basis[0], sub.basis[1]);
      if (cert.s2.contains(wv)) dec.push_back(std::move(wv));
    });
  cert.s2_dec = FpSubspace::span(p, w, dec);
  cert.k2_max = fp_orthogonal(cert.s2_dec);
  if (!cert.s2.contains(cert.s2_dec) || !cert.k2_max.contains(cert.k2) ||
      cert.k2.dim() + cert.s2.dim() != w)
    throw Error("b0_fastpath: certificate chain violated");
  cert.b0_dim = cert.k2_max.dim() - cert.k2.dim();
  return cert;
}

std::optional<GammaSearchHit> search_nonzero(std::uint32_t p, std::size_t dim_u,
                                             std::size_t dim_v,
                                             std::uint64_t budget) {
  if (p == 2) throw EvenPrimeUnsupported("search_nonzero: p = 2 unsupported");
  const std::size_t w = wedge_dim(dim_u);
  std::mt19937 rng(0x6B0'0000u ^ (p * 1000003u) ^
                   static_cast<std::uint32_t>(dim_u * 257 + dim_v));
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  for (std::uint64_t t = 0; t < budget; ++t) {
    GammaData gamma;
    gamma.p = p;
    gamma.dim_u = dim_u;
    gamma.dim_v = dim_v;
    gamma.matrix.assign(dim_v, FpVec(w, 0));
    for (auto& row : gamma.matrix)
      for (auto& x : row) x = coef(rng);
    if (fp_rank(p, w, gamma.matrix) != dim_v) continue;  // not surjective
    auto cert = b0_fastpath(gamma);
    if (cert.b0_dim >= 1)
      return GammaSearchHit{std::move(gamma), std::move(cert), t + 1};
  }
  return std::nullopt;
}

std::string gamma_to_json(const GammaData& gamma) {
  nlohmann::json j;
  j["p"] = gamma.p;
  j["dimU"] = gamma.dim_u;
  j["dimV"] = gamma.dim_v;
  j["matrix"] = gamma.matrix;
  return j.dump();
}

GammaData gamma_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GammaData gamma;
  gamma.p = j.at("p").get<std::uint32_t>();
  gamma.dim_u = j.at("dimU").get<std::size_t>();
  gamma.dim_v = j.at("dimV").get<std::size_t>();
  gamma.matrix = j.at("matrix").get<std::vector<FpVec>>();
  if (gamma.matrix.size() != gamma.dim_v)
    throw InvalidSpec("gamma json: matrix row count mismatch");
  for (const auto& row : gamma.matrix)
    if (row.size() != wedge_dim(gamma.dim_u))
      throw InvalidSpec("gamma json: matrix column count mismatch");
  return gamma;
}

}  // namespace bgm
