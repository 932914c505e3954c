#include "bgm/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "bgm/abelian.hpp"

namespace bgm {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  names[0] = "e";
  for (std::size_t i = 1; i < n; ++i) names[i] = "g" + std::to_string(i);
  return names;
}

}  // namespace

std::uint64_t Group::element_order(Elt a) const {
  std::uint64_t k = 1;
  Elt x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::uint64_t Group::exponent() const {
  std::uint64_t e = 1;
  for (Elt a = 0; a < order; ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool Group::is_abelian() const {
  for (Elt a = 0; a < order; ++a)
    for (Elt b = static_cast<Elt>(a + 1); b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::uint64_t Group::fingerprint() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(order);
  for (Elt v : mul_table) mix(v);
  return h;
}

void Group::validate() const {
  if (order == 0) throw Error("empty group");
  for (Elt a = 0; a < order; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error("index 0 is not an identity");
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) throw Error("bad inverse");
  }
  std::vector<bool> seen(order);
  for (Elt a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elt b = 0; b < order; ++b) {
      if (seen[mul(a, b)]) throw Error("row is not a permutation");
      seen[mul(a, b)] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (Elt b = 0; b < order; ++b) {
      if (seen[mul(b, a)]) throw Error("column is not a permutation");
      seen[mul(b, a)] = true;
    }
  }
  if (order <= 64) {
    for (Elt a = 0; a < order; ++a)
      for (Elt b = 0; b < order; ++b)
        for (Elt c = 0; c < order; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("multiplication is not associative");
  }
}

GroupPtr Group::from_table(std::size_t order,
                           const std::function<Elt(Elt, Elt)>& mul,
                           std::string origin, std::vector<std::string> names) {
  auto g = std::make_shared<Group>();
  g->order = order;
  g->mul_table.resize(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      g->mul_table[a * order + b] = mul(static_cast<Elt>(a), static_cast<Elt>(b));
  g->inv_table.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < order; ++b)
      if (g->mul_table[a * order + b] == 0) {
        g->inv_table[a] = static_cast<Elt>(b);
        found = true;
        break;
      }
    if (!found) throw Error("element without inverse");
  }
  g->element_names = names.empty() ? default_names(order) : std::move(names);
  g->origin = std::move(origin);
  return g;
}

// ---------------------------------------------------------------------------
// Constructors

GroupPtr from_permutations(const std::vector<std::vector<int>>& gens_in,
                           std::size_t cap) {
  if (gens_in.empty()) throw InvalidPermutation("no generators");
  const std::size_t degree = gens_in[0].size();
  for (const auto& g : gens_in) {
    if (g.size() != degree) throw InvalidPermutation("mixed degrees");
    std::vector<bool> hit(degree, false);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[v])
        throw InvalidPermutation("not a bijection");
      hit[v] = true;
    }
  }
  std::vector<std::vector<int>> gens = gens_in;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, Elt> index;
  std::vector<std::vector<int>> elts;
  elts.push_back(id);
  index[id] = 0;
  // BFS discovery order from the identity with sorted generator application.
  for (std::size_t head = 0; head < elts.size(); ++head) {
    std::vector<int> cur = elts[head];
    for (const auto& g : gens) {
      std::vector<int> nxt(degree);
      for (std::size_t i = 0; i < degree; ++i) nxt[i] = g[cur[i]];
      if (index.emplace(nxt, static_cast<Elt>(elts.size())).second) {
        elts.push_back(nxt);
        if (elts.size() > cap)
          throw CapExceeded("permutation closure exceeds cap");
      }
    }
  }
  const std::size_t n = elts.size();
  return Group::from_table(
      n,
      [&](Elt a, Elt b) {
        std::vector<int> c(degree);
        for (std::size_t i = 0; i < degree; ++i) c[i] = elts[b][elts[a][i]];
        return index.at(c);
      },
      "perm");
}

std::size_t wedge_dim(std::size_t d) { return d * (d - 1) / 2; }

std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t d) {
  // lexicographic over pairs i < j
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

GroupPtr from_central_data(std::uint32_t p, const GammaData& gamma,
                           std::size_t cap_order) {
  if (p < 3 || p % 2 == 0)
    throw EvenPrimeUnsupported(
        "p = 2 needs quadratic-form data; use explicit presentations");
  const std::size_t d = gamma.dim_u, e = gamma.dim_v;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d + e; ++i) {
    n *= p;
    if (n > cap_order) throw CapExceeded("central-data group exceeds cap");
  }
  const std::size_t w = wedge_dim(d);
  for (const auto& row : gamma.matrix)
    if (row.size() != w) throw Error("gamma matrix width mismatch");
  if (gamma.matrix.size() != e) throw Error("gamma matrix height mismatch");

  auto decode = [&](Elt x, std::vector<std::uint32_t>& u,
                    std::vector<std::uint32_t>& v) {
    std::uint64_t t = x;
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = t % p;
      t /= p;
    }
    for (std::size_t i = 0; i < e; ++i) {
      v[i] = t % p;
      t /= p;
    }
  };
  auto encode = [&](const std::vector<std::uint32_t>& u,
                    const std::vector<std::uint32_t>& v) {
    std::uint64_t t = 0;
    for (std::size_t i = e; i-- > 0;) t = t * p + v[i] % p;
    for (std::size_t i = d; i-- > 0;) t = t * p + u[i] % p;
    return static_cast<Elt>(t);
  };

  std::vector<std::uint32_t> u1(d), v1(e), u2(d), v2(e), u3(d), v3(e);
  return Group::from_table(
      n,
      [&](Elt a, Elt b) {
        decode(a, u1, v1);
        decode(b, u2, v2);
        for (std::size_t i = 0; i < d; ++i) u3[i] = (u1[i] + u2[i]) % p;
        for (std::size_t k = 0; k < e; ++k) v3[k] = (v1[k] + v2[k]) % p;
        // beta(e_i, e_j) = gamma(e_i ^ e_j) for i < j, zero otherwise.
        for (std::size_t i = 0; i < d; ++i) {
          if (!u1[i]) continue;
          for (std::size_t j = i + 1; j < d; ++j) {
            if (!u2[j]) continue;
            std::uint64_t c = static_cast<std::uint64_t>(u1[i]) * u2[j];
            std::size_t wi = wedge_index(i, j, d);
            for (std::size_t k = 0; k < e; ++k)
              v3[k] = (v3[k] + c % p * gamma.matrix[k][wi]) % p;
          }
        }
        return encode(u3, v3);
      },
      "central");
}

GroupPtr abelian_group(const std::vector<std::uint64_t>& orders) {
  std::uint64_t n = 1;
  for (std::uint64_t o : orders) {
    if (o == 0) throw InvalidSpec("zero cyclic factor");
    n *= o;
    if (n > 65535) throw CapExceeded("abelian group exceeds cap");
  }
  std::vector<std::uint64_t> radix = orders;
  if (radix.empty()) radix.push_back(1);
  return Group::from_table(
      n,
      [&](Elt a, Elt b) {
        std::uint64_t x = a, y = b, out = 0, mul = 1;
        for (std::uint64_t r : radix) {
          out += (x % r + y % r) % r * mul;
          mul *= r;
          x /= r;
          y /= r;
        }
        return static_cast<Elt>(out);
      },
      "abelian");
}

GroupPtr cyclic_group(std::uint64_t n) { return abelian_group({n}); }

namespace {

// Groups with normal form a^i b^j (i mod m, j mod 2, b a b^-1 = a^r,
// b^2 = a^s) cover dihedral, semidihedral, modular and dicyclic families.
GroupPtr two_step_group(std::uint64_t m, std::uint64_t r, std::uint64_t s,
                        std::string origin) {
  return Group::from_table(
      2 * m,
      [&](Elt x, Elt y) {
        std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
        // a^i b^j a^k b^l = a^(i + r^j k) b^(j+l), folding b^2 = a^s.
        std::uint64_t k2 = j ? k * r % m : k;
        std::uint64_t jj = j + l, ii = (i + k2) % m;
        if (jj == 2) {
          jj = 0;
          ii = (ii + s) % m;
        }
        return static_cast<Elt>(ii + m * jj);
      },
      std::move(origin));
}

bool power_of_two(std::uint64_t n) { return n && (n & (n - 1)) == 0; }

}  // namespace

GroupPtr dihedral_group(std::uint64_t order) {
  if (order < 4 || order % 2) throw InvalidSpec("dihedral order must be even, >= 4");
  std::uint64_t m = order / 2;
  return two_step_group(m, m - 1, 0, "dihedral");
}

GroupPtr quaternion_group(std::uint64_t order) {
  if (!power_of_two(order) || order < 8)
    throw InvalidSpec("quaternion order must be a power of 2, >= 8");
  std::uint64_t m = order / 2;
  return two_step_group(m, m - 1, m / 2, "quaternion");
}

GroupPtr dicyclic_group(std::uint64_t order) {
  if (order % 4 || order < 8) throw InvalidSpec("dicyclic order must be 4m, >= 8");
  std::uint64_t m = order / 2;
  return two_step_group(m, m - 1, m / 2, "dicyclic");
}

GroupPtr semidihedral_group(std::uint64_t order) {
  if (!power_of_two(order) || order < 16)
    throw InvalidSpec("semidihedral order must be a power of 2, >= 16");
  std::uint64_t m = order / 2;
  return two_step_group(m, m / 2 - 1, 0, "semidihedral");
}

GroupPtr modular_group(std::uint64_t order) {
  if (!power_of_two(order) || order < 16)
    throw InvalidSpec("modular order must be a power of 2, >= 16");
  std::uint64_t m = order / 2;
  return two_step_group(m, m / 2 + 1, 0, "modular");
}

GroupPtr symmetric_group(std::uint32_t n) {
  if (n == 0) throw InvalidSpec("sym:n needs n >= 1");
  if (n == 1) return cyclic_group(1);
  std::vector<int> t(n), c(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  for (std::uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return from_permutations({t, c});
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<Elt> members) {
  Subgroup s;
  s.parent = std::move(parent);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  s.members = std::move(members);
  s.mask.assign(s.parent->order, false);
  for (Elt e : s.members) s.mask[e] = true;
  if (s.members.empty() || s.members[0] != 0)
    throw Error("subgroup must contain the identity");
  for (Elt a : s.members)
    for (Elt b : s.members)
      if (!s.mask[s.parent->mul(a, b)]) throw Error("subgroup not closed");
  if (s.parent->order % s.members.size() != 0)
    throw Error("Lagrange violation");
  return s;
}

bool Subgroup::is_normal() const {
  for (Elt g = 0; g < parent->order; ++g)
    for (Elt h : members)
      if (!mask[parent->conj(h, g)]) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  for (Elt a : members)
    for (Elt b : members)
      if (parent->mul(a, b) != parent->mul(b, a)) return false;
  return true;
}

bool Subgroup::is_cyclic() const {
  for (Elt a : members)
    if (parent->element_order(a) == members.size()) return true;
  return false;
}

Subgroup closure(GroupPtr g, std::vector<Elt> seed) {
  std::vector<bool> in(g->order, false);
  std::vector<Elt> mem;
  auto add = [&](Elt e) {
    if (!in[e]) {
      in[e] = true;
      mem.push_back(e);
    }
  };
  add(0);
  for (Elt e : seed) add(e);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) {
      add(g->mul(mem[i], mem[j]));
      if (i == j) add(g->inv(mem[i]));
    }
  return Subgroup::from_members(std::move(g), std::move(mem));
}

Subgroup whole_group(GroupPtr g) {
  std::vector<Elt> all(g->order);
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::from_members(std::move(g), std::move(all));
}

Subgroup trivial_subgroup(GroupPtr g) {
  return Subgroup::from_members(std::move(g), {0});
}

Subgroup center(GroupPtr g) {
  std::vector<Elt> mem;
  for (Elt a = 0; a < g->order; ++a) {
    bool central = true;
    for (Elt b = 0; b < g->order && central; ++b)
      central = g->mul(a, b) == g->mul(b, a);
    if (central) mem.push_back(a);
  }
  return Subgroup::from_members(std::move(g), std::move(mem));
}

Subgroup derived_subgroup(GroupPtr g) {
  std::vector<Elt> comms;
  std::vector<bool> seen(g->order, false);
  for (Elt a = 0; a < g->order; ++a)
    for (Elt b = 0; b < g->order; ++b) {
      Elt c = g->commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return closure(std::move(g), std::move(comms));
}

bool is_p_group(GroupPtr g, std::uint64_t& p_out) {
  auto ps = prime_divisors(g->order);
  if (g->order == 1) {
    p_out = 0;
    return true;
  }
  if (ps.size() != 1) return false;
  p_out = ps[0];
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

Subgroup frattini_subgroup(GroupPtr g, std::size_t cap) {
  std::uint64_t p = 0;
  if (is_p_group(g, p) && g->order > 1) {
    // Phi(G) = G^p [G,G] for p-groups.
    std::vector<Elt> seed;
    for (Elt a = 0; a < g->order; ++a) {
      Elt x = a;
      for (std::uint64_t i = 1; i < p; ++i) x = g->mul(x, a);
      seed.push_back(x);
    }
    Subgroup der = derived_subgroup(g);
    seed.insert(seed.end(), der.members.begin(), der.members.end());
    return closure(std::move(g), std::move(seed));
  }
  auto subs = all_subgroups(g, cap);
  // Maximal proper subgroups.
  std::vector<const Subgroup*> maximal;
  for (const auto& h : subs) {
    if (h.size() == g->order) continue;
    bool max = true;
    for (const auto& k : subs) {
      if (k.size() == g->order || k.size() <= h.size() || &k == &h) continue;
      bool contains_h = true;
      for (Elt e : h.members)
        if (!k.mask[e]) {
          contains_h = false;
          break;
        }
      if (contains_h) {
        max = false;
        break;
      }
    }
    if (max) maximal.push_back(&h);
  }
  std::vector<Elt> mem;
  for (Elt e = 0; e < g->order; ++e) {
    bool in_all = true;
    for (const auto* h : maximal)
      if (!h->mask[e]) {
        in_all = false;
        break;
      }
    if (in_all) mem.push_back(e);
  }
  if (maximal.empty()) return whole_group(std::move(g));
  return Subgroup::from_members(std::move(g), std::move(mem));
}

Subgroup omega1(GroupPtr g, std::uint32_t p) {
  std::uint64_t q = 0;
  if (!is_p_group(g, q) || (g->order > 1 && q != p))
    throw NotPGroup("omega1 requires a p-group");
  std::vector<Elt> seed;
  for (Elt a = 0; a < g->order; ++a)
    if (g->element_order(a) <= p) seed.push_back(a);
  return closure(std::move(g), std::move(seed));
}

CharacteristicSubgroups characteristic_subgroups(GroupPtr g, std::size_t cap) {
  return {center(g), derived_subgroup(g), frattini_subgroup(g, cap)};
}

std::vector<std::vector<Elt>> conjugacy_classes(GroupPtr g) {
  std::vector<bool> seen(g->order, false);
  std::vector<std::vector<Elt>> classes;
  for (Elt a = 0; a < g->order; ++a) {
    if (seen[a]) continue;
    std::vector<Elt> cls;
    for (Elt x = 0; x < g->order; ++x) {
      Elt c = g->conj(a, x);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  // Minimal representative first; classes discovered in index order already.
  return classes;
}

std::vector<Subgroup> all_subgroups(GroupPtr g, std::size_t cap) {
  if (g->order > cap) throw CapExceeded("all_subgroups cap");
  std::set<std::vector<bool>> masks;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup s) {
    if (masks.insert(s.mask).second) subs.push_back(std::move(s));
  };
  add(trivial_subgroup(g));
  for (Elt a = 1; a < g->order; ++a) add(closure(g, {a}));
  // Layered closure: join pairs until fixpoint.
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Elt> seed = subs[i].members;
      seed.insert(seed.end(), subs[j].members.begin(), subs[j].members.end());
      add(closure(g, std::move(seed)));
    }
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return subs;
}

Subgroup sylow_subgroup(GroupPtr g, std::uint64_t p) {
  std::uint64_t pk = 1;
  while (g->order % (pk * p) == 0) pk *= p;
  Subgroup h = trivial_subgroup(g);
  while (h.size() < pk) {
    bool grown = false;
    for (Elt a = 1; a < g->order && !grown; ++a) {
      if (h.mask[a]) continue;
      std::uint64_t o = g->element_order(a);
      bool ppower = true;
      std::uint64_t t = o;
      while (t % p == 0) t /= p;
      ppower = t == 1;
      if (!ppower) continue;
      // a must normalize h
      bool normalizes = true;
      for (Elt m : h.members)
        if (!h.mask[g->conj(m, a)]) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<Elt> seed = h.members;
      seed.push_back(a);
      Subgroup k = closure(g, std::move(seed));
      std::uint64_t ko = k.size();
      while (ko % p == 0) ko /= p;
      if (ko == 1 && k.size() > h.size()) {
        h = std::move(k);
        grown = true;
      }
    }
    if (!grown) break;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Quotients and products

bool GroupHom::verify() const {
  if (images.size() != source->order) return false;
  if (images[0] != 0) return false;
  for (Elt a = 0; a < source->order; ++a)
    for (Elt b = 0; b < source->order; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b]))
        return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source->order != target->order) return false;
  std::vector<bool> hit(target->order, false);
  for (Elt v : images) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

QuotientResult quotient(GroupPtr g, const Subgroup& n) {
  if (!n.is_normal()) throw NotNormal("quotient by a non-normal subgroup");
  const std::size_t ord = g->order;
  std::vector<Elt> rep(ord);
  for (Elt x = 0; x < ord; ++x) {
    Elt best = x;
    for (Elt h : n.members) best = std::min(best, g->mul(x, h));
    rep[x] = best;
  }
  std::vector<Elt> reps;
  std::vector<int> idx(ord, -1);
  for (Elt x = 0; x < ord; ++x)
    if (rep[x] == x) {
      idx[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  auto q = Group::from_table(
      reps.size(),
      [&](Elt a, Elt b) {
        return static_cast<Elt>(idx[rep[g->mul(reps[a], reps[b])]]);
      },
      "quotient");
  GroupHom proj{g, q, {}};
  proj.images.resize(ord);
  for (Elt x = 0; x < ord; ++x) proj.images[x] = static_cast<Elt>(idx[rep[x]]);
  return {q, std::move(proj), std::move(reps)};
}

SubgroupAsGroup subgroup_as_group(const Subgroup& s) {
  const auto& p = *s.parent;
  std::vector<int> from_parent(p.order, -1);
  for (std::size_t i = 0; i < s.members.size(); ++i)
    from_parent[s.members[i]] = static_cast<int>(i);
  auto g = Group::from_table(
      s.members.size(),
      [&](Elt a, Elt b) {
        return static_cast<Elt>(from_parent[p.mul(s.members[a], s.members[b])]);
      },
      "subgroup");
  return {g, s.members, std::move(from_parent)};
}

GroupPtr direct_product(GroupPtr a, GroupPtr b, std::size_t cap) {
  if (a->order * b->order > cap) throw CapExceeded("direct product exceeds cap");
  const std::size_t nb = b->order;
  return Group::from_table(
      a->order * b->order,
      [&](Elt x, Elt y) {
        return static_cast<Elt>(a->mul(x / nb, y / nb) * nb +
                                b->mul(x % nb, y % nb));
      },
      "product");
}

GroupPtr central_product(GroupPtr a, GroupPtr b, const Subgroup& za,
                         const Subgroup& zb, const std::vector<Elt>& ident) {
  if (za.parent.get() != a.get() || zb.parent.get() != b.get())
    throw Error("subgroup parents mismatch");
  Subgroup ca = center(a), cb = center(b);
  for (Elt e : za.members)
    if (!ca.mask[e]) throw NotCentral("za is not central");
  for (Elt e : zb.members)
    if (!cb.mask[e]) throw NotCentral("zb is not central");
  if (ident.size() != za.size() || za.size() != zb.size())
    throw NotIso("identification size mismatch");
  // ident[i] is the image of za.members[i]; verify it is an isomorphism.
  std::vector<int> ia(a->order, -1);
  for (std::size_t i = 0; i < za.members.size(); ++i) ia[za.members[i]] = i;
  std::vector<bool> hit(b->order, false);
  std::vector<int> ident_inv(b->order, -1);  // zb element -> za element
  for (std::size_t i = 0; i < za.members.size(); ++i) {
    Elt y = ident[i];
    if (!zb.mask[y] || hit[y]) throw NotIso("identification is not a bijection");
    hit[y] = true;
    ident_inv[y] = za.members[i];
  }
  for (Elt x : za.members)
    for (Elt y : za.members) {
      Elt xy = a->mul(x, y);
      if (b->mul(ident[ia[x]], ident[ia[y]]) != ident[ia[xy]])
        throw NotIso("identification is not a homomorphism");
    }

  // Transversal of zb in b: minimal-index coset representatives.
  std::vector<Elt> brep(b->order);
  for (Elt x = 0; x < b->order; ++x) {
    Elt best = x;
    for (Elt h : zb.members) best = std::min(best, b->mul(x, h));
    brep[x] = best;
  }
  std::vector<Elt> reps;
  std::vector<int> repidx(b->order, -1);
  for (Elt x = 0; x < b->order; ++x)
    if (brep[x] == x) {
      repidx[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  const std::size_t nr = reps.size();
  // normalize (x, y) to (x * ident^-1(w), r) where y = r w, w in zb.
  auto normalize = [&](Elt x, Elt y) {
    Elt r = brep[y];
    Elt w = b->mul(b->inv(r), y);
    Elt x2 = a->mul(x, ident_inv[w]);
    return static_cast<Elt>(x2 * nr + repidx[r]);
  };
  return Group::from_table(
      a->order * nr,
      [&](Elt u, Elt v) {
        Elt x1 = u / nr, x2 = v / nr;
        Elt r1 = reps[u % nr], r2 = reps[v % nr];
        return normalize(a->mul(x1, x2), b->mul(r1, r2));
      },
      "centralproduct");
}

// ---------------------------------------------------------------------------
// Generating sets and isomorphism search

std::vector<Elt> generating_set(GroupPtr g, std::size_t max_size) {
  auto classes = conjugacy_classes(g);
  std::vector<std::size_t> class_size(g->order);
  for (const auto& c : classes)
    for (Elt e : c) class_size[e] = c.size();
  std::vector<Elt> order_pref(g->order);
  std::iota(order_pref.begin(), order_pref.end(), 0);
  std::sort(order_pref.begin(), order_pref.end(), [&](Elt x, Elt y) {
    if (class_size[x] != class_size[y]) return class_size[x] < class_size[y];
    return x < y;
  });
  std::vector<Elt> gens;
  Subgroup cur = trivial_subgroup(g);
  for (Elt cand : order_pref) {
    if (cur.size() == g->order) break;
    if (cur.mask[cand]) continue;
    std::vector<Elt> seed = cur.members;
    seed.push_back(cand);
    Subgroup nxt = closure(g, std::move(seed));
    if (nxt.size() > cur.size()) {
      gens.push_back(cand);
      cur = std::move(nxt);
    }
  }
  // Drop redundant generators (greedy can pick central elements first).
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Elt> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (closure(g, rest).size() == g->order) gens.erase(gens.begin() + i);
  }
  if (max_size && gens.size() > max_size)
    throw GeneratorSearchFailed("no generating set within the size bound");
  return gens;
}

namespace {

struct IsoSearch {
  const Group& A;
  const Group& B;
  std::vector<Elt> gens;
  std::vector<std::vector<Elt>> candidates;
  std::vector<int> img;
  std::vector<bool> used;
  std::vector<Elt> mapped;  // a-elements with assigned images, in order
  const std::function<bool(const GroupHom&)>& fn;
  GroupPtr aptr, bptr;
  bool done = false;

  bool assign(Elt x, Elt y, std::size_t trail_mark, std::vector<Elt>& trail) {
    std::vector<std::pair<Elt, Elt>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (img[u] >= 0) {
        if (img[u] != v) return false;
        continue;
      }
      if (used[v]) return false;
      img[u] = v;
      used[v] = true;
      trail.push_back(u);
      std::size_t count = mapped.size();
      mapped.push_back(u);
      for (std::size_t i = 0; i <= count; ++i) {
        Elt m = mapped[i];
        queue.push_back({A.mul(u, m), B.mul(v, img[m])});
        queue.push_back({A.mul(m, u), B.mul(img[m], v)});
      }
    }
    (void)trail_mark;
    return true;
  }

  void undo(std::size_t trail_mark, std::vector<Elt>& trail) {
    while (trail.size() > trail_mark) {
      Elt u = trail.back();
      trail.pop_back();
      used[img[u]] = false;
      img[u] = -1;
      mapped.pop_back();
    }
  }

  void search(std::size_t level, std::vector<Elt>& trail) {
    if (done) return;
    if (level == gens.size()) {
      if (mapped.size() != A.order) return;
      GroupHom h{aptr, bptr, {}};
      h.images.resize(A.order);
      for (std::size_t i = 0; i < A.order; ++i) h.images[i] = img[i];
      if (fn(h)) done = true;
      return;
    }
    for (Elt cand : candidates[level]) {
      std::size_t mark = trail.size();
      if (assign(gens[level], cand, mark, trail)) search(level + 1, trail);
      undo(mark, trail);
      if (done) return;
    }
  }
};

}  // namespace

bool for_each_isomorphism(GroupPtr a, GroupPtr b,
                          const std::function<bool(const GroupHom&)>& fn) {
  if (a->order != b->order) return false;
  auto gens = generating_set(a);
  auto classesA = conjugacy_classes(a), classesB = conjugacy_classes(b);
  std::vector<std::size_t> csA(a->order), csB(b->order);
  for (const auto& c : classesA)
    for (Elt e : c) csA[e] = c.size();
  for (const auto& c : classesB)
    for (Elt e : c) csB[e] = c.size();
  std::vector<std::uint64_t> ordA(a->order), ordB(b->order);
  for (Elt e = 0; e < a->order; ++e) ordA[e] = a->element_order(e);
  for (Elt e = 0; e < b->order; ++e) ordB[e] = b->element_order(e);

  std::vector<std::vector<Elt>> candidates;
  for (Elt g : gens) {
    std::vector<Elt> c;
    for (Elt y = 0; y < b->order; ++y)
      if (ordB[y] == ordA[g] && csB[y] == csA[g]) c.push_back(y);
    if (c.empty()) return false;
    candidates.push_back(std::move(c));
  }

  IsoSearch s{*a, *b,      gens, std::move(candidates), std::vector<int>(a->order, -1),
              std::vector<bool>(b->order, false), {}, fn, a, b};
  s.mapped.reserve(a->order);
  std::vector<Elt> trail;
  trail.reserve(a->order);
  // The identity maps to the identity.
  s.assign(0, 0, 0, trail);
  s.search(0, trail);
  return s.done;
}

std::optional<GroupHom> is_isomorphic(GroupPtr a, GroupPtr b, std::size_t cap) {
  if (a->order > cap || b->order > cap) throw CapExceeded("isomorphism cap");
  if (a->order != b->order) return std::nullopt;
  // Cheap fingerprints: element-order and class-size multisets.
  auto fp = [](GroupPtr g) {
    std::vector<std::pair<std::uint64_t, std::size_t>> f;
    auto classes = conjugacy_classes(g);
    std::vector<std::size_t> cs(g->order);
    for (const auto& c : classes)
      for (Elt e : c) cs[e] = c.size();
    for (Elt e = 0; e < g->order; ++e) f.push_back({g->element_order(e), cs[e]});
    std::sort(f.begin(), f.end());
    return f;
  };
  if (fp(a) != fp(b)) return std::nullopt;
  std::optional<GroupHom> found;
  for_each_isomorphism(a, b, [&](const GroupHom& h) {
    found = h;
    return true;
  });
  return found;
}

std::vector<std::uint64_t> abelian_invariants(GroupPtr g) {
  GroupPtr ab = g;
  if (!g->is_abelian()) ab = quotient(g, derived_subgroup(g)).group;
  // Counting elements of order dividing p^k yields the p-part partition.
  std::vector<std::uint64_t> cyclic_orders;
  for (std::uint64_t p : prime_divisors(ab->order)) {
    std::uint64_t prev_log = 0, pk = 1;
    std::vector<std::uint64_t> factors_ge;  // count of factors with exponent >= k
    for (std::uint64_t k = 1;; ++k) {
      pk *= p;
      std::uint64_t cnt = 0;
      for (Elt e = 0; e < ab->order; ++e) {
        std::uint64_t o = ab->element_order(e);
        if (pk % o == 0) ++cnt;
      }
      std::uint64_t lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      if (lg == prev_log) break;
      factors_ge.push_back(lg - prev_log);
      prev_log = lg;
    }
    // factors_ge[k-1] = number of cyclic p-factors with exponent >= k.
    for (std::size_t k = 0; k < factors_ge.size(); ++k) {
      std::uint64_t next = (k + 1 < factors_ge.size()) ? factors_ge[k + 1] : 0;
      std::uint64_t cnt = factors_ge[k] - next;
      std::uint64_t val = 1;
      for (std::size_t e = 0; e <= k; ++e) val *= p;
      for (std::uint64_t i = 0; i < cnt; ++i) cyclic_orders.push_back(val);
    }
  }
  return invariant_factor_normal_form(cyclic_orders);
}

}  // namespace bgm
