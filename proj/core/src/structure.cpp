#include "bgm/structure.hpp"

#include <algorithm>

namespace bgm {
namespace {

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elt> members;
  for (Elt e : a.members)
    if (b.contains(e)) members.push_back(e);
  return Subgroup::from_members(a.parent, std::move(members));
}

bool centralize(const Group& g, const Subgroup& a, const Subgroup& b) {
  for (Elt x : a.members)
    for (Elt y : b.members)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

}  // namespace

DedekindResult is_dedekind(GroupPtr g, std::size_t cap) {
  auto subs = all_subgroups(g, cap);
  DedekindResult res;
  res.dedekind =
      std::all_of(subs.begin(), subs.end(),
                  [](const Subgroup& s) { return s.is_normal(); });
  if (!res.dedekind || g->is_abelian()) return res;

  // Corroboration: nonabelian Dedekind groups decompose as Q8 x A with A
  // abelian containing no element of order 4.
  auto q8 = quaternion_group(8);
  bool found = false;
  for (const auto& q : subs) {
    if (q.size() != 8 || found) continue;
    if (!is_isomorphic(subgroup_as_group(q).group, q8)) continue;
    for (const auto& a : subs) {
      if (a.size() * 8 != g->order || !a.is_abelian()) continue;
      if (intersect(q, a).size() != 1) continue;
      if (!centralize(*g, q, a)) continue;
      bool order4 = false;
      for (Elt e : a.members)
        if (g->element_order(e) == 4) order4 = true;
      if (!order4) {
        found = true;
        break;
      }
    }
  }
  res.classification_warning = !found;
  return res;
}

BlackburnVerdict is_blackburn(GroupPtr g, std::size_t cap) {
  auto subs = all_subgroups(g, cap);
  std::vector<const Subgroup*> nonnormal;
  for (const auto& s : subs)
    if (!s.is_normal()) nonnormal.push_back(&s);
  BlackburnVerdict v;
  if (nonnormal.empty()) {
    v.kind = BlackburnKind::dedekind;
    v.intersection = whole_group(g);
    return v;
  }
  std::sort(nonnormal.begin(), nonnormal.end(),
            [](const Subgroup* a, const Subgroup* b) {
              if (a->size() != b->size()) return a->size() < b->size();
              return a->members < b->members;
            });
  v.intersection = *nonnormal.front();
  for (std::size_t i = 1; i < nonnormal.size() && v.intersection.size() > 1;
       ++i)
    v.intersection = intersect(v.intersection, *nonnormal[i]);
  v.kind = v.intersection.size() > 1 ? BlackburnKind::blackburn
                                     : BlackburnKind::neither;
  return v;
}

std::optional<AbelianByCyclicWitness> is_abelian_by_cyclic(GroupPtr g,
                                                           std::size_t cap) {
  for (const auto& n : all_subgroups(g, cap)) {
    if (!n.is_abelian() || !n.is_normal()) continue;
    auto q = quotient(g, n);
    for (Elt x = 0; x < q.group->order; ++x)
      if (q.group->element_order(x) == q.group->order)
        return AbelianByCyclicWitness{n, q.section[x]};
  }
  return std::nullopt;
}

bool has_cyclic_of_index(GroupPtr g, std::uint64_t pk) {
  std::uint64_t p = 0;
  if (!is_p_group(g, p)) throw NotPGroup("has_cyclic_of_index: not a p-group");
  std::uint64_t best = 1;
  for (Elt e = 0; e < g->order; ++e) best = std::max(best, g->element_order(e));
  return best * pk >= g->order;
}

bool is_extraspecial(GroupPtr g) {
  std::uint64_t p = 0;
  if (!is_p_group(g, p)) throw NotPGroup("is_extraspecial: not a p-group");
  if (g->is_abelian()) return false;
  auto ch = characteristic_subgroups(g);
  return ch.center.size() == p && ch.derived.mask == ch.center.mask &&
         ch.frattini.mask == ch.center.mask;
}

bool is_almost_extraspecial(GroupPtr g) {
  std::uint64_t p = 0;
  if (!is_p_group(g, p))
    throw NotPGroup("is_almost_extraspecial: not a p-group");
  if (g->is_abelian()) return false;
  auto ch = characteristic_subgroups(g);
  return ch.center.size() == p * p && ch.center.is_cyclic() &&
         ch.derived.size() == p && ch.frattini.mask == ch.derived.mask;
}

namespace {

/// Attempts the forced derived-subgroup isomorphism for a given alpha:
/// beta([x,y]) := [x',y'] on commutators, extended multiplicatively.
std::optional<GroupHom> forced_beta(GroupPtr g1, GroupPtr g2,
                                    const QuotientResult& q1,
                                    const QuotientResult& q2,
                                    const GroupHom& alpha,
                                    const SubgroupAsGroup& d1,
                                    const SubgroupAsGroup& d2) {
  std::vector<int> img(g1->order, -1);
  std::vector<bool> used(g2->order, false);
  std::vector<Elt> assigned;
  auto add = [&](Elt c, Elt c2) -> bool {
    std::vector<std::pair<Elt, Elt>> queue{{c, c2}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (img[u] >= 0) {
        if (img[u] != static_cast<int>(v)) return false;
        continue;
      }
      if (used[v]) return false;
      img[u] = v;
      used[v] = true;
      std::size_t count = assigned.size();
      assigned.push_back(u);
      for (std::size_t i = 0; i <= count; ++i) {
        Elt m = assigned[i];
        queue.push_back({g1->mul(u, m), g2->mul(v, img[m])});
        queue.push_back({g1->mul(m, u), g2->mul(img[m], v)});
      }
    }
    return true;
  };
  for (Elt qa = 0; qa < q1.group->order; ++qa)
    for (Elt qb = 0; qb < q1.group->order; ++qb) {
      Elt c = g1->commutator(q1.section[qa], q1.section[qb]);
      Elt c2 = g2->commutator(q2.section[alpha.images[qa]],
                              q2.section[alpha.images[qb]]);
      if (!add(c, c2)) return std::nullopt;
    }
  // Totality and containment checks on the derived subgroups.
  if (assigned.size() != d1.group->order) return std::nullopt;
  GroupHom beta{d1.group, d2.group, {}};
  beta.images.resize(d1.group->order);
  for (std::size_t i = 0; i < d1.group->order; ++i) {
    int v = img[d1.to_parent[i]];
    if (v < 0 || d2.from_parent[v] < 0) return std::nullopt;
    beta.images[i] = static_cast<Elt>(d2.from_parent[v]);
  }
  if (!beta.verify() || !beta.is_bijective()) return std::nullopt;
  return beta;
}

}  // namespace

std::optional<IsoclinismWitness> isoclinic(GroupPtr g1, GroupPtr g2) {
  auto z1 = center(g1), z2 = center(g2);
  auto d1s = derived_subgroup(g1), d2s = derived_subgroup(g2);
  if (g1->order / z1.size() != g2->order / z2.size()) return std::nullopt;
  if (d1s.size() != d2s.size()) return std::nullopt;
  auto q1 = quotient(g1, z1), q2 = quotient(g2, z2);
  auto d1 = subgroup_as_group(d1s), d2 = subgroup_as_group(d2s);
  std::optional<IsoclinismWitness> out;
  for_each_isomorphism(q1.group, q2.group, [&](const GroupHom& alpha) {
    auto beta = forced_beta(g1, g2, q1, q2, alpha, d1, d2);
    if (!beta) return false;
    out = IsoclinismWitness{alpha, *beta, true};
    return true;
  });
  return out;
}

bool omega_isoclinism_check(GroupPtr g) {
  if (!is_almost_extraspecial(g))
    throw NotApplicable("omega check: input is not almost extraspecial");
  std::uint64_t p = 0;
  is_p_group(g, p);
  auto h = subgroup_as_group(omega1(g, static_cast<std::uint32_t>(p)));
  bool extra = false;
  try {
    extra = is_extraspecial(h.group);
  } catch (const NotPGroup&) {
    return false;
  }
  if (!extra) return false;
  return isoclinic(g, h.group).has_value();
}

}  // namespace bgm
