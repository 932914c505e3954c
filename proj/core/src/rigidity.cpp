#include "bgm/rigidity.hpp"

#include <algorithm>
#include <set>

namespace bgm {
namespace {

/// Class-constrained backtracking over automorphism candidates: images of
/// the chosen generators range over their conjugacy classes, partial maps
/// are closed under multiplication, and injectivity is enforced on the fly.
struct AutcSearch {
  const Group& g;
  std::vector<Elt> gens;
  std::vector<std::vector<Elt>> candidates;
  std::vector<int> img;
  std::vector<bool> used;
  std::vector<Elt> mapped;
  std::vector<std::vector<Elt>>& results;

  bool assign(Elt x, Elt y, std::vector<Elt>& trail) {
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
        queue.push_back({g.mul(u, m), g.mul(v, img[m])});
        queue.push_back({g.mul(m, u), g.mul(img[m], v)});
      }
    }
    return true;
  }

  void undo(std::size_t mark, std::vector<Elt>& trail) {
    while (trail.size() > mark) {
      Elt u = trail.back();
      trail.pop_back();
      used[img[u]] = false;
      img[u] = -1;
      mapped.pop_back();
    }
  }

  void search(std::size_t level, std::vector<Elt>& trail) {
    if (level == gens.size()) {
      if (mapped.size() != g.order) return;
      results.emplace_back(img.begin(), img.end());
      return;
    }
    for (Elt cand : candidates[level]) {
      std::size_t mark = trail.size();
      if (assign(gens[level], cand, trail)) search(level + 1, trail);
      undo(mark, trail);
    }
  }
};

std::vector<Elt> compose(const Group& g, const std::vector<Elt>& a,
                         const std::vector<Elt>& b) {
  std::vector<Elt> out(g.order);
  for (std::size_t i = 0; i < g.order; ++i) out[i] = a[b[i]];
  return out;
}

}  // namespace

AutcSet autc_enumerate(GroupPtr g, std::size_t cap) {
  if (g->order > cap) throw CapExceeded("autc: group exceeds the rigidity cap");
  AutcSet out;
  out.group = g;
  auto z = center(g);
  out.inn_order = g->order / z.size();

  std::vector<std::vector<Elt>> maps;
  if (g->is_abelian()) {
    // Singleton classes: the only class-preserving map is the identity.
    std::vector<Elt> id(g->order);
    for (std::size_t i = 0; i < g->order; ++i) id[i] = static_cast<Elt>(i);
    maps.push_back(std::move(id));
  } else {
    auto classes = conjugacy_classes(g);
    std::vector<std::size_t> class_id(g->order);
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (Elt e : classes[c]) class_id[e] = c;

    AutcSearch s{*g, generating_set(g, 4), {}, {}, {}, {}, maps};
    if (s.gens.empty() || closure(g, s.gens).size() != g->order)
      throw GeneratorSearchFailed("autc: no usable generating set");
    for (Elt gen : s.gens) s.candidates.push_back(classes[class_id[gen]]);
    s.img.assign(g->order, -1);
    s.used.assign(g->order, false);
    std::vector<Elt> trail;
    s.search(0, trail);

    // Generator-level class constraints are necessary but not sufficient:
    // keep only maps preserving every conjugacy class.
    std::erase_if(maps, [&](const std::vector<Elt>& m) {
      for (std::size_t i = 0; i < g->order; ++i)
        if (class_id[m[i]] != class_id[i]) return true;
      return false;
    });
  }
  std::sort(maps.begin(), maps.end());

  std::set<std::vector<Elt>> index(maps.begin(), maps.end());
  if (index.size() != maps.size())
    throw Error("autc: duplicate automorphisms enumerated");

  // Inner automorphisms must all appear (they are class-preserving).
  std::set<std::vector<Elt>> inner;
  for (Elt a = 0; a < g->order; ++a) {
    std::vector<Elt> conj(g->order);
    for (Elt x = 0; x < g->order; ++x) conj[x] = g->conj(x, a);
    if (!index.count(conj)) throw Error("autc: inner automorphism missing");
    inner.insert(std::move(conj));
  }
  if (inner.size() != out.inn_order)
    throw Error("autc: inner automorphism count mismatch");

  // The enumerated set must be a group.
  for (const auto& a : maps) {
    std::vector<Elt> inv(g->order);
    for (std::size_t i = 0; i < g->order; ++i) inv[a[i]] = static_cast<Elt>(i);
    if (!index.count(inv)) throw Error("autc: not closed under inverse");
    for (const auto& b : maps)
      if (!index.count(compose(*g, a, b)))
        throw Error("autc: not closed under composition");
  }

  // Coset split against Inn, counting each coset by its minimal member.
  std::set<std::vector<Elt>> seen;
  out.outc_order = 0;
  for (const auto& a : maps) {
    if (seen.count(a)) continue;
    ++out.outc_order;
    for (const auto& i : inner) seen.insert(compose(*g, a, i));
  }
  if (out.outc_order * out.inn_order != maps.size())
    throw Error("autc: coset decomposition mismatch");

  for (auto& m : maps) {
    GroupHom h{g, g, std::move(m)};
    out.autos.push_back(std::move(h));
  }
  for (const auto& h : out.autos)
    if (!h.verify() || !h.is_bijective())
      throw Error("autc: enumerated map fails verification");
  return out;
}

RigidityVerdict sha_rigid(GroupPtr g, std::size_t cap) {
  auto set = autc_enumerate(g, cap);
  RigidityVerdict v;
  v.outc_order = set.outc_order;
  v.rigid = set.outc_order == 1;
  if (!v.rigid) {
    std::set<std::vector<Elt>> inner;
    for (Elt a = 0; a < g->order; ++a) {
      std::vector<Elt> conj(g->order);
      for (Elt x = 0; x < g->order; ++x) conj[x] = g->conj(x, a);
      inner.insert(std::move(conj));
    }
    for (const auto& h : set.autos)
      if (!inner.count(h.images)) {
        v.witness = h;
        break;
      }
  }
  return v;
}

}  // namespace bgm
