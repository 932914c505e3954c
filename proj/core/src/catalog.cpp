#include "bgm/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bgm {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty()) throw InvalidSpec("expected a number, got '" + s + "'");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidSpec("expected a number, got '" + s + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw InvalidSpec("number too large: " + s);
  }
  return v;
}

/// Split at top-level occurrences of delim (depth counts [] and ()).
std::vector<std::string> split_top(const std::string& s, char delim) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == delim && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

/// key=value pairs like "p=3,n=1,exp=p".
std::vector<std::pair<std::string, std::string>> parse_kv(
    const std::string& s) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& part : split_top(s, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw InvalidSpec("expected key=value, got '" + part + "'");
    out.push_back({trim(part.substr(0, eq)), trim(part.substr(eq + 1))});
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::vector<int>> parse_perm_list(const std::string& s) {
  std::string body = trim(s);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw InvalidSpec("perm parameters must be bracketed");
  body = body.substr(1, body.size() - 2);
  // Each comma-separated piece is a product of cycles "(0 1)(2 3)".
  std::vector<std::vector<std::vector<int>>> gen_cycles;
  int max_pt = -1;
  for (const auto& piece_raw : split_top(body, ',')) {
    std::string piece = trim(piece_raw);
    std::vector<std::vector<int>> cycles;
    std::size_t pos = 0;
    while (pos < piece.size()) {
      if (piece[pos] != '(') throw InvalidSpec("expected '(' in perm spec");
      std::size_t close = piece.find(')', pos);
      if (close == std::string::npos) throw InvalidSpec("unclosed cycle");
      std::istringstream in(piece.substr(pos + 1, close - pos - 1));
      std::vector<int> cyc;
      std::string tok;
      while (in >> tok) {
        cyc.push_back(static_cast<int>(parse_uint(tok)));
        max_pt = std::max(max_pt, cyc.back());
      }
      cycles.push_back(std::move(cyc));
      pos = close + 1;
      while (pos < piece.size() && piece[pos] == ' ') ++pos;
    }
    if (cycles.empty()) throw InvalidSpec("empty permutation");
    gen_cycles.push_back(std::move(cycles));
  }
  if (max_pt < 0) throw InvalidSpec("no points in perm spec");
  const int degree = max_pt + 1;
  std::vector<std::vector<int>> gens;
  for (const auto& cycles : gen_cycles) {
    std::vector<int> perm(degree);
    for (int i = 0; i < degree; ++i) perm[i] = i;
    for (const auto& cyc : cycles)
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (perm[from] != from) throw InvalidSpec("overlapping cycles");
        perm[from] = to;
      }
    gens.push_back(std::move(perm));
  }
  return gens;
}

/// Exponent-p^2 "extraspecial base" of order p^3:
/// a of order p^2, b of order p, b a b^-1 = a^(1+p).
GroupPtr exponent_p2_base(std::uint64_t p) {
  const std::uint64_t p2 = p * p;
  return Group::from_table(
      p2 * p,
      [&](Elt x, Elt y) {
        std::uint64_t i = x % p2, j = x / p2, k = y % p2, l = y / p2;
        std::uint64_t r = 1;
        for (std::uint64_t t = 0; t < j; ++t) r = r * (1 + p) % p2;
        return static_cast<Elt>((i + k * r) % p2 + p2 * ((j + l) % p));
      },
      "extraspecial-exp-p2");
}

GammaData eq2_gamma(std::uint32_t p, std::size_t n) {
  GammaData g;
  g.p = p;
  g.dim_u = 2 * n;
  g.dim_v = 1;
  g.matrix.assign(1, FpVec(wedge_dim(2 * n), 0));
  for (std::size_t i = 0; i < n; ++i)
    g.matrix[0][wedge_index(i, i + n, 2 * n)] = 1;
  return g;
}

GroupPtr central_product_over(GroupPtr a, GroupPtr b, const Subgroup& za,
                              const Subgroup& zb) {
  auto ga = subgroup_as_group(za);
  auto gb = subgroup_as_group(zb);
  auto iso = is_isomorphic(ga.group, gb.group);
  if (!iso) throw NotIso("central subgroups are not isomorphic");
  std::vector<Elt> ident(za.size());
  for (std::size_t i = 0; i < za.size(); ++i)
    ident[i] = gb.to_parent[iso->images[i]];
  return central_product(a, b, za, zb, ident);
}

GroupPtr make_extraspecial(std::uint64_t p, std::uint64_t n,
                           const std::string& variant) {
  if (!is_prime(p)) throw InvalidSpec("extraspecial p must be prime");
  if (n < 1 || n > 3) throw InvalidSpec("extraspecial n must be 1..3");
  if (p == 2) {
    GroupPtr g;
    if (variant == "D")
      g = dihedral_group(8);
    else if (variant == "Q")
      g = quaternion_group(8);
    else
      throw InvalidSpec("extraspecial p=2 requires type=D or type=Q");
    for (std::uint64_t i = 1; i < n; ++i)
      g = central_product_over_centers(g, dihedral_group(8));
    return g;
  }
  if (variant == "p") return from_central_data(p, eq2_gamma(p, n), 1u << 15);
  if (variant != "p2")
    throw InvalidSpec("extraspecial odd p requires exp=p or exp=p2");
  GroupPtr g = exponent_p2_base(p);
  for (std::uint64_t i = 1; i < n; ++i)
    g = central_product_over_centers(
        g, from_central_data(static_cast<std::uint32_t>(p), eq2_gamma(p, 1)));
  return g;
}

GroupPtr make_almost_extraspecial(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw InvalidSpec("almostextra p must be prime");
  if (n < 1 || n > 2) throw InvalidSpec("almostextra n must be 1..2");
  GroupPtr es = p == 2 ? make_extraspecial(2, n, "D")
                       : make_extraspecial(p, n, "p");
  auto cp2 = cyclic_group(p * p);
  auto za = center(es);
  auto zb = closure(cp2, {static_cast<Elt>(p)});  // the order-p subgroup
  return central_product_over(es, cp2, za, zb);
}

GroupPtr load_file_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidSpec(std::string("bad group file: ") + e.what());
  }
  if (!j.contains("degree") || !j.contains("generators"))
    throw InvalidSpec("group file needs degree and generators");
  std::size_t degree = j["degree"].get<std::size_t>();
  std::vector<std::vector<int>> gens;
  for (const auto& g : j["generators"]) {
    auto perm = g.get<std::vector<int>>();
    if (perm.size() != degree)
      throw InvalidSpec("generator length does not match degree");
    gens.push_back(std::move(perm));
  }
  return from_permutations(gens);
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& s) {
  std::string t = trim(s);
  auto colon = t.find(':');
  GroupSpec out;
  out.family = colon == std::string::npos ? t : trim(t.substr(0, colon));
  out.params = colon == std::string::npos ? "" : trim(t.substr(colon + 1));
  static const std::vector<std::string> families = {
      "cyclic",      "abelian",        "dihedral", "quaternion",
      "semidihedral", "modular",       "dicyclic", "sym",
      "extraspecial", "almostextra",   "product",  "centralproduct",
      "perm",        "file"};
  for (const auto& f : families)
    if (out.family == f) return out;
  throw InvalidSpec("unknown group family: '" + out.family + "'");
}

GroupPtr central_product_over_centers(GroupPtr a, GroupPtr b) {
  // Identify the largest pair of isomorphic subgroups of the two centers
  // (the full centers when they are isomorphic).
  auto za = center(a), zb = center(b);
  auto ga = subgroup_as_group(za), gb = subgroup_as_group(zb);
  auto subs_a = all_subgroups(ga.group, 256);
  auto subs_b = all_subgroups(gb.group, 256);
  for (std::size_t i = subs_a.size(); i-- > 0;) {
    const auto& ha = subs_a[i];
    for (const auto& hb : subs_b) {
      if (hb.size() != ha.size()) continue;
      auto sa = subgroup_as_group(ha), sb = subgroup_as_group(hb);
      auto iso = is_isomorphic(sa.group, sb.group);
      if (!iso) continue;
      std::vector<Elt> mem_a, mem_b;
      for (Elt e : ha.members) mem_a.push_back(ga.to_parent[e]);
      for (Elt e : hb.members) mem_b.push_back(gb.to_parent[e]);
      auto pa = Subgroup::from_members(a, mem_a);
      auto pb = Subgroup::from_members(b, mem_b);
      // Map pa.members[k] (sorted) through the found isomorphism.
      std::vector<Elt> ident(pa.size());
      for (std::size_t k = 0; k < pa.size(); ++k) {
        Elt in_ga = ga.from_parent[pa.members[k]];
        Elt in_sa = sa.from_parent[in_ga];
        Elt in_sb = iso->images[in_sa];
        ident[k] = gb.to_parent[sb.to_parent[in_sb]];
      }
      return central_product(a, b, pa, pb, ident);
    }
  }
  throw NotIso("no identifiable central subgroups");  // unreachable: trivial works
}

GroupPtr make_group(const GroupSpec& spec) {
  const std::string& p = spec.params;
  if (spec.family == "cyclic") return cyclic_group(parse_uint(p));
  if (spec.family == "dihedral") return dihedral_group(parse_uint(p));
  if (spec.family == "quaternion") return quaternion_group(parse_uint(p));
  if (spec.family == "semidihedral") return semidihedral_group(parse_uint(p));
  if (spec.family == "modular") return modular_group(parse_uint(p));
  if (spec.family == "dicyclic") return dicyclic_group(parse_uint(p));
  if (spec.family == "sym")
    return symmetric_group(static_cast<std::uint32_t>(parse_uint(p)));
  if (spec.family == "abelian") {
    std::string body = trim(p);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      throw InvalidSpec("abelian parameters must be bracketed");
    std::vector<std::uint64_t> orders;
    for (const auto& piece : split_top(body.substr(1, body.size() - 2), ','))
      orders.push_back(parse_uint(trim(piece)));
    if (orders.empty()) throw InvalidSpec("abelian needs at least one factor");
    return abelian_group(orders);
  }
  if (spec.family == "perm") return from_permutations(parse_perm_list(p));
  if (spec.family == "file") return load_file_group(p);
  if (spec.family == "extraspecial" || spec.family == "almostextra") {
    std::uint64_t pp = 0, n = 0;
    std::string variant;
    for (const auto& [k, v] : parse_kv(p)) {
      if (k == "p")
        pp = parse_uint(v);
      else if (k == "n")
        n = parse_uint(v);
      else if (k == "exp" || k == "type")
        variant = v;
      else
        throw InvalidSpec("unknown parameter: " + k);
    }
    if (!pp || !n) throw InvalidSpec(spec.family + " needs p and n");
    if (spec.family == "almostextra") {
      if (!variant.empty()) throw InvalidSpec("almostextra takes only p and n");
      return make_almost_extraspecial(pp, n);
    }
    if (variant.empty())
      throw InvalidSpec("extraspecial needs exp= (odd p) or type= (p=2)");
    return make_extraspecial(pp, n, variant);
  }
  if (spec.family == "product") {
    auto parts = split_top(p, '*');
    if (parts.size() < 2) throw InvalidSpec("product needs <spec>*<spec>");
    GroupPtr g = make_group(trim(parts[0]));
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = direct_product(g, make_group(trim(parts[i])));
    return g;
  }
  if (spec.family == "centralproduct") {
    // The comma also appears inside operand specs; take the leftmost
    // top-level split where both sides parse and build.
    auto parts = split_top(p, ',');
    if (parts.size() < 2)
      throw InvalidSpec("centralproduct needs <spec>,<spec>");
    for (std::size_t cut = 1; cut < parts.size(); ++cut) {
      std::string left, right;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::string& dst = i < cut ? left : right;
        if (!dst.empty()) dst += ",";
        dst += parts[i];
      }
      try {
        GroupPtr a = make_group(trim(left));
        GroupPtr b = make_group(trim(right));
        return central_product_over_centers(a, b);
      } catch (const InvalidSpec&) {
        if (cut + 1 == parts.size()) throw;
      }
    }
    throw InvalidSpec("centralproduct needs <spec>,<spec>");
  }
  throw InvalidSpec("unknown group family: '" + spec.family + "'");
}

GroupPtr make_group(const std::string& spec) {
  return make_group(GroupSpec::parse(spec));
}

std::vector<CorpusEntry> corpus(std::uint64_t max_order) {
  struct Row {
    const char* spec;
    std::vector<std::string> tags;
  };
  // Fixed, ordered list; preferred specs first so isomorphism dedup keeps
  // them. Tags name the rigidity classes an entry instantiates.
  static const std::vector<Row> rows = {
      {"cyclic:1", {"vi", "vii", "abelian"}},
      {"cyclic:2", {"iii", "iv", "vi", "vii", "abelian"}},
      {"cyclic:3", {"iii", "iv", "vi", "vii", "abelian"}},
      {"cyclic:4", {"iii", "iv", "v", "vi", "vii", "abelian"}},
      {"cyclic:5", {"iii", "iv", "vi", "vii", "abelian"}},
      {"cyclic:6", {"vi", "vii", "abelian"}},
      {"sym:3", {"i", "vi", "vii"}},
      {"abelian:[2,2]", {"iii", "iv", "v", "vi", "abelian"}},
      {"product:cyclic:2*cyclic:3", {"vi", "vii", "abelian"}},
      {"dihedral:8", {"iii", "iv", "v", "vi", "ix"}},
      {"quaternion:8", {"iii", "iv", "v", "vi", "ix"}},
      {"cyclic:9", {"iii", "iv", "vi", "vii", "abelian"}},
      {"abelian:[3,3]", {"iii", "iv", "vi", "abelian"}},
      {"cyclic:12", {"vi", "vii", "abelian"}},
      {"dihedral:12", {"vi", "vii"}},
      {"dicyclic:12", {"vi", "vii"}},
      {"product:sym:3*cyclic:2", {"vi", "vii"}},
      {"abelian:[2,4]", {"iii", "iv", "v", "vi", "abelian"}},
      {"abelian:[2,2,2]", {"iii", "v", "vi", "abelian"}},
      {"dihedral:16", {"iii", "iv", "v", "vi"}},
      {"quaternion:16", {"iii", "iv", "v", "vi"}},
      {"semidihedral:16", {"iii", "iv", "v", "vi"}},
      {"modular:16", {"iii", "iv", "v", "vi"}},
      {"almostextra:p=2,n=1", {"iii", "v", "almostextraspecial"}},
      {"product:dihedral:8*cyclic:2", {"iii", "v"}},
      {"centralproduct:dihedral:8,cyclic:4", {"iii", "v", "xii"}},
      {"sym:4", {"i", "vii"}},
      {"product:quaternion:8*cyclic:3", {"vii"}},
      {"extraspecial:p=3,n=1,exp=p", {"iii", "ix"}},
      {"extraspecial:p=3,n=1,exp=p2", {"iii", "iv", "v", "ix"}},
      {"extraspecial:p=2,n=2,type=D", {"ix"}},
      {"extraspecial:p=2,n=2,type=Q", {"ix"}},
      {"centralproduct:quaternion:8,quaternion:8", {"ix", "xii"}},
      {"product:cyclic:6*cyclic:6", {"vi", "abelian"}},
      {"almostextra:p=3,n=1", {"almostextraspecial"}},
      {"extraspecial:p=5,n=1,exp=p", {"iii", "ix"}},
      {"extraspecial:p=3,n=2,exp=p", {"ix"}},
  };
  std::vector<CorpusEntry> out;
  for (const auto& row : rows) {
    GroupPtr g = make_group(std::string(row.spec));
    if (g->order > max_order) continue;
    bool dup = false;
    for (const auto& prev : out) {
      if (prev.group->order != g->order) continue;
      if (is_isomorphic(prev.group, g, 1u << 15)) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    out.push_back({row.spec, g, row.tags});
  }
  return out;
}

}  // namespace bgm
