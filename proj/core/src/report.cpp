#include "bgm/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bgm/catalog.hpp"
#include "bgm/cohomology.hpp"
#include "bgm/fastpath.hpp"
#include "bgm/rigidity.hpp"
#include "bgm/structure.hpp"
#include "json.hpp"

namespace bgm {
namespace {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Read-through cache keyed by group fingerprint + command + method +
/// tool version.  Any I/O or parse failure degrades to a miss.
class Cache {
 public:
  Cache(const CommandOptions& opts, std::string key)
      : enabled_(opts.use_cache), dir_(opts.cache_dir) {
    if (enabled_) path_ = dir_ / (hex64(fnv1a(key)) + ".json");
  }

  std::optional<json> load() const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    try {
      return json::parse(in);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring corrupted cache entry " << path_ << ": "
                << e.what() << "\n";
      return std::nullopt;
    }
  }

  void store(const json& result) const {
    if (!enabled_) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path_);
    if (out) out << result.dump();
  }

 private:
  bool enabled_;
  std::filesystem::path dir_;
  std::filesystem::path path_;
};

json factors_json(const std::vector<std::uint64_t>& f) {
  return json(f);  // trivial group serializes as []
}

/// B0 by one concrete method.  Returns the result object and records the
/// method actually used.
json b0_result(GroupPtr g, const std::string& method,
               const CommandOptions& opts, std::string& used) {
  if (method == "cocycle") {
    used = "cocycle";
    auto pres = b0(g, B0Mode::bicyclic, opts.max_cohomology_order);
    return {{"invariant_factors", factors_json(pres.invariant_factors)}};
  }
  if (method == "fastpath") {
    used = "fastpath";
    auto gamma = gamma_from_group(g);
    auto cert = b0_fastpath(gamma);
    std::vector<std::uint64_t> f(cert.b0_dim, gamma.p);
    return {{"invariant_factors", factors_json(f)},
            {"b0_dim", cert.b0_dim},
            {"dimU", gamma.dim_u},
            {"dimV", gamma.dim_v}};
  }
  if (method == "sylow") {
    used = "sylow";
    auto v = b0_sylow_reduction(g, opts.max_cohomology_order);
    json primes = json::array();
    for (const auto& pp : v.primes)
      primes.push_back({{"p", pp.p},
                        {"sylow_order", pp.sylow_order},
                        {"cyclic", pp.cyclic},
                        {"b0_factors", factors_json(pp.b0_factors)}});
    return {{"verdict", v.zero ? "Zero" : "Unknown"}, {"primes", primes}};
  }
  if (method == "auto") {
    try {
      return b0_result(g, "fastpath", opts, used);
    } catch (const NotApplicable&) {
    } catch (const EvenPrimeUnsupported&) {
    }
    std::uint64_t p = 0;
    if (!is_p_group(g, p)) return b0_result(g, "sylow", opts, used);
    return b0_result(g, "cocycle", opts, used);
  }
  throw InvalidSpec("unknown b0 method: " + method);
}

json info_result(GroupPtr g) {
  auto classes = conjugacy_classes(g);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  json r{{"order", g->order},
         {"abelian", g->is_abelian()},
         {"exponent", g->exponent()},
         {"center_order", center(g).size()},
         {"derived_order", derived_subgroup(g).size()},
         {"frattini_order", frattini_subgroup(g).size()},
         {"class_count", classes.size()},
         {"class_sizes", sizes},
         {"abelianization", factors_json(abelian_invariants(g))}};
  std::uint64_t p = 0;
  if (is_p_group(g, p)) {
    r["p_group"] = p;
    r["extraspecial"] = is_extraspecial(g);
    r["almost_extraspecial"] = is_almost_extraspecial(g);
  }
  return r;
}

json rigid_result(GroupPtr g, const CommandOptions& opts, bool with_witness) {
  auto v = sha_rigid(g, opts.max_rigidity_order);
  json r{{"rigid", v.rigid}, {"outc_order", v.outc_order}};
  if (with_witness && v.witness) r["witness_images"] = v.witness->images;
  return r;
}

/// One verify-theorem row; cap breaches surface as "SKIPPED".
json theorem_row(const CorpusEntry& e, const CommandOptions& opts,
                 bool& failed) {
  json row{{"spec", e.spec}, {"order", e.group->order}, {"tags", e.tags}};
  std::string b0_status, rigid_status;
  try {
    std::string used;
    auto res = b0_result(e.group, "auto", opts, used);
    bool trivial = res.contains("invariant_factors")
                       ? res["invariant_factors"].empty()
                       : res["verdict"] == "Zero";
    b0_status = trivial ? "PASS" : "FAIL";
    row["b0_method"] = used;
    row["b0"] = res;
  } catch (const CapExceeded&) {
    b0_status = "SKIPPED";
  }
  try {
    auto v = sha_rigid(e.group, opts.max_rigidity_order);
    rigid_status = v.rigid ? "PASS" : "FAIL";
    row["outc_order"] = v.outc_order;
  } catch (const CapExceeded&) {
    rigid_status = "SKIPPED";
  }
  row["b0_status"] = b0_status;
  row["rigid_status"] = rigid_status;
  if (b0_status == "FAIL" || rigid_status == "FAIL") failed = true;
  return row;
}

const std::vector<std::string> kTheoremTags = {"i",  "iii", "iv",  "v",
                                               "vi", "vii", "ix", "xii"};

bool has_theorem_tag(const CorpusEntry& e) {
  for (const auto& t : e.tags)
    for (const auto& want : kTheoremTags)
      if (t == want) return true;
  return false;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  std::uint64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

CommandResult finish(json report, int code, const Timer& t) {
  report["schema"] = 1;
  report["tool_version"] = kToolVersion;
  report["wall_time_ms"] = t.ms();
  return {code, report.dump(2) + "\n"};
}

void expect_args(const std::vector<std::string>& args, std::size_t n) {
  if (args.size() != n)
    throw InvalidSpec("expected " + std::to_string(n) + " group spec(s), got " +
                      std::to_string(args.size()));
}

}  // namespace

CommandResult run_command(const std::string& verb,
                          const std::vector<std::string>& args,
                          const CommandOptions& opts) {
  Timer timer;
  json report{{"command", verb}, {"cache_hit", false}};
  try {
    if (verb == "info" || verb == "schur" || verb == "b0" || verb == "outc" ||
        verb == "rigid" || verb == "blackburn") {
      expect_args(args, 1);
      auto g = make_group(args[0]);
      report["spec"] = args[0];
      report["group_fingerprint"] = hex64(g->fingerprint());
      std::string method = verb == "b0" ? opts.method : "direct";
      std::string cache_key = hex64(g->fingerprint()) + "|" + verb + "|" +
                              method + "|" + kToolVersion;
      Cache cache(opts, cache_key);
      if (auto hit = cache.load()) {
        report["result"] = (*hit)["result"];
        report["method"] = (*hit)["method"];
        report["cache_hit"] = true;
        return finish(std::move(report), kExitOk, timer);
      }
      json result;
      std::string used = method;
      if (verb == "info") {
        result = info_result(g);
      } else if (verb == "schur") {
        auto m = schur_multiplier(g, opts.max_cohomology_order);
        result = {{"invariant_factors",
                   factors_json(m.presentation.invariant_factors)}};
      } else if (verb == "b0") {
        result = b0_result(g, opts.method, opts, used);
      } else if (verb == "outc") {
        auto set = autc_enumerate(g, opts.max_rigidity_order);
        result = {{"autc_order", set.autos.size()},
                  {"inn_order", set.inn_order},
                  {"outc_order", set.outc_order}};
      } else if (verb == "rigid") {
        result = rigid_result(g, opts, true);
      } else {
        auto v = is_blackburn(g);
        const char* kind = v.kind == BlackburnKind::dedekind ? "dedekind"
                           : v.kind == BlackburnKind::blackburn ? "blackburn"
                                                                : "neither";
        result = {{"verdict", kind},
                  {"intersection_order", v.intersection.size()}};
      }
      report["method"] = used;
      report["result"] = result;
      cache.store({{"result", result}, {"method", used}});
      return finish(std::move(report), kExitOk, timer);
    }

    if (verb == "isoclinic") {
      expect_args(args, 2);
      auto g1 = make_group(args[0]), g2 = make_group(args[1]);
      report["spec"] = args[0] + " ~ " + args[1];
      auto w = isoclinic(g1, g2);
      json result{{"isoclinic", w.has_value()}};
      if (w) {
        result["central_quotient_order"] = w->alpha.source->order;
        result["derived_order"] = w->beta.source->order;
      }
      report["method"] = "backtracking";
      report["result"] = result;
      return finish(std::move(report), kExitOk, timer);
    }

    if (verb == "experiment-central-product") {
      expect_args(args, 2);
      auto g1 = make_group(args[0]), g2 = make_group(args[1]);
      auto prod = central_product_over_centers(g1, g2);
      report["spec"] = args[0] + " o " + args[1];
      std::string m1, m2, mp;
      auto r1 = b0_result(g1, "auto", opts, m1);
      auto r2 = b0_result(g2, "auto", opts, m2);
      auto rp = b0_result(prod, "auto", opts, mp);
      auto trivial = [](const json& r) {
        return r.contains("invariant_factors") ? r["invariant_factors"].empty()
                                               : r["verdict"] == "Zero";
      };
      report["method"] = "auto";
      report["result"] = {
          {"product_order", prod->order},
          {"factor_b0", json::array({r1, r2})},
          {"product_b0", rp},
          {"vanishing_preserved",
           !(trivial(r1) && trivial(r2)) || trivial(rp)}};
      return finish(std::move(report), kExitOk, timer);
    }

    if (verb == "verify-theorem") {
      expect_args(args, 0);
      bool failed = false;
      json rows = json::array();
      for (const auto& e : corpus(opts.max_order))
        if (has_theorem_tag(e)) rows.push_back(theorem_row(e, opts, failed));
      report["method"] = "auto";
      report["result"] = {{"rows", rows},
                          {"groups_checked", rows.size()},
                          {"all_pass", !failed}};
      return finish(std::move(report), failed ? kExitAssertionFailed : kExitOk,
                    timer);
    }

    if (verb == "catalog-list") {
      expect_args(args, 0);
      json rows = json::array();
      for (const auto& e : corpus(opts.max_order))
        rows.push_back(
            {{"spec", e.spec}, {"order", e.group->order}, {"tags", e.tags}});
      report["method"] = "direct";
      report["result"] = {{"groups", rows}};
      return finish(std::move(report), kExitOk, timer);
    }

    throw InvalidSpec("unknown command: " + verb);
  } catch (const InvalidSpec& e) {
    report["error"] = e.what();
    return finish(std::move(report), kExitInvalidSpec, timer);
  } catch (const CapExceeded& e) {
    report["error"] = e.what();
    return finish(std::move(report), kExitCapExceeded, timer);
  } catch (const NotApplicable& e) {
    report["error"] = e.what();
    return finish(std::move(report), kExitNotApplicable, timer);
  } catch (const EvenPrimeUnsupported& e) {
    report["error"] = e.what();
    return finish(std::move(report), kExitNotApplicable, timer);
  } catch (const NotPGroup& e) {
    report["error"] = e.what();
    return finish(std::move(report), kExitNotApplicable, timer);
  } catch (const Error& e) {
    report["error"] = e.what();
    return finish(std::move(report), kExitAssertionFailed, timer);
  }
}

}  // namespace bgm
