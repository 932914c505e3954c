#include <filesystem>
#include <fstream>

#include "bgm/report.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bgm;
using nlohmann::json;

namespace {

CommandOptions test_opts() {
  CommandOptions o;
  o.cache_dir =
      (std::filesystem::temp_directory_path() / "bgm-cli-test-cache").string();
  return o;
}

json parse(const CommandResult& r) { return json::parse(r.json); }

struct CacheDirGuard {
  std::string dir;
  explicit CacheDirGuard(const std::string& d) : dir(d) {
    std::filesystem::remove_all(dir);
  }
  ~CacheDirGuard() { std::filesystem::remove_all(dir); }
};

}  // namespace

TEST_CASE("info command") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);

  auto r = run_command("info", {"extraspecial:p=3,n=1,exp=p"}, opts);
  CHECK(r.exit_code == kExitOk);
  auto j = parse(r);
  CHECK(j["schema"] == 1);
  CHECK(j["result"]["order"] == 27);
  CHECK(j["result"]["center_order"] == 3);
  CHECK(j["result"]["extraspecial"] == true);

  auto triv = parse(run_command("info", {"cyclic:1"}, opts));
  CHECK(triv["result"]["order"] == 1);
  CHECK(triv["result"]["abelianization"] == json::array());

  auto s4 = parse(run_command("info", {"sym:4"}, opts));
  CHECK(s4["result"]["order"] == 24);
  CHECK(s4["result"]["class_count"] == 5);
}

TEST_CASE("error exit codes") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);

  CHECK(run_command("info", {"nonsense:7"}, opts).exit_code ==
        kExitInvalidSpec);
  CHECK(run_command("noverb", {}, opts).exit_code == kExitInvalidSpec);
  CHECK(run_command("info", {}, opts).exit_code == kExitInvalidSpec);

  auto capped = test_opts();
  capped.max_cohomology_order = 8;
  capped.method = "cocycle";
  CHECK(run_command("b0", {"dihedral:16"}, capped).exit_code ==
        kExitCapExceeded);
  auto rigcap = test_opts();
  rigcap.max_rigidity_order = 8;
  CHECK(run_command("rigid", {"sym:4"}, rigcap).exit_code == kExitCapExceeded);

  auto fp = test_opts();
  fp.method = "fastpath";
  CHECK(run_command("b0", {"dihedral:8"}, fp).exit_code == kExitNotApplicable);
  CHECK(run_command("b0", {"sym:3"}, fp).exit_code == kExitNotApplicable);
}

TEST_CASE("b0 methods") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);

  opts.method = "cocycle";
  auto d8 = parse(run_command("b0", {"dihedral:8"}, opts));
  CHECK(d8["result"]["invariant_factors"] == json::array());
  CHECK(d8["method"] == "cocycle");

  opts.method = "fastpath";
  auto es = parse(run_command("b0", {"extraspecial:p=3,n=2,exp=p"}, opts));
  CHECK(es["result"]["invariant_factors"] == json::array());
  CHECK(es["result"]["dimU"] == 4);

  opts.method = "sylow";
  auto s4 = parse(run_command("b0", {"sym:4"}, opts));
  CHECK(s4["result"]["verdict"] == "Zero");

  // auto picks fastpath for odd-p applicable groups, sylow for non-p-groups,
  // cocycle otherwise.
  opts.method = "auto";
  CHECK(parse(run_command("b0", {"extraspecial:p=3,n=1,exp=p"}, opts))["method"]
        == "fastpath");
  CHECK(parse(run_command("b0", {"sym:3"}, opts))["method"] == "sylow");
  CHECK(parse(run_command("b0", {"dihedral:8"}, opts))["method"] == "cocycle");
}

TEST_CASE("rigidity and structure verbs") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);

  auto outc = parse(run_command("outc", {"quaternion:8"}, opts));
  CHECK(outc["result"]["outc_order"] == 1);
  CHECK(outc["result"]["inn_order"] == 4);

  auto rigid = parse(run_command("rigid", {"sym:3"}, opts));
  CHECK(rigid["result"]["rigid"] == true);

  auto iso =
      parse(run_command("isoclinic", {"dihedral:8", "quaternion:8"}, opts));
  CHECK(iso["result"]["isoclinic"] == true);
  auto noniso =
      parse(run_command("isoclinic", {"dihedral:8", "cyclic:8"}, opts));
  CHECK(noniso["result"]["isoclinic"] == false);

  auto bb = parse(run_command("blackburn", {"quaternion:16"}, opts));
  CHECK(bb["result"]["verdict"] == "blackburn");
  auto dd = parse(run_command("blackburn", {"quaternion:8"}, opts));
  CHECK(dd["result"]["verdict"] == "dedekind");
}

TEST_CASE("experiment central-product") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);
  auto r = parse(run_command("experiment-central-product",
                             {"dihedral:8", "cyclic:4"}, opts));
  CHECK(r["result"]["product_order"] == 16);
  CHECK(r["result"]["product_b0"]["invariant_factors"] == json::array());
  CHECK(r["result"]["vanishing_preserved"] == true);
}

TEST_CASE("verify-theorem small corpus") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);
  opts.max_order = 12;
  auto res = run_command("verify-theorem", {}, opts);
  CHECK(res.exit_code == kExitOk);
  auto j = parse(res);
  CHECK(j["result"]["all_pass"] == true);
  CHECK(j["result"]["groups_checked"].get<int>() >= 5);
  for (const auto& row : j["result"]["rows"]) {
    CHECK(row["b0_status"] != "FAIL");
    CHECK(row["rigid_status"] != "FAIL");
  }
}

TEST_CASE("catalog list") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);
  opts.max_order = 8;
  auto j = parse(run_command("catalog-list", {}, opts));
  CHECK(j["result"]["groups"].size() >= 8);
}

TEST_CASE("cache behavior") {
  auto opts = test_opts();
  CacheDirGuard guard(opts.cache_dir);
  opts.method = "cocycle";

  auto first = run_command("b0", {"extraspecial:p=2,n=2,type=D"}, opts);
  auto j1 = parse(first);
  CHECK(j1["cache_hit"] == false);

  auto second = run_command("b0", {"extraspecial:p=2,n=2,type=D"}, opts);
  auto j2 = parse(second);
  CHECK(j2["cache_hit"] == true);
  CHECK(j1["result"] == j2["result"]);

  // Determinism apart from wall time and the hit flag.
  j1.erase("wall_time_ms");
  j2.erase("wall_time_ms");
  j1.erase("cache_hit");
  j2.erase("cache_hit");
  CHECK(j1 == j2);

  auto no_cache = opts;
  no_cache.use_cache = false;
  auto j3 = parse(run_command("b0", {"extraspecial:p=2,n=2,type=D"}, no_cache));
  CHECK(j3["cache_hit"] == false);

  // Corrupted entries are ignored and recomputed.
  for (const auto& entry :
       std::filesystem::directory_iterator(opts.cache_dir)) {
    std::ofstream out(entry.path());
    out << "{not json";
  }
  auto j4 = parse(run_command("b0", {"extraspecial:p=2,n=2,type=D"}, opts));
  CHECK(j4["cache_hit"] == false);
  CHECK(j4["result"] == j1["result"]);
}
