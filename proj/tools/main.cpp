#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgm/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Bogomolov-multiplier and rigidity toolkit"};
  app.require_subcommand(1);

  bgm::CommandOptions opts;
  bool no_cache = false;
  app.add_option("--max-cohomology-order", opts.max_cohomology_order,
                 "Largest group order for cocycle cohomology (default 64)")
      ->envname("max-cohomology-order");
  app.add_option("--max-rigidity-order", opts.max_rigidity_order,
                 "Largest group order for Autc enumeration (default 128)")
      ->envname("max-rigidity-order");
  app.add_option("--cache-dir", opts.cache_dir,
                 "Result cache directory (default .bgm-cache)");
  app.add_flag("--no-cache", no_cache, "Bypass the result cache");

  std::string verb;
  std::vector<std::string> specs;

  auto spec_cmd = [&](const char* name, const char* desc, int nspecs) {
    auto* c = app.add_subcommand(name, desc);
    c->fallthrough();
    if (nspecs > 0)
      c->add_option("spec", specs, "group spec(s)")
          ->required()
          ->expected(nspecs);
    c->callback([&verb, name] { verb = name; });
    return c;
  };

  spec_cmd("info", "Order, characteristic subgroups, classes", 1);
  spec_cmd("schur", "Schur multiplier invariant factors", 1);
  auto* b0cmd = spec_cmd("b0", "Bogomolov multiplier", 1);
  b0cmd->add_option("--method", opts.method,
                    "auto | cocycle | fastpath | sylow (default auto)");
  spec_cmd("outc", "Class-preserving automorphism counts", 1);
  spec_cmd("rigid", "Sha-rigidity verdict", 1);
  spec_cmd("blackburn", "Dedekind / Blackburn / neither verdict", 1);
  spec_cmd("isoclinic", "Isoclinism test for two groups", 2);

  auto* verify = spec_cmd("verify-theorem",
                          "Check B0 = 0 and rigidity over the corpus", 0);
  verify->add_option("--max-order", opts.max_order,
                     "Largest corpus order (default 32)");

  auto* experiment = app.add_subcommand("experiment", "Experiment runners");
  experiment->require_subcommand(1);
  experiment->fallthrough();
  auto* cp = experiment->add_subcommand("central-product",
                                        "B0 of a central product vs factors");
  cp->fallthrough();
  cp->add_option("spec", specs, "two group specs")->required()->expected(2);
  cp->callback([&verb] { verb = "experiment-central-product"; });

  auto* catalog = app.add_subcommand("catalog", "Corpus inspection");
  catalog->require_subcommand(1);
  catalog->fallthrough();
  auto* list = catalog->add_subcommand("list", "List the group corpus");
  list->fallthrough();
  list->add_option("--max-order", opts.max_order,
                   "Largest corpus order (default 32)");
  list->callback([&verb] { verb = "catalog-list"; });

  CLI11_PARSE(app, argc, argv);
  opts.use_cache = !no_cache;

  auto res = bgm::run_command(verb, specs, opts);
  std::fputs(res.json.c_str(), stdout);
  return res.exit_code;
}
