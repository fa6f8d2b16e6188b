// Command-line front end.

#include <CLI11.hpp>

#include <iostream>

#include "pbw/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"FFL bases, straightening and oracle checks for types A and C"};
  app.require_subcommand(1);

  pbw::CommandConfig cfg;
  auto system_opts = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "A or C")->check(CLI::IsMember({"A", "C", "a", "c"}));
    sub->add_option("--rank", cfg.rank, "rank n")->required();
  };
  auto format_opt = [&](CLI::App* sub, const char* help) { sub->add_option("--format", cfg.format, help); };

  auto* roots = app.add_subcommand("roots", "list the positive roots");
  system_opts(roots);
  format_opt(roots, "text or json");

  auto* paths = app.add_subcommand("paths", "list the Dyck paths");
  system_opts(paths);
  format_opt(paths, "text or json");

  auto* points = app.add_subcommand("points", "lattice points S(lambda)");
  system_opts(points);
  points->add_option("--weight", cfg.weight, "m1,m2,...")->required();
  format_opt(points, "csv, json or text");

  auto* character = app.add_subcommand("character", "graded character of S(lambda)");
  system_opts(character);
  character->add_option("--weight", cfg.weight, "m1,m2,...")->required();
  format_opt(character, "json or text");

  auto* straighten = app.add_subcommand("straighten", "express f^(s) v_lambda in the FFL basis");
  system_opts(straighten);
  straighten->add_option("--weight", cfg.weight, "m1,m2,...")->required();
  straighten->add_option("--exponent", cfg.exponent, "e.g. a[1,2]=2,a[2,2]=1")->required();
  format_opt(straighten, "json or text");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "dims, table1, characters, freudenthal, basis, straighten, minkowski")
      ->required();
  auto* fam = verify->add_option("--family", cfg.family, "restrict to A or C")->check(CLI::IsMember({"A", "C", "a", "c"}));
  verify->add_option("--max-rank", cfg.max_rank, "largest rank (suite default when 0)");
  verify->add_option("--max-coeff", cfg.max_coeff, "largest weight coefficient");
  verify->add_option("--samples", cfg.samples, "sample count (suite default when 0)");
  verify->add_option("--seed", cfg.seed, "random seed");
  format_opt(verify, "json or text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return pbw::exit_code::usage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.family_given = fam->count() > 0;
  return pbw::run(cfg, std::cout, std::cerr);
}
