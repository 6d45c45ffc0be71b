#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace posmap::cli;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POSMAP_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 0;
}

void add_tolerance_flags(CLI::App* cmd, posmap::ToleranceConfig& tol) {
  cmd->add_option("--eps-psd", tol.eps_psd, "PSD eigenvalue cutoff");
  cmd->add_option("--eps-rank", tol.eps_rank, "relative rank cutoff");
  cmd->add_option("--eps-eq", tol.eps_eq, "entrywise equality tolerance");
  cmd->add_option("--opt-tol", tol.opt_tol, "optimizer stopping tolerance");
  cmd->add_option("--max-iters", tol.max_iters, "optimizer sweep cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posmap: positive maps on matrix algebras via Choi matrices"};
  app.require_subcommand(1);
  // --h is a dimension option, so help lives on --help only.
  app.set_help_flag("--help", "print help");

  GenOptions gen;
  gen.seed = default_seed();
  CLI::App* cgen = app.add_subcommand("gen", "generate a map file");
  cgen->set_help_flag("--help", "print help");
  cgen->add_option("kind", gen.kind, "map kind")
      ->required()
      ->check(CLI::IsMember(
          {"choi", "transpose", "identity", "kraus", "cokraus", "functional", "random_pos"}));
  cgen->add_option("--k", gen.k, "input dimension");
  cgen->add_option("--h", gen.h, "output dimension");
  cgen->add_option("--dim", gen.dim, "square dimension shorthand (sets k = h)");
  cgen->add_option("--terms", gen.terms, "Kraus terms for random_pos");
  cgen->add_option("--seed", gen.seed, "generator seed");
  cgen->add_option("--name", gen.name, "metadata name");
  cgen->add_option("--out", gen.out, "output path")->required();
  cgen->add_option("--float-format", gen.float_format, "decimal|hex")
      ->check(CLI::IsMember({"decimal", "hex"}));

  AnalyzeCmdOptions an;
  an.analyses.seed = default_seed();
  CLI::App* cana = app.add_subcommand("analyze", "run analyses on a map file");
  cana->set_help_flag("--help", "print help");
  cana->add_option("input", an.in, "map file")->required();
  cana->add_flag("--positivity", an.analyses.positivity, "product-vector positivity see-saw");
  cana->add_option("--k-pos", an.analyses.schmidt_rank,
                   "Schmidt-rank bound s for the k-positivity see-saw")
      ->expected(1)
      ->each([&an](const std::string&) { an.analyses.k_pos = true; });
  cana->add_flag("--cp", an.analyses.cp, "complete positivity via the Choi spectrum");
  cana->add_flag("--cocp", an.analyses.cocp, "complete copositivity");
  cana->add_flag("--schwarz", an.analyses.schwarz, "local complete (co)positivity search");
  cana->add_flag("--rank1", an.analyses.rank1, "rank-1 nonincreasing classifier");
  cana->add_flag("--faces", an.analyses.faces, "face membership search");
  cana->add_flag("--minorant", an.analyses.minorant, "extremality falsifier");
  cana->add_flag("--decomp", an.analyses.decomp, "decomposability analysis");
  bool all = false;
  cana->add_flag("--all", all, "run every analysis");
  cana->add_flag("--pretranspose", an.analyses.pretranspose,
                 "analyze the composition with transposition instead");
  cana->add_flag("--expect-positive", an.expect_positive,
                 "exit 2 on a certificate of non-positivity");
  cana->add_option("--restarts", an.analyses.restarts, "see-saw restarts");
  cana->add_option("--face-restarts", an.analyses.face_restarts, "face search restarts");
  cana->add_option("--seed", an.analyses.seed, "seed (POSMAP_SEED overrides the default 0)");
  cana->add_option("--json", an.json_out, "write the machine-readable report here");
  add_tolerance_flags(cana, an.analyses.tol);

  TabulateOptions tab;
  CLI::App* ctab = app.add_subcommand(
      "tabulate", "dump a map's quadratic restriction on the reconstruction grid");
  ctab->set_help_flag("--help", "print help");
  ctab->add_option("--in", tab.in, "map file")->required();
  ctab->add_option("--out", tab.out, "tabulation output path")->required();
  ctab->add_option("--float-format", tab.float_format, "decimal|hex")
      ->check(CLI::IsMember({"decimal", "hex"}));

  ReconstructOptions rec;
  CLI::App* crec =
      app.add_subcommand("reconstruct", "rebuild a map from its quadratic restriction");
  crec->set_help_flag("--help", "print help");
  crec->add_option("--builtin", rec.builtin, "built-in function: tracemap|choi");
  crec->add_option("--table", rec.table, "tabulation file");
  crec->add_option("--k", rec.k, "input dimension for builtins");
  crec->add_option("--h", rec.h, "output dimension for builtins (defaults to k)");
  crec->add_option("--out", rec.out, "output map path")->required();
  crec->add_option("--float-format", rec.float_format, "decimal|hex")
      ->check(CLI::IsMember({"decimal", "hex"}));
  add_tolerance_flags(crec, rec.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (cana->parsed()) {
      if (all) an.analyses.enable_all();
      return cmd_analyze(an);
    }
    if (ctab->parsed()) return cmd_tabulate(tab);
    if (crec->parsed()) return cmd_reconstruct(rec);
  } catch (const posmap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
