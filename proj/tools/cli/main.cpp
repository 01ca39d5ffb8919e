// ringexp: expansivity of ring automorphisms and finite-space homeomorphisms.

#include "commands.hpp"

#include "ringexp/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ringexp;
using namespace ringexp::cli;

namespace {

void add_input(CLI::App* sub, JobSpec& job, const char* inline_flag) {
  sub->add_option("-i,--input", job.input, "definition file (JSON), - for stdin");
  sub->add_option(inline_flag, job.inline_json, "inline JSON definition");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringexp - expansive automorphisms of finite and semilocal rings"};
  app.require_subcommand(1);
  app.fallthrough();
  JobSpec job;
  app.add_option("--format", job.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", job.seed, "seed for randomized suites");
  app.add_flag("--check-certificate", job.check_certificate, "revalidate the emitted certificate");
  app.add_option("--bounds.order", job.bounds.max_order, "largest ring order");
  app.add_option("--bounds.automorphisms", job.bounds.max_automorphism_search, "largest order for automorphism enumeration");
  app.add_option("--bounds.ideals", job.bounds.max_ideals, "largest ideal lattice");
  app.add_option("--bounds.generator-ideals", job.bounds.max_generator_ideals, "largest lattice for generator enumeration");
  app.add_option("--bounds.generators", job.bounds.max_generators, "largest generator family count");
  app.add_option("--bounds.space-points", job.bounds.max_space_points, "largest space for cover enumeration");
  app.add_option("--bounds.covers", job.bounds.max_covers, "largest cover count");
  app.add_option("--bounds.adversaries", job.bounds.max_adversaries, "largest symbolic adversary pool");

  auto* analyze = app.add_subcommand("analyze", "ideals, maximal ideals, decomposition and automorphism census");
  add_input(analyze, job, "--ring");

  std::string mode = "expansive", automorphism = "identity", candidate;
  std::size_t n_max = 12;
  std::uint32_t adversary_bound = 3;
  auto* exp = app.add_subcommand("expansivity", "decide expansivity of an automorphism");
  add_input(exp, job, "--ring");
  exp->add_option("-m,--mode", mode, "expansive, positive or zero")
      ->check(CLI::IsMember({"expansive", "positive", "zero"}));
  exp->add_option("-a,--automorphism", automorphism, "identity, frobenius, swap:i,j or an image list");
  exp->add_option("-c,--candidate", candidate, "test one generator instead of searching");
  exp->add_option("--n-max", n_max, "symbolic oracle window bound");
  exp->add_option("--adversary-bound", adversary_bound, "symbolic oracle exponent bound");

  std::string exporter = "json";
  auto* spec = app.add_subcommand("spec", "prime spectrum as a finite space");
  add_input(spec, job, "--ring");
  spec->add_option("-e,--export", exporter, "json, dot or lattice-dot")
      ->check(CLI::IsMember({"json", "dot", "lattice-dot"}));

  std::string space_mode = "positive";
  auto* space = app.add_subcommand("space", "expansivity of a finite-space homeomorphism");
  add_input(space, job, "--space");
  space->add_option("-m,--mode", space_mode, "expansive, positive, single_power, minimal or extension")
      ->check(CLI::IsMember({"expansive", "positive", "single_power", "minimal", "extension"}));

  std::string check = "positive";
  std::int64_t shift = 1, window = 5;
  std::size_t chain_n = 0;
  auto* chain = app.add_subcommand("chain", "cube-root homeomorphism of [-1,1]");
  chain->add_option("--check", check, "positive, sweep or minimal")->check(CLI::IsMember({"positive", "sweep", "minimal"}));
  chain->add_option("--shift", shift, "+1 for the cube root, -1 for x^3");
  chain->add_option("--m", window, "adversary cut window");
  chain->add_option("--n-max", chain_n, "window bound (default 2m+2)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("suite", suite, "suite name or number, or all");

  auto* chk = app.add_subcommand("check", "validate a certificate payload");
  add_input(chk, job, "--payload");

  CLI11_PARSE(app, argc, argv);

  try {
    Outcome out;
    if (*analyze) out = cmd_analyze(job);
    else if (*exp) out = cmd_expansivity(job, mode, automorphism, candidate, n_max, adversary_bound);
    else if (*spec) out = cmd_spec(job, exporter);
    else if (*space) out = cmd_space(job, space_mode);
    else if (*chain) out = cmd_chain(job, check, shift, window, chain_n);
    else if (*verify) out = cmd_verify(job, suite);
    else out = cmd_check(job);
    if (!out.text.empty()) std::cout << out.text;
    else std::cout << out.doc.dump(2) << "\n";
    return out.code;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input: " << e.what() << "\n";
    return kInputError;
  }
}
