#include <CLI11.hpp>
#include <iostream>

#include <hyplat/errors.hpp>

#include "commands.hpp"

using namespace hyplat;
using namespace hyplat::cli;

int main(int argc, char** argv) {
  CLI::App app{"hyplat: exact arithmetic for hyperbolic reflection groups and "
               "arithmetic lattices"};
  app.require_subcommand(1);

  AnalyzeOpts analyze_opts;
  auto* analyze = app.add_subcommand(
      "analyze", "Vinberg arithmeticity analysis of a Coxeter diagram");
  analyze->add_option("diagram", analyze_opts.path, "diagram JSON file")
      ->required();
  analyze->add_flag("--json", analyze_opts.json, "JSON output");
  analyze->add_flag("--timings", analyze_opts.timings, "include timings");
  analyze->add_option("--isotropy-height", analyze_opts.isotropy_height,
                      "height bound for the rational isotropy search")
      ->default_val(64);

  FixsubOpts fixsub_opts;
  auto* fixsub = app.add_subcommand(
      "fixsub",
      "fixed subspace of a diagram automorphism, centralizer words and "
      "induced product orders");
  fixsub->add_option("diagram", fixsub_opts.path, "diagram JSON file")
      ->required();
  fixsub->add_option("--perm", fixsub_opts.perm,
                     "automorphism in cycle notation, e.g. \"(a b)(c d)\"")
      ->required();
  fixsub->add_option("--generators", fixsub_opts.generators,
                     "three comma-separated words inducing involutions");
  fixsub->add_option("--centralizer-maxlen", fixsub_opts.centralizer_maxlen,
                     "BFS word-length bound")
      ->default_val(6);
  fixsub->add_option("--order-cap", fixsub_opts.order_cap,
                     "order detection cap")
      ->default_val(512);
  fixsub->add_flag("--json", fixsub_opts.json, "JSON output");
  fixsub->add_flag("--timings", fixsub_opts.timings, "include timings");

  OrderOpts order_opts;
  auto* order =
      app.add_subcommand("order", "order of a word in the reflection group");
  order->add_option("diagram", order_opts.path, "diagram JSON file")
      ->required();
  order->add_option("--word", order_opts.word, "word in node names")
      ->required();
  order->add_option("--cap", order_opts.cap, "order detection cap")
      ->default_val(512);
  order->add_flag("--json", order_opts.json, "JSON output");

  auto* quat = app.add_subcommand("quat", "quaternion algebra utilities");
  quat->require_subcommand(1);

  QuatSymbolOpts sym_opts;
  auto* sym = quat->add_subcommand(
      "symbol", "local Hilbert symbols and the division verdict");
  sym->add_option("-a", sym_opts.a, "first parameter (rational)")->required();
  sym->add_option("-b", sym_opts.b, "second parameter (rational)")->required();
  sym->add_flag("--json", sym_opts.json, "JSON output");

  QuatPslOpts psl_opts;
  auto* psl = quat->add_subcommand(
      "psl-involution", "traceless projective involution test");
  psl->add_option("--algebra", psl_opts.algebra, "algebra literal D(a,b)")
      ->required();
  psl->add_option("-q", psl_opts.q, "quaternion coordinates w,x,y,z")
      ->required();
  psl->add_flag("--json", psl_opts.json, "JSON output");

  QuatSplitOpts split_opts;
  auto* split = quat->add_subcommand(
      "split", "per-embedding split/ramified report and division verdict");
  split->add_option("--algebra", split_opts.algebra, "algebra literal D(a,b)")
      ->required();
  split->add_flag("--json", split_opts.json, "JSON output");

  auto* skew = app.add_subcommand("skewherm", "skew-Hermitian form utilities");
  skew->require_subcommand(1);

  SkewAnalyzeOpts skew_an_opts;
  auto* skew_an = skew->add_subcommand(
      "analyze", "validation, per-embedding signatures, admissibility");
  skew_an->add_option("form", skew_an_opts.path, "form JSON file")->required();
  skew_an->add_flag("--json", skew_an_opts.json, "JSON output");

  SkewInvolutionOpts skew_inv_opts;
  auto* skew_inv = skew->add_subcommand(
      "involution", "type II involution fixing a submodule");
  skew_inv->add_option("form", skew_inv_opts.path, "form JSON file")
      ->required();
  skew_inv
      ->add_option("--submodule", skew_inv_opts.submodule_path,
                   "submodule basis JSON file")
      ->required();
  skew_inv->add_flag("--json", skew_inv_opts.json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(analyze_opts);
    if (*fixsub) return cmd_fixsub(fixsub_opts);
    if (*order) return cmd_order(order_opts);
    if (*sym) return cmd_quat_symbol(sym_opts);
    if (*psl) return cmd_quat_psl(psl_opts);
    if (*split) return cmd_quat_split(split_opts);
    if (*skew_an) return cmd_skewherm_analyze(skew_an_opts);
    if (*skew_inv) return cmd_skewherm_involution(skew_inv_opts);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
