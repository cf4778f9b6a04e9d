// stripack: generate, pack, verify, certify, bench and render strip packings.
// Every flag can also come from STRIPACK_<FLAG> (upper case, dashes as
// underscores); explicit flags win.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

std::string EnvName(const std::string& flag) {
  std::string out = "STRIPACK_";
  for (char c : flag) out += c == '-' ? '_' : static_cast<char>(std::toupper(c));
  return out;
}

template <typename T>
CLI::Option* Flag(CLI::App* app, const std::string& name, T& target, const std::string& help) {
  return app->add_option("--" + name, target, help)->envname(EnvName(name))->capture_default_str();
}

void AddAlgo(CLI::App* app, stripack::AlgoFlags& a) {
  Flag(app, "eps", a.eps, "accuracy parameter p/q");
  Flag(app, "alpha", a.alpha, "tall threshold p/q in [1/3, 1/2)");
  Flag(app, "k", a.k, "medium-area exponent");
  Flag(app, "ladder", a.ladder, "threshold ladder: power | geometric");
  app->add_flag("--strict", a.strict, "fail when a parameter constraint is violated")
      ->envname(EnvName("strict"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strip packing toolkit"};
  app.require_subcommand(1);

  stripack::GenFlags gen;
  CLI::App* g = app.add_subcommand("gen", "generate an instance");
  g->add_flag("--guillotine{guillotine},--uniform{uniform},--partition{partition}", gen.kind,
              "generator (default guillotine)");
  g->add_flag("--structured", gen.structured, "thin-slab guillotine cuts");
  Flag(g, "width", gen.width, "strip width");
  Flag(g, "height", gen.height, "witness height or maximum rect height");
  Flag(g, "n", gen.n, "cut count, rect count or partition size");
  Flag(g, "seed", gen.seed, "random seed");
  Flag(g, "out", gen.out, "instance file (stdout if empty)");
  Flag(g, "witness-out", gen.witness_out, "guillotine witness packing file");
  Flag(g, "oracle-out", gen.oracle_out, "box partition derived from the witness");
  AddAlgo(g, gen.algo);

  stripack::PackFlags pack;
  CLI::App* p = app.add_subcommand("pack", "pack an instance");
  Flag(p, "in", pack.in, "instance file");
  Flag(p, "mode", pack.mode, "heuristic | guided");
  Flag(p, "witness", pack.witness, "witness packing file (guided)");
  Flag(p, "oracle", pack.oracle, "box partition file (guided)");
  Flag(p, "opt", pack.opt, "optimum height (default: witness height)");
  Flag(p, "out", pack.out, "packing file (stdout if empty)");
  AddAlgo(p, pack.algo);

  stripack::VerifyFlags verify;
  CLI::App* v = app.add_subcommand("verify", "check a packing file");
  Flag(v, "in", verify.in, "packing file");

  stripack::CertifyFlags certify;
  CLI::App* c = app.add_subcommand("certify", "run the property suites");
  Flag(c, "lemma", certify.lemma, "nfdh-height | nfdh-area | repack | slices | integral | all");
  Flag(c, "trials", certify.trials, "trials per suite");
  Flag(c, "seed", certify.seed, "random seed");
  AddAlgo(c, certify.algo);

  stripack::BenchFlags bench;
  CLI::App* b = app.add_subcommand("bench", "run a generated corpus");
  Flag(b, "mode", bench.mode, "heuristic | guided | both");
  Flag(b, "trials", bench.trials, "instances");
  Flag(b, "width", bench.width, "strip width");
  Flag(b, "height", bench.height, "witness height");
  Flag(b, "n", bench.n, "guillotine cuts per instance");
  Flag(b, "seed", bench.seed, "first seed");
  Flag(b, "jobs", bench.jobs, "worker threads");
  Flag(b, "out", bench.out, "report file (stdout if empty)");
  b->add_flag("--lines", bench.lines, "one key=value line per row");
  AddAlgo(b, bench.algo);

  stripack::RenderFlags render;
  CLI::App* r = app.add_subcommand("render", "render a packing file as SVG");
  Flag(r, "in", render.in, "packing file");
  Flag(r, "out", render.out, "SVG file (stdout if empty)");
  Flag(r, "cell", render.cell, "pixels per unit");
  Flag(r, "opt", render.opt, "optimum height; colors rects by class when set");
  AddAlgo(r, render.algo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? stripack::kOk : stripack::kUsage;
  }

  if (g->parsed()) return stripack::CmdGen(gen, std::cout, std::cerr);
  if (p->parsed()) return stripack::CmdPack(pack, std::cout, std::cerr);
  if (v->parsed()) return stripack::CmdVerify(verify, std::cout, std::cerr);
  if (c->parsed()) return stripack::CmdCertify(certify, std::cout, std::cerr);
  if (b->parsed()) return stripack::CmdBench(bench, std::cout, std::cerr);
  if (r->parsed()) return stripack::CmdRender(render, std::cout, std::cerr);
  return stripack::kUsage;
}
