#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <unistd.h>

#include "commands.hpp"
#include "doctest.h"
#include "strip/instances.hpp"

using namespace stripack;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("stripack_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F, typename Flags>
Run Call(F cmd, const Flags& flags) {
  std::ostringstream out, err;
  const int code = cmd(flags, out, err);
  return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen, pack, verify smoke") {
  TempDir dir;
  GenFlags g;
  g.width = 64;
  g.height = 64;
  g.seed = 7;
  g.out = dir / "inst.txt";
  REQUIRE(Call(CmdGen, g).code == kOk);

  PackFlags p;
  p.in = g.out;
  p.out = dir / "pack.txt";
  const Run pr = Call(CmdPack, p);
  CHECK(pr.code == kOk);
  CHECK(pr.out.find("height") != std::string::npos);

  VerifyFlags v;
  v.in = p.out;
  const Run vr = Call(CmdVerify, v);
  CHECK(vr.code == kOk);
  CHECK(vr.out.rfind("ok", 0) == 0);
}

TEST_CASE("guided pack through files") {
  TempDir dir;
  GenFlags g;
  g.width = 100;
  g.height = 100;
  g.structured = true;
  g.seed = 3;
  g.out = dir / "inst.txt";
  g.witness_out = dir / "witness.txt";
  g.oracle_out = dir / "oracle.txt";
  REQUIRE(Call(CmdGen, g).code == kOk);

  PackFlags p;
  p.in = g.out;
  p.mode = "guided";
  p.witness = g.witness_out;
  p.oracle = g.oracle_out;
  p.out = dir / "pack.txt";
  const Run pr = Call(CmdPack, p);
  CHECK(pr.code == kOk);
  VerifyFlags v;
  v.in = p.out;
  CHECK(Call(CmdVerify, v).code == kOk);

  PackFlags missing = p;
  missing.oracle.clear();
  CHECK(Call(CmdPack, missing).code == kUsage);
}

TEST_CASE("outputs are byte-identical across runs") {
  TempDir dir;
  for (const std::string kind : {"guillotine", "uniform", "partition"}) {
    GenFlags g;
    g.kind = kind;
    g.seed = 11;
    g.n = 30;
    g.out = dir / "a.txt";
    REQUIRE(Call(CmdGen, g).code == kOk);
    g.out = dir / "b.txt";
    REQUIRE(Call(CmdGen, g).code == kOk);
    CHECK(Slurp(dir / "a.txt") == Slurp(dir / "b.txt"));

    PackFlags p;
    p.in = dir / "a.txt";
    p.out = dir / "pa.txt";
    REQUIRE(Call(CmdPack, p).code == kOk);
    p.out = dir / "pb.txt";
    REQUIRE(Call(CmdPack, p).code == kOk);
    CHECK(Slurp(dir / "pa.txt") == Slurp(dir / "pb.txt"));

    RenderFlags r;
    r.in = dir / "pa.txt";
    r.opt = 64;
    const Run ra = Call(CmdRender, r);
    const Run rb = Call(CmdRender, r);
    REQUIRE(ra.code == kOk);
    CHECK(ra.out == rb.out);
    // One rect element per placement, plus the background.
    std::istringstream in(Slurp(dir / "pa.txt"));
    const strip::PackingFile pf = strip::ReadPackingFile(in);
    const std::regex placed("<rect id=\"r");
    const auto n = std::distance(std::sregex_iterator(ra.out.begin(), ra.out.end(), placed),
                                 std::sregex_iterator());
    CHECK(n == static_cast<long>(pf.packing.placements.size()));
  }
}

TEST_CASE("verify reports invalid packings") {
  TempDir dir;
  {
    std::ofstream f(dir / "bad.txt");
    f << "strip 10 2 0\n0 4 5\n1 4 5\nplace 0 0 0 0\nplace 1 3 0 0\n";
  }
  VerifyFlags v;
  v.in = dir / "bad.txt";
  const Run r = Call(CmdVerify, v);
  CHECK(r.code == kViolation);
  CHECK(r.out.find("violation: ") == 0);
  CHECK(r.out.find("\ninvalid height=5") != std::string::npos);

  v.in = dir / "nope.txt";
  const Run missing = Call(CmdVerify, v);
  CHECK(missing.code != kOk);
  CHECK_FALSE(missing.err.empty());

  {
    std::ofstream f(dir / "garbage.txt");
    f << "strip ten\n";
  }
  v.in = dir / "garbage.txt";
  const Run garbage = Call(CmdVerify, v);
  CHECK(garbage.code == kUsage);
  CHECK(garbage.err.find("line 1") != std::string::npos);
}

TEST_CASE("certify suites") {
  CertifyFlags c;
  c.lemma = "repack";
  c.trials = 200;
  c.algo.eps = "1/8";
  const Run r = Call(CmdCertify, c);
  CHECK(r.code == kOk);
  CHECK(r.out.find("repack") != std::string::npos);
  c.lemma = "all";
  c.trials = 50;
  CHECK(Call(CmdCertify, c).code == kOk);
  c.lemma = "nonsense";
  CHECK(Call(CmdCertify, c).code == kUsage);
  c.lemma = "repack";
  c.algo.eps = "2/3";
  CHECK(Call(CmdCertify, c).code == kUsage);
}

TEST_CASE("bench rows are ordered by instance id") {
  BenchFlags b;
  b.trials = 6;
  b.lines = true;
  b.mode = "both";
  b.jobs = 3;
  const Run par = Call(CmdBench, b);
  REQUIRE(par.code == kOk);
  b.jobs = 1;
  const Run seq = Call(CmdBench, b);
  REQUIRE(seq.code == kOk);
  const std::regex ms(" ms=[0-9.]+");
  CHECK(std::regex_replace(par.out, ms, "") == std::regex_replace(seq.out, ms, ""));
  CHECK(par.out.find("g000000") < par.out.find("g000005"));
}
