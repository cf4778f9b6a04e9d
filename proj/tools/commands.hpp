#pragma once

// Subcommands of the stripack tool. Each returns a process exit code and
// writes diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace stripack {

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kResource = 3 };

struct AlgoFlags {
  std::string eps = "1/4";
  std::string alpha = "1/3";
  int k = 1;
  std::string ladder = "power";  // power | geometric
  bool strict = false;
};

struct GenFlags {
  std::string kind = "guillotine";  // guillotine | uniform | partition
  bool structured = false;
  int64_t width = 64;
  int64_t height = 64;
  int n = 40;
  uint64_t seed = 1;
  std::string out;
  std::string witness_out;
  std::string oracle_out;
  AlgoFlags algo;
};

struct PackFlags {
  std::string in;
  std::string mode = "heuristic";  // heuristic | guided
  std::string witness;
  std::string oracle;
  int64_t opt = 0;  // 0: witness height
  std::string out;
  AlgoFlags algo;
};

struct VerifyFlags {
  std::string in;
};

struct CertifyFlags {
  std::string lemma = "all";
  int64_t trials = 1000;
  uint64_t seed = 1;
  AlgoFlags algo;
};

struct BenchFlags {
  std::string mode = "heuristic";  // heuristic | guided | both
  int64_t trials = 20;
  int64_t width = 100;
  int64_t height = 100;
  int n = 40;
  uint64_t seed = 1;
  int jobs = 1;
  bool lines = false;
  std::string out;
  AlgoFlags algo;
};

struct RenderFlags {
  std::string in;
  std::string out;
  int64_t cell = 4;
  int64_t opt = 0;  // > 0 colors rects by class
  AlgoFlags algo;
};

int CmdGen(const GenFlags& f, std::ostream& out, std::ostream& err);
int CmdPack(const PackFlags& f, std::ostream& out, std::ostream& err);
int CmdVerify(const VerifyFlags& f, std::ostream& out, std::ostream& err);
int CmdCertify(const CertifyFlags& f, std::ostream& out, std::ostream& err);
int CmdBench(const BenchFlags& f, std::ostream& out, std::ostream& err);
int CmdRender(const RenderFlags& f, std::ostream& out, std::ostream& err);

}  // namespace stripack
