#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "strip/instances.hpp"
#include "strip/oracle.hpp"
#include "strip/pipeline.hpp"
#include "strip/report.hpp"
#include "strip/suites.hpp"
#include "strip/svg.hpp"

namespace stripack {

using namespace strip;

namespace {

// Bad input on the command line or in a file; maps to kUsage.
class UsageError : public Error {
 public:
  using Error::Error;
};

PipelineConfig MakeConfig(const AlgoFlags& a, Mode mode) {
  PipelineConfig cfg;
  try {
    cfg.eps = ParseRational(a.eps);
    cfg.alpha = ParseRational(a.alpha);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  cfg.k = a.k;
  if (a.ladder == "power") {
    cfg.ladder = LadderKind::kPower;
  } else if (a.ladder == "geometric") {
    cfg.ladder = LadderKind::kGeometric;
  } else {
    throw UsageError("unknown ladder: " + a.ladder);
  }
  cfg.strictness = a.strict ? Strictness::kStrict : Strictness::kRelaxed;
  cfg.mode = mode;
  try {
    cfg.Validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// Writes to `path`, or to `fallback` when the path is empty.
void Emit(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

template <typename Fn>
int Guard(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kViolation;
  }
}

Instance LoadInstance(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  try {
    return ReadInstanceFile(path);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

PackingFile LoadPacking(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  try {
    return ReadPackingFile(path);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

GuidedResult RunGuidedOnWitness(const GuillotineWitness& w, const PipelineConfig& cfg) {
  const ClassParams params = ChooseParams(w.instance, w.opt, cfg);
  const BoxPartitionOracle oracle = DeriveOracleFromWitness(w, params);
  PipelineConfig fixed = cfg;
  fixed.params = params;
  return RunGuided(w.instance, w.packing, w.opt, oracle, fixed);
}

}  // namespace

int CmdGen(const GenFlags& f, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (f.width < 1 || f.height < 1 || f.n < 1) throw UsageError("sizes must be positive");
    if (f.kind == "guillotine") {
      GuillotineOptions opts;
      if (f.structured) opts.style = CutStyle::kStructured;
      const GuillotineWitness w = GenGuillotine(f.width, f.height, 1, f.n, f.seed, opts);
      Emit(f.out, InstanceToString(w.instance), out);
      if (!f.witness_out.empty()) {
        Emit(f.witness_out, PackingToString(w.instance, w.packing), out);
      }
      if (!f.oracle_out.empty()) {
        const PipelineConfig cfg = MakeConfig(f.algo, Mode::kGuided);
        const ClassParams params = ChooseParams(w.instance, w.opt, cfg);
        Emit(f.oracle_out, OracleToString(DeriveOracleFromWitness(w, params)), out);
      }
      return int{kOk};
    }
    if (!f.witness_out.empty() || !f.oracle_out.empty()) {
      throw UsageError("--witness-out and --oracle-out need --guillotine");
    }
    if (f.kind == "uniform") {
      Emit(f.out,
           InstanceToString(GenUniform(f.n, f.width, Range{1, f.width}, Range{1, f.height}, f.seed)),
           out);
      return int{kOk};
    }
    if (f.kind == "partition") {
      Emit(f.out, InstanceToString(GenPlantedPartition(f.n, f.height, f.seed).instance), out);
      return int{kOk};
    }
    throw UsageError("unknown generator: " + f.kind);
  });
}

int CmdPack(const PackFlags& f, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const Instance inst = LoadInstance(f.in);
    if (f.mode == "heuristic") {
      MakeConfig(f.algo, Mode::kHeuristic);
      const HeuristicResult r = RunHeuristic(inst);
      Emit(f.out, PackingToString(inst, r.packing), out);
      (f.out.empty() ? err : out) << FormatHeuristicReport(r);
      return int{kOk};
    }
    if (f.mode != "guided") throw UsageError("unknown mode: " + f.mode);
    if (f.witness.empty() || f.oracle.empty()) {
      throw UsageError("guided mode needs --witness and --oracle");
    }
    const PipelineConfig cfg = MakeConfig(f.algo, Mode::kGuided);
    const PackingFile witness = LoadPacking(f.witness);
    if (!(witness.instance == inst)) throw UsageError("witness does not match the instance");
    BoxPartitionOracle oracle;
    try {
      oracle = ReadOracleFile(f.oracle);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const int64_t opt = f.opt > 0 ? f.opt : PackingHeight(inst, witness.packing);
    const GuidedResult r = RunGuided(inst, witness.packing, opt, oracle, cfg);
    Emit(f.out, PackingToString(inst, r.packing), out);
    (f.out.empty() ? err : out) << FormatGuidedReport(r);
    return r.cert.holds ? int{kOk} : int{kViolation};
  });
}

int CmdVerify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const PackingFile pf = LoadPacking(f.in);
    const VerificationReport vr = VerifyPacking(pf.instance, pf.packing);
    for (const Violation& v : vr.violations) out << "violation: " << v.message << '\n';
    if (!vr.complete) out << "violation: not every rect is placed exactly once\n";
    const bool ok = vr.ok && vr.complete;
    const LowerBounds lb = ComputeLowerBounds(pf.instance);
    out << (ok ? "ok" : "invalid") << " height=" << vr.height << " lb=" << lb.Best() << '\n';
    return ok ? int{kOk} : int{kViolation};
  });
}

int CmdCertify(const CertifyFlags& f, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const PipelineConfig cfg = MakeConfig(f.algo, Mode::kGuided);
    if (f.trials < 1) throw UsageError("--trials must be positive");
    std::vector<std::string> names;
    if (f.lemma == "all") {
      names = SuiteNames();
    } else {
      const auto all = SuiteNames();
      if (std::find(all.begin(), all.end(), f.lemma) == all.end()) {
        throw UsageError("unknown suite: " + f.lemma);
      }
      names.push_back(f.lemma);
    }
    bool ok = true;
    for (const std::string& name : names) {
      const SuiteResult r = RunSuite(name, f.trials, f.seed, cfg.eps, cfg.alpha);
      out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " trials=" << r.trials
          << " violations=" << r.violations << '\n';
      for (const std::string& n : r.notes) out << "  " << n << '\n';
      for (const std::string& x : r.failures) out << "  failure: " << x << '\n';
      ok = ok && r.ok();
    }
    return ok ? int{kOk} : int{kViolation};
  });
}

int CmdBench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (f.mode != "heuristic" && f.mode != "guided" && f.mode != "both") {
      throw UsageError("unknown mode: " + f.mode);
    }
    if (f.trials < 1 || f.jobs < 1) throw UsageError("--trials and --jobs must be positive");
    const PipelineConfig cfg = MakeConfig(f.algo, Mode::kGuided);
    const bool heur = f.mode != "guided";
    const bool guided = f.mode != "heuristic";

    RunReport report;
    std::mutex mu;
    std::atomic<int64_t> next{0};
    auto worker = [&] {
      for (int64_t i = next++; i < f.trials; i = next++) {
        GuillotineOptions opts{CutStyle::kStructured, 1};
        const uint64_t seed = f.seed + static_cast<uint64_t>(i);
        const GuillotineWitness w = GenGuillotine(f.width, f.height, 1, f.n, seed, opts);
        char id[32];
        std::snprintf(id, sizeof id, "g%06lld", static_cast<long long>(i));
        const LowerBounds lb = ComputeLowerBounds(w.instance);
        std::vector<ReportRow> rows;
        if (heur) {
          const auto t0 = std::chrono::steady_clock::now();
          const HeuristicResult r = RunHeuristic(w.instance);
          const auto t1 = std::chrono::steady_clock::now();
          rows.push_back(ReportRow{id, "heuristic", r.height, lb, r.ratio,
                                   std::chrono::duration<double, std::milli>(t1 - t0).count(),
                                   "algorithm=" + r.algorithm});
        }
        if (guided) {
          const auto t0 = std::chrono::steady_clock::now();
          ReportRow row{id, "guided", 0, lb, Rational(0), 0, ""};
          try {
            const GuidedResult r = RunGuidedOnWitness(w, cfg);
            row.height = r.height;
            row.ratio = Rational(r.height, std::max<int64_t>(1, lb.Best()));
            std::ostringstream s;
            s << "opt=" << w.opt << " c=" << ToString(r.cert.c)
              << " holds=" << (r.cert.holds ? "yes" : "no")
              << " containers=" << r.containers.size()
              << " vboxes=" << r.vertical_boxes.size();
            row.stats = s.str();
          } catch (const Error& e) {
            row.stats = std::string("error: ") + e.what();
          }
          const auto t1 = std::chrono::steady_clock::now();
          row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          rows.push_back(std::move(row));
        }
        std::lock_guard<std::mutex> lock(mu);
        for (ReportRow& r : rows) report.rows.push_back(std::move(r));
      }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < f.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    Emit(f.out, f.lines ? report.Lines() : report.Table(), out);
    bool ok = true;
    for (const ReportRow& r : report.rows) ok = ok && r.stats.rfind("error", 0) != 0;
    return ok ? int{kOk} : int{kViolation};
  });
}

int CmdRender(const RenderFlags& f, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const PackingFile pf = LoadPacking(f.in);
    RenderOptions opts;
    opts.cell = f.cell;
    if (f.cell < 1) throw UsageError("--cell must be positive");
    if (f.opt > 0) {
      opts.params = ChooseParams(pf.instance, f.opt, MakeConfig(f.algo, Mode::kGuided));
    }
    Emit(f.out, RenderSvg(pf.instance, pf.packing, opts), out);
    return int{kOk};
  });
}

}  // namespace stripack
