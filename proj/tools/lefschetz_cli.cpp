// lefschetz: analyze fibration specs, classify hypersurfaces, inspect braid words.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lefschetz.hpp"

namespace fs = std::filesystem;
using namespace lefschetz;

#ifndef LEFSCHETZ_DATA_DIR
#define LEFSCHETZ_DATA_DIR "data"
#endif

namespace {

struct Job {
  std::string name;    // output file stem
  std::string report;  // rendered
  int exit = kExitOk;
  std::string error;
};

std::string readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedDocument, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Bare names such as "empty_g2" resolve against the shipped data directory.
fs::path resolveSpec(const std::string& arg) {
  for (fs::path p : {fs::path(arg), fs::path(arg + ".json"), fs::path(LEFSCHETZ_DATA_DIR) / (arg + ".json")})
    if (fs::is_regular_file(p)) return p;
  return arg;
}

void writeAtomically(const fs::path& target, const std::string& text) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

Job runAnalysis(const std::string& name, const FibrationSpec& spec, const LiftData* lifts, const std::string& bytes,
                const AnalysisOptions& options, bool machine, bool strict) {
  Job job{name, {}, kExitOk, {}};
  try {
    const auto report = analyze(spec, lifts, options);
    const auto digest = inputDigest(bytes);
    job.report = machine ? machineReport(report, digest) : textReport(report, digest);
    job.exit = exitCodeFor(report, strict);
  } catch (const Error& e) {
    job.error = e.what();
    job.exit = kExitInvalid;
  }
  return job;
}

int emit(std::vector<Job>& jobs, const std::string& outDir, bool machine) {
  int code = kExitOk;
  for (auto& job : jobs) {
    if (!job.error.empty()) std::cerr << job.name << ": " << job.error << "\n";
    if (!job.report.empty()) {
      if (outDir.empty()) {
        std::cout << job.report;
      } else {
        fs::create_directories(outDir);
        writeAtomically(fs::path(outDir) / (job.name + (machine ? ".json" : ".txt")), job.report);
      }
    }
    code = std::max(code, job.exit);
  }
  return code;
}

std::vector<int> parseWord(const std::vector<std::string>& tokens) {
  std::vector<int> word;
  for (const auto& t : tokens) {
    std::istringstream ss(t);
    int x = 0;
    ss >> x;
    if (!ss || !ss.eof()) throw CLI::ValidationError("word", "'" + t + "' is not an integer");
    word.push_back(x);
  }
  return word;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lefschetz fibration and spherical braid calculator"};
  app.require_subcommand(1);

  // analyze
  auto* analyzeCmd = app.add_subcommand("analyze", "invariants of fibration specs");
  std::vector<std::string> specs;
  std::string demo, format = "text", outDir;
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::size_t budget = kDefaultBudget;
  bool strict = false;
  analyzeCmd->add_option("--spec", specs, "spec document (repeatable)");
  analyzeCmd->add_option("--demo", demo, "built-in family")->check(CLI::IsMember({"mn"}));
  analyzeCmd->add_option("--n", n, "twisting power for --demo mn")->check(CLI::Range(std::int64_t{0}, std::int64_t{1000000}));
  analyzeCmd->add_option("--m", m, "[Y] . beta, left symbolic when absent");
  analyzeCmd->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  analyzeCmd->add_flag("--strict", strict, "fail (exit 3) on undecided results");
  analyzeCmd->add_option("--budget", budget, "rewrite node limit")->check(CLI::PositiveNumber);
  analyzeCmd->add_option("--out", outDir, "write one report per input into DIR");

  // classify-hypersurface
  auto* classifyCmd = app.add_subcommand("classify-hypersurface", "degree-k hypersurface of CP3");
  std::int64_t k = 0;
  classifyCmd->add_option("k", k, "degree")->required()->check(CLI::PositiveNumber);

  // braid
  auto* braidCmd = app.add_subcommand("braid", "braid word utilities");
  braidCmd->require_subcommand(1);
  int strands = 0;
  std::string ambientName = "planar";
  std::vector<std::string> wordTokens;
  for (auto name : {"perm", "degree", "liftclass"}) {
    auto* sub = braidCmd->add_subcommand(name);
    sub->add_option("--strands", strands, "number of strands")->required()->check(CLI::Range(2, 1000));
    sub->add_option("--ambient", ambientName, "planar or spherical")->check(CLI::IsMember({"planar", "spherical"}));
    sub->add_option("word", wordTokens, "letters: i for sigma_i, -i for its inverse");
    sub->allow_extras(false);
  }
  app.positionals_at_end(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kExitUsage;
  }

  try {
    if (*analyzeCmd) {
      if (specs.empty() == demo.empty()) {
        std::cerr << "analyze: give --spec FILE or --demo mn (not both)\n";
        return kExitUsage;
      }
      const bool machine = format == "machine";
      AnalysisOptions options;
      options.lift.budget = budget;
      options.m = m;
      std::vector<Job> jobs;
      if (!demo.empty()) {
        const auto table = standardCurveTable();
        const auto spec = familyMn(n, table);
        options.provenance = Provenance::mn(n);
        options.totalSpaceName = "M(" + std::to_string(n) + ")";
        jobs.push_back(runAnalysis("mn_" + std::to_string(n), spec, &table.lifts, serializeSpec(spec, &table.lifts),
                                   options, machine, strict));
      } else {
        std::vector<std::future<Job>> pending;
        for (const auto& arg : specs) {
          pending.push_back(std::async(std::launch::async, [&, arg] {
            const auto path = resolveSpec(arg);
            try {
              const auto bytes = readFile(path);
              const auto doc = parseSpecDocument(bytes);
              return runAnalysis(path.stem().string(), doc.spec, &doc.lifts, bytes, options, machine, strict);
            } catch (const Error& e) {
              return Job{path.stem().string(), {}, kExitInvalid, e.what()};
            }
          }));
        }
        for (auto& f : pending) jobs.push_back(f.get());
      }
      return emit(jobs, outDir, machine);
    }

    if (*classifyCmd) {
      const auto d = classify(k);
      std::cout << hypersurfaceText(d);
      return d.diffeoType == DelPezzoType::Unsupported ? kExitUnsupported : kExitOk;
    }

    for (auto* sub : braidCmd->get_subcommands()) {
      const std::string what = sub->get_name();
      const bool liftclass = what == "liftclass";
      const Ambient ambient = liftclass || ambientName == "spherical" ? Ambient::Spherical : Ambient::Planar;
      BraidWord w;
      try {
        w = BraidWord(strands, ambient, parseWord(wordTokens));
      } catch (const Error& e) {
        std::cerr << "braid: " << e.what() << "\n";
        return kExitUsage;
      } catch (const CLI::ValidationError& e) {
        std::cerr << "braid: " << e.what() << "\n";
        return kExitUsage;
      }
      if (what == "perm") {
        std::cout << "permutation " << permutationOf(w).cycles() << "\n";
      } else if (what == "degree") {
        const auto d = degree(w);
        std::cout << "degree " << d.value;
        if (d.modulus) std::cout << " mod " << d.modulus;
        std::cout << "\n";
      } else {
        const auto verdict = mcgImageTrivial(w);
        std::cout << "permutation " << permutationOf(w).cycles() << "\n";
        std::cout << "mcg-trivial: " << to_string(verdict) << "\n";
        if (verdict == McgVerdict::True) std::cout << "lift class: " << to_string(liftClass(w)) << "\n";
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::OutOfRange ? kExitUsage : kExitInvalid;
  }
}
