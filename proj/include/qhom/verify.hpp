#pragma once

// Batch commands behind the CLI: the full verification suite, homology table
// export, and algebra descriptors. Pure functions from a RunConfig to report
// documents; file writing is left to the caller.

#include <string>
#include <utility>
#include <vector>

#include "qhom/report.hpp"

namespace qhom {

struct RunConfig {
  int N = 2;
  ScalarField field = ScalarField::specialized(Rat(2));
  int nMax = -1;  // homology degree cutoff; -1 = default for N (4 resp. 3)
  int dMax = -1;  // internal degree cutoff; -1 = default for N (8 resp. 5)
  int centerDegree = 6;
  std::string outputDir = ".";
  enum class Format { Json, Csv, Both };
  Format format = Format::Both;
  unsigned long seed = 0;
  bool partial = false;            // expect/accept a truncated homology table
  bool confirm = true;             // rerun rank computations at the confirm point
  bool allowUncertified = false;   // descriptors for uncertified presentations
  long chainLimit = 2000000;       // refuse chain spaces larger than this

  int nmax_or_default() const { return nMax >= 0 ? nMax : (N == 2 ? 4 : 3); }
  int dmax_or_default() const { return dMax >= 0 ? dMax : (N == 2 ? 8 : 5); }
  Json to_json() const;
};

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 failed check, 2 config/usage error
  Json report;
  // filename -> content, ready to be written under outputDir
  std::vector<std::pair<std::string, std::string>> files;
};

// The ordered section suite; writes verify_report.json (deterministic) and
// verify_timings.json (wall clock, not part of the determinism contract).
CommandResult run_verify(const RunConfig& cfg);

// twist: "sigma" or "none"
CommandResult run_homology(const RunConfig& cfg, const std::string& twist);

// which: B, A, C, Bdual, D
CommandResult run_algebra(const RunConfig& cfg, const std::string& which);

}  // namespace qhom
