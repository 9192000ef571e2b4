#pragma once

// Experiment sweeps driven by a JSON spec, emitted as CSV.
//
// Spec:
//   { "master_seed": 42,
//     "experiments": [
//       { "id": "sound", "kind": "soundness", "q": 2, "sigma": 2,
//         "n": 4096, "epsilon": 0.1, "trials": 500, "instances": 5 } ] }
//
// Kinds: soundness, seed_soundness, completeness, queries, stream.
// Experiment k draws trial seeds derive_seed(master, 2k, trial) and
// instance seeds derive_seed(master, 2k + 1, instance), so every trial is
// reproducible on its own and trials can run in any order.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quasi/text.hpp"

namespace quasi::cli {

struct ExperimentRow {
  std::string experiment_id;
  std::size_t q = 0;
  std::size_t n = 0;
  Letter sigma = 0;
  double epsilon = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string verdict;
  std::size_t queries_used = 0;
  std::int64_t wall_time_us = 0;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

inline constexpr const char* kCsvHeader =
    "experiment_id,q,n,sigma,epsilon,trial,seed,verdict,queries_used,"
    "wall_time_us";

/// Header line plus one line per row. Epsilon uses the shortest decimal
/// form that parses back to the same double.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> read_csv(std::istream& in);

struct RunOptions {
  unsigned jobs = 1;
  /// Write 0 instead of the measured wall time, for byte-identical output.
  bool timing = true;
};

/// Runs every experiment in the spec. Rows come out grouped by experiment
/// and in trial order regardless of which worker finished first. Throws
/// ParameterError for malformed specs and unknown kinds.
std::vector<ExperimentRow> run_experiments(const std::string& spec_json,
                                           const RunOptions& options);

const std::vector<std::string>& experiment_kinds();

}  // namespace quasi::cli
