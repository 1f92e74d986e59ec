#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgcm/session.hpp"

namespace sgcm {

/// Options shared by all commands; unused fields are ignored per command.
struct CommandOptions {
  std::string module;      // module name (default: the only declared module)
  std::string filtration;  // filtration name (default: the dimension filtration)
  std::string sop;         // parameter-system name (default: searched)
  int grid = 2;            // exponent grid bound for value tables
  unsigned bound = 2;      // exponent bound for the dd-sequence test
  std::uint64_t seed = 1;  // base seed for randomized searches
  int budget = 8;          // number of fresh seeds tried before giving up
  bool timing = false;     // include timing_ms in the JSON report
};

/// A finished command: a deterministic JSON document (sorted keys, integers
/// and strings only, except the optional timing_ms), a human-readable text
/// rendering, and the process exit code:
///   0 = all verdicts affirmative/verified
///   1 = a mathematical negative (a disproved property)
///   2 = undecided (search budget exhausted or no applicable test)
///   3 = input error
struct AnalysisReport {
  nlohmann::json json;
  std::string text;
  int exit_code = 0;
};

/// The commands accepted by run_command.
const std::vector<std::string>& command_names();

/// Execute one analysis command against a parsed session.
///
/// Commands: dimfilt (compute the dimension filtration), good-sop (verify a
/// named parameter system or search for one), dd-check (test the dd-sequence
/// criterion), ifm (table of the difference function over the exponent
/// grid), invariant (the filtration invariant by the parametric and the
/// cohomological route), seq-gcm, seq-cm, hilbert-samuel (coefficients of
/// the length polynomial plus the coefficient identities), and
/// "verify-paper-example <id>" (runs the named packaged example; the session
/// argument is ignored).
///
/// InputError propagates to the caller (exit code 3 at the process level);
/// search exhaustion and undecidable verdicts are reported with exit code 2.
AnalysisReport run_command(const SessionFile& session, const std::string& command,
                           const CommandOptions& options);

/// Directory holding the packaged example sessions: $SGCM_CORPUS when set,
/// otherwise the directory configured at build time.
std::string corpus_dir();

/// Run the named packaged example ("4.7", "5.5", "5.6") end to end against
/// its frozen expected values and report one check per line.
AnalysisReport run_paper_example(const std::string& id, const CommandOptions& options);

/// Worker cap honored by the command driver: SGCM_THREADS when set (must be
/// a positive integer), otherwise 1. All current kernels are sequential, so
/// the cap only validates the environment; it never changes results.
int thread_cap();

}  // namespace sgcm
