#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sgcm/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "sgcm - analysis of graded quotient modules over polynomial rings:\n"
      "dimension filtrations, good systems of parameters, dd-sequences,\n"
      "filtration difference functions and invariants, sequential\n"
      "(generalized) Cohen-Macaulay checks, and Hilbert-Samuel data.\n"};
  app.get_formatter()->column_width(26);

  std::string command;
  std::string target;
  std::string out_path;
  sgcm::CommandOptions o;

  app.add_option("command", command,
                 "one of: dimfilt, good-sop, dd-check, ifm, invariant, seq-gcm, "
                 "seq-cm, hilbert-samuel, verify-paper-example")
      ->required();
  app.add_option("session", target,
                 "session file; for verify-paper-example, the packaged example id "
                 "(4.7, 5.5, 5.6)")
      ->required();
  app.add_option("--module", o.module,
                 "module to analyze (default: the only declared module)");
  app.add_option("--filtration", o.filtration,
                 "filtration to use (default: the dimension filtration)");
  app.add_option("--sop", o.sop,
                 "named system of parameters (default: searched, where allowed)");
  app.add_option("--grid", o.grid, "exponent grid bound for value tables (1..4)")
      ->capture_default_str();
  app.add_option("--bound", o.bound, "exponent bound for the dd-sequence test")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "base seed for randomized searches")
      ->capture_default_str();
  app.add_option("--budget", o.budget, "number of fresh seeds tried before giving up")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_flag("--timing", o.timing, "include elapsed time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;  // help/version exit 0; bad usage is an input error
  }

  try {
    sgcm::thread_cap();  // validate SGCM_THREADS before doing any work

    sgcm::AnalysisReport report;
    if (command == "verify-paper-example") {
      report = sgcm::run_command(sgcm::SessionFile{}, command + " " + target, o);
    } else {
      sgcm::SessionFile session = sgcm::parse_session(target);
      report = sgcm::run_command(session, command, o);
    }

    std::cout << report.text;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "input error: cannot write report file '" << out_path << "'\n";
        return 3;
      }
      f << report.json.dump(2) << "\n";
    }
    return report.exit_code;
  } catch (const sgcm::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const sgcm::DomainError& e) {
    std::string msg = e.what();
    bool undecided = msg.find("budget") != std::string::npos ||
                     msg.find("no witness") != std::string::npos ||
                     msg.find("undecidable") != std::string::npos;
    std::cerr << (undecided ? "undecided: " : "error: ") << msg << "\n";
    return undecided ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
