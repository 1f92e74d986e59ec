#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sgcm/generate.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "sgcm-gen-corpus - write deterministic random monomial-quotient session\n"
      "files for property testing.  The same seed always produces the same\n"
      "file, so a generated corpus can be reproduced from its seeds alone.\n"};

  std::uint64_t seed = 1;
  int count = 10;
  std::string dir = ".";
  app.add_option("--seed", seed, "first seed (files use seed, seed+1, ...)")
      ->capture_default_str();
  app.add_option("--count", count, "number of session files to write")
      ->capture_default_str();
  app.add_option("--dir", dir, "output directory (must exist)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  for (int k = 0; k < count; ++k) {
    sgcm::GeneratedInstance inst = sgcm::generate_monomial_instance(seed + static_cast<std::uint64_t>(k));
    char name[32];
    std::snprintf(name, sizeof(name), "mono_s%04llu.sgcm",
                  static_cast<unsigned long long>(inst.seed));
    std::string path = dir + "/" + name;
    std::ofstream f(path);
    if (!f) {
      std::cerr << "input error: cannot write '" << path << "'\n";
      return 3;
    }
    f << inst.session_text;
    std::cout << path << "\n";
  }
  return 0;
}
