#include "sgcm/generate.hpp"

#include <map>
#include <random>
#include <set>

#include "sgcm/session.hpp"

namespace sgcm {

GeneratedInstance generate_monomial_instance(std::uint64_t seed) {
  static const char* kVars[] = {"x", "y", "z", "w"};
  std::mt19937_64 eng(seed);

  // Resample until the quotient has positive dimension (rare failure: the
  // radical contains every variable).  The engine state carries across
  // attempts, so the result is still a deterministic function of the seed.
  while (true) {
    int nvars = 2 + static_cast<int>(eng() % 3);
    int ngens = 1 + static_cast<int>(eng() % 5);
    std::set<std::string> gens;  // sorted text keeps the session canonical
    for (int i = 0; i < ngens; ++i) {
      int deg = 1 + static_cast<int>(eng() % 3);
      std::map<int, int> exps;
      for (int k = 0; k < deg; ++k) ++exps[static_cast<int>(eng() % nvars)];
      std::string m;
      for (auto [v, e] : exps) {
        if (!m.empty()) m += "*";
        m += kVars[v];
        if (e > 1) m += "^" + std::to_string(e);
      }
      gens.insert(m);
    }

    std::string text = "# generated monomial instance, seed " + std::to_string(seed) + "\n";
    text += "ring Q[";
    for (int v = 0; v < nvars; ++v) text += std::string(v ? "," : "") + kVars[v];
    text += "]\n";
    text += "ideal I = ";
    bool first = true;
    for (const std::string& g : gens) {
      text += (first ? "" : ", ") + g;
      first = false;
    }
    text += "\nmodule M = quot(I)\n";

    SessionFile s = parse_session_text(text, "generated");
    const QuotientModule& M = s.modules.at("M").module;
    if (M.dim() >= 1) return GeneratedInstance{seed, M, text};
  }
}

}  // namespace sgcm
