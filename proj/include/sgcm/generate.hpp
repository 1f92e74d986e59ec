#pragma once

#include <cstdint>
#include <string>

#include "sgcm/modules.hpp"

namespace sgcm {

/// Deterministic random monomial-quotient instance for property testing:
/// a quotient of a polynomial ring in 2..4 variables by a monomial ideal
/// whose generators have degree at most 3.  The same seed always produces
/// the same instance, and the module always has positive dimension.
struct GeneratedInstance {
  std::uint64_t seed = 0;
  QuotientModule module;
  std::string session_text;  // parseable session describing the instance
};

GeneratedInstance generate_monomial_instance(std::uint64_t seed);

}  // namespace sgcm
