#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgcm/modules.hpp"

namespace sgcm {

/// A module declaration: the constructed module plus the names used for its
/// component ideals ("0" for a free component), kept for serialization and
/// for looking up supplied decompositions.
struct NamedModule {
  QuotientModule module;
  std::vector<std::string> component_names;
};

/// A filtration declaration: the validated chain plus the entry names of
/// every member ("0" = zero submodule in that component, "R" = the full
/// component, otherwise an ideal name), kept for serialization.
struct NamedFiltration {
  std::string module;
  Filtration filtration;
  std::vector<std::vector<std::string>> entry_names;
};

/// A parameter-system declaration attached to a module.
struct NamedSop {
  std::string module;
  std::vector<Polynomial> polys;
};

/// A parsed and validated session: one ring declaration followed by named
/// ideals, modules, filtrations, parameter systems, and supplied irreducible
/// decompositions, each usable by name in commands.
///
/// Validation happens at load time with line-anchored messages: names must
/// be declared before use, ideal generators and parameters must be
/// homogeneous, module components must be proper ideals, filtration members
/// must contain the component ideals, ascend, and satisfy the dimension
/// condition, and parameter systems must have exactly dim M entries.
struct SessionFile {
  RingPtr ring;

  std::vector<std::string> ideal_order;
  std::map<std::string, Ideal> ideals;

  std::vector<std::string> module_order;
  std::map<std::string, NamedModule> modules;

  std::vector<std::string> filtration_order;
  std::map<std::string, NamedFiltration> filtrations;

  std::vector<std::string> sop_order;
  std::map<std::string, NamedSop> sops;

  std::vector<std::string> decomp_order;
  std::map<std::string, std::vector<std::string>> decomps;

  /// The per-component decomposition vector expected by
  /// dimension_filtration for the named module: entry k is engaged iff a
  /// `decomp` declaration exists for the k-th component ideal's name.
  /// Returns an empty vector when no component has one.
  std::vector<std::optional<std::vector<Ideal>>> supplied_decompositions(
      const std::string& module_name) const;
};

/// Parse and validate a session file from disk. Errors are InputError with
/// "<path>:<line>: message".
SessionFile parse_session(const std::string& path);

/// Parse and validate session text; `origin` labels error messages.
SessionFile parse_session_text(const std::string& text,
                               const std::string& origin = "<session>");

/// Serialize a session back to the declaration format. Parsing the result
/// yields content-equal objects (session_equal).
std::string serialize_session(const SessionFile& s);

/// Content equality of two sessions: same ring, same names in the same
/// order, and generator-level equality of every declared object.
bool session_equal(const SessionFile& a, const SessionFile& b);

}  // namespace sgcm
