#include "sgcm/report.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <sstream>

#include "sgcm/hilbsam.hpp"
#include "sgcm/seqcm.hpp"

#ifndef SGCM_CORPUS_DIR
#define SGCM_CORPUS_DIR "corpus"
#endif

namespace sgcm {

namespace {

using nlohmann::json;

// ---------- JSON builders ----------

json polys_json(const std::vector<Polynomial>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

json ideal_json(const Ideal& I) {
  json a = json::array();
  for (const auto& g : I.gens()) a.push_back(g.to_string());
  return a;
}

json submodule_json(const Submodule& N) {
  json a = json::array();
  for (const auto& J : N.ideals()) a.push_back(ideal_json(J));
  return a;
}

json filtration_json(const Filtration& F) {
  json a = json::array();
  for (int i = 0; i <= F.t(); ++i)
    a.push_back(json{{"dimension", F.dim(i)}, {"components", submodule_json(F.at(i))}});
  return a;
}

std::string join_polys(const std::vector<Polynomial>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s;
}

json base_report(const std::string& command, const CommandOptions& o) {
  json j;
  j["schema_version"] = 1;
  j["tool"] = "sgcm";
  j["tool_version"] = "1.0.0";
  j["command"] = command;
  j["options"] =
      json{{"grid", o.grid}, {"bound", o.bound}, {"seed", o.seed}, {"budget", o.budget}};
  return j;
}

AnalysisReport finish(json j, std::string text, int exit_code) {
  j["exit_code"] = exit_code;
  AnalysisReport r;
  r.json = std::move(j);
  r.text = std::move(text);
  r.exit_code = exit_code;
  return r;
}

// ---------- name resolution ----------

struct ModuleRef {
  std::string name;
  const NamedModule* nm;
  const QuotientModule& module() const { return nm->module; }
};

ModuleRef resolve_module(const SessionFile& s, const CommandOptions& o) {
  if (!o.module.empty()) {
    auto it = s.modules.find(o.module);
    if (it == s.modules.end()) throw InputError("unknown module '" + o.module + "'");
    return {o.module, &it->second};
  }
  if (s.module_order.size() == 1)
    return {s.module_order[0], &s.modules.at(s.module_order[0])};
  throw InputError(s.module_order.empty()
                       ? "the session declares no module"
                       : "the session declares several modules; pass --module");
}

struct FiltrationRef {
  std::string name;
  Filtration F;
};

FiltrationRef resolve_filtration(const SessionFile& s, const CommandOptions& o,
                                 const ModuleRef& mod) {
  if (!o.filtration.empty()) {
    auto it = s.filtrations.find(o.filtration);
    if (it == s.filtrations.end())
      throw InputError("unknown filtration '" + o.filtration + "'");
    if (it->second.module != mod.name)
      throw InputError("filtration '" + o.filtration + "' is declared on module '" +
                       it->second.module + "', not '" + mod.name + "'");
    return {o.filtration, it->second.filtration};
  }
  return {"(dimension filtration)",
          dimension_filtration(mod.module(), s.supplied_decompositions(mod.name))};
}

const NamedSop& resolve_sop(const SessionFile& s, const std::string& name,
                            const ModuleRef& mod) {
  auto it = s.sops.find(name);
  if (it == s.sops.end()) throw InputError("unknown sop '" + name + "'");
  if (it->second.module != mod.name)
    throw InputError("sop '" + name + "' is declared on module '" + it->second.module +
                     "', not '" + mod.name + "'");
  return it->second;
}

// ---------- shared machinery ----------

/// All exponent vectors in {1..N}^d, last coordinate fastest; {{}} for d <= 0.
std::vector<std::vector<unsigned>> exponent_grid(int d, unsigned N) {
  if (d <= 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> n(static_cast<size_t>(d), 1);
  while (true) {
    out.push_back(n);
    int i = d - 1;
    while (i >= 0 && n[static_cast<size_t>(i)] == N) {
      n[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++n[static_cast<size_t>(i)];
  }
  return out;
}

struct SearchOutcome {
  bool found = false;
  std::vector<Polynomial> sop;
  int seeds_tried = 0;
  int tries = 0;
  std::string note;
};

/// Budgeted good-sop search, optionally filtered by the dd-sequence test.
SearchOutcome search_good_sop(const QuotientModule& M, const Filtration& F,
                              const CommandOptions& o, bool need_dd) {
  SearchOutcome out;
  for (int b = 0; b < o.budget; ++b) {
    GoodSopSearch gs = find_good_sop(M, F, o.seed + static_cast<std::uint64_t>(b), 64);
    out.seeds_tried = b + 1;
    out.tries += gs.tries;
    if (gs.found) {
      if (!need_dd || is_dd_sequence(M, gs.sop)) {
        out.found = true;
        out.sop = gs.sop;
        return out;
      }
      out.note = "a good system of parameters was found but fails the dd-sequence criterion";
      continue;
    }
    out.note = gs.note;
    if (gs.note.find("cannot be filled") != std::string::npos) return out;
  }
  if (out.note.empty()) out.note = "search budget exhausted";
  return out;
}

/// Aligned text table of exponent vectors and values.
std::string grid_table(const std::vector<std::vector<unsigned>>& grid,
                       const std::vector<long long>& values,
                       const std::string& value_header) {
  size_t d = grid.empty() ? 0 : grid[0].size();
  size_t vw = value_header.size();
  for (long long v : values) vw = std::max(vw, std::to_string(v).size());
  std::ostringstream t;
  t << "  ";
  for (size_t i = 0; i < d; ++i) t << "n" << i + 1 << " ";
  t << "| " << std::string(vw - value_header.size(), ' ') << value_header << "\n";
  t << "  " << std::string(3 * d, '-') << "+-" << std::string(vw, '-') << "\n";
  for (size_t r = 0; r < grid.size(); ++r) {
    t << "  ";
    for (size_t i = 0; i < d; ++i) t << " " << grid[r][i] << " ";
    std::string v = std::to_string(values[r]);
    t << "| " << std::string(vw - v.size(), ' ') << v << "\n";
  }
  return t.str();
}

// ---------- commands ----------

AnalysisReport cmd_dimfilt(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  json j = base_report("dimfilt", o);
  j["options"]["module"] = mod.name;
  Filtration D = dimension_filtration(mod.module(), s.supplied_decompositions(mod.name));
  j["results"] = json{{"filtration", filtration_json(D)}, {"steps", D.t()}};
  j["verdicts"] = json{{"computed", true}};

  std::ostringstream t;
  t << "dimension filtration of " << mod.name << " (dim " << mod.module().dim()
    << "), " << D.t() << " steps\n";
  for (int i = 0; i <= D.t(); ++i) {
    t << "  member " << i << " (dim " << D.dim(i) << "):";
    for (const Ideal& J : D.at(i).ideals()) {
      t << " [";
      for (size_t g = 0; g < J.gens().size(); ++g)
        t << (g ? ", " : "") << J.gens()[g].to_string();
      if (J.gens().empty()) t << "0";
      t << "]";
    }
    t << "\n";
  }
  return finish(std::move(j), t.str(), 0);
}

AnalysisReport cmd_good_sop(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  FiltrationRef F = resolve_filtration(s, o, mod);
  json j = base_report("good-sop", o);
  j["options"]["module"] = mod.name;
  j["options"]["filtration"] = F.name;
  std::ostringstream t;

  if (!o.sop.empty()) {
    const NamedSop& ns = resolve_sop(s, o.sop, mod);
    j["options"]["sop"] = o.sop;
    bool sop_ok = is_sop(mod.module(), ns.polys);
    bool good = sop_ok && is_good_sop(mod.module(), F.F, ns.polys);
    j["results"] = json{{"mode", "verify"},
                        {"sop", polys_json(ns.polys)},
                        {"is_sop", sop_ok},
                        {"is_good", good}};
    j["verdicts"] = json{{"good", good}};
    t << "parameters " << o.sop << " = " << join_polys(ns.polys) << "\n";
    t << "system of parameters: " << (sop_ok ? "yes" : "no") << "\n";
    t << "good for " << F.name << ": " << (good ? "yes" : "no") << "\n";
    return finish(std::move(j), t.str(), good ? 0 : 1);
  }

  SearchOutcome out = search_good_sop(mod.module(), F.F, o, /*need_dd=*/false);
  j["results"] = json{{"mode", "search"},
                      {"seeds_tried", out.seeds_tried},
                      {"tries", out.tries}};
  if (out.found) {
    j["results"]["sop"] = polys_json(out.sop);
    j["verdicts"] = json{{"found", true}};
    t << "found a good system of parameters for " << F.name << ": "
      << join_polys(out.sop) << "\n";
    t << "seeds tried: " << out.seeds_tried << ", candidates: " << out.tries << "\n";
    return finish(std::move(j), t.str(), 0);
  }
  j["results"]["note"] = out.note;
  j["verdicts"] = json{{"found", false}};
  t << "no good system of parameters found: " << out.note << "\n";
  return finish(std::move(j), t.str(), 2);
}

AnalysisReport cmd_dd_check(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  if (o.sop.empty()) throw InputError("dd-check needs --sop NAME");
  const NamedSop& ns = resolve_sop(s, o.sop, mod);
  json j = base_report("dd-check", o);
  j["options"]["module"] = mod.name;
  j["options"]["sop"] = o.sop;

  bool sop_ok = is_sop(mod.module(), ns.polys);
  bool d_seq = sop_ok && is_d_sequence(mod.module(), ns.polys);
  bool dd = sop_ok && is_dd_sequence(mod.module(), ns.polys, o.bound);
  j["results"] = json{{"sop", polys_json(ns.polys)},
                      {"is_sop", sop_ok},
                      {"is_d_sequence", d_seq},
                      {"is_dd_sequence", dd},
                      {"bound", o.bound}};
  j["verdicts"] = json{{"dd_sequence", dd}};

  std::ostringstream t;
  t << "parameters " << o.sop << " = " << join_polys(ns.polys) << "\n";
  t << "system of parameters: " << (sop_ok ? "yes" : "no") << "\n";
  t << "d-sequence: " << (d_seq ? "yes" : "no") << "\n";
  t << "dd-sequence (exponent bound " << o.bound << "): " << (dd ? "yes" : "no") << "\n";
  return finish(std::move(j), t.str(), dd ? 0 : 1);
}

AnalysisReport cmd_ifm(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  FiltrationRef F = resolve_filtration(s, o, mod);
  json j = base_report("ifm", o);
  j["options"]["module"] = mod.name;
  j["options"]["filtration"] = F.name;
  std::ostringstream t;

  std::vector<Polynomial> x;
  if (!o.sop.empty()) {
    x = resolve_sop(s, o.sop, mod).polys;
    j["options"]["sop"] = o.sop;
  } else {
    SearchOutcome out = search_good_sop(mod.module(), F.F, o, /*need_dd=*/false);
    if (!out.found) {
      j["results"] = json{{"note", out.note}, {"seeds_tried", out.seeds_tried}};
      j["verdicts"] = json{{"computed", false}};
      t << "no good system of parameters found: " << out.note << "\n";
      return finish(std::move(j), t.str(), 2);
    }
    x = out.sop;
    j["results"]["seeds_tried"] = out.seeds_tried;
  }

  MultiplicityTable table = multiplicity_table(mod.module(), F.F, x);
  unsigned N = static_cast<unsigned>(std::max(1, std::min(o.grid, 4)));
  auto grid = exponent_grid(mod.module().dim(), N);
  std::vector<long long> values;
  values.reserve(grid.size());
  json rows = json::array();
  for (const auto& n : grid) {
    long long v = ifm_value(mod.module(), F.F, x, n, table);
    values.push_back(v);
    rows.push_back(json{{"n", n}, {"value", v}});
  }

  bool nonnegative = true;
  for (long long v : values) nonnegative = nonnegative && v >= 0;
  bool monotone = true;
  for (size_t r = 0; r < grid.size(); ++r) {
    for (size_t i = 0; i < grid[r].size(); ++i) {
      if (grid[r][i] == 1) continue;
      std::vector<unsigned> below = grid[r];
      --below[i];
      for (size_t q = 0; q < grid.size(); ++q)
        if (grid[q] == below) monotone = monotone && values[q] <= values[r];
    }
  }

  j["results"]["sop_polynomials"] = polys_json(x);
  j["results"]["multiplicities"] = table.e;
  j["results"]["grid"] = N;
  j["results"]["values"] = rows;
  j["verdicts"] = json{{"nonnegative", nonnegative}, {"monotone", monotone}};

  t << "difference function of " << F.name << " on " << mod.name << " with parameters "
    << join_polys(x) << "\n";
  t << "prefix multiplicities along the chain: ";
  for (size_t i = 0; i < table.e.size(); ++i) t << (i ? ", " : "") << table.e[i];
  t << "\n" << grid_table(grid, values, "value");
  t << "nonnegative: " << (nonnegative ? "yes" : "no")
    << ", monotone: " << (monotone ? "yes" : "no") << "\n";
  return finish(std::move(j), t.str(), nonnegative && monotone ? 0 : 1);
}

AnalysisReport cmd_invariant(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  FiltrationRef F = resolve_filtration(s, o, mod);
  json j = base_report("invariant", o);
  j["options"]["module"] = mod.name;
  j["options"]["filtration"] = F.name;
  std::ostringstream t;

  GcmFiltrationCheck chk =
      check_gcm_filtration(mod.module(), F.F, s.supplied_decompositions(mod.name));
  j["results"]["gcm_filtration"] = to_string(chk.verdict);
  j["results"]["gcm_route"] = chk.route;
  if (!chk.detail.empty()) j["results"]["gcm_detail"] = chk.detail;
  if (chk.verdict == Tristate::no) {
    j["verdicts"] = json{{"gcm_filtration", false}};
    t << F.name << " is not a generalized Cohen-Macaulay filtration: " << chk.detail
      << "\n";
    return finish(std::move(j), t.str(), 1);
  }

  ParametricInvariant par;
  try {
    par = invariant_I_F(mod.module(), F.F, o.seed, o.budget, 64);
  } catch (const DomainError& e) {
    j["results"]["note"] = e.what();
    j["verdicts"] = json{{"computed", false}};
    t << "parametric route undecided: " << e.what() << "\n";
    return finish(std::move(j), t.str(), 2);
  }
  j["results"]["parametric"] = par.value;
  j["results"]["witness_sop"] = polys_json(par.sop);
  j["results"]["seeds_tried"] = par.seeds_tried;
  t << "invariant of " << F.name << " on " << mod.name << "\n";
  t << "parametric route: " << par.value << " (witness " << join_polys(par.sop)
    << ")\n";

  CohomologicalInvariant coh = invariant_I_F_cohomological(mod.module(), F.F);
  if (coh.value) {
    j["results"]["cohomological"] = *coh.value;
    bool agree = par.value == static_cast<long long>(*coh.value);
    j["verdicts"] = json{{"routes_agree", agree}};
    t << "cohomological route: " << *coh.value << "\n";
    t << "routes agree: " << (agree ? "yes" : "no") << "\n";
    return finish(std::move(j), t.str(), agree ? 0 : 1);
  }
  j["results"]["cohomological_note"] = coh.note;
  j["verdicts"] = json{{"parametric_computed", true}};
  t << "cohomological route: " << coh.note << "\n";
  return finish(std::move(j), t.str(), 0);
}

AnalysisReport cmd_seq_gcm(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  json j = base_report("seq-gcm", o);
  j["options"]["module"] = mod.name;

  SeqGcmVerdict v = is_seq_gcm(mod.module(), o.seed, o.budget, 64,
                               s.supplied_decompositions(mod.name));
  j["results"]["status"] = v.status;
  j["results"]["seeds_tried"] = v.seeds_tried;
  if (v.witness_filtration)
    j["results"]["dimension_filtration"] = filtration_json(*v.witness_filtration);
  if (!v.witness_sop.empty()) j["results"]["witness_sop"] = polys_json(v.witness_sop);
  if (v.invariant_parametric) j["results"]["invariant_parametric"] = *v.invariant_parametric;
  if (v.invariant_cohomological)
    j["results"]["invariant_cohomological"] = *v.invariant_cohomological;
  else if (!v.invariant_cohomological_note.empty())
    j["results"]["invariant_cohomological_note"] = v.invariant_cohomological_note;
  if (v.agreement) j["results"]["routes_agree"] = *v.agreement;
  j["verdicts"] = json{{"seq_gcm", v.is_seq_gcm}};

  std::ostringstream t;
  t << mod.name << " sequentially generalized Cohen-Macaulay: "
    << (v.is_seq_gcm ? "yes" : "no") << "\n";
  t << "status: " << v.status << "\n";
  if (v.invariant_parametric)
    t << "invariant (parametric): " << *v.invariant_parametric << "\n";
  if (v.invariant_cohomological)
    t << "invariant (cohomological): " << *v.invariant_cohomological << "\n";
  if (!v.witness_sop.empty()) t << "witness parameters: " << join_polys(v.witness_sop) << "\n";

  int code = v.is_seq_gcm ? 0
             : (v.status.rfind("proven negative", 0) == 0 ? 1 : 2);
  return finish(std::move(j), t.str(), code);
}

AnalysisReport cmd_seq_cm(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  json j = base_report("seq-cm", o);
  j["options"]["module"] = mod.name;
  std::ostringstream t;

  SeqCmCheck c;
  try {
    c = check_seq_cm(mod.module(), o.seed, o.budget, 64,
                     s.supplied_decompositions(mod.name));
  } catch (const DomainError& e) {
    if (std::string(e.what()).find("undecidable") == std::string::npos) throw;
    j["results"] = json{{"note", e.what()}};
    j["verdicts"] = json{{"computed", false}};
    t << "undecided: " << e.what() << "\n";
    return finish(std::move(j), t.str(), 2);
  }
  j["results"]["route"] = c.route;
  if (c.invariant) j["results"]["invariant"] = *c.invariant;
  if (c.vanishing) j["results"]["cohomology_vanishes"] = *c.vanishing;
  if (!c.note.empty()) j["results"]["note"] = c.note;
  j["verdicts"] = json{{"seq_cm", c.is_seq_cm}};

  t << mod.name << " sequentially Cohen-Macaulay: " << (c.is_seq_cm ? "yes" : "no")
    << " (route: " << c.route << ")\n";
  if (c.invariant) t << "invariant of the dimension filtration: " << *c.invariant << "\n";
  if (!c.note.empty()) t << "note: " << c.note << "\n";
  return finish(std::move(j), t.str(), c.is_seq_cm ? 0 : 1);
}

AnalysisReport cmd_hilbert_samuel(const SessionFile& s, const CommandOptions& o) {
  ModuleRef mod = resolve_module(s, o);
  json j = base_report("hilbert-samuel", o);
  j["options"]["module"] = mod.name;
  std::ostringstream t;

  // A filtration is needed for the coefficient identities and for searching
  // parameters; without one (non-monomial components, no decompositions) the
  // command still fits the polynomial for explicitly named parameters.
  std::string filtration_note;
  std::vector<FiltrationRef> fref;
  try {
    fref.push_back(resolve_filtration(s, o, mod));
    j["options"]["filtration"] = fref[0].name;
  } catch (const Error& e) {
    if (!o.filtration.empty()) throw;
    filtration_note = e.what();
  }

  std::vector<Polynomial> x;
  if (!o.sop.empty()) {
    x = resolve_sop(s, o.sop, mod).polys;
    j["options"]["sop"] = o.sop;
    if (!is_sop(mod.module(), x))
      throw InputError("sop '" + o.sop + "' is not a system of parameters of '" +
                       mod.name + "'");
    if (!is_dd_sequence(mod.module(), x))
      throw InputError("sop '" + o.sop +
                       "' fails the dd-sequence criterion; the binomial-coefficient "
                       "fit needs a dd-sequence");
  } else {
    if (fref.empty())
      throw InputError(std::string("cannot search parameters without a filtration: ") +
                       filtration_note);
    SearchOutcome out = search_good_sop(mod.module(), fref[0].F, o, /*need_dd=*/true);
    if (!out.found) {
      j["results"] = json{{"note", out.note}, {"seeds_tried", out.seeds_tried}};
      j["verdicts"] = json{{"computed", false}};
      t << "no dd-sequence witness found: " << out.note << "\n";
      return finish(std::move(j), t.str(), 2);
    }
    x = out.sop;
    j["results"]["seeds_tried"] = out.seeds_tried;
  }

  bool identities_available = false;
  bool identities_pass = true;
  HilbertSamuelRecord rec;
  if (!fref.empty()) {
    try {
      VerifyHsReport rep = verify_hs_theorem(mod.module(), fref[0].F, x);
      rec = rep.record;
      identities_available = true;
      json ids = json::array();
      for (const auto& id : rep.identities) {
        json e = json{{"label", id.label},
                      {"available", id.available},
                      {"pass", id.pass}};
        if (id.available) {
          e["lhs"] = id.lhs;
          e["rhs"] = id.rhs;
        }
        if (!id.note.empty()) e["note"] = id.note;
        identities_pass = identities_pass && id.available && id.pass;
        ids.push_back(std::move(e));
      }
      j["results"]["identities"] = std::move(ids);

      // Adjusted values: subtract the binomial-weighted member multiplicities.
      MultiplicityTable table = multiplicity_table(mod.module(), fref[0].F, x);
      json adjusted = json::array();
      for (unsigned n = 0; n <= 3; ++n) {
        long long v = static_cast<long long>(rec.values.at(n));
        for (int k = 1; k <= fref[0].F.t(); ++k)
          v -= binomial(static_cast<long long>(n) + fref[0].F.dim(k),
                        fref[0].F.dim(k)) *
               table.e[static_cast<size_t>(k)];
        adjusted.push_back(v);
      }
      j["results"]["adjusted_values"] = std::move(adjusted);
    } catch (const InputError& e) {
      if (!o.filtration.empty()) throw;
      filtration_note = e.what();
    }
  }
  if (!identities_available) {
    rec = hs_coefficients(mod.module(), x);
    if (!filtration_note.empty()) j["results"]["identities_note"] = filtration_note;
  }

  j["results"]["sop_polynomials"] = polys_json(x);
  j["results"]["coefficients"] = rec.coefficients;
  j["results"]["fit_note"] = rec.note;
  json values = json::array();
  for (const auto& [n, v] : rec.values) values.push_back(json{{"n", n}, {"length", v}});
  j["results"]["values"] = std::move(values);

  json verdicts = json{{"fit_exact", rec.fit_exact}};
  if (identities_available) verdicts["identities_pass"] = identities_pass;
  j["verdicts"] = verdicts;

  t << "length of M/q^(n+1)M for q = (" << join_polys(x) << ")\n";
  t << "  n | length\n";
  for (const auto& [n, v] : rec.values) t << "  " << n << " | " << v << "\n";
  t << "coefficients (leading first): ";
  for (size_t i = 0; i < rec.coefficients.size(); ++i)
    t << (i ? ", " : "") << rec.coefficients[i];
  t << "\n" << rec.note << "\n";
  if (identities_available)
    t << "coefficient identities: " << (identities_pass ? "all pass" : "FAILURE") << "\n";
  else if (!filtration_note.empty())
    t << "identities unavailable: " << filtration_note << "\n";

  int code = rec.fit_exact && (!identities_available || identities_pass) ? 0 : 1;
  return finish(std::move(j), t.str(), code);
}

// ---------- packaged examples ----------

struct Check {
  std::string name;
  bool pass = false;
  json details = json::object();
};

const Ideal& need_ideal(const SessionFile& s, const std::string& n) {
  auto it = s.ideals.find(n);
  if (it == s.ideals.end())
    throw InputError("packaged example lacks ideal '" + n + "'");
  return it->second;
}

const NamedModule& need_module(const SessionFile& s, const std::string& n) {
  auto it = s.modules.find(n);
  if (it == s.modules.end())
    throw InputError("packaged example lacks module '" + n + "'");
  return it->second;
}

const NamedFiltration& need_filtration(const SessionFile& s, const std::string& n) {
  auto it = s.filtrations.find(n);
  if (it == s.filtrations.end())
    throw InputError("packaged example lacks filtration '" + n + "'");
  return it->second;
}

const NamedSop& need_sop(const SessionFile& s, const std::string& n) {
  auto it = s.sops.find(n);
  if (it == s.sops.end()) throw InputError("packaged example lacks sop '" + n + "'");
  return it->second;
}

/// Compare every length on the {1,2,3}^3 exponent grid against a closed form.
template <class Fn>
Check grid_check(const std::string& name, const QuotientModule& M,
                 const std::vector<Polynomial>& x, Fn expect) {
  Check c{name, true, json::object()};
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned b = 1; b <= 3; ++b)
      for (unsigned d = 1; d <= 3; ++d) {
        std::uint64_t got = quotient_length(M, x, {a, b, d});
        std::uint64_t want = expect(static_cast<std::uint64_t>(a),
                                    static_cast<std::uint64_t>(b),
                                    static_cast<std::uint64_t>(d));
        if (got != want) {
          c.pass = false;
          c.details = json{{"n", {a, b, d}}, {"got", got}, {"expected", want}};
          return c;
        }
      }
  return c;
}

Check filtration_is_dimension_filtration(const QuotientModule& M, const Filtration& F) {
  Filtration D = dimension_filtration(M);
  bool same = D.t() == F.t();
  for (int i = 0; same && i <= F.t(); ++i) same = submodule_equal(F.at(i), D.at(i));
  return {"declared chain D is the dimension filtration", same, json::object()};
}

std::vector<Check> checks_4_7(const SessionFile& s, const CommandOptions& o) {
  const QuotientModule& M = need_module(s, "M").module;
  const Ideal& I = need_ideal(s, "I");
  const Ideal& J = need_ideal(s, "J");
  const Ideal& K = need_ideal(s, "K");
  const Filtration& D = need_filtration(s, "D").filtration;
  const std::vector<Polynomial>& q = need_sop(s, "q").polys;
  std::vector<Check> cs;

  cs.push_back({"K equals the intersection of I and J",
                ideal_equal(K, ideal_intersection(I, J)), json::object()});
  cs.push_back(filtration_is_dimension_filtration(M, D));
  cs.push_back({"q is a good system of parameters for D", is_good_sop(M, D, q),
                json::object()});
  cs.push_back({"q satisfies the dd-sequence criterion (bound 2)",
                is_dd_sequence(M, q, 2), json::object()});
  cs.push_back(grid_check("length grid over {1,2,3}^3 matches 2abc + ab + 1", M, q,
                          [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
                            return 2 * a * b * c + a * b + 1;
                          }));

  MultiplicityTable table = multiplicity_table(M, D, q);
  cs.push_back({"multiplicities along D are (0, 1, 2)",
                table.e == std::vector<long long>{0, 1, 2},
                json{{"got", table.e}}});

  Check diff{"difference function is constantly 1 on {1,2,3}^3", true, json::object()};
  for (unsigned a = 1; a <= 3 && diff.pass; ++a)
    for (unsigned b = 1; b <= 3 && diff.pass; ++b)
      for (unsigned c = 1; c <= 3 && diff.pass; ++c) {
        long long v = ifm_value(M, D, q, {a, b, c}, table);
        if (v != 1) diff = {diff.name, false, json{{"n", {a, b, c}}, {"got", v}}};
      }
  cs.push_back(diff);

  CohomologicalInvariant coh = invariant_I_F_cohomological(M, D);
  cs.push_back({"layered cohomological invariant equals 1",
                coh.value.has_value() && *coh.value == 1,
                coh.value ? json{{"got", *coh.value}} : json{{"note", coh.note}}});
  cs.push_back({"parametric and cohomological routes agree",
                cs[cs.size() - 2].pass && cs[cs.size() - 1].pass, json::object()});

  QuotientModule Mq = quotient_module(M, D.at(1));
  cs.push_back(grid_check("quotient by D_1: length grid matches 2abc + 2", Mq, q,
                          [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
                            return 2 * a * b * c + 2;
                          }));
  Filtration T(Mq, {zero_submodule(Mq), full_submodule(Mq)});
  MultiplicityTable tq = multiplicity_table(Mq, T, q);
  bool quot_par = ifm_value(Mq, T, q, {1, 1, 1}, tq) == 2 &&
                  ifm_value(Mq, T, q, {2, 2, 2}, tq) == 2;
  CohomologicalInvariant cq = invariant_I_F_cohomological(Mq, T);
  cs.push_back({"quotient by D_1: invariant equals 2 by both routes",
                quot_par && cq.value.has_value() && *cq.value == 2, json::object()});

  InvariantAdditivityCheck add = check_invariant_additivity(M, D, o.seed, o.budget, 64);
  bool strict = add.representable && add.filtration_invariant == 1 &&
                add.step_invariants == std::vector<std::uint64_t>{0, 2} && !add.holds;
  cs.push_back({"invariant 1 lies strictly below the step sum 0 + 2", strict,
                json{{"invariant", add.filtration_invariant},
                     {"steps", add.step_invariants}}});
  return cs;
}

std::vector<Check> checks_5_6(const SessionFile& s, const CommandOptions& o) {
  const QuotientModule& M = need_module(s, "M").module;
  const Ideal& F1 = need_ideal(s, "F1");
  const Filtration& F = need_filtration(s, "F").filtration;
  const Filtration& D = need_filtration(s, "D").filtration;
  const std::vector<Polynomial>& q = need_sop(s, "q").polys;
  std::vector<Check> cs;

  cs.push_back(filtration_is_dimension_filtration(M, D));
  cs.push_back({"q is a good system of parameters for D", is_good_sop(M, D, q),
                json::object()});
  cs.push_back({"q is a good system of parameters for F", is_good_sop(M, F, q),
                json::object()});
  cs.push_back({"q satisfies the dd-sequence criterion (bound 2)",
                is_dd_sequence(M, q, 2), json::object()});
  cs.push_back(grid_check("length grid over {1,2,3}^3 matches abc + ab", M, q,
                          [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
                            return a * b * c + a * b;
                          }));

  MultiplicityTable table = multiplicity_table(M, F, q);
  Check vanish{"difference function of F vanishes on {1,2,3}^3", true, json::object()};
  for (unsigned a = 1; a <= 3 && vanish.pass; ++a)
    for (unsigned b = 1; b <= 3 && vanish.pass; ++b)
      for (unsigned c = 1; c <= 3 && vanish.pass; ++c) {
        long long v = ifm_value(M, F, q, {a, b, c}, table);
        if (v != 0) vanish = {vanish.name, false, json{{"n", {a, b, c}}, {"got", v}}};
      }
  cs.push_back(vanish);

  GcmFiltrationCheck chk = check_gcm_filtration(M, F);
  cs.push_back({"F is not a generalized Cohen-Macaulay filtration",
                chk.verdict == Tristate::no,
                json{{"verdict", to_string(chk.verdict)}, {"detail", chk.detail}}});
  cs.push_back({"H^1 of M/F_1 has infinite length",
                !local_cohomology_length(F1, 1).is_finite(), json::object()});

  SeqGcmVerdict v = is_seq_gcm(M, o.seed, o.budget, 64);
  bool pos = v.is_seq_gcm && v.invariant_parametric && *v.invariant_parametric == 0 &&
             v.invariant_cohomological && *v.invariant_cohomological == 0 &&
             v.agreement && *v.agreement;
  cs.push_back({"M is sequentially generalized Cohen-Macaulay with invariant 0 by "
                "both routes",
                pos, json{{"status", v.status}}});
  return cs;
}

std::vector<Check> checks_5_5(const SessionFile& s, const CommandOptions& o) {
  const QuotientModule& M = need_module(s, "M").module;
  const Ideal& P = need_ideal(s, "P");
  const Ideal& Q2 = need_ideal(s, "Q2");
  const Filtration& D = need_filtration(s, "D").filtration;
  const std::vector<Polynomial>& q = need_sop(s, "q").polys;
  std::vector<Check> cs;

  cs.push_back(filtration_is_dimension_filtration(M, D));
  cs.push_back({"q is a good system of parameters for D", is_good_sop(M, D, q),
                json::object()});
  cs.push_back({"entries 2 and 3 of q lie in the annihilator of D_1",
                q.size() == 3 && P.contains(q[1]) && P.contains(q[2]), json::object()});
  cs.push_back({"q satisfies the dd-sequence criterion (bound 2)",
                is_dd_sequence(M, q, 2), json::object()});
  cs.push_back({"q satisfies the dd-sequence criterion (bound 3)",
                is_dd_sequence(M, q, 3), json::object()});

  GcmFiltrationCheck chk = check_gcm_filtration(M, D);
  cs.push_back({"D is not a generalized Cohen-Macaulay filtration",
                chk.verdict == Tristate::no,
                json{{"verdict", to_string(chk.verdict)}, {"detail", chk.detail}}});
  cs.push_back({"H^2 of M/D_1 has infinite length",
                !local_cohomology_length(Q2, 2).is_finite(), json::object()});

  SeqGcmVerdict v = is_seq_gcm(M, o.seed, o.budget, 64);
  cs.push_back({"M is not sequentially generalized Cohen-Macaulay (proven)",
                !v.is_seq_gcm && v.status.rfind("proven negative", 0) == 0,
                json{{"status", v.status}}});
  return cs;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "dimfilt", "good-sop", "dd-check",       "ifm",
      "invariant", "seq-gcm", "seq-cm",        "hilbert-samuel",
      "verify-paper-example"};
  return names;
}

namespace {

AnalysisReport dispatch_command(const SessionFile& session, const std::string& command,
                                const CommandOptions& options) {
  try {
    if (command == "dimfilt") return cmd_dimfilt(session, options);
    if (command == "good-sop") return cmd_good_sop(session, options);
    if (command == "dd-check") return cmd_dd_check(session, options);
    if (command == "ifm") return cmd_ifm(session, options);
    if (command == "invariant") return cmd_invariant(session, options);
    if (command == "seq-gcm") return cmd_seq_gcm(session, options);
    if (command == "seq-cm") return cmd_seq_cm(session, options);
    if (command == "hilbert-samuel") return cmd_hilbert_samuel(session, options);
    if (command.rfind("verify-paper-example", 0) == 0) {
      std::string id = command.substr(std::min<size_t>(command.size(), 20));
      size_t a = id.find_first_not_of(" \t");
      if (a == std::string::npos)
        throw InputError("verify-paper-example needs an example id (4.7, 5.5, 5.6)");
      return run_paper_example(id.substr(a), options);
    }
  } catch (const DomainError& e) {
    // Budget exhaustion that escaped a command-specific handler.
    std::string msg = e.what();
    if (msg.find("budget") == std::string::npos &&
        msg.find("no witness") == std::string::npos)
      throw;
    json j = base_report(command, options);
    j["results"] = json{{"note", msg}};
    j["verdicts"] = json{{"computed", false}};
    return finish(std::move(j), "undecided: " + msg + "\n", 2);
  }
  throw InputError("unknown command '" + command + "' (expected one of: dimfilt, "
                   "good-sop, dd-check, ifm, invariant, seq-gcm, seq-cm, "
                   "hilbert-samuel, verify-paper-example)");
}

}  // namespace

AnalysisReport run_command(const SessionFile& session, const std::string& command,
                           const CommandOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport r = dispatch_command(session, command, options);
  if (options.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    r.json["timing_ms"] = ms;
    r.text += "elapsed: " + std::to_string(ms) + " ms\n";
  }
  return r;
}

std::string corpus_dir() {
  const char* env = std::getenv("SGCM_CORPUS");
  if (env && *env) return env;
  return SGCM_CORPUS_DIR;
}

AnalysisReport run_paper_example(const std::string& id, const CommandOptions& options) {
  std::string norm = id;
  if (norm.rfind("example_", 0) == 0) norm = norm.substr(8);
  if (norm.size() > 5 && norm.substr(norm.size() - 5) == ".sgcm")
    norm = norm.substr(0, norm.size() - 5);
  for (char& c : norm)
    if (c == '.') c = '_';
  if (norm != "4_7" && norm != "5_5" && norm != "5_6")
    throw InputError("unknown example '" + id + "' (packaged: 4.7, 5.5, 5.6)");

  std::string file = "example_" + norm + ".sgcm";
  SessionFile s = parse_session(corpus_dir() + "/" + file);

  std::vector<Check> cs;
  if (norm == "4_7") cs = checks_4_7(s, options);
  else if (norm == "5_5") cs = checks_5_5(s, options);
  else cs = checks_5_6(s, options);

  json j = base_report("verify-paper-example", options);
  json arr = json::array();
  bool all = true;
  std::ostringstream t;
  std::string dotted = norm;
  for (char& c : dotted)
    if (c == '_') c = '.';
  t << "packaged example " << dotted << " (" << file << "): " << cs.size()
    << " checks\n";
  for (const Check& c : cs) {
    json e = json{{"name", c.name}, {"pass", c.pass}};
    if (!c.details.empty()) e["details"] = c.details;
    arr.push_back(std::move(e));
    all = all && c.pass;
    t << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << "\n";
  }
  t << (all ? "all checks pass\n" : "some checks FAILED\n");
  j["results"] = json{{"example", dotted}, {"file", file}, {"checks", std::move(arr)}};
  j["verdicts"] = json{{"all_checks", all}};
  return finish(std::move(j), t.str(), all ? 0 : 1);
}

int thread_cap() {
  const char* env = std::getenv("SGCM_THREADS");
  if (!env || !*env) return 1;
  std::string v(env);
  for (char c : v)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("SGCM_THREADS must be a positive integer, got '" + v + "'");
  long n = std::strtol(env, nullptr, 10);
  if (n < 1) throw InputError("SGCM_THREADS must be a positive integer, got '" + v + "'");
  return static_cast<int>(n);
}

}  // namespace sgcm
