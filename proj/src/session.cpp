#include "sgcm/session.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "sgcm/parse.hpp"

namespace sgcm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{"ring", "ideal",      "module", "filtration",
                                           "sop",  "decomp",     "on",     "quot",
                                           "R",    "Q",          "Fp"};
  return words;
}

struct Parser {
  const std::string& origin;
  SessionFile s;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(origin + ":" + std::to_string(line_no) + ": " + msg);
  }

  void require_ring() const {
    if (!s.ring) fail("a 'ring' declaration must come first");
  }

  std::string fresh_name(const std::string& kind, const std::string& name) const {
    if (!is_identifier(name) || reserved_words().count(name))
      fail(kind + " name '" + name + "' is not a usable identifier");
    if (s.ideals.count(name) || s.modules.count(name) || s.filtrations.count(name) ||
        s.sops.count(name))
      fail(kind + " name '" + name + "' is already declared");
    return name;
  }

  Polynomial poly(const std::string& text) const {
    std::string t = trim(text);
    if (t.empty()) fail("empty polynomial");
    try {
      return parse_polynomial(s.ring, t);
    } catch (const Error& e) {
      fail(std::string("in '") + t + "': " + e.what());
    }
  }

  std::vector<Polynomial> poly_list(const std::string& text) const {
    std::vector<Polynomial> out;
    for (const std::string& part : split(text, ",")) out.push_back(poly(part));
    return out;
  }

  void declare_ring(const std::string& rest) {
    if (s.ring) fail("duplicate 'ring' declaration");
    std::string spec = trim(rest);
    size_t lb = spec.find('[');
    if (lb == std::string::npos || spec.back() != ']')
      fail("expected 'ring Q[vars]' or 'ring Fp(p)[vars]'");
    std::string fieldspec = trim(spec.substr(0, lb));
    Field field;
    if (fieldspec == "Q") {
      field = Field::rationals();
    } else if (fieldspec.rfind("Fp(", 0) == 0 && fieldspec.back() == ')') {
      std::string num = fieldspec.substr(3, fieldspec.size() - 4);
      bool digits = !num.empty() && num.size() <= 10;
      for (char c : num)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
      if (!digits) fail("invalid field characteristic '" + num + "'");
      unsigned long p = std::stoul(num);
      if (p >= (1UL << 31)) fail("field characteristic out of range");
      try {
        field = Field::prime(static_cast<std::uint32_t>(p));
      } catch (const Error& e) {
        fail(e.what());
      }
    } else {
      fail("unknown coefficient field '" + fieldspec + "' (expected Q or Fp(p))");
    }
    std::vector<std::string> vars;
    for (const std::string& part : split(spec.substr(lb + 1, spec.size() - lb - 2), ",")) {
      std::string v = trim(part);
      if (!is_identifier(v)) fail("invalid variable name '" + v + "'");
      for (const std::string& seen : vars)
        if (seen == v) fail("duplicate variable name '" + v + "'");
      vars.push_back(v);
    }
    if (vars.empty()) fail("ring needs at least one variable");
    if (static_cast<int>(vars.size()) > kMaxVars - 1)
      fail("at most " + std::to_string(kMaxVars - 1) +
           " variables are supported (one position is reserved for elimination)");
    s.ring = make_ring(field, std::move(vars));
  }

  void declare_ideal(const std::string& name, const std::string& rest) {
    require_ring();
    fresh_name("ideal", name);
    std::vector<Polynomial> gens = poly_list(rest);
    for (size_t i = 0; i < gens.size(); ++i)
      if (!gens[i].is_homogeneous())
        fail("ideal " + name + ": generator " + std::to_string(i + 1) +
             " is not homogeneous");
    s.ideals.emplace(name, Ideal(s.ring, std::move(gens)));
    s.ideal_order.push_back(name);
  }

  /// An ideal reference in a module or filtration position: a declared name,
  /// or one of the literals accepted there.
  Ideal ideal_ref(const std::string& name, const Ideal& zero_means,
                  bool allow_full) const {
    if (name == "0") return zero_means;
    if (name == "R") {
      if (!allow_full) fail("'R' is not a valid component here");
      return Ideal::full(s.ring);
    }
    auto it = s.ideals.find(name);
    if (it == s.ideals.end()) fail("unknown ideal '" + name + "'");
    return it->second;
  }

  void declare_module(const std::string& name, const std::string& rest) {
    require_ring();
    fresh_name("module", name);
    std::vector<std::string> comp_names;
    std::vector<Ideal> comps;
    for (const std::string& part : split(rest, "(+)")) {
      std::string t = trim(part);
      if (t.rfind("quot(", 0) != 0 || t.back() != ')')
        fail("expected quot(IDEAL) components joined by (+), got '" + t + "'");
      std::string ref = trim(t.substr(5, t.size() - 6));
      if (ref != "0" && !is_identifier(ref))
        fail("expected quot(IDEAL) components joined by (+), got '" + t + "'");
      comps.push_back(ideal_ref(ref, Ideal::zero(s.ring), /*allow_full=*/false));
      comp_names.push_back(ref);
    }
    try {
      QuotientModule M(s.ring, std::move(comps));
      s.modules.emplace(name, NamedModule{std::move(M), std::move(comp_names)});
    } catch (const Error& e) {
      fail("module " + name + ": " + e.what());
    }
    s.module_order.push_back(name);
  }

  const NamedModule& module_ref(const std::string& name) const {
    auto it = s.modules.find(name);
    if (it == s.modules.end()) fail("unknown module '" + name + "'");
    return it->second;
  }

  /// Parse "[ [a, b], [c, d] ]" into rows of entry names.
  std::vector<std::vector<std::string>> bracket_rows(const std::string& text) const {
    std::vector<std::vector<std::string>> rows;
    size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
      skip_ws();
      if (i >= text.size() || text[i] != c)
        fail(std::string("expected '") + c + "' at column " + std::to_string(i + 1) +
             " of the member list");
      ++i;
    };
    expect('[');
    while (true) {
      expect('[');
      std::vector<std::string> row;
      while (true) {
        skip_ws();
        size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ']') ++i;
        std::string entry = trim(text.substr(start, i - start));
        if (entry.empty()) fail("empty entry in the member list");
        row.push_back(entry);
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        expect(']');
        break;
      }
      rows.push_back(std::move(row));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
    skip_ws();
    if (i != text.size()) fail("trailing text after the member list");
    return rows;
  }

  void declare_filtration(const std::string& name, const std::string& module_name,
                          const std::string& rest) {
    require_ring();
    fresh_name("filtration", name);
    const NamedModule& nm = module_ref(module_name);
    std::vector<std::vector<std::string>> rows = bracket_rows(trim(rest));
    std::vector<Submodule> chain;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != nm.module.ncomponents())
        fail("filtration " + name + ": member has " + std::to_string(row.size()) +
             " entries but the module has " + std::to_string(nm.module.ncomponents()) +
             " components");
      std::vector<Ideal> ideals;
      for (int k = 0; k < nm.module.ncomponents(); ++k)
        ideals.push_back(ideal_ref(row[static_cast<size_t>(k)],
                                   nm.module.components()[static_cast<size_t>(k)],
                                   /*allow_full=*/true));
      chain.emplace_back(std::move(ideals));
    }
    try {
      Filtration F(nm.module, std::move(chain));
      if (!check_dimension_condition(nm.module, F))
        fail("filtration " + name +
             " does not satisfy the dimension condition (dimensions must strictly "
             "increase and the last member must be the whole module)");
      s.filtrations.emplace(name, NamedFiltration{module_name, std::move(F), rows});
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind(origin, 0) == 0) throw;
      fail("filtration " + name + ": " + e.what());
    }
    s.filtration_order.push_back(name);
  }

  void declare_sop(const std::string& name, const std::string& module_name,
                   const std::string& rest) {
    require_ring();
    fresh_name("sop", name);
    const NamedModule& nm = module_ref(module_name);
    std::vector<Polynomial> polys = poly_list(rest);
    for (size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].is_constant() || !polys[i].is_homogeneous())
        fail("sop " + name + ": entry " + std::to_string(i + 1) +
             " must be a nonconstant homogeneous polynomial");
    }
    if (static_cast<int>(polys.size()) != nm.module.dim())
      fail("sop " + name + ": " + std::to_string(polys.size()) +
           " entries for a module of dimension " + std::to_string(nm.module.dim()));
    s.sops.emplace(name, NamedSop{module_name, std::move(polys)});
    s.sop_order.push_back(name);
  }

  void declare_decomp(const std::string& name, const std::string& rest) {
    require_ring();
    auto it = s.ideals.find(name);
    if (it == s.ideals.end()) fail("unknown ideal '" + name + "'");
    if (s.decomps.count(name)) fail("duplicate decomposition for ideal '" + name + "'");
    std::string body = trim(rest);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
      fail("expected decomp " + name + " = [Q1, Q2, ...]");
    std::vector<std::string> parts;
    for (const std::string& part : split(body.substr(1, body.size() - 2), ","))
      parts.push_back(trim(part));
    if (parts.empty() || (parts.size() == 1 && parts[0].empty()))
      fail("decomposition must list at least one ideal");
    for (const std::string& q : parts) {
      auto qit = s.ideals.find(q);
      if (qit == s.ideals.end()) fail("unknown ideal '" + q + "'");
      if (!qit->second.contains(it->second))
        fail("decomposition piece " + q + " does not contain " + name);
    }
    s.decomps.emplace(name, std::move(parts));
    s.decomp_order.push_back(name);
  }

  void line(const std::string& raw) {
    std::string text = raw;
    size_t hash = text.find('#');
    if (hash != std::string::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) return;

    std::istringstream words(text);
    std::string keyword;
    words >> keyword;

    if (keyword == "ring") {
      std::string rest;
      std::getline(words, rest);
      declare_ring(rest);
      return;
    }

    std::string name;
    words >> name;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);

    if (keyword == "ideal" || keyword == "module" || keyword == "decomp") {
      if (rest.rfind("=", 0) != 0)
        fail("expected '" + keyword + " NAME = ...'");
      rest = trim(rest.substr(1));
      if (keyword == "ideal") declare_ideal(name, rest);
      else if (keyword == "module") declare_module(name, rest);
      else declare_decomp(name, rest);
      return;
    }

    if (keyword == "filtration" || keyword == "sop") {
      std::istringstream tail(rest);
      std::string on, module_name, eq;
      tail >> on >> module_name >> eq;
      std::string body;
      std::getline(tail, body);
      if (on != "on" || eq != "=")
        fail("expected '" + keyword + " NAME on MODULE = ...'");
      if (keyword == "filtration") declare_filtration(name, module_name, trim(body));
      else declare_sop(name, module_name, trim(body));
      return;
    }

    fail("unknown declaration '" + keyword + "'");
  }
};

}  // namespace

std::vector<std::optional<std::vector<Ideal>>> SessionFile::supplied_decompositions(
    const std::string& module_name) const {
  auto it = modules.find(module_name);
  if (it == modules.end()) throw InputError("unknown module '" + module_name + "'");
  std::vector<std::optional<std::vector<Ideal>>> out(
      it->second.component_names.size());
  bool any = false;
  for (size_t k = 0; k < it->second.component_names.size(); ++k) {
    auto dit = decomps.find(it->second.component_names[k]);
    if (dit == decomps.end()) continue;
    std::vector<Ideal> pieces;
    for (const std::string& q : dit->second) pieces.push_back(ideals.at(q));
    out[k] = std::move(pieces);
    any = true;
  }
  if (!any) return {};
  return out;
}

SessionFile parse_session_text(const std::string& text, const std::string& origin) {
  Parser p{origin, SessionFile{}, 0};
  std::istringstream in(text);
  std::string raw;
  bool saw_any = false;
  while (std::getline(in, raw)) {
    ++p.line_no;
    std::string probe = raw;
    size_t hash = probe.find('#');
    if (hash != std::string::npos) probe = probe.substr(0, hash);
    if (!trim(probe).empty()) saw_any = true;
    p.line(raw);
  }
  if (!saw_any) throw InputError(origin + ": empty session (no declarations)");
  return std::move(p.s);
}

SessionFile parse_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session_text(buf.str(), path);
}

std::string serialize_session(const SessionFile& s) {
  std::ostringstream out;
  out << "ring " << s.ring->to_string() << "\n";
  for (const std::string& name : s.ideal_order) {
    out << "ideal " << name << " = ";
    const auto& gens = s.ideals.at(name).gens();
    if (gens.empty()) out << "0";
    for (size_t i = 0; i < gens.size(); ++i)
      out << (i ? ", " : "") << gens[i].to_string();
    out << "\n";
  }
  for (const std::string& name : s.module_order) {
    out << "module " << name << " = ";
    const auto& comps = s.modules.at(name).component_names;
    for (size_t i = 0; i < comps.size(); ++i)
      out << (i ? " (+) " : "") << "quot(" << comps[i] << ")";
    out << "\n";
  }
  for (const std::string& name : s.filtration_order) {
    const NamedFiltration& nf = s.filtrations.at(name);
    out << "filtration " << name << " on " << nf.module << " = [ ";
    for (size_t i = 0; i < nf.entry_names.size(); ++i) {
      out << (i ? ", [" : "[");
      for (size_t k = 0; k < nf.entry_names[i].size(); ++k)
        out << (k ? ", " : "") << nf.entry_names[i][k];
      out << "]";
    }
    out << " ]\n";
  }
  for (const std::string& name : s.sop_order) {
    const NamedSop& ns = s.sops.at(name);
    out << "sop " << name << " on " << ns.module << " = ";
    for (size_t i = 0; i < ns.polys.size(); ++i)
      out << (i ? ", " : "") << ns.polys[i].to_string();
    out << "\n";
  }
  for (const std::string& name : s.decomp_order) {
    out << "decomp " << name << " = [";
    const auto& parts = s.decomps.at(name);
    for (size_t i = 0; i < parts.size(); ++i) out << (i ? ", " : "") << parts[i];
    out << "]\n";
  }
  return out.str();
}

bool session_equal(const SessionFile& a, const SessionFile& b) {
  if (!a.ring || !b.ring || !(*a.ring == *b.ring)) return false;
  if (a.ideal_order != b.ideal_order || a.module_order != b.module_order ||
      a.filtration_order != b.filtration_order || a.sop_order != b.sop_order ||
      a.decomp_order != b.decomp_order)
    return false;
  for (const std::string& name : a.ideal_order)
    if (!(a.ideals.at(name).gens() == b.ideals.at(name).gens())) return false;
  for (const std::string& name : a.module_order) {
    const NamedModule& ma = a.modules.at(name);
    const NamedModule& mb = b.modules.at(name);
    if (ma.component_names != mb.component_names) return false;
    if (ma.module.ncomponents() != mb.module.ncomponents()) return false;
    for (int k = 0; k < ma.module.ncomponents(); ++k)
      if (!(ma.module.components()[static_cast<size_t>(k)].gens() ==
            mb.module.components()[static_cast<size_t>(k)].gens()))
        return false;
  }
  for (const std::string& name : a.filtration_order) {
    const NamedFiltration& fa = a.filtrations.at(name);
    const NamedFiltration& fb = b.filtrations.at(name);
    if (fa.module != fb.module || fa.entry_names != fb.entry_names) return false;
    if (fa.filtration.t() != fb.filtration.t()) return false;
    for (int i = 0; i <= fa.filtration.t(); ++i) {
      const auto& ia = fa.filtration.at(i).ideals();
      const auto& ib = fb.filtration.at(i).ideals();
      if (ia.size() != ib.size()) return false;
      for (size_t k = 0; k < ia.size(); ++k)
        if (!(ia[k].gens() == ib[k].gens())) return false;
    }
  }
  for (const std::string& name : a.sop_order) {
    const NamedSop& sa = a.sops.at(name);
    const NamedSop& sb = b.sops.at(name);
    if (sa.module != sb.module || !(sa.polys == sb.polys)) return false;
  }
  for (const std::string& name : a.decomp_order)
    if (a.decomps.at(name) != b.decomps.at(name)) return false;
  return true;
}

}  // namespace sgcm
