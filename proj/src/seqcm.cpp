#include "sgcm/seqcm.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace sgcm {

namespace {

/// Three-valued sweep over the quotients of a filtration: for j = 0..t-1 and
/// i < dim(member j+1), H^i(M/F_j) must have finite length. `no` carries a
/// witness; `undecidable` means a non-squarefree quotient ideal blocked the
/// combinatorial criterion before any infinite module was found.
struct QuotientCertification {
  Tristate verdict = Tristate::undecidable;
  std::string detail;
};

QuotientCertification certify_quotients(const QuotientModule& M, const Filtration& F,
                                        const char* label) {
  bool all_squarefree = true;
  for (int j = 0; j < F.t(); ++j) {
    QuotientModule Mq = quotient_module(M, F.at(j));
    const int bound = F.dim(j + 1);
    for (const Ideal& J : Mq.components()) {
      if (!J.is_squarefree_monomial()) {
        all_squarefree = false;
        continue;
      }
      const int dJ = J.dim_quotient();
      for (int i = 0; i < bound && i <= dJ; ++i) {
        if (!local_cohomology_length(J, i).is_finite()) {
          std::ostringstream os;
          os << "H^" << i << "(M/" << label << "_" << j << ") has infinite length";
          return {Tristate::no, os.str()};
        }
      }
    }
  }
  if (!all_squarefree)
    return {Tristate::undecidable,
            "non-squarefree quotient ideals block the cohomological test"};
  return {Tristate::yes, ""};
}

bool dimension_filtration_available(
    const QuotientModule& M,
    const std::vector<std::optional<std::vector<Ideal>>>& supplied) {
  if (!supplied.empty()) return true;
  for (const Ideal& I : M.components())
    if (!I.is_monomial()) return false;
  return true;
}

/// A pool failure in the randomized search is structural: the same pools are
/// rebuilt for every seed, so retrying cannot help.
bool search_failure_is_structural(const GoodSopSearch& gs) {
  return gs.note.find("cannot be filled") != std::string::npos;
}

}  // namespace

std::string to_string(Tristate v) {
  switch (v) {
    case Tristate::yes:
      return "yes";
    case Tristate::no:
      return "no";
    case Tristate::undecidable:
      return "undecidable";
  }
  return "?";
}

GcmFiltrationCheck check_gcm_filtration(
    const QuotientModule& M, const Filtration& F,
    const std::vector<std::optional<std::vector<Ideal>>>& supplied) {
  if (!check_dimension_condition(M, F))
    throw InputError("filtration does not satisfy the dimension condition");
  if (F.t() < 1) throw InputError("filtration needs at least one proper step");
  if (F.dim(1) <= 0)
    throw InputError(
        "generalized Cohen-Macaulay filtration test requires dim M_1 > 0");

  GcmFiltrationCheck out;
  if (F.dim(0) > 0) {
    out.verdict = Tristate::no;
    out.route = "definition";
    out.detail = "the bottom member has positive dimension";
    return out;
  }

  // Route 1: certify the dimension filtration, then compare F against it.
  if (dimension_filtration_available(M, supplied)) {
    Filtration D = dimension_filtration(M, supplied);
    QuotientCertification cert = certify_quotients(M, D, "D");
    if (cert.verdict == Tristate::no) {
      out.verdict = Tristate::no;
      out.route = "dimension-filtration certification";
      out.detail =
          "the module is not sequentially generalized Cohen-Macaulay: " + cert.detail;
      return out;
    }
    if (cert.verdict == Tristate::yes) {
      out.route = "dimension-filtration comparison";
      if (F.t() != D.t()) {
        std::ostringstream os;
        os << "filtration length " << F.t()
           << " differs from the dimension filtration length " << D.t();
        out.verdict = Tristate::no;
        out.detail = os.str();
        return out;
      }
      for (int i = 0; i < F.t(); ++i) {
        if (!submodule_leq(F.at(i), D.at(i))) {
          std::ostringstream os;
          os << "member " << i
             << " is not contained in the corresponding dimension-filtration member";
          out.verdict = Tristate::no;
          out.detail = os.str();
          return out;
        }
        if (!subquotient_length(M, F.at(i), D.at(i)).is_finite()) {
          std::ostringstream os;
          os << "D_" << i << "/M_" << i << " has infinite length";
          out.verdict = Tristate::no;
          out.detail = os.str();
          return out;
        }
      }
      out.verdict = Tristate::yes;
      out.detail = "same length as the dimension filtration and every D_i/M_i finite";
      return out;
    }
    // Certification blocked: fall through to the direct test on F.
  }

  // Route 2: test F's own quotients directly.
  QuotientCertification certF = certify_quotients(M, F, "M");
  if (certF.verdict == Tristate::yes) {
    out.verdict = Tristate::yes;
    out.route = "cohomological";
    out.detail = "all H^i(M/M_j) finite for i < dim M_{j+1}";
    return out;
  }
  if (certF.verdict == Tristate::no) {
    out.verdict = Tristate::no;
    out.route = "cohomological";
    out.detail = certF.detail;
    return out;
  }
  out.verdict = Tristate::undecidable;
  out.route = "none";
  out.detail = "undecidable by this route: non-squarefree ideals block both tests";
  return out;
}

CohomologicalInvariant invariant_I_F_cohomological(const QuotientModule& M,
                                                   const Filtration& F) {
  if (!check_dimension_condition(M, F))
    throw InputError("filtration does not satisfy the dimension condition");
  if (F.t() >= 1 && F.dim(1) <= 0)
    throw InputError("the layered invariant requires dim M_1 > 0");

  CohomologicalInvariant out;
  std::uint64_t value = h0_length(quotient_module(M, F.at(0)));
  for (int i = 0; i < F.t(); ++i) {
    const int di = (i == 0) ? std::max(F.dim(0), 0) : F.dim(i);
    const int dnext = F.dim(i + 1);
    QuotientModule Mq = quotient_module(M, F.at(i));
    for (int j = 1; j <= dnext - 1; ++j) {
      long long cij = 0;
      for (int k = di; k <= dnext - 1; ++k) cij += binomial(k - 1, j - 1);
      if (cij == 0) continue;
      for (const Ideal& J : Mq.components()) {
        if (j > J.dim_quotient()) continue;
        if (!J.is_squarefree_monomial()) {
          out.note = "unavailable (non-squarefree)";
          return out;
        }
        Length L = local_cohomology_length(J, j);
        if (!L.is_finite()) {
          std::ostringstream os;
          os << "H^" << j << "(M/M_" << i
             << ") has infinite length; the filtration is not generalized "
                "Cohen-Macaulay";
          out.note = os.str();
          return out;
        }
        value += static_cast<std::uint64_t>(cij) * L.value();
      }
    }
  }
  out.value = value;
  return out;
}

ParametricInvariant invariant_I_F(const QuotientModule& M, const Filtration& F,
                                  std::uint64_t seed, int budget,
                                  int tries_per_seed) {
  GcmFiltrationCheck check = check_gcm_filtration(M, F);
  if (check.verdict == Tristate::no)
    throw InputError("not a generalized Cohen-Macaulay filtration: " + check.detail);

  const int d = std::max(M.dim(), 0);
  const std::vector<unsigned> ones(static_cast<size_t>(d), 1);
  const std::vector<unsigned> twos(static_cast<size_t>(d), 2);

  ParametricInvariant out;
  for (int b = 0; b < budget; ++b) {
    out.seeds_tried = b + 1;
    GoodSopSearch gs =
        find_good_sop(M, F, seed + static_cast<std::uint64_t>(b), tries_per_seed);
    if (!gs.found) {
      if (search_failure_is_structural(gs)) break;
      continue;
    }
    MultiplicityTable table = multiplicity_table(M, F, gs.sop);
    const long long v1 = ifm_value(M, F, gs.sop, ones, table);
    const long long v2 = ifm_value(M, F, gs.sop, twos, table);
    if (v1 == v2) {
      out.value = v1;
      out.sop = gs.sop;
      return out;
    }
  }
  std::ostringstream os;
  os << "no witness found (budget " << budget << ")";
  throw DomainError(os.str());
}

SeqGcmVerdict is_seq_gcm(const QuotientModule& M, std::uint64_t seed, int budget,
                         int tries_per_seed,
                         const std::vector<std::optional<std::vector<Ideal>>>& supplied) {
  SeqGcmVerdict v;

  if (M.dim() <= 0) {
    Filtration D = dimension_filtration(M, supplied);
    v.is_seq_gcm = true;
    v.status = "finite-length module; trivially sequentially generalized Cohen-Macaulay";
    v.invariant_parametric = ifm_value(M, D, {}, {});
    v.invariant_cohomological_note = "not applicable (dimension <= 0)";
    v.witness_filtration = std::move(D);
    return v;
  }

  Filtration D = dimension_filtration(M, supplied);
  QuotientCertification cert = certify_quotients(M, D, "D");
  if (cert.verdict == Tristate::no) {
    v.is_seq_gcm = false;
    v.status = "proven negative: " + cert.detail;
    v.witness_filtration = std::move(D);
    return v;
  }

  const int d = M.dim();
  const std::vector<unsigned> ones(static_cast<size_t>(d), 1);
  const std::vector<unsigned> twos(static_cast<size_t>(d), 2);
  for (int b = 0; b < budget; ++b) {
    v.seeds_tried = b + 1;
    GoodSopSearch gs =
        find_good_sop(M, D, seed + static_cast<std::uint64_t>(b), tries_per_seed);
    if (!gs.found) {
      if (search_failure_is_structural(gs)) break;
      continue;
    }
    MultiplicityTable table = multiplicity_table(M, D, gs.sop);
    const long long v1 = ifm_value(M, D, gs.sop, ones, table);
    const long long v2 = ifm_value(M, D, gs.sop, twos, table);
    if (v1 != v2) continue;

    v.is_seq_gcm = true;
    v.status = "witness found";
    v.witness_sop = gs.sop;
    v.invariant_parametric = v1;
    CohomologicalInvariant coh = invariant_I_F_cohomological(M, D);
    if (coh.value) {
      v.invariant_cohomological = coh.value;
      v.agreement = (v1 >= 0) && (static_cast<std::uint64_t>(v1) == *coh.value);
    } else {
      v.invariant_cohomological_note = coh.note;
    }
    v.witness_filtration = std::move(D);
    return v;
  }

  std::ostringstream os;
  if (cert.verdict == Tristate::yes) {
    v.is_seq_gcm = true;
    os << "no parametric witness found (budget " << budget
       << "); certified sequentially generalized Cohen-Macaulay by the "
          "cohomological route";
    CohomologicalInvariant coh = invariant_I_F_cohomological(M, D);
    if (coh.value)
      v.invariant_cohomological = coh.value;
    else
      v.invariant_cohomological_note = coh.note;
  } else {
    v.is_seq_gcm = false;
    os << "no witness found (budget " << budget << "); not a proven negative";
  }
  v.status = os.str();
  v.witness_filtration = std::move(D);
  return v;
}

FiltrationComparison compare_filtrations(const QuotientModule& M, const Filtration& F,
                                         const Filtration& G, std::uint64_t seed,
                                         int budget, int tries_per_seed) {
  FiltrationComparison out;
  out.invariant_first = invariant_I_F(M, F, seed, budget, tries_per_seed).value;
  out.invariant_second = invariant_I_F(M, G, seed, budget, tries_per_seed).value;
  out.h0_first = h0_length(quotient_module(M, F.at(0)));
  out.h0_second = h0_length(quotient_module(M, G.at(0)));
  out.invariant_difference = out.invariant_first - out.invariant_second;
  out.h0_difference = static_cast<long long>(out.h0_first) -
                      static_cast<long long>(out.h0_second);
  out.agree = (out.invariant_difference == out.h0_difference);
  return out;
}

SeqCmCheck check_seq_cm(const QuotientModule& M, std::uint64_t seed, int budget,
                        int tries_per_seed,
                        const std::vector<std::optional<std::vector<Ideal>>>& supplied) {
  SeqCmCheck out;
  if (M.dim() <= 0) {
    out.is_seq_cm = true;
    out.route = "trivial";
    out.invariant = 0;
    out.vanishing = true;
    out.note = "finite-length modules are Cohen-Macaulay";
    return out;
  }

  Filtration D = dimension_filtration(M, supplied);

  // Cohomological side: H^j(M/D_{i-1}) must vanish for all j < dim D_i.
  bool found_nonzero = false;
  bool blocked = false;
  std::string witness;
  for (int i = 1; i <= D.t() && !found_nonzero; ++i) {
    QuotientModule Mq = quotient_module(M, D.at(i - 1));
    const int bound = D.dim(i);
    for (const Ideal& J : Mq.components()) {
      if (!J.is_squarefree_monomial()) {
        blocked = true;
        continue;
      }
      const int dJ = J.dim_quotient();
      for (int j = 0; j < bound && j <= dJ; ++j) {
        Length L = local_cohomology_length(J, j);
        if (!L.is_finite() || L.value() != 0) {
          found_nonzero = true;
          std::ostringstream os;
          os << "H^" << j << "(M/D_" << (i - 1) << ") is nonzero";
          witness = os.str();
          break;
        }
      }
      if (found_nonzero) break;
    }
  }
  if (found_nonzero)
    out.vanishing = false;
  else if (!blocked)
    out.vanishing = true;

  // Parametric side: the invariant of the dimension filtration.
  std::string parametric_note;
  try {
    out.invariant = invariant_I_F(M, D, seed, budget, tries_per_seed).value;
  } catch (const Error& e) {
    parametric_note = e.what();
  }

  if (out.invariant && out.vanishing.has_value()) {
    const bool parametric = (*out.invariant == 0);
    if (parametric != *out.vanishing)
      throw DomainError(
          "internal: parametric and cohomological routes disagree on sequential "
          "Cohen-Macaulayness");
    out.is_seq_cm = parametric;
    out.route = "parametric + cohomological";
    if (found_nonzero) out.note = witness;
    return out;
  }
  if (out.invariant) {
    out.is_seq_cm = (*out.invariant == 0);
    out.route = "parametric";
    out.note = "cohomological cross-check unavailable (non-squarefree)";
    return out;
  }
  if (out.vanishing.has_value()) {
    out.is_seq_cm = *out.vanishing;
    out.route = "cohomological";
    out.note = found_nonzero ? witness + "; parametric route: " + parametric_note
                             : "parametric route: " + parametric_note;
    return out;
  }
  throw DomainError("sequential Cohen-Macaulayness undecidable: " + parametric_note);
}

InvariantAdditivityCheck check_invariant_additivity(const QuotientModule& M,
                                                    const Filtration& F,
                                                    std::uint64_t seed, int budget,
                                                    int tries_per_seed) {
  InvariantAdditivityCheck out;
  out.filtration_invariant = invariant_I_F(M, F, seed, budget, tries_per_seed).value;

  std::vector<std::uint64_t> steps;
  for (int i = 0; i < F.t(); ++i) {
    // The step quotient is representable only when exactly one component
    // changes (a direct-sum step quotient with two nonzero summands is never
    // cyclic over a graded ring).
    int changed = -1;
    for (int k = 0; k < M.ncomponents(); ++k) {
      if (!ideal_equal(F.at(i).ideal(k), F.at(i + 1).ideal(k))) {
        if (changed >= 0) {
          std::ostringstream os;
          os << "not representable: step " << i
             << " changes more than one component, so its quotient is not cyclic";
          out.note = os.str();
          return out;
        }
        changed = k;
      }
    }
    if (changed < 0) {
      std::ostringstream os;
      os << "not representable: step " << i << " changes no component";
      out.note = os.str();
      return out;
    }
    const Ideal& lo = F.at(i).ideal(changed);
    const Ideal& hi = F.at(i + 1).ideal(changed);

    std::optional<Polynomial> f;
    for (const Polynomial& g : hi.groebner().elems) {
      if (ideal_equal(ideal_sum(lo, Ideal(M.ring(), {g})), hi)) {
        f = g;
        break;
      }
    }
    if (!f) {
      std::ostringstream os;
      os << "not representable: step " << i
         << " quotient is not cyclic over a single reduced-basis element";
      out.note = os.str();
      return out;
    }

    Ideal presentation = ideal_colon(lo, *f);
    if (!presentation.is_squarefree_monomial()) {
      std::ostringstream os;
      os << "not representable: step " << i << " presentation ideal is not squarefree";
      out.note = os.str();
      return out;
    }
    GcmCheck g = is_gcm_cohomological(presentation);
    if (!g.is_gcm) {
      std::ostringstream os;
      os << "step " << i
         << " quotient is not generalized Cohen-Macaulay; the comparison needs a "
            "generalized Cohen-Macaulay filtration";
      throw DomainError(os.str());
    }
    steps.push_back(g.invariant);
  }

  out.representable = true;
  out.step_invariants = std::move(steps);
  std::uint64_t right = 0;
  for (std::uint64_t s : out.step_invariants) right += s;
  out.holds = (out.filtration_invariant >= 0) &&
              (static_cast<std::uint64_t>(out.filtration_invariant) == right);
  return out;
}

TwoStepReadings two_step_invariant_readings(const QuotientModule& M,
                                            const Filtration& F) {
  if (F.t() != 1)
    throw InputError("the two readings are defined for two-member filtrations only");
  CohomologicalInvariant layered = invariant_I_F_cohomological(M, F);
  if (!layered.value)
    throw DomainError("layered value unavailable: " + layered.note);

  Length bottom = subquotient_length(M, zero_submodule(M), F.at(0));
  if (!bottom.is_finite())
    throw DomainError("the bottom member has infinite length");

  TwoStepReadings out;
  out.layered_value = *layered.value;
  out.bottom_length = bottom.value();
  out.alternative_value = out.layered_value + out.bottom_length;
  out.agree = (out.bottom_length == 0);
  return out;
}

}  // namespace sgcm
