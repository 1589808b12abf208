#pragma once

// Verdict assembly: profile -> case I/III necessary conditions -> exhaustive
// case II -> conclusion.  Case II assignments fan out across threads; the
// ledger is merged in enumeration order, so reports are byte-identical for
// any thread count.

#include <geogal/kovacic_p.hpp>

namespace gg {

enum class VerdictKind {
  NonIntegrable,   // case IV by elimination: identity component not abelian
  CaseII,          // P found: NVE solvable, no non-integrability conclusion
  PossiblyCaseI,   // reducible-case necessary condition passed
  PossiblyCaseIII, // finite-case necessary condition passed
  NotFuchsian,
  Unsupported,
};

inline const char* verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::NonIntegrable: return "NonIntegrable";
    case VerdictKind::CaseII: return "CaseII";
    case VerdictKind::PossiblyCaseI: return "PossiblyCaseI";
    case VerdictKind::PossiblyCaseIII: return "PossiblyCaseIII";
    case VerdictKind::NotFuchsian: return "NotFuchsian";
    case VerdictKind::Unsupported: return "Unsupported";
  }
  return "?";
}

struct AssignmentOutcome {
  Assignment assignment;
  PExistsResult::Outcome outcome = PExistsResult::Outcome::NoP;
  std::string method;
  std::string p_string;  // when found
};

struct ClassifyOptions {
  int threads = 1;
  bool interval_prefilter = true;
};

struct ClassifyResult {
  VerdictKind verdict = VerdictKind::Unsupported;
  SingularityProfile profile;  // with E-sets attached when supported
  std::vector<CaseIWitness> case1_witnesses;
  bool case3_possible = false;
  CaseIIStats stats;
  std::vector<AssignmentOutcome> ledger;
  std::optional<AssignmentOutcome> found;  // the case-II hit, if any
  std::string note;
};

inline ClassifyResult classify(const RatFun& r, const ClassifyOptions& opts = {}) {
  ClassifyResult res;
  res.profile = singularity_profile(NormalFormODE{r, RatFun(r.var())});
  if (!res.profile.fuchsian) {
    res.verdict = VerdictKind::NotFuchsian;
    res.note = "irregular singular point (pole order >= 3 or insufficient decay at infinity)";
    return res;
  }
  if (!res.profile.supported) {
    res.verdict = VerdictKind::Unsupported;
    res.note = res.profile.unsupported_reason;
    return res;
  }
  res.profile = build_esets(std::move(res.profile));

  res.case1_witnesses = case1_necessary(res.profile);
  res.case3_possible = case3_necessary(res.profile);

  std::vector<Assignment> assignments = enumerate_assignments(res.profile, &res.stats);

  PExistsOptions popts;
  popts.interval_prefilter = opts.interval_prefilter;
  std::vector<AssignmentOutcome> ledger(assignments.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= assignments.size()) break;
      PExistsResult pr = p_exists(r, res.profile, assignments[i], popts);
      ledger[i].assignment = assignments[i];
      ledger[i].outcome = pr.outcome;
      ledger[i].method = pr.method;
      ledger[i].p_string = pr.p_string;
    }
  };
  int nthreads = std::max(1, opts.threads);
  if (nthreads == 1 || assignments.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  res.ledger = std::move(ledger);

  for (const auto& entry : res.ledger) {
    if (entry.outcome == PExistsResult::Outcome::Found) {
      res.found = entry;
      break;  // deterministic: first in enumeration order
    }
  }

  bool any_unsupported = false;
  for (const auto& entry : res.ledger)
    if (entry.outcome == PExistsResult::Outcome::Unsupported) any_unsupported = true;

  if (res.found) {
    res.verdict = VerdictKind::CaseII;
  } else if (!res.case1_witnesses.empty()) {
    res.verdict = VerdictKind::PossiblyCaseI;
  } else if (res.case3_possible) {
    res.verdict = VerdictKind::PossiblyCaseIII;
  } else if (any_unsupported) {
    res.verdict = VerdictKind::Unsupported;
    res.note = "a case II assignment could not be decided";
  } else {
    res.verdict = VerdictKind::NonIntegrable;
  }
  return res;
}

}  // namespace gg
