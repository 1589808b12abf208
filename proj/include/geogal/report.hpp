#pragma once

// Report assembly and serialization.  Exact quantities are serialized as
// canonical strings, never floats, so reports stay machine-checkable; the
// JSON layout is versioned and round-trips losslessly.

#include <geogal/geom.hpp>
#include <geogal/kovacic.hpp>

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace gg {

inline constexpr const char* kToolVersion = "geogal 1.0.0";
inline constexpr int kReportSchema = 1;

inline std::string tau_pair_string(const Rat& one_plus_4beta) {
  const Rat& R = one_plus_4beta;
  if (R >= 0) {
    Int pq = R.get_num() * R.get_den();
    if (int_is_square(pq)) {
      Rat root = make_rat(int_sqrt(pq), R.get_den());
      Rat tp = (Rat(1) + root) / 2, tm = (Rat(1) - root) / 2;
      return rat_to_string(tp) + ", " + rat_to_string(tm);
    }
    return "(1 \xc2\xb1 sqrt(" + rat_to_string(R) + "))/2";
  }
  return "(1 \xc2\xb1 i*sqrt(" + rat_to_string(Rat(-R)) + "))/2";
}

inline std::string eset_string(const std::vector<long>& eset) {
  std::string s = "{";
  for (size_t i = 0; i < eset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eset[i]);
  }
  return s + "}";
}

struct Report {
  int schema = kReportSchema;
  std::string tool_version = kToolVersion;
  std::string command;
  std::string input;
  std::string mode;

  // pipeline stages (empty when not applicable)
  std::string nve_a, nve_b;
  std::string normal_form_r;
  std::string multiplier_half_a;
  bool symmetry_exact = true;

  struct PointRow {
    std::string point;
    int multiplicity = 0;
    std::string beta;
    std::string delta;
    std::string tau;
    std::string eset;
  };
  std::vector<PointRow> singular_points;
  bool fuchsian = true;

  bool case1_eliminated = false;
  std::vector<std::string> case1_witnesses;
  bool case3_eliminated = false;

  std::vector<std::pair<long, long>> counts_ordered;
  std::vector<std::pair<long, long>> counts_classes;

  struct LedgerRow {
    std::string e_tuple;
    long d = 0;
    std::string outcome;
    std::string method;
  };
  std::vector<LedgerRow> ledger;
  std::string found_p;
  std::string found_assignment;

  std::string verdict;
  double runtime_seconds = 0;
  std::vector<std::string> notes;

  // --- pde-test payload
  std::string pde_verdict;
  std::string pde_mode;
  std::string pde_residual;
};

inline std::string delta_summary(const PointData& p) {
  if (p.at_infinity) return "-";
  if (p.delta_zero) return "0";
  if (p.delta_rep.degree() <= 0) return rat_to_string(p.delta_rep.constant_term());
  return "rep " + p.delta_rep.to_string() + " in Q[t]/(" +
         Poly('t', std::vector<Rat>(p.factor.coeffs())).to_string() + ")";
}

inline std::string point_name(const PointData& p) {
  if (p.at_infinity) return "y = infinity";
  if (p.factor.degree() == 1) return "y = " + rat_to_string(-p.factor[0]);
  return "roots of " + p.factor.to_string();
}

inline void fill_profile(Report& rep, const SingularityProfile& prof) {
  rep.fuchsian = prof.fuchsian;
  for (const auto& p : prof.finite) {
    Report::PointRow row;
    row.point = point_name(p);
    row.multiplicity = p.multiplicity;
    row.beta = p.beta_constant ? rat_to_string(p.beta) : "non-constant";
    row.delta = delta_summary(p);
    row.tau = p.beta_constant && prof.fuchsian ? tau_pair_string(p.one_plus_4beta) : "-";
    row.eset = p.eset.empty() ? "-" : eset_string(p.eset);
    rep.singular_points.push_back(std::move(row));
  }
  if (prof.fuchsian) {
    Report::PointRow row;
    row.point = point_name(prof.infinity);
    row.multiplicity = 0;
    row.beta = rat_to_string(prof.infinity.beta);
    row.delta = "-";
    row.tau = tau_pair_string(prof.infinity.one_plus_4beta);
    row.eset = prof.infinity.eset.empty() ? "-" : eset_string(prof.infinity.eset);
    rep.singular_points.push_back(std::move(row));
  }
}

inline void fill_classification(Report& rep, const ClassifyResult& res) {
  fill_profile(rep, res.profile);
  rep.verdict = verdict_name(res.verdict);
  rep.case1_eliminated = res.case1_witnesses.empty();
  for (const auto& w : res.case1_witnesses) {
    std::ostringstream os;
    os << "d=" << w.d << " via alpha_inf" << (w.inf_sign > 0 ? "+" : "-") << ", plus-counts (";
    for (size_t i = 0; i < w.plus_counts.size(); ++i) {
      if (i) os << ",";
      os << w.plus_counts[i];
    }
    os << ")";
    rep.case1_witnesses.push_back(os.str());
  }
  rep.case3_eliminated = !res.case3_possible;
  for (const auto& [d, c] : res.stats.ordered_by_d) rep.counts_ordered.emplace_back(d, c);
  for (const auto& [d, c] : res.stats.classes_by_d) rep.counts_classes.emplace_back(d, c);
  for (const auto& e : res.ledger) {
    Report::LedgerRow row;
    row.e_tuple = e.assignment.e_tuple_string();
    row.d = e.assignment.d;
    row.method = e.method;
    switch (e.outcome) {
      case PExistsResult::Outcome::NoP: row.outcome = "no P"; break;
      case PExistsResult::Outcome::Found: row.outcome = "P found"; break;
      case PExistsResult::Outcome::Unsupported: row.outcome = "undecided"; break;
    }
    rep.ledger.push_back(std::move(row));
  }
  if (res.found) {
    rep.found_p = res.found->p_string.empty() ? "1" : res.found->p_string;
    rep.found_assignment = res.found->assignment.e_tuple_string();
  }
  if (!res.note.empty()) rep.notes.push_back(res.note);
}

// ---------------------------------------------------------------------------
// json (schema 1)

inline void to_json(nlohmann::json& j, const Report::PointRow& r) {
  j = nlohmann::json{{"point", r.point},
                     {"multiplicity", r.multiplicity},
                     {"beta", r.beta},
                     {"delta", r.delta},
                     {"tau", r.tau},
                     {"eset", r.eset}};
}

inline void from_json(const nlohmann::json& j, Report::PointRow& r) {
  j.at("point").get_to(r.point);
  j.at("multiplicity").get_to(r.multiplicity);
  j.at("beta").get_to(r.beta);
  j.at("delta").get_to(r.delta);
  j.at("tau").get_to(r.tau);
  j.at("eset").get_to(r.eset);
}

inline void to_json(nlohmann::json& j, const Report::LedgerRow& r) {
  j = nlohmann::json{
      {"e_tuple", r.e_tuple}, {"d", r.d}, {"outcome", r.outcome}, {"method", r.method}};
}

inline void from_json(const nlohmann::json& j, Report::LedgerRow& r) {
  j.at("e_tuple").get_to(r.e_tuple);
  j.at("d").get_to(r.d);
  j.at("outcome").get_to(r.outcome);
  j.at("method").get_to(r.method);
}

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"schema", r.schema},
                     {"tool_version", r.tool_version},
                     {"command", r.command},
                     {"input", r.input},
                     {"mode", r.mode},
                     {"symmetry_exact", r.symmetry_exact},
                     {"nve_a", r.nve_a},
                     {"nve_b", r.nve_b},
                     {"normal_form_r", r.normal_form_r},
                     {"multiplier_half_a", r.multiplier_half_a},
                     {"fuchsian", r.fuchsian},
                     {"singular_points", r.singular_points},
                     {"case1_eliminated", r.case1_eliminated},
                     {"case1_witnesses", r.case1_witnesses},
                     {"case3_eliminated", r.case3_eliminated},
                     {"counts_ordered", r.counts_ordered},
                     {"counts_classes", r.counts_classes},
                     {"ledger", r.ledger},
                     {"found_p", r.found_p},
                     {"found_assignment", r.found_assignment},
                     {"verdict", r.verdict},
                     {"runtime_seconds", r.runtime_seconds},
                     {"notes", r.notes},
                     {"pde_verdict", r.pde_verdict},
                     {"pde_mode", r.pde_mode},
                     {"pde_residual", r.pde_residual}};
}

inline void from_json(const nlohmann::json& j, Report& r) {
  j.at("schema").get_to(r.schema);
  j.at("tool_version").get_to(r.tool_version);
  j.at("command").get_to(r.command);
  j.at("input").get_to(r.input);
  j.at("mode").get_to(r.mode);
  j.at("symmetry_exact").get_to(r.symmetry_exact);
  j.at("nve_a").get_to(r.nve_a);
  j.at("nve_b").get_to(r.nve_b);
  j.at("normal_form_r").get_to(r.normal_form_r);
  j.at("multiplier_half_a").get_to(r.multiplier_half_a);
  j.at("fuchsian").get_to(r.fuchsian);
  j.at("singular_points").get_to(r.singular_points);
  j.at("case1_eliminated").get_to(r.case1_eliminated);
  j.at("case1_witnesses").get_to(r.case1_witnesses);
  j.at("case3_eliminated").get_to(r.case3_eliminated);
  j.at("counts_ordered").get_to(r.counts_ordered);
  j.at("counts_classes").get_to(r.counts_classes);
  j.at("ledger").get_to(r.ledger);
  j.at("found_p").get_to(r.found_p);
  j.at("found_assignment").get_to(r.found_assignment);
  j.at("verdict").get_to(r.verdict);
  j.at("runtime_seconds").get_to(r.runtime_seconds);
  j.at("notes").get_to(r.notes);
  j.at("pde_verdict").get_to(r.pde_verdict);
  j.at("pde_mode").get_to(r.pde_mode);
  j.at("pde_residual").get_to(r.pde_residual);
}

// ---------------------------------------------------------------------------
// human-readable table

inline void print_report(std::ostream& os, const Report& r) {
  os << r.tool_version << " | " << r.command;
  if (!r.mode.empty()) os << " (" << r.mode << ")";
  os << "\ninput: " << r.input << "\n";
  if (!r.nve_a.empty()) {
    os << "\nNVE  xi'' + a xi' + b xi = 0\n";
    os << "  a = " << r.nve_a << "\n";
    os << "  b = " << r.nve_b << "\n";
  }
  if (!r.normal_form_r.empty()) {
    os << "normal form  w'' = r w,  w = xi * exp(int a/2)\n";
    os << "  r = " << r.normal_form_r << "\n";
  }
  if (!r.singular_points.empty()) {
    os << "\nsingular points" << (r.fuchsian ? "" : "  [NOT FUCHSIAN]") << ":\n";
    os << "  " << std::left << std::setw(28) << "point" << std::setw(5) << "m" << std::setw(12)
       << "beta" << std::setw(24) << "tau+-" << std::setw(12) << "E-set" << "delta\n";
    for (const auto& p : r.singular_points) {
      os << "  " << std::left << std::setw(28) << p.point << std::setw(5) << p.multiplicity
         << std::setw(12) << p.beta << std::setw(24) << p.tau << std::setw(12) << p.eset << p.delta
         << "\n";
    }
  }
  if (!r.verdict.empty()) {
    if (!r.counts_ordered.empty()) {
      os << "\ncase II assignments (ordered per-root count by d): ";
      for (const auto& [d, c] : r.counts_ordered) os << "d=" << d << ":" << c << "  ";
      os << "\ncase II assignment classes by d:                   ";
      for (const auto& [d, c] : r.counts_classes) os << "d=" << d << ":" << c << "  ";
      os << "\n";
    }
    os << "case I " << (r.case1_eliminated ? "eliminated" : "possible") << "; case III "
       << (r.case3_eliminated ? "eliminated" : "possible") << "\n";
    if (!r.found_p.empty())
      os << "case II polynomial found: P = " << r.found_p << " at " << r.found_assignment << "\n";
    os << "\nVERDICT: " << r.verdict << "\n";
  }
  if (!r.pde_verdict.empty()) {
    os << "pde candidate test (y f_xx - f_y = 0): " << r.pde_verdict << " [" << r.pde_mode
       << " mode]";
    if (!r.pde_residual.empty()) os << ", residual = " << r.pde_residual;
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << std::setprecision(3) << "runtime: " << r.runtime_seconds << " s\n";
}

}  // namespace gg
