#pragma once

// Differential Galois classification of a Fuchsian w'' = r(y) w along the
// four-case split: a necessary-condition sweep for the reducible and finite
// cases, the full necessary-and-sufficient dihedral (case II) search with
// per-root integer assignments, and the full-SL2 conclusion by elimination.
//
// Case II decisions are exact.  An interval pre-filter (certified rectangle
// arithmetic straight from the singular-point boxes) dispatches the typical
// inconsistent system without building the splitting field; anything it
// cannot certify falls back to exact quotient-ring elimination with dynamic
// (D5) splitting.

#include <geogal/algpoly.hpp>
#include <geogal/nve.hpp>

#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace gg {

// ---------------------------------------------------------------------------
// E-sets (attached to a profile's PointData)

inline std::vector<long> eset_for(const Rat& beta, bool delta_zero, bool at_infinity) {
  std::vector<long> out;
  if (beta != 0) {
    out.push_back(2);
    // 2 +- 2 sqrt(1+4beta), kept when integral
    Rat R = Rat(1) + Rat(4) * beta;
    if (R >= 0) {
      Int pq = R.get_num() * R.get_den();
      if (int_is_square(pq)) {
        Rat val = make_rat(Int(2) * int_sqrt(pq), R.get_den());
        if (rat_is_integer(val)) {
          long v = static_cast<long>(val.get_num().get_si());
          for (long e : {2 + v, 2 - v})
            if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
        }
      }
    }
  } else if (at_infinity) {
    out = {0, 2, 4};
  } else if (!delta_zero) {
    out = {4};
  } else {
    out = {0};
  }
  std::sort(out.begin(), out.end());
  return out;
}

// fills the eset field of every point; requires a supported Fuchsian profile
inline SingularityProfile build_esets(SingularityProfile p) {
  if (!p.fuchsian || !p.supported) return p;
  for (auto& pt : p.finite) pt.eset = eset_for(pt.beta, pt.delta_zero, false);
  p.infinity.eset = eset_for(p.infinity.beta, true, true);
  return p;
}

// ---------------------------------------------------------------------------
// case I necessary condition (reducible / triangulisable group)

struct ModifiedExponent {
  QuadExt plus, minus;
};

inline ModifiedExponent modified_exponent(const PointData& p) {
  if (p.at_infinity) {
    if (p.beta != 0) return {p.tau_plus, p.tau_minus};
    return {QuadExt::rational(Rat(1)), QuadExt::rational(Rat(0))};
  }
  if (p.beta != 0) return {p.tau_plus, p.tau_minus};
  if (!p.delta_zero) return {QuadExt::rational(Rat(1)), QuadExt::rational(Rat(1))};
  return {QuadExt::rational(Rat(0)), QuadExt::rational(Rat(0))};
}

struct CaseIWitness {
  int inf_sign = +1;                  // which alpha_inf was used
  std::vector<int> plus_counts;      // per finite factor: roots taking alpha+
  long d = 0;
};

// Enumerates all sign choices (per factor only the count of '+' matters,
// since conjugate roots share their modified exponents).  Empty result means
// case I is eliminated.
inline std::vector<CaseIWitness> case1_necessary(const SingularityProfile& p) {
  std::vector<CaseIWitness> witnesses;
  ModifiedExponent inf = modified_exponent(p.infinity);
  std::vector<ModifiedExponent> fin;
  std::vector<int> sizes;
  for (const auto& pt : p.finite) {
    fin.push_back(modified_exponent(pt));
    sizes.push_back(pt.factor.degree());
  }
  std::vector<int> counts(fin.size(), 0);
  for (int s = 0; s < 2; ++s) {
    const QuadExt& ainf = s == 0 ? inf.plus : inf.minus;
    // iterate the product of counts 0..n_f
    std::fill(counts.begin(), counts.end(), 0);
    while (true) {
      RadicalSum d;
      d.add(ainf);
      for (size_t f = 0; f < fin.size(); ++f) {
        // counts[f] * alpha+ + (n_f - counts[f]) * alpha-
        d.sub(QuadExt{fin[f].plus.a * counts[f] + fin[f].minus.a * (sizes[f] - counts[f]),
                      Rat(0), Int(0)});
        // radical parts
        Rat radical_coeff = fin[f].plus.b * counts[f];
        if (radical_coeff != 0) d.sub(QuadExt{Rat(0), radical_coeff, fin[f].plus.s});
        Rat radical_coeff_m = fin[f].minus.b * (sizes[f] - counts[f]);
        if (radical_coeff_m != 0) d.sub(QuadExt{Rat(0), radical_coeff_m, fin[f].minus.s});
      }
      if (d.is_nonnegative_integer()) {
        CaseIWitness w;
        w.inf_sign = s == 0 ? +1 : -1;
        w.plus_counts = counts;
        w.d = static_cast<long>(d.rational_part().get_num().get_si());
        witnesses.push_back(std::move(w));
      }
      // next counts vector
      size_t f = 0;
      while (f < counts.size() && counts[f] == sizes[f]) {
        counts[f] = 0;
        ++f;
      }
      if (f == counts.size()) break;
      ++counts[f];
    }
  }
  return witnesses;
}

// ---------------------------------------------------------------------------
// case III necessary condition (finite group): all indicial exponents rational

inline bool case3_necessary(const SingularityProfile& p) {
  auto rational_tau = [](const PointData& pt) {
    Rat R = pt.one_plus_4beta;
    if (R < 0) return false;
    return int_is_square(Int(R.get_num() * R.get_den()));
  };
  for (const auto& pt : p.finite)
    if (!rational_tau(pt)) return false;
  return rational_tau(p.infinity);
}

// ---------------------------------------------------------------------------
// the family's irrationality fact: sqrt(1+4*beta_0) = 2 sqrt(n^2-2n-1) is
// never rational

inline bool irrationality_check(long n) {
  if (n < 1) throw std::invalid_argument("irrationality_check: n must be >= 1");
  Int v = Int(n) * Int(n) - 2 * Int(n) - 1;
  return !int_is_square(v);
}

// ---------------------------------------------------------------------------
// case II assignments

struct Assignment {
  std::vector<std::vector<long>> e_per_factor;  // per finite factor, per root
  long e_inf = 0;
  long d = 0;

  std::string e_tuple_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& f : e_per_factor)
      for (long e : f) {
        if (!first) os << ",";
        os << e;
        first = false;
      }
    if (!first) os << ";";
    os << "inf=" << e_inf << ")";
    return os.str();
  }
};

struct CaseIIStats {
  std::map<long, long> ordered_by_d;  // ordered per-root assignment counts
  std::map<long, long> classes_by_d;  // multiset-class counts
};

namespace detail {

// all count vectors (c_0..c_{k-1}) with sum n
inline void compositions(int n, int k, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (k == 1) {
    cur.push_back(n);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int c = 0; c <= n; ++c) {
    cur.push_back(c);
    compositions(n - c, k - 1, cur, emit);
    cur.pop_back();
  }
}

// expand a per-factor value multiset into every distinct ordered assignment
inline void expand_orderings(const std::vector<long>& values, std::vector<int> remaining,
                             std::vector<long>& cur, int n,
                             const std::function<void(const std::vector<long>&)>& emit) {
  if (static_cast<int>(cur.size()) == n) {
    emit(cur);
    return;
  }
  for (size_t v = 0; v < values.size(); ++v) {
    if (remaining[v] == 0) continue;
    remaining[v]--;
    cur.push_back(values[v]);
    expand_orderings(values, remaining, cur, n, emit);
    cur.pop_back();
    remaining[v]++;
  }
}

}  // namespace detail

// All ordered per-root assignments satisfying d in N_0 and the
// not-all-even parity rule, sorted by (d, e_inf, e-tuple).
inline std::vector<Assignment> enumerate_assignments(const SingularityProfile& p,
                                                     CaseIIStats* stats = nullptr) {
  std::vector<const PointData*> pts;
  for (const auto& pt : p.finite) pts.push_back(&pt);

  // per-factor multiset choices: counts over the factor's E-set values
  struct FactorChoice {
    std::vector<int> counts;
    long sum = 0;
    bool all_even = true;
  };
  std::vector<std::vector<FactorChoice>> per_factor;
  for (const auto* pt : pts) {
    std::vector<FactorChoice> choices;
    int n = pt->factor.degree();
    std::vector<int> cur;
    detail::compositions(n, static_cast<int>(pt->eset.size()), cur,
                         [&](const std::vector<int>& counts) {
                           FactorChoice fc;
                           fc.counts = counts;
                           for (size_t v = 0; v < counts.size(); ++v) {
                             fc.sum += pt->eset[v] * counts[v];
                             if (counts[v] > 0 && (pt->eset[v] % 2) != 0) fc.all_even = false;
                           }
                           choices.push_back(std::move(fc));
                         });
    per_factor.push_back(std::move(choices));
  }

  std::vector<Assignment> out;
  std::vector<size_t> idx(per_factor.size(), 0);
  while (true) {
    long sum = 0;
    bool all_even = true;
    for (size_t f = 0; f < per_factor.size(); ++f) {
      const auto& fc = per_factor[f][idx[f]];
      sum += fc.sum;
      all_even = all_even && fc.all_even;
    }
    for (long e_inf : p.infinity.eset) {
      long num = e_inf - sum;
      if (num < 0 || (num % 2) != 0) continue;
      if (all_even && (e_inf % 2) == 0) continue;  // "not all even" over the full tuple
      long d = num / 2;
      if (stats) stats->classes_by_d[d] += 1;
      // expand to ordered per-root assignments
      std::vector<std::vector<std::vector<long>>> factor_orderings(per_factor.size());
      for (size_t f = 0; f < per_factor.size(); ++f) {
        const auto& fc = per_factor[f][idx[f]];
        std::vector<long> cur;
        std::vector<long> values(pts[f]->eset.begin(), pts[f]->eset.end());
        detail::expand_orderings(values, fc.counts, cur, pts[f]->factor.degree(),
                                 [&](const std::vector<long>& v) {
                                   factor_orderings[f].push_back(v);
                                 });
      }
      // cartesian product across factors
      std::vector<size_t> oi(per_factor.size(), 0);
      while (true) {
        Assignment a;
        a.e_inf = e_inf;
        a.d = d;
        for (size_t f = 0; f < per_factor.size(); ++f)
          a.e_per_factor.push_back(factor_orderings[f][oi[f]]);
        out.push_back(std::move(a));
        size_t f = 0;
        while (f < oi.size() && oi[f] + 1 == factor_orderings[f].size()) {
          oi[f] = 0;
          ++f;
        }
        if (f == oi.size()) break;
        ++oi[f];
      }
    }
    size_t f = 0;
    while (f < idx.size() && idx[f] + 1 == per_factor[f].size()) {
      idx[f] = 0;
      ++f;
    }
    if (f == idx.size()) break;
    ++idx[f];
  }

  std::sort(out.begin(), out.end(), [](const Assignment& a, const Assignment& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.e_inf != b.e_inf) return a.e_inf < b.e_inf;
    return a.e_per_factor < b.e_per_factor;
  });
  if (stats)
    for (const auto& a : out) stats->ordered_by_d[a.d] += 1;
  return out;
}

}  // namespace gg

#include <geogal/kovacic_p.hpp>
#include <geogal/kovacic_classify.hpp>
