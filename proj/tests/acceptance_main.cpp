// Acceptance checklist: nine criteria, one [PASS]/[FAIL] line each, nonzero
// exit when anything fails. Time limits are measured and enforced here.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepinv/catalog.hpp"
#include "sepinv/report.hpp"
#include "sepinv/verify.hpp"

using namespace sepinv;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF5 = FieldSpec::prime(5);

std::vector<FieldElement> coords(const FieldSpec& field, std::initializer_list<int> xs) {
  std::vector<FieldElement> out;
  for (int x : xs) out.push_back(FieldElement::from_integer(field, x));
  return out;
}

std::vector<FieldElement> full_f5() { return coords(kF5, {0, 1, 2, 3, 4}); }

Point pt(const FieldSpec& field, std::size_t n, std::size_t m, std::initializer_list<int> entries) {
  Point p(field, n, m);
  auto it = entries.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) p.at(i, j) = FieldElement::from_integer(field, *it++);
  return p;
}

Point witness_p(const FieldSpec& f) { return pt(f, 4, 3, {1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 2, 1}); }
Point witness_q(const FieldSpec& f) { return pt(f, 4, 3, {1, 1, 2, 1, 2, 1, 2, 1, 1, 2, 2, 2}); }

/// Verification calls whose reports must not depend on the worker count.
struct TrackedRun {
  std::string name;
  std::string report_jobs1;
  std::function<std::string(unsigned)> rerun;
};
std::vector<TrackedRun> g_tracked;

SeparationReport tracked_sep(const std::string& name, const InvariantSet& s, const DomainSpec& d) {
  EngineOptions one;
  const SeparationReport rep = verify_separating(s, d, one);
  const RunMeta meta = run_meta("verify-separating", s, d);
  g_tracked.push_back({name, machine_report(meta, rep), [s, d, meta](unsigned jobs) {
                         EngineOptions o;
                         o.jobs = jobs;
                         return machine_report(meta, verify_separating(s, d, o));
                       }});
  return rep;
}

MinimalityReport tracked_min(const std::string& name, const InvariantSet& s, const DomainSpec& d,
                             std::uint64_t budget) {
  EngineOptions one;
  const MinimalityReport rep = verify_minimal(s, d, budget, one);
  RunMeta meta = run_meta("verify-minimal", s, d);
  meta.has_budget = true;
  meta.budget = budget;
  g_tracked.push_back({name, machine_report(meta, rep), [s, d, budget, meta](unsigned jobs) {
                         EngineOptions o;
                         o.jobs = jobs;
                         return machine_report(meta, verify_minimal(s, d, budget, o));
                       }});
  return rep;
}

bool crit_orbit_oracle(std::string& note) {
  oracle::Rng rng(101);
  const FieldSpec f7 = FieldSpec::prime(7);
  std::uint64_t pairs = 0, bad = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (int it = 0; it < 1000; ++it) {
        const Point p = oracle::random_point(rng, f7, n, m);
        const Point q = it % 2 == 0 ? apply_perm(oracle::random_perm(rng, n), p)
                                    : oracle::random_point(rng, f7, n, m);
        ++pairs;
        if (same_orbit(p, q) != oracle::brute_same_orbit(p, q)) ++bad;
      }
    }
  }
  std::ostringstream os;
  os << pairs << " pairs, " << bad << " disagreements";
  note = os.str();
  return bad == 0;
}

bool crit_separating_small(std::string& note) {
  const SeparationReport a = tracked_sep("T:2:2 fp:5 grid", build_T(2, 2), DomainSpec::grid(kF5, 2, 2, full_f5()));
  const SeparationReport b = tracked_sep("T:2:3 fp:5 grid", build_T(2, 3), DomainSpec::grid(kF5, 2, 3, full_f5()));
  const SeparationReport c =
      tracked_sep("T:3:3 rational grid 012", build_T(3, 3), DomainSpec::grid(kQ, 3, 3, coords(kQ, {0, 1, 2})));
  note = "3 grids: " + std::to_string(a.points_checked) + ", " + std::to_string(b.points_checked) + ", " +
         std::to_string(c.points_checked) + " points";
  return a.verdict == Verdict::Separating && b.verdict == Verdict::Separating &&
         c.verdict == Verdict::Separating;
}

bool crit_separating_n4(std::string& note) {
  const SeparationReport whole =
      tracked_sep("T:4:3 rational grid 012", build_T(4, 3), DomainSpec::grid(kQ, 4, 3, coords(kQ, {0, 1, 2})));
  const InvariantSet reduced = build_T(4, 3).without(tr({1, 1, 1}));
  const SeparationReport broken =
      tracked_sep("T:4:3 minus tr(1,1,1) grid 12", reduced, DomainSpec::grid(kQ, 4, 3, coords(kQ, {1, 2})));
  if (whole.verdict != Verdict::Separating) {
    note = "full set not separating";
    return false;
  }
  if (broken.verdict != Verdict::CounterexampleFound || !broken.counterexample) {
    note = "no counterexample after removal";
    return false;
  }
  const Point cp = canonical_form(broken.counterexample->first);
  const Point cq = canonical_form(broken.counterexample->second);
  const Point wp = canonical_form(witness_p(kQ));
  const Point wq = canonical_form(witness_q(kQ));
  const bool matches = (cp == wp && cq == wq) || (cp == wq && cq == wp);
  const FieldElement vp = eval_invariant(tr({1, 1, 1}), broken.counterexample->first);
  const FieldElement vq = eval_invariant(tr({1, 1, 1}), broken.counterexample->second);
  const FieldElement v13 = FieldElement::from_integer(kQ, 13), v14 = FieldElement::from_integer(kQ, 14);
  const bool values = (vp == v13 && vq == v14) || (vp == v14 && vq == v13);
  note = "counterexample matches the documented pair; tr(1,1,1) = " + vp.to_string() + " vs " + vq.to_string();
  return matches && values;
}

bool crit_minimality(std::string& note) {
  const DomainSpec d = DomainSpec::grid(kF5, 4, 3, full_f5());
  const MinimalityReport rep = tracked_min("T:4:3 fp:5 minimal", build_T(4, 3), d, 12000000);
  std::size_t witnesses = 0;
  for (const auto& e : rep.entries) witnesses += e.witness ? 1 : 0;
  const MinimalityReport tiny =
      tracked_min("T:4:3 rational minimal grid 12", build_T(4, 3), DomainSpec::grid(kQ, 4, 3, coords(kQ, {1, 2})), 0);
  bool tr111 = false;
  for (const auto& e : tiny.entries)
    if (e.f == tr({1, 1, 1}) && e.witness) tr111 = true;
  note = std::to_string(witnesses) + "/" + std::to_string(rep.entries.size()) +
         " witnesses; tr(1,1,1) witnessed on the {1,2} grid: " + (tr111 ? "yes" : "no");
  return rep.entries.size() == 25 && rep.all_witness() && tr111;
}

bool crit_redundancy_example(std::string& note) {
  const DomainSpec d = DomainSpec::grid(kF5, 2, 3, full_f5());
  const InvariantSet cx = build_counterexample_S3();
  const SeparationReport whole = tracked_sep("CX:S3 fp:5 grid", cx, d);
  const SeparationReport reduced =
      tracked_sep("CX:S3 minus sigma_2(0,1,0) fp:5 grid", cx.without({2, {0, 1, 0}}), d);

  oracle::Rng rng(105);
  std::uint64_t bad = 0;
  const FieldElement two = FieldElement::from_integer(kQ, 2);
  for (int it = 0; it < 1000; ++it) {
    const Point p = oracle::random_point(rng, kQ, 2, 2);
    const FieldElement lhs = two * eval_invariant({2, {0, 1}}, p);
    const FieldElement t01 = eval_invariant(tr({0, 1}), p);
    const FieldElement rhs = t01 * t01 - eval_invariant(tr({0, 2}), p);
    if (lhs != rhs) ++bad;
  }
  std::ostringstream os;
  os << "both verdicts " << to_string(whole.verdict) << "/" << to_string(reduced.verdict) << ", identity fails "
     << bad << "/1000";
  note = os.str();
  return whole.verdict == Verdict::Separating && reduced.verdict == Verdict::Separating && bad == 0;
}

bool crit_expansion(std::string& note) {
  struct Run {
    std::size_t n, m0, m;
    DomainSpec d;
  };
  const std::vector<Run> runs = {
      {2, 2, 3, DomainSpec::grid(kF5, 2, 3, full_f5())},
      {3, 2, 4, DomainSpec::grid(kQ, 3, 4, coords(kQ, {0, 1, 2}))},
      {4, 3, 4, DomainSpec::grid(kQ, 4, 4, coords(kQ, {0, 1}))},
  };
  bool ok = true;
  for (const Run& r : runs) {
    EngineOptions one;
    const SeparationReport rep = verify_expansion_theorem(r.n, r.m0, r.m, r.d, one);
    const InvariantSet s = expand_set(build_M(r.n, r.m0), r.m).sorted();
    const RunMeta meta = run_meta("verify-expansion", s, r.d);
    std::ostringstream name;
    name << "expansion n=" << r.n << " m0=" << r.m0 << " m=" << r.m;
    const DomainSpec d = r.d;
    const std::size_t n = r.n, m0 = r.m0, m = r.m;
    g_tracked.push_back({name.str(), machine_report(meta, rep), [n, m0, m, d, meta](unsigned jobs) {
                           EngineOptions o;
                           o.jobs = jobs;
                           return machine_report(meta, verify_expansion_theorem(n, m0, m, d, o));
                         }});
    ok = ok && rep.verdict == Verdict::Separating;
  }
  note = "3 expansions";
  return ok;
}

bool crit_counting(std::string& note) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= 10; ++m)
      if (m_size(n, m) != binomial_u64(m + n, n) - 1 || build_M(n, m).size() != m_size(n, m)) {
        note = "power sum count mismatch";
        return false;
      }
  for (std::size_t m = 1; m <= 12; ++m)
    if (s_size(4, m) != m_size(4, m) - binomial_u64(m, 4)) {
      note = "expanded family count mismatch";
      return false;
    }
  mpq_class prev(-1);
  bool decreasing = true;
  mpq_class last;
  for (std::size_t m : {50, 100, 150, 200}) {
    mpq_class dev = mpq_class(s_size(4, m), m_size(4, m)) * m - 16;
    if (dev < 0) dev = -dev;
    if (prev >= 0 && dev >= prev) decreasing = false;
    prev = dev;
    last = dev;
  }
  std::ostringstream os;
  os << "normalized ratio deviation at m=200: " << last.get_d();
  note = os.str();
  return decreasing && last * 10 < mpq_class(16);
}

bool crit_partition_lemmas(std::string& note) {
  // Stabilizer-meet identity and refinement characterization, exhaustively.
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto parts = oracle::all_partitions(n);
    const auto perms = oracle::all_permutations(n);
    for (const SetPartition& a : parts) {
      for (const SetPartition& b : parts) {
        const SetPartition ab = meet(a, b);
        bool contained = true;
        for (const Permutation& s : perms) {
          const bool fa = fixes(s, a), fb = fixes(s, b);
          if (fixes(s, ab) != (fa && fb)) {
            note = "stabilizer-meet identity fails at n=" + std::to_string(n);
            return false;
          }
          if (fa && !fb) contained = false;
        }
        if (refines(a, b) != contained) {
          note = "refinement characterization fails at n=" + std::to_string(n);
          return false;
        }
      }
    }
  }
  // Meet growth without refinement, random instances.
  oracle::Rng rng(108);
  for (std::size_t n = 2; n <= 8; ++n) {
    std::size_t done = 0;
    while (done < 500) {
      const SetPartition a = oracle::random_partition(rng, n, 3);
      const SetPartition b = oracle::random_partition(rng, n, 3);
      if (refines(a, b)) continue;
      ++done;
      if (meet(a, b).block_count() <= a.block_count()) {
        note = "meet growth fails at n=" + std::to_string(n);
        return false;
      }
    }
  }
  // Chains with the non-containment hypothesis meet down to a singleton.
  for (std::size_t n = 2; n <= 8; ++n) {
    const std::size_t r = n / 2;
    std::size_t done = 0;
    while (done < 500) {
      SetPartition acc = SetPartition::single_block(n);
      std::size_t picked = 0, attempts = 0;
      while (picked < r && attempts < 200) {
        ++attempts;
        const SetPartition next = oracle::random_partition(rng, n, 3);
        if (refines(acc, next)) continue;
        acc = meet(acc, next);
        ++picked;
      }
      if (picked < r) continue;
      ++done;
      if (acc.min_block() != 1) {
        note = "meet chain keeps min block above 1 at n=" + std::to_string(n);
        return false;
      }
    }
  }
  note = "exhaustive n<=6 plus 500 random instances per lemma and n";
  return true;
}

bool crit_determinism(std::string& note) {
  std::size_t mismatches = 0;
  for (const TrackedRun& run : g_tracked) {
    for (unsigned jobs : {4u, 8u}) {
      if (run.rerun(jobs) != run.report_jobs1) {
        ++mismatches;
        note += (note.empty() ? "" : "; ") + run.name + " differs at jobs=" + std::to_string(jobs);
      }
    }
  }
  if (mismatches == 0)
    note = std::to_string(g_tracked.size()) + " reports byte-identical at jobs 1/4/8";
  return mismatches == 0;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double cap_seconds;  // 0 = no limit
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "orbit-oracle-equivalence", 10, crit_orbit_oracle},
      {2, "separating-small-grids", 30, crit_separating_small},
      {3, "separating-n4-with-removal", 300, crit_separating_n4},
      {4, "minimality-witnesses", 600, crit_minimality},
      {5, "separating-not-minimal-example", 60, crit_redundancy_example},
      {6, "expansion-theorem", 600, crit_expansion},
      {7, "family-counting", 60, crit_counting},
      {8, "partition-lemmas", 60, crit_partition_lemmas},
      {9, "report-determinism", 0, crit_determinism},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.cap_seconds > 0 && secs > c.cap_seconds) {
      ok = false;
      note += (note.empty() ? "" : "; ") + std::string("over the ") +
              std::to_string(static_cast<int>(c.cap_seconds)) + "s limit";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << " (" << std::fixed
              << std::setprecision(1) << secs << "s)" << (note.empty() ? "" : " - " + note) << '\n';
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
