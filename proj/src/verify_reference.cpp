#include <limits>
#include <map>
#include <string>
#include <vector>

#include "engine.hpp"
#include "sepinv/verify.hpp"

// Plain single-threaded engines used to cross-check the parallel ones.
// Everything goes through the public evaluator, point by point; the only
// shared code is input validation.

namespace sepinv {
namespace {

using detail::u64;

constexpr u64 kReferenceCap = u64(1) << 22;

std::string value_key(const std::vector<FieldElement>& values) {
  std::string key;
  for (const FieldElement& v : values) {
    key += v.to_string();
    key.push_back('|');
  }
  return key;
}

Point domain_point(const DomainSpec& d, u64 idx) {
  return d.mode == DomainSpec::Mode::GridExhaustive ? d.grid_point(idx) : d.sample_point(idx);
}

}  // namespace

SeparationReport verify_separating_reference(const InvariantSet& s, const DomainSpec& d) {
  detail::validate_run(s, d);
  const bool grid = d.mode == DomainSpec::Mode::GridExhaustive;
  const u64 total = grid ? d.grid_size() : d.sample_count;
  if (total > kReferenceCap) {
    throw memory_budget_error("reference engine: domain exceeds " + std::to_string(kReferenceCap) + " points");
  }

  struct Bucket {
    u64 count = 0;
    std::map<std::string, u64> canon_min;  // canonical form text -> least index
  };
  std::map<std::string, Bucket> buckets;
  for (u64 idx = 0; idx < total; ++idx) {
    const Point p = domain_point(d, idx);
    Bucket& b = buckets[value_key(fingerprint(s, p))];
    b.count += 1;
    b.canon_min.emplace(canonical_form(p).to_text(), idx);
  }

  SeparationReport rep;
  rep.points_checked = total;
  rep.buckets = buckets.size();
  std::optional<std::pair<u64, u64>> best;
  for (const auto& [key, b] : buckets) {
    if (b.canon_min.size() < 2) continue;
    u64 i0 = std::numeric_limits<u64>::max();
    const std::string* c0 = nullptr;
    for (const auto& [ck, idx] : b.canon_min) {
      if (idx < i0) {
        i0 = idx;
        c0 = &ck;
      }
    }
    u64 j = std::numeric_limits<u64>::max();
    for (const auto& [ck, idx] : b.canon_min) {
      if (ck != *c0 && idx < j) j = idx;
    }
    if (!best || i0 < best->first || (i0 == best->first && j < best->second)) best = {{i0, j}};
  }
  if (best) {
    rep.verdict = Verdict::CounterexampleFound;
    rep.counterexample.emplace(domain_point(d, best->first), domain_point(d, best->second));
  } else {
    rep.verdict = grid ? Verdict::Separating : Verdict::InconclusiveSample;
  }
  return rep;
}

namespace {

// First pair (a, b) in index order separated by f alone.
void reference_scan(const InvariantSet& s, const std::vector<Point>& pts,
                    const std::vector<std::vector<FieldElement>>& vals,
                    std::vector<MinimalityEntry>& entries) {
  for (std::size_t fi = 0; fi < s.size(); ++fi) {
    if (entries[fi].witness) continue;
    for (std::size_t a = 0; a < pts.size() && !entries[fi].witness; ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        if (vals[a][fi] == vals[b][fi]) continue;
        bool rest_equal = true;
        for (std::size_t g = 0; g < s.size() && rest_equal; ++g) {
          if (g != fi && vals[a][g] != vals[b][g]) rest_equal = false;
        }
        if (rest_equal) {
          entries[fi].witness.emplace(pts[a], pts[b]);
          break;
        }
      }
    }
  }
}

std::vector<std::vector<FieldElement>> all_fingerprints(const InvariantSet& s, const std::vector<Point>& pts) {
  std::vector<std::vector<FieldElement>> vals;
  vals.reserve(pts.size());
  for (const Point& p : pts) vals.push_back(fingerprint(s, p));
  return vals;
}

}  // namespace

MinimalityReport verify_minimal_reference(const InvariantSet& s, const DomainSpec& d, std::uint64_t budget) {
  detail::validate_run(s, d);
  MinimalityReport rep;
  for (const Invariant& f : s.elements()) rep.entries.push_back({f, std::nullopt});
  if (s.size() == 0) return rep;
  const u64 bud = budget == 0 ? std::numeric_limits<u64>::max() : budget;
  const EngineOptions defaults;

  if (d.mode == DomainSpec::Mode::RandomSample) {
    const u64 count = std::min(d.sample_count, bud);
    if (count > kReferenceCap) throw memory_budget_error("reference engine: too many samples");
    std::vector<Point> pts;
    pts.reserve(count);
    for (u64 i = 0; i < count; ++i) pts.push_back(d.sample_point(i));
    reference_scan(s, pts, all_fingerprints(s, pts), rep.entries);
    return rep;
  }

  bool full_scanned = false;
  for (std::size_t c = 1; c <= d.coords.size(); ++c) {
    if (rep.all_witness()) break;
    const DomainSpec sub = DomainSpec::grid(
        d.field, d.n, d.m, std::vector<FieldElement>(d.coords.begin(), d.coords.begin() + c));
    u64 rows = 0;
    try {
      rows = sub.row_count();
    } catch (const std::overflow_error&) {
      break;
    }
    const mpz_class reps = detail::nondecreasing_tuple_count(rows, d.n);
    if (reps > bud || reps > defaults.max_points) break;
    if (reps > kReferenceCap) throw memory_budget_error("reference engine: too many orbit classes");
    std::vector<Point> pts;
    pts.reserve(reps.get_ui());
    std::vector<u64> ids(d.n, 0);
    do {
      pts.push_back(sub.point_from_row_ids(ids));
    } while (detail::next_nondecreasing(ids, rows));
    reference_scan(s, pts, all_fingerprints(s, pts), rep.entries);
    if (c == d.coords.size()) full_scanned = true;
  }
  if (!full_scanned && !rep.all_witness()) {
    if (bud == std::numeric_limits<u64>::max()) {
      throw memory_budget_error("minimality: exhaustive scan out of reach; set a budget to enable sampling");
    }
    if (bud > kReferenceCap) throw memory_budget_error("reference engine: too many samples");
    const DomainSpec samp = DomainSpec::sample(d.field, d.n, d.m, d.coords, bud, d.seed);
    std::vector<Point> pts;
    pts.reserve(bud);
    for (u64 i = 0; i < bud; ++i) pts.push_back(samp.sample_point(i));
    reference_scan(s, pts, all_fingerprints(s, pts), rep.entries);
  }
  return rep;
}

}  // namespace sepinv
