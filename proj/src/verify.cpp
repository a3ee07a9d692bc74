#include "sepinv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include "engine.hpp"
#include "sepinv/catalog.hpp"

namespace sepinv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Separating:
      return "Separating";
    case Verdict::CounterexampleFound:
      return "CounterexampleFound";
    case Verdict::InconclusiveSample:
      return "InconclusiveSample";
  }
  throw std::logic_error("verdict: bad value");
}

bool MinimalityReport::all_witness() const {
  for (const auto& e : entries) {
    if (!e.witness) return false;
  }
  return true;
}

std::vector<FieldElement> fingerprint(const InvariantSet& s, const Point& p) {
  if (s.m() != p.m()) throw std::invalid_argument("fingerprint: descriptor width does not match point width");
  std::vector<FieldElement> out;
  out.reserve(s.size());
  for (const Invariant& f : s.elements()) out.push_back(eval_invariant(f, p));
  return out;
}

bool separates(const InvariantSet& s, const Point& p, const Point& q) {
  if (p.n() != q.n() || p.m() != q.m() || !(p.field() == q.field())) {
    throw std::invalid_argument("separates: points have different shapes");
  }
  if (s.m() != p.m()) throw std::invalid_argument("separates: descriptor width does not match point width");
  for (const Invariant& f : s.elements()) {
    if (eval_invariant(f, p) != eval_invariant(f, q)) return true;
  }
  return false;
}

namespace detail {

void validate_run(const InvariantSet& s, const DomainSpec& d) {
  d.validate();
  if (s.m() != d.m) {
    throw std::invalid_argument("engine: descriptor width " + std::to_string(s.m()) +
                                " does not match domain width " + std::to_string(d.m));
  }
  for (const Invariant& f : s.elements()) {
    if (f.t > d.n) {
      throw std::invalid_argument("engine: " + f.to_string() + " needs t <= n = " + std::to_string(d.n));
    }
  }
}

mpz_class nondecreasing_tuple_count(u64 rows, std::size_t n) {
  if (rows == 0) return 0;
  if (rows - 1 > std::numeric_limits<u64>::max() - n) throw std::overflow_error("tuple count overflow");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), rows + n - 1, n);
  return r;
}

std::vector<u64> unrank_nondecreasing(mpz_class index, u64 rows, std::size_t n) {
  std::vector<u64> t(n);
  u64 floor_v = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t left = n - pos - 1;
    for (u64 v = floor_v;; ++v) {
      if (v >= rows) throw std::logic_error("unrank: index out of range");
      mpz_class block = nondecreasing_tuple_count(rows - v, left);
      if (index < block) {
        t[pos] = v;
        floor_v = v;
        break;
      }
      index -= block;
    }
  }
  return t;
}

bool next_nondecreasing(std::vector<u64>& t, u64 rows) {
  std::size_t i = t.size();
  while (i-- > 0) {
    if (t[i] + 1 < rows) {
      const u64 v = t[i] + 1;
      for (std::size_t u = i; u < t.size(); ++u) t[u] = v;
      return true;
    }
  }
  return false;
}

}  // namespace detail

namespace {

void recheck_counterexample(const InvariantSet& s, const Point& p, const Point& q) {
  // independent of the typed engines: plain evaluation plus orbit test
  if (separates(s, p, q) || same_orbit(p, q)) {
    throw std::logic_error("engine: counterexample failed the independent recheck");
  }
}

template <class Ctx, class Codec>
SeparationReport run_separating(const InvariantSet& s, const DomainSpec& d, const EngineOptions& opts,
                                const detail::TypedEvaluator<Ctx>& ev, const Codec& codec) {
  using FKey = typename Codec::FKey;
  using CKey = typename Codec::CKey;
  struct Bucket {
    std::uint64_t count = 0;
    std::map<CKey, std::uint64_t> canon_min;  // canonical rep -> least point index
  };

  const bool grid = d.mode == DomainSpec::Mode::GridExhaustive;
  const std::uint64_t total = grid ? d.grid_size() : d.sample_count;
  if (total > opts.max_points) {
    throw memory_budget_error("engine: " + std::to_string(total) + " points exceed the cap of " +
                              std::to_string(opts.max_points) + "; shrink the domain or raise the cap");
  }

  std::unordered_map<FKey, Bucket> buckets;
  std::uint64_t canon_entries = 0;
  const std::uint64_t rows = ev.rows;
  const std::uint64_t chunk = 1ull << 16;
  const std::uint64_t nchunks = total == 0 ? 0 : (total - 1) / chunk + 1;
  const int jobs = opts.jobs == 0 ? 1 : static_cast<int>(opts.jobs);
  std::atomic<bool> over_budget{false};

#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long ci = 0; ci < static_cast<long long>(nchunks); ++ci) {
    if (over_budget.load(std::memory_order_relaxed)) continue;
    std::unordered_map<FKey, Bucket> local;
    typename detail::TypedEvaluator<Ctx>::Workspace ws;
    std::vector<typename Ctx::Elem> fp;
    std::vector<std::uint64_t> ids;
    std::vector<std::uint64_t> sorted;
    const std::uint64_t beg = static_cast<std::uint64_t>(ci) * chunk;
    const std::uint64_t end = std::min(total, beg + chunk);
    if (grid) ids = d.grid_row_ids(beg);
    for (std::uint64_t idx = beg; idx < end; ++idx) {
      if (!grid) ids = d.sample_row_ids(idx);
      ev.fingerprint_ids(ids, fp, ws);
      sorted = ids;
      std::sort(sorted.begin(), sorted.end());
      Bucket& b = local[codec.fkey(fp)];
      b.count += 1;
      b.canon_min.emplace(codec.ckey(sorted), idx);  // ascending idx: first wins
      if (grid && idx + 1 < end) {
        std::size_t i = ids.size();
        while (i-- > 0) {
          if (++ids[i] < rows) break;
          ids[i] = 0;
        }
      }
    }
#pragma omp critical(sepinv_bucket_merge)
    {
      for (auto& [fk, lb] : local) {
        Bucket& gb = buckets[fk];
        gb.count += lb.count;
        for (auto& [ck, idx] : lb.canon_min) {
          auto [it, fresh] = gb.canon_min.emplace(ck, idx);
          if (fresh) {
            ++canon_entries;
          } else if (idx < it->second) {
            it->second = idx;
          }
        }
      }
      if ((buckets.size() + canon_entries) * 128 > opts.max_bucket_bytes) {
        over_budget.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (over_budget.load()) {
    throw memory_budget_error("engine: bucket table passed " + std::to_string(opts.max_bucket_bytes) +
                              " bytes; shrink the domain or raise the cap");
  }

  SeparationReport rep;
  rep.points_checked = total;
  rep.buckets = buckets.size();

  // Least offending pair overall; the per-bucket candidate (first point of
  // the bucket, first point of a different orbit) matches what a naive
  // ordered double loop would report.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (const auto& [fk, b] : buckets) {
    if (b.canon_min.size() < 2) continue;
    std::uint64_t i0 = std::numeric_limits<std::uint64_t>::max();
    const CKey* c0 = nullptr;
    for (const auto& [ck, idx] : b.canon_min) {
      if (idx < i0) {
        i0 = idx;
        c0 = &ck;
      }
    }
    std::uint64_t j = std::numeric_limits<std::uint64_t>::max();
    for (const auto& [ck, idx] : b.canon_min) {
      if (ck == *c0) continue;
      if (idx < j) j = idx;
    }
    if (!best || i0 < best->first || (i0 == best->first && j < best->second)) best = {{i0, j}};
  }

  if (best) {
    Point p = grid ? d.grid_point(best->first) : d.sample_point(best->first);
    Point q = grid ? d.grid_point(best->second) : d.sample_point(best->second);
    recheck_counterexample(s, p, q);
    rep.verdict = Verdict::CounterexampleFound;
    rep.counterexample.emplace(std::move(p), std::move(q));
  } else {
    rep.verdict = grid ? Verdict::Separating : Verdict::InconclusiveSample;
  }
  return rep;
}

}  // namespace

SeparationReport verify_separating(const InvariantSet& s, const DomainSpec& d, const EngineOptions& opts) {
  detail::validate_run(s, d);
  if (d.field.kind == FieldSpec::Kind::Prime) {
    detail::PrimeCtx ctx{d.field.p};
    detail::TypedEvaluator<detail::PrimeCtx> ev;
    ev.init(ctx, s, d);
    const bool packed_ok = detail::PackedCodec::available(ctx.p, s.size(), ev.rows, d.n);
    if (opts.path == EngineOptions::Path::Packed && !packed_ok) {
      throw std::invalid_argument("engine: packed path unavailable for this run");
    }
    if (opts.path != EngineOptions::Path::Generic && packed_ok) {
      detail::PackedCodec codec;
      codec.init(ctx.p, s.size(), ev.rows, d.n);
      return run_separating(s, d, opts, ev, codec);
    }
    detail::GenericCodec<detail::PrimeCtx> codec{&ev.ctx};
    return run_separating(s, d, opts, ev, codec);
  }
  if (opts.path == EngineOptions::Path::Packed) {
    throw std::invalid_argument("engine: packed path needs a prime field");
  }
  detail::RationalCtx ctx;
  detail::TypedEvaluator<detail::RationalCtx> ev;
  ev.init(ctx, s, d);
  detail::GenericCodec<detail::RationalCtx> codec{&ev.ctx};
  return run_separating(s, d, opts, ev, codec);
}

SeparationReport verify_expansion_theorem(std::size_t n, std::size_t m0, std::size_t m, const DomainSpec& d,
                                          const EngineOptions& opts) {
  if (n == 0) throw std::invalid_argument("expansion: n must be positive");
  if (m0 < n / 2 + 1) {
    throw std::invalid_argument("expansion: m0 = " + std::to_string(m0) + " is below floor(n/2) + 1 = " +
                                std::to_string(n / 2 + 1));
  }
  if (m < m0) throw std::invalid_argument("expansion: m must be at least m0");
  if (d.n != n || d.m != m) throw std::invalid_argument("expansion: domain shape mismatch");
  const InvariantSet s = expand_set(build_M(n, m0), m).sorted();
  return verify_separating(s, d, opts);
}

}  // namespace sepinv
