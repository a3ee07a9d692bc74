#include <algorithm>
#include <optional>
#include <utility>

#include "engine.hpp"
#include "sepinv/verify.hpp"

namespace sepinv {
namespace {

using detail::u64;

struct Candidate {
  u64 i = 0, j = 0;
};

// Fingerprint storage for one scan pass. A witness pair for descriptor f
// agrees on the masked key (everything but f) and differs at f itself.

struct PackedStore {
  using Key = u64;

  const detail::PackedCodec* codec = nullptr;
  std::vector<u64> full;

  void resize(u64 count) { full.resize(count); }
  void set(u64 i, const std::vector<u64>& fp) { full[i] = codec->fkey(fp); }
  Key masked_key(u64 i, std::size_t fi) const { return codec->masked(full[i], fi); }
  bool f_differs(u64 i, u64 j, std::size_t fi) const {
    return codec->digit(full[i], fi) != codec->digit(full[j], fi);
  }
};

template <class Ctx>
struct TokenStore {
  using Key = std::string;

  Ctx ctx;
  std::size_t width = 0;  // descriptors per item
  std::vector<std::string> toks;

  void resize(u64 count) { toks.resize(count * width); }
  void set(u64 i, const std::vector<typename Ctx::Elem>& fp) {
    for (std::size_t fi = 0; fi < width; ++fi) {
      std::string s;
      ctx.append_key(s, fp[fi]);
      toks[i * width + fi] = std::move(s);
    }
  }
  Key masked_key(u64 i, std::size_t fi) const {
    std::string s;
    for (std::size_t g = 0; g < width; ++g) {
      if (g != fi) s += toks[i * width + g];
    }
    return s;
  }
  bool f_differs(u64 i, u64 j, std::size_t fi) const { return toks[i * width + fi] != toks[j * width + fi]; }
};

template <class Ctx, class Store>
void fill_reps(Store& st, u64 count, const detail::TypedEvaluator<Ctx>& ev, unsigned jobs_in) {
  st.resize(count);
  const u64 chunk = 1ull << 16;
  const u64 nch = count == 0 ? 0 : (count - 1) / chunk + 1;
  const int jobs = jobs_in == 0 ? 1 : static_cast<int>(jobs_in);
  const std::size_t n = ev.dom->n;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long ci = 0; ci < static_cast<long long>(nch); ++ci) {
    typename detail::TypedEvaluator<Ctx>::Workspace ws;
    std::vector<typename Ctx::Elem> fp;
    const u64 beg = static_cast<u64>(ci) * chunk;
    const u64 end = std::min(count, beg + chunk);
    std::vector<u64> ids =
        detail::unrank_nondecreasing(mpz_class(static_cast<unsigned long>(beg)), ev.rows, n);
    for (u64 idx = beg; idx < end; ++idx) {
      ev.fingerprint_ids(ids, fp, ws);
      st.set(idx, fp);
      if (idx + 1 < end) detail::next_nondecreasing(ids, ev.rows);
    }
  }
}

template <class Ctx, class Store>
void fill_samples(Store& st, u64 count, const detail::TypedEvaluator<Ctx>& ev, const DomainSpec& d,
                  unsigned jobs_in) {
  st.resize(count);
  const int jobs = jobs_in == 0 ? 1 : static_cast<int>(jobs_in);
#pragma omp parallel for schedule(dynamic, 4096) num_threads(jobs)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    typename detail::TypedEvaluator<Ctx>::Workspace ws;
    std::vector<typename Ctx::Elem> fp;
    ev.fingerprint_ids(d.sample_row_ids(static_cast<u64>(i)), fp, ws);
    st.set(static_cast<u64>(i), fp);
  }
}

// Least pair (by item index) agreeing everywhere but at fi. Within one
// masked group the first item pairs with the first item of another f
// value whenever any differing pair exists, so per-group candidates are
// the group minima and the global minimum matches a naive ordered scan.
template <class Store>
std::optional<Candidate> scan_for_witness(const Store& st, u64 count, std::size_t fi, unsigned jobs_in,
                                          std::vector<std::pair<typename Store::Key, u64>>& items) {
  items.resize(count);
  const int jobs = jobs_in == 0 ? 1 : static_cast<int>(jobs_in);
#pragma omp parallel for schedule(static) num_threads(jobs)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    items[static_cast<u64>(i)] = {st.masked_key(static_cast<u64>(i), fi), static_cast<u64>(i)};
  }
  std::sort(items.begin(), items.end());
  std::optional<Candidate> best;
  u64 g = 0;
  while (g < count) {
    u64 e = g + 1;
    while (e < count && items[e].first == items[g].first) ++e;
    const u64 i0 = items[g].second;
    for (u64 r = g + 1; r < e; ++r) {
      const u64 j = items[r].second;
      if (st.f_differs(i0, j, fi)) {
        if (!best || i0 < best->i || (i0 == best->i && j < best->j)) best = Candidate{i0, j};
        break;
      }
    }
    g = e;
  }
  return best;
}

void record_witness(const InvariantSet& s, std::size_t fi, Point p, Point q,
                    std::vector<MinimalityEntry>& entries) {
  const Invariant& f = s.elements()[fi];
  InvariantSet alone(s.m());
  alone.add(f);
  // independent recheck through the plain evaluator
  if (!separates(alone, p, q) || separates(s.without(f), p, q)) {
    throw std::logic_error("engine: witness failed the independent recheck");
  }
  entries[fi].witness.emplace(std::move(p), std::move(q));
}

template <class Store, class Decode>
void scan_store(const InvariantSet& s, const Store& st, u64 count, const Decode& decode, unsigned jobs,
                std::vector<MinimalityEntry>& entries) {
  std::vector<std::pair<typename Store::Key, u64>> items;
  for (std::size_t fi = 0; fi < s.size(); ++fi) {
    if (entries[fi].witness) continue;
    const auto cand = scan_for_witness(st, count, fi, jobs, items);
    if (cand) record_witness(s, fi, decode(cand->i), decode(cand->j), entries);
  }
}

// dom is a grid prefix when reps_mode (items are non-decreasing row-id
// tuples, one per orbit class), else a sample spec (items are draws).
void scan_domain(const InvariantSet& s, const DomainSpec& dom, u64 count, bool reps_mode,
                 const EngineOptions& opts, std::vector<MinimalityEntry>& entries) {
  const u64 rows = dom.row_count();
  auto decode = [&](u64 i) {
    if (reps_mode) {
      return dom.point_from_row_ids(
          detail::unrank_nondecreasing(mpz_class(static_cast<unsigned long>(i)), rows, dom.n));
    }
    return dom.sample_point(i);
  };
  auto run = [&]<class Ctx, class Store>(const Ctx& ctx, Store& st) {
    detail::TypedEvaluator<Ctx> ev;
    ev.init(ctx, s, dom);
    if (reps_mode) {
      fill_reps(st, count, ev, opts.jobs);
    } else {
      fill_samples(st, count, ev, dom, opts.jobs);
    }
    scan_store(s, st, count, decode, opts.jobs, entries);
  };

  if (dom.field.kind == FieldSpec::Kind::Prime) {
    detail::PrimeCtx ctx{dom.field.p};
    const bool packed_ok = detail::PackedCodec::available(ctx.p, s.size(), rows, dom.n);
    if (opts.path == EngineOptions::Path::Packed && !packed_ok) {
      throw std::invalid_argument("engine: packed path unavailable for this run");
    }
    if (opts.path != EngineOptions::Path::Generic && packed_ok) {
      if (count > opts.max_bucket_bytes / 24) {
        throw memory_budget_error("minimality: fingerprint table would pass the byte cap");
      }
      detail::PackedCodec codec;
      codec.init(ctx.p, s.size(), rows, dom.n);
      PackedStore st{&codec, {}};
      run(ctx, st);
      return;
    }
    if (count > (u64(1) << 22) / s.size()) {
      throw memory_budget_error(
          "minimality: token table too large for the generic path; use a packed-capable prime field or a "
          "smaller budget");
    }
    TokenStore<detail::PrimeCtx> st{ctx, s.size(), {}};
    run(ctx, st);
    return;
  }
  if (opts.path == EngineOptions::Path::Packed) {
    throw std::invalid_argument("engine: packed path needs a prime field");
  }
  detail::RationalCtx ctx;
  if (count > (u64(1) << 22) / s.size()) {
    throw memory_budget_error(
        "minimality: token table too large for the generic path; use a smaller budget or domain");
  }
  TokenStore<detail::RationalCtx> st{ctx, s.size(), {}};
  run(ctx, st);
}

}  // namespace

MinimalityReport verify_minimal(const InvariantSet& s, const DomainSpec& d, std::uint64_t budget,
                                const EngineOptions& opts) {
  detail::validate_run(s, d);
  MinimalityReport rep;
  for (const Invariant& f : s.elements()) rep.entries.push_back({f, std::nullopt});
  if (s.size() == 0) return rep;
  const u64 bud = budget == 0 ? std::numeric_limits<u64>::max() : budget;

  if (d.mode == DomainSpec::Mode::RandomSample) {
    scan_domain(s, d, std::min(d.sample_count, bud), false, opts, rep.entries);
    return rep;
  }

  // Coordinate-prefix subgrids, one orbit representative per class; each
  // level is exhaustive for its subgrid, so early witnesses are final.
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
    if (reps > bud || reps > opts.max_points) break;
    scan_domain(s, sub, reps.get_ui(), true, opts, rep.entries);
    if (c == d.coords.size()) full_scanned = true;
  }
  if (!full_scanned && !rep.all_witness()) {
    if (bud == std::numeric_limits<u64>::max()) {
      throw memory_budget_error("minimality: exhaustive scan out of reach; set a budget to enable sampling");
    }
    const DomainSpec samp = DomainSpec::sample(d.field, d.n, d.m, d.coords, bud, d.seed);
    scan_domain(s, samp, bud, false, opts, rep.entries);
  }
  return rep;
}

}  // namespace sepinv
