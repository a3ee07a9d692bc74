#pragma once

// Internal plumbing shared by the verification engines. Not installed.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sepinv/domain.hpp"
#include "sepinv/field.hpp"
#include "sepinv/invariant.hpp"

namespace sepinv::detail {

using u64 = std::uint64_t;

// Arithmetic contexts. The hot loops run on raw residues or mpq values
// instead of FieldElement so the tag checks stay out of the inner loop.

struct PrimeCtx {
  u64 p = 0;

  using Elem = u64;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem add(Elem a, Elem b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  Elem mul(Elem a, Elem b) const { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
  Elem pow(Elem a, u64 e) const {
    Elem r = one();
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem from_field(const FieldElement& x) const { return x.residue(); }
  FieldElement to_field(Elem a) const { return FieldElement::prime(a, p); }
  void append_key(std::string& out, Elem a) const {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((a >> (8 * b)) & 0xff));
  }
};

struct RationalCtx {
  using Elem = mpq_class;

  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem pow(const Elem& a, u64 e) const {
    if (e == 0) return one();
    Elem r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return r;  // power of a reduced fraction is reduced
  }
  Elem from_field(const FieldElement& x) const { return x.rational_value(); }
  FieldElement to_field(const Elem& a) const { return FieldElement::rational(a); }
  void append_key(std::string& out, const Elem& a) const {
    out += a.get_str();
    out.push_back('\x01');
  }
};

// Evaluates fingerprints on rows given by coordinate-tuple ids. Row
// monomial values are cached per (descriptor, row id) when the table
// fits; otherwise they are recomputed per point.
template <class Ctx>
struct TypedEvaluator {
  using Elem = typename Ctx::Elem;

  Ctx ctx;
  const InvariantSet* set = nullptr;
  const DomainSpec* dom = nullptr;
  u64 rows = 0;
  bool cached = false;
  std::vector<Elem> coords;
  std::vector<Elem> table;  // [f * rows + id]

  struct Workspace {
    std::vector<Elem> vals;  // one monomial value per point row
    std::vector<Elem> dp;
  };

  void init(const Ctx& c, const InvariantSet& s, const DomainSpec& d) {
    ctx = c;
    set = &s;
    dom = &d;
    rows = d.row_count();
    coords.clear();
    for (const auto& x : d.coords) coords.push_back(ctx.from_field(x));
    const u64 n_desc = s.size();
    cached = n_desc != 0 && rows <= (u64(1) << 22) / n_desc;
    table.clear();
    if (!cached) return;
    table.reserve(rows * n_desc);
    std::vector<std::uint32_t> digits(d.m, 0);
    const auto& fs = s.elements();
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      std::fill(digits.begin(), digits.end(), 0);
      for (u64 id = 0; id < rows; ++id) {
        if (id != 0) {
          // digits advance in base |coords|, last column fastest
          std::size_t j = d.m;
          while (j-- > 0) {
            if (++digits[j] < d.coords.size()) break;
            digits[j] = 0;
          }
        }
        table.push_back(monomial_from_digits(digits, fs[fi]));
      }
    }
  }

  Elem monomial_from_digits(const std::vector<std::uint32_t>& digits, const Invariant& f) const {
    Elem r = ctx.one();
    for (std::size_t j = 0; j < f.k.size(); ++j) {
      if (f.k[j] == 0) continue;
      r = ctx.mul(r, ctx.pow(coords[digits[j]], f.k[j]));
    }
    return r;
  }

  Elem monomial(u64 id, std::size_t fi) const {
    if (cached) return table[fi * rows + id];
    return monomial_from_digits(dom->row_digits(id), set->elements()[fi]);
  }

  // out receives |set| values, in set order.
  void fingerprint_ids(const std::vector<u64>& ids, std::vector<Elem>& out, Workspace& ws) const {
    const auto& fs = set->elements();
    const std::size_t n = ids.size();
    out.resize(fs.size());
    ws.vals.resize(n);
    for (std::size_t fi = 0; fi < fs.size(); ++fi) {
      const unsigned t = fs[fi].t;
      for (std::size_t i = 0; i < n; ++i) ws.vals[i] = monomial(ids[i], fi);
      if (t == 1) {
        Elem acc = ctx.zero();
        for (std::size_t i = 0; i < n; ++i) acc = ctx.add(acc, ws.vals[i]);
        out[fi] = acc;
      } else {
        // coefficient of z^t in the product of (1 + z v_i)
        ws.dp.assign(t + 1, ctx.zero());
        ws.dp[0] = ctx.one();
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t top = std::min<std::size_t>(t, i + 1);
          for (std::size_t l = top; l >= 1; --l) ws.dp[l] = ctx.add(ws.dp[l], ctx.mul(ws.dp[l - 1], ws.vals[i]));
        }
        out[fi] = ws.dp[t];
      }
    }
  }
};

// Key codecs. Packed keys fit one u64; generic keys are byte strings.

struct PackedCodec {
  using FKey = u64;
  using CKey = u64;

  u64 p = 0;
  std::size_t n_desc = 0;
  unsigned id_bits = 0;
  std::vector<u64> ppow;  // p^i, i in [0, n_desc]

  static bool available(u64 p, std::size_t n_desc, u64 rows, std::size_t n) {
    if (p < 2) return false;
    u64 acc = 1;
    for (std::size_t i = 0; i < n_desc; ++i) {
      if (acc > std::numeric_limits<u64>::max() / p) return false;
      acc *= p;
    }
    unsigned bits = 1;
    while ((u64(1) << bits) < rows && bits < 63) ++bits;
    return bits * n <= 64;
  }

  void init(u64 prime, std::size_t descriptors, u64 rows, std::size_t n) {
    p = prime;
    n_desc = descriptors;
    ppow.assign(n_desc + 1, 1);
    for (std::size_t i = 1; i <= n_desc; ++i) ppow[i] = ppow[i - 1] * p;
    id_bits = 1;
    while ((u64(1) << id_bits) < rows && id_bits < 63) ++id_bits;
    if (static_cast<std::size_t>(id_bits) * n > 64) throw std::logic_error("packed codec: row ids do not fit");
  }

  FKey fkey(const std::vector<u64>& fp) const {
    u64 key = 0;
    for (std::size_t i = fp.size(); i-- > 0;) key = key * p + fp[i];
    return key;
  }
  u64 digit(FKey key, std::size_t fi) const { return key / ppow[fi] % p; }
  FKey masked(FKey key, std::size_t fi) const { return key - digit(key, fi) * ppow[fi]; }
  CKey ckey(const std::vector<u64>& sorted_ids) const {
    u64 key = 0;
    for (u64 id : sorted_ids) key = (key << id_bits) | id;
    return key;
  }
};

template <class Ctx>
struct GenericCodec {
  using FKey = std::string;
  using CKey = std::string;

  const Ctx* ctx = nullptr;

  FKey fkey(const std::vector<typename Ctx::Elem>& fp) const {
    std::string s;
    for (const auto& v : fp) ctx->append_key(s, v);
    return s;
  }
  CKey ckey(const std::vector<u64>& sorted_ids) const {
    std::string s;
    for (u64 id : sorted_ids) {
      for (int b = 0; b < 8; ++b) s.push_back(static_cast<char>((id >> (8 * b)) & 0xff));
    }
    return s;
  }
};

// Shared preflight: domain is valid, widths agree, every t is evaluable.
void validate_run(const InvariantSet& s, const DomainSpec& d);

// Non-decreasing id tuples stand in for row-permutation orbits of grid
// points (rows sorted by id are a canonical orbit representative because
// id order equals row lexicographic order).

mpz_class nondecreasing_tuple_count(u64 rows, std::size_t n);

// Index -> tuple in lexicographic order over non-decreasing tuples.
std::vector<u64> unrank_nondecreasing(mpz_class index, u64 rows, std::size_t n);

// Advances t to the next non-decreasing tuple; false when exhausted.
bool next_nondecreasing(std::vector<u64>& t, u64 rows);

}  // namespace sepinv::detail
