#include "sepinv/catalog.hpp"

#include <stdexcept>
#include <unordered_set>

namespace sepinv {

std::optional<CatalogId> CatalogId::parse(const std::string& text) {
  if (text == "CX:S3") return CatalogId{Kind::CounterexampleS3, 2, 3};
  Kind kind;
  if (text.rfind("M:", 0) == 0) kind = Kind::M;
  else if (text.rfind("S:", 0) == 0) kind = Kind::S;
  else if (text.rfind("T:", 0) == 0) kind = Kind::T;
  else return std::nullopt;
  const auto colon = text.find(':', 2);
  if (colon == std::string::npos) return std::nullopt;
  const std::string ns = text.substr(2, colon - 2);
  const std::string ms = text.substr(colon + 1);
  if (ns.empty() || ms.empty()) return std::nullopt;
  std::size_t n = 0, m = 0;
  for (char c : ns) {
    if (c < '0' || c > '9' || n > 1000) return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  for (char c : ms) {
    if (c < '0' || c > '9' || m > 100000) return std::nullopt;
    m = m * 10 + static_cast<std::size_t>(c - '0');
  }
  if (n == 0 || m == 0) return std::nullopt;
  return CatalogId{kind, n, m};
}

std::string CatalogId::to_string() const {
  switch (kind) {
    case Kind::M: return "M:" + std::to_string(n) + ':' + std::to_string(m);
    case Kind::S: return "S:" + std::to_string(n) + ':' + std::to_string(m);
    case Kind::T: return "T:" + std::to_string(n) + ':' + std::to_string(m);
    case Kind::CounterexampleS3: return "CX:S3";
  }
  return {};
}

std::size_t m0_of(std::size_t n) {
  if (n == 0) throw std::invalid_argument("m0_of: n must be positive");
  return n / 2 + 1;
}

namespace {

// k vectors with 1 <= |k| <= n in lexicographic order.
void enumerate_exponents(std::size_t n, std::size_t m, MultiExponent& k, std::size_t pos,
                         unsigned used, InvariantSet& out) {
  if (pos == m) {
    if (used >= 1) out.add(tr(k));
    return;
  }
  for (unsigned v = 0; v + used <= n; ++v) {
    k[pos] = v;
    enumerate_exponents(n, m, k, pos + 1, used + v, out);
  }
  k[pos] = 0;
}

}  // namespace

InvariantSet build_M(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("build_M: n and m must be positive");
  InvariantSet s(m);
  MultiExponent k(m, 0);
  enumerate_exponents(n, m, k, 0, 0, s);
  return s.sorted();
}

InvariantSet build_S(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("build_S: n and m must be positive");
  const std::size_t m0 = m0_of(n);
  if (m <= m0) return build_M(n, m);
  return expand_set(build_M(n, m0), m).sorted();
}

namespace {

InvariantSet base_T2() {
  InvariantSet s(2);
  s.add(tr({1, 0}));
  s.add(tr({0, 1}));
  s.add(tr({2, 0}));
  s.add(tr({0, 2}));
  s.add(tr({1, 1}));
  return s;
}

InvariantSet base_T3() {
  InvariantSet s(2);
  for (unsigned r = 1; r <= 3; ++r) {
    s.add(tr({r, 0}));
    s.add(tr({0, r}));
  }
  s.add(tr({1, 1}));
  s.add(tr({2, 1}));
  return s;
}

InvariantSet base_T4() {
  InvariantSet s(2);
  for (unsigned r = 1; r <= 4; ++r) {
    s.add(tr({r, 0}));
    s.add(tr({0, r}));
  }
  s.add(tr({1, 1}));
  s.add(tr({2, 1}));
  s.add(tr({1, 2}));
  s.add(tr({3, 1}));
  return s;
}

InvariantSet base_T43() {
  InvariantSet s = expand_set(base_T4(), 3);
  s.add(tr({1, 1, 1}));
  return s;
}

}  // namespace

InvariantSet build_T(std::size_t n, std::size_t m) {
  if (n < 2 || n > 4) {
    throw std::invalid_argument("build_T: defined only for n in {2, 3, 4}; no catalog for n = " + std::to_string(n));
  }
  if (m < 2) throw std::invalid_argument("build_T: m must be at least 2");
  if (n == 2) return (m == 2 ? base_T2() : expand_set(base_T2(), m)).sorted();
  if (n == 3) return (m == 2 ? base_T3() : expand_set(base_T3(), m)).sorted();
  if (m == 2) return base_T4().sorted();
  if (m == 3) return base_T43().sorted();
  return expand_set(base_T43(), m).sorted();
}

InvariantSet build_counterexample_S3() {
  InvariantSet s(2);
  s.add(tr({1, 0}));
  s.add(tr({2, 0}));
  s.add(tr({0, 1}));
  s.add(Invariant{2, {0, 1}});
  s.add(tr({1, 1}));
  return expand_set(s, 3).sorted();
}

InvariantSet build_catalog(const CatalogId& id) {
  switch (id.kind) {
    case CatalogId::Kind::M: return build_M(id.n, id.m);
    case CatalogId::Kind::S: return build_S(id.n, id.m);
    case CatalogId::Kind::T: return build_T(id.n, id.m);
    case CatalogId::Kind::CounterexampleS3: return build_counterexample_S3();
  }
  throw std::invalid_argument("build_catalog: bad id");
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  if (!r.fits_ulong_p()) throw std::overflow_error("binomial_u64: result does not fit");
  return r.get_ui();
}

std::uint64_t m_size(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("m_size: n and m must be positive");
  return binomial_u64(m + n, n) - 1;
}

std::uint64_t s_size(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw std::invalid_argument("s_size: n and m must be positive");
  const std::size_t m0 = m0_of(n);
  if (m <= m0) return build_M(n, m).size();
  if (m0 > 8 || m > 0xffff || n > 0xff) throw std::invalid_argument("s_size: arguments out of supported range");
  const InvariantSet base = build_M(n, m0);
  // Deduplicate expansions by the sparse layout (position, value) of each
  // nonzero entry; at most m0 pairs, packed 24 bits apiece.
  std::unordered_set<std::uint64_t> seen;
  std::vector<unsigned> values;
  std::vector<std::size_t> pos;
  for (const Invariant& f : base.elements()) {
    values.clear();
    for (unsigned v : f.k) {
      if (v) values.push_back(v);
    }
    const std::size_t s = values.size();
    pos.assign(s, 0);
    for (std::size_t i = 0; i < s; ++i) pos[i] = i;
    while (true) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < s; ++i) key = (key << 24) | (static_cast<std::uint64_t>(pos[i]) << 8) | values[i];
      seen.insert(key);
      std::size_t i = s;
      while (i > 0 && pos[i - 1] == m - s + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t u = i; u < s; ++u) pos[u] = pos[u - 1] + 1;
    }
  }
  return seen.size();
}

RatioAsymptotics asymptotic_ratio_constant(std::size_t n) {
  if (n == 0) throw std::invalid_argument("asymptotic_ratio_constant: n must be positive");
  const std::size_t m0 = m0_of(n);
  mpz_class binom, nfact, m0fact;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m0));
  mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_fac_ui(m0fact.get_mpz_t(), static_cast<unsigned long>(m0));
  mpq_class c(binom * nfact, m0fact);
  c.canonicalize();
  return RatioAsymptotics{c, static_cast<unsigned>(n - m0)};
}

}  // namespace sepinv
