#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sepinv/invariant.hpp"

namespace sepinv {

/// Named set families: "M:<n>:<m>", "S:<n>:<m>", "T:<n>:<m>", "CX:S3".
struct CatalogId {
  enum class Kind { M, S, T, CounterexampleS3 };

  Kind kind = Kind::M;
  std::size_t n = 0, m = 0;

  static std::optional<CatalogId> parse(const std::string& text);
  std::string to_string() const;
};

/// Smallest m0 for which expansion preserves separation: floor(n/2) + 1.
std::size_t m0_of(std::size_t n);

/// Power sums tr(k), 1 <= |k| <= n, ordered by (t, k).
InvariantSet build_M(std::size_t n, std::size_t m);

/// M itself for m <= m0(n), otherwise the expansion of M at m0(n).
InvariantSet build_S(std::size_t n, std::size_t m);

/// Minimal separating families, defined for n in {2, 3, 4} and m >= 2.
InvariantSet build_T(std::size_t n, std::size_t m);

/// Expansion to m = 3 of {tr(1,0), tr(2,0), tr(0,1), sigma_2(0,1), tr(1,1)}
/// (n = 2). Separating but not minimal: 2*sigma_2(0,1,0) = tr(0,1,0)^2 - tr(0,2,0).
InvariantSet build_counterexample_S3();

InvariantSet build_catalog(const CatalogId& id);

/// |M| = C(m+n, n) - 1.
std::uint64_t m_size(std::size_t n, std::size_t m);

/// |S| by deduplicated enumeration of the expansion.
std::uint64_t s_size(std::size_t n, std::size_t m);

/// |S_m|/|M_m| ~ constant / m^exponent as m grows.
struct RatioAsymptotics {
  mpq_class constant;
  unsigned exponent = 0;
};
RatioAsymptotics asymptotic_ratio_constant(std::size_t n);

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

}  // namespace sepinv
