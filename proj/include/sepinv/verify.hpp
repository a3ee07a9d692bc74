#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepinv/domain.hpp"
#include "sepinv/invariant.hpp"
#include "sepinv/point.hpp"

namespace sepinv {

enum class Verdict { Separating, CounterexampleFound, InconclusiveSample };

std::string to_string(Verdict v);

/// Raised when a verification run would exceed the configured budget;
/// callers get a clean report of the refusal instead of an OOM kill.
class memory_budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeparationReport {
  Verdict verdict = Verdict::Separating;
  std::uint64_t points_checked = 0;
  std::uint64_t buckets = 0;
  /// Lexicographically least offending pair in enumeration order.
  std::optional<std::pair<Point, Point>> counterexample;
};

struct MinimalityEntry {
  Invariant f;
  /// Pair separated by f alone; absent means no witness was found
  /// within the budget (never a claim that none exists).
  std::optional<std::pair<Point, Point>> witness;
};

struct MinimalityReport {
  std::vector<MinimalityEntry> entries;  // in set order
  bool all_witness() const;
};

struct EngineOptions {
  enum class Path { Auto, Generic, Packed };

  unsigned jobs = 1;
  Path path = Path::Auto;
  std::uint64_t max_points = 1ull << 33;
  std::uint64_t max_bucket_bytes = 3ull << 30;
};

/// Values of every descriptor at p, in set order.
std::vector<FieldElement> fingerprint(const InvariantSet& s, const Point& p);

/// True when some descriptor takes different values at p and q.
bool separates(const InvariantSet& s, const Point& p, const Point& q);

/// Buckets the domain by fingerprint and checks each bucket lies in one
/// orbit. Counterexamples are re-checked through the plain evaluator
/// before being reported. Output is identical for every jobs value.
SeparationReport verify_separating(const InvariantSet& s, const DomainSpec& d, const EngineOptions& opts = {});

/// Single-threaded reference engine: point-by-point evaluation through the
/// public API, no caching. Must agree with verify_separating byte for byte.
SeparationReport verify_separating_reference(const InvariantSet& s, const DomainSpec& d);

/// For each f, searches for a pair separated by f but by nothing else in s.
/// Exhaustive grids are scanned one orbit representative per class, through
/// growing coordinate-prefix subgrids whose representative count stays
/// within budget; a seed-deterministic sample pass covers the remainder.
/// budget = 0 means unbounded.
MinimalityReport verify_minimal(const InvariantSet& s, const DomainSpec& d, std::uint64_t budget,
                                const EngineOptions& opts = {});

MinimalityReport verify_minimal_reference(const InvariantSet& s, const DomainSpec& d, std::uint64_t budget);

/// Builds the power-sum set for m0 variable sets, expands it to m, and
/// verifies separation over d. Requires m0 >= floor(n/2) + 1 and m >= m0.
SeparationReport verify_expansion_theorem(std::size_t n, std::size_t m0, std::size_t m, const DomainSpec& d,
                                          const EngineOptions& opts = {});

}  // namespace sepinv
