#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "sepinv/field.hpp"
#include "sepinv/point.hpp"

namespace sepinv {

/// Exponent vector over the m variable sets.
using MultiExponent = std::vector<unsigned>;

unsigned total_degree(const MultiExponent& k);

/// Elementary multisymmetric descriptor sigma_t(k): the t-th elementary
/// symmetric polynomial in the row monomials x^k_1, ..., x^k_n.
struct Invariant {
  unsigned t = 1;
  MultiExponent k;

  bool operator==(const Invariant& o) const { return t == o.t && k == o.k; }
  bool operator<(const Invariant& o) const { return t != o.t ? t < o.t : k < o.k; }

  /// "sigma <t> <k_1> ... <k_m>".
  std::string to_string() const;
};

/// Convenience builder for the power sum sigma_1(k).
Invariant tr(MultiExponent k);

/// Deduplicated, order-preserving collection of descriptors sharing one m.
class InvariantSet {
 public:
  explicit InvariantSet(std::size_t m);

  std::size_t m() const { return m_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<Invariant>& elements() const { return order_; }

  /// False when the descriptor was already present.
  bool add(Invariant f);
  bool contains(const Invariant& f) const { return index_.count(f) != 0; }

  InvariantSet without(const Invariant& f) const;
  /// Elements reordered by (t, k).
  InvariantSet sorted() const;

  /// Set semantics: order-insensitive comparison.
  bool operator==(const InvariantSet& o) const { return m_ == o.m_ && index_ == o.index_; }

  /// Header "m <m>" followed by one descriptor per line; '#' comments.
  std::string to_text() const;
  static InvariantSet parse(std::istream& in);
  static InvariantSet parse_text(const std::string& text);

 private:
  std::size_t m_ = 0;
  std::vector<Invariant> order_;
  std::set<Invariant> index_;
};

/// x^k_i = prod_j p(i,j)^{k_j}, with 0^0 = 1.
FieldElement eval_row_monomial(const Point& p, std::size_t i, const MultiExponent& k);

/// sigma_t(k) at p, computed by coefficient extraction from
/// prod_i (1 + z * x^k_i) in O(n t) field operations.
FieldElement eval_invariant(const Invariant& f, const Point& p);

/// Multidegree (t*k_1, ..., t*k_m).
MultiExponent multidegree(const Invariant& f);

/// Strictly increasing m0-tuples from {1, ..., m}, lexicographic.
std::vector<std::vector<unsigned>> admissible_tuples(std::size_t m0, std::size_t m);

/// Reindex f along the tuple j: entry k_s lands at position j_s.
Invariant expand_invariant(const Invariant& f, const std::vector<unsigned>& j, std::size_t m);

/// All expansions of all elements, deduplicated, insertion-ordered.
InvariantSet expand_set(const InvariantSet& s, std::size_t m);

/// Every sigma_t(k) comes with sigma_l(k) for all l < t.
bool is_elementary_set(const InvariantSet& s);

/// Zero re-insertion closure: for each descriptor with k_i = 0, dropping
/// that entry and re-inserting 0 at any position stays inside the set.
bool satisfies_condition_c(const InvariantSet& s);

}  // namespace sepinv
