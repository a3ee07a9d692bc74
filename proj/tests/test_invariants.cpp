#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sepinv/catalog.hpp"
#include "sepinv/invariant.hpp"

using namespace sepinv;

namespace {

const FieldSpec kQ = FieldSpec::rational();

Point pt(std::size_t n, std::size_t m, std::initializer_list<int> entries) {
  Point p(kQ, n, m);
  auto it = entries.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) p.at(i, j) = FieldElement::from_integer(kQ, *it++);
  return p;
}

FieldElement q(int v) { return FieldElement::from_integer(kQ, v); }

InvariantSet set_of(std::size_t m, std::initializer_list<Invariant> fs) {
  InvariantSet s(m);
  for (const Invariant& f : fs) s.add(f);
  return s;
}

}  // namespace

TEST_CASE("row monomial evaluation") {
  const Point p = pt(2, 2, {2, 3, 1, 1});
  CHECK(eval_row_monomial(p, 0, {1, 2}) == q(18));  // 2 * 3^2
  CHECK(eval_row_monomial(p, 0, {0, 0}) == q(1));   // empty product
  const Point z = pt(1, 2, {0, 5});
  CHECK(eval_row_monomial(z, 0, {0, 1}) == q(5));  // zero exponent erases the 0
  CHECK(eval_row_monomial(z, 0, {1, 0}) == q(0));
  CHECK(eval_row_monomial(z, 0, {0, 0}) == q(1));  // 0^0 = 1 convention
  CHECK_THROWS_AS(eval_row_monomial(p, 0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(eval_row_monomial(p, 2, {1, 2}), std::invalid_argument);
}

TEST_CASE("invariant evaluation examples") {
  CHECK(eval_invariant(tr({2}), pt(2, 1, {1, 2})) == q(5));  // 1 + 4
  CHECK(eval_invariant({2, {0, 0}}, pt(4, 2, {9, 9, 8, 8, 7, 7, 6, 6})) == q(6));  // C(4,2)
  // rows (1,1),(2,2),(3,3): monomials 1, 4, 9; sigma_2 = 4 + 9 + 36
  CHECK(eval_invariant({2, {1, 1}}, pt(3, 2, {1, 1, 2, 2, 3, 3})) == q(49));
  CHECK(eval_invariant({3, {1, 1}}, pt(3, 2, {1, 1, 2, 2, 3, 3})) == q(36));
  CHECK_THROWS_AS(eval_invariant({3, {1}}, pt(2, 1, {1, 2})), std::invalid_argument);  // t > n
  CHECK_THROWS_AS(eval_invariant({0, {1}}, pt(2, 1, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(eval_invariant(tr({1, 0}), pt(2, 1, {1, 2})), std::invalid_argument);
}

TEST_CASE("multidegree is t times k") {
  CHECK(multidegree({2, {2, 1}}) == MultiExponent{4, 2});
  CHECK(multidegree(tr({3, 0, 7})) == MultiExponent{3, 0, 7});
  CHECK(multidegree({3, {0, 0}}) == MultiExponent{0, 0});
}

TEST_CASE("admissible tuples are lexicographic") {
  using VV = std::vector<std::vector<unsigned>>;
  CHECK(admissible_tuples(2, 3) == VV{{1, 2}, {1, 3}, {2, 3}});
  CHECK(admissible_tuples(1, 3) == VV{{1}, {2}, {3}});
  CHECK(admissible_tuples(3, 3) == VV{{1, 2, 3}});
  CHECK(admissible_tuples(2, 5).size() == 10);
  CHECK_THROWS_AS(admissible_tuples(4, 3), std::invalid_argument);
}

TEST_CASE("expansion reindexes exponents") {
  CHECK(expand_invariant({2, {2, 1}}, {1, 3}, 3) == Invariant{2, {2, 0, 1}});
  CHECK(expand_invariant({2, {2, 1}}, {2, 3}, 3) == Invariant{2, {0, 2, 1}});
  CHECK(expand_invariant(tr({4, 0}), {1, 3}, 3) == tr({4, 0, 0}));
  CHECK_THROWS_AS(expand_invariant(tr({1, 1}), {3, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_invariant(tr({1, 1}), {2, 4}, 3), std::invalid_argument);
  CHECK_THROWS_AS(expand_invariant(tr({1, 1}), {2}, 3), std::invalid_argument);
}

TEST_CASE("expand_set dedups and fixes the identity case") {
  const InvariantSet s = set_of(2, {Invariant{2, {2, 1}}});
  const InvariantSet e = expand_set(s, 3);
  CHECK(e == set_of(3, {Invariant{2, {2, 1, 0}}, Invariant{2, {2, 0, 1}}, Invariant{2, {0, 2, 1}}}));
  CHECK(expand_set(s, 2) == s);
  CHECK(expand_set(build_T(4, 2), 3).size() == 24);
  CHECK_THROWS_AS(expand_set(e, 2), std::invalid_argument);
}

TEST_CASE("expansion collapses repeated ambient growth") {
  oracle::Rng rng(41);
  for (int it = 0; it < 50; ++it) {
    InvariantSet s(2);
    for (int c = 0; c < 4; ++c) s.add({c % 2 == 0 ? 1u : 2u, oracle::random_exponent(rng, 2, 3)});
    for (std::size_t mid = 2; mid <= 4; ++mid)
      for (std::size_t m = mid; m <= 5; ++m)
        CHECK(expand_set(expand_set(s, mid), m) == expand_set(s, m));
  }
}

TEST_CASE("elementary set predicate") {
  CHECK(is_elementary_set(set_of(2, {tr({1, 0}), Invariant{2, {1, 0}}})));
  CHECK_FALSE(is_elementary_set(set_of(2, {Invariant{2, {0, 1}}})));
  CHECK(is_elementary_set(build_T(2, 2)));
  CHECK(is_elementary_set(set_of(1, {})));
}

TEST_CASE("zero re-insertion closure") {
  CHECK(satisfies_condition_c(build_T(2, 2)));
  CHECK_FALSE(satisfies_condition_c(set_of(2, {tr({1, 0})})));
  CHECK(satisfies_condition_c(set_of(2, {Invariant{2, {1, 1}}, tr({2, 3})})));  // no zeros anywhere
}

TEST_CASE("set text round trip") {
  const InvariantSet t43 = build_T(4, 3);
  CHECK(InvariantSet::parse_text(t43.to_text()) == t43);
  const InvariantSet parsed = InvariantSet::parse_text("# comment\nm 2\nsigma 1 1 0\n\nsigma 2 1 1\n");
  CHECK(parsed == set_of(2, {tr({1, 0}), Invariant{2, {1, 1}}}));
  CHECK_THROWS_AS(InvariantSet::parse_text("sigma 1 1\n"), std::invalid_argument);   // no header
  CHECK_THROWS_AS(InvariantSet::parse_text("m 2\nsigma 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(InvariantSet::parse_text("m 2\nsigma 0 1 1\n"), std::invalid_argument);
  InvariantSet dup(2);
  CHECK(dup.add(tr({1, 0})));
  CHECK_FALSE(dup.add(tr({1, 0})));
  CHECK(dup.size() == 1);
}

TEST_CASE("evaluation is invariant under row permutations") {
  oracle::Rng rng(42);
  std::size_t bad = 0;
  for (const FieldSpec& field : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 1 + it % 5, m = 1 + it % 3;
      const Point p = oracle::random_point(rng, field, n, m);
      const Permutation s = oracle::random_perm(rng, n);
      const Invariant f{1 + static_cast<unsigned>(it) % static_cast<unsigned>(n),
                        oracle::random_exponent(rng, m, 3)};
      if (eval_invariant(f, apply_perm(s, p)) != eval_invariant(f, p)) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("coefficient recurrence matches subset sums up to n = 6") {
  oracle::Rng rng(43);
  std::size_t bad = 0;
  for (const FieldSpec& field : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (unsigned t = 1; t <= n; ++t) {
        for (int it = 0; it < 20; ++it) {
          const std::size_t m = 1 + it % 3;
          const Point p = oracle::random_point(rng, field, n, m);
          const Invariant f{t, oracle::random_exponent(rng, m, 3)};
          if (eval_invariant(f, p) != oracle::brute_eval(f, p)) ++bad;
        }
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("multihomogeneity under scaling one variable set") {
  oracle::Rng rng(44);
  std::size_t bad = 0;
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 1 + it % 4, m = 1 + it % 3, j = it % m;
    const Point p = oracle::random_point(rng, kQ, n, m);
    const Invariant f{1 + static_cast<unsigned>(it) % static_cast<unsigned>(n),
                      oracle::random_exponent(rng, m, 3)};
    const FieldElement lam = q(2 + it % 5);
    Point scaled = p;
    for (std::size_t i = 0; i < n; ++i) scaled.at(i, j) = scaled.at(i, j) * lam;
    const FieldElement want = pow_nonneg(lam, std::uint64_t{f.t} * f.k[j]) * eval_invariant(f, p);
    if (eval_invariant(f, scaled) != want) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("product identity 2 sigma_2(k) = tr(k)^2 - tr(2k) at rational points") {
  oracle::Rng rng(45);
  std::size_t bad = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = 2 + it % 3, m = 1 + it % 3;
    const Point p = oracle::random_point(rng, kQ, n, m);
    const MultiExponent k = oracle::random_exponent(rng, m, 3);
    MultiExponent k2 = k;
    for (auto& e : k2) e *= 2;
    const FieldElement lhs = q(2) * eval_invariant({2, k}, p);
    const FieldElement t1 = eval_invariant(tr(k), p);
    const FieldElement rhs = t1 * t1 - eval_invariant(tr(k2), p);
    if (lhs != rhs) ++bad;
  }
  CHECK(bad == 0);
}
