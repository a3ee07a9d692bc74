#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "sepinv/field.hpp"

using namespace sepinv;

TEST_CASE("field spec parse and characteristic") {
  CHECK(FieldSpec::parse("rational").characteristic() == 0);
  CHECK(FieldSpec::parse("fp:5").characteristic() == 5);
  CHECK(FieldSpec::parse("fp:5").to_string() == "fp:5");
  CHECK(FieldSpec::rational().to_string() == "rational");
  CHECK(FieldSpec::parse("fp:2") == FieldSpec::prime(2));
  CHECK_THROWS_AS(FieldSpec::parse("fp:4"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("fp:0"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("fp:1"), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::parse("real"), std::invalid_argument);
}

TEST_CASE("char_ok_for matches the paper hypothesis") {
  CHECK(char_ok_for(FieldSpec::rational(), 4));
  CHECK(char_ok_for(FieldSpec::prime(5), 4));
  CHECK_FALSE(char_ok_for(FieldSpec::prime(3), 4));
  CHECK(char_ok_for(FieldSpec::prime(3), 2));
  CHECK_FALSE(char_ok_for(FieldSpec::prime(2), 2));
}

TEST_CASE("primality spot checks") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64(1000003));
  CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(0));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
  CHECK_FALSE(is_prime_u64(1ull << 62));
}

TEST_CASE("pow_nonneg with the 0^0 = 1 convention") {
  const FieldSpec q = FieldSpec::rational();
  CHECK(pow_nonneg(FieldElement::zero(q), 0) == FieldElement::one(q));
  CHECK(pow_nonneg(FieldElement::from_integer(q, 2), 3) == FieldElement::from_integer(q, 8));
  CHECK(pow_nonneg(FieldElement::prime(2, 5), 3).residue() == 3);  // 8 mod 5
  CHECK(pow_nonneg(FieldElement::prime(0, 5), 0).residue() == 1);
  CHECK(pow_nonneg(FieldElement::prime(0, 5), 7).residue() == 0);
  CHECK(pow_nonneg(FieldElement::rational(mpq_class(2, 3)), 2) == FieldElement::rational(mpq_class(4, 9)));
}

TEST_CASE("field axioms on random triples") {
  oracle::Rng rng(20260813);
  for (const FieldSpec& field : {FieldSpec::rational(), FieldSpec::prime(7), FieldSpec::prime(10007)}) {
    std::size_t bad = 0;
    for (int it = 0; it < 1000; ++it) {
      const FieldElement a = oracle::random_element(rng, field);
      const FieldElement b = oracle::random_element(rng, field);
      const FieldElement c = oracle::random_element(rng, field);
      bool ok = (a + b) + c == a + (b + c);
      ok = ok && (a * b) * c == a * (b * c);
      ok = ok && a * (b + c) == a * b + a * c;
      ok = ok && a + b == b + a && a * b == b * a;
      ok = ok && (a + (-a)).is_zero();
      ok = ok && a - b == a + (-b);
      if (!b.is_zero()) ok = ok && b * b.inverse() == FieldElement::one(field);
      if (!ok) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("canonical representation is unique") {
  const FieldSpec q = FieldSpec::rational();
  CHECK(FieldElement::parse(q, "2/4") == FieldElement::parse(q, "1/2"));
  CHECK(FieldElement::parse(q, "2/4").to_string() == "1/2");
  CHECK(FieldElement::parse(q, "-6/4").to_string() == "-3/2");
  CHECK(FieldElement::parse(q, "7").to_string() == "7");
  CHECK(FieldElement::parse(FieldSpec::prime(5), "7").residue() == 2);
  CHECK(FieldElement::parse(FieldSpec::prime(5), "-1").residue() == 4);
  CHECK_THROWS_AS(FieldElement::parse(q, "x"), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement::parse(FieldSpec::prime(5), "1/2"), std::invalid_argument);

  oracle::Rng rng(7);
  std::size_t bad = 0;
  for (int it = 0; it < 1000; ++it) {
    const FieldElement a = oracle::random_element(rng, q);
    const FieldElement b = oracle::random_element(rng, q);
    if ((a == b) != (a.to_string() == b.to_string())) ++bad;
    if (FieldElement::parse(q, a.to_string()) != a) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("total order is consistent with equality") {
  const FieldSpec q = FieldSpec::rational();
  CHECK(FieldElement::parse(q, "-1/2") < FieldElement::parse(q, "1/3"));
  CHECK(FieldElement::prime(2, 5) < FieldElement::prime(3, 5));
  oracle::Rng rng(11);
  std::size_t bad = 0;
  for (const FieldSpec& field : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (int it = 0; it < 500; ++it) {
      const FieldElement a = oracle::random_element(rng, field);
      const FieldElement b = oracle::random_element(rng, field);
      const int rels = (a < b) + (b < a) + (a == b);
      if (rels != 1) ++bad;  // exactly one of <, >, ==
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("mixed-field operations are rejected") {
  CHECK_THROWS_AS(FieldElement::prime(1, 5) + FieldElement::prime(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement::zero(FieldSpec::rational()) * FieldElement::prime(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement::zero(FieldSpec::prime(7)).inverse(), std::invalid_argument);
}
