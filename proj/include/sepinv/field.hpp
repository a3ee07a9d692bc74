#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace sepinv {

/// Coefficient domain: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint64_t p = 0;  // modulus, Prime only

  static FieldSpec rational();
  static FieldSpec prime(std::uint64_t p);

  /// Accepts "rational" and "fp:<p>".
  static FieldSpec parse(const std::string& text);

  std::uint64_t characteristic() const { return kind == Kind::Prime ? p : 0; }
  std::string to_string() const;

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

/// True when the characteristic is 0 or exceeds n.
bool char_ok_for(const FieldSpec& field, std::size_t n);

bool is_prime_u64(std::uint64_t v);

/// Exact element of a FieldSpec domain. Rationals are kept canonical
/// (reduced, positive denominator); prime residues live in [0, p).
class FieldElement {
 public:
  FieldElement() = default;  // rational zero

  static FieldElement rational(mpq_class v);
  static FieldElement prime(std::uint64_t v, std::uint64_t p);

  /// Integer (or a/b over the rationals) mapped into the field.
  static FieldElement from_integer(const FieldSpec& field, const mpz_class& v);
  static FieldElement parse(const FieldSpec& field, const std::string& token);
  static FieldElement zero(const FieldSpec& field);
  static FieldElement one(const FieldSpec& field);

  FieldSpec field() const;
  bool is_zero() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  /// Total order: numeric over the rationals, residue order over F_p.
  bool operator<(const FieldElement& o) const;

  /// Canonical text form; equal elements produce identical strings.
  std::string to_string() const;

 private:
  FieldSpec field_;
  mpq_class rat_;          // Rational payload
  std::uint64_t res_ = 0;  // Prime payload
};

/// x^e with e >= 0; 0^0 = 1 by convention.
FieldElement pow_nonneg(const FieldElement& x, std::uint64_t e);

}  // namespace sepinv
