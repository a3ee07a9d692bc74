#include "sepinv/field.hpp"

#include <stdexcept>

namespace sepinv {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (v % q == 0) return v == q;
  }
  std::uint64_t d = v - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::rational() { return FieldSpec{Kind::Rational, 0}; }

FieldSpec FieldSpec::prime(std::uint64_t p) {
  require(p >= 2 && p < (1ull << 62), "prime field modulus out of range");
  require(is_prime_u64(p), "prime field modulus must be prime");
  return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational") return rational();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    require(!digits.empty(), "field: empty modulus");
    std::uint64_t p = 0;
    for (char c : digits) {
      require(c >= '0' && c <= '9', "field: modulus must be a positive integer");
      require(p <= (UINT64_MAX - 9) / 10, "field: modulus too large");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return prime(p);
  }
  throw std::invalid_argument("field: expected \"rational\" or \"fp:<p>\", got \"" + text + "\"");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::Rational ? "rational" : "fp:" + std::to_string(p);
}

bool char_ok_for(const FieldSpec& field, std::size_t n) {
  const std::uint64_t c = field.characteristic();
  return c == 0 || c > n;
}

FieldElement FieldElement::rational(mpq_class v) {
  v.canonicalize();
  FieldElement e;
  e.field_ = FieldSpec::rational();
  e.rat_ = std::move(v);
  return e;
}

FieldElement FieldElement::prime(std::uint64_t v, std::uint64_t p) {
  FieldSpec f = FieldSpec::prime(p);
  FieldElement e;
  e.field_ = f;
  e.res_ = v % p;
  return e;
}

FieldElement FieldElement::from_integer(const FieldSpec& field, const mpz_class& v) {
  if (field.kind == FieldSpec::Kind::Rational) return rational(mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(field.p));
  if (r < 0) r += static_cast<unsigned long>(field.p);
  return prime(r.get_ui(), field.p);
}

FieldElement FieldElement::parse(const FieldSpec& field, const std::string& token) {
  require(!token.empty(), "element: empty token");
  const auto slash = token.find('/');
  if (slash != std::string::npos) {
    require(field.kind == FieldSpec::Kind::Rational, "element: a/b form requires the rational field");
    mpq_class q;
    if (q.set_str(token, 10) != 0) throw std::invalid_argument("element: bad rational \"" + token + "\"");
    require(q.get_den() != 0, "element: zero denominator");
    return rational(q);
  }
  mpz_class z;
  if (z.set_str(token, 10) != 0) throw std::invalid_argument("element: bad integer \"" + token + "\"");
  return from_integer(field, z);
}

FieldElement FieldElement::zero(const FieldSpec& field) { return from_integer(field, 0); }

FieldElement FieldElement::one(const FieldSpec& field) { return from_integer(field, 1); }

FieldSpec FieldElement::field() const { return field_; }

bool FieldElement::is_zero() const {
  return field_.kind == FieldSpec::Kind::Rational ? rat_ == 0 : res_ == 0;
}

const mpq_class& FieldElement::rational_value() const {
  require(field_.kind == FieldSpec::Kind::Rational, "element: not rational");
  return rat_;
}

std::uint64_t FieldElement::residue() const {
  require(field_.kind == FieldSpec::Kind::Prime, "element: not a prime-field residue");
  return res_;
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("element: field mismatch");
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(*this, o);
  if (field_.kind == FieldSpec::Kind::Rational) return rational(rat_ + o.rat_);
  std::uint64_t s = res_ + o.res_;
  if (s >= field_.p) s -= field_.p;
  return prime(s, field_.p);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(*this, o);
  if (field_.kind == FieldSpec::Kind::Rational) return rational(rat_ - o.rat_);
  std::uint64_t s = res_ + field_.p - o.res_;
  if (s >= field_.p) s -= field_.p;
  return prime(s, field_.p);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(*this, o);
  if (field_.kind == FieldSpec::Kind::Rational) return rational(rat_ * o.rat_);
  return prime(mulmod(res_, o.res_, field_.p), field_.p);
}

FieldElement FieldElement::operator-() const {
  if (field_.kind == FieldSpec::Kind::Rational) return rational(-rat_);
  return prime(res_ == 0 ? 0 : field_.p - res_, field_.p);
}

FieldElement FieldElement::inverse() const {
  require(!is_zero(), "element: zero has no inverse");
  if (field_.kind == FieldSpec::Kind::Rational) return rational(1 / rat_);
  return prime(powmod(res_, field_.p - 2, field_.p), field_.p);
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same_field(*this, o);
  return field_.kind == FieldSpec::Kind::Rational ? rat_ == o.rat_ : res_ == o.res_;
}

bool FieldElement::operator<(const FieldElement& o) const {
  check_same_field(*this, o);
  return field_.kind == FieldSpec::Kind::Rational ? rat_ < o.rat_ : res_ < o.res_;
}

std::string FieldElement::to_string() const {
  if (field_.kind == FieldSpec::Kind::Prime) return std::to_string(res_);
  if (rat_.get_den() == 1) return rat_.get_num().get_str();
  return rat_.get_str();
}

FieldElement pow_nonneg(const FieldElement& x, std::uint64_t e) {
  if (e == 0) return FieldElement::one(x.field());
  if (x.field().kind == FieldSpec::Kind::Prime) {
    std::uint64_t p = x.field().p;
    return FieldElement::prime(powmod(x.residue(), e, p), p);
  }
  const mpq_class& q = x.rational_value();
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return FieldElement::rational(r);  // reduced input stays reduced
}

}  // namespace sepinv
