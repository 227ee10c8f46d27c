#include "gmloci/scalar.hpp"

#include "gmloci/error.hpp"

namespace gmloci {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

// Deterministic Miller-Rabin; bases {2, 7, 61} cover every n < 2^32.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrimeModulus) {
    throw ValidationError("modulus " + std::to_string(p) + " exceeds 2^31-1");
  }
  if (!is_prime(p)) {
    throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  }
  return Field{static_cast<std::uint32_t>(p)};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(modulus);
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long v) {
  if (f.is_rational()) return Scalar(mpq_class(v));
  long m = static_cast<long>(f.modulus);
  long r = v % m;
  if (r < 0) r += m;
  return Scalar(Residue{static_cast<std::uint32_t>(r), f.modulus});
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) return Scalar(q);
  mpz_class m(static_cast<unsigned long>(f.modulus));
  mpz_class den = q.get_den() % m;
  if (den == 0) {
    throw StructuralError("denominator of " + q.get_str() + " vanishes in " +
                          f.to_string());
  }
  mpz_class num = q.get_num() % m;
  if (num < 0) num += m;
  Scalar n(Residue{static_cast<std::uint32_t>(num.get_ui()), f.modulus});
  Scalar d(Residue{static_cast<std::uint32_t>(den.get_ui()), f.modulus});
  return n / d;
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t modulus) {
  return Scalar(Residue{static_cast<std::uint32_t>(value % modulus), modulus});
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field{r->modulus};
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

int Scalar::sign() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0 ? 0 : 1;
  return sgn(std::get<mpq_class>(value_));
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw StructuralError("scalar is not rational");
}

std::uint32_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw StructuralError("scalar is not a residue");
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field() != o.field()) {
    throw StructuralError("scalar field mismatch: " + field().to_string() + " vs " +
                          o.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw StructuralError("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{static_cast<std::uint32_t>(powmod(r->value, r->modulus - 2, r->modulus)),
                          r->modulus});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(field());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = static_cast<std::uint64_t>(r->value) + std::get<Residue>(o.value_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(
        mulmod(r->value, std::get<Residue>(o.value_).value, r->modulus));
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

Scalar Scalar::to_field(Field target) const {
  if (field() == target) return *this;
  if (const auto* q = std::get_if<mpq_class>(&value_)) return from_rational(target, *q);
  throw StructuralError("cannot map " + field().to_string() + " into " + target.to_string());
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace gmloci
