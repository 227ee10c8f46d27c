#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace gmloci {

// Coefficient field: the rationals (modulus == 0) or F_p.
struct Field {
  std::uint32_t modulus = 0;

  static constexpr Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p);  // validates primality and range

  bool is_rational() const { return modulus == 0; }
  std::string to_string() const;
  friend bool operator==(const Field&, const Field&) = default;
};

inline constexpr std::uint64_t kMaxPrimeModulus = 2147483647ULL;  // 2^31 - 1

bool is_prime(std::uint64_t n);

// Exact element of a coefficient field. Rationals are kept in lowest terms
// by GMP; residues live in [0, p). Arithmetic between different fields
// throws StructuralError.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_rational(Field f, const mpq_class& q);  // reduces mod p when needed
  static Scalar residue(std::uint64_t value, std::uint32_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  // Sign as printed; residues are never negative.
  int sign() const;

  const mpq_class& rational() const;
  std::uint32_t residue_value() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(unsigned e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Image in another field: Q -> F_p reduction, identity otherwise.
  Scalar to_field(Field target) const;

  // "3", "-1/2", residues as their representative in [0, p).
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit Scalar(Residue r) : value_(r) {}
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace gmloci
