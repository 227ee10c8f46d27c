#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmloci/monomial.hpp"
#include "gmloci/ring.hpp"
#include "gmloci/scalar.hpp"

namespace gmloci {

struct Term {
  Monomial mono;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over a RingSpec. Terms are distinct, nonzero and sorted
// descending in grevlex, so equal polynomials have equal term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
  // Combines like terms and drops zeros; terms may arrive in any order.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading_term() const;  // grevlex; throws on zero

  bool uses_variable(std::size_t index) const;
  std::uint64_t total_degree() const;

  // Weighted degree when every term has the same one, nullopt when the
  // polynomial is not weight-homogeneous. Throws DegreeUndefinedError on 0.
  std::optional<std::int64_t> weighted_degree() const;
  bool is_homogeneous() const;  // zero counts as homogeneous
  std::vector<std::int64_t> term_degrees() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  // Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Canonical text ("x*y - z^2"); `decorate` maps x#1 -> x' etc.
  std::string to_string(bool decorate = true) const;

 private:
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Ring homomorphism determined by images of the source variables (indexed by
// source variable). Every image must live in `target`.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const RingPtr& target);
// Same, with images keyed by variable name; a missing image is a StructuralError.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target);

// Re-express p in `target`, sending each variable to the target variable of the
// same name (after optional renaming via `rename`). Coefficients are mapped
// into the target field.
Polynomial transfer(const Polynomial& p, const RingPtr& target,
                    const std::map<std::string, std::string>& rename = {});

}  // namespace gmloci
