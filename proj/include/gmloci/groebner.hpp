#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmloci/monomial.hpp"
#include "gmloci/polynomial.hpp"

namespace gmloci {

// Caps that turn a runaway computation into a ResourceLimitError.
struct GroebnerLimits {
  std::size_t max_pairs = 100000;
  std::size_t max_terms = 500000;
  std::uint64_t max_degree = 100000;
};

// Generators in a fixed ambient ring. Reduced Groebner bases are computed on
// demand and cached per monomial order; copies share the cache, which is
// guarded by a mutex so concurrent readers are safe.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced, monic, sorted ascending by leading monomial.
  std::vector<Polynomial> groebner_basis(const MonomialOrder& order = MonomialOrder::grevlex(),
                                         const GroebnerLimits& limits = {}) const;

  bool is_unit() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const std::vector<Polynomial>& extra) const;

  // "(g1, g2, ...)" with decorated names.
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Multivariate division: divisors tried in list order, every term reduced.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Leading monomial of a nonzero polynomial under `order`.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

// Uncached Buchberger run (normal selection strategy, Gebauer-Moeller
// criteria), followed by inter-reduction.
std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order, const GroebnerLimits& limits = {});

std::vector<Polynomial> groebner_basis(const Ideal& ideal,
                                       const MonomialOrder& order = MonomialOrder::grevlex());

bool contains(const Ideal& ideal, const Polynomial& f);
bool contains(const Ideal& ideal, const Ideal& sub);  // sub is a subset of ideal
bool ideal_eq(const Ideal& a, const Ideal& b);

// First element of a's reduced basis missing from b, else the first element of
// b's basis missing from a. nullopt iff the ideals are equal.
std::optional<Polynomial> separating_witness(const Ideal& a, const Ideal& b);

// I intersected with k[retained variables]; the result lives in the subring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop);

// (I : f^inf) via I + (1 - y f) and elimination of y.
Ideal saturate(const Ideal& ideal, const Polynomial& f);

// Substitutes var := value; the result lives in the ring without `var`.
Ideal specialize(const Ideal& ideal, std::string_view var, const Scalar& value);

// Generators re-expressed in another ring (see transfer for polynomials).
Ideal transfer(const Ideal& ideal, const RingPtr& target,
               const std::map<std::string, std::string>& rename = {});

// Same generators over a different coefficient field.
Ideal change_field(const Ideal& ideal, Field field);

}  // namespace gmloci
