#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmloci/graded_algebra.hpp"
#include "gmloci/interpolation.hpp"

namespace gmloci {

struct OracleOptions {
  // Largest admissible p^(number of variables).
  std::uint64_t max_points = 10'000'000;
};

// Solutions over F_p, sorted lexicographically (first variable most significant).
struct PointSet {
  std::uint32_t prime = 0;
  std::vector<std::string> variables;
  std::vector<std::vector<std::uint32_t>> points;

  std::size_t size() const { return points.size(); }
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

// Exhaustive evaluation of the generators over F_p. Rational coefficients are
// reduced mod p. ResourceLimitError when p^n exceeds the bound.
PointSet enumerate_points(const Ideal& ideal, std::uint32_t p, const OracleOptions& options = {});

enum class SetRelation {
  Equal,
  SubsetOfVanishing,  // points(I) inside points(J)
};

// Falsifier only: equal point sets do not imply equal ideals.
bool check_set_relation(const Ideal& i, const Ideal& j, SetRelation rel, std::uint32_t p,
                        const OracleOptions& options = {});

// counts[c] = number of F_p-points of the fiber over t = c.
std::vector<std::uint64_t> fiber_counts(const InterpolationFamily& family, std::uint32_t p,
                                        const OracleOptions& options = {});

// Points of Z(F_p) fixed by every lambda in F_p^*.
PointSet group_fixed_points(const GradedAlgebra& a, std::uint32_t p, const OracleOptions& options = {});

// True when some |w_i| >= p - 1, so lambda^{w_i} = 1 can hold for every lambda
// and group fixed points can exceed scheme fixed points.
bool group_fixed_points_weakened(const RingSpec& ring, std::uint32_t p);

}  // namespace gmloci
