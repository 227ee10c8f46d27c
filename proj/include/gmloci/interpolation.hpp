#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gmloci/graded_algebra.hpp"

namespace gmloci {

// lhs and rhs in a common ring; witness separates them when they differ.
struct IdealComparison {
  Ideal lhs;
  Ideal rhs;
  std::optional<Polynomial> witness;

  bool holds() const { return !witness.has_value(); }
};

IdealComparison compare_ideals(Ideal lhs, Ideal rhs);

struct InterpolationOptions {
  // Negative control: omit the first linear relation from the family ideal.
  bool drop_first_relation = false;
};

// The family Z~ over the t-line inside k[t, x', x''] (machine names v#1, v#2).
// Ambient weights are anti-diagonal: t has weight 0 and both copies of x_i
// carry w_i.
class InterpolationFamily {
 public:
  using Bidegree = std::pair<std::int64_t, std::int64_t>;

  const GradedAlgebra& base() const { return base_; }
  const RingPtr& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  const std::string& t_name() const { return t_; }
  // Per ambient variable, under t -> (-1,-1), x'_i -> (w_i,0), x''_i -> (0,-w_i).
  const std::vector<Bidegree>& bigrading() const { return bigrading_; }

  // Image of a polynomial over the base ring in the first or second copy.
  Polynomial first_copy(const Polynomial& p) const;
  Polynomial second_copy(const Polynomial& p) const;
  Ideal first_copy(const Ideal& i) const;
  Ideal second_copy(const Ideal& i) const;

  // x''_i - t^{w_i} x'_i for w_i >= 0, x'_i - t^{-w_i} x''_i for w_i < 0.
  std::vector<Polynomial> linear_relations() const;

  std::optional<Bidegree> bidegree(const Polynomial& p) const;

 private:
  friend InterpolationFamily interpolation(const GradedAlgebra&, const InterpolationOptions&);

  InterpolationFamily(GradedAlgebra base, RingPtr ring, std::string t, Ideal ideal,
                      std::vector<Bidegree> bigrading);

  GradedAlgebra base_;
  RingPtr ring_;
  std::string t_;
  Ideal ideal_;
  std::vector<Bidegree> bigrading_;
};

// Ambient ring of the family for `a`: t first, then the two copies.
RingPtr family_ring(const GradedAlgebra& a);
// Family ring without t; fibers live here.
RingPtr fiber_ring(const GradedAlgebra& a);

InterpolationFamily interpolation(const GradedAlgebra& a, const InterpolationOptions& options = {});

// Independent presentation of the same ideal built from the equivariant-map
// description: generators g~ = sum coeff * c^e * t^{min(P,N)} plus the linear
// relations. Lives in family_ring(a).
Ideal deformed_presentation(const GradedAlgebra& a);

// Substitutes t := c.
Ideal fiber(const InterpolationFamily& f, const Scalar& c);

// I(x') + J-(x') + I(x'') + J+(x'') + (x'_i - x''_i : w_i = 0), in fiber_ring.
Ideal fiber_product_presentation(const GradedAlgebra& a);
// I(x') + I(x'') + (x''_i - x'_i), in fiber_ring.
Ideal diagonal_presentation(const GradedAlgebra& a);
// Graph of the action of a nonzero scalar c, in fiber_ring.
Ideal action_graph_presentation(const GradedAlgebra& a, const Scalar& c);

enum class ClosureVerdict { Equal, Strict };
std::string_view to_string(ClosureVerdict v);

struct ClosureReport {
  Ideal saturated;  // (I~ : t^inf)
  ClosureVerdict verdict;
  std::optional<Polynomial> witness;  // in the saturation, not in I~
  bool raw_graph_agrees;              // saturation of I(x') + relations is the same
};

ClosureReport graph_closure(const InterpolationFamily& f);

enum class Side { Plus, Minus };
std::string_view to_string(Side s);

// Plus: I~ + I(x'') + J-(x'') against I(x') + J-(x') + (x''_i - t^{w_i} x'_i : w_i >= 0)
// + (x''_i : w_i < 0). Minus is the mirror image.
IdealComparison check_open_embedding_iso(const GradedAlgebra& a, Side side);

struct ContractingCheck {
  Side form;
  IdealComparison comparison;
};

// Plus form when a is contracting, minus form when its weight negation is;
// ContractError otherwise.
ContractingCheck check_contracting_interp(const GradedAlgebra& a);

// I~ of the closed subscheme against I~ + (extra(x')) + (extra(x'')).
IdealComparison check_closed_functoriality(const GradedAlgebra& a, const std::vector<Polynomial>& extra);

}  // namespace gmloci
