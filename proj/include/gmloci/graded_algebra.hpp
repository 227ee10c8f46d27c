#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmloci/groebner.hpp"

namespace gmloci {

// Throws ValidationError naming the first non-homogeneous entry (1-based)
// together with its term degrees. `what` labels the entries in the message.
void require_homogeneous(const std::vector<Polynomial>& polys, std::string_view what);

// Z = Spec k[x]/I with lambda . x_i = lambda^{w_i} x_i. The defining ideal must
// be generated by weight-homogeneous polynomials, i.e. be G_m-stable.
class GradedAlgebra {
 public:
  GradedAlgebra(RingPtr ring, std::vector<Polynomial> gens);
  explicit GradedAlgebra(Ideal ideal);

  const RingPtr& ring() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Polynomial>& generators() const { return ideal_.generators(); }

 private:
  Ideal ideal_;
};

GradedAlgebra new_graded_algebra(RingPtr ring, std::vector<Polynomial> gens);

// (x_i : w_i < 0), (x_i : w_i > 0), (x_i : w_i != 0) in the ambient ring.
Ideal negative_ideal(const RingPtr& ring);
Ideal positive_ideal(const RingPtr& ring);
Ideal nonzero_weight_ideal(const RingPtr& ring);

// Derived algebras keep every ambient variable; killed variables sit in the ideal.
GradedAlgebra fixed_points(const GradedAlgebra& a);  // A^0: I + (x_i : w_i != 0)
GradedAlgebra attractor(const GradedAlgebra& a);     // A^+: I + (x_i : w_i < 0)
GradedAlgebra repeller(const GradedAlgebra& a);      // A^-: I + (x_i : w_i > 0)

GradedAlgebra negate_weights(const GradedAlgebra& a);
GradedAlgebra change_field(const GradedAlgebra& a, Field field);

// Same ring and equal ideals.
bool same_presentation(const GradedAlgebra& a, const GradedAlgebra& b);

// Algebra homomorphism source -> target given on generators: images[i] is
// the image of source variable i. Construction checks that the source ideal
// maps into the target ideal and that weights are preserved.
class AlgebraMap {
 public:
  AlgebraMap(GradedAlgebra source, GradedAlgebra target, std::vector<Polynomial> images);

  const GradedAlgebra& source() const { return source_; }
  const GradedAlgebra& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;
  // next o this.
  AlgebraMap then(const AlgebraMap& next) const;
  // Same source and target, images agree modulo the target ideal.
  bool equals(const AlgebraMap& other) const;

  // First source generator whose image is not in the target ideal.
  std::optional<Polynomial> well_definedness_witness() const;
  bool is_weight_preserving() const;

 private:
  struct Unchecked {};
  AlgebraMap(Unchecked, GradedAlgebra source, GradedAlgebra target, std::vector<Polynomial> images);

  GradedAlgebra source_;
  GradedAlgebra target_;
  std::vector<Polynomial> images_;
};

AlgebraMap identity_map(const GradedAlgebra& a);
// The map sending each variable to the same-named variable of `target`.
AlgebraMap coordinate_map(const GradedAlgebra& source, const GradedAlgebra& target);
// True when f and g are mutually inverse.
bool mutually_inverse(const AlgebraMap& f, const AlgebraMap& g);

// Algebra side of the six structure maps (arrows reversed from the schemes):
//   p+ : A -> A+      q+ : A0 -> A+      i+ : A+ -> A0   (and the minus side).
enum class StructureMapKind { PPlus, QPlus, IPlus, PMinus, QMinus, IMinus };
AlgebraMap structure_map(const GradedAlgebra& a, StructureMapKind kind);
std::string_view to_string(StructureMapKind kind);

// J- contained in I, i.e. p+ is an isomorphism.
bool is_contracting(const GradedAlgebra& a);

// I + (extra); every extra element must be homogeneous.
GradedAlgebra closed_subscheme(const GradedAlgebra& a, const std::vector<Polynomial>& extra);

// Principal stable open D(f): adjoins u of weight -deg f with u f - 1.
GradedAlgebra localize(const GradedAlgebra& a, const Polynomial& f);
// Name of the variable adjoined by localize(a, .).
std::string localization_variable(const GradedAlgebra& a);

// B (x)_C D along weight-preserving maps f: C -> B, g: C -> D. B's variables
// are renamed v#1, D's v#2.
GradedAlgebra pushout(const AlgebraMap& f, const AlgebraMap& g);

// Drops variables that appear as reduced basis elements; display helper.
GradedAlgebra prune(const GradedAlgebra& a);

}  // namespace gmloci
