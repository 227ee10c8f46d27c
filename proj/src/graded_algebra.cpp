#include "gmloci/graded_algebra.hpp"

#include "gmloci/error.hpp"

namespace gmloci {

void require_homogeneous(const std::vector<Polynomial>& polys, std::string_view what) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& p = polys[i];
    if (p.is_homogeneous()) continue;
    std::string degs;
    for (auto d : p.term_degrees()) {
      if (!degs.empty()) degs += ", ";
      degs += std::to_string(d);
    }
    throw ValidationError(std::string(what) + " " + std::to_string(i + 1) + " '" + p.to_string() +
                          "' is not weight-homogeneous (term degrees {" + degs + "})");
  }
}

GradedAlgebra::GradedAlgebra(RingPtr ring, std::vector<Polynomial> gens)
    : GradedAlgebra(Ideal(std::move(ring), std::move(gens))) {}

GradedAlgebra::GradedAlgebra(Ideal ideal) : ideal_(std::move(ideal)) {
  require_homogeneous(ideal_.generators(), "generator");
}

GradedAlgebra new_graded_algebra(RingPtr ring, std::vector<Polynomial> gens) {
  return GradedAlgebra(std::move(ring), std::move(gens));
}

namespace {

template <typename Pred>
Ideal variables_where(const RingPtr& ring, Pred pred) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (pred(ring->var(i).weight)) gens.push_back(Polynomial::variable(ring, i));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal negative_ideal(const RingPtr& ring) {
  return variables_where(ring, [](std::int64_t w) { return w < 0; });
}
Ideal positive_ideal(const RingPtr& ring) {
  return variables_where(ring, [](std::int64_t w) { return w > 0; });
}
Ideal nonzero_weight_ideal(const RingPtr& ring) {
  return variables_where(ring, [](std::int64_t w) { return w != 0; });
}

GradedAlgebra fixed_points(const GradedAlgebra& a) {
  return GradedAlgebra(a.ideal() + nonzero_weight_ideal(a.ring()));
}

GradedAlgebra attractor(const GradedAlgebra& a) {
  return GradedAlgebra(a.ideal() + negative_ideal(a.ring()));
}

GradedAlgebra repeller(const GradedAlgebra& a) {
  return GradedAlgebra(a.ideal() + positive_ideal(a.ring()));
}

GradedAlgebra negate_weights(const GradedAlgebra& a) {
  return GradedAlgebra(transfer(a.ideal(), negate_weights(*a.ring())));
}

GradedAlgebra change_field(const GradedAlgebra& a, Field field) {
  return GradedAlgebra(change_field(a.ideal(), field));
}

bool same_presentation(const GradedAlgebra& a, const GradedAlgebra& b) {
  return *a.ring() == *b.ring() && ideal_eq(a.ideal(), b.ideal());
}

AlgebraMap::AlgebraMap(Unchecked, GradedAlgebra source, GradedAlgebra target,
                       std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.ring()->size()) {
    throw StructuralError("algebra map needs one image per source variable");
  }
  for (const auto& img : images_) {
    if (!(*img.ring() == *target_.ring())) throw StructuralError("algebra map image outside target ring");
  }
}

AlgebraMap::AlgebraMap(GradedAlgebra source, GradedAlgebra target, std::vector<Polynomial> images)
    : AlgebraMap(Unchecked{}, std::move(source), std::move(target), std::move(images)) {
  if (!is_weight_preserving()) throw ValidationError("algebra map does not preserve weights");
  if (auto w = well_definedness_witness()) {
    throw ValidationError("algebra map is not well defined: image of " + w->to_string() +
                          " is not in the target ideal");
  }
}

Polynomial AlgebraMap::apply(const Polynomial& p) const {
  return substitute(p, images_, target_.ring());
}

AlgebraMap AlgebraMap::then(const AlgebraMap& next) const {
  if (!(*target_.ring() == *next.source_.ring())) throw StructuralError("maps do not compose");
  std::vector<Polynomial> composed;
  composed.reserve(images_.size());
  for (const auto& img : images_) composed.push_back(next.apply(img));
  return AlgebraMap(Unchecked{}, source_, next.target_, std::move(composed));
}

bool AlgebraMap::equals(const AlgebraMap& other) const {
  if (!same_presentation(source_, other.source_) || !same_presentation(target_, other.target_)) {
    return false;
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!contains(target_.ideal(), images_[i] - other.images_[i])) return false;
  }
  return true;
}

std::optional<Polynomial> AlgebraMap::well_definedness_witness() const {
  for (const auto& g : source_.generators()) {
    if (!contains(target_.ideal(), apply(g))) return g;
  }
  return std::nullopt;
}

bool AlgebraMap::is_weight_preserving() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (img.is_zero()) continue;
    auto d = img.weighted_degree();
    if (!d || *d != source_.ring()->var(i).weight) return false;
  }
  return true;
}

AlgebraMap identity_map(const GradedAlgebra& a) { return coordinate_map(a, a); }

AlgebraMap coordinate_map(const GradedAlgebra& source, const GradedAlgebra& target) {
  std::vector<Polynomial> images;
  for (const auto& v : source.ring()->variables()) {
    images.push_back(Polynomial::variable(target.ring(), v.name));
  }
  return AlgebraMap(source, target, std::move(images));
}

bool mutually_inverse(const AlgebraMap& f, const AlgebraMap& g) {
  return f.then(g).equals(identity_map(f.source())) && g.then(f).equals(identity_map(g.source()));
}

std::string_view to_string(StructureMapKind kind) {
  switch (kind) {
    case StructureMapKind::PPlus: return "p+";
    case StructureMapKind::QPlus: return "q+";
    case StructureMapKind::IPlus: return "i+";
    case StructureMapKind::PMinus: return "p-";
    case StructureMapKind::QMinus: return "q-";
    case StructureMapKind::IMinus: return "i-";
  }
  return "?";
}

AlgebraMap structure_map(const GradedAlgebra& a, StructureMapKind kind) {
  const bool plus = kind == StructureMapKind::PPlus || kind == StructureMapKind::QPlus ||
                    kind == StructureMapKind::IPlus;
  GradedAlgebra side = plus ? attractor(a) : repeller(a);
  GradedAlgebra fixed = fixed_points(a);
  switch (kind) {
    case StructureMapKind::PPlus:
    case StructureMapKind::PMinus:
      return coordinate_map(a, side);
    case StructureMapKind::IPlus:
    case StructureMapKind::IMinus:
      return coordinate_map(side, fixed);
    case StructureMapKind::QPlus:
    case StructureMapKind::QMinus: {
      // Weight-0 variables map to themselves; the others are zero in A^0.
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < a.ring()->size(); ++i) {
        images.push_back(a.ring()->var(i).weight == 0 ? Polynomial::variable(side.ring(), i)
                                                      : Polynomial(side.ring()));
      }
      return AlgebraMap(fixed, side, std::move(images));
    }
  }
  throw StructuralError("unknown structure map");
}

bool is_contracting(const GradedAlgebra& a) { return contains(a.ideal(), negative_ideal(a.ring())); }

GradedAlgebra closed_subscheme(const GradedAlgebra& a, const std::vector<Polynomial>& extra) {
  require_homogeneous(extra, "extra equation");
  return GradedAlgebra(a.ideal().with(extra));
}

std::string localization_variable(const GradedAlgebra& a) { return fresh_name(*a.ring(), "u"); }

GradedAlgebra localize(const GradedAlgebra& a, const Polynomial& f) {
  if (!(*f.ring() == *a.ring())) throw StructuralError("localizing element outside the ring");
  if (f.is_zero()) {
    // D(0) is empty.
    auto vars = a.ring()->variables();
    vars.push_back(Variable{localization_variable(a), 0});
    RingPtr ext = make_ring(std::move(vars), a.ring()->field());
    return GradedAlgebra(ext, {Polynomial::constant(ext, 1)});
  }
  auto d = f.weighted_degree();
  if (!d) require_homogeneous({f}, "localizing element");
  auto vars = a.ring()->variables();
  std::string u = localization_variable(a);
  vars.push_back(Variable{u, -*d});
  RingPtr ext = make_ring(std::move(vars), a.ring()->field());
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(transfer(g, ext));
  gens.push_back(Polynomial::variable(ext, u) * transfer(f, ext) - Polynomial::constant(ext, 1));
  return GradedAlgebra(ext, std::move(gens));
}

GradedAlgebra pushout(const AlgebraMap& f, const AlgebraMap& g) {
  if (!same_presentation(f.source(), g.source())) {
    throw StructuralError("pushout needs maps with a common source");
  }
  if (!f.is_weight_preserving() || !g.is_weight_preserving()) {
    throw ValidationError("pushout is only supported along weight-preserving maps");
  }
  const auto& b = *f.target().ring();
  const auto& d = *g.target().ring();
  if (b.field() != d.field()) throw StructuralError("pushout across different fields");
  std::vector<Variable> vars;
  std::map<std::string, std::string> rename_b;
  std::map<std::string, std::string> rename_d;
  for (const auto& v : b.variables()) {
    vars.push_back(Variable{v.name + "#1", v.weight});
    rename_b[v.name] = v.name + "#1";
  }
  for (const auto& v : d.variables()) {
    vars.push_back(Variable{v.name + "#2", v.weight});
    rename_d[v.name] = v.name + "#2";
  }
  RingPtr ring = make_ring(std::move(vars), b.field());
  std::vector<Polynomial> gens;
  for (const auto& p : f.target().generators()) gens.push_back(transfer(p, ring, rename_b));
  for (const auto& p : g.target().generators()) gens.push_back(transfer(p, ring, rename_d));
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    Polynomial rel = transfer(f.images()[i], ring, rename_b) - transfer(g.images()[i], ring, rename_d);
    if (!rel.is_zero()) gens.push_back(std::move(rel));
  }
  return GradedAlgebra(ring, std::move(gens));
}

GradedAlgebra prune(const GradedAlgebra& a) {
  auto gb = a.ideal().groebner_basis();
  const auto& ring = *a.ring();
  std::vector<bool> killed(ring.size(), false);
  for (const auto& g : gb) {
    if (g.size() != 1) continue;
    const auto& m = g.terms()[0].mono;
    if (m.total_degree() != 1) continue;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (m[i] == 1) killed[i] = true;
    }
  }
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!killed[i]) vars.push_back(ring.var(i));
  }
  RingPtr small = make_ring(std::move(vars), ring.field());
  std::vector<Polynomial> gens;
  for (const auto& g : gb) {
    bool single = g.size() == 1 && g.terms()[0].mono.total_degree() == 1;
    if (!single) gens.push_back(transfer(g, small));
  }
  return GradedAlgebra(small, std::move(gens));
}

}  // namespace gmloci
