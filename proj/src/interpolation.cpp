#include "gmloci/interpolation.hpp"

#include "gmloci/error.hpp"

namespace gmloci {

namespace {

std::string first_name(const std::string& v) { return v + "#1"; }
std::string second_name(const std::string& v) { return v + "#2"; }

std::string t_name_for(const RingSpec& base) { return fresh_name(base, "t"); }

std::vector<Variable> copy_variables(const RingSpec& base) {
  std::vector<Variable> vars;
  for (const auto& v : base.variables()) vars.push_back(Variable{first_name(v.name), v.weight});
  for (const auto& v : base.variables()) vars.push_back(Variable{second_name(v.name), v.weight});
  return vars;
}

std::map<std::string, std::string> renaming(const RingSpec& base, bool first) {
  std::map<std::string, std::string> out;
  for (const auto& v : base.variables()) out[v.name] = first ? first_name(v.name) : second_name(v.name);
  return out;
}

Polynomial var(const RingPtr& ring, const std::string& name) { return Polynomial::variable(ring, name); }

unsigned magnitude(std::int64_t w) { return static_cast<unsigned>(w < 0 ? -w : w); }

// Relations tying the two copies together, with `scale` standing for t or c.
std::vector<Polynomial> relations(const RingSpec& base, const RingPtr& ring, const Polynomial& scale) {
  std::vector<Polynomial> out;
  for (const auto& v : base.variables()) {
    Polynomial x1 = var(ring, first_name(v.name));
    Polynomial x2 = var(ring, second_name(v.name));
    if (v.weight >= 0) {
      out.push_back(x2 - scale.pow(magnitude(v.weight)) * x1);
    } else {
      out.push_back(x1 - scale.pow(magnitude(v.weight)) * x2);
    }
  }
  return out;
}

Ideal copy_of(const Ideal& i, const RingPtr& ring, bool first) {
  return transfer(i, ring, renaming(*i.ring(), first));
}

}  // namespace

IdealComparison compare_ideals(Ideal lhs, Ideal rhs) {
  auto witness = separating_witness(lhs, rhs);
  return IdealComparison{std::move(lhs), std::move(rhs), std::move(witness)};
}

RingPtr family_ring(const GradedAlgebra& a) {
  std::vector<Variable> vars{Variable{t_name_for(*a.ring()), 0}};
  for (auto& v : copy_variables(*a.ring())) vars.push_back(std::move(v));
  return make_ring(std::move(vars), a.ring()->field());
}

RingPtr fiber_ring(const GradedAlgebra& a) {
  return make_ring(copy_variables(*a.ring()), a.ring()->field());
}

InterpolationFamily::InterpolationFamily(GradedAlgebra base, RingPtr ring, std::string t, Ideal ideal,
                                         std::vector<Bidegree> bigrading)
    : base_(std::move(base)),
      ring_(std::move(ring)),
      t_(std::move(t)),
      ideal_(std::move(ideal)),
      bigrading_(std::move(bigrading)) {}

Polynomial InterpolationFamily::first_copy(const Polynomial& p) const {
  return transfer(p, ring_, renaming(*base_.ring(), true));
}

Polynomial InterpolationFamily::second_copy(const Polynomial& p) const {
  return transfer(p, ring_, renaming(*base_.ring(), false));
}

Ideal InterpolationFamily::first_copy(const Ideal& i) const { return copy_of(i, ring_, true); }
Ideal InterpolationFamily::second_copy(const Ideal& i) const { return copy_of(i, ring_, false); }

std::vector<Polynomial> InterpolationFamily::linear_relations() const {
  return relations(*base_.ring(), ring_, var(ring_, t_));
}

std::optional<InterpolationFamily::Bidegree> InterpolationFamily::bidegree(const Polynomial& p) const {
  std::optional<Bidegree> out;
  for (const auto& term : p.terms()) {
    Bidegree d{0, 0};
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      auto e = static_cast<std::int64_t>(term.mono[i]);
      d.first += e * bigrading_[i].first;
      d.second += e * bigrading_[i].second;
    }
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out;
}

InterpolationFamily interpolation(const GradedAlgebra& a, const InterpolationOptions& options) {
  RingPtr ring = family_ring(a);
  const auto& base = *a.ring();
  std::vector<InterpolationFamily::Bidegree> bigrading{{-1, -1}};
  for (const auto& v : base.variables()) bigrading.push_back({v.weight, 0});
  for (const auto& v : base.variables()) bigrading.push_back({0, -v.weight});

  std::vector<Polynomial> gens;
  for (bool first : {true, false}) {
    Ideal copy = copy_of(a.ideal(), ring, first);
    gens.insert(gens.end(), copy.generators().begin(), copy.generators().end());
  }
  auto rel = relations(base, ring, var(ring, t_name_for(base)));
  for (std::size_t i = options.drop_first_relation ? 1 : 0; i < rel.size(); ++i) gens.push_back(rel[i]);

  InterpolationFamily family(a, ring, t_name_for(base), Ideal(ring, std::move(gens)), std::move(bigrading));
  for (const auto& g : family.ideal().generators()) {
    if (!g.is_zero() && !family.bidegree(g)) {
      throw StructuralError("family generator " + g.to_string() + " is not bihomogeneous");
    }
  }
  require_homogeneous(family.ideal().generators(), "family generator");
  return family;
}

Ideal deformed_presentation(const GradedAlgebra& a) {
  RingPtr ring = family_ring(a);
  const auto& base = *a.ring();
  const std::size_t n = base.size();
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) {
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      std::int64_t pos = 0;
      std::int64_t neg = 0;
      Monomial m(ring->size());
      for (std::size_t i = 0; i < n; ++i) {
        auto e = term.mono[i];
        auto w = base.var(i).weight;
        if (w > 0) pos += static_cast<std::int64_t>(e) * w;
        if (w < 0) neg -= static_cast<std::int64_t>(e) * w;
        // c_i is x'_i for w_i >= 0 and x''_i for w_i < 0.
        m.set(w >= 0 ? 1 + i : 1 + n + i, e);
      }
      m.set(0, static_cast<std::uint32_t>(std::min(pos, neg)));
      terms.push_back(Term{std::move(m), term.coeff});
    }
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  for (auto& r : relations(base, ring, var(ring, t_name_for(base)))) gens.push_back(std::move(r));
  return Ideal(ring, std::move(gens));
}

Ideal fiber(const InterpolationFamily& f, const Scalar& c) { return specialize(f.ideal(), f.t_name(), c); }

Ideal fiber_product_presentation(const GradedAlgebra& a) {
  RingPtr ring = fiber_ring(a);
  const auto& base = *a.ring();
  std::vector<Polynomial> gens;
  Ideal plus = copy_of(attractor(a).ideal(), ring, true);
  Ideal minus = copy_of(repeller(a).ideal(), ring, false);
  gens.insert(gens.end(), plus.generators().begin(), plus.generators().end());
  gens.insert(gens.end(), minus.generators().begin(), minus.generators().end());
  for (const auto& v : base.variables()) {
    if (v.weight == 0) gens.push_back(var(ring, first_name(v.name)) - var(ring, second_name(v.name)));
  }
  return Ideal(ring, std::move(gens));
}

Ideal diagonal_presentation(const GradedAlgebra& a) {
  return action_graph_presentation(a, Scalar::one(a.ring()->field()));
}

Ideal action_graph_presentation(const GradedAlgebra& a, const Scalar& c) {
  if (c.is_zero()) throw ContractError("the action graph needs a nonzero scalar");
  RingPtr ring = fiber_ring(a);
  Ideal out = copy_of(a.ideal(), ring, true) + copy_of(a.ideal(), ring, false);
  return out.with(relations(*a.ring(), ring, Polynomial::constant(ring, c.to_field(ring->field()))));
}

std::string_view to_string(ClosureVerdict v) { return v == ClosureVerdict::Equal ? "equal" : "strict"; }

ClosureReport graph_closure(const InterpolationFamily& f) {
  Polynomial t = var(f.ring(), f.t_name());
  Ideal sat = saturate(f.ideal(), t);
  std::optional<Polynomial> witness;
  for (const auto& g : sat.groebner_basis()) {
    if (!contains(f.ideal(), g)) {
      witness = g;
      break;
    }
  }
  Ideal raw = f.first_copy(f.base().ideal()).with(f.linear_relations());
  bool agrees = ideal_eq(saturate(raw, t), sat);
  ClosureVerdict verdict = witness ? ClosureVerdict::Strict : ClosureVerdict::Equal;
  return ClosureReport{std::move(sat), verdict, std::move(witness), agrees};
}

std::string_view to_string(Side s) { return s == Side::Plus ? "plus" : "minus"; }

namespace {

// Presentation of A^1 x Z^{side} embedded by the side's action map, together
// with the coordinates of the opposite copy killed on the other weights.
Ideal contracted_graph(const GradedAlgebra& a, const RingPtr& ring, const std::string& t, Side side,
                       bool kill_opposite_sign) {
  const auto& base = *a.ring();
  const bool plus = side == Side::Plus;
  Ideal source_ideal = kill_opposite_sign ? (plus ? attractor(a) : repeller(a)).ideal() : a.ideal();
  std::vector<Polynomial> gens = copy_of(source_ideal, ring, plus).generators();
  Polynomial tp = var(ring, t);
  for (const auto& v : base.variables()) {
    Polynomial x1 = var(ring, first_name(v.name));
    Polynomial x2 = var(ring, second_name(v.name));
    if (plus) {
      gens.push_back(v.weight >= 0 ? x2 - tp.pow(magnitude(v.weight)) * x1 : x2);
    } else {
      gens.push_back(v.weight <= 0 ? x1 - tp.pow(magnitude(v.weight)) * x2 : x1);
    }
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

IdealComparison check_open_embedding_iso(const GradedAlgebra& a, Side side) {
  InterpolationFamily f = interpolation(a);
  const bool plus = side == Side::Plus;
  Ideal lhs = plus ? f.ideal() + f.second_copy(attractor(a).ideal())
                   : f.ideal() + f.first_copy(repeller(a).ideal());
  return compare_ideals(std::move(lhs), contracted_graph(a, f.ring(), f.t_name(), side, true));
}

ContractingCheck check_contracting_interp(const GradedAlgebra& a) {
  Side form;
  if (is_contracting(a)) {
    form = Side::Plus;
  } else if (is_contracting(negate_weights(a))) {
    form = Side::Minus;
  } else {
    throw ContractError("the action is neither contracting nor dilating");
  }
  InterpolationFamily f = interpolation(a);
  return ContractingCheck{form, compare_ideals(f.ideal(), contracted_graph(a, f.ring(), f.t_name(), form, false))};
}

IdealComparison check_closed_functoriality(const GradedAlgebra& a, const std::vector<Polynomial>& extra) {
  InterpolationFamily f = interpolation(a);
  InterpolationFamily sub = interpolation(closed_subscheme(a, extra));
  std::vector<Polynomial> both;
  for (const auto& e : extra) {
    both.push_back(f.first_copy(e));
    both.push_back(f.second_copy(e));
  }
  return compare_ideals(sub.ideal(), f.ideal().with(both));
}

}  // namespace gmloci
