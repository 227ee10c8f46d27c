#include "gmloci/groebner.hpp"

#include <algorithm>
#include <deque>

#include "gmloci/error.hpp"

namespace gmloci {

namespace {

// Terms sorted descending under the working order.
using WorkPoly = std::vector<Term>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
  WorkPoly w = p.terms();
  if (order.kind() != MonomialOrder::Kind::Grevlex) {
    std::sort(w.begin(), w.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  }
  return w;
}

Polynomial from_work(const RingPtr& ring, WorkPoly w) {
  return Polynomial::from_terms(ring, std::move(w));
}

// (p[from..]) - c * m * (g[1..]); the leading terms are assumed to cancel.
WorkPoly sub_multiple(const WorkPoly& p, std::size_t from, const Scalar& c, const Monomial& m,
                      const WorkPoly& g, const MonomialOrder& order, const GroebnerLimits& limits) {
  WorkPoly out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from;
  std::size_t j = 1;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == p.size()) {
      out.push_back(Term{std::move(gm), -(c * g[j].coeff)});
      ++j;
      continue;
    }
    auto cmp = order.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(gm), -(c * g[j].coeff)});
      ++j;
    } else {
      Scalar s = p[i].coeff - c * g[j].coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  if (out.size() > limits.max_terms) {
    throw ResourceLimitError("polynomial exceeded " + std::to_string(limits.max_terms) + " terms");
  }
  return out;
}

WorkPoly reduce_work(WorkPoly p, const std::vector<const WorkPoly*>& divisors,
                     const MonomialOrder& order, const GroebnerLimits& limits) {
  WorkPoly rem;
  std::size_t k = 0;
  while (k < p.size()) {
    const Term& lt = p[k];
    const WorkPoly* hit = nullptr;
    for (const WorkPoly* g : divisors) {
      if ((*g)[0].mono.divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      rem.push_back(lt);
      ++k;
      continue;
    }
    Scalar c = lt.coeff / (*hit)[0].coeff;
    Monomial m = (*hit)[0].mono.quotient_of(lt.mono);
    p = sub_multiple(p, k + 1, c, m, *hit, order, limits);
    k = 0;
  }
  return rem;
}

void make_monic(WorkPoly& w) {
  if (w.empty() || w[0].coeff.is_one()) return;
  Scalar inv = w[0].coeff.inverse();
  for (auto& t : w) t.coeff *= inv;
}

WorkPoly spoly_work(const WorkPoly& f, const WorkPoly& g, const MonomialOrder& order,
                    const GroebnerLimits& limits) {
  Monomial l = f[0].mono.lcm(g[0].mono);
  Monomial mf = f[0].mono.quotient_of(l);
  Monomial mg = g[0].mono.quotient_of(l);
  WorkPoly scaled_f;
  scaled_f.reserve(f.size());
  Scalar inv_f = f[0].coeff.inverse();
  for (const auto& t : f) scaled_f.push_back(Term{t.mono * mf, t.coeff * inv_f});
  // scaled_f - (1/lc g) * mg * g, dropping the cancelled leading terms.
  return sub_multiple(scaled_f, 1, g[0].coeff.inverse(), mg, g, order, limits);
}

void require_valid(const RingPtr& ring, const MonomialOrder& order) { order.validate(ring->size()); }

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.ring() != ring_ && !(*g.ring() == *ring_)) {
      throw StructuralError("ideal generator " + g.to_string() + " lives outside the ambient ring");
    }
  }
}

std::vector<Polynomial> Ideal::groebner_basis(const MonomialOrder& order,
                                              const GroebnerLimits& limits) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return it->second;
  }
  auto basis = buchberger(ring_, gens_, order, limits);
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->bases.emplace(key, std::move(basis)).first->second;
}

bool Ideal::is_unit() const {
  auto gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!(*ring_ == *other.ring_)) throw StructuralError("sum of ideals in different rings");
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  auto gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw DegreeUndefinedError("leading monomial of the zero polynomial");
  require_valid(f.ring(), order);
  const auto& terms = f.terms();
  auto best = terms.begin();
  for (auto it = terms.begin() + 1; it != terms.end(); ++it) {
    if (order.compare(it->mono, best->mono) > 0) best = it;
  }
  return best->mono;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order) {
  require_valid(f.ring(), order);
  std::vector<WorkPoly> work;
  work.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) throw StructuralError("reduction by the zero polynomial");
    if (!(*b.ring() == *f.ring())) throw StructuralError("reduction across different rings");
    work.push_back(to_work(b, order));
  }
  std::vector<const WorkPoly*> divisors;
  for (const auto& w : work) divisors.push_back(&w);
  return from_work(f.ring(), reduce_work(to_work(f, order), divisors, order, GroebnerLimits{}));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw StructuralError("S-polynomial of the zero polynomial");
  require_valid(f.ring(), order);
  return from_work(f.ring(), spoly_work(to_work(f, order), to_work(g, order), order, GroebnerLimits{}));
}

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                   const MonomialOrder& order, const GroebnerLimits& limits) {
  require_valid(ring, order);

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t degree;
    std::size_t serial;
  };

  std::deque<WorkPoly> polys;  // stable addresses
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  std::size_t serial = 0;

  auto lm = [&](std::size_t k) -> const Monomial& { return polys[k][0].mono; };

  auto active_divisors = [&]() {
    std::vector<const WorkPoly*> d;
    d.reserve(active.size());
    for (auto k : active) d.push_back(&polys[k]);
    return d;
  };

  // Gebauer-Moeller update for a new basis element h.
  auto update = [&](std::size_t h) {
    std::vector<std::size_t> candidates = active;
    std::vector<std::size_t> kept;  // pairs (h, g) surviving the chain test
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t g1 = candidates[c];
      Monomial l1 = lm(h).lcm(lm(g1));
      bool keep = lm(h).coprime(lm(g1));
      if (!keep) {
        keep = true;
        auto divides_l1 = [&](std::size_t g2) { return lm(h).lcm(lm(g2)).divides(l1); };
        for (std::size_t c2 = c + 1; c2 < candidates.size() && keep; ++c2) {
          if (divides_l1(candidates[c2])) keep = false;
        }
        for (std::size_t g2 : kept) {
          if (!keep) break;
          if (divides_l1(g2)) keep = false;
        }
      }
      if (keep) kept.push_back(g1);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
      bool drop = lm(h).divides(p.lcm) && lm(p.i).lcm(lm(h)) != p.lcm && lm(h).lcm(lm(p.j)) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (std::size_t g : kept) {
      if (lm(h).coprime(lm(g))) continue;
      Monomial l = lm(h).lcm(lm(g));
      std::uint64_t d = l.total_degree();
      if (d > limits.max_degree) {
        throw ResourceLimitError("S-pair degree exceeded " + std::to_string(limits.max_degree));
      }
      next.push_back(Pair{g, h, std::move(l), d, serial++});
    }
    pairs = std::move(next);
    if (pairs.size() > limits.max_pairs) {
      throw ResourceLimitError("pair queue exceeded " + std::to_string(limits.max_pairs) + " pairs");
    }
    std::vector<std::size_t> still;
    for (auto g : active) {
      if (!lm(h).divides(lm(g))) still.push_back(g);
    }
    still.push_back(h);
    active = std::move(still);
  };

  auto insert = [&](WorkPoly w) {
    make_monic(w);
    polys.push_back(std::move(w));
    update(polys.size() - 1);
  };

  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw StructuralError("generator outside the ambient ring");
    if (g.is_zero()) continue;
    WorkPoly r = reduce_work(to_work(g, order), active_divisors(), order, limits);
    if (!r.empty()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return a.degree != b.degree ? a.degree < b.degree : a.serial < b.serial;
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    WorkPoly s = spoly_work(polys[p.i], polys[p.j], order, limits);
    WorkPoly r = reduce_work(std::move(s), active_divisors(), order, limits);
    if (!r.empty()) insert(std::move(r));
  }

  // The active set is a minimal basis; inter-reduce the tails.
  std::vector<WorkPoly> basis;
  for (auto k : active) basis.push_back(polys[k]);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<const WorkPoly*> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(&basis[j]);
    }
    WorkPoly tail(basis[i].begin() + 1, basis[i].end());
    WorkPoly reduced = reduce_work(std::move(tail), others, order, limits);
    reduced.insert(reduced.begin(), basis[i][0]);
    basis[i] = std::move(reduced);
  }
  std::sort(basis.begin(), basis.end(), [&](const WorkPoly& a, const WorkPoly& b) {
    return order.compare(a[0].mono, b[0].mono) < 0;
  });
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (auto& w : basis) out.push_back(from_work(ring, std::move(w)));
  return out;
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  return ideal.groebner_basis(order);
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  if (!(*f.ring() == *ideal.ring())) throw StructuralError("membership test across different rings");
  if (f.is_zero()) return true;
  const auto order = MonomialOrder::grevlex();
  return reduce(f, ideal.groebner_basis(order), order).is_zero();
}

bool contains(const Ideal& ideal, const Ideal& sub) {
  for (const auto& g : sub.generators()) {
    if (!contains(ideal, g)) return false;
  }
  return true;
}

bool ideal_eq(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) throw StructuralError("ideal comparison across different rings");
  return a.groebner_basis() == b.groebner_basis();
}

std::optional<Polynomial> separating_witness(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.groebner_basis()) {
    if (!contains(b, g)) return g;
  }
  for (const auto& g : b.groebner_basis()) {
    if (!contains(a, g)) return g;
  }
  return std::nullopt;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop) {
  const auto& ring = *ideal.ring();
  std::vector<std::size_t> idx;
  std::vector<bool> dropped(ring.size(), false);
  for (const auto& name : drop) {
    std::size_t i = ring.require_index(name);
    idx.push_back(i);
    dropped[i] = true;
  }
  std::vector<Variable> kept_vars;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!dropped[i]) kept_vars.push_back(ring.var(i));
  }
  RingPtr sub = make_ring(std::move(kept_vars), ring.field());
  auto gb = ideal.groebner_basis(MonomialOrder::elimination(ring.size(), idx));
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses = false;
    for (auto i : idx) uses = uses || g.uses_variable(i);
    if (!uses) kept.push_back(transfer(g, sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw ContractError("saturation by the zero polynomial");
  if (!(*f.ring() == *ideal.ring())) throw StructuralError("saturation element outside the ring");
  const auto& ring = *ideal.ring();
  auto vars = ring.variables();
  std::string y = fresh_name(ring, "#sat");
  auto deg = f.weighted_degree();
  vars.push_back(Variable{y, deg ? -*deg : 0});
  RingPtr ext = make_ring(std::move(vars), ring.field());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, ext));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, y) * transfer(f, ext));
  Ideal eliminated = eliminate(Ideal(ext, std::move(gens)), {y});
  std::vector<Polynomial> back;
  for (const auto& g : eliminated.generators()) back.push_back(transfer(g, ideal.ring()));
  return Ideal(ideal.ring(), std::move(back));
}

Ideal specialize(const Ideal& ideal, std::string_view var, const Scalar& value) {
  const auto& ring = *ideal.ring();
  std::size_t k = ring.require_index(var);
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i != k) vars.push_back(ring.var(i));
  }
  RingPtr target = make_ring(std::move(vars), ring.field());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    images.push_back(i == k ? Polynomial::constant(target, value.to_field(ring.field()))
                            : Polynomial::variable(target, ring.var(i).name));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute(g, images, target));
  return Ideal(target, std::move(gens));
}

Ideal transfer(const Ideal& ideal, const RingPtr& target,
               const std::map<std::string, std::string>& rename) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, target, rename));
  return Ideal(target, std::move(gens));
}

Ideal change_field(const Ideal& ideal, Field field) {
  return transfer(ideal, with_field(*ideal.ring(), field));
}

}  // namespace gmloci
