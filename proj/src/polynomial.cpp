#include "gmloci/polynomial.hpp"

#include <algorithm>

#include "gmloci/error.hpp"

namespace gmloci {

namespace {

const MonomialOrder& default_order() {
  static const MonomialOrder order = MonomialOrder::grevlex();
  return order;
}

bool greater(const Monomial& a, const Monomial& b) { return default_order().compare(a, b) > 0; }

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || greater(b[j].mono, a[i].mono)) {
      out.push_back(negate_b ? Term{b[j].mono, -b[j].coeff} : b[j]);
      ++j;
    } else {
      Scalar c = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw StructuralError("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->size());
  return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Field f = ring->field();
  return constant(std::move(ring), Scalar::from_int(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw StructuralError("variable index out of range");
  Field f = ring->field();
  std::size_t n = ring->size();
  return monomial(std::move(ring), Monomial::variable(n, index), Scalar::one(f));
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
  std::vector<Term> t;
  t.push_back(Term{std::move(m), std::move(c)});
  return from_terms(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const std::size_t n = p.ring_->size();
  const Field f = p.ring_->field();
  for (const auto& t : terms) {
    if (t.mono.size() != n) throw StructuralError("monomial length does not match ring");
    if (t.coeff.field() != f) throw StructuralError("coefficient field does not match ring");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DegreeUndefinedError("leading term of the zero polynomial");
  return terms_.front();
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const Term& t) { return t.mono[index] != 0; });
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::vector<std::int64_t> Polynomial::term_degrees() const {
  auto w = ring_->weights();
  std::vector<std::int64_t> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.mono.weighted_degree(w));
  return out;
}

std::optional<std::int64_t> Polynomial::weighted_degree() const {
  if (terms_.empty()) throw DegreeUndefinedError("weighted degree of the zero polynomial");
  auto degs = term_degrees();
  for (auto d : degs) {
    if (d != degs.front()) return std::nullopt;
  }
  return degs.front();
}

bool Polynomial::is_homogeneous() const { return is_zero() || weighted_degree().has_value(); }

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw StructuralError("polynomials live in different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_ring(o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  require_same_ring(o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  }
  *this = from_terms(ring_, std::move(prod));
  return *this;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string(bool decorate) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff.sign() < 0;
    Scalar mag = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      const auto& name = ring_->var(i).name;
      mono += decorate ? display_name(name) : name;
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const RingPtr& target) {
  if (images.size() != p.ring()->size()) {
    throw StructuralError("substitution needs one image per source variable");
  }
  for (const auto& img : images) {
    if (img.ring() != target && !(*img.ring() == *target)) {
      throw StructuralError("substitution image outside the target ring");
    }
  }
  if (p.ring()->field() != target->field()) {
    throw StructuralError("substitution between different coefficient fields");
  }
  // Powers are cached per variable since the same exponent recurs across terms.
  std::vector<std::map<std::uint32_t, Polynomial>> cache(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto it = cache[i].find(e);
    if (it == cache[i].end()) it = cache[i].emplace(e, images[i].pow(e)).first;
    return it->second;
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size() && !term.is_zero(); ++i) {
      if (t.mono[i] != 0) term *= power(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                      const RingPtr& target) {
  std::vector<Polynomial> ordered;
  ordered.reserve(p.ring()->size());
  for (const auto& v : p.ring()->variables()) {
    auto it = images.find(v.name);
    if (it == images.end()) throw StructuralError("no image given for variable '" + v.name + "'");
    ordered.push_back(it->second);
  }
  return substitute(p, ordered, target);
}

Polynomial transfer(const Polynomial& p, const RingPtr& target,
                    const std::map<std::string, std::string>& rename) {
  const auto& src = *p.ring();
  std::vector<std::optional<std::size_t>> to(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::string name = src.var(i).name;
    if (auto it = rename.find(name); it != rename.end()) name = it->second;
    to[i] = target->index_of(name);
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!to[i]) {
        throw StructuralError("variable '" + src.var(i).name + "' has no counterpart in target ring");
      }
      m.set(*to[i], m[*to[i]] + t.mono[i]);
    }
    terms.push_back(Term{std::move(m), t.coeff.to_field(target->field())});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace gmloci
