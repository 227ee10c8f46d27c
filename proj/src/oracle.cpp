#include "gmloci/oracle.hpp"

#include "gmloci/error.hpp"

namespace gmloci {

namespace {

struct CompiledTerm {
  std::uint64_t coeff;
  std::vector<std::pair<std::size_t, std::uint32_t>> factors;  // (variable, exponent)
};

struct CompiledPoly {
  std::vector<CompiledTerm> terms;
  std::size_t last_var = 0;  // all variables used are <= last_var
};

class Enumerator {
 public:
  Enumerator(const Ideal& ideal, std::uint32_t p) : p_(p), n_(ideal.ring()->size()) {
    Ideal reduced = change_field(ideal, Field::prime(p));
    by_last_.resize(n_ + 1);
    std::uint32_t max_exp = 1;
    for (const auto& g : reduced.generators()) {
      if (g.is_zero()) continue;
      CompiledPoly cp;
      bool constant_only = true;
      for (const auto& t : g.terms()) {
        CompiledTerm ct{t.coeff.residue_value(), {}};
        for (std::size_t i = 0; i < n_; ++i) {
          if (t.mono[i] == 0) continue;
          ct.factors.emplace_back(i, t.mono[i]);
          max_exp = std::max(max_exp, t.mono[i]);
          cp.last_var = std::max(cp.last_var, i);
          constant_only = false;
        }
        cp.terms.push_back(std::move(ct));
      }
      // Nonzero constants never vanish; they are checked before any assignment.
      by_last_[constant_only ? n_ : cp.last_var].push_back(std::move(cp));
    }
    stride_ = max_exp + 1;
    powers_.assign(static_cast<std::size_t>(p) * stride_, 0);
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t acc = 1;
      for (std::uint32_t e = 0; e <= max_exp; ++e) {
        powers_[x * stride_ + e] = acc;
        acc = acc * x % p;
      }
    }
  }

  template <typename F>
  void run(F&& visit) {
    if (!by_last_[n_].empty()) return;  // a nonzero constant generator
    point_.assign(n_, 0);
    if (n_ == 0) {
      visit(point_);
      return;
    }
    descend(0, visit);
  }

 private:
  template <typename F>
  void descend(std::size_t k, F& visit) {
    for (std::uint32_t x = 0; x < p_; ++x) {
      point_[k] = x;
      if (!satisfied(k)) continue;
      if (k + 1 == n_) {
        visit(point_);
      } else {
        descend(k + 1, visit);
      }
    }
    point_[k] = 0;
  }

  bool satisfied(std::size_t k) const {
    for (const auto& g : by_last_[k]) {
      std::uint64_t sum = 0;
      for (const auto& t : g.terms) {
        std::uint64_t v = t.coeff;
        for (const auto& [i, e] : t.factors) v = v * powers_[point_[i] * stride_ + e] % p_;
        sum += v;
      }
      if (sum % p_ != 0) return false;
    }
    return true;
  }

  std::uint64_t p_;
  std::size_t n_;
  std::vector<std::vector<CompiledPoly>> by_last_;
  std::uint32_t stride_ = 2;
  std::vector<std::uint64_t> powers_;
  std::vector<std::uint32_t> point_;
};

void require_bound(std::size_t n, std::uint32_t p, const OracleOptions& options) {
  Field::prime(p);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > options.max_points / p) {
      throw ResourceLimitError("point enumeration over F_" + std::to_string(p) + " in " + std::to_string(n) +
                               " variables exceeds the bound of " + std::to_string(options.max_points));
    }
    total *= p;
  }
}

}  // namespace

PointSet enumerate_points(const Ideal& ideal, std::uint32_t p, const OracleOptions& options) {
  const auto& ring = *ideal.ring();
  require_bound(ring.size(), p, options);
  PointSet out;
  out.prime = p;
  for (const auto& v : ring.variables()) out.variables.push_back(v.name);
  Enumerator e(ideal, p);
  e.run([&](const std::vector<std::uint32_t>& pt) { out.points.push_back(pt); });
  return out;
}

bool check_set_relation(const Ideal& i, const Ideal& j, SetRelation rel, std::uint32_t p,
                        const OracleOptions& options) {
  if (!(*i.ring() == *j.ring())) throw StructuralError("point sets compared across different rings");
  PointSet a = enumerate_points(i, p, options);
  PointSet b = enumerate_points(j, p, options);
  if (rel == SetRelation::Equal) return a.points == b.points;
  return std::includes(b.points.begin(), b.points.end(), a.points.begin(), a.points.end());
}

std::vector<std::uint64_t> fiber_counts(const InterpolationFamily& family, std::uint32_t p,
                                        const OracleOptions& options) {
  Field fp = Field::prime(p);
  InterpolationFamily reduced = interpolation(change_field(family.base(), fp));
  std::vector<std::uint64_t> counts;
  for (std::uint32_t c = 0; c < p; ++c) {
    counts.push_back(enumerate_points(fiber(reduced, Scalar::residue(c, p)), p, options).size());
  }
  return counts;
}

PointSet group_fixed_points(const GradedAlgebra& a, std::uint32_t p, const OracleOptions& options) {
  PointSet all = enumerate_points(a.ideal(), p, options);
  const auto& ring = *a.ring();
  // fixes[i]: lambda^{w_i} = 1 for every lambda in F_p^*.
  std::vector<bool> fixes(ring.size(), true);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    std::int64_t w = ring.var(i).weight;
    std::uint64_t e = static_cast<std::uint64_t>(((w % static_cast<std::int64_t>(p - 1)) + (p - 1)) % (p - 1));
    for (std::uint64_t lambda = 1; lambda < p && fixes[i]; ++lambda) {
      std::uint64_t acc = 1;
      for (std::uint64_t k = 0; k < e; ++k) acc = acc * lambda % p;
      if (acc != 1) fixes[i] = false;
    }
  }
  PointSet out{all.prime, all.variables, {}};
  for (const auto& pt : all.points) {
    bool fixed = true;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (pt[i] != 0 && !fixes[i]) fixed = false;
    }
    if (fixed) out.points.push_back(pt);
  }
  return out;
}

bool group_fixed_points_weakened(const RingSpec& ring, std::uint32_t p) {
  for (const auto& v : ring.variables()) {
    std::int64_t w = v.weight < 0 ? -v.weight : v.weight;
    if (w != 0 && w >= static_cast<std::int64_t>(p) - 1) return true;
  }
  return false;
}

}  // namespace gmloci
