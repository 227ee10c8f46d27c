#pragma once

// Ideal membership by linear algebra over the monomial basis: f is declared a
// member when it lies in the span of {m * g : deg(m * g) <= bound}. Exact for
// ideals generated by standard-homogeneous polynomials once bound >= deg f.
// Shares nothing with the Groebner engine beyond Polynomial/Scalar.

#include <map>
#include <vector>

#include "gmloci/polynomial.hpp"

namespace gmloci::testing {

class SpanOracle {
 public:
  SpanOracle(const std::vector<Polynomial>& gens, unsigned bound) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      auto dg = g.total_degree();
      if (dg > bound) continue;
      const std::size_t n = g.ring()->size();
      for_each_monomial(n, static_cast<unsigned>(bound - dg), [&](const Monomial& m) {
        Row row;
        for (const auto& t : g.terms()) row[(t.mono * m).exponents()] = t.coeff;
        insert(std::move(row));
      });
    }
  }

  bool contains(const Polynomial& f) const {
    Row row;
    for (const auto& t : f.terms()) row[t.mono.exponents()] = t.coeff;
    return reduce(std::move(row)).empty();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  using Key = std::vector<std::uint32_t>;
  using Row = std::map<Key, Scalar>;  // pivot = largest key (lex on exponents)

  template <typename F>
  static void for_each_monomial(std::size_t n, unsigned max_deg, F&& fn) {
    Monomial m(n);
    enumerate(m, 0, max_deg, fn);
  }

  template <typename F>
  static void enumerate(Monomial& m, std::size_t i, unsigned left, F& fn) {
    if (i == m.size()) {
      fn(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(i, e);
      enumerate(m, i + 1, left - e, fn);
    }
    m.set(i, 0);
  }

  Row reduce(Row row) const {
    while (!row.empty()) {
      auto lead = std::prev(row.end());
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) return row;
      Scalar c = lead->second;  // pivot rows are normalized to leading 1
      for (const auto& [k, v] : it->second) {
        Scalar nv = (row.count(k) ? row[k] : Scalar::zero(v.field())) - c * v;
        if (nv.is_zero()) {
          row.erase(k);
        } else {
          row[k] = nv;
        }
      }
    }
    return row;
  }

  void insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    Scalar inv = std::prev(row.end())->second.inverse();
    for (auto& [k, v] : row) v *= inv;
    Key lead = std::prev(row.end())->first;
    pivots_.emplace(std::move(lead), std::move(row));
  }

  std::map<Key, Row> pivots_;
};

}  // namespace gmloci::testing
