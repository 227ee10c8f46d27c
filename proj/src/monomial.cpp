#include "gmloci/monomial.hpp"

#include <algorithm>

#include "gmloci/error.hpp"

namespace gmloci {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::int64_t Monomial::weighted_degree(std::span<const std::int64_t> weights) const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += static_cast<std::int64_t>(exps_[i]) * weights[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

namespace {

template <typename Indices>
std::strong_ordering lex_on(const Monomial& a, const Monomial& b, const Indices& idx) {
  for (std::size_t i : idx) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

template <typename Indices>
std::strong_ordering grevlex_on(const Monomial& a, const Monomial& b, const Indices& idx) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i : idx) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    std::size_t i = *it;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

struct IotaRange {
  std::size_t n;
  struct It {
    std::size_t v;
    std::size_t operator*() const { return v; }
    It& operator++() {
      ++v;
      return *this;
    }
    bool operator!=(const It& o) const { return v != o.v; }
  };
  struct RIt {
    std::size_t v;  // one past
    std::size_t operator*() const { return v - 1; }
    RIt& operator++() {
      --v;
      return *this;
    }
    bool operator!=(const RIt& o) const { return v != o.v; }
  };
  It begin() const { return {0}; }
  It end() const { return {n}; }
  RIt rbegin() const { return {n}; }
  RIt rend() const { return {0}; }
};

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<Block> blocks) {
  for (const auto& b : blocks) {
    if (b.inner == Kind::Block) throw StructuralError("block order inner kind must be lex or grevlex");
    if (b.indices.empty()) throw StructuralError("empty block in block order");
  }
  return MonomialOrder(Kind::Block, std::move(blocks));
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(nvars, false);
  for (auto i : drop) {
    if (i >= nvars) throw StructuralError("elimination index out of range");
    dropped[i] = true;
  }
  Block first{{}, Kind::Grevlex};
  Block second{{}, Kind::Grevlex};
  for (std::size_t i = 0; i < nvars; ++i) (dropped[i] ? first : second).indices.push_back(i);
  std::vector<Block> blocks;
  if (!first.indices.empty()) blocks.push_back(std::move(first));
  if (!second.indices.empty()) blocks.push_back(std::move(second));
  if (blocks.empty()) return grevlex();
  return block(std::move(blocks));
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (kind_ != Kind::Block) return;
  std::vector<int> seen(nvars, 0);
  for (const auto& b : blocks_) {
    for (auto i : b.indices) {
      if (i >= nvars) throw StructuralError("block order index out of range");
      ++seen[i];
    }
  }
  for (int c : seen) {
    if (c != 1) throw StructuralError("block order does not partition the variables");
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      return lex_on(a, b, IotaRange{a.size()});
    case Kind::Grevlex:
      return grevlex_on(a, b, IotaRange{a.size()});
    case Kind::Block:
      for (const auto& blk : blocks_) {
        auto c = blk.inner == Kind::Lex ? lex_on(a, b, blk.indices) : grevlex_on(a, b, blk.indices);
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Block: break;
  }
  std::string k = "block";
  for (const auto& b : blocks_) {
    k += b.inner == Kind::Lex ? "[lex:" : "[grevlex:";
    for (std::size_t j = 0; j < b.indices.size(); ++j) {
      if (j) k += ",";
      k += std::to_string(b.indices[j]);
    }
    k += "]";
  }
  return k;
}

std::strong_ordering monomial_cmp(const MonomialOrder& order, const Monomial& a,
                                  const Monomial& b) {
  if (a.size() != b.size()) {
    throw StructuralError("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  order.validate(a.size());
  return order.compare(a, b);
}

}  // namespace gmloci
