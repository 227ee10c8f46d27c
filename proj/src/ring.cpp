#include "gmloci/ring.hpp"

#include <unordered_set>

#include "gmloci/error.hpp"

namespace gmloci {

RingSpec::RingSpec(std::vector<Variable> vars, Field field)
    : vars_(std::move(vars)), field_(field) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw ValidationError("empty variable name");
    if (!seen.insert(v.name).second) {
      throw ValidationError("duplicate variable name '" + v.name + "'");
    }
  }
}

std::vector<std::int64_t> RingSpec::weights() const {
  std::vector<std::int64_t> w;
  w.reserve(vars_.size());
  for (const auto& v : vars_) w.push_back(v.weight);
  return w;
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t RingSpec::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<Variable> vars, Field field) {
  return std::make_shared<const RingSpec>(std::move(vars), field);
}

RingPtr negate_weights(const RingSpec& ring) {
  auto vars = ring.variables();
  for (auto& v : vars) v.weight = -v.weight;
  return make_ring(std::move(vars), ring.field());
}

RingPtr with_field(const RingSpec& ring, Field field) {
  return make_ring(ring.variables(), field);
}

std::string fresh_name(const RingSpec& ring, const std::string& stem) {
  if (!ring.index_of(stem)) return stem;
  for (int k = 1;; ++k) {
    std::string candidate = stem + "_" + std::to_string(k);
    if (!ring.index_of(candidate)) return candidate;
  }
}

std::string display_name(std::string_view name) {
  if (name.size() > 2 && name[name.size() - 2] == '#') {
    std::string base(name.substr(0, name.size() - 2));
    switch (name.back()) {
      case '1': return base + "'";
      case '2': return base + "''";
      default: break;
    }
  }
  return std::string(name);
}

}  // namespace gmloci
