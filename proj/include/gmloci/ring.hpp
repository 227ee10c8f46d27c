#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmloci/scalar.hpp"

namespace gmloci {

// A ring variable and its G_m-weight: lambda . x = lambda^weight x.
struct Variable {
  std::string name;
  std::int64_t weight = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Weighted polynomial ring k[x_1..x_n]. Weights may be any integers; they
// encode the grading, never the term order.
class RingSpec {
 public:
  explicit RingSpec(std::vector<Variable> vars, Field field = Field::rationals());

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  Field field() const { return field_; }
  std::vector<std::int64_t> weights() const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws StructuralError naming the variable.
  std::size_t require_index(std::string_view name) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  std::vector<Variable> vars_;
  Field field_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<Variable> vars, Field field = Field::rationals());

// Same variables with every weight negated (the t -> t^-1 twist).
RingPtr negate_weights(const RingSpec& ring);
RingPtr with_field(const RingSpec& ring, Field field);
// A name not yet used in `ring`, built from `stem` ("u", "u_1", "u_2", ...).
std::string fresh_name(const RingSpec& ring, const std::string& stem);

// Human-facing name: "x#1" -> "x'", "x#2" -> "x''".
std::string display_name(std::string_view name);

}  // namespace gmloci
