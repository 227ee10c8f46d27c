#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gmloci {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e) { exps_[i] = e; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t total_degree() const;
  std::int64_t weighted_degree(std::span<const std::int64_t> weights) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Requires divides(*this, other) in reverse: returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// lex and grevlex follow declaration order (x_0 > x_1 > ...). A block order
// compares block by block, each block restricted to its own variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  struct Block {
    std::vector<std::size_t> indices;
    Kind inner = Kind::Grevlex;  // Lex or Grevlex
    friend bool operator==(const Block&, const Block&) = default;
  };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder block(std::vector<Block> blocks);
  // Two blocks, `drop` first, grevlex inside each.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& drop);

  Kind kind() const { return kind_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Throws StructuralError unless this order is usable on nvars variables.
  void validate(std::size_t nvars) const;

  // Unchecked; callers validate once up front.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string key() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<Block> blocks) : kind_(k), blocks_(std::move(blocks)) {}

  Kind kind_;
  std::vector<Block> blocks_;
};

// Checked comparison: length mismatch or an order that does not fit the
// vector length raises StructuralError.
std::strong_ordering monomial_cmp(const MonomialOrder& order, const Monomial& a,
                                  const Monomial& b);

}  // namespace gmloci
