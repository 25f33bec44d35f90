#ifndef IGSYS_MONOMIAL_HPP
#define IGSYS_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace igsys {

/// Power product x1^e1 ... xn^en over a fixed number of variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t numVars) : exps_(numVars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  std::size_t numVars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  unsigned long degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }

  void setExponent(std::size_t i, Exponent e);

  /// True iff this divides other.
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotientOf(const Monomial& other) const;
  bool isCoprimeWith(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::vector<Exponent> exps_;
  unsigned long degree_ = 0;
};

/// Monomial ordering built from consecutive blocks of variables, each ordered
/// lexicographically or by graded reverse lex. Blocks are compared in turn,
/// so a two-block order eliminates the variables of the first block.
///
/// Variable 0 is the greatest variable within its block.
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex };
  struct Block {
    Kind kind;
    std::size_t begin;
    std::size_t end;
    friend bool operator==(const Block&, const Block&) = default;
  };

  MonomialOrder() = default;
  static MonomialOrder lex(std::size_t numVars);
  static MonomialOrder grevlex(std::size_t numVars);
  /// Block order: compare the first order's variables, then the second's.
  static MonomialOrder block(const MonomialOrder& first, const MonomialOrder& second);

  std::size_t numVars() const { return numVars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  bool isBlock() const { return blocks_.size() > 1; }

  /// Throws MathError on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// "lex", "grevlex", or "block(lex,grevlex)" style description.
  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<Block> blocks_;
  std::size_t numVars_ = 0;
};

}  // namespace igsys

#endif  // IGSYS_MONOMIAL_HPP
