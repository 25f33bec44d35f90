#ifndef IGSYS_PARAMETRIC_HPP
#define IGSYS_PARAMETRIC_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "igsys/polynomial.hpp"

namespace igsys {

/// K[a][x] realised as K[x, a] under the block order "x-order, then a-order".
///
/// A parametric polynomial is an ordinary Polynomial over combined(); its
/// x-leading monomial is the x-part of its leading monomial, because the
/// block order compares x exponents first. Conditions (null and non-null
/// sets) live in parameters().
class ParametricRing {
 public:
  ParametricRing() = default;
  ParametricRing(std::vector<std::string> variables, MonomialOrder variableOrder,
                 std::vector<std::string> parameters, MonomialOrder parameterOrder);

  const RingPtr& combined() const { return combined_; }
  const RingPtr& variables() const { return variables_; }
  const RingPtr& parameters() const { return parameters_; }
  std::size_t numVariables() const { return variables_->numVars(); }
  std::size_t numParameters() const { return parameters_->numVars(); }

  /// True when no x variable occurs.
  bool isParameterOnly(const Polynomial& f) const;

  /// LM_x(f) over variables() and LC_x(f) over parameters(). Throws for f = 0.
  std::pair<Monomial, Polynomial> leadingX(const Polynomial& f) const;

  /// Map sending every parameter to the given rational (the specialization).
  Polynomial specialize(const Polynomial& f, std::span<const Rational> point) const;
  /// Parameter-only polynomial of combined() as an element of parameters().
  Polynomial toParameters(const Polynomial& f) const;
  Polynomial fromParameters(const Polynomial& f) const;
  Polynomial fromVariables(const Polynomial& f) const;

 private:
  RingPtr combined_;
  RingPtr variables_;
  RingPtr parameters_;
};

/// Pairwise products {a*b}, normalised up to scalars, zeros and duplicates
/// removed.
std::vector<Polynomial> productSet(std::span<const Polynomial> a, std::span<const Polynomial> b);

}  // namespace igsys

#endif  // IGSYS_PARAMETRIC_HPP
