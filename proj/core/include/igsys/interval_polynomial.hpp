#ifndef IGSYS_INTERVAL_POLYNOMIAL_HPP
#define IGSYS_INTERVAL_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "igsys/interval.hpp"
#include "igsys/polynomial.hpp"

namespace igsys {

struct IntervalTerm {
  Interval coef;
  Monomial monomial;
  friend bool operator==(const IntervalTerm&, const IntervalTerm&) = default;
};

/// Sum of interval-coefficient terms. Monomials are pairwise distinct and no
/// coefficient is the degenerate zero; terms are kept in descending order of
/// the ring's monomial order.
class IntervalPolynomial {
 public:
  IntervalPolynomial() = default;
  /// Throws MathError on repeated monomials; drops [0,0] terms.
  IntervalPolynomial(RingPtr ring, std::vector<IntervalTerm> terms);
  /// The exact polynomial as an interval polynomial with degenerate coefficients.
  static IntervalPolynomial fromPolynomial(const Polynomial& f);

  const RingPtr& ring() const { return ring_; }
  const std::vector<IntervalTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  /// True when every coefficient is degenerate.
  bool isExact() const;
  /// Number of non-degenerate coefficients.
  std::size_t numIntervalCoefficients() const;

  /// The family member with the given coefficient per term. Throws MathError
  /// when a choice lies outside its interval.
  Polynomial familyMember(std::span<const Rational> choice) const;
  /// Member obtained from each coefficient's interior point.
  Polynomial midpointMember() const;

  std::string toString() const;

  friend bool operator==(const IntervalPolynomial& a, const IntervalPolynomial& b);

 private:
  RingPtr ring_;
  std::vector<IntervalTerm> terms_;
};

/// A set of interval polynomials over one shared ring.
struct IntervalSystem {
  RingPtr ring;
  std::vector<IntervalPolynomial> polys;
};

}  // namespace igsys

#endif  // IGSYS_INTERVAL_POLYNOMIAL_HPP
