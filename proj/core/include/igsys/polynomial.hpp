#ifndef IGSYS_POLYNOMIAL_HPP
#define IGSYS_POLYNOMIAL_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igsys/interval.hpp"
#include "igsys/monomial.hpp"
#include "igsys/rational.hpp"

namespace igsys {

/// Named variables plus the monomial order used to sort terms.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);

  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t numVars() const { return names_.size(); }
  std::optional<std::size_t> indexOf(std::string_view name) const;

  bool sameAs(const Ring& other) const { return names_ == other.names_ && order_ == other.order_; }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr makeRing(std::vector<std::string> names, MonomialOrder order);
/// Same variables under another order.
RingPtr withOrder(const RingPtr& ring, MonomialOrder order);

struct Term {
  Monomial monomial;
  Rational coef;
};

/// Sparse polynomial over the rationals. Terms are kept sorted in descending
/// order of the ring's monomial order and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);
  /// Sorts and merges like terms; zero coefficients are dropped.
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne()); }
  bool isOne() const;

  /// Throws MathError for the zero polynomial.
  const Term& leadingTerm() const;
  const Monomial& leadingMonomial() const { return leadingTerm().monomial; }
  const Rational& leadingCoefficient() const { return leadingTerm().coef; }
  /// Coefficient of m (zero when absent).
  Rational coefficientOf(const Monomial& m) const;

  unsigned long totalDegree() const;
  Monomial::Exponent degreeIn(std::size_t var) const;
  bool usesVariable(std::size_t var) const { return degreeIn(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// this * c * m
  Polynomial mulTerm(const Monomial& m, const Rational& c) const;
  /// this -= c * m * g, in one merge pass.
  void subtractMultiple(const Rational& c, const Monomial& m, const Polynomial& g);
  /// Removes and returns the leading term.
  Term takeLeadingTerm();
  /// Appends a term smaller than every current term (not checked).
  void appendSmallerTerm(Term t) { terms_.push_back(std::move(t)); }

  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic() const;
  /// Integer coefficients with unit content and positive leading coefficient.
  Polynomial primitive() const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Natural interval extension, one interval per ring variable.
  Interval evaluate(std::span<const Interval> box) const;
  /// Substitutes a value for one variable; the ring is unchanged.
  Polynomial substitute(std::size_t var, const Rational& value) const;
  /// Re-expresses the polynomial in another ring by variable name. Throws
  /// MathError when a used variable is missing from the target.
  Polynomial mapToRing(const RingPtr& target) const;
  /// Polynomial in the same ring sorted under the ring's order (used after
  /// the ring pointer changed).
  Polynomial withRing(const RingPtr& target) const;

  std::string toString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void checkRing(const Polynomial& other) const;
  void sortTerms();

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string toString(const Polynomial& f);
std::string monomialToString(const Monomial& m, const std::vector<std::string>& names);

/// Canonical representative of a polynomial up to a nonzero rational factor.
inline Polynomial normalizeScalar(const Polynomial& f) { return f.primitive(); }

/// Exact quotient f / g when g divides f, std::nullopt otherwise.
std::optional<Polynomial> exactQuotient(const Polynomial& f, const Polynomial& g);

}  // namespace igsys

#endif  // IGSYS_POLYNOMIAL_HPP
