#ifndef IGSYS_UNIVARIATE_HPP
#define IGSYS_UNIVARIATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "igsys/interval.hpp"
#include "igsys/polynomial.hpp"
#include "igsys/rational.hpp"

namespace igsys {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  /// f must involve at most the variable `var`.
  static UPoly fromPolynomial(const Polynomial& f, std::size_t var);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const Rational& coeff(std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leadingCoefficient() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  int signAt(const Rational& x) const { return sgn(eval(x)); }
  /// Sign for x -> +inf (positive = true) or x -> -inf.
  int signAtInfinity(bool positive) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Integer coefficients, unit content, positive leading coefficient.
  UPoly primitive() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string toString(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefreePart(const UPoly& p);

/// Canonical Sturm sequence p, p', -rem(...), ...
std::vector<UPoly> sturmSequence(const UPoly& p);
/// Number of distinct real roots of a squarefree p in (a, b].
std::size_t countRoots(const std::vector<UPoly>& sturm, const ExtRational& a, const ExtRational& b);

/// Every real root has absolute value below the returned bound.
Rational rootBound(const UPoly& p);

/// A real algebraic number: the unique root of the squarefree polynomial
/// `poly` in (lo, hi], or exactly lo when lo == hi.
class RealRoot {
 public:
  RealRoot(UPoly poly, Rational lo, Rational hi);
  static RealRoot exact(const Rational& value);

  const UPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool isExact() const { return lo_ == hi_; }
  std::optional<Rational> exactValue() const;

  /// Bisects until hi - lo < width (or the root becomes exact).
  void refine(const Rational& width);
  double approx() const;
  std::string toString() const;

 private:
  UPoly poly_;
  Rational lo_;
  Rational hi_;
  std::vector<UPoly> sturm_;
};

/// Ascending distinct real roots; rational roots are returned exact.
std::vector<RealRoot> isolateRealRoots(const UPoly& p);
/// Rational roots lying in the interval (respecting endpoint flags).
std::vector<Rational> rationalRootsIn(const UPoly& p, const Interval& range);

/// Three-way comparison of algebraic numbers.
int compare(RealRoot a, RealRoot b);
/// Sign of p at the algebraic number r.
int signAt(const UPoly& p, RealRoot r);

}  // namespace igsys

#endif  // IGSYS_UNIVARIATE_HPP
