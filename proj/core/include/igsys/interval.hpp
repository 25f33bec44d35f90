#ifndef IGSYS_INTERVAL_HPP
#define IGSYS_INTERVAL_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "igsys/rational.hpp"

namespace igsys {

/// A rational or one of the two infinities.
class ExtRational {
 public:
  enum class Kind : unsigned char { NegInf, Finite, PosInf };

  ExtRational() = default;
  ExtRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : ExtRational(Rational(value)) {}                      // NOLINT

  static ExtRational negInf() { return ExtRational(Kind::NegInf); }
  static ExtRational posInf() { return ExtRational(Kind::PosInf); }

  Kind kind() const { return kind_; }
  bool isFinite() const { return kind_ == Kind::Finite; }
  bool isNegInf() const { return kind_ == Kind::NegInf; }
  bool isPosInf() const { return kind_ == Kind::PosInf; }
  /// Throws MathError for an infinity.
  const Rational& value() const;
  /// -1, 0 or 1.
  int sign() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  ExtRational operator-() const;

 private:
  explicit ExtRational(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

/// Sums and products over the extended reals; std::nullopt marks the ambiguous
/// forms inf - inf and 0 * inf.
std::optional<ExtRational> extAdd(const ExtRational& a, const ExtRational& b);
std::optional<ExtRational> extMul(const ExtRational& a, const ExtRational& b);
/// 1/a for a != 0, with 1/(+-inf) = 0.
ExtRational extRecip(const ExtRational& a);
ExtRational extPow(const ExtRational& a, unsigned n);

std::string toString(const ExtRational& v);

/// Real interval [lo, hi] with independent open/closed endpoint flags.
///
/// Invariants: lo <= hi; a degenerate interval (lo == hi) is finite and
/// closed on both sides; an infinite endpoint is always open. There is no
/// empty interval.
class Interval {
 public:
  /// The degenerate interval [0,0].
  Interval() : Interval(Rational(0)) {}
  /// Throws MathError when the invariants above are violated.
  Interval(ExtRational lo, ExtRational hi, bool loClosed, bool hiClosed);

  /// Degenerate interval [v,v].
  Interval(const Rational& v);  // NOLINT
  static Interval closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }
  static Interval rightOpen(const Rational& lo, const Rational& hi) { return {lo, hi, true, false}; }
  static Interval whole() { return {ExtRational::negInf(), ExtRational::posInf(), false, false}; }

  const ExtRational& lo() const { return lo_; }
  const ExtRational& hi() const { return hi_; }
  bool loClosed() const { return loClosed_; }
  bool hiClosed() const { return hiClosed_; }

  bool isDegenerate() const { return lo_ == hi_; }
  bool isZero() const { return isDegenerate() && lo_.sign() == 0; }
  bool isBounded() const { return lo_.isFinite() && hi_.isFinite(); }
  bool containsZero() const { return contains(Rational(0)); }

  /// Membership respecting endpoint flags.
  bool contains(const Rational& q) const;
  bool contains(const ExtRational& q) const;
  /// Set inclusion.
  bool isSubsetOf(const Interval& other) const;

  /// hi - lo for bounded intervals, std::nullopt otherwise.
  std::optional<Rational> width() const;
  /// A rational strictly inside the interval (or its value when degenerate).
  Rational interiorPoint() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  ExtRational lo_;
  ExtRational hi_;
  bool loClosed_ = true;
  bool hiClosed_ = true;
};

/// Ordered union of pairwise disjoint, non-touching intervals.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Sorts and merges overlapping or touching parts.
  explicit IntervalUnion(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  bool contains(const Rational& q) const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
/// Endpoints are the min and max of the four endpoint products; an output
/// endpoint is open iff no product attaining it is attained inside the
/// operand sets. Any ambiguous product yields the whole line.
Interval mul(const Interval& a, const Interval& b);
/// a * [1/hi(b), 1/lo(b)]. Throws MathError when b straddles or has a closed
/// zero endpoint; use recip() for those divisors.
Interval div(const Interval& a, const Interval& b);
Interval arith(ArithOp op, const Interval& a, const Interval& b);
Interval neg(const Interval& a);
Interval scale(const Interval& a, const Rational& c);

/// 1/A as a union of at most two parts. Throws MathError for [0,0].
IntervalUnion recip(const Interval& a);

/// A^n with the tight even-power rule (X^2 of [-1,2] is [0,4], not [-2,4]).
Interval pow(const Interval& a, unsigned n);

/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

/// `[a,b]`, `(a,b]`, `[a,b)`, `(a,b)`; infinities print as `-inf`/`inf`.
/// A degenerate interval prints as `[a,a]`.
std::string toString(const Interval& x);
std::string toString(const IntervalUnion& u);
std::ostream& operator<<(std::ostream& os, const Interval& x);

/// Inverse of toString(Interval). Throws MathError on malformed text,
/// lo > hi, or a closed infinite endpoint.
Interval parseInterval(std::string_view text);

}  // namespace igsys

#endif  // IGSYS_INTERVAL_HPP
