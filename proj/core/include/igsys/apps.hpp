#ifndef IGSYS_APPS_HPP
#define IGSYS_APPS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igsys/igs.hpp"
#include "igsys/interval_polynomial.hpp"
#include "igsys/univariate.hpp"

namespace igsys {

/// Endpoint of a root-set component; an empty value means infinite.
struct RootEndpoint {
  std::optional<RealRoot> value;
  bool closed = false;
};

struct RootComponent {
  RootEndpoint lo;
  RootEndpoint hi;

  bool contains(const Rational& x) const;
  /// Outward rational enclosure; finite endpoints are refined below width.
  Interval enclosure(const Rational& width) const;
  std::string toString() const;
};

/// Real solutions of a univariate interval polynomial, {x : 0 ∈ [f](x)}.
struct RootSet {
  std::vector<RootComponent> components;
  /// Boundary polynomials per sign region: x >= 0 and x <= 0.
  UPoly fMinPositive, fMaxPositive, fMinNegative, fMaxNegative;

  bool contains(const Rational& x) const;
  IntervalUnion enclosure(const Rational& width) const;
  std::string toString() const;
};

/// Value set {f(x) : f in the family} at a rational point, computed exactly
/// with interval arithmetic.
Interval valueSet(const IntervalPolynomial& f, const Rational& x);

/// Requires a univariate interval polynomial with bounded coefficients.
RootSet solveUnivariate(const IntervalPolynomial& f);

struct DivisibilityReport {
  bool verdict = false;
  /// Set when no branch could be certified either way.
  bool undecided = false;
  /// Null conditions of the witnessing branch.
  std::vector<Polynomial> condition;
  std::optional<std::vector<Rational>> witnessPoint;
  std::optional<Polynomial> witnessPolynomial;
  IGSResult igs;
};

/// Does some nonzero member of [f] have g as a factor? Decided from the
/// interval Gröbner system of {[f], g} under the ring order of [f].
DivisibilityReport iDivides(const Polynomial& g, const IntervalPolynomial& f, const SearchOptions& options = {});

struct EpsilonReport {
  std::optional<Rational> epsilon;
  DivisibilityReport report;
  /// (ε, verdict) for every schedule entry tried, in order.
  std::vector<std::pair<Rational, bool>> trace;
};

/// Widens every coefficient c of f to [c-ε, c+ε] for each ε of the schedule
/// until g i-divides the result.
EpsilonReport epsilonDivides(const Polynomial& f, const Polynomial& g, std::span<const Rational> schedule,
                             const SearchOptions& options = {});

enum class RealStatus { Exists, None, Unknown };
std::string toString(RealStatus s);

struct RealSolveReport {
  RealStatus status = RealStatus::Unknown;
  /// One solution (per variable) when status is Exists.
  std::vector<RealRoot> solution;
};

/// Real solutions of an exact system with per-variable ranges, decided from
/// a lex basis by back substitution. Positive-dimensional fibres and
/// irrational values that later variables depend on give Unknown.
RealSolveReport realSolutions(std::span<const Polynomial> F, std::span<const Interval> ranges);

enum class SignMode { Ignore, Enforce };

struct FuzzyReport {
  IGSResult igs;
  /// Range handed to the interval Gröbner system (right end opened).
  Interval searched;
  /// Closed right endpoint specialised separately, when there is one.
  std::optional<Rational> endpoint;
  std::optional<RealSolveReport> endpointResult;
};

/// Interval Gröbner system of a system with one fuzzy parameter h over
/// hRange, plus the separate closed-endpoint check. signs maps variable names
/// to allowed ranges; it is honoured at the endpoint when mode is Enforce.
FuzzyReport fuzzySolve(const ParametricRing& ring, std::span<const Polynomial> polys, const Interval& hRange,
                       const std::map<std::string, Interval>& signs, SignMode mode, const SearchOptions& options = {});

}  // namespace igsys

#endif  // IGSYS_APPS_HPP
