#ifndef IGSYS_IGS_HPP
#define IGSYS_IGS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igsys/cgs.hpp"
#include "igsys/interval_polynomial.hpp"

namespace igsys {

/// Range of one parameter and, when it came from an interval coefficient,
/// the (polynomial, term) position it replaced.
struct BoxCoordinate {
  std::string name;
  Interval range;
  std::optional<std::size_t> poly;
  std::optional<std::size_t> term;
};

/// Cartesian product of parameter ranges, one coordinate per parameter in
/// parameter-ring order.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<BoxCoordinate> coords) : coords_(std::move(coords)) {}

  const std::vector<BoxCoordinate>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Interval& range(std::size_t i) const { return coords_[i].range; }
  std::vector<Interval> ranges() const;
  bool contains(std::span<const Rational> point) const;

 private:
  std::vector<BoxCoordinate> coords_;
};

enum class Consistency { Consistent, Inconsistent, Unknown };
enum class Certificate { None, ComplexEmpty, BoxPruned, WitnessFound, BudgetExhausted };

std::string toString(Consistency c);
std::string toString(Certificate c);

struct ConsistencyVerdict {
  Consistency status = Consistency::Unknown;
  std::optional<std::vector<Rational>> witness;
  Certificate certificate = Certificate::None;
};

struct SearchOptions {
  /// Maximum bisection depth of the branch-and-prune stage.
  unsigned depth = 24;
  /// Cap on the number of sub-boxes examined per query.
  std::size_t maxBoxes = 20000;
  /// Cap on backtracking nodes of the witness search.
  std::size_t witnessNodes = 4000;
};

/// Parametric image of an interval system together with its box.
struct ParametricSystem {
  ParametricRing ring;
  std::vector<Polynomial> polys;
  Box box;
};

/// Assigns a fresh parameter prefix1, prefix2, ... to every non-degenerate
/// coefficient in reading order; degenerate coefficients stay rational.
ParametricSystem parameterize(const IntervalSystem& system, const MonomialOrder& variableOrder,
                              const std::string& prefix = "h");

/// Real-root reformulation of "E vanishes somewhere in the box where some
/// element of N is nonzero". Ring variables: the parameters, then b_i for
/// every non-degenerate bounded or half-bounded coordinate, then c_j for
/// every element of N.
struct AugmentedSystem {
  RingPtr ring;
  std::vector<Polynomial> polys;
  /// auxiliary[i] is the index of b_i in ring, or nullopt when coordinate i
  /// needed no auxiliary variable.
  std::vector<std::optional<std::size_t>> auxiliary;
};

/// Supported coordinate shapes: [α,β), (α,β], [α,β], [α,∞), (-∞,β], the
/// whole line and degenerate points. Throws MathError for other shapes.
AugmentedSystem augment(std::span<const Polynomial> E, std::span<const Polynomial> N, const Box& box);

/// The box coordinate encoded by an auxiliary value η: for [α,β) this is
/// (α + βη²)/(1 + η²). Takes η² so that irrational η stay exact.
Rational coordinateFromAuxiliary(const Interval& range, const Rational& etaSquared);
/// η² for a coordinate value γ inside range, inverse of the above.
Rational auxiliaryFromCoordinate(const Interval& range, const Rational& gamma);

/// Staged decision of [V(E) \ V(N)] ∩ box ≠ ∅: complex emptiness by radical
/// membership, rational witness search, then interval branch-and-prune.
ConsistencyVerdict realRootInBox(std::span<const Polynomial> E, std::span<const Polynomial> N, const Box& box,
                                 const SearchOptions& options = {});

/// Box-aware consistency: not redundant and some g in N outside √<E>.
bool intervalIsConsistent(std::span<const Polynomial> E, std::span<const Polynomial> N, const Box& box,
                          const SearchOptions& options = {});

struct BranchVerdict {
  Branch branch;
  ConsistencyVerdict verdict;
};

struct IGSResult {
  ParametricRing ring;
  std::vector<Polynomial> system;
  Box box;
  std::vector<BranchVerdict> branches;
  /// Condition pairs the consistency test turned down, in query order.
  std::vector<BranchVerdict> rejected;

  bool hasUnknown() const;
};

/// Interval Gröbner system; the parameter order is grevlex h1 > h2 > ...
IGSResult igs(const IntervalSystem& system, const MonomialOrder& variableOrder, const SearchOptions& options = {});
/// Same driver for an already parametric system whose box lists one
/// coordinate per parameter.
IGSResult igsParametric(const ParametricRing& ring, std::span<const Polynomial> polys, const Box& box,
                        const SearchOptions& options = {});

}  // namespace igsys

#endif  // IGSYS_IGS_HPP
