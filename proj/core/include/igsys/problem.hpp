#ifndef IGSYS_PROBLEM_HPP
#define IGSYS_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igsys/interval_polynomial.hpp"
#include "igsys/parametric.hpp"

namespace igsys {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

enum class OrderKind { Lex, Grevlex };

/// `lex(x > y > z)`, `grevlex(z < y < x)` or a bare kind. Names run from the
/// greatest variable to the smallest once normalised.
struct OrderSpec {
  OrderKind kind = OrderKind::Lex;
  std::vector<std::string> names;

  MonomialOrder order() const;
  std::string toString() const;
  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

OrderSpec parseOrderSpec(std::string_view text);

struct NamedRange {
  std::string name;
  Interval range;
  friend bool operator==(const NamedRange&, const NamedRange&) = default;
};

/// One input file. Without `params`, `poly` lines are interval polynomials
/// over the variables; with `params`, they are exact polynomials over
/// variables and parameters together.
struct ProblemFile {
  std::vector<std::string> variables;
  OrderSpec order;
  std::vector<std::string> parameters;
  OrderSpec parameterOrder{OrderKind::Grevlex, {}};

  RingPtr ring;
  std::optional<ParametricRing> parametric;

  std::vector<IntervalPolynomial> polys;
  std::vector<Polynomial> parametricPolys;
  std::optional<Polynomial> divisor;
  std::vector<Rational> schedule;
  std::vector<NamedRange> boxes;
  std::vector<NamedRange> signs;

  bool isParametric() const { return !parameters.empty(); }
  /// The exact polynomials of a file whose poly lines carry no intervals.
  std::vector<Polynomial> exactPolys() const;
  /// Rebuilds rings and polynomials under a different variable order.
  ProblemFile withOrder(const OrderSpec& spec) const;
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

ProblemFile parseProblem(std::string_view text);
ProblemFile loadProblem(const std::string& path);
/// Canonical text; parseProblem(renderProblem(p)) == p.
std::string renderProblem(const ProblemFile& p);

/// Polynomial text over a given ring, e.g. `(1/2 - h)*x^5 + 3*y - 1`.
Polynomial parsePolynomial(std::string_view text, const RingPtr& ring);
/// Interval polynomial text, e.g. `[-1,2)*x*y + [0,1)*y + [3,5)`.
IntervalPolynomial parseIntervalPolynomial(std::string_view text, const RingPtr& ring);

}  // namespace igsys

#endif  // IGSYS_PROBLEM_HPP
