#ifndef IGSYS_GROEBNER_HPP
#define IGSYS_GROEBNER_HPP

#include <span>
#include <string>
#include <vector>

#include "igsys/polynomial.hpp"

namespace igsys {

/// Generators of an ideal together with the order they were computed for.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators, bool reduced)
      : ring_(std::move(ring)), generators_(std::move(generators)), reduced_(reduced) {}

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool isReduced() const { return reduced_; }
  /// True for the basis {1} of the whole ring.
  bool isUnit() const { return generators_.size() == 1 && generators_[0].isOne(); }
  bool isZeroIdeal() const { return generators_.empty(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).isZero(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  bool reduced_;
};

/// Full multivariate division remainder of f by G under f's ring order.
/// No monomial of the result is divisible by a leading monomial of G.
Polynomial normalForm(const Polynomial& f, std::span<const Polynomial> G);

/// lcm/LT(f) * f - lcm/LT(g) * g.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Gröbner basis of <F> (Buchberger with the Gebauer-Möller
/// criteria and the normal selection strategy). Generators are monic and
/// sorted by descending leading monomial; <1> gives {1}, <0> gives {}.
GroebnerBasis reducedGB(const RingPtr& ring, std::span<const Polynomial> F);
GroebnerBasis reducedGB(std::span<const Polynomial> F);

/// Generators of G involving only the listed variables. The order of G must
/// be a block order whose trailing blocks are exactly those variables.
std::vector<Polynomial> eliminate(const GroebnerBasis& G, std::span<const std::string> keep);

/// g in <E>.
bool idealMember(const Polynomial& g, std::span<const Polynomial> E);
/// g in the radical of <E>, decided by 1 in <E, 1 - w*g> for a fresh w.
bool radicalMember(const Polynomial& g, std::span<const Polynomial> E);
/// Reduced basis of the saturation <E> : g^∞, computed as <E, 1 - t*g> ∩ K[vars].
GroebnerBasis saturate(std::span<const Polynomial> E, const Polynomial& g);

/// Least common multiple and greatest common divisor in the polynomial ring,
/// returned in primitive form.
Polynomial polynomialLcm(const Polynomial& f, const Polynomial& g);
Polynomial polynomialGcd(const Polynomial& f, const Polynomial& g);

}  // namespace igsys

#endif  // IGSYS_GROEBNER_HPP
