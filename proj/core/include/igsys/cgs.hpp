#ifndef IGSYS_CGS_HPP
#define IGSYS_CGS_HPP

#include <functional>
#include <span>
#include <vector>

#include "igsys/parametric.hpp"

namespace igsys {

/// One triple (E, N, G): E and N live in the parameter ring, G in the
/// combined ring. Every element is stored in primitive form.
struct Branch {
  std::vector<Polynomial> E;
  std::vector<Polynomial> N;
  std::vector<Polynomial> G;

  bool isUnit() const { return G.size() == 1 && G[0].isConstant(); }
};

struct CGSResult {
  ParametricRing ring;
  std::vector<Branch> branches;
};

/// Decides whether the pair (E, N) describes a nonempty parameter region.
using ConsistencyTest = std::function<bool(std::span<const Polynomial> E, std::span<const Polynomial> N)>;

/// Some g in N lies outside the radical of <E>.
bool isConsistent(std::span<const Polynomial> E, std::span<const Polynomial> N);

/// Drops every p whose LM_x is divisible by the LM_x of another element.
/// Among elements with equal LM_x the one with the smallest leading monomial
/// is kept. Throws MathError when P contains a parameter-only polynomial.
std::vector<Polynomial> mdBasis(const ParametricRing& ring, std::span<const Polynomial> P);

/// Branches of the comprehensive system of <P> under the conditions (E, N),
/// in depth-first emission order. P lives in ring.combined().
std::vector<Branch> pgbMain(const ParametricRing& ring, std::span<const Polynomial> P,
                            std::span<const Polynomial> E, std::span<const Polynomial> N,
                            const ConsistencyTest& consistent);

/// Comprehensive Gröbner system of <P> starting from E = {}, N = {1}.
CGSResult pgb(const ParametricRing& ring, std::span<const Polynomial> P);
CGSResult pgb(const ParametricRing& ring, std::span<const Polynomial> P, const ConsistencyTest& consistent);

/// Specialization of a branch basis: σ(G) made monic, zeros dropped.
std::vector<Polynomial> specializeBasis(const ParametricRing& ring, std::span<const Polynomial> G,
                                        std::span<const Rational> point);

/// The point satisfies E and makes some member of N nonzero.
bool branchCovers(const Branch& b, std::span<const Rational> point);

}  // namespace igsys

#endif  // IGSYS_CGS_HPP
