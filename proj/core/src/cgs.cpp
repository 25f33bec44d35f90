#include "igsys/cgs.hpp"

#include <algorithm>

#include "igsys/groebner.hpp"

namespace igsys {

bool isConsistent(std::span<const Polynomial> E, std::span<const Polynomial> N) {
  return std::any_of(N.begin(), N.end(), [&](const Polynomial& g) { return !radicalMember(g, E); });
}

std::vector<Polynomial> mdBasis(const ParametricRing& ring, std::span<const Polynomial> P) {
  std::vector<Monomial> lmx;
  lmx.reserve(P.size());
  for (const auto& p : P) {
    if (p.isZero() || ring.isParameterOnly(p)) throw MathError("mdBasis: input contains a parameter-only polynomial");
    lmx.push_back(ring.leadingX(p).first);
  }
  const auto& order = ring.combined()->order();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < P.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < P.size() && !drop; ++j) {
      if (i == j || !lmx[j].divides(lmx[i])) continue;
      if (!(lmx[j] == lmx[i])) {
        drop = true;
      } else {
        const auto c = order.compare(P[j].leadingMonomial(), P[i].leadingMonomial());
        drop = c < 0 || (c == 0 && j < i);
      }
    }
    if (!drop) out.push_back(P[i]);
  }
  return out;
}

namespace {

std::vector<Polynomial> primitiveAll(std::span<const Polynomial> v) {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.primitive());
  return out;
}

std::vector<Polynomial> unitBasis(const ParametricRing& ring) {
  return {Polynomial::constant(ring.combined(), Rational(1))};
}

void pgbRecurse(const ParametricRing& ring, std::span<const Polynomial> P, std::span<const Polynomial> E,
                std::span<const Polynomial> N, const ConsistencyTest& consistent, std::vector<Branch>& out) {
  std::vector<Polynomial> input(P.begin(), P.end());
  for (const auto& e : E) input.push_back(ring.fromParameters(e));
  const auto G = reducedGB(ring.combined(), input);

  if (G.isUnit()) {
    if (consistent(E, N)) out.push_back({primitiveAll(E), primitiveAll(N), unitBasis(ring)});
    return;
  }

  std::vector<Polynomial> Gr;
  std::vector<Polynomial> rest;
  for (const auto& g : G.generators()) {
    if (ring.isParameterOnly(g)) {
      Gr.push_back(ring.toParameters(g).primitive());
    } else {
      rest.push_back(g);
    }
  }

  const auto NGr = productSet(N, Gr);
  if (consistent(E, NGr)) out.push_back({primitiveAll(E), NGr, unitBasis(ring)});
  if (!consistent(Gr, N)) return;

  const auto Gm = mdBasis(ring, rest);
  std::vector<Polynomial> lcs;
  lcs.reserve(Gm.size());
  for (const auto& g : Gm) lcs.push_back(ring.leadingX(g).second.primitive());
  Polynomial h = Polynomial::constant(ring.parameters(), Rational(1));
  for (const auto& c : lcs) h = polynomialLcm(h, c);

  const std::vector<Polynomial> hs{h};
  const auto Nh = productSet(N, hs);
  if (consistent(Gr, Nh)) out.push_back({Gr, Nh, primitiveAll(Gm)});

  Polynomial prefix = Polynomial::constant(ring.parameters(), Rational(1));
  for (const auto& hi : lcs) {
    if (!hi.isConstant()) {
      std::vector<Polynomial> Ei = Gr;
      Ei.push_back(hi);
      const std::vector<Polynomial> pre{prefix};
      const auto Ni = productSet(N, pre);
      pgbRecurse(ring, rest, Ei, Ni, consistent, out);
    }
    prefix = (prefix * hi).primitive();
  }
}

}  // namespace

std::vector<Branch> pgbMain(const ParametricRing& ring, std::span<const Polynomial> P,
                            std::span<const Polynomial> E, std::span<const Polynomial> N,
                            const ConsistencyTest& consistent) {
  std::vector<Branch> out;
  pgbRecurse(ring, P, E, N, consistent, out);
  return out;
}

CGSResult pgb(const ParametricRing& ring, std::span<const Polynomial> P, const ConsistencyTest& consistent) {
  const std::vector<Polynomial> N{Polynomial::constant(ring.parameters(), Rational(1))};
  return {ring, pgbMain(ring, P, {}, N, consistent)};
}

CGSResult pgb(const ParametricRing& ring, std::span<const Polynomial> P) {
  return pgb(ring, P, [](std::span<const Polynomial> E, std::span<const Polynomial> N) { return isConsistent(E, N); });
}

std::vector<Polynomial> specializeBasis(const ParametricRing& ring, std::span<const Polynomial> G,
                                        std::span<const Rational> point) {
  std::vector<Polynomial> out;
  for (const auto& g : G) {
    Polynomial s = ring.specialize(g, point);
    if (!s.isZero()) out.push_back(s.monic());
  }
  return out;
}

bool branchCovers(const Branch& b, std::span<const Rational> point) {
  for (const auto& e : b.E)
    if (sgn(e.evaluate(point)) != 0) return false;
  return std::any_of(b.N.begin(), b.N.end(), [&](const Polynomial& g) { return sgn(g.evaluate(point)) != 0; });
}

}  // namespace igsys
