#include "igsys/verify.hpp"

#include <algorithm>
#include <random>

#include "igsys/groebner.hpp"

namespace igsys {

namespace {

bool dividedByAny(const Monomial& m, const std::vector<Monomial>& by) {
  return std::any_of(by.begin(), by.end(), [&](const Monomial& d) { return d.divides(m); });
}

}  // namespace

bool specializesToBasis(const ParametricRing& ring, std::span<const Polynomial> P, std::span<const Polynomial> G,
                        std::span<const Rational> point) {
  std::vector<Polynomial> sp;
  for (const auto& p : P) sp.push_back(ring.specialize(p, point));
  const auto reference = reducedGB(ring.variables(), sp);
  const auto sg = specializeBasis(ring, G, point);
  if (sg.empty()) return reference.isZeroIdeal();

  std::vector<Monomial> lmRef, lmG;
  for (const auto& g : reference.generators()) lmRef.push_back(g.leadingMonomial());
  for (const auto& g : sg) lmG.push_back(g.leadingMonomial());
  for (const auto& m : lmRef)
    if (!dividedByAny(m, lmG)) return false;
  for (const auto& m : lmG)
    if (!dividedByAny(m, lmRef)) return false;
  return std::all_of(sg.begin(), sg.end(), [&](const Polynomial& g) { return reference.reduce(g).isZero(); });
}

SampleCheck checkSamples(const ParametricRing& ring, std::span<const Polynomial> P, std::span<const Branch> branches,
                         std::span<const std::vector<Rational>> points) {
  SampleCheck out;
  for (const auto& pt : points) {
    ++out.samples;
    const auto it = std::find_if(branches.begin(), branches.end(), [&](const Branch& b) { return branchCovers(b, pt); });
    if (it == branches.end()) {
      ++out.uncovered;
      continue;
    }
    if (!specializesToBasis(ring, P, it->G, pt)) ++out.mismatched;
  }
  return out;
}

std::vector<std::vector<Rational>> sampleBox(const Box& box, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto draw = [&](const Interval& range) -> Rational {
    if (range.isDegenerate()) return range.lo().value();
    if (uniform(0, 3) == 0) {
      std::vector<Rational> special{Rational(0), Rational(1), Rational(-1)};
      if (range.lo().isFinite()) special.push_back(range.lo().value());
      if (range.hi().isFinite()) special.push_back(range.hi().value());
      std::shuffle(special.begin(), special.end(), rng);
      for (const auto& v : special)
        if (range.contains(v)) return v;
    }
    for (;;) {
      Rational v;
      if (range.isBounded()) {
        const long den = 64;
        const Rational t(uniform(0, den), den);
        v = range.lo().value() + (range.hi().value() - range.lo().value()) * t;
      } else {
        v = Rational(uniform(-256, 256), 16);
      }
      if (range.contains(v)) return v;
    }
  };
  std::vector<std::vector<Rational>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < box.size(); ++i) pt.push_back(draw(box.range(i)));
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace igsys
