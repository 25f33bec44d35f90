#ifndef IGSYS_VERIFY_HPP
#define IGSYS_VERIFY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "igsys/cgs.hpp"
#include "igsys/igs.hpp"

namespace igsys {

struct SampleCheck {
  std::size_t samples = 0;
  /// Points no branch covers.
  std::size_t uncovered = 0;
  /// Covered points whose specialised basis is not a Gröbner basis of the
  /// specialised system.
  std::size_t mismatched = 0;

  bool ok() const { return uncovered == 0 && mismatched == 0; }
};

/// True when σ(G) is a Gröbner basis of ⟨σ(P)⟩ at the point: same leading
/// monomial ideal and every σ(g) reduces to zero.
bool specializesToBasis(const ParametricRing& ring, std::span<const Polynomial> P, std::span<const Polynomial> G,
                        std::span<const Rational> point);

SampleCheck checkSamples(const ParametricRing& ring, std::span<const Polynomial> P, std::span<const Branch> branches,
                         std::span<const std::vector<Rational>> points);

/// Random rational points of the box; about a quarter of the coordinates
/// are drawn from special values (0, ±1, closed endpoints) when allowed.
std::vector<std::vector<Rational>> sampleBox(const Box& box, std::size_t count, std::uint64_t seed);

}  // namespace igsys

#endif  // IGSYS_VERIFY_HPP
