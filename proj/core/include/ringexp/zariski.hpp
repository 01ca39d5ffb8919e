#pragma once

#include "ringexp/generators.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/symbolic.hpp"
#include "ringexp/topology.hpp"

#include <vector>

namespace ringexp {

/// The prime spectrum as a finite space. Point p sits below q when the prime
/// of p is contained in the prime of q, so opens are the sets U_I of primes
/// not containing I.
struct Spectrum {
  FiniteSpace space;
  std::vector<std::size_t> prime_index;  ///< point -> lattice index

  /// Closed points.
  PointMask maximal_points() const;
};

Spectrum spectrum(const IdealLattice& lat);
/// U_I for the lattice ideal with the given index.
PointMask zariski_open(const IdealLattice& lat, const Spectrum& s, std::size_t ideal_index);
/// p -> alpha^{-1}(p).
SpaceMap spec_map(const IdealLattice& lat, const Spectrum& s, const RingAutomorphism& alpha);
/// {U_I : I in g}.
OpenCover zariski_cover(const IdealLattice& lat, const Spectrum& s, const GeneratorSet& g);

/// Spectrum of the symbolic ring: point 0 is the zero ideal, point i+1 the
/// maximal ideal (p_{i+1}).
Spectrum sym_spectrum(std::size_t k);
SpaceMap sym_spec_map(const CoordPerm& perm);
PointMask sym_zariski_open(std::size_t k, const ExponentIdeal& i);

}  // namespace ringexp
