#pragma once

#include <cstddef>

namespace ringexp {

/// Search and construction limits. Every exhaustive procedure checks the
/// relevant field and raises CapacityError instead of running unbounded.
struct Bounds {
  std::size_t max_order = 4096;               ///< elements per finite ring
  std::size_t max_automorphism_search = 16;   ///< order limit for automorphism enumeration
  std::size_t max_ideals = 4096;              ///< ideals per lattice
  std::size_t max_generator_ideals = 24;      ///< lattice size allowed for generator enumeration
  std::size_t max_generators = std::size_t{1} << 20;
  std::size_t max_space_points = 12;          ///< points allowed for open-cover enumeration
  std::size_t max_covers = std::size_t{1} << 20;
  std::size_t max_adversaries = std::size_t{1} << 20;  ///< symbolic oracle adversary pool
};

}  // namespace ringexp
