#pragma once

#include "ringexp/ring.hpp"

#include <optional>
#include <vector>

namespace ringexp {

/// Searches for a ring isomorphism a -> b by guessing images of a small
/// generating set of a and closing under the operations. Test utility only;
/// gives up with CapacityError when the guess space exceeds `max_guesses`.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b,
                                                  std::size_t max_guesses = std::size_t{1} << 22);

inline bool are_isomorphic(const FiniteRing& a, const FiniteRing& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace ringexp
