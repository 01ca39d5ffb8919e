#pragma once

#include "ringexp/ring.hpp"

namespace ringexp {

// Builder hooks for constructions that live outside ring.cpp.
std::shared_ptr<FiniteRing> finish_ring(FiniteRing::Tables t, Recipe recipe);
void attach_quotient(FiniteRing& r, RingPtr base, std::vector<Elem> reps);

}  // namespace ringexp
