#pragma once

#include "ringexp/lattice.hpp"
#include "ringexp/topology.hpp"

#include <string>

namespace ringexp::io {

/// Inclusion Hasse diagram, edges from smaller to larger ideal.
std::string lattice_dot(const IdealLattice& lat);
/// Specialization Hasse diagram, edges from p to q when p < q is a cover.
std::string space_dot(const FiniteSpace& x, const std::string& name = "space");

}  // namespace ringexp::io
