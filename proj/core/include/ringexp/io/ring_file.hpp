#pragma once

#include "ringexp/automorphism.hpp"
#include "ringexp/bounds.hpp"
#include "ringexp/symbolic.hpp"

#include <nlohmann/json.hpp>

#include <optional>

namespace ringexp::io {

using nlohmann::json;

// Ring definition documents:
//   {"kind":"cyclic","n":6}
//   {"kind":"poly_quotient","p":2,"coeffs":[1,1,1]}        monic, low to high
//   {"kind":"product","factors":[<ring>, ...]}
//   {"kind":"quotient","base":<ring>,"ideal_generators":[<elem>, ...]}
//   {"kind":"tables","order":n,"add":[[..]],"mul":[[..]],"zero":0,"one":1}
//   {"kind":"semilocal","k":2}                              symbolic ring
// Elements: integer (cyclic), coefficient list (poly_quotient), list of
// factor elements (product), base element (quotient), index (tables).

RingPtr ring_from_json(const json& j, const Bounds& bounds = {});
json ring_to_json(const FiniteRing& r);

/// k for a "semilocal" document, nullopt for finite kinds.
std::optional<std::size_t> semilocal_rank(const json& j);

Elem elem_from_json(const FiniteRing& r, const json& j);
json elem_to_json(const FiniteRing& r, Elem a);

/// "identity", "frobenius", "swap:i,j" or the list of images of every
/// element in index order.
RingAutomorphism automorphism_from_json(const RingPtr& r, const json& j);
json automorphism_json(const RingAutomorphism& a);

/// "identity", "swap:i,j" or an explicit permutation list.
CoordPerm sym_perm_from_json(std::size_t k, const json& j);

}  // namespace ringexp::io
