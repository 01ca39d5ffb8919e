#include "ringexp/element_set.hpp"

namespace ringexp {

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.insert(e);
  return s;
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

std::vector<Elem> ElementSet::elements() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  if (auto c = a.universe() <=> b.universe(); c != 0) return c;
  auto i = a.bits_.find_first();
  auto j = b.bits_.find_first();
  while (i != ElementSet::Bits::npos && j != ElementSet::Bits::npos) {
    if (i != j) return i <=> j;
    i = a.bits_.find_next(i);
    j = b.bits_.find_next(j);
  }
  return std::strong_ordering::equal;
}

}  // namespace ringexp
