#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ringexp {

/// Dense index of a ring element, 0 .. order-1.
using Elem = std::uint32_t;

/// A subset of the elements of a finite ring.
///
/// Sets are ordered by cardinality first and then lexicographically on their
/// ascending element lists. Inclusion is therefore compatible with the order:
/// a proper subset always sorts first.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}

  static ElementSet of(std::size_t universe, std::span<const Elem> elems);
  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(Elem e) const { return bits_.test(e); }
  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }

  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }

  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  std::vector<Elem> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<Elem>(i));
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

}  // namespace ringexp
