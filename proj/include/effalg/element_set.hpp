#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace effalg {

/// Index of an element inside one algebra. Valid ids are 0..size()-1.
using ElementId = int;

/// Hard cap on algebra cardinality; sets are 64-bit masks.
inline constexpr int kMaxElements = 64;

/// A subset of the elements of one algebra, stored as a bit mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet all(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(ElementId x) { return ElementSet(std::uint64_t{1} << x); }
  static ElementSet of(std::initializer_list<ElementId> xs) {
    ElementSet s;
    for (ElementId x : xs) s.insert(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ElementId x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(ElementId x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(ElementId x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr ElementId first() const { return std::countr_zero(bits_); }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr ElementId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<ElementId> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace effalg
