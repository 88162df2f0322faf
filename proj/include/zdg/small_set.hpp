// zdg - zero-divisor graphs of finite commutative semigroups
//
// A set of small non-negative integers stored as a 64-bit mask. Used for
// vertex sets, element sets and search domains.

#ifndef ZDG_SMALL_SET_HPP_
#define ZDG_SMALL_SET_HPP_

#include <bit>          // for popcount, countr_zero
#include <cstddef>      // for size_t
#include <cstdint>      // for uint64_t
#include <iterator>     // for forward_iterator_tag
#include <vector>       // for vector

namespace zdg {

  class SmallSet {
   public:
    static constexpr std::size_t capacity = 64;

    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = std::size_t;
      using difference_type   = std::ptrdiff_t;
      using pointer           = void;
      using reference         = std::size_t;

      constexpr iterator() = default;
      constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

      constexpr std::size_t operator*() const noexcept {
        return static_cast<std::size_t>(std::countr_zero(_rest));
      }
      constexpr iterator& operator++() noexcept {
        _rest &= _rest - 1;
        return *this;
      }
      constexpr iterator operator++(int) noexcept {
        iterator copy = *this;
        ++*this;
        return copy;
      }
      constexpr bool operator==(iterator const&) const = default;

     private:
      std::uint64_t _rest = 0;
    };

    constexpr SmallSet() = default;
    constexpr explicit SmallSet(std::uint64_t bits) : _bits(bits) {}

    static constexpr SmallSet singleton(std::size_t i) {
      return SmallSet(std::uint64_t(1) << i);
    }
    // {0, 1, ..., n - 1}
    static constexpr SmallSet range(std::size_t n) {
      return SmallSet(n >= 64 ? ~std::uint64_t(0)
                              : (std::uint64_t(1) << n) - 1);
    }
    static SmallSet of(std::vector<std::size_t> const& xs) {
      SmallSet s;
      for (auto x : xs) {
        s.insert(x);
      }
      return s;
    }

    constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    constexpr bool contains(std::size_t i) const noexcept {
      return i < 64 && ((_bits >> i) & 1U);
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    // Smallest member; undefined on the empty set.
    constexpr std::size_t front() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(_bits));
    }
    constexpr void insert(std::size_t i) noexcept {
      _bits |= std::uint64_t(1) << i;
    }
    constexpr void erase(std::size_t i) noexcept {
      _bits &= ~(std::uint64_t(1) << i);
    }
    constexpr bool is_subset_of(SmallSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    constexpr iterator begin() const noexcept {
      return iterator(_bits);
    }
    constexpr iterator end() const noexcept {
      return iterator(0);
    }

    std::vector<std::size_t> to_vector() const {
      return std::vector<std::size_t>(begin(), end());
    }

    constexpr SmallSet& operator|=(SmallSet o) noexcept {
      _bits |= o._bits;
      return *this;
    }
    constexpr SmallSet& operator&=(SmallSet o) noexcept {
      _bits &= o._bits;
      return *this;
    }
    constexpr SmallSet& operator-=(SmallSet o) noexcept {
      _bits &= ~o._bits;
      return *this;
    }
    friend constexpr SmallSet operator|(SmallSet a, SmallSet b) noexcept {
      return a |= b;
    }
    friend constexpr SmallSet operator&(SmallSet a, SmallSet b) noexcept {
      return a &= b;
    }
    friend constexpr SmallSet operator-(SmallSet a, SmallSet b) noexcept {
      return a -= b;
    }
    friend constexpr bool operator==(SmallSet, SmallSet) = default;
    friend constexpr auto operator<=>(SmallSet, SmallSet) = default;

   private:
    std::uint64_t _bits = 0;
  };

}  // namespace zdg

#endif  // ZDG_SMALL_SET_HPP_
