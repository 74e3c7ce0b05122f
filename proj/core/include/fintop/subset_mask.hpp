#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace fintop {

using Word = std::uint64_t;

/// Largest supported ground set: one machine word per subset.
inline constexpr std::size_t kMaxPoints = 64;

/// Bits 0..n-1 set.
constexpr Word low_bits(std::size_t n) noexcept {
    return n >= kMaxPoints ? ~Word{0} : (Word{1} << n) - 1;
}

/// A subset of the ground set {0, ..., n-1}, stored as a single word.
///
/// Bits at positions >= n are always zero. Binary operators expect both
/// operands to live over the same ground set; this is asserted in debug builds.
class SubsetMask {
  public:
    constexpr SubsetMask() = default;

    /// Throws std::out_of_range when `bits` has a bit at or above `n`.
    constexpr SubsetMask(Word bits, std::size_t n) : bits_{bits}, n_{static_cast<std::uint8_t>(n)} {
        if (n > kMaxPoints) throw std::out_of_range("ground set exceeds kMaxPoints");
        if ((bits & ~low_bits(n)) != 0) throw std::out_of_range("subset mask has bits outside the ground set");
    }

    static constexpr SubsetMask empty(std::size_t n) { return SubsetMask{0, n}; }
    static constexpr SubsetMask full(std::size_t n) { return SubsetMask{low_bits(n), n}; }
    static constexpr SubsetMask singleton(std::size_t n, std::size_t x) {
        if (x >= n) throw std::out_of_range("point outside the ground set");
        return SubsetMask{Word{1} << x, n};
    }

    constexpr Word bits() const noexcept { return bits_; }
    constexpr std::size_t size() const noexcept { return n_; }
    constexpr std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

    constexpr bool is_empty() const noexcept { return bits_ == 0; }
    constexpr bool is_full() const noexcept { return bits_ == low_bits(n_); }
    constexpr bool contains(std::size_t x) const noexcept { return x < n_ && ((bits_ >> x) & 1u) != 0; }
    constexpr bool subset_of(SubsetMask o) const noexcept {
        assert(n_ == o.n_);
        return (bits_ & ~o.bits_) == 0;
    }
    constexpr bool disjoint_from(SubsetMask o) const noexcept {
        assert(n_ == o.n_);
        return (bits_ & o.bits_) == 0;
    }

    constexpr SubsetMask complement() const noexcept { return raw(~bits_ & low_bits(n_), n_); }

    constexpr SubsetMask operator|(SubsetMask o) const noexcept {
        assert(n_ == o.n_);
        return raw(bits_ | o.bits_, n_);
    }
    constexpr SubsetMask operator&(SubsetMask o) const noexcept {
        assert(n_ == o.n_);
        return raw(bits_ & o.bits_, n_);
    }
    /// Set difference.
    constexpr SubsetMask operator-(SubsetMask o) const noexcept {
        assert(n_ == o.n_);
        return raw(bits_ & ~o.bits_, n_);
    }
    constexpr SubsetMask operator~() const noexcept { return complement(); }
    constexpr SubsetMask& operator|=(SubsetMask o) noexcept { return *this = *this | o; }
    constexpr SubsetMask& operator&=(SubsetMask o) noexcept { return *this = *this & o; }

    constexpr bool operator==(const SubsetMask&) const = default;
    /// Numeric order on the bit pattern, then ground-set size.
    constexpr auto operator<=>(const SubsetMask& o) const noexcept {
        if (auto c = bits_ <=> o.bits_; c != 0) return c;
        return n_ <=> o.n_;
    }

    /// Skips the range check; for hot loops that already guarantee it.
    static constexpr SubsetMask raw(Word bits, std::size_t n) noexcept {
        SubsetMask m;
        m.bits_ = bits;
        m.n_ = static_cast<std::uint8_t>(n);
        return m;
    }

  private:
    Word bits_ = 0;
    std::uint8_t n_ = 0;
};

/// Canonical ordering used for open-set lists: by cardinality, then numerically.
constexpr bool canonical_less(SubsetMask a, SubsetMask b) noexcept {
    const auto ca = a.count();
    const auto cb = b.count();
    return ca != cb ? ca < cb : a.bits() < b.bits();
}

/// Visits every superset of `a` inside its ground set in ascending numeric order.
/// The visitor returns false to stop early; the function returns false in that case.
template <typename Visit>
constexpr bool for_each_superset(SubsetMask a, Visit&& visit) {
    const Word free = ~a.bits() & low_bits(a.size());
    Word extra = 0;
    do {
        if (!visit(SubsetMask::raw(a.bits() | extra, a.size()))) return false;
        extra = (extra - free) & free;
    } while (extra != 0);
    return true;
}

/// Visits every subset of the ground set of size n in ascending numeric order.
template <typename Visit>
constexpr bool for_each_subset(std::size_t n, Visit&& visit) {
    return for_each_superset(SubsetMask::empty(n), std::forward<Visit>(visit));
}

/// Visits the points of `a` in ascending order.
template <typename Visit>
constexpr void for_each_point(SubsetMask a, Visit&& visit) {
    for (Word w = a.bits(); w != 0; w &= w - 1) visit(static_cast<std::size_t>(std::countr_zero(w)));
}

}  // namespace fintop
