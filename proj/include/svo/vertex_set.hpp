#ifndef SVO_VERTEX_SET_HPP
#define SVO_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace svo {

inline constexpr int max_vertices = 64;

/// A subset of the vertices {0, ..., 63} stored as one machine word.
class vertex_set {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr vertex_set() = default;
    constexpr explicit vertex_set(std::uint64_t bits) : bits_(bits) {}

    static constexpr vertex_set singleton(int v) { return vertex_set{std::uint64_t{1} << v}; }

    // {0, ..., n-1}
    static constexpr vertex_set first(int n) {
        return vertex_set{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    static vertex_set of(const std::vector<int>& vertices) {
        vertex_set s;
        for (int v : vertices) s = s.with(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(vertex_set other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(vertex_set other) const { return (bits_ & other.bits_) != 0; }

    constexpr vertex_set with(int v) const { return vertex_set{bits_ | (std::uint64_t{1} << v)}; }
    constexpr vertex_set without(int v) const { return vertex_set{bits_ & ~(std::uint64_t{1} << v)}; }

    // Undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }
    constexpr int highest() const { return 63 - std::countl_zero(bits_); }

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{}; }

    constexpr vertex_set operator|(vertex_set o) const { return vertex_set{bits_ | o.bits_}; }
    constexpr vertex_set operator&(vertex_set o) const { return vertex_set{bits_ & o.bits_}; }
    constexpr vertex_set operator-(vertex_set o) const { return vertex_set{bits_ & ~o.bits_}; }
    constexpr vertex_set& operator|=(vertex_set o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr vertex_set& operator&=(vertex_set o) {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr bool operator==(const vertex_set&) const = default;
    constexpr auto operator<=>(const vertex_set&) const = default;

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Packs the members of `x` that lie in `keep` into consecutive low bits,
/// preserving order (the i-th smallest member of `keep` maps to bit i).
constexpr vertex_set compress(vertex_set x, vertex_set keep) {
    std::uint64_t out = 0;
    int i = 0;
    for (int v : keep) {
        if (x.contains(v)) out |= std::uint64_t{1} << i;
        ++i;
    }
    return vertex_set{out};
}

/// Inverse of compress: bit i of `x` maps to the i-th smallest member of `keep`.
constexpr vertex_set expand(vertex_set x, vertex_set keep) {
    std::uint64_t out = 0;
    int i = 0;
    for (int v : keep) {
        if (x.contains(i)) out |= std::uint64_t{1} << v;
        ++i;
    }
    return vertex_set{out};
}

/// "{0,2,4}"
std::string to_string(vertex_set s);

}  // namespace svo

#endif  // SVO_VERTEX_SET_HPP
