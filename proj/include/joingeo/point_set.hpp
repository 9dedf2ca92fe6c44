#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace joingeo {

/// Hard upper bound on the number of points in any space handled by this
/// library. Two machine words; raising it only costs memory and time.
inline constexpr int kMaxPoints = 128;

/// A subset of {0, ..., kMaxPoints-1} stored as a fixed-width bitmask.
/// Pure value type: every operation returns a new set or a scalar.
class PointSet {
public:
    constexpr PointSet() = default;

    static constexpr PointSet single(int p) {
        PointSet s;
        s.add(p);
        return s;
    }

    /// The set {0, ..., n-1}.
    static constexpr PointSet full(int n) {
        if (n < 0 || n > kMaxPoints) throw std::out_of_range("PointSet::full: bad width");
        PointSet s;
        if (n >= 64) {
            s.words_[0] = ~std::uint64_t{0};
            if (n > 64) s.words_[1] = (n == kMaxPoints) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
        } else if (n > 0) {
            s.words_[0] = (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    static constexpr PointSet of(std::initializer_list<int> pts) {
        PointSet s;
        for (int p : pts) s.add(p);
        return s;
    }

    /// Interprets the low 64 bits of `mask` as members 0..63.
    static constexpr PointSet from_mask(std::uint64_t mask) {
        PointSet s;
        s.words_[0] = mask;
        return s;
    }

    /// Inverse of from_mask; requires all members below 64.
    constexpr std::uint64_t to_mask() const {
        if (words_[1] != 0) throw std::out_of_range("PointSet::to_mask: member above 63");
        return words_[0];
    }

    constexpr bool contains(int p) const {
        check_point(p);
        return (words_[p >> 6] >> (p & 63)) & 1u;
    }

    constexpr PointSet& add(int p) {
        check_point(p);
        words_[p >> 6] |= std::uint64_t{1} << (p & 63);
        return *this;
    }

    constexpr PointSet& remove(int p) {
        check_point(p);
        words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
        return *this;
    }

    constexpr bool empty() const { return words_[0] == 0 && words_[1] == 0; }

    constexpr int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    /// Smallest member, or -1 when empty.
    constexpr int first() const {
        if (words_[0] != 0) return std::countr_zero(words_[0]);
        if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    /// Smallest member strictly greater than p, or -1.
    constexpr int next_after(int p) const {
        if (p < 0) return first();
        if (p >= kMaxPoints - 1) return -1;
        int q = p + 1;
        std::uint64_t w = words_[q >> 6] >> (q & 63);
        if (w != 0) return q + std::countr_zero(w);
        if (q < 64 && words_[1] != 0) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    constexpr bool subset_of(const PointSet& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }

    constexpr bool intersects(const PointSet& o) const {
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }

    /// True when every member is below n.
    constexpr bool within(int n) const { return subset_of(full(n)); }

    friend constexpr PointSet operator|(PointSet a, const PointSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }

    friend constexpr PointSet operator&(PointSet a, const PointSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }

    /// Set difference.
    friend constexpr PointSet operator-(PointSet a, const PointSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }

    constexpr PointSet& operator|=(const PointSet& b) {
        words_[0] |= b.words_[0];
        words_[1] |= b.words_[1];
        return *this;
    }

    constexpr PointSet& operator&=(const PointSet& b) {
        words_[0] &= b.words_[0];
        words_[1] &= b.words_[1];
        return *this;
    }

    friend constexpr bool operator==(const PointSet&, const PointSet&) = default;

    /// Numeric order (point 0 is the least significant bit). Used wherever a
    /// deterministic total order on subsets is needed (canonical forms,
    /// sorted line lists).
    friend constexpr bool operator<(const PointSet& a, const PointSet& b) {
        if (a.words_[1] != b.words_[1]) return a.words_[1] < b.words_[1];
        return a.words_[0] < b.words_[0];
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator(const PointSet* s, int cur) : set_(s), cur_(cur) {}
        int operator*() const { return cur_; }
        iterator& operator++() {
            cur_ = set_->next_after(cur_);
            return *this;
        }
        bool operator==(const iterator& o) const { return cur_ == o.cur_; }
        bool operator!=(const iterator& o) const { return cur_ != o.cur_; }

    private:
        const PointSet* set_;
        int cur_;
    };

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, -1); }

    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (int p : *this) {
            if (sep) out += ", ";
            out += std::to_string(p);
            sep = true;
        }
        out += "}";
        return out;
    }

private:
    static constexpr void check_point(int p) {
        if (p < 0 || p >= kMaxPoints) throw std::out_of_range("PointSet: point index out of range");
    }

    std::array<std::uint64_t, 2> words_{};
};

}  // namespace joingeo
