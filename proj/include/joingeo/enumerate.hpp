#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "joingeo/check_report.hpp"
#include "joingeo/join_space.hpp"
#include "joingeo/point_set.hpp"

namespace joingeo {

/// Exhaustive enumeration is refused above this many points unless the
/// caller raises the bound; it can never go past kMaxExhaustivePoints.
inline constexpr int kDefaultEnumBound = 4;
inline constexpr int kMaxExhaustivePoints = 5;

/// Number of join spaces on n labeled points: each of the C(n,2) pair joins
/// chooses an arbitrary subset of the remaining n-2 points.
inline std::uint64_t join_space_count(int n) {
    if (n < 1) throw std::invalid_argument("join_space_count: need at least one point");
    long long bits = static_cast<long long>(pair_count(n)) * (n - 2);
    if (n <= 2) bits = 0;
    if (bits >= 64)
        throw ResourceError("join_space_count: 2^" + std::to_string(bits) + " does not fit in 64 bits");
    return std::uint64_t{1} << bits;
}

namespace detail {

// Points other than a and c, ascending; bit k of a pair digit selects the
// k-th of these.
inline std::vector<int> free_points(int n, int a, int c) {
    std::vector<int> others;
    others.reserve(n - 2);
    for (int x = 0; x < n; ++x)
        if (x != a && x != c) others.push_back(x);
    return others;
}

inline PointSet join_from_digit(int n, int a, int c, std::uint64_t digit) {
    PointSet s = PointSet::of({a, c});
    std::vector<int> others = free_points(n, a, c);
    for (std::size_t k = 0; k < others.size(); ++k)
        if (digit >> k & 1) s.add(others[k]);
    return s;
}

inline void check_exhaustive_bound(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("enumerate: need at least one point");
    if (n > max_n || n > kMaxExhaustivePoints)
        throw ResourceError("enumerate: exhaustive enumeration over " + std::to_string(n) +
                            " points is out of bounds (limit " +
                            std::to_string(std::min(max_n, kMaxExhaustivePoints)) + ")");
}

template <class F>
void invoke_enumeration_callback(F&& fn, const JoinSpace& s, std::uint64_t index) {
    if constexpr (std::is_invocable_v<F&, const JoinSpace&, std::uint64_t>)
        fn(s, index);
    else
        fn(s);
}

}  // namespace detail

/// The join space at a given position in the enumeration order: indices are
/// base-2^(n-2) numerals, one digit per point pair in the order of
/// pair_rank, the first pair most significant.
inline JoinSpace decode_join_space(int n, std::uint64_t index) {
    std::uint64_t total = join_space_count(n);
    if (index >= total) throw std::out_of_range("decode_join_space: index out of range");
    const int pairs = pair_count(n);
    const int bits = n > 2 ? n - 2 : 0;
    std::vector<PointSet> joins(pairs);
    for (int a = 0, r = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c, ++r) {
            int shift = bits * (pairs - 1 - r);
            std::uint64_t digit = bits ? (index >> shift) & ((std::uint64_t{1} << bits) - 1) : 0;
            joins[r] = detail::join_from_digit(n, a, c, digit);
        }
    return JoinSpace(n, std::move(joins));
}

/// Visits every join space with an index in [lo, hi), in index order.
/// The callback receives (const JoinSpace&, std::uint64_t index) or just the
/// space. Digits advance odometer-style so successive models share work.
template <class F>
void enumerate_join_spaces_range(int n, std::uint64_t lo, std::uint64_t hi, F&& fn,
                                 int max_n = kDefaultEnumBound) {
    detail::check_exhaustive_bound(n, max_n);
    std::uint64_t total = join_space_count(n);
    if (hi > total) hi = total;
    if (lo >= hi) return;

    const int pairs = pair_count(n);
    const std::uint64_t base = n > 2 ? std::uint64_t{1} << (n - 2) : 1;

    std::vector<std::pair<int, int>> ends(pairs);
    for (int a = 0, r = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c, ++r) ends[r] = {a, c};

    std::vector<std::uint64_t> digits(pairs, 0);
    std::vector<PointSet> joins(pairs);
    std::uint64_t rest = lo;
    for (int r = pairs - 1; r >= 0; --r) {
        digits[r] = rest % base;
        rest /= base;
    }
    for (int r = 0; r < pairs; ++r)
        joins[r] = detail::join_from_digit(n, ends[r].first, ends[r].second, digits[r]);

    for (std::uint64_t index = lo;; ++index) {
        detail::invoke_enumeration_callback(fn, JoinSpace(n, joins), index);
        if (index + 1 >= hi) break;
        for (int r = pairs - 1; r >= 0; --r) {
            bool carry = ++digits[r] == base;
            if (carry) digits[r] = 0;
            joins[r] = detail::join_from_digit(n, ends[r].first, ends[r].second, digits[r]);
            if (!carry) break;
        }
    }
}

/// Visits every join space on n labeled points, in index order.
template <class F>
void enumerate_join_spaces(int n, F&& fn, int max_n = kDefaultEnumBound) {
    enumerate_join_spaces_range(n, 0, join_space_count(n), std::forward<F>(fn), max_n);
}

/// Lexicographically least relabeling of a join space, so two spaces are
/// isomorphic exactly when their canonical forms are equal. Scans all n!
/// permutations; refuses n > 8.
inline JoinSpace canonical_form(const JoinSpace& s) {
    const int n = s.point_count();
    if (n > 8) throw ResourceError("canonical_form: permutation scan is limited to 8 points");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PointSet> best = s.pair_joins();
    std::vector<PointSet> cand(pair_count(n));
    do {
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c) {
                PointSet image;
                for (int m : s.join(a, c)) image.add(perm[m]);
                int pa = perm[a], pc = perm[c];
                cand[pair_rank(n, std::min(pa, pc), std::max(pa, pc))] = image;
            }
        if (std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end())) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return JoinSpace(n, std::move(best));
}

/// Draws join spaces uniformly at random: each pair digit is n-2 independent
/// fair bits, taken as the low bits of one mt19937_64 output in pair_rank
/// order. Reproducible for a fixed seed.
template <class F>
void sample_join_spaces(int n, std::uint64_t count, std::uint64_t seed, F&& fn) {
    if (n < 1) throw std::invalid_argument("sample_join_spaces: need at least one point");
    if (n - 2 > 64)
        throw ResourceError("sample_join_spaces: pair digits over " + std::to_string(n) +
                            " points do not fit in 64 bits");
    std::mt19937_64 rng(seed);
    const int bits = n > 2 ? n - 2 : 0;
    const std::uint64_t mask = bits ? (bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1) : 0;
    std::vector<PointSet> joins(pair_count(n));
    for (std::uint64_t i = 0; i < count; ++i) {
        for (int a = 0, r = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c, ++r) {
                std::uint64_t digit = bits ? rng() & mask : 0;
                joins[r] = detail::join_from_digit(n, a, c, digit);
            }
        detail::invoke_enumeration_callback(fn, JoinSpace(n, joins), i);
    }
}

inline std::vector<JoinSpace> sample_join_spaces(int n, std::uint64_t count, std::uint64_t seed) {
    std::vector<JoinSpace> out;
    out.reserve(count);
    sample_join_spaces(n, count, seed, [&](const JoinSpace& s) { out.push_back(s); });
    return out;
}

}  // namespace joingeo
