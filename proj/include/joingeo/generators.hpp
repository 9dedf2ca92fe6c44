#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "joingeo/check_report.hpp"
#include "joingeo/join_space.hpp"
#include "joingeo/line_space.hpp"
#include "joingeo/point_set.hpp"

namespace joingeo {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Arithmetic in the prime field F_p. Construction rejects composite moduli.
struct PrimeField {
    int p;

    explicit PrimeField(int modulus) : p(modulus) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
    }

    int add(int a, int b) const { return (a + b) % p; }
    int sub(int a, int b) const { return ((a - b) % p + p) % p; }
    int mul(int a, int b) const { return (a * b) % p; }

    int inv(int a) const {
        if (a % p == 0) throw std::invalid_argument("PrimeField: zero has no inverse");
        int r = 1, base = ((a % p) + p) % p, e = p - 2;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

namespace detail {

inline int checked_power(int base, int exp, const char* what) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > kMaxPoints)
            throw ResourceError(std::string(what) + ": " + std::to_string(v) + " points exceed the limit of " +
                                std::to_string(kMaxPoints));
    }
    return static_cast<int>(v);
}

inline std::vector<int> affine_coords(int index, int p, int dim) {
    std::vector<int> v(dim);
    for (int i = dim - 1; i >= 0; --i) {
        v[i] = index % p;
        index /= p;
    }
    return v;
}

inline int affine_index(const std::vector<int>& v, int p) {
    int idx = 0;
    for (int x : v) idx = idx * p + x;
    return idx;
}

}  // namespace detail

/// The smallest join space on n points: every pair join is just the pair.
inline JoinSpace minimal_join_space(int n) {
    std::vector<PointSet> joins(pair_count(n));
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) joins[pair_rank(n, a, c)] = PointSet::of({a, c});
    return JoinSpace(n, std::move(joins));
}

/// Affine join space over F_p^dim: points are the vectors in lexicographic
/// order, the join of two distinct points is the full affine line
/// { x + t(z - x) : t in F_p } through them.
inline JoinSpace affine_join_space(const PrimeField& f, int dim) {
    if (dim < 1) throw std::invalid_argument("affine_join_space: dimension must be positive");
    const int n = detail::checked_power(f.p, dim, "affine_join_space");
    std::vector<PointSet> joins(pair_count(n));
    for (int a = 0; a < n; ++a) {
        std::vector<int> x = detail::affine_coords(a, f.p, dim);
        for (int c = a + 1; c < n; ++c) {
            std::vector<int> z = detail::affine_coords(c, f.p, dim);
            PointSet line;
            std::vector<int> y(dim);
            for (int t = 0; t < f.p; ++t) {
                for (int i = 0; i < dim; ++i) y[i] = f.add(x[i], f.mul(t, f.sub(z[i], x[i])));
                line.add(detail::affine_index(y, f.p));
            }
            joins[pair_rank(n, a, c)] = line;
        }
    }
    return JoinSpace(n, std::move(joins));
}

inline std::vector<std::string> affine_point_labels(const PrimeField& f, int dim) {
    const int n = detail::checked_power(f.p, dim, "affine_point_labels");
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        std::vector<int> v = detail::affine_coords(a, f.p, dim);
        std::string s = "(";
        for (int i = 0; i < dim; ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        labels[a] = s + ")";
    }
    return labels;
}

/// The affine lines of F_p^dim as a line structure (the distinct pair joins
/// of the affine join space).
inline SetLineStructure affine_line_structure(const PrimeField& f, int dim) {
    return associated_line_structure(affine_join_space(f, dim));
}

/// Projective geometry PG(dim, p) built from the vector space F_p^{dim+1}:
/// points are the one-dimensional subspaces (represented by the vector with
/// first nonzero coordinate 1, in lexicographic order), lines the
/// two-dimensional subspaces, incidence is containment. `space` holds the
/// joins computed directly from span arithmetic; `lines` is the incidence
/// structure with one row per two-dimensional subspace.
struct ProjectiveGeometry {
    AbstractLineSpace lines;
    JoinSpace space;
    std::vector<std::string> labels;
};

inline ProjectiveGeometry projective_space(const PrimeField& f, int dim) {
    if (dim < 1) throw std::invalid_argument("projective_space: dimension must be positive");
    const int p = f.p;
    const int d = dim + 1;

    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    count = (count - 1) / (p - 1);
    if (count > kMaxPoints)
        throw ResourceError("projective_space: " + std::to_string(count) + " points exceed the limit of " +
                            std::to_string(kMaxPoints));
    const int n = static_cast<int>(count);

    // Canonical representatives in ascending lexicographic order: more
    // leading zeros first, then the free tail as a base-p odometer.
    std::vector<std::vector<int>> pts;
    pts.reserve(n);
    for (int lead = d - 1; lead >= 0; --lead) {
        std::vector<int> v(d, 0);
        v[lead] = 1;
        int tail = d - lead - 1;
        long long combos = 1;
        for (int i = 0; i < tail; ++i) combos *= p;
        for (long long t = 0; t < combos; ++t) {
            long long rest = t;
            for (int i = d - 1; i > lead; --i) {
                v[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            pts.push_back(v);
        }
    }

    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < n; ++i) index_of[pts[i]] = i;

    auto normalize = [&](std::vector<int> v) {
        int lead = -1;
        for (int i = 0; i < d; ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        int s = f.inv(v[lead]);
        for (int i = 0; i < d; ++i) v[i] = f.mul(v[i], s);
        return v;
    };

    std::vector<PointSet> joins(pair_count(n));
    std::set<PointSet> line_set;
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            PointSet line = PointSet::of({a, c});
            std::vector<int> w(d);
            for (int mu = 0; mu < p; ++mu) {
                for (int i = 0; i < d; ++i) w[i] = f.add(pts[c][i], f.mul(mu, pts[a][i]));
                line.add(index_of.at(normalize(w)));
            }
            joins[pair_rank(n, a, c)] = line;
            line_set.insert(line);
        }

    std::vector<PointSet> rows(line_set.begin(), line_set.end());
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        std::string s = "[";
        for (int j = 0; j < d; ++j) {
            if (j) s += ":";
            s += std::to_string(pts[i][j]);
        }
        labels[i] = s + "]";
    }

    return ProjectiveGeometry{AbstractLineSpace(n, std::move(rows)), JoinSpace(n, std::move(joins)),
                              std::move(labels)};
}

struct GridSpec {
    int width = 1;
    int height = 1;
};

/// Lattice segment space on a width x height grid: the join of two points is
/// the set of lattice points on the closed segment between them (collinear
/// by exact cross product, inside the bounding box). Point (x, y) has index
/// y * width + x.
inline JoinSpace grid_segment_space(const GridSpec& g) {
    if (g.width < 1 || g.height < 1) throw std::invalid_argument("grid_segment_space: sides must be positive");
    long long size = static_cast<long long>(g.width) * g.height;
    if (size > kMaxPoints)
        throw ResourceError("grid_segment_space: " + std::to_string(size) + " points exceed the limit of " +
                            std::to_string(kMaxPoints));
    const int n = static_cast<int>(size);
    auto xc = [&](int i) { return i % g.width; };
    auto yc = [&](int i) { return i / g.width; };

    std::vector<PointSet> joins(pair_count(n));
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            PointSet seg;
            long long dx = xc(c) - xc(a), dy = yc(c) - yc(a);
            for (int b = 0; b < n; ++b) {
                long long bx = xc(b) - xc(a), by = yc(b) - yc(a);
                if (dx * by - dy * bx != 0) continue;
                if (xc(b) < std::min(xc(a), xc(c)) || xc(b) > std::max(xc(a), xc(c))) continue;
                if (yc(b) < std::min(yc(a), yc(c)) || yc(b) > std::max(yc(a), yc(c))) continue;
                seg.add(b);
            }
            joins[pair_rank(n, a, c)] = seg;
        }
    return JoinSpace(n, std::move(joins));
}

inline std::vector<std::string> grid_point_labels(const GridSpec& g) {
    std::vector<std::string> labels;
    for (int y = 0; y < g.height; ++y)
        for (int x = 0; x < g.width; ++x)
            labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    return labels;
}

}  // namespace joingeo
