#pragma once

// Type A_n combinatorics: Cartan matrix, positive roots as pairs (i, j)
// naming alpha_i + ... + alpha_j, the longest-element action on weights, and
// the congruence locating the unique lower-triangular primitive vector.

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "smallq/multi_index.hpp"

namespace smallq {

// Weight in simple-coroot coordinates: c[i-1] = <lambda, alpha_i^vee>.
struct Weight {
    std::vector<long> c;

    Weight() = default;
    explicit Weight(std::vector<long> coords) : c(std::move(coords)) {}

    int rank() const { return static_cast<int>(c.size()); }
    long at1(int i) const { return c[i - 1]; }  // 1-based, matching lambda_i

    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    bool is_zero() const {
        for (long x : c)
            if (x != 0) return false;
        return true;
    }
};

inline Weight zero_weight(int n) { return Weight(std::vector<long>(n, 0)); }

// rho: all coordinates 1 in type A.
inline Weight rho_weight(int n) { return Weight(std::vector<long>(n, 1)); }

struct RootIndex {
    int i, j;  // 1 <= i <= j <= n
};

inline std::vector<RootIndex> root_pairs(int n) {
    std::vector<RootIndex> out;
    out.reserve(pair_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.push_back({i, j});
    return out;
}

// Tridiagonal type-A Cartan matrix entry A_{ij} (all d_i = 1).
inline long cartan_entry(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("cartan_entry: index out of range");
    if (i == j) return 2;
    if (std::abs(i - j) == 1) return -1;
    return 0;
}

// Coordinates of alpha_i + ... + alpha_j: c_s = sum_{k=i}^{j} A_{ks}.
inline Weight root_weight_coords(RootIndex r, int n) {
    if (r.i < 1 || r.i > r.j || r.j > n)
        throw std::invalid_argument("root_weight_coords: invalid pair");
    Weight w = zero_weight(n);
    for (int s = 1; s <= n; ++s)
        for (int k = r.i; k <= r.j; ++k) w.c[s - 1] += cartan_entry(n, k, s);
    return w;
}

// w0 acts on coordinates by (w0 lambda)_i = -lambda_{n+1-i}.
inline Weight w0_weight(const Weight& lambda) {
    const int n = lambda.rank();
    Weight w = zero_weight(n);
    for (int i = 1; i <= n; ++i) w.c[i - 1] = -lambda.at1(n + 1 - i);
    return w;
}

// The congruences m_{ij} = -sum_{s=1}^{i} sum_{t=i}^{j} lambda_{n+s-t} mod ell
// pin down the unique multi-index supporting a vector killed by every F_i.
inline MultiIndex f_primitive_index(const Weight& lambda, long ell) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("f_primitive_index: ell must be odd and >= 3");
    const int n = lambda.rank();
    MultiIndex m(n, ell);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            long sum = 0;
            for (int s = 1; s <= i; ++s)
                for (int t = i; t <= j; ++t) sum += lambda.at1(n + s - t);
            m.set(i, j, static_cast<int>(((-sum) % ell + ell) % ell));
        }
    }
    return m;
}

// lambda = (ell-1) rho mod ell Lambda, the unique simple class.
inline bool steinberg_test(const Weight& lambda, long ell) {
    for (long x : lambda.c)
        if (((x % ell) + ell) % ell != ell - 1) return false;
    return true;
}

}  // namespace smallq
