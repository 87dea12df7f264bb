#pragma once

// Basis labels for the cyclic modules: tuples in (Z/ell)^{n(n+1)/2} addressed
// by root pairs (i, j), 1 <= i <= j <= n, in lexicographic order.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace smallq {

// Flat position of the pair (i, j) among the lex-ordered pairs for rank n.
inline int pair_pos(int i, int j, int n) {
    if (i < 1 || i > j || j > n) throw std::invalid_argument("invalid root pair");
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

inline int pair_count(int n) { return n * (n + 1) / 2; }

struct MultiIndex {
    int n;
    long ell;
    std::vector<int> m;  // component per pair, values in [0, ell)

    MultiIndex(int n_, long ell_) : n(n_), ell(ell_), m(pair_count(n_), 0) {}

    int at(int i, int j) const { return m[pair_pos(i, j, n)]; }

    // m_{st} lifted to [0, ell) when (s, t) is a valid pair, else 0.
    int hat(int s, int t) const {
        if (s < 1 || s > t || t > n) return 0;
        return m[pair_pos(s, t, n)];
    }

    void set(int i, int j, int value) {
        m[pair_pos(i, j, n)] = static_cast<int>(((value % ell) + ell) % ell);
    }

    // Component-wise shift mod ell.
    void bump(int i, int j, int delta) { set(i, j, at(i, j) + delta); }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.n == b.n && a.ell == b.ell && a.m == b.m;
    }
};

// Mixed-radix bijection onto [0, ell^{n(n+1)/2}), m_{11} least significant.
inline std::uint64_t index_rank(const MultiIndex& m) {
    std::uint64_t r = 0, base = 1;
    for (int c : m.m) {
        r += static_cast<std::uint64_t>(c) * base;
        base *= static_cast<std::uint64_t>(m.ell);
    }
    return r;
}

inline MultiIndex multi_index_from_rank(std::uint64_t rank, int n, long ell) {
    MultiIndex m(n, ell);
    for (auto& c : m.m) {
        c = static_cast<int>(rank % static_cast<std::uint64_t>(ell));
        rank /= static_cast<std::uint64_t>(ell);
    }
    return m;
}

inline std::uint64_t module_dimension(int n, long ell) {
    std::uint64_t d = 1;
    for (int t = 0; t < pair_count(n); ++t) d *= static_cast<std::uint64_t>(ell);
    return d;
}

}  // namespace smallq
