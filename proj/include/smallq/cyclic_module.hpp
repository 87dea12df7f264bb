#pragma once

// Construction of the maximal cyclic modules V(lambda): the basis u_m indexed
// by (Z/ell)^{n(n+1)/2} and the sparse generator actions
//
//   E_i u_m = sum_{k=i}^{n} [ m^_{ik} + m^_{i,k-1} - m^_{i-1,k-1} - m^_{i+1,k} ]
//             u_{m + eps(i,k) + ... + eps(i,n)}
//   F_i u_m = sum_{k=1}^{i} [ -lambda_i + m^_{i+1-k,n-k} - m^_{i+1-k,n+1-k}
//                             + m^_{i-k,n+1-k} - m^_{i-k,n-k} ]
//             u_{m - eps(i+1-k,n+1-k) - ... - eps(i,n)}
//   K_i u_m = zeta^{ lambda_i + 2 m_{in} - m^_{i-1,n} - m^_{i+1,n} } u_m
//
// where m^_{st} is m_{st} lifted to [0, ell) when 1 <= s <= t <= n and 0
// otherwise, and index shifts by eps are taken mod ell componentwise. The
// brackets are evaluated on the [0, ell) lifts; [.] is ell-periodic, so the
// lift choice does not matter.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smallq/cyclotomic.hpp"
#include "smallq/multi_index.hpp"
#include "smallq/root_data.hpp"
#include "smallq/sparse.hpp"

namespace smallq {

// Coefficient domains: quantum brackets and root-of-unity powers over K, and
// their v -> 1 integer shadows over F_p.

struct CycloDomain {
    using Scalar = CycloElem;
    const CycloField* field;

    explicit CycloDomain(const CycloField& F) : field(&F) {}
    explicit CycloDomain(long ell) : field(&CycloField::get(ell)) {}

    long ell() const { return field->ell(); }
    Scalar bracket(long r) const { return qint(r, *field); }
    Scalar root_power(long k) const { return zeta_pow(*field, k); }
    Scalar one() const { return CycloElem(*field, 1); }
    static constexpr const char* name() { return "cyclotomic"; }
};

struct FpDomain {
    using Scalar = Fp;
    long p;

    explicit FpDomain(long p_) : p(p_) {
        if (!detail::is_prime(p_) || p_ % 2 == 0)
            throw std::invalid_argument("FpDomain: p must be an odd prime");
    }

    long ell() const { return p; }
    Scalar bracket(long r) const { return Fp(r, p); }
    Scalar root_power(long) const { return Fp(1, p); }
    Scalar one() const { return Fp(1, p); }
    static constexpr const char* name() { return "fp"; }
};

template <class S>
struct ModuleData {
    int n = 0;
    long ell = 0;
    Weight lambda;
    std::vector<SparseOperator<S>> E, F, K;  // index i-1 holds generator i

    std::uint64_t dim() const { return E.empty() ? 0 : E[0].dim(); }
};

// The K_i exponent of u_m: component i of the u^0-weight of u_m in Lambda/ell.
inline std::vector<int> weight_of_basis(const MultiIndex& m, const Weight& lambda) {
    const int n = m.n;
    const long ell = m.ell;
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) {
        long e = lambda.at1(i) + 2 * m.hat(i, n) - m.hat(i - 1, n) - m.hat(i + 1, n);
        w[i - 1] = static_cast<int>(((e % ell) + ell) % ell);
    }
    return w;
}

template <class Domain>
ModuleData<typename Domain::Scalar> build_module(const Weight& lambda,
                                                 const Domain& dom) {
    using S = typename Domain::Scalar;
    const int n = lambda.rank();
    const long ell = dom.ell();
    if (n < 1) throw std::invalid_argument("build_module: rank must be >= 1");
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("build_module: ell must be odd and >= 3");

    const std::uint64_t dim = module_dimension(n, ell);
    ModuleData<S> M;
    M.n = n;
    M.ell = ell;
    M.lambda = lambda;
    M.E.assign(n, SparseOperator<S>(dim));
    M.F.assign(n, SparseOperator<S>(dim));
    M.K.assign(n, SparseOperator<S>(dim));

    for (std::uint64_t col = 0; col < dim; ++col) {
        const MultiIndex m = multi_index_from_rank(col, n, ell);
        for (int i = 1; i <= n; ++i) {
            // E_i: one summand per k in [i, n].
            for (int k = i; k <= n; ++k) {
                long arg = m.hat(i, k) + m.hat(i, k - 1) - m.hat(i - 1, k - 1) -
                           m.hat(i + 1, k);
                S coeff = dom.bracket(arg);
                if (coeff.is_zero()) continue;
                MultiIndex target = m;
                for (int t = k; t <= n; ++t) target.bump(i, t, +1);
                M.E[i - 1].add_entry(index_rank(target), col, std::move(coeff));
            }
            // F_i: one summand per k in [1, i].
            for (int k = 1; k <= i; ++k) {
                long arg = -lambda.at1(i) + m.hat(i + 1 - k, n - k) -
                           m.hat(i + 1 - k, n + 1 - k) + m.hat(i - k, n + 1 - k) -
                           m.hat(i - k, n - k);
                S coeff = dom.bracket(arg);
                if (coeff.is_zero()) continue;
                MultiIndex target = m;
                for (int t = 0; t < k; ++t) target.bump(i + 1 - k + t, n + 1 - k + t, -1);
                M.F[i - 1].add_entry(index_rank(target), col, std::move(coeff));
            }
        }
        // K_i: diagonal root-of-unity power.
        const std::vector<int> w = weight_of_basis(m, lambda);
        for (int i = 1; i <= n; ++i)
            M.K[i - 1].add_entry(col, col, dom.root_power(w[i - 1]));
    }
    return M;
}

inline ModuleData<CycloElem> build_module(const Weight& lambda, long ell) {
    return build_module(lambda, CycloDomain(ell));
}

inline ModuleData<Fp> build_module_fp(const Weight& lambda, long p) {
    return build_module(lambda, FpDomain(p));
}

// K_i^{-1}: invert each diagonal entry.
template <class S>
SparseOperator<S> diagonal_inverse(const SparseOperator<S>& k) {
    SparseOperator<S> out(k.dim());
    for (std::uint64_t j = 0; j < k.dim(); ++j)
        for (const auto& [i, x] : k.column(j)) {
            if (i != j) throw std::invalid_argument("diagonal_inverse: not diagonal");
            out.add_entry(j, j, x.inv());
        }
    return out;
}

// Module on the dual basis twisted by the antiautomorphism swapping E_i and
// F_i: generator matrices transpose, with E and F exchanged.
template <class S>
ModuleData<S> dual_module(const ModuleData<S>& M) {
    ModuleData<S> D;
    D.n = M.n;
    D.ell = M.ell;
    D.lambda = M.lambda;
    for (int i = 0; i < M.n; ++i) {
        D.E.push_back(M.F[i].transposed());
        D.F.push_back(M.E[i].transposed());
        D.K.push_back(M.K[i].transposed());
    }
    return D;
}

// V_B(lambda) tensored down to F_p: every coefficient through v -> 1 mod p.
// K_i collapse to the identity, brackets to integer residues.
inline ModuleData<Fp> reduce_mod_p(const ModuleData<CycloElem>& M) {
    const long p = M.ell;
    if (!detail::is_prime(p)) throw std::invalid_argument("reduce_mod_p: ell must be prime");
    ModuleData<Fp> out;
    out.n = M.n;
    out.ell = p;
    out.lambda = M.lambda;
    auto reduce_op = [p](const SparseOperator<CycloElem>& a) {
        SparseOperator<Fp> r(a.dim());
        for (std::uint64_t j = 0; j < a.dim(); ++j)
            for (const auto& [i, x] : a.column(j)) r.add_entry(i, j, specialize_v1(x, p));
        return r;
    };
    for (int i = 0; i < M.n; ++i) {
        out.E.push_back(reduce_op(M.E[i]));
        out.F.push_back(reduce_op(M.F[i]));
        out.K.push_back(reduce_op(M.K[i]));
    }
    return out;
}

}  // namespace smallq
