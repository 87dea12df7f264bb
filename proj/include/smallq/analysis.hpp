#pragma once

// Structural checks on a constructed module: defining relations of the small
// quantum group, primitive vectors, socle/head via closures, character
// comparison against the infinitesimal Verma module, the integer-grading
// lift obstruction, and the F_p specialization report.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallq/cyclic_module.hpp"
#include "smallq/linalg.hpp"

namespace smallq {

// ---------------------------------------------------------------------------
// Defining relations.

struct RelationCheck {
    std::string name;
    bool holds;
    // position (row, col) of the first violation, when any
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_hold() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

namespace detail {

template <class S>
void push_equal(RelationReport& rep, std::string name, const SparseOperator<S>& a,
                const SparseOperator<S>& b) {
    auto w = SparseOperator<S>::first_difference(a, b);
    rep.checks.push_back({std::move(name), !w.has_value(), w});
}

template <class S, class Domain>
RelationReport check_relations_impl(const ModuleData<S>& M, const Domain& dom) {
    RelationReport rep;
    const int n = M.n;
    const std::uint64_t dim = M.dim();
    const S one = dom.one();
    const auto idx = [](int i) { return std::to_string(i); };

    std::vector<SparseOperator<S>> Kinv;
    for (int i = 0; i < n; ++i) Kinv.push_back(diagonal_inverse(M.K[i]));
    const auto identity = SparseOperator<S>::identity(dim, one);

    // (a) Cartan part: commuting, invertible.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            push_equal(rep, "K" + idx(i + 1) + "K" + idx(j + 1) + "=K" + idx(j + 1) + "K" + idx(i + 1),
                       M.K[i] * M.K[j], M.K[j] * M.K[i]);
    for (int i = 0; i < n; ++i)
        push_equal(rep, "K" + idx(i + 1) + "K" + idx(i + 1) + "^-1=1", M.K[i] * Kinv[i],
                   identity);

    // (b)(c) weight compatibility; over F_p the root powers collapse to 1.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long a = cartan_entry(n, i + 1, j + 1);
            push_equal(rep,
                       "K" + idx(i + 1) + "E" + idx(j + 1) + "K" + idx(i + 1) + "^-1=z^" +
                           std::to_string(a) + "E" + idx(j + 1),
                       M.K[i] * M.E[j] * Kinv[i], M.E[j].scaled(dom.root_power(a)));
            push_equal(rep,
                       "K" + idx(i + 1) + "F" + idx(j + 1) + "K" + idx(i + 1) + "^-1=z^-" +
                           std::to_string(a) + "F" + idx(j + 1),
                       M.K[i] * M.F[j] * Kinv[i], M.F[j].scaled(dom.root_power(-a)));
        }

    // (d) [E_i, F_j] = delta_ij (K_i - K_i^-1)/(z - z^-1). The right side is
    // assembled from the weight exponents through the domain bracket, which
    // over F_p is exactly the specialized cyclotomic diagonal.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                push_equal(rep, "E" + idx(i + 1) + "F" + idx(j + 1) + "=F" + idx(j + 1) + "E" + idx(i + 1),
                           M.E[i] * M.F[j], M.F[j] * M.E[i]);
            } else {
                SparseOperator<S> rhs(dim);
                for (std::uint64_t c = 0; c < dim; ++c) {
                    const auto m = multi_index_from_rank(c, M.n, M.ell);
                    rhs.add_entry(c, c, dom.bracket(weight_of_basis(m, M.lambda)[i]));
                }
                push_equal(rep, "E" + idx(i + 1) + "F" + idx(i + 1) + "-F" + idx(i + 1) + "E" + idx(i + 1) + "=[K" + idx(i + 1) + "]",
                           M.E[i] * M.F[i] - M.F[i] * M.E[i], rhs);
            }
        }

    // (e) Serre relations in the simply laced presentation.
    const S two = dom.bracket(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) == 1) {
                const auto serre = [&](const std::vector<SparseOperator<S>>& X) {
                    return X[i] * X[i] * X[j] - (X[i] * X[j] * X[i]).scaled(two) +
                           X[j] * X[i] * X[i];
                };
                push_equal(rep, "serre:E" + idx(i + 1) + ",E" + idx(j + 1), serre(M.E),
                           SparseOperator<S>(dim));
                push_equal(rep, "serre:F" + idx(i + 1) + ",F" + idx(j + 1), serre(M.F),
                           SparseOperator<S>(dim));
            } else if (i < j) {
                push_equal(rep, "commute:E" + idx(i + 1) + ",E" + idx(j + 1),
                           M.E[i] * M.E[j], M.E[j] * M.E[i]);
                push_equal(rep, "commute:F" + idx(i + 1) + ",F" + idx(j + 1),
                           M.F[i] * M.F[j], M.F[j] * M.F[i]);
            }
        }

    // (f) nilpotency and torus order.
    for (int i = 0; i < n; ++i) {
        push_equal(rep, "E" + idx(i + 1) + "^l=0", M.E[i].pow(M.ell, one),
                   SparseOperator<S>(dim));
        push_equal(rep, "F" + idx(i + 1) + "^l=0", M.F[i].pow(M.ell, one),
                   SparseOperator<S>(dim));
        push_equal(rep, "K" + idx(i + 1) + "^l=1", M.K[i].pow(M.ell, one), identity);
    }
    return rep;
}

}  // namespace detail

inline RelationReport check_relations(const ModuleData<CycloElem>& M) {
    return detail::check_relations_impl(M, CycloDomain(M.ell));
}

inline RelationReport check_relations(const ModuleData<Fp>& M) {
    return detail::check_relations_impl(M, FpDomain(M.ell));
}

// ---------------------------------------------------------------------------
// Primitive vectors.

enum class Side { E, F };

// one() exemplar straight from a K diagonal, which is never empty.
template <class S>
S diagonal_one(const ModuleData<S>& M) {
    return M.K[0].column(0)[0].second.one();
}

template <class S>
SubspaceBasis<S> primitive_vectors(const ModuleData<S>& M, Side side) {
    return common_nullspace(side == Side::E ? M.E : M.F, M.dim(), diagonal_one(M));
}

// Basis ordinals carrying a nonzero coordinate in some basis vector.
template <class S>
std::vector<MultiIndex> support_indices(const SubspaceBasis<S>& basis, int n, long ell) {
    std::vector<std::uint64_t> ords;
    for (const auto& row : basis.rows())
        for (const auto& [i, x] : row.ent) ords.push_back(i);
    std::sort(ords.begin(), ords.end());
    ords.erase(std::unique(ords.begin(), ords.end()), ords.end());
    std::vector<MultiIndex> out;
    for (auto o : ords) out.push_back(multi_index_from_rank(o, n, ell));
    return out;
}

// ---------------------------------------------------------------------------
// Socle and head.

struct SocleReport {
    std::uint64_t socle_dim = 0;
    bool is_simple = false;
    std::uint64_t head_dim = 0;
};

template <class S>
std::vector<SparseOperator<S>> generator_closure_ops(const ModuleData<S>& M) {
    std::vector<SparseOperator<S>> ops;
    for (const auto& e : M.E) ops.push_back(e);
    for (const auto& f : M.F) ops.push_back(f);
    for (const auto& k : M.K) {
        ops.push_back(k);
        ops.push_back(diagonal_inverse(k));
    }
    return ops;
}

// Socle dimension via the closure of u_0 (which generates the simple socle);
// the head is reached as the socle of the transpose-dual, seeded by that
// module's unique E-primitive.
template <class S>
SocleReport socle_analysis(const ModuleData<S>& M) {
    SocleReport rep;
    const S one = diagonal_one(M);
    const auto socle = submodule_closure(
        {SparseVector<S>::unit(M.dim(), 0, one)}, generator_closure_ops(M), M.dim());
    rep.socle_dim = socle.size();
    rep.is_simple = (rep.socle_dim == M.dim());

    const auto dual = dual_module(M);
    const auto dual_prim = primitive_vectors(dual, Side::E);
    std::vector<SparseVector<S>> seeds(dual_prim.rows().begin(), dual_prim.rows().end());
    rep.head_dim = submodule_closure(seeds, generator_closure_ops(dual), M.dim()).size();
    return rep;
}

// ---------------------------------------------------------------------------
// Characters.

// Multiset of u^0-weights, as residue vectors in (Z/ell)^n.
using CharacterMultiset = std::map<std::vector<int>, std::uint64_t>;

// Weights of the infinitesimal Verma module with highest weight lambda:
// lambda minus all subsums c_{ij} * (alpha_i + ... + alpha_j), c in [0, ell).
inline CharacterMultiset verma_character(const Weight& lambda, long ell) {
    if (ell < 3 || ell % 2 == 0)
        throw std::invalid_argument("verma_character: ell must be odd and >= 3");
    const int n = lambda.rank();
    const auto pairs = root_pairs(n);
    std::vector<Weight> coords;
    for (const auto& r : pairs) coords.push_back(root_weight_coords(r, n));

    CharacterMultiset out;
    const std::uint64_t total = module_dimension(n, ell);
    for (std::uint64_t t = 0; t < total; ++t) {
        // digits of t in base ell = the exponent tuple c
        std::uint64_t rest = t;
        Weight w = lambda;
        for (size_t k = 0; k < pairs.size(); ++k) {
            const long c = static_cast<long>(rest % ell);
            rest /= ell;
            for (int s = 0; s < n; ++s) w.c[s] -= c * coords[k].c[s];
        }
        std::vector<int> residues(n);
        for (int s = 0; s < n; ++s)
            residues[s] = static_cast<int>(((w.c[s] % ell) + ell) % ell);
        ++out[residues];
    }
    return out;
}

// Weights of the constructed module, read off the K exponents.
inline CharacterMultiset module_character(int n, long ell, const Weight& lambda) {
    CharacterMultiset out;
    const std::uint64_t total = module_dimension(n, ell);
    for (std::uint64_t t = 0; t < total; ++t)
        ++out[weight_of_basis(multi_index_from_rank(t, n, ell), lambda)];
    return out;
}

template <class S>
bool character_compare(const ModuleData<S>& M) {
    return module_character(M.n, M.ell, M.lambda) == verma_character(M.lambda, M.ell);
}

// ---------------------------------------------------------------------------
// Lift obstruction: can the mod-ell grading be lifted to the full weight
// lattice? Every nonzero entry of E_i (resp. F_i) is an edge labeled by
// +alpha_i (resp. -alpha_i) in integer weight coordinates; a consistent
// potential on the action graph is the lift, a cycle with nonzero integer
// weight sum is the obstruction.

struct LiftEdge {
    std::uint64_t from = 0, to = 0;
    Weight label;  // required potential difference w(to) - w(from), in Lambda
};

struct LiftCertificate {
    bool liftable = false;
    std::vector<Weight> potential;  // per basis ordinal, when liftable
    std::vector<LiftEdge> cycle;    // closed walk with nonzero total, otherwise
    Weight cycle_total;
};

template <class S>
LiftCertificate lift_obstruction(const ModuleData<S>& M) {
    const int n = M.n;
    const std::uint64_t dim = M.dim();

    std::vector<LiftEdge> edges;
    for (int i = 0; i < n; ++i) {
        const Weight alpha = root_weight_coords({i + 1, i + 1}, n);
        for (std::uint64_t col = 0; col < dim; ++col) {
            for (const auto& [row, x] : M.E[i].column(col))
                edges.push_back({col, row, alpha});
            for (const auto& [row, x] : M.F[i].column(col))
                edges.push_back({col, row, -alpha});
        }
    }

    std::vector<std::vector<std::pair<size_t, bool>>> adj(dim);  // (edge, forward)
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].from].emplace_back(e, true);
        adj[edges[e].to].emplace_back(e, false);
    }

    std::vector<char> seen(dim, 0);
    std::vector<Weight> pot(dim, zero_weight(n));
    std::vector<std::optional<std::pair<size_t, bool>>> parent_edge(dim);
    std::vector<std::uint64_t> parent(dim, 0);

    for (std::uint64_t root = 0; root < dim; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::vector<std::uint64_t> stack{root};
        while (!stack.empty()) {
            const std::uint64_t u = stack.back();
            stack.pop_back();
            for (const auto& [e, forward] : adj[u]) {
                const std::uint64_t v = forward ? edges[e].to : edges[e].from;
                if (seen[v]) continue;
                seen[v] = 1;
                pot[v] = forward ? pot[u] + edges[e].label : pot[u] - edges[e].label;
                parent[v] = u;
                parent_edge[v] = std::make_pair(e, forward);
                stack.push_back(v);
            }
        }
    }

    for (const auto& edge : edges) {
        if (pot[edge.to] - pot[edge.from] == edge.label) continue;
        // Violation: close the walk through the spanning forest.
        LiftCertificate cert;
        cert.liftable = false;
        auto path_up = [&](std::uint64_t v) {
            // steps from v to its root, oriented in walk direction
            std::vector<LiftEdge> steps;
            while (parent_edge[v].has_value()) {
                const auto [e, forward] = *parent_edge[v];
                const std::uint64_t p = parent[v];
                steps.push_back({v, p, forward ? -edges[e].label : edges[e].label});
                v = p;
            }
            return steps;
        };
        std::vector<LiftEdge> from_up = path_up(edge.from);  // from -> root
        std::vector<LiftEdge> to_up = path_up(edge.to);      // to -> root
        // Trim the shared tail above the meeting point.
        while (!from_up.empty() && !to_up.empty() &&
               from_up.back().from == to_up.back().from &&
               from_up.back().to == to_up.back().to)
            from_up.pop_back(), to_up.pop_back();
        // Walk: meeting point -> from (reverse of from_up), the bad edge,
        // then to -> meeting point.
        for (auto it = from_up.rbegin(); it != from_up.rend(); ++it)
            cert.cycle.push_back({it->to, it->from, -it->label});
        cert.cycle.push_back(edge);
        for (const auto& s : to_up) cert.cycle.push_back(s);
        Weight total = zero_weight(n);
        for (const auto& s : cert.cycle) total = total + s.label;
        cert.cycle_total = total;
        return cert;
    }

    LiftCertificate cert;
    cert.liftable = true;
    // Shift every component so u_0 carries exactly lambda.
    const Weight shift = M.lambda - pot[0];
    for (auto& w : pot) w = w + shift;
    cert.potential = std::move(pot);
    return cert;
}

// ---------------------------------------------------------------------------
// F_p specialization report.

struct FpReport {
    int n = 0;
    long p = 0;
    Weight lambda;
    bool reduction_matches = false;  // reduce_mod_p == direct residue build
    std::uint64_t e_dim = 0, f_dim = 0;
    std::vector<MultiIndex> e_support, f_support;
    MultiIndex predicted_f{1, 3};
    bool e_at_zero = false, f_at_predicted = false;
    SocleReport socle;
    bool liftable = false;
    bool steinberg = false;

    bool pass() const {
        return reduction_matches && e_dim == 1 && f_dim == 1 && e_at_zero &&
               f_at_predicted && (liftable == steinberg) &&
               (socle.head_dim == socle.socle_dim) && (socle.is_simple == steinberg);
    }
};

inline FpReport fp_report(const Weight& lambda, long p) {
    if (!detail::is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("fp_report: p must be an odd prime");
    FpReport rep;
    rep.n = lambda.rank();
    rep.p = p;
    rep.lambda = lambda;

    const auto direct = build_module_fp(lambda, p);
    const auto reduced = reduce_mod_p(build_module(lambda, p));
    rep.reduction_matches = true;
    for (int i = 0; i < rep.n; ++i)
        rep.reduction_matches = rep.reduction_matches && direct.E[i] == reduced.E[i] &&
                                direct.F[i] == reduced.F[i] && direct.K[i] == reduced.K[i];

    const auto eprim = primitive_vectors(direct, Side::E);
    const auto fprim = primitive_vectors(direct, Side::F);
    rep.e_dim = eprim.size();
    rep.f_dim = fprim.size();
    rep.e_support = support_indices(eprim, rep.n, p);
    rep.f_support = support_indices(fprim, rep.n, p);
    rep.predicted_f = f_primitive_index(lambda, p);
    rep.e_at_zero =
        rep.e_support.size() == 1 && index_rank(rep.e_support[0]) == 0;
    rep.f_at_predicted =
        rep.f_support.size() == 1 && rep.f_support[0] == rep.predicted_f;

    rep.socle = socle_analysis(direct);
    rep.liftable = lift_obstruction(direct).liftable;
    rep.steinberg = steinberg_test(lambda, p);
    return rep;
}

}  // namespace smallq
