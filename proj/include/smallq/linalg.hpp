#pragma once

// Exact sparse linear algebra over an abstract field: reduced row echelon
// bases, common nullspaces, operator closures and rank. Pivoting is by first
// nonzero ordinal, no magnitude heuristics: arithmetic is exact, so
// determinism is the only concern.

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "smallq/sparse.hpp"

namespace smallq {

// A subspace held in reduced row echelon form. Pivots are strictly
// increasing, pivot coefficients are 1 and pivot columns vanish in every
// other row, which makes the basis of a given span unique regardless of
// insertion order.
template <class S>
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::uint64_t dim) : dim_(dim) {}

    std::uint64_t space_dim() const { return dim_; }
    size_t size() const { return rows_.size(); }
    const std::vector<SparseVector<S>>& rows() const { return rows_; }
    const std::vector<std::uint64_t>& pivots() const { return pivots_; }

    // Reduce v against the basis (eliminating every pivot position).
    SparseVector<S> reduce(SparseVector<S> v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const S* c = v.get(pivots_[r]);
            if (c != nullptr) v.axpy_sub(*c, rows_[r]);
        }
        return v;
    }

    // Insert v if independent of the current span; returns whether it was
    // added. The stored reduced copy, if any, lands in *added.
    bool insert(SparseVector<S> v, const SparseVector<S>** added = nullptr) {
        if (v.dim != dim_) throw std::invalid_argument("insert: dimension mismatch");
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        const std::uint64_t p = v.ent.front().first;
        v.scale(v.ent.front().second.inv());
        // Back-substitute into earlier rows so the pivot column stays clean.
        for (auto& row : rows_) {
            const S* c = row.get(p);
            if (c != nullptr) row.axpy_sub(*c, v);
        }
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        pivots_.insert(pivots_.begin() + at, p);
        rows_.insert(rows_.begin() + at, std::move(v));
        if (added != nullptr) *added = &rows_[at];
        return true;
    }

    bool contains(const SparseVector<S>& v) const { return reduce(v).is_zero(); }

private:
    std::uint64_t dim_ = 0;
    std::vector<SparseVector<S>> rows_;     // sorted by pivot
    std::vector<std::uint64_t> pivots_;
};

namespace detail {

// Row-echelon form of the rows of all operators stacked vertically.
template <class S>
SubspaceBasis<S> row_space(const std::vector<SparseOperator<S>>& ops) {
    if (ops.empty()) throw std::invalid_argument("row_space: no operators");
    const std::uint64_t dim = ops[0].dim();
    SubspaceBasis<S> rows(dim);
    for (const auto& op : ops) {
        if (op.dim() != dim) throw std::invalid_argument("row_space: dimension mismatch");
        const auto rowmajor = op.transposed();  // rows of op = columns of transpose
        for (std::uint64_t r = 0; r < dim; ++r) {
            const auto& entries = rowmajor.column(r);
            if (entries.empty()) continue;
            SparseVector<S> v(dim);
            v.ent.assign(entries.begin(), entries.end());
            rows.insert(std::move(v));
        }
    }
    return rows;
}

}  // namespace detail

// Basis of {v : A v = 0 for all A in ops}, in canonical echelon form. An
// empty operator list yields the full space, which needs an explicit one.
template <class S>
SubspaceBasis<S> common_nullspace(const std::vector<SparseOperator<S>>& ops,
                                  std::uint64_t dim, const S& one) {
    SubspaceBasis<S> null(dim);
    if (ops.empty()) {
        for (std::uint64_t i = 0; i < dim; ++i)
            null.insert(SparseVector<S>::unit(dim, i, one));
        return null;
    }
    const SubspaceBasis<S> rows = detail::row_space(ops);
    // One nullspace vector per free column f: 1 at f, minus the f-entries of
    // the echelon rows at their pivot positions.
    std::vector<bool> is_pivot(dim, false);
    for (std::uint64_t p : rows.pivots()) is_pivot[p] = true;
    for (std::uint64_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        SparseVector<S> v(dim);
        for (size_t r = 0; r < rows.size(); ++r) {
            const S* c = rows.rows()[r].get(f);
            if (c != nullptr) v.ent.emplace_back(rows.pivots()[r], -*c);
        }
        v.ent.emplace_back(f, one);
        std::sort(v.ent.begin(), v.ent.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        null.insert(std::move(v));
    }
    return null;
}

template <class S>
SubspaceBasis<S> common_nullspace(const std::vector<SparseOperator<S>>& ops,
                                  const S& one) {
    if (ops.empty())
        throw std::invalid_argument("common_nullspace: dimension needed for empty list");
    return common_nullspace(ops, ops[0].dim(), one);
}

template <class S>
size_t rank(const SparseOperator<S>& op) {
    return detail::row_space(std::vector<SparseOperator<S>>{op}).size();
}

// Smallest subspace containing the seeds and stable under every operator.
// Breadth-first over (vector, op) pairs; newly independent images are queued
// as the reduced copies recorded at insertion time.
template <class S>
SubspaceBasis<S> submodule_closure(const std::vector<SparseVector<S>>& seeds,
                                   const std::vector<SparseOperator<S>>& ops,
                                   std::uint64_t dim) {
    SubspaceBasis<S> basis(dim);
    std::deque<SparseVector<S>> queue;
    for (const auto& s : seeds) {
        const SparseVector<S>* added = nullptr;
        if (basis.insert(s, &added)) queue.push_back(*added);
    }
    while (!queue.empty()) {
        SparseVector<S> w = std::move(queue.front());
        queue.pop_front();
        for (const auto& op : ops) {
            const SparseVector<S>* added = nullptr;
            if (basis.insert(op.apply(w), &added)) queue.push_back(*added);
        }
    }
    return basis;
}

}  // namespace smallq
