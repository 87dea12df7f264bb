#pragma once

// Sparse vectors and column-major sparse square matrices over an exact
// scalar type S. S needs +, -, *, unary -, ==, is_zero(), zero(), one(),
// inv(). No zero entries are ever stored.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace smallq {

template <class S>
struct SparseVector {
    std::uint64_t dim = 0;
    std::vector<std::pair<std::uint64_t, S>> ent;  // sorted by index

    SparseVector() = default;
    explicit SparseVector(std::uint64_t d) : dim(d) {}

    static SparseVector unit(std::uint64_t d, std::uint64_t pos, const S& one) {
        SparseVector v(d);
        v.ent.emplace_back(pos, one);
        return v;
    }

    bool is_zero() const { return ent.empty(); }

    const S* get(std::uint64_t i) const {
        auto it = std::lower_bound(ent.begin(), ent.end(), i,
                                   [](const auto& e, std::uint64_t k) { return e.first < k; });
        if (it != ent.end() && it->first == i) return &it->second;
        return nullptr;
    }

    // this -= c * other (merge by index).
    void axpy_sub(const S& c, const SparseVector& other) {
        std::vector<std::pair<std::uint64_t, S>> out;
        out.reserve(ent.size() + other.ent.size());
        size_t a = 0, b = 0;
        while (a < ent.size() || b < other.ent.size()) {
            if (b == other.ent.size() ||
                (a < ent.size() && ent[a].first < other.ent[b].first)) {
                out.push_back(std::move(ent[a++]));
            } else if (a == ent.size() || other.ent[b].first < ent[a].first) {
                S val = -(c * other.ent[b].second);
                if (!val.is_zero()) out.emplace_back(other.ent[b].first, std::move(val));
                ++b;
            } else {
                S val = ent[a].second - c * other.ent[b].second;
                if (!val.is_zero()) out.emplace_back(ent[a].first, std::move(val));
                ++a;
                ++b;
            }
        }
        ent = std::move(out);
    }

    void scale(const S& c) {
        std::vector<std::pair<std::uint64_t, S>> out;
        out.reserve(ent.size());
        for (auto& [i, x] : ent) {
            S val = c * x;
            if (!val.is_zero()) out.emplace_back(i, std::move(val));
        }
        ent = std::move(out);
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim == b.dim && a.ent == b.ent;
    }
};

template <class S>
class SparseOperator {
public:
    explicit SparseOperator(std::uint64_t dim) : dim_(dim), col_(dim) {}

    static SparseOperator identity(std::uint64_t dim, const S& one) {
        SparseOperator a(dim);
        for (std::uint64_t j = 0; j < dim; ++j) a.col_[j].emplace_back(j, one);
        return a;
    }

    std::uint64_t dim() const { return dim_; }

    // Entries of column j, sorted by row.
    const std::vector<std::pair<std::uint64_t, S>>& column(std::uint64_t j) const {
        return col_[j];
    }

    void add_entry(std::uint64_t row, std::uint64_t col, S value) {
        if (value.is_zero()) return;
        auto& c = col_[col];
        auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::uint64_t k) { return e.first < k; });
        if (it != c.end() && it->first == row) {
            it->second += value;
            if (it->second.is_zero()) c.erase(it);
        } else {
            c.emplace(it, row, std::move(value));
        }
    }

    bool is_zero() const {
        for (const auto& c : col_)
            if (!c.empty()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::uint64_t j = 0; j < dim_; ++j)
            for (const auto& [i, x] : col_[j])
                if (i != j) return false;
        return true;
    }

    std::uint64_t nnz() const {
        std::uint64_t t = 0;
        for (const auto& c : col_) t += c.size();
        return t;
    }

    SparseVector<S> apply(const SparseVector<S>& v) const {
        if (v.dim != dim_) throw std::invalid_argument("apply: dimension mismatch");
        std::map<std::uint64_t, S> acc;
        for (const auto& [j, x] : v.ent) {
            for (const auto& [i, a] : col_[j]) {
                S term = a * x;
                auto it = acc.find(i);
                if (it == acc.end())
                    acc.emplace(i, std::move(term));
                else
                    it->second += term;
            }
        }
        SparseVector<S> out(dim_);
        for (auto& [i, x] : acc)
            if (!x.is_zero()) out.ent.emplace_back(i, std::move(x));
        return out;
    }

    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("product: dimension mismatch");
        SparseOperator out(a.dim_);
        for (std::uint64_t j = 0; j < b.dim_; ++j) {
            std::map<std::uint64_t, S> acc;
            for (const auto& [k, x] : b.col_[j]) {
                for (const auto& [i, y] : a.col_[k]) {
                    S term = y * x;
                    auto it = acc.find(i);
                    if (it == acc.end())
                        acc.emplace(i, std::move(term));
                    else
                        it->second += term;
                }
            }
            for (auto& [i, x] : acc)
                if (!x.is_zero()) out.col_[j].emplace_back(i, std::move(x));
        }
        return out;
    }

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("sum: dimension mismatch");
        SparseOperator out = a;
        for (std::uint64_t j = 0; j < b.dim_; ++j)
            for (const auto& [i, x] : b.col_[j]) out.add_entry(i, j, x);
        return out;
    }

    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("difference: dimension mismatch");
        SparseOperator out = a;
        for (std::uint64_t j = 0; j < b.dim_; ++j)
            for (const auto& [i, x] : b.col_[j]) out.add_entry(i, j, -x);
        return out;
    }

    SparseOperator scaled(const S& c) const {
        SparseOperator out(dim_);
        if (c.is_zero()) return out;
        for (std::uint64_t j = 0; j < dim_; ++j)
            for (const auto& [i, x] : col_[j]) {
                S val = c * x;
                if (!val.is_zero()) out.col_[j].emplace_back(i, std::move(val));
            }
        return out;
    }

    SparseOperator transposed() const {
        SparseOperator out(dim_);
        for (std::uint64_t j = 0; j < dim_; ++j)
            for (const auto& [i, x] : col_[j]) out.col_[i].emplace_back(j, x);
        // Row-major traversal of a column-sorted matrix emits sorted columns.
        return out;
    }

    SparseOperator pow(long k, const S& one) const {
        SparseOperator out = identity(dim_, one);
        for (long t = 0; t < k; ++t) out = out * *this;
        return out;
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.dim_ == b.dim_ && a.col_ == b.col_;
    }

    // First position where the two matrices differ, scanning by (col, row).
    static std::optional<std::pair<std::uint64_t, std::uint64_t>> first_difference(
        const SparseOperator& a, const SparseOperator& b) {
        for (std::uint64_t j = 0; j < a.dim_; ++j) {
            const auto& ca = a.col_[j];
            const auto& cb = b.col_[j];
            size_t x = 0, y = 0;
            while (x < ca.size() || y < cb.size()) {
                if (y == cb.size() || (x < ca.size() && ca[x].first < cb[y].first))
                    return std::make_pair(ca[x].first, j);
                if (x == ca.size() || cb[y].first < ca[x].first)
                    return std::make_pair(cb[y].first, j);
                if (!(ca[x].second == cb[y].second))
                    return std::make_pair(ca[x].first, j);
                ++x;
                ++y;
            }
        }
        return std::nullopt;
    }

private:
    std::uint64_t dim_;
    std::vector<std::vector<std::pair<std::uint64_t, S>>> col_;
};

}  // namespace smallq
