#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace homtwist {

// Sorted sparse coordinate vector; used where carriers get large (tensor
// products of modules). Entries are kept sorted by index with no zeros.
class SparseVec {
public:
    using Entry = std::pair<int, Rational>;

    SparseVec() = default;
    static SparseVec basis(int i) {
        SparseVec v;
        v.entries_.emplace_back(i, Rational(1));
        return v;
    }
    static SparseVec from_dense(const Vec& d) {
        SparseVec v;
        for (int i = 0; i < static_cast<int>(d.size()); ++i)
            if (!is_zero(d[i])) v.entries_.emplace_back(i, d[i]);
        return v;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    void add(int i, const Rational& q) {
        if (is_zero(q)) return;
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, int idx) { return e.first < idx; });
        if (it != entries_.end() && it->first == i) {
            it->second += q;
            if (is_zero(it->second)) entries_.erase(it);
        } else {
            entries_.insert(it, {i, q});
        }
    }

    void add_scaled(const SparseVec& o, const Rational& s) {
        if (is_zero(s)) return;
        for (const auto& [i, q] : o.entries_) add(i, q * s);
    }

    bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }
    bool operator!=(const SparseVec& o) const { return !(*this == o); }

private:
    std::vector<Entry> entries_;
};

// Linear map between sparse coordinate spaces, stored column-sparse.
class SparseMap {
public:
    SparseMap() : dim_in_(0), dim_out_(0) {}
    SparseMap(int dim_in, int dim_out) : dim_in_(dim_in), dim_out_(dim_out), cols_(dim_in) {}

    static SparseMap identity(int n) {
        SparseMap m(n, n);
        for (int i = 0; i < n; ++i) m.cols_[i] = SparseVec::basis(i);
        return m;
    }

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }

    SparseVec& col(int j) { return cols_[j]; }
    const SparseVec& col(int j) const { return cols_[j]; }

    SparseVec apply(const SparseVec& v) const {
        SparseVec out;
        for (const auto& [j, q] : v.entries()) out.add_scaled(cols_[j], q);
        return out;
    }

    // this o g
    SparseMap compose(const SparseMap& g) const {
        if (g.dim_out_ != dim_in_) throw DimensionMismatch("SparseMap::compose: shape mismatch");
        SparseMap out(g.dim_in_, dim_out_);
        for (int j = 0; j < g.dim_in_; ++j) out.cols_[j] = apply(g.cols_[j]);
        return out;
    }

    // f (x) g on flattened pair indices (a, b) -> a * g.dim + b.
    static SparseMap kron(const SparseMap& f, const SparseMap& g) {
        SparseMap out(f.dim_in_ * g.dim_in_, f.dim_out_ * g.dim_out_);
        for (int a = 0; a < f.dim_in_; ++a)
            for (int b = 0; b < g.dim_in_; ++b) {
                SparseVec& c = out.cols_[a * g.dim_in_ + b];
                for (const auto& [i, p] : f.cols_[a].entries())
                    for (const auto& [j, q] : g.cols_[b].entries())
                        c.add(i * g.dim_out_ + j, p * q);
            }
        return out;
    }

    bool operator==(const SparseMap& o) const {
        return dim_in_ == o.dim_in_ && dim_out_ == o.dim_out_ && cols_ == o.cols_;
    }
    bool operator!=(const SparseMap& o) const { return !(*this == o); }

    Matrix to_matrix() const {
        Matrix m(dim_out_, dim_in_);
        for (int j = 0; j < dim_in_; ++j)
            for (const auto& [i, q] : cols_[j].entries()) m.at(i, j) = q;
        return m;
    }

    static SparseMap from_matrix(const Matrix& m) {
        SparseMap out(m.cols(), m.rows());
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i)
                if (!is_zero(m.at(i, j))) out.cols_[j].add(i, m.at(i, j));
        return out;
    }

private:
    int dim_in_, dim_out_;
    std::vector<SparseVec> cols_;
};

}  // namespace homtwist
