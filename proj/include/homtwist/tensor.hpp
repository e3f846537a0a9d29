#pragma once

#include <array>
#include <map>

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace homtwist {

// Sparse element of H (x) H over a dim-dimensional carrier. No zero
// coefficients are ever stored; the ordered map makes iteration canonical.
class Tensor2 {
public:
    using Key = std::array<int, 2>;
    using Map = std::map<Key, Rational>;

    Tensor2() : dim_(0) {}
    explicit Tensor2(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const Map& coeffs() const { return c_; }
    bool empty() const { return c_.empty(); }

    void add(int i, int j, const Rational& q) {
        if (is_zero(q)) return;
        auto it = c_.find({i, j});
        if (it == c_.end()) {
            c_.emplace(Key{i, j}, q);
        } else {
            it->second += q;
            if (is_zero(it->second)) c_.erase(it);
        }
    }

    Rational coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? Rational(0) : it->second;
    }

    bool operator==(const Tensor2& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

    Tensor2 flip() const {  // tau: a (x) b -> b (x) a
        Tensor2 out(dim_);
        for (const auto& [k, v] : c_) out.add(k[1], k[0], v);
        return out;
    }

    // (M1 (x) M2) applied legwise.
    Tensor2 map_legs(const Matrix& m1, const Matrix& m2) const {
        Tensor2 out(dim_);
        for (const auto& [k, v] : c_)
            for (int i = 0; i < dim_; ++i) {
                if (is_zero(m1.at(i, k[0]))) continue;
                for (int j = 0; j < dim_; ++j)
                    if (!is_zero(m2.at(j, k[1]))) out.add(i, j, v * m1.at(i, k[0]) * m2.at(j, k[1]));
            }
        return out;
    }

    Tensor2 scaled(const Rational& q) const {
        Tensor2 out(dim_);
        for (const auto& [k, v] : c_) out.add(k[0], k[1], v * q);
        return out;
    }

    Tensor2 plus(const Tensor2& o) const {
        Tensor2 out(dim_);
        for (const auto& [k, v] : c_) out.add(k[0], k[1], v);
        for (const auto& [k, v] : o.c_) out.add(k[0], k[1], v);
        return out;
    }

    static Tensor2 outer(const Vec& a, const Vec& b) {
        Tensor2 out(static_cast<int>(a.size()));
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < static_cast<int>(b.size()); ++j)
                if (!is_zero(b[j])) out.add(i, j, a[i] * b[j]);
        }
        return out;
    }

private:
    int dim_;
    Map c_;
};

class Tensor3 {
public:
    using Key = std::array<int, 3>;
    using Map = std::map<Key, Rational>;

    Tensor3() : dim_(0) {}
    explicit Tensor3(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const Map& coeffs() const { return c_; }
    bool empty() const { return c_.empty(); }

    void add(int i, int j, int k, const Rational& q) {
        if (is_zero(q)) return;
        auto it = c_.find({i, j, k});
        if (it == c_.end()) {
            c_.emplace(Key{i, j, k}, q);
        } else {
            it->second += q;
            if (is_zero(it->second)) c_.erase(it);
        }
    }

    bool operator==(const Tensor3& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    Tensor3 swap_legs12() const {  // (tau (x) id)
        Tensor3 out(dim_);
        for (const auto& [k, v] : c_) out.add(k[1], k[0], k[2], v);
        return out;
    }

    Tensor3 map_legs(const Matrix& m1, const Matrix& m2, const Matrix& m3) const {
        Tensor3 out(dim_);
        for (const auto& [k, v] : c_)
            for (int i = 0; i < dim_; ++i) {
                if (is_zero(m1.at(i, k[0]))) continue;
                for (int j = 0; j < dim_; ++j) {
                    if (is_zero(m2.at(j, k[1]))) continue;
                    for (int l = 0; l < dim_; ++l)
                        if (!is_zero(m3.at(l, k[2])))
                            out.add(i, j, l, v * m1.at(i, k[0]) * m2.at(j, k[1]) * m3.at(l, k[2]));
                }
            }
        return out;
    }

private:
    int dim_;
    Map c_;
};

}  // namespace homtwist
