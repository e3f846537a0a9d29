#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hom_data.hpp"

namespace homtwist {

// Sparse element of H^{(x) rank}. Rank 0 holds a single scalar under the
// empty key.
class TensorN {
public:
    using Key = std::vector<int>;
    using Map = std::map<Key, Rational>;

    TensorN() : dim_(0), rank_(0) {}
    TensorN(int dim, int rank) : dim_(dim), rank_(rank) {}

    static TensorN scalar(int dim, const Rational& q) {
        TensorN t(dim, 0);
        t.add({}, q);
        return t;
    }
    static TensorN from_vec(const Vec& v) {
        TensorN t(static_cast<int>(v.size()), 1);
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            if (!is_zero(v[i])) t.add({i}, v[i]);
        return t;
    }
    static TensorN from_tensor2(const Tensor2& u) {
        TensorN t(u.dim(), 2);
        for (const auto& [k, v] : u.coeffs()) t.add({k[0], k[1]}, v);
        return t;
    }
    static TensorN from_tensor3(const Tensor3& u) {
        TensorN t(u.dim(), 3);
        for (const auto& [k, v] : u.coeffs()) t.add({k[0], k[1], k[2]}, v);
        return t;
    }

    int dim() const { return dim_; }
    int rank() const { return rank_; }
    const Map& coeffs() const { return c_; }

    void add(const Key& k, const Rational& q) {
        if (is_zero(q)) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, q);
        } else {
            it->second += q;
            if (is_zero(it->second)) c_.erase(it);
        }
    }

    bool operator==(const TensorN& o) const { return dim_ == o.dim_ && rank_ == o.rank_ && c_ == o.c_; }
    bool operator!=(const TensorN& o) const { return !(*this == o); }

    Tensor2 to_tensor2() const {
        if (rank_ != 2) throw DimensionMismatch("TensorN::to_tensor2: rank != 2");
        Tensor2 out(dim_);
        for (const auto& [k, v] : c_) out.add(k[0], k[1], v);
        return out;
    }
    Tensor3 to_tensor3() const {
        if (rank_ != 3) throw DimensionMismatch("TensorN::to_tensor3: rank != 3");
        Tensor3 out(dim_);
        for (const auto& [k, v] : c_) out.add(k[0], k[1], k[2], v);
        return out;
    }
    Vec to_vec() const {
        if (rank_ != 1) throw DimensionMismatch("TensorN::to_vec: rank != 1");
        Vec out(dim_, Rational(0));
        for (const auto& [k, v] : c_) out[k[0]] = v;
        return out;
    }
    Rational to_scalar() const {
        if (rank_ != 0) throw DimensionMismatch("TensorN::to_scalar: rank != 0");
        return c_.empty() ? Rational(0) : c_.begin()->second;
    }

private:
    int dim_, rank_;
    Map c_;
};

// Formula tree for expressions written in Sweedler index notation. Leg
// positions are 0-based; every product is an explicit binary node, so the
// tree carries the exact parenthesization - nothing is ever re-associated.
struct SweedlerExpr;
using ExprPtr = std::shared_ptr<const SweedlerExpr>;

struct SweedlerExpr {
    enum class Op {
        var,       // named rank-1 input
        unit,      // 1_H
        constant,  // embedded constant tensor
        tensor,    // concatenation of two subexpressions' legs
        mul,       // multiply leg a (left factor) by leg b; result lands at min(a,b)
        delta,     // coproduct on one leg; new legs occupy a, a+1
        alpha,     // alpha^power on leg a
        antipode,  // S on leg a
        counit,    // eps on leg a (leg removed, coefficient scaled)
        flip       // swap legs a and b
    };

    Op op;
    std::string name;  // var
    TensorN constant;  // constant
    int a = 0, b = 0;
    int power = 0;  // alpha exponent
    std::vector<ExprPtr> kids;
};

namespace sw {

inline ExprPtr var(std::string name) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::var;
    e->name = std::move(name);
    return e;
}
inline ExprPtr unit() {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::unit;
    return e;
}
inline ExprPtr constant(TensorN t) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::constant;
    e->constant = std::move(t);
    return e;
}
inline ExprPtr constant(const Tensor2& t) { return constant(TensorN::from_tensor2(t)); }
inline ExprPtr tensor(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::tensor;
    e->kids = {std::move(lhs), std::move(rhs)};
    return e;
}
inline ExprPtr tensor(ExprPtr a, ExprPtr b, ExprPtr c) { return tensor(tensor(std::move(a), std::move(b)), std::move(c)); }
inline ExprPtr mul(ExprPtr kid, int left_leg, int right_leg) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::mul;
    e->a = left_leg;
    e->b = right_leg;
    e->kids = {std::move(kid)};
    return e;
}
inline ExprPtr delta(ExprPtr kid, int leg = 0) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::delta;
    e->a = leg;
    e->kids = {std::move(kid)};
    return e;
}
inline ExprPtr alpha(ExprPtr kid, int leg, int power) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::alpha;
    e->a = leg;
    e->power = power;
    e->kids = {std::move(kid)};
    return e;
}
inline ExprPtr antipode(ExprPtr kid, int leg) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::antipode;
    e->a = leg;
    e->kids = {std::move(kid)};
    return e;
}
inline ExprPtr counit(ExprPtr kid, int leg = 0) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::counit;
    e->a = leg;
    e->kids = {std::move(kid)};
    return e;
}
inline ExprPtr flip(ExprPtr kid, int a, int b) {
    auto e = std::make_shared<SweedlerExpr>();
    e->op = SweedlerExpr::Op::flip;
    e->a = a;
    e->b = b;
    e->kids = {std::move(kid)};
    return e;
}

}  // namespace sw

using SweedlerEnv = std::map<std::string, Vec>;

// Evaluates a formula tree over concrete inputs, contracting structure
// tensors exactly as parenthesized. This is the one evaluation engine the
// axiom checkers are built on.
inline TensorN apply_sweedler(const HomBialgebra& A, const ExprPtr& expr, const SweedlerEnv& env) {
    using Op = SweedlerExpr::Op;
    const int d = A.dim();
    switch (expr->op) {
        case Op::var: {
            auto it = env.find(expr->name);
            if (it == env.end()) throw PreconditionError("apply_sweedler: unbound variable " + expr->name);
            if (static_cast<int>(it->second.size()) != d) throw DimensionMismatch("apply_sweedler: input dim");
            return TensorN::from_vec(it->second);
        }
        case Op::unit:
            return TensorN::from_vec(A.unit());
        case Op::constant:
            if (expr->constant.dim() != d) throw DimensionMismatch("apply_sweedler: constant dim");
            return expr->constant;
        case Op::tensor: {
            TensorN l = apply_sweedler(A, expr->kids[0], env);
            TensorN r = apply_sweedler(A, expr->kids[1], env);
            TensorN out(d, l.rank() + r.rank());
            for (const auto& [kl, cl] : l.coeffs())
                for (const auto& [kr, cr] : r.coeffs()) {
                    TensorN::Key k = kl;
                    k.insert(k.end(), kr.begin(), kr.end());
                    out.add(k, cl * cr);
                }
            return out;
        }
        case Op::mul: {
            TensorN in = apply_sweedler(A, expr->kids[0], env);
            const int la = expr->a, lb = expr->b;
            if (la == lb || la >= in.rank() || lb >= in.rank()) throw PreconditionError("apply_sweedler: bad mul legs");
            const int lo = la < lb ? la : lb, hi = la < lb ? lb : la;
            TensorN out(d, in.rank() - 1);
            for (const auto& [k, c] : in.coeffs()) {
                const Vec& p = A.prod(k[la], k[lb]);
                TensorN::Key base;
                base.reserve(k.size() - 1);
                for (int t = 0; t < static_cast<int>(k.size()); ++t)
                    if (t != hi) base.push_back(k[t]);
                for (int t = 0; t < d; ++t) {
                    if (is_zero(p[t])) continue;
                    TensorN::Key kk = base;
                    kk[lo] = t;
                    out.add(kk, c * p[t]);
                }
            }
            return out;
        }
        case Op::delta: {
            TensorN in = apply_sweedler(A, expr->kids[0], env);
            const int leg = expr->a;
            if (leg >= in.rank()) throw PreconditionError("apply_sweedler: bad delta leg");
            TensorN out(d, in.rank() + 1);
            for (const auto& [k, c] : in.coeffs()) {
                for (const auto& [dk, dc] : A.delta_basis(k[leg]).coeffs()) {
                    TensorN::Key kk;
                    kk.reserve(k.size() + 1);
                    for (int t = 0; t < leg; ++t) kk.push_back(k[t]);
                    kk.push_back(dk[0]);
                    kk.push_back(dk[1]);
                    for (int t = leg + 1; t < static_cast<int>(k.size()); ++t) kk.push_back(k[t]);
                    out.add(kk, c * dc);
                }
            }
            return out;
        }
        case Op::alpha:
        case Op::antipode: {
            TensorN in = apply_sweedler(A, expr->kids[0], env);
            const int leg = expr->a;
            if (leg >= in.rank()) throw PreconditionError("apply_sweedler: bad leg");
            const Matrix& m = expr->op == Op::alpha ? A.alpha_pow(expr->power) : A.antipode();
            TensorN out(d, in.rank());
            for (const auto& [k, c] : in.coeffs())
                for (int t = 0; t < d; ++t) {
                    if (is_zero(m.at(t, k[leg]))) continue;
                    TensorN::Key kk = k;
                    kk[leg] = t;
                    out.add(kk, c * m.at(t, k[leg]));
                }
            return out;
        }
        case Op::counit: {
            TensorN in = apply_sweedler(A, expr->kids[0], env);
            const int leg = expr->a;
            if (leg >= in.rank()) throw PreconditionError("apply_sweedler: bad counit leg");
            TensorN out(d, in.rank() - 1);
            for (const auto& [k, c] : in.coeffs()) {
                const Rational& e = A.counit_row()[k[leg]];
                if (is_zero(e)) continue;
                TensorN::Key kk;
                kk.reserve(k.size() - 1);
                for (int t = 0; t < static_cast<int>(k.size()); ++t)
                    if (t != leg) kk.push_back(k[t]);
                out.add(kk, c * e);
            }
            return out;
        }
        case Op::flip: {
            TensorN in = apply_sweedler(A, expr->kids[0], env);
            if (expr->a >= in.rank() || expr->b >= in.rank()) throw PreconditionError("apply_sweedler: bad flip legs");
            TensorN out(d, in.rank());
            for (const auto& [k, c] : in.coeffs()) {
                TensorN::Key kk = k;
                std::swap(kk[expr->a], kk[expr->b]);
                out.add(kk, c);
            }
            return out;
        }
    }
    throw Error("apply_sweedler: unreachable");
}

}  // namespace homtwist
