#pragma once

// Deliberately naive reference implementations used as independent oracles
// in tests. Everything here works on dense arrays with nested loops and
// shares no evaluation code with the library.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homtwist/homtwist.hpp"

namespace oracle {

using homtwist::HomBialgebra;
using homtwist::Matrix;
using homtwist::Rational;
using homtwist::Tensor2;
using homtwist::Tensor3;
using homtwist::Vec;

// Dense rank-N tensor: coefficients indexed by mixed-radix keys over dim.
struct Dense {
    int dim = 0;
    int rank = 0;
    std::vector<Rational> a;  // size dim^rank (size 1 for rank 0)

    static Dense zeros(int dim, int rank) {
        Dense d;
        d.dim = dim;
        d.rank = rank;
        size_t n = 1;
        for (int i = 0; i < rank; ++i) n *= dim;
        d.a.assign(n, Rational(0));
        return d;
    }
    size_t flat(const std::vector<int>& idx) const {
        size_t f = 0;
        for (int i : idx) f = f * dim + i;
        return f;
    }
    bool operator==(const Dense& o) const { return dim == o.dim && rank == o.rank && a == o.a; }
};

inline Dense from_vec(const Vec& v) {
    Dense d = Dense::zeros(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) d.a[i] = v[i];
    return d;
}

inline Dense from_tensor2(const Tensor2& t) {
    Dense d = Dense::zeros(t.dim(), 2);
    for (const auto& [k, v] : t.coeffs()) d.a[d.flat({k[0], k[1]})] = v;
    return d;
}

inline Dense from_tensorN(const homtwist::TensorN& t) {
    Dense d = Dense::zeros(t.dim(), t.rank());
    for (const auto& [k, v] : t.coeffs()) d.a[d.flat(k)] = v;
    return d;
}

inline void enumerate(int dim, int rank, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(rank, 0);
    if (rank == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int p = rank - 1;
        for (; p >= 0; --p) {
            if (++idx[p] < dim) break;
            idx[p] = 0;
        }
        if (p < 0) break;
    }
}

// Componentwise Hom-product of two dense rank-N tensors by full expansion.
inline Dense dense_hom_product(const HomBialgebra& H, const Dense& u, const Dense& v) {
    Dense out = Dense::zeros(u.dim, u.rank);
    enumerate(u.dim, u.rank, [&](const std::vector<int>& iu) {
        const Rational& cu = u.a[u.flat(iu)];
        if (homtwist::is_zero(cu)) return;
        enumerate(v.dim, v.rank, [&](const std::vector<int>& iv) {
            const Rational& cv = v.a[v.flat(iv)];
            if (homtwist::is_zero(cv)) return;
            // multiply leg by leg
            Dense term = Dense::zeros(u.dim, u.rank);
            std::function<void(int, std::vector<int>, Rational)> rec = [&](int leg, std::vector<int> acc,
                                                                           Rational coef) {
                if (leg == u.rank) {
                    term.a[term.flat(acc)] += coef;
                    return;
                }
                const Vec& p = H.prod(iu[leg], iv[leg]);
                for (int t = 0; t < u.dim; ++t) {
                    if (homtwist::is_zero(p[t])) continue;
                    acc.push_back(t);
                    rec(leg + 1, acc, coef * p[t]);
                    acc.pop_back();
                }
            };
            rec(0, {}, cu * cv);
            for (size_t f = 0; f < out.a.size(); ++f) out.a[f] += term.a[f];
        });
    });
    return out;
}

// Naive recursive evaluator for the formula trees; mirrors the semantics of
// the library engine with dense arrays and no sparsity.
inline Dense naive_eval(const HomBialgebra& H, const homtwist::ExprPtr& e, const homtwist::SweedlerEnv& env) {
    using Op = homtwist::SweedlerExpr::Op;
    const int d = H.dim();
    switch (e->op) {
        case Op::var:
            return from_vec(env.at(e->name));
        case Op::unit:
            return from_vec(H.unit());
        case Op::constant:
            return from_tensorN(e->constant);
        case Op::tensor: {
            Dense l = naive_eval(H, e->kids[0], env);
            Dense r = naive_eval(H, e->kids[1], env);
            Dense out = Dense::zeros(d, l.rank + r.rank);
            enumerate(d, l.rank, [&](const std::vector<int>& il) {
                if (homtwist::is_zero(l.a[l.flat(il)])) return;
                enumerate(d, r.rank, [&](const std::vector<int>& ir) {
                    if (homtwist::is_zero(r.a[r.flat(ir)])) return;
                    std::vector<int> k = il;
                    k.insert(k.end(), ir.begin(), ir.end());
                    out.a[out.flat(k)] += l.a[l.flat(il)] * r.a[r.flat(ir)];
                });
            });
            return out;
        }
        case Op::mul: {
            Dense in = naive_eval(H, e->kids[0], env);
            const int la = e->a, lb = e->b;
            const int lo = la < lb ? la : lb, hi = la < lb ? lb : la;
            Dense out = Dense::zeros(d, in.rank - 1);
            enumerate(d, in.rank, [&](const std::vector<int>& k) {
                if (homtwist::is_zero(in.a[in.flat(k)])) return;
                const Vec& p = H.prod(k[la], k[lb]);
                for (int t = 0; t < d; ++t) {
                    if (homtwist::is_zero(p[t])) continue;
                    std::vector<int> kk;
                    for (int q = 0; q < in.rank; ++q)
                        if (q != hi) kk.push_back(k[q]);
                    kk[lo] = t;
                    out.a[out.flat(kk)] += in.a[in.flat(k)] * p[t];
                }
            });
            return out;
        }
        case Op::delta: {
            Dense in = naive_eval(H, e->kids[0], env);
            Dense out = Dense::zeros(d, in.rank + 1);
            enumerate(d, in.rank, [&](const std::vector<int>& k) {
                if (homtwist::is_zero(in.a[in.flat(k)])) return;
                Dense dd = from_tensor2(H.delta_basis(k[e->a]));
                for (int p = 0; p < d; ++p)
                    for (int q = 0; q < d; ++q) {
                        const Rational& c = dd.a[dd.flat({p, q})];
                        if (homtwist::is_zero(c)) continue;
                        std::vector<int> kk;
                        for (int t = 0; t < e->a; ++t) kk.push_back(k[t]);
                        kk.push_back(p);
                        kk.push_back(q);
                        for (int t = e->a + 1; t < in.rank; ++t) kk.push_back(k[t]);
                        out.a[out.flat(kk)] += in.a[in.flat(k)] * c;
                    }
            });
            return out;
        }
        case Op::alpha:
        case Op::antipode: {
            Dense in = naive_eval(H, e->kids[0], env);
            const Matrix& m = e->op == Op::alpha ? H.alpha_pow(e->power) : H.antipode();
            Dense out = Dense::zeros(d, in.rank);
            enumerate(d, in.rank, [&](const std::vector<int>& k) {
                if (homtwist::is_zero(in.a[in.flat(k)])) return;
                for (int t = 0; t < d; ++t) {
                    if (homtwist::is_zero(m.at(t, k[e->a]))) continue;
                    std::vector<int> kk = k;
                    kk[e->a] = t;
                    out.a[out.flat(kk)] += in.a[in.flat(k)] * m.at(t, k[e->a]);
                }
            });
            return out;
        }
        case Op::counit: {
            Dense in = naive_eval(H, e->kids[0], env);
            Dense out = Dense::zeros(d, in.rank - 1);
            enumerate(d, in.rank, [&](const std::vector<int>& k) {
                if (homtwist::is_zero(in.a[in.flat(k)])) return;
                const Rational& c = H.counit_row()[k[e->a]];
                if (homtwist::is_zero(c)) return;
                std::vector<int> kk;
                for (int t = 0; t < in.rank; ++t)
                    if (t != e->a) kk.push_back(k[t]);
                out.a[out.flat(kk)] += in.a[in.flat(k)] * c;
            });
            return out;
        }
        case Op::flip: {
            Dense in = naive_eval(H, e->kids[0], env);
            Dense out = Dense::zeros(d, in.rank);
            enumerate(d, in.rank, [&](const std::vector<int>& k) {
                if (homtwist::is_zero(in.a[in.flat(k)])) return;
                std::vector<int> kk = k;
                std::swap(kk[e->a], kk[e->b]);
                out.a[out.flat(kk)] += in.a[in.flat(k)];
            });
            return out;
        }
    }
    throw std::logic_error("naive_eval: unreachable");
}

// ---- independent instance constructors (double-entry bookkeeping) ----

// Group algebra rebuilt from permutation matrices of the regular
// representation rather than index arithmetic.
struct NaiveGroupAlgebra {
    int n;
    std::vector<Matrix> left_mult;  // one permutation matrix per basis element

    explicit NaiveGroupAlgebra(int n) : n(n) {
        for (int i = 0; i < n; ++i) {
            Matrix P(n, n);
            for (int j = 0; j < n; ++j) P.at((i + j) % n, j) = Rational(1);
            left_mult.push_back(std::move(P));
        }
    }
    Vec mul(int i, int j) const { return left_mult[i].apply(homtwist::basis_vec(n, j)); }
};

// The four-dimensional carrier rebuilt by string rewriting on words in g
// and x with the rules gg -> 1, xx -> 0, xg -> -gx.
struct NaiveSweedler {
    // a word is a normal form (g^a x^b), a,b in {0,1}; value = signed basis index
    struct Elem {
        std::map<std::pair<int, int>, Rational> terms;  // (a, b) -> coefficient
    };

    // idx: 0 -> 1, 1 -> g, 2 -> x, 3 -> gx; word (a, b) means g^a x^b
    static Elem basis(int idx) {
        static const std::pair<int, int> table[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        Elem e;
        e.terms[table[idx]] = Rational(1);
        return e;
    }

    static int index_of(std::pair<int, int> w) { return w.first + 2 * w.second; }

    // multiply normal forms (g^a x^b)(g^c x^d) by pushing x past g
    static Elem mul(const Elem& l, const Elem& r) {
        Elem out;
        for (const auto& [wl, cl] : l.terms)
            for (const auto& [wr, cr] : r.terms) {
                auto [a, b] = wl;
                auto [c, d] = wr;
                if (b == 1 && d == 1) continue;      // xx = 0
                Rational sign = (b == 1 && c == 1) ? Rational(-1) : Rational(1);  // xg = -gx
                int ga = (a + c) % 2;
                int xb = b + d;
                out.terms[{ga, xb}] += sign * cl * cr;
            }
        for (auto it = out.terms.begin(); it != out.terms.end();)
            it = homtwist::is_zero(it->second) ? out.terms.erase(it) : std::next(it);
        return out;
    }

    Vec mul_basis(int i, int j) const {
        Elem e = mul(basis(i), basis(j));
        Vec v(4, Rational(0));
        for (const auto& [w, c] : e.terms) v[index_of(w)] = c;
        return v;
    }

    // coproduct from the generators: Delta(g) = g (x) g,
    // Delta(x) = x (x) 1 + g (x) x, extended multiplicatively
    Tensor2 delta_basis(int idx) const {
        auto prod2 = [&](const Tensor2& u, const Tensor2& v) {
            Tensor2 out(4);
            for (const auto& [ku, cu] : u.coeffs())
                for (const auto& [kv, cv] : v.coeffs()) {
                    Vec p1 = mul_basis(ku[0], kv[0]);
                    Vec p2 = mul_basis(ku[1], kv[1]);
                    for (int a = 0; a < 4; ++a) {
                        if (homtwist::is_zero(p1[a])) continue;
                        for (int b = 0; b < 4; ++b)
                            if (!homtwist::is_zero(p2[b])) out.add(a, b, cu * cv * p1[a] * p2[b]);
                    }
                }
            return out;
        };
        Tensor2 dg(4), dx(4), done(4);
        done.add(0, 0, Rational(1));
        dg.add(1, 1, Rational(1));
        dx.add(2, 0, Rational(1));
        dx.add(1, 2, Rational(1));
        switch (idx) {
            case 0: return done;
            case 1: return dg;
            case 2: return dx;
            default: return prod2(dg, dx);  // gx
        }
    }
};

}  // namespace oracle
