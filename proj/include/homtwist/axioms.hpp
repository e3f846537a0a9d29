#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "sweedler.hpp"

namespace homtwist {

// A quantified identity: lhs = rhs for every assignment of basis elements
// to the named variables. Checking over basis tuples suffices because both
// sides are multilinear in the variables.
struct Law {
    std::string id;
    std::string description;
    std::vector<std::string> vars;
    ExprPtr lhs, rhs;
};

namespace detail {

inline std::string tuple_name(const HomBialgebra& A, const std::vector<int>& idx) {
    std::string out = "(";
    for (size_t t = 0; t < idx.size(); ++t) {
        if (t) out += ",";
        out += A.basis_names()[idx[t]];
    }
    out += ")";
    return out;
}

}  // namespace detail

inline void check_law(const HomBialgebra& A, const Law& law, VerificationReport& rep) {
    CheckTimer timer;
    CheckRecord rec;
    rec.id = law.id;
    rec.law = law.description;
    rec.pass = true;

    const int d = A.dim();
    const int nvars = static_cast<int>(law.vars.size());
    std::vector<int> idx(nvars, 0);
    long long count = 0;
    while (true) {
        SweedlerEnv env;
        for (int v = 0; v < nvars; ++v) env[law.vars[v]] = basis_vec(d, idx[v]);
        TensorN l = apply_sweedler(A, law.lhs, env);
        TensorN r = apply_sweedler(A, law.rhs, env);
        ++count;
        if (l != r) {
            rec.pass = false;
            rec.counterexample = detail::tuple_name(A, idx);
            break;
        }
        int v = nvars - 1;
        for (; v >= 0; --v) {
            if (++idx[v] < d) break;
            idx[v] = 0;
        }
        if (v < 0) break;
    }
    rec.detail = "tuples=" + std::to_string(count);
    rec.micros = timer.micros();
    rep.add(std::move(rec));
}

// ---- law builders ----

inline std::vector<Law> algebra_laws() {
    using namespace sw;
    std::vector<Law> laws;
    laws.push_back({"algebra.alpha_multiplicative", "alpha(ab) = alpha(a)alpha(b)", {"a", "b"},
                    alpha(mul(tensor(var("a"), var("b")), 0, 1), 0, 1),
                    mul(tensor(alpha(var("a"), 0, 1), alpha(var("b"), 0, 1)), 0, 1)});
    laws.push_back({"algebra.hom_associativity", "alpha(a)(bc) = (ab)alpha(c)", {"a", "b", "c"},
                    mul(tensor(alpha(var("a"), 0, 1), mul(tensor(var("b"), var("c")), 0, 1)), 0, 1),
                    mul(tensor(mul(tensor(var("a"), var("b")), 0, 1), alpha(var("c"), 0, 1)), 0, 1)});
    laws.push_back({"algebra.alpha_unit", "alpha(1) = 1", {}, alpha(unit(), 0, 1), unit()});
    laws.push_back({"algebra.left_unit", "1a = alpha(a)", {"a"},
                    mul(tensor(unit(), var("a")), 0, 1), alpha(var("a"), 0, 1)});
    laws.push_back({"algebra.right_unit", "a1 = alpha(a)", {"a"},
                    mul(tensor(var("a"), unit()), 0, 1), alpha(var("a"), 0, 1)});
    return laws;
}

// The monoidal axiom set reads coassociativity and the counit law through
// alpha^{-1}; the plain set uses alpha itself.
inline std::vector<Law> coalgebra_laws(Flavor flavor) {
    using namespace sw;
    const int p = flavor == Flavor::monoidal ? -1 : 1;
    std::vector<Law> laws;
    laws.push_back({"coalgebra.alpha_comultiplicative", "Delta(alpha(c)) = alpha(c1) (x) alpha(c2)", {"c"},
                    delta(alpha(var("c"), 0, 1), 0),
                    alpha(alpha(delta(var("c"), 0), 0, 1), 1, 1)});
    laws.push_back({"coalgebra.hom_coassociativity", "phi(c1) (x) Delta(c2) = Delta(c1) (x) phi(c2)", {"c"},
                    alpha(delta(delta(var("c"), 0), 1), 0, p),
                    alpha(delta(delta(var("c"), 0), 0), 2, p)});
    laws.push_back({"coalgebra.counit_alpha", "eps(alpha(c)) = eps(c)", {"c"},
                    counit(alpha(var("c"), 0, 1), 0), counit(var("c"), 0)});
    laws.push_back({"coalgebra.left_counit", "eps(c1)c2 = phi(c)", {"c"},
                    counit(delta(var("c"), 0), 0), alpha(var("c"), 0, p)});
    laws.push_back({"coalgebra.right_counit", "c1 eps(c2) = phi(c)", {"c"},
                    counit(delta(var("c"), 0), 1), alpha(var("c"), 0, p)});
    return laws;
}

inline std::vector<Law> bialgebra_compat_laws(int dim) {
    using namespace sw;
    std::vector<Law> laws;
    // Delta(x)Delta(y) componentwise: legs (x1,x2,y1,y2) -> (x1y1, x2y2)
    laws.push_back({"bialgebra.comult_multiplicative", "Delta(xy) = Delta(x)Delta(y)", {"x", "y"},
                    delta(mul(tensor(var("x"), var("y")), 0, 1), 0),
                    mul(mul(tensor(delta(var("x"), 0), delta(var("y"), 0)), 0, 2), 1, 2)});
    laws.push_back({"bialgebra.comult_unit", "Delta(1) = 1 (x) 1", {},
                    delta(unit(), 0), tensor(unit(), unit())});
    laws.push_back({"bialgebra.counit_multiplicative", "eps(xy) = eps(x)eps(y)", {"x", "y"},
                    counit(mul(tensor(var("x"), var("y")), 0, 1), 0),
                    counit(counit(tensor(var("x"), var("y")), 0), 0)});
    laws.push_back({"bialgebra.counit_unit", "eps(1) = 1", {},
                    counit(unit(), 0), constant(TensorN::scalar(dim, Rational(1)))});
    return laws;
}

inline std::vector<Law> antipode_laws() {
    using namespace sw;
    std::vector<Law> laws;
    laws.push_back({"antipode.left_convolution", "S(a1)a2 = eps(a)1", {"a"},
                    mul(antipode(delta(var("a"), 0), 0), 0, 1),
                    tensor(counit(var("a"), 0), unit())});
    laws.push_back({"antipode.right_convolution", "a1 S(a2) = eps(a)1", {"a"},
                    mul(antipode(delta(var("a"), 0), 1), 0, 1),
                    tensor(counit(var("a"), 0), unit())});
    laws.push_back({"antipode.alpha_compatible", "S(alpha(a)) = alpha(S(a))", {"a"},
                    antipode(alpha(var("a"), 0, 1), 0), alpha(antipode(var("a"), 0), 0, 1)});
    laws.push_back({"antipode.antimultiplicative", "S(ab) = S(b)S(a)", {"a", "b"},
                    antipode(mul(tensor(var("a"), var("b")), 0, 1), 0),
                    mul(tensor(antipode(var("b"), 0), antipode(var("a"), 0)), 0, 1)});
    laws.push_back({"antipode.unit", "S(1) = 1", {}, antipode(unit(), 0), unit()});
    laws.push_back({"antipode.anticomultiplicative", "Delta(S(a)) = S(a2) (x) S(a1)", {"a"},
                    delta(antipode(var("a"), 0), 0),
                    antipode(antipode(flip(delta(var("a"), 0), 0, 1), 0), 1)});
    laws.push_back({"antipode.counit", "eps(S(a)) = eps(a)", {"a"},
                    counit(antipode(var("a"), 0), 0), counit(var("a"), 0)});
    return laws;
}

// ---- suite drivers ----

inline VerificationReport check_hom_algebra(const HomBialgebra& A) {
    VerificationReport rep;
    for (const auto& law : algebra_laws()) check_law(A, law, rep);
    return rep;
}

inline VerificationReport check_hom_coalgebra(const HomBialgebra& A) {
    if (A.flavor() == Flavor::monoidal && !A.alpha_invertible())
        throw PreconditionError("check_hom_coalgebra: monoidal flavor needs invertible alpha");
    VerificationReport rep;
    for (const auto& law : coalgebra_laws(A.flavor())) check_law(A, law, rep);
    return rep;
}

inline VerificationReport check_hom_bialgebra(const HomBialgebra& A) {
    VerificationReport rep = check_hom_algebra(A);
    rep.merge(check_hom_coalgebra(A));
    for (const auto& law : bialgebra_compat_laws(A.dim())) check_law(A, law, rep);
    return rep;
}

inline VerificationReport check_antipode(const HomBialgebra& A) {
    if (!A.has_antipode()) throw MissingStructure("check_antipode: no antipode present");
    VerificationReport rep;
    for (const auto& law : antipode_laws()) check_law(A, law, rep);
    return rep;
}

inline VerificationReport check_hopf(const HomBialgebra& A) {
    VerificationReport rep = check_hom_bialgebra(A);
    rep.merge(check_antipode(A));
    return rep;
}

// ---- module-level checks (elementwise over module bases) ----

inline VerificationReport check_hom_module(const HomModule& M) {
    const HomBialgebra& A = M.parent();
    const int d = A.dim(), dm = M.dim();
    VerificationReport rep;

    {
        CheckTimer timer;
        CheckRecord rec{"module.alpha_compatible", "alpha_M(h.m) = alpha(h).alpha_M(m)", true, "", "", 0};
        for (int h = 0; h < d && rec.pass; ++h) {
            Vec ah = A.alpha_pow(1).apply(basis_vec(d, h));
            for (int m = 0; m < dm && rec.pass; ++m) {
                SparseVec lhs, rhs;
                for (const auto& [i, q] : M.act(h, m).entries())
                    for (int r = 0; r < dm; ++r)
                        if (!is_zero(M.alpha_m().at(r, i))) lhs.add(r, q * M.alpha_m().at(r, i));
                SparseVec am;
                for (int r = 0; r < dm; ++r)
                    if (!is_zero(M.alpha_m().at(r, m))) am.add(r, M.alpha_m().at(r, m));
                rhs = M.act_elem(ah, am);
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.counterexample = "(" + A.basis_names()[h] + ",m" + std::to_string(m) + ")";
                }
            }
        }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer timer;
        CheckRecord rec{"module.hom_action", "alpha(h).(h'.m) = (hh').alpha_M(m)", true, "", "", 0};
        for (int h = 0; h < d && rec.pass; ++h) {
            Vec ah = A.alpha_pow(1).apply(basis_vec(d, h));
            for (int h2 = 0; h2 < d && rec.pass; ++h2) {
                Vec hh = A.mul(basis_vec(d, h), basis_vec(d, h2));
                for (int m = 0; m < dm && rec.pass; ++m) {
                    SparseVec lhs = M.act_elem(ah, M.act(h2, m));
                    SparseVec am;
                    for (int r = 0; r < dm; ++r)
                        if (!is_zero(M.alpha_m().at(r, m))) am.add(r, M.alpha_m().at(r, m));
                    SparseVec rhs = M.act_elem(hh, am);
                    if (lhs != rhs) {
                        rec.pass = false;
                        rec.counterexample = "(" + A.basis_names()[h] + "," + A.basis_names()[h2] + ",m" + std::to_string(m) + ")";
                    }
                }
            }
        }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer timer;
        CheckRecord rec{"module.unit_action", "1.m = alpha_M(m)", true, "", "", 0};
        for (int m = 0; m < dm && rec.pass; ++m) {
            SparseVec lhs = M.act_elem(A.unit(), SparseVec::basis(m));
            SparseVec rhs;
            for (int r = 0; r < dm; ++r)
                if (!is_zero(M.alpha_m().at(r, m))) rhs.add(r, M.alpha_m().at(r, m));
            if (lhs != rhs) {
                rec.pass = false;
                rec.counterexample = "(m" + std::to_string(m) + ")";
            }
        }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    return rep;
}

// Carrier of a Hom-module that is itself a (monoidal Hom-)algebra.
struct ModuleAlgebra {
    HomModule module;
    std::vector<Vec> mult;  // carrier product, index a * dim + b
    Vec unit;
};

// Carrier of a Hom-module that is itself a coalgebra.
struct ModuleCoalgebra {
    HomModule module;
    std::vector<Tensor2> comult;
    Vec counit;
};

inline VerificationReport check_module_algebra(const ModuleAlgebra& MA) {
    const HomBialgebra& A = MA.module.parent();
    const HomModule& M = MA.module;
    const int d = A.dim(), dm = M.dim();
    VerificationReport rep;

    auto carrier_mul = [&](const SparseVec& x, const SparseVec& y) {
        SparseVec out;
        for (const auto& [i, p] : x.entries())
            for (const auto& [j, q] : y.entries()) {
                const Vec& pr = MA.mult[static_cast<size_t>(i) * dm + j];
                for (int t = 0; t < dm; ++t)
                    if (!is_zero(pr[t])) out.add(t, p * q * pr[t]);
            }
        return out;
    };

    {
        CheckTimer timer;
        CheckRecord rec{"module_algebra.action_multiplicative", "h.(ab) = (h1.a)(h2.b)", true, "", "", 0};
        for (int h = 0; h < d && rec.pass; ++h)
            for (int a = 0; a < dm && rec.pass; ++a)
                for (int b = 0; b < dm && rec.pass; ++b) {
                    SparseVec ab = carrier_mul(SparseVec::basis(a), SparseVec::basis(b));
                    SparseVec lhs = M.act_elem(basis_vec(d, h), ab);
                    SparseVec rhs;
                    for (const auto& [k, c] : A.delta_basis(h).coeffs()) {
                        SparseVec left = M.act(k[0], a);
                        SparseVec right = M.act(k[1], b);
                        SparseVec term = carrier_mul(left, right);
                        rhs.add_scaled(term, c);
                    }
                    if (lhs != rhs) {
                        rec.pass = false;
                        rec.counterexample = "(" + A.basis_names()[h] + ",a" + std::to_string(a) + ",b" + std::to_string(b) + ")";
                    }
                }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer timer;
        CheckRecord rec{"module_algebra.action_unit", "h.1_A = eps(h)1_A", true, "", "", 0};
        for (int h = 0; h < d && rec.pass; ++h) {
            SparseVec lhs = M.act_elem(basis_vec(d, h), SparseVec::from_dense(MA.unit));
            SparseVec rhs;
            rhs.add_scaled(SparseVec::from_dense(MA.unit), A.counit_row()[h]);
            if (lhs != rhs) {
                rec.pass = false;
                rec.counterexample = "(" + A.basis_names()[h] + ")";
            }
        }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    return rep;
}

inline VerificationReport check_module_coalgebra(const ModuleCoalgebra& MC) {
    const HomBialgebra& A = MC.module.parent();
    const HomModule& M = MC.module;
    const int d = A.dim(), dm = M.dim();
    VerificationReport rep;

    auto carrier_delta = [&](const SparseVec& x) {
        Tensor2 out(dm);
        for (const auto& [i, p] : x.entries())
            for (const auto& [k, c] : MC.comult[i].coeffs()) out.add(k[0], k[1], p * c);
        return out;
    };

    {
        CheckTimer timer;
        CheckRecord rec{"module_coalgebra.action_comultiplicative", "Delta_C(h.c) = h1.c1 (x) h2.c2", true, "", "", 0};
        for (int h = 0; h < d && rec.pass; ++h)
            for (int cidx = 0; cidx < dm && rec.pass; ++cidx) {
                Tensor2 lhs = carrier_delta(M.act(h, cidx));
                Tensor2 rhs(dm);
                for (const auto& [hk, hc] : A.delta_basis(h).coeffs())
                    for (const auto& [ck, cc] : MC.comult[cidx].coeffs()) {
                        SparseVec l = M.act(hk[0], ck[0]);
                        SparseVec r = M.act(hk[1], ck[1]);
                        for (const auto& [li, lq] : l.entries())
                            for (const auto& [ri, rq] : r.entries()) rhs.add(li, ri, hc * cc * lq * rq);
                    }
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.counterexample = "(" + A.basis_names()[h] + ",c" + std::to_string(cidx) + ")";
                }
            }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    {
        CheckTimer timer;
        CheckRecord rec{"module_coalgebra.action_counit", "eps_C(h.c) = eps(h)eps_C(c)", true, "", "", 0};
        for (int h = 0; h < d && rec.pass; ++h)
            for (int cidx = 0; cidx < dm && rec.pass; ++cidx) {
                Rational lhs(0);
                for (const auto& [i, q] : M.act(h, cidx).entries()) lhs += q * MC.counit[i];
                Rational rhs = A.counit_row()[h] * MC.counit[cidx];
                if (lhs != rhs) {
                    rec.pass = false;
                    rec.counterexample = "(" + A.basis_names()[h] + ",c" + std::to_string(cidx) + ")";
                }
            }
        rec.micros = timer.micros();
        rep.add(std::move(rec));
    }
    return rep;
}

}  // namespace homtwist
