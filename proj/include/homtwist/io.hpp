#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hom_data.hpp"
#include "instances.hpp"
#include "report.hpp"
#include "rmatrix.hpp"

namespace homtwist {

// Line-based structure-constant file. All rationals are integer pairs in
// lowest terms with positive denominator; entries are emitted in
// lexicographic index order and named elements sorted by name, so
// serialize(parse(f)) is the canonical form of f and serialization is
// bit-stable.
struct NamedTensor2 {
    std::string name;
    Tensor2 value;
};

struct NamedRMatrixEntry {
    std::string name;
    RMatrixSystem system;
    Tensor2 value;
};

struct AlgebraFile {
    int version = 1;
    std::string name;
    int dim = 0;
    Flavor flavor = Flavor::plain;
    std::vector<std::string> basis;
    std::vector<Vec> mult;
    Vec unit;
    std::vector<Tensor2> comult;
    Vec counit;
    Matrix alpha;
    std::optional<Matrix> antipode;
    std::vector<NamedTensor2> twists;
    std::vector<NamedRMatrixEntry> rmatrices;

    HomBialgebra to_bialgebra(int window = 8) const {
        return HomBialgebra(dim, basis, mult, unit, comult, counit, alpha, antipode, flavor, window);
    }
};

inline AlgebraFile algebra_file_from(const HomBialgebra& H, const std::string& name) {
    AlgebraFile f;
    f.name = name;
    f.dim = H.dim();
    f.flavor = H.flavor();
    f.basis = H.basis_names();
    f.mult = H.mult_table();
    f.unit = H.unit();
    f.comult = H.comult_table();
    f.counit = H.counit_row();
    f.alpha = H.alpha();
    if (H.has_antipode()) f.antipode = H.antipode();
    return f;
}

inline AlgebraFile algebra_file_from(const NamedInstance& inst) {
    AlgebraFile f = algebra_file_from(inst.monoidal, inst.name);
    for (const auto& t : inst.twists) f.twists.push_back({t.name, t.sigma});
    for (const auto& r : inst.rmatrices) f.rmatrices.push_back({r.name, RMatrixSystem::monoidal_Q, r.r});
    return f;
}

namespace io_detail {

inline void emit_rational(std::ostream& os, const Rational& q) {
    os << numerator_of(q) << " " << denominator_of(q);
}

inline Rational read_rational(const std::string& num, const std::string& den) {
    try {
        BigInt n(num), d(den);
        if (d == 0) throw ParseError("zero denominator");
        return Rational(n, d);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + num + " " + den + "'");
    }
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

}  // namespace io_detail

inline std::string serialize_algebra_file(const AlgebraFile& f) {
    std::ostringstream os;
    os << "homtwist algebra " << f.version << "\n";
    if (!f.name.empty()) os << "name " << f.name << "\n";
    os << "dim " << f.dim << "\n";
    os << "flavor " << to_string(f.flavor) << "\n";
    for (int i = 0; i < f.dim; ++i) os << "basis " << i << " " << f.basis[i] << "\n";
    for (int i = 0; i < f.dim; ++i)
        if (!is_zero(f.unit[i])) {
            os << "unit " << i << " ";
            io_detail::emit_rational(os, f.unit[i]);
            os << "\n";
        }
    for (int i = 0; i < f.dim; ++i)
        if (!is_zero(f.counit[i])) {
            os << "counit " << i << " ";
            io_detail::emit_rational(os, f.counit[i]);
            os << "\n";
        }
    for (int r = 0; r < f.dim; ++r)
        for (int c = 0; c < f.dim; ++c)
            if (!is_zero(f.alpha.at(r, c))) {
                os << "alpha " << r << " " << c << " ";
                io_detail::emit_rational(os, f.alpha.at(r, c));
                os << "\n";
            }
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j) {
            const Vec& p = f.mult[static_cast<size_t>(i) * f.dim + j];
            for (int k = 0; k < f.dim; ++k)
                if (!is_zero(p[k])) {
                    os << "mult " << i << " " << j << " " << k << " ";
                    io_detail::emit_rational(os, p[k]);
                    os << "\n";
                }
        }
    for (int i = 0; i < f.dim; ++i)
        for (const auto& [k, v] : f.comult[i].coeffs()) {
            os << "comult " << i << " " << k[0] << " " << k[1] << " ";
            io_detail::emit_rational(os, v);
            os << "\n";
        }
    if (f.antipode)
        for (int r = 0; r < f.dim; ++r)
            for (int c = 0; c < f.dim; ++c)
                if (!is_zero(f.antipode->at(r, c))) {
                    os << "antipode " << r << " " << c << " ";
                    io_detail::emit_rational(os, f.antipode->at(r, c));
                    os << "\n";
                }
    auto twists = f.twists;
    std::sort(twists.begin(), twists.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& t : twists)
        for (const auto& [k, v] : t.value.coeffs()) {
            os << "twist " << t.name << " " << k[0] << " " << k[1] << " ";
            io_detail::emit_rational(os, v);
            os << "\n";
        }
    auto rms = f.rmatrices;
    std::sort(rms.begin(), rms.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (const auto& r : rms)
        for (const auto& [k, v] : r.value.coeffs()) {
            os << "rmatrix " << r.name << " " << to_string(r.system) << " " << k[0] << " " << k[1] << " ";
            io_detail::emit_rational(os, v);
            os << "\n";
        }
    os << "end\n";
    return os.str();
}

inline AlgebraFile parse_algebra_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    AlgebraFile f;
    bool saw_header = false, saw_end = false, saw_dim = false;
    std::map<std::string, Tensor2> twist_acc;
    std::map<std::string, std::pair<RMatrixSystem, Tensor2>> rmatrix_acc;
    std::vector<std::string> twist_order, rmatrix_order;

    auto need_dim = [&] {
        if (!saw_dim) throw ParseError("entry before dim line");
    };
    auto check_index = [&](int i) {
        if (i < 0 || i >= f.dim) throw ParseError("index out of range: " + std::to_string(i));
    };

    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (saw_end) {
            if (!io_detail::tokenize(line).empty()) throw ParseError("content after end line");
            continue;
        }
        auto toks = io_detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (!saw_header) {
            if (toks.size() != 3 || toks[0] != "homtwist" || toks[1] != "algebra") fail("missing header");
            if (toks[2] != "1") fail("unrecognized format version " + toks[2]);
            f.version = 1;
            saw_header = true;
            continue;
        }
        if (key == "name") {
            if (toks.size() != 2) fail("name needs one token");
            f.name = toks[1];
        } else if (key == "dim") {
            if (toks.size() != 2) fail("dim needs one integer");
            f.dim = std::stoi(toks[1]);
            if (f.dim <= 0) fail("dim must be positive");
            saw_dim = true;
            f.basis.assign(f.dim, "");
            f.mult.assign(static_cast<size_t>(f.dim) * f.dim, Vec(f.dim, Rational(0)));
            f.unit.assign(f.dim, Rational(0));
            f.comult.assign(f.dim, Tensor2(f.dim));
            f.counit.assign(f.dim, Rational(0));
            f.alpha = Matrix(f.dim, f.dim);
        } else if (key == "flavor") {
            if (toks.size() != 2) fail("flavor needs one token");
            if (toks[1] == "monoidal") f.flavor = Flavor::monoidal;
            else if (toks[1] == "plain") f.flavor = Flavor::plain;
            else fail("unknown flavor " + toks[1]);
        } else if (key == "basis") {
            need_dim();
            if (toks.size() != 3) fail("basis needs index and name");
            int i = std::stoi(toks[1]);
            check_index(i);
            f.basis[i] = toks[2];
        } else if (key == "unit" || key == "counit") {
            need_dim();
            if (toks.size() != 4) fail(key + " needs index num den");
            int i = std::stoi(toks[1]);
            check_index(i);
            (key == "unit" ? f.unit : f.counit)[i] = io_detail::read_rational(toks[2], toks[3]);
        } else if (key == "alpha" || key == "antipode") {
            need_dim();
            if (toks.size() != 5) fail(key + " needs row col num den");
            int r = std::stoi(toks[1]), c = std::stoi(toks[2]);
            check_index(r);
            check_index(c);
            if (key == "alpha") {
                f.alpha.at(r, c) = io_detail::read_rational(toks[3], toks[4]);
            } else {
                if (!f.antipode) f.antipode = Matrix(f.dim, f.dim);
                f.antipode->at(r, c) = io_detail::read_rational(toks[3], toks[4]);
            }
        } else if (key == "mult" || key == "comult") {
            need_dim();
            if (toks.size() != 6) fail(key + " needs i j k num den");
            int i = std::stoi(toks[1]), j = std::stoi(toks[2]), k = std::stoi(toks[3]);
            check_index(i);
            check_index(j);
            check_index(k);
            Rational q = io_detail::read_rational(toks[4], toks[5]);
            if (key == "mult") f.mult[static_cast<size_t>(i) * f.dim + j][k] = q;
            else f.comult[i].add(j, k, q);
        } else if (key == "twist") {
            need_dim();
            if (toks.size() != 6) fail("twist needs name i j num den");
            int i = std::stoi(toks[2]), j = std::stoi(toks[3]);
            check_index(i);
            check_index(j);
            if (!twist_acc.count(toks[1])) {
                twist_acc.emplace(toks[1], Tensor2(f.dim));
                twist_order.push_back(toks[1]);
            }
            twist_acc.at(toks[1]).add(i, j, io_detail::read_rational(toks[4], toks[5]));
        } else if (key == "rmatrix") {
            need_dim();
            if (toks.size() != 7) fail("rmatrix needs name system i j num den");
            RMatrixSystem sys;
            if (toks[2] == "monoidal_Q") sys = RMatrixSystem::monoidal_Q;
            else if (toks[2] == "plain_q") sys = RMatrixSystem::plain_q;
            else fail("unknown system " + toks[2]);
            int i = std::stoi(toks[3]), j = std::stoi(toks[4]);
            check_index(i);
            check_index(j);
            if (!rmatrix_acc.count(toks[1])) {
                rmatrix_acc.emplace(toks[1], std::make_pair(sys, Tensor2(f.dim)));
                rmatrix_order.push_back(toks[1]);
            }
            rmatrix_acc.at(toks[1]).second.add(i, j, io_detail::read_rational(toks[5], toks[6]));
        } else if (key == "end") {
            saw_end = true;
        } else {
            fail("unknown key " + key);
        }
    }
    if (!saw_header) throw ParseError("empty input");
    if (!saw_end) throw ParseError("missing end line");
    if (!saw_dim) throw ParseError("missing dim line");
    for (int i = 0; i < f.dim; ++i)
        if (f.basis[i].empty()) throw ParseError("missing basis name for index " + std::to_string(i));
    for (const auto& n : twist_order) f.twists.push_back({n, twist_acc.at(n)});
    for (const auto& n : rmatrix_order) f.rmatrices.push_back({n, rmatrix_acc.at(n).first, rmatrix_acc.at(n).second});
    return f;
}

// ---- report files ----

inline std::string serialize_report(const VerificationReport& rep) {
    std::ostringstream os;
    os << "homtwist report 1\n";
    int pass = 0, fail = 0;
    for (const auto& c : rep.checks) {
        (c.pass ? pass : fail)++;
        os << "check " << c.id << " " << (c.pass ? "PASS" : "FAIL");
        os << " law=\"" << c.law << "\"";
        if (!c.counterexample.empty()) os << " counterexample=\"" << c.counterexample << "\"";
        if (!c.detail.empty()) os << " detail=\"" << c.detail << "\"";
        os << " us=" << c.micros << "\n";
    }
    os << "summary pass " << pass << " fail " << fail << "\n";
    os << "end\n";
    return os.str();
}

}  // namespace homtwist
