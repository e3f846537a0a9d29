// Command-line driver: verification suites, coproduct twisting, and
// representation-category coherence sweeps over structure-constant files.
//
// Exit codes: 0 all selected checks pass; 1 a check failed or a twist was
// rejected; 2 unparseable input or unknown example name; 3 a precondition
// (flavor, window, missing structure) was violated.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "homtwist/homtwist.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw homtwist::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    // write-then-rename so partially written files never appear
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw homtwist::Error("cannot open " + tmp + " for writing");
        out << content;
    }
    std::remove(path.c_str());
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw homtwist::Error("cannot rename into " + path);
}

void maybe_write_report(const std::string& path, const homtwist::VerificationReport& rep) {
    if (!path.empty()) write_file(path, homtwist::serialize_report(rep));
}

void print_summary(const homtwist::VerificationReport& rep) {
    int pass = 0, fail = 0;
    for (const auto& c : rep.checks) (c.pass ? pass : fail)++;
    for (const auto& c : rep.checks)
        if (!c.pass)
            std::cout << "FAIL " << c.id
                      << (c.counterexample.empty() ? "" : " at " + c.counterexample)
                      << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    std::cout << "checks: " << pass << " passed, " << fail << " failed\n";
}

struct GridSpec {
    int i_lo = -2, i_hi = 2, j_lo = -2, j_hi = 2;
};

GridSpec parse_grid(const std::string& s) {
    // "i0..i1,j0..j1"
    GridSpec g;
    auto comma = s.find(',');
    if (comma == std::string::npos) throw homtwist::PreconditionError("grid spec needs 'i0..i1,j0..j1'");
    auto parse_range = [](const std::string& r, int& lo, int& hi) {
        auto dots = r.find("..");
        if (dots == std::string::npos) throw homtwist::PreconditionError("bad range '" + r + "'");
        lo = std::stoi(r.substr(0, dots));
        hi = std::stoi(r.substr(dots + 2));
        if (lo > hi) throw homtwist::PreconditionError("empty range '" + r + "'");
    };
    parse_range(s.substr(0, comma), g.i_lo, g.i_hi);
    parse_range(s.substr(comma + 1), g.j_lo, g.j_hi);
    return g;
}

int cmd_verify(const std::string& path, const std::string& suite, const std::string& report_path) {
    using namespace homtwist;
    AlgebraFile file = parse_algebra_file(read_file(path));
    HomBialgebra H = file.to_bialgebra();

    VerificationReport rep;
    if (suite == "algebra" || suite == "all") rep.merge(check_hom_algebra(H));
    if (suite == "coalgebra" || suite == "all") rep.merge(check_hom_coalgebra(H));
    if (suite == "bialgebra") rep.merge(check_hom_bialgebra(H));
    if (suite == "all")
        for (const auto& law : bialgebra_compat_laws(H.dim())) check_law(H, law, rep);
    if (suite == "hopf" || (suite == "all" && H.has_antipode())) rep.merge(check_antipode(H));
    if (suite == "module" || suite == "all") {
        rep.merge(check_hom_module(regular_module(H)));
        rep.merge(check_hom_module(trivial_module(H)));
    }
    maybe_write_report(report_path, rep);
    print_summary(rep);
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_twist(const std::string& path, const std::string& twist_name, const std::string& out_path,
              const std::string& report_path) {
    using namespace homtwist;
    AlgebraFile file = parse_algebra_file(read_file(path));
    HomBialgebra H = file.to_bialgebra();
    if (H.flavor() != Flavor::monoidal)
        throw PreconditionError("twist: input must carry the monoidal flavor");

    const NamedTensor2* cand = nullptr;
    for (const auto& t : file.twists)
        if (t.name == twist_name) cand = &t;
    if (cand == nullptr) throw PreconditionError("twist: no twist named '" + twist_name + "' in file");

    VerificationReport rep;
    auto validation = validate_twist(H, cand->value);
    rep.merge(validation.report);
    if (!validation.twist) {
        maybe_write_report(report_path, rep);
        print_summary(rep);
        return kExitCheckFailed;
    }
    const TwistData& tw = *validation.twist;

    TwistedBialgebra twisted = build_twisted_bialgebra(H, tw);
    rep.merge(twisted.report);
    rep.merge(check_twist_exchange_identity(H, tw));
    auto corr = check_twist_correspondence(H, tw);
    rep.merge(corr.report);

    AlgebraFile out = algebra_file_from(twisted.data, file.name.empty() ? "twisted" : file.name + "_" + twist_name);
    if (H.has_antipode()) {
        auto anti = twist_antipode(H, tw, twisted.data);
        rep.merge(anti.report);
        {
            CheckRecord rec{"twist.antipode_bracketing", "five-factor antipode word verified", true, "",
                            "bracketing=" + anti.bracket, 0};
            rep.add(std::move(rec));
        }
        out.antipode = anti.matrix;
    }
    for (const auto& r : file.rmatrices) {
        if (r.system != RMatrixSystem::monoidal_Q) continue;
        auto rv = validate_rmatrix(H, r.value, RMatrixSystem::monoidal_Q);
        rep.merge(rv.report);
        if (!rv.rmatrix) continue;
        auto twisted_r = twist_rmatrix(H, tw, *rv.rmatrix, twisted.data);
        rep.merge(twisted_r.report);
        rep.merge(check_qhybe(twisted.data, twisted_r.validated));
        out.rmatrices.push_back({r.name + "_" + twist_name, RMatrixSystem::plain_q, twisted_r.r_sigma});
    }

    if (!out_path.empty()) write_file(out_path, serialize_algebra_file(out));
    maybe_write_report(report_path, rep);
    print_summary(rep);
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_repcheck(const std::string& path, const std::string& grid_spec, const std::string& modules_spec,
                 std::uint64_t seed, const std::string& report_path) {
    using namespace homtwist;
    AlgebraFile file = parse_algebra_file(read_file(path));
    HomBialgebra H = file.to_bialgebra();
    if (!H.alpha_invertible())
        throw PreconditionError("repcheck: the structure map must be invertible");
    GridSpec grid = parse_grid(grid_spec);

    // conservative power-window precheck for the whole sweep
    int need = 0;
    for (int i : {grid.i_lo, grid.i_hi})
        for (int j : {grid.j_lo, grid.j_hi}) {
            need = std::max(need, 2 * std::abs(i));
            need = std::max(need, 2 * std::abs(j));
            need = std::max(need, std::abs(i + j));
            need = std::max(need, std::abs(i + 3) + 2);
            need = std::max(need, std::abs(j + 3) + 2);
        }
    if (need > H.window())
        throw AlphaWindowExceeded("repcheck: grid needs alpha power " + std::to_string(need) +
                                  ", window is " + std::to_string(H.window()));

    std::vector<HomModule> modules;
    {
        std::istringstream ms(modules_spec);
        std::string tok;
        while (std::getline(ms, tok, ',')) {
            if (tok == "trivial") modules.push_back(trivial_module(H));
            else if (tok == "regular") modules.push_back(regular_module(H));
            else if (tok == "random") modules.push_back(seeded_random_module(H, seed));
            else throw PreconditionError("repcheck: unknown module kind '" + tok + "'");
        }
    }
    if (modules.empty()) throw PreconditionError("repcheck: empty module set");

    std::optional<RMatrixData> rm;
    for (const auto& r : file.rmatrices) {
        RMatrixSystem want = H.flavor() == Flavor::monoidal ? RMatrixSystem::monoidal_Q : RMatrixSystem::plain_q;
        if (r.system != want) continue;
        auto rv = validate_rmatrix(H, r.value, want);
        if (rv.rmatrix) {
            rm = *rv.rmatrix;
            break;
        }
    }

    VerificationReport rep;
    MorphismTable morphisms = solve_morphism_table(modules);
    for (int i = grid.i_lo; i <= grid.i_hi; ++i)
        for (int j = grid.j_lo; j <= grid.j_hi; ++j) {
            RepConfig cfg{i, j, H.flavor()};
            VerificationReport point =
                check_category_coherence(H, cfg, modules, rm ? &*rm : nullptr, &morphisms);
            for (auto& c : point.checks) c.id += "@(" + std::to_string(i) + "," + std::to_string(j) + ")";
            rep.merge(point);
        }

    // index-shift functor between the grid corners and the origin
    {
        RepConfig from{grid.i_lo, grid.j_hi, H.flavor()};
        RepConfig to{grid.i_hi, grid.j_lo, H.flavor()};
        rep.merge(check_index_shift_functor(H, from, to, modules, rm ? &*rm : nullptr));
    }

    // twist-functor squares when the file carries validated twists
    if (H.flavor() == Flavor::monoidal) {
        for (const auto& t : file.twists) {
            auto v = validate_twist(H, t.value);
            if (!v.twist) continue;
            TwistedBialgebra twisted = build_twisted_bialgebra(H, *v.twist);
            std::optional<RMatrixData> rm_tw;
            if (rm) {
                auto tr = twist_rmatrix(H, *v.twist, *rm, twisted.data);
                rm_tw = tr.validated;
            }
            auto g = check_twist_functor(H, *v.twist, twisted.data, RepConfig{0, 0, Flavor::monoidal}, modules,
                                         rm ? &*rm : nullptr, rm_tw ? &*rm_tw : nullptr, true);
            for (auto& c : g.report.checks) c.id = "twist(" + t.name + ")." + c.id;
            rep.merge(g.report);
            std::string shifts;
            for (int s : g.commuting_shifts) shifts += (shifts.empty() ? "" : ",") + std::to_string(s);
            CheckRecord rec{"twist(" + t.name + ").functor_twist.shift_probe",
                            "index shifts whose squares commute (stated shift is 3)",
                            !g.commuting_shifts.empty() &&
                                std::find(g.commuting_shifts.begin(), g.commuting_shifts.end(), 3) !=
                                    g.commuting_shifts.end(),
                            "", "shifts=" + shifts, 0};
            rep.add(std::move(rec));
        }
    }

    maybe_write_report(report_path, rep);
    print_summary(rep);
    return rep.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_export_example(const std::string& name, const std::string& out_path) {
    using namespace homtwist;
    const NamedInstance* inst = find_instance(name);
    if (inst == nullptr) {
        std::cerr << "unknown example '" << name << "'; available:";
        for (const auto& i : builtin_instances()) std::cerr << " " << i.name;
        std::cerr << "\n";
        return kExitParseError;
    }
    write_file(out_path, serialize_algebra_file(algebra_file_from(*inst)));
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and twisting of finite-dimensional Hom-bialgebras"};
    app.require_subcommand(1);

    std::string path, suite = "all", report_path, twist_name, out_path;
    std::string grid_spec = "-2..2,-2..2", modules_spec = "trivial,regular,random", name;
    std::uint64_t seed = 1;

    auto* verify = app.add_subcommand("verify", "run axiom suites on a structure file");
    verify->add_option("path", path, "algebra file")->required();
    verify->add_option("--suite", suite, "algebra|coalgebra|bialgebra|hopf|module|all")
        ->check(CLI::IsMember({"algebra", "coalgebra", "bialgebra", "hopf", "module", "all"}));
    verify->add_option("--report", report_path, "write a report file");

    auto* twist = app.add_subcommand("twist", "twist the coproduct by a named element");
    twist->add_option("path", path, "algebra file")->required();
    twist->add_option("--twist", twist_name, "name of the twisting element")->required();
    twist->add_option("--out", out_path, "write the twisted structure file");
    twist->add_option("--report", report_path, "write a report file");

    auto* repcheck = app.add_subcommand("repcheck", "representation-category coherence sweep");
    repcheck->add_option("path", path, "algebra file")->required();
    repcheck->add_option("--grid", grid_spec, "index grid 'i0..i1,j0..j1'");
    repcheck->add_option("--modules", modules_spec, "comma list of trivial,regular,random");
    repcheck->add_option("--seed", seed, "seed for the random module");
    repcheck->add_option("--report", report_path, "write a report file");

    auto* exporter = app.add_subcommand("export-example", "write a built-in example to a file");
    exporter->add_option("name", name, "example name")->required();
    exporter->add_option("--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(path, suite, report_path);
        if (twist->parsed()) return cmd_twist(path, twist_name, out_path, report_path);
        if (repcheck->parsed()) return cmd_repcheck(path, grid_spec, modules_spec, seed, report_path);
        if (exporter->parsed()) return cmd_export_example(name, out_path);
    } catch (const homtwist::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const homtwist::AlphaWindowExceeded& e) {
        std::cerr << "window error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const homtwist::PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const homtwist::MissingStructure& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const homtwist::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}
