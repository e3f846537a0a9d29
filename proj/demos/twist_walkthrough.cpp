// Walkthrough: build the four-dimensional example with the scaling
// automorphism at -1, twist its coproduct by the grouplike bicharacter,
// and print what changes.

#include <iostream>

#include "homtwist/homtwist.hpp"

using namespace homtwist;

namespace {

std::string show(const HomBialgebra& H, const Tensor2& t) {
    std::string out;
    for (const auto& [k, v] : t.coeffs()) {
        if (!out.empty()) out += " + ";
        std::string c = to_string(v);
        out += (c == "1" ? "" : c + "*") + H.basis_names()[k[0]] + "(x)" + H.basis_names()[k[1]];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main() {
    NamedInstance inst = instance_sweedler(Rational(-1));
    const HomBialgebra& H = inst.monoidal;

    std::cout << "carrier: " << inst.name << ", dim " << H.dim() << "\n";
    std::cout << "coproduct of x: " << show(H, H.delta_basis(2)) << "\n\n";

    for (const auto& cand : inst.twists) {
        auto v = validate_twist(H, cand.sigma);
        std::cout << "twist '" << cand.name << "': " << (v.twist ? "valid" : "rejected") << "\n";
        if (!v.twist) continue;
        TwistedBialgebra twisted = build_twisted_bialgebra(H, *v.twist);
        std::cout << "  twisted coproduct of x: " << show(H, twisted.data.delta_basis(2)) << "\n";
        auto anti = twist_antipode(H, *v.twist, twisted.data);
        std::cout << "  antipode word bracketing: " << anti.bracket << "\n";
    }

    auto r0 = validate_rmatrix(H, inst.rmatrices[0].r, RMatrixSystem::monoidal_Q);
    if (r0.rmatrix) {
        auto qh = check_qhybe(H, *r0.rmatrix);
        std::cout << "\nR-matrix '" << inst.rmatrices[0].name << "' Yang-Baxter forms: "
                  << (qh.all_pass() ? "hold" : "fail") << "\n";
    }
    return 0;
}
