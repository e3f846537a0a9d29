#include <catch2/catch_amalgamated.hpp>

#include "homtwist/homtwist.hpp"

using namespace homtwist;

TEST_CASE("serialize then parse reproduces the data bit-exactly") {
    for (const auto& inst : builtin_instances()) {
        AlgebraFile f = algebra_file_from(inst);
        std::string text = serialize_algebra_file(f);
        AlgebraFile g = parse_algebra_file(text);
        REQUIRE(serialize_algebra_file(g) == text);

        HomBialgebra H = g.to_bialgebra();
        REQUIRE(structure_equal(H, inst.monoidal));
        REQUIRE(H.flavor() == inst.monoidal.flavor());
        REQUIRE(g.twists.size() == inst.twists.size());
        REQUIRE(g.rmatrices.size() == inst.rmatrices.size());
        for (size_t i = 0; i < g.twists.size(); ++i) {
            bool found = false;
            for (const auto& t : inst.twists)
                if (t.name == g.twists[i].name && t.sigma == g.twists[i].value) found = true;
            REQUIRE(found);
        }
    }
}

TEST_CASE("serialization is canonical: scrambled input normalizes idempotently") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    AlgebraFile f = algebra_file_from(z2);
    std::string canonical = serialize_algebra_file(f);

    // permute lines that a canonical writer orders (mult block reversed)
    std::istringstream is(canonical);
    std::vector<std::string> lines, mult_lines;
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("mult ", 0) == 0) mult_lines.push_back(line);
        else lines.push_back(line);
    }
    std::string scrambled;
    bool inserted = false;
    for (const auto& l : lines) {
        if (l == "end" && !inserted) {
            for (auto it = mult_lines.rbegin(); it != mult_lines.rend(); ++it) scrambled += *it + "\n";
            inserted = true;
        }
        scrambled += l + "\n";
    }
    AlgebraFile g = parse_algebra_file(scrambled);
    REQUIRE(serialize_algebra_file(g) == canonical);
}

TEST_CASE("parse errors are specific") {
    REQUIRE_THROWS_AS(parse_algebra_file(""), ParseError);
    REQUIRE_THROWS_AS(parse_algebra_file("homtwist algebra 2\ndim 1\nend\n"), ParseError);
    REQUIRE_THROWS_AS(parse_algebra_file("homtwist algebra 1\ndim 2\nbasis 0 a\nbasis 1 b\n"), ParseError);  // no end
    REQUIRE_THROWS_AS(parse_algebra_file("homtwist algebra 1\ndim 2\nbasis 0 a\nbasis 5 b\nend\n"), ParseError);
    REQUIRE_THROWS_AS(parse_algebra_file("homtwist algebra 1\ndim 1\nbasis 0 a\nunit 0 1 0\nend\n"), ParseError);
    REQUIRE_THROWS_AS(parse_algebra_file("homtwist algebra 1\ndim 1\nbasis 0 a\nwhat 1\nend\n"), ParseError);
    REQUIRE_THROWS_AS(parse_algebra_file("homtwist algebra 1\nunit 0 1 1\ndim 1\nbasis 0 a\nend\n"), ParseError);
}

TEST_CASE("report files carry ids, laws, and a consistent summary") {
    NamedInstance z2 = instance_group_algebra(2, 1);
    auto rep = check_hom_bialgebra(z2.monoidal);
    std::string text = serialize_report(rep);
    REQUIRE(text.rfind("homtwist report 1\n", 0) == 0);
    REQUIRE(text.find("check algebra.hom_associativity PASS") != std::string::npos);
    REQUIRE(text.find("law=\"") != std::string::npos);
    int pass = 0;
    for (const auto& c : rep.checks)
        if (c.pass) ++pass;
    REQUIRE(text.find("summary pass " + std::to_string(pass) + " fail 0\n") != std::string::npos);
    REQUIRE(text.find("\nend\n") != std::string::npos);
}
