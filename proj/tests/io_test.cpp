#include <doctest.h>

#include <sstream>

#include "nonassoc/catalog.hpp"
#include "nonassoc/io.hpp"

using namespace nonassoc;

TEST_CASE("expression parsing handles coefficients and signs") {
    OpAlphabet mul({"mul"});
    auto p = to_polynomial(parse_poly_expr("2 mul(x1,x2) - 1/3 mul(x2,x1)", mul));
    CHECK(p.term_count() == 2);
    auto back = parse_poly_expr(poly_expr(p), mul);
    CHECK(to_polynomial(back) == p);
    CHECK(to_polynomial(parse_poly_expr("0", mul)).is_zero());
    CHECK_THROWS(parse_poly_expr("mul(x1)", mul));
    CHECK_THROWS(parse_poly_expr("frob(x1,x2)", mul));
}

TEST_CASE("term-per-line round trip for every catalog identity") {
    for (const auto& e : catalog_systems()) {
        for (const auto& f : e.system.identities) {
            std::istringstream in(poly_lines(f));
            RawPoly raw = parse_poly_lines(in, f.alphabet());
            CHECK(to_polynomial(raw) == f);
        }
    }
}

TEST_CASE("system files round trip") {
    const auto& sys = get_system("alt-dendriform");
    std::ostringstream out;
    write_system(out, sys);
    std::istringstream in(out.str());
    IdentitySystem back = read_system(in);
    CHECK(back.name == sys.name);
    CHECK(back.alphabet == sys.alphabet);
    REQUIRE(back.identities.size() == sys.identities.size());
    for (std::size_t i = 0; i < back.identities.size(); ++i)
        CHECK(back.identities[i] == sys.identities[i]);
}

TEST_CASE("rule files round trip") {
    const auto& rule = get_rule("m-dendriform-extraction");
    std::ostringstream out;
    write_rule(out, rule);
    std::istringstream in(out.str());
    ExpansionRule back = read_rule(in);
    CHECK(back.source == rule.source);
    CHECK(back.target == rule.target);
    REQUIRE(back.images.size() == rule.images.size());
    for (std::size_t i = 0; i < back.images.size(); ++i)
        CHECK(back.images[i] == rule.images[i]);
}

TEST_CASE("non-multilinear system input is rejected") {
    std::istringstream in(
        "system bad\n"
        "ops mul\n"
        "identity\n"
        "1 ; mul(x1,x1)\n");
    CHECK_THROWS(read_system(in));
}
