#include <doctest.h>

#include <random>

#include "nonassoc/catalog.hpp"
#include "nonassoc/io.hpp"
#include "nonassoc/split.hpp"

using namespace nonassoc;

namespace {

Polynomial poly(const OpAlphabet& a, const std::string& expr) {
    return to_polynomial(parse_poly_expr(expr, a));
}

}  // namespace

TEST_CASE("split alphabet doubles and keeps order") {
    OpAlphabet d = split_alphabet(OpAlphabet({"prec", "succ"}));
    CHECK(d.names() == std::vector<std::string>{"prec_prec", "prec_succ", "succ_prec",
                                                "succ_succ"});
}

TEST_CASE("disuccessor of associativity gives the dendriform axioms") {
    const OpAlphabet mul({"mul"});
    const OpAlphabet split = split_alphabet(mul);  // mul_prec, mul_succ
    Polynomial assoc = poly(mul, "mul(mul(x1,x2),x3) - mul(x1,mul(x2,x3))");
    auto parts = disuccessor(assoc);
    REQUIRE(parts.size() == 3);
    // k = 1: (x<y)<z - x<(y<z) - x<(y>z)
    CHECK(parts[0] == poly(split,
                           "mul_prec(mul_prec(x1,x2),x3) - mul_prec(x1,mul_prec(x2,x3))"
                           " - mul_prec(x1,mul_succ(x2,x3))"));
    // k = 2: (x>y)<z - x>(y<z)
    CHECK(parts[1] == poly(split,
                           "mul_prec(mul_succ(x1,x2),x3) - mul_succ(x1,mul_prec(x2,x3))"));
    // k = 3: (x<y)>z + (x>y)>z - x>(y>z)
    CHECK(parts[2] == poly(split,
                           "mul_succ(mul_prec(x1,x2),x3) + mul_succ(mul_succ(x1,x2),x3)"
                           " - mul_succ(x1,mul_succ(x2,x3))"));
}

TEST_CASE("degree-1 identity splits to itself") {
    const OpAlphabet mul({"mul"});
    Polynomial x(1, mul);
    x.add_term(leaf(1), Rat(1));
    auto parts = disuccessor(x);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].term_count() == 1);
    CHECK(parts[0].degree() == 1);
}

TEST_CASE("collapse: the k-components sum to the sum-rule expansion") {
    for (const auto& entry : catalog_systems()) {
        ExpansionRule sum = split_sum_rule(entry.system.alphabet);
        for (const auto& f : entry.system.identities) {
            Polynomial total(f.degree(), split_alphabet(f.alphabet()));
            for (const auto& part : disuccessor(f)) total += part;
            CHECK(total == expand(sum, f));
        }
    }
}

TEST_CASE("disuccessor commutes with the action up to reindexing") {
    std::mt19937 rng(23);
    const auto& pm = get_system("pre-malcev").identities[0];
    auto perms = all_permutations(4);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 6; ++trial) {
        auto sigma = perms[pick(rng)];
        for (int k = 1; k <= 4; ++k)
            CHECK(act(sigma, disuccessor_k(pm, k)) == disuccessor_k(act(sigma, pm), sigma[k - 1]));
    }
}

TEST_CASE("disuccessor_system deduplicates") {
    // a symmetric identity has equal components for symmetric variables
    const OpAlphabet mul({"mul"});
    IdentitySystem sys{"anticomm", mul, {poly(mul, "mul(x1,x2) + mul(x2,x1)")}};
    auto split = disuccessor_system(sys);
    // k=1: x<y + y>x ; k=2: x>y + y<x  -- distinct
    CHECK(split.identities.size() == 2);
    CHECK(split.name == "di-anticomm");
}
