#include <doctest.h>

#include <algorithm>

#include "nonassoc/catalog.hpp"
#include "nonassoc/io.hpp"
#include "nonassoc/lifting.hpp"

using namespace nonassoc;

TEST_CASE("catalog basics") {
    const auto& pm = get_system("pre-malcev");
    CHECK(pm.identities.size() == 1);
    CHECK(pm.identities[0].degree() == 4);
    CHECK(pm.identities[0].term_count() == 10);

    const auto& aq = get_system("alt-quadri");
    CHECK(aq.identities.size() == 9);
    CHECK(aq.alphabet.size() == 4);
    for (const auto& f : aq.identities) CHECK(f.degree() == 3);

    CHECK(get_system("m-dendriform").identities.size() == 4);
    CHECK(get_system("j-dendriform").identities.size() == 5);
    CHECK(get_system("pre-jordan").identities.size() == 2);
    CHECK_THROWS_WITH_AS(get_system("nope"), doctest::Contains("available"),
                         std::invalid_argument);
    CHECK_THROWS(get_rule("nope"));
}

TEST_CASE("every catalog identity is canonicalized and multilinear") {
    for (const auto& e : catalog_systems()) {
        for (const auto& f : e.system.identities) {
            CHECK(!f.is_zero());
            CHECK(f.alphabet() == e.system.alphabet);
            // add_term validates the leaf permutation, so converting the
            // coefficient vector back must reproduce the polynomial
            CHECK(Polynomial::from_coefficient_vector(
                      f.degree(), f.alphabet(), f.coefficient_vector()) == f);
        }
    }
}

TEST_CASE("rules: dendriform commutator on a product") {
    const auto& rule = get_rule("dendriform-commutator");
    Polynomial p = to_polynomial(parse_poly_expr("mul(x1,x2)", rule.source));
    CHECK(expand(rule, p) ==
          to_polynomial(parse_poly_expr("succ(x1,x2) - prec(x2,x1)", rule.target)));
}

TEST_CASE("malcev raw form polarizes to the stored identity") {
    const auto& entry = get_entry("malcev");
    REQUIRE(entry.raw_forms.size() == 1);
    auto parts = polarize(entry.raw_forms[0]);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == entry.system.identities[1]);
}

TEST_CASE("alt-dendriform: lower-row identities are consequences of the rest") {
    const auto& sys = get_system("alt-dendriform");
    const std::size_t ambient = Polynomial::monomial_count(3, 2);
    auto perms = all_permutations(3);
    for (std::size_t lower : {2u, 3u}) {
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < sys.identities.size(); ++i) {
            if (i == lower) continue;
            for (const auto& s : perms) rows.push_back(coeffs<Rat>(act(s, sys.identities[i])));
        }
        CHECK(RowSpace<Rat>::span(ambient, rows).contains(coeffs<Rat>(sys.identities[lower])));
    }
}

TEST_CASE("alt-quadri: independence structure of the nine identities") {
    // The nine identity vectors are linearly independent, and no identity
    // lies in the S3-module of any single other one. Identities 2 and 9
    // (the r/r-swap and l/l-swap pairs) are each consequences of the
    // remaining eight, exactly like the lower row of the alternative
    // dendriform axioms, but the two cannot be dropped together.
    const auto& sys = get_system("alt-quadri");
    const std::size_t ambient = Polynomial::monomial_count(3, 4);
    auto perms = all_permutations(3);

    std::vector<std::vector<Rat>> plain;
    for (const auto& f : sys.identities) plain.push_back(coeffs<Rat>(f));
    CHECK(RowSpace<Rat>::span(ambient, plain).rank() == 9);

    auto span_without = [&](std::vector<std::size_t> skip) {
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < sys.identities.size(); ++i) {
            if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
            for (const auto& s : perms) rows.push_back(coeffs<Rat>(act(s, sys.identities[i])));
        }
        return RowSpace<Rat>::span(ambient, rows);
    };
    for (std::size_t drop = 0; drop < 9; ++drop) {
        bool redundant =
            span_without({drop}).contains(coeffs<Rat>(sys.identities[drop]));
        CHECK(redundant == (drop == 1 || drop == 8));
    }
    auto seven = span_without({1, 8});
    CHECK(!seven.contains(coeffs<Rat>(sys.identities[1])));
    CHECK(!seven.contains(coeffs<Rat>(sys.identities[8])));
    // pairwise: no identity lies in the module of a single other one
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            if (i == j) continue;
            std::vector<std::vector<Rat>> rows;
            for (const auto& s : perms) rows.push_back(coeffs<Rat>(act(s, sys.identities[j])));
            CHECK(!RowSpace<Rat>::span(ambient, rows).contains(coeffs<Rat>(sys.identities[i])));
        }
}

TEST_CASE("bimodule axioms instantiate to polynomials in the PM span") {
    const auto& axioms = premalcev_bimodule_axioms();
    REQUIRE(axioms.size() == 4);
    const auto& pm = get_system("pre-malcev").identities[0];
    std::vector<std::vector<Rat>> rows;
    for (const auto& s : all_permutations(4)) rows.push_back(coeffs<Rat>(act(s, pm)));
    auto span = RowSpace<Rat>::span(120, rows);
    const OpAlphabet mul({"mul"});
    for (const auto& w : axioms) {
        Polynomial p = operator_word_to_poly(w, 4, mul, "mul");
        CHECK(!p.is_zero());
        CHECK(span.contains(coeffs<Rat>(p)));
    }
}
