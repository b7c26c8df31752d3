#pragma once

#include <string>
#include <vector>

#include "nonassoc/system.hpp"

namespace nonassoc {

// Expansion map data: for each source operation, a two-slot multilinear
// polynomial over the target alphabet. Slots are the degree-2 variables
// (written s1, s2 in files). A zero slot polynomial is allowed; expansion
// then annihilates every monomial using that operation.
struct ExpansionRule {
    std::string name;
    OpAlphabet source;
    OpAlphabet target;
    std::vector<Polynomial> images;  // one degree-2 polynomial per source op

    void validate() const;  // throws unless every image is two-slot multilinear
};

// The identity rule on an alphabet (each op maps to itself).
ExpansionRule identity_rule(const OpAlphabet& alphabet);

// E_d: replaces every vertex labelled w by the rule polynomial for w,
// recursively. The result is multilinear of the same degree over the target
// alphabet.
Polynomial expand(const ExpansionRule& rule, const Polynomial& p);

}  // namespace nonassoc
