#pragma once

#include <string>
#include <vector>

#include "nonassoc/polarize.hpp"
#include "nonassoc/polynomial.hpp"

namespace nonassoc {

// Formal words in left/right multiplication operators with polynomial
// subscripts, as they appear in representation identities and bimodule
// axioms: L_p(t) = p . t and R_p(t) = t . p, extended linearly in the
// subscript, composed right to left. Bimodule actions l, r instantiate to
// L, R in the regular representation. Subscripts are raw term lists since
// they use fragments of the variable range (e.g. L_{[z,x]} mentions x3, x1).
struct OpFactor {
    enum Kind { L, R } kind;
    std::vector<std::pair<Rat, TreePtr>> subscript;
};

struct OperatorTerm {
    Rat coeff;
    std::vector<OpFactor> word;  // applied right to left
};

struct OperatorPoly {
    std::vector<OperatorTerm> terms;
};

// Applies the operator polynomial to the variable x_argument using the
// given product operation. Subscript variables must not collide with the
// argument or with each other across one word; degrees add up.
Polynomial operator_word_to_poly(const OperatorPoly& w, int argument,
                                 const OpAlphabet& alphabet, const std::string& product_op);

}  // namespace nonassoc
