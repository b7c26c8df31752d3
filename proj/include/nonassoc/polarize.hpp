#pragma once

#include <utility>
#include <vector>

#include "nonassoc/polynomial.hpp"

namespace nonassoc {

// A polynomial before canonicalization: trees whose leaves may repeat
// variables. This is the form the parser produces and polarize consumes.
struct RawPoly {
    OpAlphabet alphabet;
    std::vector<std::pair<Rat, TreePtr>> terms;
};

// True when every term uses each of x1..xd exactly once (d = leaf count).
bool is_multilinear(const RawPoly& p);

// Canonicalizes a multilinear RawPoly into a Polynomial.
Polynomial to_polynomial(const RawPoly& p);

// Full linearization over a field of characteristic zero: every variable
// occurring k > 1 times is replaced by a sum of k fresh variables and the
// component that is linear in each is kept. Terms are grouped by their
// variable-occurrence signature and each group linearizes to one multilinear
// polynomial; already-multilinear input comes back unchanged (one entry).
//
// Relabelling: distinct original variables are renumbered 1..m preserving
// order, and the extra copies of repeated variables take the indices
// m+1, m+2, ... in order of the original variable they copy. So the Malcev
// identity in x, y, z with x twice becomes multilinear in x1..x4 with the
// copies of x at x1 and x4.
std::vector<Polynomial> polarize(const RawPoly& p);

inline std::vector<Polynomial> polarize(const Polynomial& p) {
    RawPoly raw;
    raw.alphabet = p.alphabet();
    for (const auto& [m, c] : p.terms()) raw.terms.emplace_back(c, p.tree_of(m));
    return polarize(raw);
}

}  // namespace nonassoc
