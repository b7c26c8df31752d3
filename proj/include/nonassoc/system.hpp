#pragma once

#include <string>
#include <vector>

#include "nonassoc/polarize.hpp"
#include "nonassoc/polynomial.hpp"

namespace nonassoc {

// A named family of multilinear identities over one alphabet, asserted to
// vanish. Mixed degrees are allowed (anticommutativity next to Sagle).
struct IdentitySystem {
    std::string name;
    OpAlphabet alphabet;
    std::vector<Polynomial> identities;

    int max_degree() const {
        int d = 0;
        for (const auto& f : identities) d = std::max(d, f.degree());
        return d;
    }
};

// Rebuilds a polynomial over a renamed alphabet. `to` must list one new name
// per operation of p's alphabet, in the same positional order; the target
// alphabet may order those names differently.
Polynomial rename_ops(const Polynomial& p, const std::vector<std::string>& to,
                      const OpAlphabet& target);

IdentitySystem rename_ops(const IdentitySystem& sys, const std::vector<std::string>& to,
                          const OpAlphabet& target);

}  // namespace nonassoc
