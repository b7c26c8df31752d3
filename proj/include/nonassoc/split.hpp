#pragma once

#include <string>
#include <vector>

#include "nonassoc/expansion.hpp"
#include "nonassoc/system.hpp"

namespace nonassoc {

// The doubled alphabet of the disuccessor: each source operation w turns
// into the pair (w_prec, w_succ), listed in source order.
OpAlphabet split_alphabet(const OpAlphabet& source);

// The disuccessor of a multilinear identity f of degree d: one identity per
// distinguished variable x_k. Each vertex of each monomial is relabelled
// along the root-to-x_k path: w_prec where the path turns left, w_succ
// where it turns right, and the sum w_prec + w_succ at vertices the path
// avoids.
std::vector<Polynomial> disuccessor(const Polynomial& f);
Polynomial disuccessor_k(const Polynomial& f, int k);

// Union of disuccessor(f) over the system, deduplicated, over the doubled
// alphabet. The system name gains a "di-" prefix.
IdentitySystem disuccessor_system(const IdentitySystem& sys);

// The collapse rule w -> s1 w_prec s2 + s1 w_succ s2; summing the d
// disuccessor components of f gives exactly expand(split_sum_rule, f).
ExpansionRule split_sum_rule(const OpAlphabet& source);

}  // namespace nonassoc
