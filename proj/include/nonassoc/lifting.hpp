#pragma once

#include <set>
#include <string>
#include <vector>

#include "nonassoc/expansion.hpp"
#include "nonassoc/rowspace.hpp"
#include "nonassoc/system.hpp"

namespace nonassoc {

// The degree d+1 liftings of a multilinear identity f of degree d: for each
// operation w and each i, f with x_i replaced by w(x_i, x_{d+1}), plus the
// outer products w(f, x_{d+1}) and w(x_{d+1}, f). The mirrored substitution
// w(x_{d+1}, x_i) is the transposition (i, d+1) applied to a listed one, so
// the S_{d+1} action recovers it; it is not generated separately.
// Duplicates are removed after scale normalization, first occurrence kept.
std::vector<Polynomial> liftings(const Polynomial& f);

// All iterated liftings of the system's identities that land in degree D,
// in catalog order (identities in system order, liftings in generation
// order, one degree at a time), deduplicated. Identities already of degree
// D are included directly.
std::vector<Polynomial> lifting_generators(const IdentitySystem& sys, int D);

// L_D: the S_D-module spanned by all permutations of the lifting
// generators, as a row space in the degree-D monomial basis.
template <class F>
RowSpace<F> lifting_module(const IdentitySystem& sys, int D);

// The lifting generators with module-redundant ones removed: a generator is
// kept only when its permutations enlarge the span of the kept ones. For
// the alternative dendriform identities lifted to degree 4 this reproduces
// the 25 generators behind the 720 x 1080 block.
template <class F>
std::vector<Polynomial> pruned_lifting_generators(const IdentitySystem& sys, int D);

// The "basic identities" of L_D: the leading linearly independent rows
// among the permuted lifting generators, in canonical order (generators in
// catalog order, permutations lexicographic). Unlike the RREF basis these
// are actual lifting polynomials, so coordinates with respect to them are
// meaningful combinations of liftings.
template <class F>
std::vector<std::vector<F>> basic_lifting_rows(const IdentitySystem& sys, int D);

// ---- helpers shared by the module computations ----

template <class F>
std::vector<F> to_field_vector(const std::vector<Rat>& v) {
    std::vector<F> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(FieldOps<F>::from_rat(c));
    return out;
}

template <class F>
std::vector<F> coeffs(const Polynomial& p) {
    return to_field_vector<F>(p.coefficient_vector());
}

// implementation

template <class F>
RowSpace<F> lifting_module(const IdentitySystem& sys, int D) {
    const int q = static_cast<int>(sys.alphabet.size());
    const std::size_t ambient = Polynomial::monomial_count(D, q);
    std::vector<std::vector<F>> rows;
    auto perms = all_permutations(D);
    for (const auto& g : lifting_generators(sys, D))
        for (const auto& s : perms) rows.push_back(coeffs<F>(act(s, g)));
    return RowSpace<F>::span(ambient, rows);
}

template <class F>
std::vector<Polynomial> pruned_lifting_generators(const IdentitySystem& sys, int D) {
    const int q = static_cast<int>(sys.alphabet.size());
    const std::size_t ambient = Polynomial::monomial_count(D, q);
    auto perms = all_permutations(D);
    IncrementalBasis<F> span(ambient);
    std::vector<Polynomial> kept;
    for (const auto& g : lifting_generators(sys, D)) {
        IncrementalBasis<F> probe = span;
        bool grows = false;
        for (const auto& s : perms)
            if (probe.add(coeffs<F>(act(s, g)))) grows = true;
        if (grows) {
            kept.push_back(g);
            span = std::move(probe);
        }
    }
    return kept;
}

template <class F>
std::vector<std::vector<F>> basic_lifting_rows(const IdentitySystem& sys, int D) {
    const int q = static_cast<int>(sys.alphabet.size());
    const std::size_t ambient = Polynomial::monomial_count(D, q);
    auto perms = all_permutations(D);
    IncrementalBasis<F> sel(ambient);
    std::vector<std::vector<F>> basic;
    for (const auto& g : lifting_generators(sys, D))
        for (const auto& s : perms) {
            std::vector<F> v = coeffs<F>(act(s, g));
            if (sel.add(v)) basic.push_back(std::move(v));
        }
    return basic;
}

}  // namespace nonassoc
