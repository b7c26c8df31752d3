#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nonassoc/lifting.hpp"

namespace nonassoc {

// Outcome of the degree-d new-identity computation for one system and one
// expansion rule: the row space { f in A_d(source) : E_d(f) in L_d }, the
// raw rows of the block elimination that produced it, and a minimal
// generator subset of the module.
template <class F>
struct NewIdentityReport {
    int degree = 0;
    std::size_t block_rows = 0, block_cols = 0;
    std::size_t generator_count = 0;          // lifting generators in block A
    std::vector<Polynomial> new_identities;   // right-block rows, symmetric-lifted
    RowSpace<F> module;                       // their span, source-monomial coords
    std::vector<Polynomial> minimal_generators;

    NewIdentityReport() : module(0) {}
};

// Greedy generator minimization. Candidates are sorted by term count, ties
// by canonical polynomial order; elimination then walks that list from the
// most-term end and drops g whenever g lies in the S_d-span of the
// surviving others together with the context space. Each survivor is
// re-tested at the end, so the returned set is certified minimal: no
// member is a consequence of the rest.
template <class F>
std::vector<Polynomial> minimize_generators(std::vector<Polynomial> identities,
                                            const RowSpace<F>& context);

// Builds the block matrix
//     [ A | Z ]      A: permutations of the lifting generators, target cols
//     [ E | I ]      E: expansions of the source monomials, I: identity
// and reads the rows of its RREF whose leading 1 falls in the right block;
// those right-block rows span { f : E_d(f) in L_d }. Every reported row is
// re-checked against an independently computed lifting module.
// A precomputed lifting_module(sys, degree) may be passed to spare the
// soundness re-check its own elimination; it must match exactly.
template <class F>
NewIdentityReport<F> find_new_identities(const IdentitySystem& sys, const ExpansionRule& rule,
                                         int degree,
                                         const RowSpace<F>* precomputed_lifting_module = nullptr,
                                         Mat<F>* dump_block_matrix = nullptr);

// Membership of target (expanded through rule when given) in
// lifting_module(sys, deg target).
template <class F>
bool is_consequence(const Polynomial& target, const IdentitySystem& sys,
                    const ExpansionRule* rule = nullptr);

// Brute-force route to the same module, for the degree-3 oracle check: the
// kernel of the map f -> (E_d(f) mod L_d), computed by solving the linear
// system directly with a nullspace read-off instead of the block trick.
template <class F>
RowSpace<F> new_identities_bruteforce(const IdentitySystem& sys, const ExpansionRule& rule,
                                      int degree);

// ---------------------------------------------------------------- impl

template <class F>
std::vector<Polynomial> minimize_generators(std::vector<Polynomial> identities,
                                            const RowSpace<F>& context) {
    if (identities.empty()) return identities;
    const int d = identities.front().degree();
    const OpAlphabet alpha = identities.front().alphabet();
    for (const auto& f : identities)
        if (f.degree() != d || f.alphabet() != alpha)
            throw std::invalid_argument("minimize_generators: mixed degrees or alphabets");

    std::stable_sort(identities.begin(), identities.end(),
                     [](const Polynomial& a, const Polynomial& b) {
                         if (a.term_count() != b.term_count())
                             return a.term_count() < b.term_count();
                         return a.compare(b) < 0;
                     });
    auto perms = all_permutations(d);
    auto span_without = [&](const std::vector<Polynomial>& gens, std::size_t skip) {
        std::vector<std::vector<F>> rows;
        for (std::size_t i = 0; i < context.rank(); ++i)
            rows.push_back(context.basis().row(i));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i == skip) continue;
            for (const auto& s : perms) rows.push_back(coeffs<F>(act(s, gens[i])));
        }
        return RowSpace<F>::span(context.ambient(), rows);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = identities.size(); i-- > 0;) {
            RowSpace<F> rest = span_without(identities, i);
            if (rest.contains(coeffs<F>(identities[i]))) {
                identities.erase(identities.begin() + i);
                changed = true;
            }
        }
    }
    // certification pass: minimality means no survivor is redundant
    for (std::size_t i = 0; i < identities.size(); ++i) {
        if (span_without(identities, i).contains(coeffs<F>(identities[i])))
            throw std::logic_error("minimize_generators: certification failed");
    }
    return identities;
}

template <class F>
NewIdentityReport<F> find_new_identities(const IdentitySystem& sys, const ExpansionRule& rule,
                                         int degree,
                                         const RowSpace<F>* precomputed_lifting_module,
                                         Mat<F>* dump_block_matrix) {
    if (rule.target != sys.alphabet)
        throw std::invalid_argument("find_new_identities: rule target != system alphabet");
    const int d = degree;
    const int q_src = static_cast<int>(rule.source.size());
    const int q_tgt = static_cast<int>(sys.alphabet.size());
    const std::size_t n_src = Polynomial::monomial_count(d, q_src);
    const std::size_t n_tgt = Polynomial::monomial_count(d, q_tgt);

    std::vector<Polynomial> gens = lifting_generators(sys, d);
    auto perms = all_permutations(d);

    Mat<F> block(gens.size() * perms.size() + n_src, n_tgt + n_src);
    std::size_t r = 0;
    for (const auto& g : gens) {
        for (const auto& s : perms) {
            std::vector<F> row = coeffs<F>(act(s, g));
            for (std::size_t j = 0; j < n_tgt; ++j) block.at(r, j) = row[j];
            ++r;
        }
    }
    for (std::size_t j = 0; j < n_src; ++j) {
        Polynomial mono(d, rule.source);
        mono.add_term(Polynomial::monomial_at(j, d, q_src), Rat(1));
        std::vector<F> row = coeffs<F>(expand(rule, mono));
        for (std::size_t k = 0; k < n_tgt; ++k) block.at(r, k) = row[k];
        block.at(r, n_tgt + j) = FieldOps<F>::one();
        ++r;
    }

    NewIdentityReport<F> rep;
    rep.degree = d;
    rep.block_rows = block.rows();
    rep.block_cols = block.cols();
    rep.generator_count = gens.size();
    if (dump_block_matrix) *dump_block_matrix = block;

    RrefResult<F> rr = rref(std::move(block));
    std::vector<std::vector<F>> right_rows;
    for (std::size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] < n_tgt) continue;
        std::vector<F> v(rr.basis.row(i).begin() + n_tgt, rr.basis.row(i).end());
        right_rows.push_back(std::move(v));
    }
    rep.module = RowSpace<F>::span(n_src, right_rows);

    // soundness: re-check each reported row against an independently
    // assembled lifting module
    RowSpace<F> lmod =
        precomputed_lifting_module ? *precomputed_lifting_module : lifting_module<F>(sys, d);
    for (const auto& v : right_rows) {
        std::vector<Rat> rat(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) rat[j] = FieldOps<F>::to_rat(v[j]);
        Polynomial f = Polynomial::from_coefficient_vector(d, rule.source, rat);
        rep.new_identities.push_back(f);
        if (!lmod.contains(coeffs<F>(expand(rule, f))))
            throw std::logic_error("find_new_identities: reported row fails the lifting check");
    }
    rep.minimal_generators =
        minimize_generators<F>(rep.new_identities, RowSpace<F>(n_src));
    return rep;
}

template <class F>
bool is_consequence(const Polynomial& target, const IdentitySystem& sys,
                    const ExpansionRule* rule) {
    Polynomial t = target;
    if (rule) {
        if (target.alphabet() != rule->source)
            throw std::invalid_argument("is_consequence: target not over rule source");
        t = expand(*rule, target);
    }
    if (t.alphabet() != sys.alphabet)
        throw std::invalid_argument("is_consequence: alphabet mismatch");
    return lifting_module<F>(sys, t.degree()).contains(coeffs<F>(t));
}

template <class F>
RowSpace<F> new_identities_bruteforce(const IdentitySystem& sys, const ExpansionRule& rule,
                                      int degree) {
    const int d = degree;
    const int q_src = static_cast<int>(rule.source.size());
    const std::size_t n_src = Polynomial::monomial_count(d, q_src);
    RowSpace<F> lmod = lifting_module<F>(sys, d);

    // residual of each expanded source monomial modulo L_d: subtract the
    // projection onto the lifting module using its pivots
    std::vector<std::vector<F>> residuals;
    for (std::size_t j = 0; j < n_src; ++j) {
        Polynomial mono(d, rule.source);
        mono.add_term(Polynomial::monomial_at(j, d, q_src), Rat(1));
        std::vector<F> v = coeffs<F>(expand(rule, mono));
        for (std::size_t i = 0; i < lmod.rank(); ++i) {
            F a = v[lmod.pivots()[i]];
            if (FieldOps<F>::is_zero(a)) continue;
            F mult = -a;
            row_axpy(v, lmod.basis().row(i), mult, lmod.pivots()[i]);
            v[lmod.pivots()[i]] = FieldOps<F>::zero();
        }
        residuals.push_back(std::move(v));
    }
    // kernel of c -> sum_j c_j residual_j, solved directly
    Mat<F> m(lmod.ambient(), n_src);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n_src; ++j) m.at(i, j) = residuals[j][i];
    return RowSpace<F>::span(n_src, nullspace(m));
}

}  // namespace nonassoc
