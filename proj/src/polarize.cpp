#include "nonassoc/polarize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nonassoc {

bool is_multilinear(const RawPoly& p) {
    for (const auto& [c, t] : p.terms) {
        std::vector<int> vars;
        collect_leaf_vars(*t, vars);
        const int d = static_cast<int>(vars.size());
        std::vector<bool> seen(d + 1, false);
        for (int v : vars) {
            if (v < 1 || v > d || seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

Polynomial to_polynomial(const RawPoly& p) {
    if (p.terms.empty()) return Polynomial(0, p.alphabet);
    int d = leaf_count(*p.terms.front().second);
    Polynomial out(d, p.alphabet);
    for (const auto& [c, t] : p.terms) out.add_term(t, c);
    return out;
}

namespace {

// occurrence signature of a term: sorted list of (variable, multiplicity)
using Signature = std::vector<std::pair<int, int>>;

Signature signature_of(const TreePtr& t) {
    std::vector<int> vars;
    collect_leaf_vars(*t, vars);
    std::map<int, int> mult;
    for (int v : vars) ++mult[v];
    return Signature(mult.begin(), mult.end());
}

// Replaces the i-th occurrence (left to right) of each variable by the
// label assignment[var][i].
TreePtr relabel_occurrences(const TreePtr& t, std::map<int, std::vector<int>>& cursor,
                            const std::map<int, std::vector<int>>& assignment) {
    if (t->is_leaf()) {
        auto& used = cursor[t->var];
        const auto& labels = assignment.at(t->var);
        int idx = static_cast<int>(used.size());
        used.push_back(0);
        return leaf(labels[idx]);
    }
    TreePtr l = relabel_occurrences(t->left, cursor, assignment);
    TreePtr r = relabel_occurrences(t->right, cursor, assignment);
    return node(t->op, std::move(l), std::move(r));
}

}  // namespace

std::vector<Polynomial> polarize(const RawPoly& p) {
    // group terms by signature; each group is one multihomogeneous component
    std::map<Signature, std::vector<std::pair<Rat, TreePtr>>> groups;
    for (const auto& term : p.terms) groups[signature_of(term.second)].push_back(term);

    std::vector<Polynomial> out;
    for (const auto& [sig, terms] : groups) {
        const int m = static_cast<int>(sig.size());
        int d = 0;
        for (const auto& [v, k] : sig) d += k;
        // labels for each original variable: its renumbered index plus fresh
        // indices m+1.. for the extra copies, in original-variable order
        std::map<int, std::vector<int>> labels;
        int fresh = m + 1;
        for (int i = 0; i < m; ++i) {
            const auto& [v, k] = sig[i];
            std::vector<int> ls{i + 1};
            for (int j = 1; j < k; ++j) ls.push_back(fresh++);
            labels[v] = ls;
        }
        Polynomial lin(d, p.alphabet);
        for (const auto& [c, t] : terms) {
            // sum over all assignments of the label sets to the occurrences
            std::map<int, std::vector<int>> assignment = labels;  // start at identity order
            for (auto& [v, ls] : assignment) std::sort(ls.begin(), ls.end());
            // iterate the product of permutations of each label set
            std::vector<std::map<int, std::vector<int>>::iterator> its;
            for (auto it = assignment.begin(); it != assignment.end(); ++it) its.push_back(it);
            bool done = false;
            while (!done) {
                std::map<int, std::vector<int>> cursor;
                lin.add_term(relabel_occurrences(t, cursor, assignment), c);
                // advance: next_permutation odometer over the label sets
                std::size_t pos = 0;
                for (; pos < its.size(); ++pos) {
                    if (std::next_permutation(its[pos]->second.begin(), its[pos]->second.end()))
                        break;
                }
                if (pos == its.size()) done = true;
            }
        }
        out.push_back(std::move(lin));
    }
    return out;
}

}  // namespace nonassoc
