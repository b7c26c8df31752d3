#include "nonassoc/expansion.hpp"

#include <stdexcept>

namespace nonassoc {

void ExpansionRule::validate() const {
    if (images.size() != source.size())
        throw std::invalid_argument("ExpansionRule: one image per source operation required");
    for (const auto& img : images) {
        if (img.is_zero()) continue;
        if (img.degree() != 2 || img.alphabet() != target)
            throw std::invalid_argument("ExpansionRule: images must be degree-2 over the target");
    }
}

ExpansionRule identity_rule(const OpAlphabet& alphabet) {
    ExpansionRule r;
    r.name = "identity";
    r.source = alphabet;
    r.target = alphabet;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        Polynomial img(2, alphabet);
        img.add_term(node(static_cast<int>(i), leaf(1), leaf(2)), Rat(1));
        r.images.push_back(std::move(img));
    }
    return r;
}

namespace {

using Terms = std::vector<std::pair<Rat, TreePtr>>;

// Replaces the two slot leaves in one pass (a sequential graft would recurse
// into the subtree planted for slot 1).
TreePtr graft_slots(const TreePtr& t, const TreePtr& s1, const TreePtr& s2) {
    if (t->is_leaf()) return t->var == 1 ? s1 : s2;
    return node(t->op, graft_slots(t->left, s1, s2), graft_slots(t->right, s1, s2));
}

// Expands one tree into target-alphabet terms, keeping leaf labels.
Terms expand_tree(const ExpansionRule& rule, const TreePtr& t) {
    if (t->is_leaf()) return {{Rat(1), t}};
    Terms ls = expand_tree(rule, t->left);
    Terms rs = expand_tree(rule, t->right);
    const Polynomial& img = rule.images[t->op];
    Terms out;
    for (const auto& [cl, tl] : ls) {
        for (const auto& [cr, tr] : rs) {
            for (const auto& [mono, c] : img.terms())
                out.emplace_back(c * cl * cr, graft_slots(img.tree_of(mono), tl, tr));
        }
    }
    return out;
}

}  // namespace

Polynomial expand(const ExpansionRule& rule, const Polynomial& p) {
    if (p.alphabet() != rule.source)
        throw std::invalid_argument("expand: polynomial not over the rule's source alphabet");
    Polynomial out(p.degree(), rule.target);
    for (const auto& [mono, c] : p.terms()) {
        for (const auto& [ce, te] : expand_tree(rule, p.tree_of(mono)))
            out.add_term(te, c * ce);
    }
    return out;
}

}  // namespace nonassoc
