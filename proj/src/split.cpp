#include "nonassoc/split.hpp"

#include <stdexcept>

namespace nonassoc {

OpAlphabet split_alphabet(const OpAlphabet& source) {
    std::vector<std::string> names;
    for (const auto& o : source.names()) {
        names.push_back(o + "_prec");
        names.push_back(o + "_succ");
    }
    return OpAlphabet(names);
}

namespace {

// contains(t, k): does the leaf labelled k lie under t?
bool contains_var(const Tree& t, int k) {
    if (t.is_leaf()) return t.var == k;
    return contains_var(*t.left, k) || contains_var(*t.right, k);
}

// source op i maps to split ops 2i (prec) and 2i+1 (succ)
void split_tree(const TreePtr& t, int k, std::vector<TreePtr>& out) {
    if (t->is_leaf()) {
        out.push_back(t);
        return;
    }
    std::vector<TreePtr> ls, rs;
    split_tree(t->left, k, ls);
    split_tree(t->right, k, rs);
    const int prec = 2 * t->op, succ = 2 * t->op + 1;
    bool in_left = contains_var(*t->left, k);
    bool in_right = contains_var(*t->right, k);
    for (const auto& l : ls) {
        for (const auto& r : rs) {
            if (in_left) {
                out.push_back(node(prec, l, r));
            } else if (in_right) {
                out.push_back(node(succ, l, r));
            } else {
                out.push_back(node(prec, l, r));
                out.push_back(node(succ, l, r));
            }
        }
    }
}

}  // namespace

Polynomial disuccessor_k(const Polynomial& f, int k) {
    if (k < 1 || k > f.degree()) throw std::invalid_argument("disuccessor: bad variable index");
    OpAlphabet target = split_alphabet(f.alphabet());
    Polynomial out(f.degree(), target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<TreePtr> pieces;
        split_tree(f.tree_of(m), k, pieces);
        for (const auto& t : pieces) out.add_term(t, c);
    }
    return out;
}

std::vector<Polynomial> disuccessor(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (int k = 1; k <= f.degree(); ++k) out.push_back(disuccessor_k(f, k));
    return out;
}

IdentitySystem disuccessor_system(const IdentitySystem& sys) {
    IdentitySystem out;
    out.name = "di-" + sys.name;
    out.alphabet = split_alphabet(sys.alphabet);
    std::vector<Polynomial> seen;
    for (const auto& f : sys.identities) {
        for (const auto& g : disuccessor(f)) {
            Polynomial n = g.normalized();
            bool dup = false;
            for (const auto& s : seen)
                if (s == n) {
                    dup = true;
                    break;
                }
            if (!dup) {
                seen.push_back(n);
                out.identities.push_back(g);
            }
        }
    }
    return out;
}

ExpansionRule split_sum_rule(const OpAlphabet& source) {
    ExpansionRule r;
    r.name = "split-sum";
    r.source = source;
    r.target = split_alphabet(source);
    for (std::size_t i = 0; i < source.size(); ++i) {
        Polynomial img(2, r.target);
        img.add_term(node(static_cast<int>(2 * i), leaf(1), leaf(2)), Rat(1));
        img.add_term(node(static_cast<int>(2 * i + 1), leaf(1), leaf(2)), Rat(1));
        r.images.push_back(std::move(img));
    }
    return r;
}

}  // namespace nonassoc
