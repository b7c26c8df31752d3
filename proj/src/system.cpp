#include "nonassoc/system.hpp"

#include <stdexcept>

namespace nonassoc {

Polynomial rename_ops(const Polynomial& p, const std::vector<std::string>& to,
                      const OpAlphabet& target) {
    if (to.size() != p.alphabet().size())
        throw std::invalid_argument("rename_ops: one new name per operation required");
    std::vector<int> remap(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) {
        int idx = target.index(to[i]);
        if (idx < 0) throw std::invalid_argument("rename_ops: '" + to[i] + "' not in target");
        remap[i] = idx;
    }
    Polynomial out(p.degree(), target);
    for (const auto& [m, c] : p.terms()) {
        TreePtr t = p.tree_of(m);
        struct Rec {
            const std::vector<int>& remap;
            TreePtr go(const TreePtr& n) {
                if (n->is_leaf()) return n;
                return node(remap[n->op], go(n->left), go(n->right));
            }
        } rec{remap};
        out.add_term(rec.go(t), c);
    }
    return out;
}

IdentitySystem rename_ops(const IdentitySystem& sys, const std::vector<std::string>& to,
                          const OpAlphabet& target) {
    IdentitySystem out;
    out.name = sys.name;
    out.alphabet = target;
    for (const auto& f : sys.identities) out.identities.push_back(rename_ops(f, to, target));
    return out;
}

}  // namespace nonassoc
