#pragma once

#include <memory>
#include <vector>

namespace nonassoc {

// Full binary tree with operation-labelled internal vertices and
// variable-labelled leaves. Immutable; subtrees are shared freely.
struct Tree;
using TreePtr = std::shared_ptr<const Tree>;

struct Tree {
    int op = -1;   // alphabet index at an internal vertex, -1 at a leaf
    int var = 0;   // 1-based variable index at a leaf
    TreePtr left, right;

    bool is_leaf() const { return op < 0; }
};

inline TreePtr leaf(int var) {
    auto t = std::make_shared<Tree>();
    t->var = var;
    return t;
}

inline TreePtr node(int op, TreePtr l, TreePtr r) {
    auto t = std::make_shared<Tree>();
    t->op = op;
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

inline int leaf_count(const Tree& t) {
    return t.is_leaf() ? 1 : leaf_count(*t.left) + leaf_count(*t.right);
}

// leaves left to right
inline void collect_leaf_vars(const Tree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.var);
        return;
    }
    collect_leaf_vars(*t.left, out);
    collect_leaf_vars(*t.right, out);
}

// total order: leaves before nodes, leaves by var, nodes by (left, right, op)
inline int tree_cmp(const Tree& a, const Tree& b) {
    if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
    if (a.is_leaf()) return a.var < b.var ? -1 : a.var > b.var ? 1 : 0;
    if (int c = tree_cmp(*a.left, *b.left)) return c;
    if (int c = tree_cmp(*a.right, *b.right)) return c;
    return a.op < b.op ? -1 : a.op > b.op ? 1 : 0;
}

// Rebuilds the tree with each leaf var v replaced by relabel(v).
template <class Fn>
TreePtr map_leaves(const TreePtr& t, Fn&& relabel) {
    if (t->is_leaf()) return leaf(relabel(t->var));
    return node(t->op, map_leaves(t->left, relabel), map_leaves(t->right, relabel));
}

// Replaces every leaf labelled `var` by the given subtree.
inline TreePtr graft(const TreePtr& t, int var, const TreePtr& sub) {
    if (t->is_leaf()) return t->var == var ? sub : t;
    return node(t->op, graft(t->left, var, sub), graft(t->right, var, sub));
}

}  // namespace nonassoc
