#pragma once

#include <cstdint>
#include <vector>

#include "nonassoc/tree.hpp"

namespace nonassoc {

// Association types of degree d over q binary operations: full binary trees
// with d leaves and op-labelled vertices. Canonical order within a degree is
// by left-subtree leaf count ascending, then left subtree index, then right
// subtree index, then root operation index. There are Catalan(d-1) * q^(d-1)
// of them; the tables are built once per (d, q) and cached.
struct TypeEntry {
    int left_leaves = 0;   // 0 marks the degree-1 leaf type
    uint32_t left = 0;     // index within degree left_leaves
    uint32_t right = 0;    // index within degree d - left_leaves
    int op = 0;
};

class TypeTable {
  public:
    // Table covering degrees 1..max_degree over q operations.
    TypeTable(int max_degree, int q);

    int q() const { return q_; }
    int max_degree() const { return max_degree_; }
    std::uint64_t count(int degree) const { return counts_[degree]; }
    const TypeEntry& entry(int degree, uint32_t index) const {
        return entries_[degree][index];
    }

    // canonical index of a tree's shape (degree inferred from the tree)
    uint32_t index_of(const Tree& t) const;
    // tree of the given type with leaves x1..xd left to right
    TreePtr tree_of(int degree, uint32_t index) const;

    // cached lookup, thread-safe
    static const TypeTable& get(int degree, int q);

  private:
    int max_degree_, q_;
    std::vector<std::uint64_t> counts_;                 // by degree
    std::vector<std::vector<TypeEntry>> entries_;       // by degree
    std::vector<std::vector<std::uint64_t>> offsets_;   // by degree: cumulative
                                                        // count before each left_leaves value
};

// Catalan(n) for the counting cross-checks.
std::uint64_t catalan(int n);

}  // namespace nonassoc
