#include "nonassoc/assoc_types.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nonassoc {

TypeTable::TypeTable(int max_degree, int q) : max_degree_(max_degree), q_(q) {
    if (max_degree < 1) throw std::invalid_argument("TypeTable: degree must be >= 1");
    if (q < 1) throw std::invalid_argument("TypeTable: alphabet must be nonempty");
    counts_.resize(max_degree + 1, 0);
    entries_.resize(max_degree + 1);
    offsets_.resize(max_degree + 1);
    counts_[1] = 1;
    entries_[1] = {TypeEntry{}};
    offsets_[1] = {0};
    for (int d = 2; d <= max_degree; ++d) {
        offsets_[d].assign(d, 0);
        std::vector<TypeEntry>& es = entries_[d];
        for (int l = 1; l <= d - 1; ++l) {
            offsets_[d][l] = es.size();
            const uint32_t nl = static_cast<uint32_t>(counts_[l]);
            const uint32_t nr = static_cast<uint32_t>(counts_[d - l]);
            for (uint32_t li = 0; li < nl; ++li)
                for (uint32_t ri = 0; ri < nr; ++ri)
                    for (int op = 0; op < q; ++op)
                        es.push_back(TypeEntry{l, li, ri, op});
        }
        counts_[d] = es.size();
    }
}

uint32_t TypeTable::index_of(const Tree& t) const {
    if (t.is_leaf()) return 0;
    const int d = leaf_count(t);
    if (d > max_degree_) throw std::out_of_range("TypeTable: degree exceeds table");
    const int l = leaf_count(*t.left);
    const uint32_t li = index_of(*t.left);
    const uint32_t ri = index_of(*t.right);
    const std::uint64_t nr = counts_[d - l];
    return static_cast<uint32_t>(offsets_[d][l] + (li * nr + ri) * q_ + t.op);
}

TreePtr TypeTable::tree_of(int degree, uint32_t index) const {
    struct Builder {
        const TypeTable& tab;
        int next_var = 1;
        TreePtr build(int d, uint32_t idx) {
            if (d == 1) return leaf(next_var++);
            const TypeEntry& e = tab.entry(d, idx);
            TreePtr l = build(e.left_leaves, e.left);
            TreePtr r = build(d - e.left_leaves, e.right);
            return node(e.op, std::move(l), std::move(r));
        }
    };
    if (degree > max_degree_) throw std::out_of_range("TypeTable: degree exceeds table");
    Builder b{*this};
    return b.build(degree, index);
}

const TypeTable& TypeTable::get(int degree, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<TypeTable>> cache;
    // tables are monotone in degree; round up so nearby degrees share one
    // (degree 6 at q = 4 is ~43k entries; rounding higher would get big)
    int deg = degree < 6 ? 6 : degree;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(deg, q);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<TypeTable>(deg, q)).first;
    return *it->second;
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace nonassoc
