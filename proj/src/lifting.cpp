#include "nonassoc/lifting.hpp"

#include <stdexcept>

namespace nonassoc {

namespace {

void push_unique(std::vector<Polynomial>& out, std::vector<Polynomial>& seen,
                 const Polynomial& f) {
    Polynomial n = f.normalized();
    for (const auto& s : seen)
        if (s == n) return;
    seen.push_back(n);
    out.push_back(f);
}

}  // namespace

std::vector<Polynomial> liftings(const Polynomial& f) {
    const int d = f.degree();
    const OpAlphabet& alpha = f.alphabet();
    std::vector<Polynomial> out, seen;
    for (std::size_t w = 0; w < alpha.size(); ++w) {
        Polynomial prod(2, alpha);
        prod.add_term(node(static_cast<int>(w), leaf(1), leaf(2)), Rat(1));
        // f(x1, ..., w(x_i, x_{d+1}), ..., x_d)
        for (int i = 1; i <= d; ++i) {
            Polynomial s = substitute(f, i, prod);
            // substitute packs the new variable next to x_i; move it to d+1
            std::vector<int> relabel(d + 1);
            for (int k = 1; k <= i; ++k) relabel[k - 1] = k;
            relabel[i] = d + 1;  // position i+1 holds the fresh variable
            for (int k = i + 2; k <= d + 1; ++k) relabel[k - 1] = k - 1;
            push_unique(out, seen, act(relabel, s));
        }
        // w(f, x_{d+1}) and w(x_{d+1}, f)
        Polynomial outer_l(d + 1, alpha), outer_r(d + 1, alpha);
        for (const auto& [m, c] : f.terms()) {
            TreePtr t = f.tree_of(m);
            outer_l.add_term(node(static_cast<int>(w), t, leaf(d + 1)), c);
            outer_r.add_term(node(static_cast<int>(w), leaf(d + 1), t), c);
        }
        push_unique(out, seen, outer_l);
        push_unique(out, seen, outer_r);
    }
    return out;
}

std::vector<Polynomial> lifting_generators(const IdentitySystem& sys, int D) {
    std::vector<Polynomial> out, seen;
    for (const auto& f : sys.identities) {
        if (f.degree() > D)
            throw std::invalid_argument("lifting_generators: identity degree exceeds target");
        if (f.degree() == D) {
            push_unique(out, seen, f);
            continue;
        }
        std::vector<Polynomial> level{f};
        for (int d = f.degree(); d < D; ++d) {
            std::vector<Polynomial> next, next_seen;
            for (const auto& g : level)
                for (const auto& h : liftings(g)) push_unique(next, next_seen, h);
            level = std::move(next);
        }
        for (const auto& g : level) push_unique(out, seen, g);
    }
    return out;
}

}  // namespace nonassoc
