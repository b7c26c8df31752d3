#include "nonassoc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nonassoc {

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// lexicographic rank of a permutation of 1..d
std::uint64_t perm_rank(const std::vector<uint8_t>& vars) {
    const int d = static_cast<int>(vars.size());
    std::uint64_t rank = 0;
    for (int i = 0; i < d; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (vars[j] < vars[i]) ++smaller;
        rank += smaller * factorial(d - 1 - i);
    }
    return rank;
}

std::vector<uint8_t> perm_unrank(std::uint64_t rank, int d) {
    std::vector<uint8_t> pool(d);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<uint8_t> out;
    for (int i = d; i >= 1; --i) {
        std::uint64_t f = factorial(i - 1);
        std::size_t k = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[k]);
        pool.erase(pool.begin() + k);
    }
    return out;
}

}  // namespace

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (nonassoc::is_zero(c)) return;
    if (static_cast<int>(m.vars.size()) != degree_)
        throw std::invalid_argument("Polynomial: monomial degree mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (nonassoc::is_zero(it->second)) terms_.erase(it);
    }
}

void Polynomial::add_term(const TreePtr& tree, const Rat& c) {
    add_term(tree_to_monomial(tree, degree_, static_cast<int>(alphabet_.size())), c);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && degree_ == 0) {
        *this = o;
        return *this;
    }
    if (degree_ != o.degree_ || alphabet_ != o.alphabet_)
        throw std::invalid_argument("Polynomial: degree/alphabet mismatch in +");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    Polynomial neg = o;
    neg *= Rat(-1);
    return *this += neg;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
    if (nonassoc::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (is_zero() && o.is_zero()) return true;
    return degree_ == o.degree_ && alphabet_ == o.alphabet_ && terms_ == o.terms_;
}

int Polynomial::compare(const Polynomial& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first < b->first) return -1;
        if (b->first < a->first) return 1;
        if (a->second < b->second) return -1;
        if (b->second < a->second) return 1;
    }
    if (a != terms_.end()) return 1;
    if (b != o.terms_.end()) return -1;
    return 0;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(terms_.begin()->second) < 0) scale = -scale;
    Polynomial out(degree_, alphabet_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scale);
    return out;
}

TreePtr Polynomial::tree_of(const Monomial& m) const {
    const TypeTable& tab = TypeTable::get(degree_, static_cast<int>(alphabet_.size()));
    TreePtr shape = tab.tree_of(degree_, m.type);  // leaves x1..xd left to right
    return map_leaves(shape, [&](int pos) { return static_cast<int>(m.vars[pos - 1]); });
}

std::vector<Rat> Polynomial::coefficient_vector() const {
    const int q = static_cast<int>(alphabet_.size());
    std::vector<Rat> v(monomial_count(degree_, q), Rat(0));
    for (const auto& [m, c] : terms_) v[monomial_index(m, degree_, q)] = c;
    return v;
}

Polynomial Polynomial::from_coefficient_vector(int degree, const OpAlphabet& alphabet,
                                               const std::vector<Rat>& coeffs) {
    const int q = static_cast<int>(alphabet.size());
    if (coeffs.size() != monomial_count(degree, q))
        throw std::invalid_argument("from_coefficient_vector: length mismatch");
    Polynomial p(degree, alphabet);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!nonassoc::is_zero(coeffs[i])) p.add_term(monomial_at(i, degree, q), coeffs[i]);
    return p;
}

std::uint64_t Polynomial::monomial_count(int degree, int q) {
    return TypeTable::get(degree, q).count(degree) * factorial(degree);
}

std::uint64_t Polynomial::monomial_index(const Monomial& m, int degree, int q) {
    (void)q;
    return m.type * factorial(degree) + perm_rank(m.vars);
}

Monomial Polynomial::monomial_at(std::uint64_t index, int degree, int q) {
    (void)q;
    const std::uint64_t f = factorial(degree);
    Monomial m;
    m.type = static_cast<uint32_t>(index / f);
    m.vars = perm_unrank(index % f, degree);
    return m;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) {
                out += "- ";
                a = -a;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        if (!(a == 1)) out += to_string(a) + " ";
        // render the tree inline
        struct Render {
            const Polynomial& p;
            std::string go(const TreePtr& t) {
                if (t->is_leaf()) return "x" + std::to_string(t->var);
                return p.alphabet_.name(t->op) + "(" + go(t->left) + "," + go(t->right) + ")";
            }
        } r{*this};
        out += r.go(tree_of(m));
        first = false;
    }
    return out;
}

Monomial tree_to_monomial(const TreePtr& t, int degree, int q) {
    const TypeTable& tab = TypeTable::get(degree, q);
    Monomial m;
    m.type = tab.index_of(*t);
    std::vector<int> vars;
    collect_leaf_vars(*t, vars);
    if (static_cast<int>(vars.size()) != degree)
        throw std::invalid_argument("tree_to_monomial: degree mismatch");
    std::vector<bool> seen(degree + 1, false);
    m.vars.reserve(degree);
    for (int v : vars) {
        if (v < 1 || v > degree || seen[v])
            throw std::invalid_argument("tree_to_monomial: leaves are not a permutation");
        seen[v] = true;
        m.vars.push_back(static_cast<uint8_t>(v));
    }
    return m;
}

Polynomial act(const std::vector<int>& perm, const Polynomial& p) {
    if (static_cast<int>(perm.size()) != p.degree())
        throw std::invalid_argument("act: permutation degree mismatch");
    Polynomial out(p.degree(), p.alphabet());
    for (const auto& [m, c] : p.terms()) {
        Monomial im;
        im.type = m.type;
        im.vars.reserve(m.vars.size());
        for (uint8_t v : m.vars) im.vars.push_back(static_cast<uint8_t>(perm[v - 1]));
        out.add_term(im, c);
    }
    return out;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& q) {
    if (var < 1 || var > p.degree())
        throw std::invalid_argument("substitute: variable not present");
    if (p.alphabet() != q.alphabet())
        throw std::invalid_argument("substitute: alphabet mismatch");
    const int dq = q.degree();
    const int dout = p.degree() + dq - 1;
    Polynomial out(dout, p.alphabet());
    for (const auto& [mp, cp] : p.terms()) {
        TreePtr tp = p.tree_of(mp);
        TreePtr host = map_leaves(tp, [&](int v) {
            if (v < var) return v;
            if (v == var) return 0;  // placeholder for the graft point
            return v + dq - 1;
        });
        for (const auto& [mq, cq] : q.terms()) {
            TreePtr tq = q.tree_of(mq);
            TreePtr block = map_leaves(tq, [&](int v) { return var - 1 + v; });
            out.add_term(graft(host, 0, block), cp * cq);
        }
    }
    return out;
}

std::vector<std::vector<int>> all_permutations(int d) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace nonassoc
