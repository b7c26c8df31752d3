#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nonassoc/alphabet.hpp"
#include "nonassoc/assoc_types.hpp"
#include "nonassoc/rational.hpp"
#include "nonassoc/tree.hpp"

namespace nonassoc {

// A multilinear monomial of degree d: an association type together with the
// permutation of x_1..x_d written on its leaves, left to right.
struct Monomial {
    uint32_t type = 0;
    std::vector<uint8_t> vars;  // vars[i] = variable at leaf i, 1-based

    bool operator<(const Monomial& o) const {
        if (type != o.type) return type < o.type;
        return vars < o.vars;  // lexicographic on the leaf sequence
    }
    bool operator==(const Monomial& o) const { return type == o.type && vars == o.vars; }
};

// Exact linear combination of multilinear monomials of one degree over one
// alphabet. Terms are kept sorted by (type, leaf permutation) with no zero
// coefficients; that is the canonical term order used for every coefficient
// vector in the system. Scale normalization is separate (see normalized()).
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(int degree, OpAlphabet alphabet)
        : degree_(degree), alphabet_(std::move(alphabet)) {}

    int degree() const { return degree_; }
    const OpAlphabet& alphabet() const { return alphabet_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);
    void add_term(const TreePtr& tree, const Rat& c);  // tree must be multilinear

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rat& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Rat& c, Polynomial p) { return p *= c; }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    // canonical term-order comparison (used for deterministic tie-breaks)
    int compare(const Polynomial& o) const;

    // Scale-canonical form: coprime integer coefficients, first one positive.
    Polynomial normalized() const;

    TreePtr tree_of(const Monomial& m) const;

    // Dense coefficient vector in the canonical monomial order of this
    // degree and alphabet; its length is the ambient dimension of A_d.
    std::vector<Rat> coefficient_vector() const;
    static Polynomial from_coefficient_vector(int degree, const OpAlphabet& alphabet,
                                              const std::vector<Rat>& coeffs);

    static std::uint64_t monomial_count(int degree, int q);
    static std::uint64_t monomial_index(const Monomial& m, int degree, int q);
    static Monomial monomial_at(std::uint64_t index, int degree, int q);

    std::string str() const;  // single-line human-readable form

  private:
    int degree_ = 0;
    OpAlphabet alphabet_;
    std::map<Monomial, Rat> terms_;
};

// x_i -> x_{perm[i-1]} on every leaf; coefficients unchanged.
Polynomial act(const std::vector<int>& perm, const Polynomial& p);

// Substitutes q for x_var in p. The substituted block keeps q's relative
// variable order and sits at var's position: q's x_j becomes x_{var-1+j},
// p's variables above var shift up by deg q - 1. Result has degree
// deg p + deg q - 1 and is multilinear.
Polynomial substitute(const Polynomial& p, int var, const Polynomial& q);

// All permutations of 1..d in lexicographic order.
std::vector<std::vector<int>> all_permutations(int d);

// Converts a multilinear tree over the alphabet into its monomial.
Monomial tree_to_monomial(const TreePtr& t, int degree, int q);

}  // namespace nonassoc
