#include "nonassoc/opword.hpp"

#include <stdexcept>

namespace nonassoc {

Polynomial operator_word_to_poly(const OperatorPoly& w, int argument,
                                 const OpAlphabet& alphabet, const std::string& product_op) {
    const int op = alphabet.index(product_op);
    if (op < 0) throw std::invalid_argument("operator_word_to_poly: unknown product op");

    RawPoly result;
    result.alphabet = alphabet;
    for (const auto& term : w.terms) {
        std::vector<std::pair<Rat, TreePtr>> acc{{term.coeff, leaf(argument)}};
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
            std::vector<std::pair<Rat, TreePtr>> next;
            for (const auto& [ca, ta] : acc) {
                for (const auto& [cs, ts] : it->subscript) {
                    TreePtr t = it->kind == OpFactor::L ? node(op, ts, ta) : node(op, ta, ts);
                    next.emplace_back(ca * cs, std::move(t));
                }
            }
            acc = std::move(next);
        }
        for (auto& t : acc) result.terms.push_back(std::move(t));
    }
    if (result.terms.empty()) return Polynomial(0, alphabet);
    if (!is_multilinear(result))
        throw std::invalid_argument("operator_word_to_poly: malformed word (variables collide)");
    return to_polynomial(result);
}

}  // namespace nonassoc
