#include "nonassoc/rational.hpp"

#include <cctype>

namespace nonassoc {

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string num, den;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
    if (num.empty()) return std::nullopt;
    if (i < s.size() && s[i] == '/') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
        if (den.empty()) return std::nullopt;
    }
    if (i != s.size()) return std::nullopt;
    Rat r(num + (den.empty() ? "" : "/" + den));
    r.canonicalize();
    if (sgn(r.get_den()) == 0) return std::nullopt;
    return neg ? Rat(-r) : r;
}

std::string to_string(const Rat& a) {
    return a.get_str();
}

}  // namespace nonassoc
