#include "nonassoc/alphabet.hpp"

#include <set>
#include <stdexcept>

namespace nonassoc {

OpAlphabet::OpAlphabet(std::vector<std::string> ops) : ops_(std::move(ops)) {
    std::set<std::string> seen;
    for (const auto& o : ops_) {
        if (o.empty()) throw std::invalid_argument("OpAlphabet: empty operation name");
        if (!seen.insert(o).second)
            throw std::invalid_argument("OpAlphabet: duplicate operation '" + o + "'");
    }
}

int OpAlphabet::index(const std::string& name) const {
    for (std::size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i] == name) return static_cast<int>(i);
    return -1;
}

}  // namespace nonassoc
