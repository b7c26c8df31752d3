#pragma once

#include <string>
#include <vector>

namespace nonassoc {

// An ordered set of binary operation names. The order is fixed at
// construction and drives every canonical index in the system, so two
// alphabets with the same names in a different order are different
// alphabets.
//
// Conventional names used by the catalog and the file formats:
//   mul  generic product (written ., *, or o depending on the system)
//   br   bracket [-,-]
//   prec succ            dendriform pair (<, >)
//   nw ne sw se          quadri operations (NW, NE, SW, SE arrows)
//   vee wedge            quadri column sums (v, ^)
//   tl tr                triangle pair (left/right filled triangles)
class OpAlphabet {
  public:
    OpAlphabet() = default;
    explicit OpAlphabet(std::vector<std::string> ops);

    std::size_t size() const { return ops_.size(); }
    const std::string& name(std::size_t i) const { return ops_[i]; }
    const std::vector<std::string>& names() const { return ops_; }

    // -1 if absent
    int index(const std::string& name) const;

    bool operator==(const OpAlphabet& o) const { return ops_ == o.ops_; }
    bool operator!=(const OpAlphabet& o) const { return !(*this == o); }

  private:
    std::vector<std::string> ops_;
};

}  // namespace nonassoc
