#pragma once

#include <string>
#include <vector>

namespace nonassoc {

enum class FieldChoice { P101, Rational, Both };

// One reproduction check: pass iff expected and computed agree exactly.
struct ReproResult {
    int criterion = 0;          // acceptance criterion this check belongs to
    std::string name;
    std::string anchor;         // where the claim comes from
    std::string field;          // "F101", "Q", or "-" for field-free checks
    std::string expected;
    std::string computed;
    bool pass = false;
    double millis = 0.0;
};

// Runs the reproduction suite. `only` filters by substring of the check
// name (empty = everything). Under Both, every check runs over F101 and,
// when the elimination is small enough to be practical exactly, again over
// the rationals; the two degree-4 quadri eliminations stay on F101 unless
// the field is forced to Rational.
std::vector<ReproResult> run_repro(FieldChoice field, const std::string& only = "");

std::string repro_table(const std::vector<ReproResult>& results);

}  // namespace nonassoc
