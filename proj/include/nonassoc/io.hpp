#pragma once

#include <iosfwd>
#include <string>

#include "nonassoc/expansion.hpp"
#include "nonassoc/polarize.hpp"
#include "nonassoc/system.hpp"

namespace nonassoc {

// Tree syntax: `opname(<tree>,<tree>)` or `x<i>`. Rule polynomials use the
// slot leaves `s1` and `s2` instead of variables.
//
// Two polynomial encodings share that tree syntax:
//   * file format, one term per line:   `<coeff> ; <tree>`
//   * inline expressions, used in rule lines and on the command line:
//     `mul(x1,x2) - mul(x2,x1)` or `2 mul(x1,x2) + 1/3 mul(x2,x1)`
//
// System files:
//   system <name>
//   ops <name> <name> ...
//   identity [label]
//   <coeff> ; <tree>      (term lines of that identity)
//   ...
//
// Rule files:
//   rule <name>
//   source <name> ...
//   target <name> ...
//   op <srcop> -> <inline expression in s1, s2>

TreePtr parse_tree(const std::string& s, const OpAlphabet& alphabet, bool slots = false);
std::string tree_str(const TreePtr& t, const OpAlphabet& alphabet, bool slots = false);

RawPoly parse_poly_expr(const std::string& s, const OpAlphabet& alphabet, bool slots = false);
RawPoly parse_poly_lines(std::istream& in, const OpAlphabet& alphabet);

std::string poly_lines(const Polynomial& p);             // term-per-line format
std::string poly_expr(const Polynomial& p, bool slots = false);

IdentitySystem read_system(std::istream& in);
void write_system(std::ostream& out, const IdentitySystem& sys);

ExpansionRule read_rule(std::istream& in);
void write_rule(std::ostream& out, const ExpansionRule& rule);

IdentitySystem read_system_file(const std::string& path);
ExpansionRule read_rule_file(const std::string& path);

}  // namespace nonassoc
