#pragma once

#include <string>
#include <vector>

#include "nonassoc/expansion.hpp"
#include "nonassoc/opword.hpp"
#include "nonassoc/polarize.hpp"
#include "nonassoc/system.hpp"

namespace nonassoc {

// Built-in identity systems and expansion rules. Every identity is stored
// multilinear (polarized where the classical form has repeated variables);
// the unpolarized originals of those are kept alongside.
struct CatalogEntry {
    std::string name;
    IdentitySystem system;
    std::string provenance;
    std::vector<RawPoly> raw_forms;  // nonempty only for malcev and jordan
};

struct RuleEntry {
    std::string name;
    ExpansionRule rule;
    std::string provenance;
};

const std::vector<CatalogEntry>& catalog_systems();
const std::vector<RuleEntry>& catalog_rules();

// Throw with the list of available names on a miss.
const CatalogEntry& get_entry(const std::string& name);
const IdentitySystem& get_system(const std::string& name);
const ExpansionRule& get_rule(const std::string& name);

// Pre-Malcev bimodule axioms as operator words in x1, x2, x3 (the l and r
// actions become left and right multiplication in the regular instance).
const std::vector<OperatorPoly>& premalcev_bimodule_axioms();

// The representation identity of Malcev algebras, as the operator word
// rho([[x,y],z]) - rho(x)rho(y)rho(z) + rho(z)rho(x)rho(y)
//                - rho(y)rho([z,x]) + rho([y,z])rho(x)
// with every factor a left multiplication.
const OperatorPoly& kuzmin_representation_word();

}  // namespace nonassoc
