// Command-line front end. Subcommands mirror the library: enumeration,
// expansion, lifting, the new-identity finder, generator minimization,
// consequence checking, the disuccessor, the catalog, concrete verification
// and the reproduction suite.
//
// Exit codes: 0 success, 1 verdict failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nonassoc/catalog.hpp"
#include "nonassoc/concrete.hpp"
#include "nonassoc/io.hpp"
#include "nonassoc/newident.hpp"
#include "nonassoc/repro.hpp"
#include "nonassoc/split.hpp"

using namespace nonassoc;

namespace {

IdentitySystem load_system(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe.good()) return read_system_file(spec);
    return get_system(spec);
}

ExpansionRule load_rule(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe.good()) return read_rule_file(spec);
    return get_rule(spec);
}

std::ostream& out_stream(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

FieldChoice parse_field(const std::string& f) {
    if (f == "p101") return FieldChoice::P101;
    if (f == "rational") return FieldChoice::Rational;
    if (f == "both") return FieldChoice::Both;
    throw CLI::ValidationError("--field must be p101, rational or both");
}

OpAlphabet alphabet_arg(const std::string& ops) {
    std::vector<std::string> names;
    std::istringstream in(ops);
    std::string o;
    while (std::getline(in, o, ',')) names.push_back(o);
    return OpAlphabet(names);
}

template <class F>
int run_newids(const IdentitySystem& sys, const ExpansionRule& rule, int degree,
               const std::string& out_path, const std::string& dump_path) {
    Mat<F> block;
    auto rep = find_new_identities<F>(sys, rule, degree, nullptr,
                                      dump_path.empty() ? nullptr : &block);
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        for (std::size_t i = 0; i < block.rows(); ++i) {
            for (std::size_t j = 0; j < block.cols(); ++j)
                dump << (j ? " " : "") << FieldOps<F>::str(block.at(i, j));
            dump << "\n";
        }
    }
    std::ofstream file;
    std::ostream& out = out_stream(out_path, file);
    out << "degree " << rep.degree << "\n";
    out << "block matrix " << rep.block_rows << " x " << rep.block_cols << " ("
        << rep.generator_count << " lifting generators)\n";
    out << "new identity module dimension " << rep.module.rank() << "\n";
    out << "minimal generators " << rep.minimal_generators.size() << "\n";
    for (const auto& g : rep.minimal_generators) {
        out << "identity\n";
        out << poly_lines(g.normalized());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for multilinear polynomial identities in free multioperator "
                 "algebras"};
    app.require_subcommand(1);

    std::string field = "p101";
    app.add_option("--field", field, "arithmetic: p101, rational or both")
        ->capture_default_str();

    // ---- types / monomials ----
    int degree = 3;
    std::string ops = "mul";
    auto* types_cmd = app.add_subcommand("types", "list association types of one degree");
    types_cmd->add_option("--degree", degree)->required();
    types_cmd->add_option("--ops", ops, "comma-separated operation names");
    auto* monos_cmd = app.add_subcommand("monomials", "list multilinear monomials");
    monos_cmd->add_option("--degree", degree)->required();
    monos_cmd->add_option("--ops", ops, "comma-separated operation names");

    // ---- expand ----
    std::string rule_name, poly_expr_arg, in_path, out_path;
    auto* expand_cmd = app.add_subcommand("expand", "apply an expansion rule");
    expand_cmd->add_option("--rule", rule_name, "catalog rule or rule file")->required();
    expand_cmd->add_option("--poly", poly_expr_arg, "inline polynomial expression");
    expand_cmd->add_option("--in", in_path, "polynomial file (term per line)");
    expand_cmd->add_option("--out", out_path);

    // ---- lift ----
    std::string system_name;
    auto* lift_cmd = app.add_subcommand("lift", "lifting generators of a system at a degree");
    lift_cmd->add_option("--system", system_name, "catalog system or file")->required();
    lift_cmd->add_option("--degree", degree)->required();
    lift_cmd->add_option("--out", out_path);

    // ---- newids ----
    std::string dump_path;
    auto* newids_cmd =
        app.add_subcommand("newids", "new identities of an expansion into a system");
    newids_cmd->add_option("--system", system_name)->required();
    newids_cmd->add_option("--rule", rule_name)->required();
    newids_cmd->add_option("--degree", degree)->required();
    newids_cmd->add_option("--out", out_path);
    newids_cmd->add_option("--dump-matrix", dump_path, "write the block matrix, row per line");

    // ---- minimize ----
    auto* min_cmd = app.add_subcommand("minimize", "minimal generator subset of a system");
    min_cmd->add_option("--system", system_name)->required();
    min_cmd->add_option("--out", out_path);

    // ---- consequence ----
    std::string target_expr;
    auto* cons_cmd = app.add_subcommand("consequence",
                                        "is the target a consequence of the system?");
    cons_cmd->add_option("--target", target_expr, "inline expression or polynomial file")
        ->required();
    cons_cmd->add_option("--system", system_name)->required();
    cons_cmd->add_option("--rule", rule_name, "expand the target through this rule first");

    // ---- split ----
    std::string check_name, map_spec;
    auto* split_cmd = app.add_subcommand("split", "disuccessor of a system");
    split_cmd->add_option("--system", system_name)->required();
    split_cmd->add_option("--degree", degree, "degree for the --check module comparison");
    split_cmd->add_option("--check", check_name, "compare against this catalog system");
    split_cmd->add_option("--map", map_spec,
                          "rename split ops, e.g. mul_prec=prec,mul_succ=succ");
    split_cmd->add_option("--out", out_path);

    // ---- catalog ----
    auto* cat_cmd = app.add_subcommand("catalog", "list or dump built-in systems and rules");
    std::string cat_action = "list", cat_name;
    cat_cmd->add_option("action", cat_action, "list | dump")->required();
    cat_cmd->add_option("name", cat_name, "entry to dump");

    // ---- verify ----
    std::string algebra_path, rb_path, construct_name;
    auto* verify_cmd =
        app.add_subcommand("verify", "check a structure-constant algebra against a system");
    verify_cmd->add_option("--algebra", algebra_path, "algebra file")->required();
    verify_cmd->add_option("--system", system_name)->required();
    verify_cmd->add_option("--rb", rb_path, "operator file");
    verify_cmd->add_option("--construct", construct_name,
                           "derive first: malcev-to-premalcev, alt-to-altdendriform, "
                           "dendri-to-quadri, double-rb-quadri, premalcev-to-mdendriform");

    // ---- repro ----
    std::string only;
    auto* repro_cmd = app.add_subcommand("repro", "run the reproduction suite");
    repro_cmd->add_option("--only", only, "filter checks by substring");

    CLI11_PARSE(app, argc, argv);

    try {
        if (types_cmd->parsed() || monos_cmd->parsed()) {
            OpAlphabet alpha = alphabet_arg(ops);
            const int q = static_cast<int>(alpha.size());
            const TypeTable& tab = TypeTable::get(degree, q);
            if (types_cmd->parsed()) {
                std::cout << tab.count(degree) << " association types\n";
                for (uint32_t i = 0; i < tab.count(degree); ++i)
                    std::cout << i << "  " << tree_str(tab.tree_of(degree, i), alpha) << "\n";
            } else {
                std::cout << Polynomial::monomial_count(degree, q)
                          << " multilinear monomials\n";
                for (std::uint64_t i = 0; i < Polynomial::monomial_count(degree, q); ++i) {
                    Polynomial p(degree, alpha);
                    p.add_term(Polynomial::monomial_at(i, degree, q), Rat(1));
                    std::cout << i << "  " << poly_expr(p) << "\n";
                }
            }
            return 0;
        }
        if (expand_cmd->parsed()) {
            ExpansionRule rule = load_rule(rule_name);
            Polynomial p;
            if (!poly_expr_arg.empty()) {
                p = to_polynomial(parse_poly_expr(poly_expr_arg, rule.source));
            } else if (!in_path.empty()) {
                std::ifstream in(in_path);
                if (!in) throw std::runtime_error("cannot open " + in_path);
                p = to_polynomial(parse_poly_lines(in, rule.source));
            } else {
                throw CLI::ValidationError("expand needs --poly or --in");
            }
            std::ofstream file;
            out_stream(out_path, file) << poly_lines(expand(rule, p));
            return 0;
        }
        if (lift_cmd->parsed()) {
            IdentitySystem sys = load_system(system_name);
            std::ofstream file;
            std::ostream& out = out_stream(out_path, file);
            auto gens = lifting_generators(sys, degree);
            out << "# " << gens.size() << " lifting generators of " << sys.name
                << " at degree " << degree << "\n";
            for (const auto& g : gens) {
                out << "identity\n";
                out << poly_lines(g);
            }
            return 0;
        }
        if (newids_cmd->parsed()) {
            IdentitySystem sys = load_system(system_name);
            ExpansionRule rule = load_rule(rule_name);
            if (parse_field(field) == FieldChoice::Rational)
                return run_newids<Rat>(sys, rule, degree, out_path, dump_path);
            return run_newids<Fp101>(sys, rule, degree, out_path, dump_path);
        }
        if (min_cmd->parsed()) {
            IdentitySystem sys = load_system(system_name);
            if (sys.identities.empty()) return 0;
            const int d = sys.identities.front().degree();
            const std::size_t ambient = Polynomial::monomial_count(
                d, static_cast<int>(sys.alphabet.size()));
            auto mins = parse_field(field) == FieldChoice::Rational
                            ? minimize_generators<Rat>(sys.identities, RowSpace<Rat>(ambient))
                            : minimize_generators<Fp101>(sys.identities,
                                                         RowSpace<Fp101>(ambient));
            std::ofstream file;
            std::ostream& out = out_stream(out_path, file);
            out << "# " << mins.size() << " of " << sys.identities.size()
                << " generators survive\n";
            for (const auto& g : mins) {
                out << "identity\n";
                out << poly_lines(g);
            }
            return 0;
        }
        if (cons_cmd->parsed()) {
            IdentitySystem sys = load_system(system_name);
            std::unique_ptr<ExpansionRule> rule;
            if (!rule_name.empty()) rule = std::make_unique<ExpansionRule>(load_rule(rule_name));
            const OpAlphabet& target_alpha = rule ? rule->source : sys.alphabet;
            Polynomial target;
            std::ifstream probe(target_expr);
            if (probe.good()) {
                target = to_polynomial(parse_poly_lines(probe, target_alpha));
            } else {
                target = to_polynomial(parse_poly_expr(target_expr, target_alpha));
            }
            bool ok = parse_field(field) == FieldChoice::Rational
                          ? is_consequence<Rat>(target, sys, rule.get())
                          : is_consequence<Fp101>(target, sys, rule.get());
            std::cout << (ok ? "consequence" : "not a consequence") << "\n";
            return ok ? 0 : 1;
        }
        if (split_cmd->parsed()) {
            IdentitySystem sys = load_system(system_name);
            IdentitySystem split = disuccessor_system(sys);
            std::ofstream file;
            write_system(out_stream(out_path, file), split);
            if (!check_name.empty()) {
                const IdentitySystem& target = get_system(check_name);
                std::vector<std::string> to(split.alphabet.size());
                if (!map_spec.empty()) {
                    std::istringstream in(map_spec);
                    std::string pair;
                    while (std::getline(in, pair, ',')) {
                        auto eq = pair.find('=');
                        if (eq == std::string::npos)
                            throw CLI::ValidationError("--map entries look like a=b");
                        int idx = split.alphabet.index(pair.substr(0, eq));
                        if (idx < 0)
                            throw CLI::ValidationError("unknown split op " +
                                                       pair.substr(0, eq));
                        to[idx] = pair.substr(eq + 1);
                    }
                } else {
                    // default orientation: (op, prec-half) -> target op i,
                    // (op, succ-half) -> target op i+q
                    const std::size_t q = sys.alphabet.size();
                    if (target.alphabet.size() != 2 * q)
                        throw CLI::ValidationError("--check alphabet size mismatch");
                    for (std::size_t i = 0; i < q; ++i) {
                        to[2 * i] = target.alphabet.name(i);
                        to[2 * i + 1] = target.alphabet.name(i + q);
                    }
                }
                IdentitySystem renamed = rename_ops(split, to, target.alphabet);
                int d = degree > 0 ? degree : renamed.max_degree();
                bool equal = parse_field(field) == FieldChoice::Rational
                                 ? lifting_module<Rat>(renamed, d) ==
                                       lifting_module<Rat>(target, d)
                                 : lifting_module<Fp101>(renamed, d) ==
                                       lifting_module<Fp101>(target, d);
                std::cout << "module at degree " << d << ": "
                          << (equal ? "equal" : "different") << "\n";
                return equal ? 0 : 1;
            }
            return 0;
        }
        if (cat_cmd->parsed()) {
            if (cat_action == "list") {
                std::cout << "systems:\n";
                for (const auto& e : catalog_systems()) {
                    std::cout << "  " << e.name << " (" << e.system.identities.size()
                              << " identities; ops";
                    for (const auto& o : e.system.alphabet.names()) std::cout << " " << o;
                    std::cout << ")\n";
                }
                std::cout << "rules:\n";
                for (const auto& e : catalog_rules())
                    std::cout << "  " << e.name << "\n";
                return 0;
            }
            if (cat_action == "dump") {
                bool is_system = false;
                for (const auto& e : catalog_systems())
                    if (e.name == cat_name) is_system = true;
                if (is_system) {
                    const auto& entry = get_entry(cat_name);
                    std::cout << "# " << entry.provenance << "\n";
                    write_system(std::cout, entry.system);
                } else {
                    write_rule(std::cout, get_rule(cat_name));
                }
                return 0;
            }
            throw CLI::ValidationError("catalog action must be list or dump");
        }
        if (verify_cmd->parsed()) {
            StructConstAlgebra a = read_algebra_file(algebra_path);
            if (!construct_name.empty()) {
                if (rb_path.empty())
                    throw CLI::ValidationError("--construct needs --rb");
                LinOp r = read_operator_file(rb_path);
                a = derive(a, construct_name, {r});
            } else if (!rb_path.empty()) {
                LinOp r = read_operator_file(rb_path);
                bool ok = is_rota_baxter(a, a.alphabet().names(), r);
                std::cout << (ok ? "Rota-Baxter" : "not Rota-Baxter") << "\n";
                if (!ok) return 1;
            }
            IdentitySystem sys = load_system(system_name);
            auto verdict = satisfies(a, sys);
            if (verdict.ok) {
                std::cout << "pass\n";
                return 0;
            }
            std::cout << "fail: identity " << verdict.identity + 1 << " at basis tuple (";
            for (std::size_t i = 0; i < verdict.tuple.size(); ++i)
                std::cout << (i ? "," : "") << "e" << verdict.tuple[i] + 1;
            std::cout << ")\n";
            return 1;
        }
        if (repro_cmd->parsed()) {
            auto results = run_repro(parse_field(field), only);
            std::cout << repro_table(results);
            int failures = 0;
            for (const auto& r : results) failures += r.pass ? 0 : 1;
            std::cout << results.size() - failures << "/" << results.size() << " checks pass\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
