#include "nonassoc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nonassoc/alphabet.hpp"

namespace nonassoc {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument("parse error: expected '" + std::string(1, c) +
                                        "' at offset " + std::to_string(i) + " in: " + s);
        ++i;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (start == i)
            throw std::invalid_argument("parse error: expected identifier in: " + s);
        return s.substr(start, i - start);
    }
};

TreePtr parse_tree_at(Cursor& c, const OpAlphabet& alphabet, bool slots) {
    std::string id = c.ident();
    if ((id[0] == 'x' || (slots && id[0] == 's')) && id.size() > 1 &&
        std::isdigit(static_cast<unsigned char>(id[1]))) {
        int v = std::stoi(id.substr(1));
        if (v < 1) throw std::invalid_argument("parse error: bad variable " + id);
        return leaf(v);
    }
    int op = alphabet.index(id);
    if (op < 0)
        throw std::invalid_argument("parse error: unknown operation '" + id + "'");
    c.expect('(');
    TreePtr l = parse_tree_at(c, alphabet, slots);
    c.expect(',');
    TreePtr r = parse_tree_at(c, alphabet, slots);
    c.expect(')');
    return node(op, std::move(l), std::move(r));
}

// optional rational in front of a tree: digits [/ digits]
bool peek_number(Cursor& c) {
    char ch = c.peek();
    return std::isdigit(static_cast<unsigned char>(ch));
}

Rat parse_coeff(Cursor& c) {
    c.skip_ws();
    std::string tok;
    while (c.i < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
        tok += c.s[c.i++];
    auto r = parse_rat(tok);
    if (!r) throw std::invalid_argument("parse error: bad coefficient '" + tok + "'");
    return *r;
}

}  // namespace

TreePtr parse_tree(const std::string& s, const OpAlphabet& alphabet, bool slots) {
    Cursor c{s};
    TreePtr t = parse_tree_at(c, alphabet, slots);
    if (!c.eof()) throw std::invalid_argument("parse error: trailing input in: " + s);
    return t;
}

std::string tree_str(const TreePtr& t, const OpAlphabet& alphabet, bool slots) {
    if (t->is_leaf()) return (slots ? "s" : "x") + std::to_string(t->var);
    return alphabet.name(t->op) + "(" + tree_str(t->left, alphabet, slots) + "," +
           tree_str(t->right, alphabet, slots) + ")";
}

RawPoly parse_poly_expr(const std::string& s, const OpAlphabet& alphabet, bool slots) {
    RawPoly p;
    p.alphabet = alphabet;
    Cursor c{s};
    if (c.eof()) return p;
    {  // a bare "0" denotes the zero polynomial
        std::size_t save = c.i;
        if (c.peek() == '0') {
            ++c.i;
            if (c.eof()) return p;
        }
        c.i = save;
    }
    bool first = true;
    while (!c.eof()) {
        Rat sign(1);
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -1;
            ++c.i;
        } else if (!first) {
            throw std::invalid_argument("parse error: expected + or - in: " + s);
        }
        Rat coeff(1);
        if (peek_number(c)) coeff = parse_coeff(c);
        p.terms.emplace_back(sign * coeff, parse_tree_at(c, alphabet, slots));
        first = false;
    }
    return p;
}

RawPoly parse_poly_lines(std::istream& in, const OpAlphabet& alphabet) {
    RawPoly p;
    p.alphabet = alphabet;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t semi = line.find(';');
        if (semi == std::string::npos) continue;
        auto coeff = parse_rat([&] {
            std::string t = line.substr(0, semi);
            while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
            std::size_t b = 0;
            while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
            return t.substr(b);
        }());
        if (!coeff) throw std::invalid_argument("bad coefficient in line: " + line);
        p.terms.emplace_back(*coeff, parse_tree(line.substr(semi + 1), alphabet));
    }
    return p;
}

std::string poly_lines(const Polynomial& p) {
    std::ostringstream out;
    for (const auto& [m, c] : p.terms())
        out << to_string(c) << " ; " << tree_str(p.tree_of(m), p.alphabet()) << "\n";
    return out.str();
}

std::string poly_expr(const Polynomial& p, bool slots) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
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
        out += tree_str(p.tree_of(m), p.alphabet(), slots);
        first = false;
    }
    return out;
}

IdentitySystem read_system(std::istream& in) {
    IdentitySystem sys;
    std::string line;
    std::vector<std::string> pending;
    auto flush = [&] {
        if (pending.empty()) return;
        std::stringstream block;
        for (const auto& l : pending) block << l << "\n";
        pending.clear();
        RawPoly raw = parse_poly_lines(block, sys.alphabet);
        if (!is_multilinear(raw))
            throw std::invalid_argument("system identity is not multilinear; polarize first");
        sys.identities.push_back(to_polynomial(raw));
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head[0] == '#') continue;
        if (head == "system") {
            ls >> sys.name;
        } else if (head == "ops") {
            std::vector<std::string> ops;
            std::string o;
            while (ls >> o) ops.push_back(o);
            sys.alphabet = OpAlphabet(ops);
        } else if (head == "identity") {
            flush();
        } else {
            pending.push_back(line);
        }
    }
    flush();
    return sys;
}

void write_system(std::ostream& out, const IdentitySystem& sys) {
    out << "system " << sys.name << "\n";
    out << "ops";
    for (const auto& o : sys.alphabet.names()) out << " " << o;
    out << "\n";
    for (const auto& f : sys.identities) {
        out << "identity\n";
        out << poly_lines(f);
    }
}

ExpansionRule read_rule(std::istream& in) {
    ExpansionRule rule;
    std::string line;
    std::vector<std::pair<std::string, std::string>> ops;  // src op -> expression
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head[0] == '#') continue;
        if (head == "rule") {
            ls >> rule.name;
        } else if (head == "source" || head == "target") {
            std::vector<std::string> names;
            std::string o;
            while (ls >> o) names.push_back(o);
            (head == "source" ? rule.source : rule.target) = OpAlphabet(names);
        } else if (head == "op") {
            std::string src, arrow;
            ls >> src >> arrow;
            if (arrow != "->") throw std::invalid_argument("rule line needs '->': " + line);
            std::string expr;
            std::getline(ls, expr);
            ops.emplace_back(src, expr);
        }
    }
    rule.images.resize(rule.source.size(), Polynomial(2, rule.target));
    for (const auto& [src, expr] : ops) {
        int idx = rule.source.index(src);
        if (idx < 0) throw std::invalid_argument("rule for unknown source op " + src);
        RawPoly raw = parse_poly_expr(expr, rule.target, /*slots=*/true);
        rule.images[idx] = raw.terms.empty() ? Polynomial(2, rule.target) : to_polynomial(raw);
    }
    rule.validate();
    return rule;
}

void write_rule(std::ostream& out, const ExpansionRule& rule) {
    out << "rule " << rule.name << "\n";
    out << "source";
    for (const auto& o : rule.source.names()) out << " " << o;
    out << "\ntarget";
    for (const auto& o : rule.target.names()) out << " " << o;
    out << "\n";
    for (std::size_t i = 0; i < rule.source.size(); ++i)
        out << "op " << rule.source.name(i) << " -> " << poly_expr(rule.images[i], true) << "\n";
}

IdentitySystem read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_system(in);
}

ExpansionRule read_rule_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_rule(in);
}

}  // namespace nonassoc
