#include "nonassoc/concrete.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nonassoc {

StructConstAlgebra::StructConstAlgebra(int dim, OpAlphabet alphabet)
    : dim_(dim), alphabet_(std::move(alphabet)) {
    if (dim < 1) throw std::invalid_argument("StructConstAlgebra: dim must be >= 1");
    tensors_.assign(alphabet_.size(),
                    std::vector<Rat>(static_cast<std::size_t>(dim) * dim * dim, Rat(0)));
}

Rat& StructConstAlgebra::c(int op, int i, int j, int k) {
    return tensors_[op][(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
}

const Rat& StructConstAlgebra::c(int op, int i, int j, int k) const {
    return tensors_[op][(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
}

std::vector<Rat> StructConstAlgebra::product(int op, const std::vector<Rat>& u,
                                             const std::vector<Rat>& v) const {
    std::vector<Rat> out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (is_zero(v[j])) continue;
            Rat uv = u[i] * v[j];
            for (int k = 0; k < dim_; ++k) {
                const Rat& cc = c(op, i, j, k);
                if (!is_zero(cc)) out[k] += uv * cc;
            }
        }
    }
    return out;
}

std::vector<Rat> LinOp::apply(const std::vector<Rat>& v) const {
    std::vector<Rat> out(dim, Rat(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!is_zero(at(i, j)) && !is_zero(v[j])) out[i] += at(i, j) * v[j];
    return out;
}

bool LinOp::commutes_with(const LinOp& o) const {
    if (dim != o.dim) throw std::invalid_argument("commutes_with: dimension mismatch");
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat a(0), b(0);
            for (int k = 0; k < dim; ++k) {
                a += at(i, k) * o.at(k, j);
                b += o.at(i, k) * at(k, j);
            }
            if (!(a == b)) return false;
        }
    return true;
}

LinOp zero_op(int dim) { return LinOp{dim, std::vector<Rat>(dim * dim, Rat(0))}; }

LinOp identity_op(int dim) {
    LinOp r = zero_op(dim);
    for (int i = 0; i < dim; ++i) r.at(i, i) = 1;
    return r;
}

namespace {

std::vector<Rat> basis_vec(int dim, int i) {
    std::vector<Rat> e(dim, Rat(0));
    e[i] = 1;
    return e;
}

bool all_zero(const std::vector<Rat>& v) {
    for (const auto& a : v)
        if (!is_zero(a)) return false;
    return true;
}

}  // namespace

bool is_rota_baxter(const StructConstAlgebra& a, const std::vector<std::string>& ops,
                    const LinOp& r) {
    if (r.dim != a.dim()) throw std::invalid_argument("is_rota_baxter: dimension mismatch");
    const int n = a.dim();
    for (const auto& opname : ops) {
        int op = a.alphabet().index(opname);
        if (op < 0) throw std::invalid_argument("is_rota_baxter: unknown op " + opname);
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ei = basis_vec(n, i), ri = r.apply(ei);
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> ej = basis_vec(n, j), rj = r.apply(ej);
                std::vector<Rat> lhs = a.product(op, ri, rj);
                std::vector<Rat> inner = a.product(op, ri, ej);
                std::vector<Rat> inner2 = a.product(op, ei, rj);
                for (int k = 0; k < n; ++k) inner[k] += inner2[k];
                std::vector<Rat> rhs = r.apply(inner);
                for (int k = 0; k < n; ++k)
                    if (!(lhs[k] == rhs[k])) return false;
            }
        }
    }
    return true;
}

bool is_rota_baxter(const StructConstAlgebra& a, const std::string& op, const LinOp& r) {
    return is_rota_baxter(a, std::vector<std::string>{op}, r);
}

std::vector<LinOp> search_rb(const StructConstAlgebra& a, const std::vector<std::string>& ops,
                             const std::vector<Rat>& entries, std::size_t samples) {
    const int n = a.dim();
    const std::size_t cells = static_cast<std::size_t>(n) * n;
    std::vector<LinOp> found;
    if (entries.empty()) throw std::invalid_argument("search_rb: empty entry set");
    if (n <= 3) {
        // full scan in lexicographic order over the entry set as given
        std::vector<std::size_t> idx(cells, 0);
        while (true) {
            LinOp r = zero_op(n);
            for (std::size_t c = 0; c < cells; ++c) r.m[c] = entries[idx[c]];
            if (is_rota_baxter(a, ops, r)) found.push_back(r);
            std::size_t pos = cells;
            while (pos > 0) {
                --pos;
                if (++idx[pos] < entries.size()) break;
                idx[pos] = 0;
                if (pos == 0) return found;
            }
        }
    }
    // randomized sampling beyond exhaustive reach; deterministic seed
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    std::vector<LinOp> seen;
    for (std::size_t s = 0; s < samples; ++s) {
        LinOp r = zero_op(n);
        for (std::size_t c = 0; c < cells; ++c) r.m[c] = entries[pick(rng)];
        if (!is_rota_baxter(a, ops, r)) continue;
        bool dup = false;
        for (const auto& f : found)
            if (f == r) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(r);
    }
    std::sort(found.begin(), found.end(), [](const LinOp& x, const LinOp& y) {
        for (std::size_t c = 0; c < x.m.size(); ++c) {
            if (x.m[c] < y.m[c]) return true;
            if (y.m[c] < x.m[c]) return false;
        }
        return false;
    });
    return found;
}

StructConstAlgebra derive(const StructConstAlgebra& a, const std::string& construction,
                          const std::vector<LinOp>& operators, bool check) {
    const int n = a.dim();
    auto r_of = [&](std::size_t idx) -> const LinOp& {
        if (operators.size() <= idx)
            throw std::invalid_argument("derive: missing operator");
        if (operators[idx].dim != n)
            throw std::invalid_argument("derive: operator dimension mismatch");
        return operators[idx];
    };
    // image of a basis vector under R, as coordinates
    auto rcol = [&](const LinOp& r, int j) { return r.apply(basis_vec(n, j)); };

    if (construction == "malcev-to-premalcev") {
        const LinOp& r = r_of(0);
        int br = a.alphabet().index("br");
        if (br < 0) throw std::invalid_argument("derive: algebra has no br operation");
        if (check && !is_rota_baxter(a, "br", r))
            throw std::invalid_argument("derive: operator is not Rota-Baxter on br");
        StructConstAlgebra out(n, OpAlphabet({"mul"}));
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ri = rcol(r, i);
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> prod = a.product(br, ri, basis_vec(n, j));
                for (int k = 0; k < n; ++k) out.c(0, i, j, k) = prod[k];
            }
        }
        return out;
    }
    if (construction == "alt-to-altdendriform") {
        const LinOp& r = r_of(0);
        int mul = a.alphabet().index("mul");
        if (mul < 0) throw std::invalid_argument("derive: algebra has no mul operation");
        if (check && !is_rota_baxter(a, "mul", r))
            throw std::invalid_argument("derive: operator is not Rota-Baxter on mul");
        StructConstAlgebra out(n, OpAlphabet({"prec", "succ"}));
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ei = basis_vec(n, i), ri = rcol(r, i);
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> ej = basis_vec(n, j), rj = rcol(r, j);
                std::vector<Rat> prec = a.product(mul, ei, rj);   // x * R(y)
                std::vector<Rat> succ = a.product(mul, ri, ej);   // R(x) * y
                for (int k = 0; k < n; ++k) {
                    out.c(0, i, j, k) = prec[k];
                    out.c(1, i, j, k) = succ[k];
                }
            }
        }
        return out;
    }
    if (construction == "dendri-to-quadri") {
        const LinOp& r = r_of(0);
        int prec = a.alphabet().index("prec"), succ = a.alphabet().index("succ");
        if (prec < 0 || succ < 0)
            throw std::invalid_argument("derive: algebra has no prec/succ pair");
        if (check && !is_rota_baxter(a, std::vector<std::string>{"prec", "succ"}, r))
            throw std::invalid_argument("derive: operator is not Rota-Baxter on (prec, succ)");
        StructConstAlgebra out(n, OpAlphabet({"nw", "ne", "sw", "se"}));
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ei = basis_vec(n, i), ri = rcol(r, i);
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> ej = basis_vec(n, j), rj = rcol(r, j);
                std::vector<Rat> nw = a.product(prec, ei, rj);  // x prec R(y)
                std::vector<Rat> ne = a.product(succ, ei, rj);  // x succ R(y)
                std::vector<Rat> sw = a.product(prec, ri, ej);  // R(x) prec y
                std::vector<Rat> se = a.product(succ, ri, ej);  // R(x) succ y
                for (int k = 0; k < n; ++k) {
                    out.c(0, i, j, k) = nw[k];
                    out.c(1, i, j, k) = ne[k];
                    out.c(2, i, j, k) = sw[k];
                    out.c(3, i, j, k) = se[k];
                }
            }
        }
        return out;
    }
    if (construction == "double-rb-quadri") {
        const LinOp& r1 = r_of(0);
        const LinOp& r2 = r_of(1);
        int mul = a.alphabet().index("mul");
        if (mul < 0) throw std::invalid_argument("derive: algebra has no mul operation");
        if (check) {
            if (!r1.commutes_with(r2))
                throw std::invalid_argument("derive: operators do not commute");
            if (!is_rota_baxter(a, "mul", r1) || !is_rota_baxter(a, "mul", r2))
                throw std::invalid_argument("derive: operator is not Rota-Baxter on mul");
        }
        StructConstAlgebra out(n, OpAlphabet({"nw", "ne", "sw", "se"}));
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ei = basis_vec(n, i);
            std::vector<Rat> r1i = r1.apply(ei), r2i = r2.apply(ei), r12i = r1.apply(r2i);
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> ej = basis_vec(n, j);
                std::vector<Rat> r1j = r1.apply(ej), r2j = r2.apply(ej), r12j = r1.apply(r2j);
                std::vector<Rat> ne = a.product(mul, r1i, r2j);   // R1(x) * R2(y)
                std::vector<Rat> se = a.product(mul, r12i, ej);   // R1(R2(x)) * y
                std::vector<Rat> sw = a.product(mul, r2i, r1j);   // R2(x) * R1(y)
                std::vector<Rat> nw = a.product(mul, ei, r12j);   // x * R1(R2(y))
                for (int k = 0; k < n; ++k) {
                    out.c(0, i, j, k) = nw[k];
                    out.c(1, i, j, k) = ne[k];
                    out.c(2, i, j, k) = sw[k];
                    out.c(3, i, j, k) = se[k];
                }
            }
        }
        return out;
    }
    if (construction == "premalcev-to-mdendriform") {
        const LinOp& r = r_of(0);
        int mul = a.alphabet().index("mul");
        if (mul < 0) throw std::invalid_argument("derive: algebra has no mul operation");
        if (check && !is_rota_baxter(a, "mul", r))
            throw std::invalid_argument("derive: operator is not Rota-Baxter on mul");
        StructConstAlgebra out(n, OpAlphabet({"tl", "tr"}));
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> ei = basis_vec(n, i), ri = rcol(r, i);
            for (int j = 0; j < n; ++j) {
                std::vector<Rat> ej = basis_vec(n, j), rj = rcol(r, j);
                std::vector<Rat> tl = a.product(mul, ei, rj);  // x . R(y)
                std::vector<Rat> tr = a.product(mul, ri, ej);  // R(x) . y
                for (int k = 0; k < n; ++k) {
                    out.c(0, i, j, k) = tl[k];
                    out.c(1, i, j, k) = tr[k];
                }
            }
        }
        return out;
    }
    throw std::invalid_argument("derive: unknown construction " + construction);
}

std::vector<Rat> eval_poly(const StructConstAlgebra& a, const Polynomial& p,
                           const std::vector<std::vector<Rat>>& args) {
    if (static_cast<int>(args.size()) != p.degree())
        throw std::invalid_argument("eval_poly: argument count mismatch");
    std::vector<Rat> acc(a.dim(), Rat(0));
    for (const auto& [m, coeff] : p.terms()) {
        TreePtr t = p.tree_of(m);
        struct Eval {
            const StructConstAlgebra& a;
            const std::vector<std::vector<Rat>>& args;
            std::vector<Rat> go(const TreePtr& n) {
                if (n->is_leaf()) return args[n->var - 1];
                return a.product(n->op, go(n->left), go(n->right));
            }
        } ev{a, args};
        std::vector<Rat> val = ev.go(t);
        for (int k = 0; k < a.dim(); ++k) acc[k] += coeff * val[k];
    }
    return acc;
}

SatisfyVerdict satisfies(const StructConstAlgebra& a, const IdentitySystem& sys) {
    if (a.alphabet() != sys.alphabet) {
        // alphabets must align by name; op order may differ
        for (const auto& o : sys.alphabet.names())
            if (a.alphabet().index(o) < 0)
                throw std::invalid_argument("satisfies: algebra lacks operation " + o);
    }
    const int n = a.dim();
    for (std::size_t idx = 0; idx < sys.identities.size(); ++idx) {
        // rebuild over the algebra's alphabet if the orders differ
        const Polynomial& f0 = sys.identities[idx];
        Polynomial f = a.alphabet() == sys.alphabet
                           ? f0
                           : rename_ops(f0, f0.alphabet().names(), a.alphabet());
        const int d = f.degree();
        std::vector<int> tuple(d, 0);
        while (true) {
            std::vector<std::vector<Rat>> args;
            for (int i : tuple) args.push_back(basis_vec(n, i));
            if (!all_zero(eval_poly(a, f, args)))
                return SatisfyVerdict{false, static_cast<int>(idx), tuple};
            int pos = d - 1;
            while (pos >= 0 && ++tuple[pos] == n) tuple[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return SatisfyVerdict{};
}

StructConstAlgebra read_algebra(std::istream& in) {
    int dim = 0;
    OpAlphabet alpha;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head.empty() || head[0] == '#') continue;
        if (head == "dim") {
            ls >> dim;
        } else if (head == "ops") {
            std::vector<std::string> names;
            std::string o;
            while (ls >> o) names.push_back(o);
            alpha = OpAlphabet(names);
        } else {
            lines.push_back(line);
        }
    }
    if (dim < 1) throw std::invalid_argument("algebra file: missing dim");
    StructConstAlgebra a(dim, alpha);
    for (const auto& l : lines) {
        std::istringstream ls(l);
        std::string opname, arrow, rest;
        int i, j;
        ls >> opname >> i >> j >> arrow;
        if (arrow != "->") throw std::invalid_argument("algebra line needs '->': " + l);
        int op = alpha.index(opname);
        if (op < 0) throw std::invalid_argument("algebra line with unknown op: " + l);
        std::getline(ls, rest);
        std::istringstream terms(rest);
        std::string term;
        while (std::getline(terms, term, ',')) {
            std::size_t colon = term.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("algebra term needs 'k:coeff': " + l);
            int k = std::stoi(term.substr(0, colon));
            auto coeff = parse_rat(term.substr(colon + 1));
            if (!coeff) throw std::invalid_argument("bad coefficient in: " + l);
            a.c(op, i - 1, j - 1, k - 1) = *coeff;
        }
    }
    return a;
}

void write_algebra(std::ostream& out, const StructConstAlgebra& a) {
    out << "dim " << a.dim() << "\n";
    out << "ops";
    for (const auto& o : a.alphabet().names()) out << " " << o;
    out << "\n";
    for (std::size_t op = 0; op < a.alphabet().size(); ++op)
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                std::string entries;
                for (int k = 0; k < a.dim(); ++k) {
                    const Rat& cc = a.c(static_cast<int>(op), i, j, k);
                    if (is_zero(cc)) continue;
                    if (!entries.empty()) entries += ",";
                    entries += std::to_string(k + 1) + ":" + to_string(cc);
                }
                if (!entries.empty())
                    out << a.alphabet().name(op) << " " << i + 1 << " " << j + 1 << " -> "
                        << entries << "\n";
            }
}

LinOp read_operator(std::istream& in) {
    int n = 0;
    in >> n;
    if (n < 1) throw std::invalid_argument("operator file: bad dimension");
    LinOp r = zero_op(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("operator file: truncated");
            auto val = parse_rat(tok);
            if (!val) throw std::invalid_argument("operator file: bad scalar " + tok);
            r.at(i, j) = *val;
        }
    return r;
}

StructConstAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_algebra(in);
}

LinOp read_operator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_operator(in);
}

}  // namespace nonassoc
