#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nonassoc/system.hpp"

namespace nonassoc {

// Finite-dimensional algebra given by exact structure constants:
// e_i op e_j = sum_k c[op][i][j][k] e_k  (all indices 0-based internally).
class StructConstAlgebra {
  public:
    StructConstAlgebra(int dim, OpAlphabet alphabet);

    int dim() const { return dim_; }
    const OpAlphabet& alphabet() const { return alphabet_; }

    Rat& c(int op, int i, int j, int k);
    const Rat& c(int op, int i, int j, int k) const;

    // bilinear product of coordinate vectors
    std::vector<Rat> product(int op, const std::vector<Rat>& u, const std::vector<Rat>& v) const;

  private:
    int dim_;
    OpAlphabet alphabet_;
    std::vector<std::vector<Rat>> tensors_;  // per op, n*n*n row-major
};

// Linear operator as an n x n matrix acting on coordinate columns.
struct LinOp {
    int dim = 0;
    std::vector<Rat> m;  // row-major

    Rat& at(int i, int j) { return m[i * dim + j]; }
    const Rat& at(int i, int j) const { return m[i * dim + j]; }
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    bool commutes_with(const LinOp& o) const;
    bool operator==(const LinOp& o) const { return dim == o.dim && m == o.m; }
};

LinOp zero_op(int dim);
LinOp identity_op(int dim);

// Weight-zero Rota-Baxter check: R(x) op R(y) = R(R(x) op y + x op R(y)) on
// all basis pairs, for every operation listed (a dendriform pair passes both
// its equations). Basis pairs suffice by bilinearity.
bool is_rota_baxter(const StructConstAlgebra& a, const std::vector<std::string>& ops,
                    const LinOp& r);
bool is_rota_baxter(const StructConstAlgebra& a, const std::string& op, const LinOp& r);

// All operators with entries from the given set satisfying the Rota-Baxter
// equations. Exhaustive up to dim 3; larger dimensions are sampled at random
// with a fixed seed (the spec of exhaustiveness no longer holds there).
// Results come out in lexicographic matrix order.
std::vector<LinOp> search_rb(const StructConstAlgebra& a, const std::vector<std::string>& ops,
                             const std::vector<Rat>& entries, std::size_t samples = 20000);

// Derived-structure constructions from the propositions:
//   malcev-to-premalcev      (br), 1 op:  x.y = [R(x), y]
//   alt-to-altdendriform     (mul), 1 op: x prec y = x*R(y), x succ y = R(x)*y
//   dendri-to-quadri         (prec,succ), 1 op: ne = x succ R(y), se = R(x) succ y,
//                            sw = R(x) prec y, nw = x prec R(y)
//   double-rb-quadri         (mul), 2 commuting ops R1, R2:
//                            ne = R1(x)*R2(y), se = R1(R2(x))*y,
//                            sw = R2(x)*R1(y), nw = x*R1(R2(y))
//   premalcev-to-mdendriform (mul), 1 op: x tr y = R(x).y, x tl y = x.R(y)
// Preconditions (R Rota-Baxter, pair commuting) are verified unless
// check == false (the escape hatch for negative-control tests).
StructConstAlgebra derive(const StructConstAlgebra& a, const std::string& construction,
                          const std::vector<LinOp>& operators, bool check = true);

struct SatisfyVerdict {
    bool ok = true;
    int identity = -1;          // index of the first failing identity
    std::vector<int> tuple;     // basis tuple where it fails (0-based)
    explicit operator bool() const { return ok; }
};

// Evaluates every identity of the system on all basis tuples; multilinear
// identities vanish identically iff they vanish there.
SatisfyVerdict satisfies(const StructConstAlgebra& a, const IdentitySystem& sys);

// Evaluates one multilinear polynomial at arbitrary coordinate vectors.
std::vector<Rat> eval_poly(const StructConstAlgebra& a, const Polynomial& p,
                           const std::vector<std::vector<Rat>>& args);

// File formats. Algebra:
//   dim <n>
//   ops <name> ...
//   <op> <i> <j> -> <k>:<coeff>[,<k>:<coeff>...]   (1-based, omitted = zero)
// Operator: first line n, then n rows of exact scalars.
StructConstAlgebra read_algebra(std::istream& in);
void write_algebra(std::ostream& out, const StructConstAlgebra& a);
LinOp read_operator(std::istream& in);
StructConstAlgebra read_algebra_file(const std::string& path);
LinOp read_operator_file(const std::string& path);

}  // namespace nonassoc
