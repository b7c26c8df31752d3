#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nonassoc/fp101.hpp"

namespace nonassoc {

// Dense row-major matrix over an exact field. Rows are kept as separate
// vectors so row swaps during elimination are pointer moves.
template <class F>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<F>(cols, FieldOps<F>::zero())) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t i, std::size_t j) { return data_[i][j]; }
    const F& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

    std::vector<F>& row(std::size_t i) { return data_[i]; }
    const std::vector<F>& row(std::size_t i) const { return data_[i]; }

    void append_row(std::vector<F> r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("Mat: row length mismatch");
        data_.push_back(std::move(r));
        ++rows_;
    }

    void swap_rows(std::size_t i, std::size_t j) { data_[i].swap(data_[j]); }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<F>> data_;
};

// dst[c0..) += m * src[c0..)
template <class F>
inline void row_axpy(std::vector<F>& dst, const std::vector<F>& src, F m, std::size_t c0) {
    const std::size_t n = dst.size();
    for (std::size_t j = c0; j < n; ++j) dst[j] += m * src[j];
}

// Tight kernel for the prime field; the generic path would not vectorize
// through the operator overloads.
inline void row_axpy(std::vector<Fp101>& dst, const std::vector<Fp101>& src, Fp101 m,
                     std::size_t c0) {
    const std::size_t n = dst.size();
    if (c0 >= n) return;
    const uint32_t mv = m.v;
    uint32_t* d = &dst[c0].v;
    const uint32_t* s = &src[c0].v;
    for (std::size_t j = 0; j < n - c0; ++j) d[j] = (d[j] + mv * s[j]) % Fp101::P;
}

template <class F>
struct RrefResult {
    Mat<F> basis;                     // nonzero rows of the RREF
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per basis row, strictly increasing
};

// Reduced row echelon form with deterministic pivoting: leftmost nonzero
// column, topmost eligible row. No magnitude heuristics; the arithmetic is
// exact so reproducibility is the only concern.
template <class F>
RrefResult<F> rref(Mat<F> m) {
    const std::size_t nrows = m.rows(), ncols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < ncols && pr < nrows; ++c) {
        std::size_t sel = pr;
        while (sel < nrows && FieldOps<F>::is_zero(m.at(sel, c))) ++sel;
        if (sel == nrows) continue;
        m.swap_rows(pr, sel);
        F inv = FieldOps<F>::inv(m.at(pr, c));
        if (!(inv == FieldOps<F>::one())) {
            auto& r = m.row(pr);
            for (std::size_t j = c; j < ncols; ++j) r[j] *= inv;
        }
        for (std::size_t i = pr + 1; i < nrows; ++i) {
            const F& a = m.at(i, c);
            if (FieldOps<F>::is_zero(a)) continue;
            F mult = -a;
            m.at(i, c) = FieldOps<F>::zero();
            row_axpy(m.row(i), m.row(pr), mult, c + 1);
        }
        pivots.push_back(c);
        ++pr;
    }
    // back-substitution: clear above each pivot, right to left
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const F& a = m.at(i, pc);
            if (FieldOps<F>::is_zero(a)) continue;
            F mult = -a;
            m.at(i, pc) = FieldOps<F>::zero();
            row_axpy(m.row(i), m.row(k), mult, pc + 1);
        }
    }
    RrefResult<F> res;
    res.rank = pivots.size();
    res.pivots = std::move(pivots);
    res.basis = Mat<F>(res.rank, ncols);
    for (std::size_t i = 0; i < res.rank; ++i) res.basis.row(i) = std::move(m.row(i));
    return res;
}

template <class F>
std::size_t rank(const Mat<F>& m) {
    return rref(m).rank;
}

// Nullspace basis via the standard read-off from the RREF: one basis vector
// per free column. Used by the brute-force kernel oracle.
template <class F>
std::vector<std::vector<F>> nullspace(const Mat<F>& m) {
    RrefResult<F> r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> out;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(n, FieldOps<F>::zero());
        v[fc] = FieldOps<F>::one();
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.basis.at(i, fc);
        out.push_back(std::move(v));
    }
    return out;
}

// Coefficients of v in terms of the given basis vectors, by the augmented
// column method: rref of [basis^T | v]; a pivot in the last column means v
// is not in the span. With an independent basis the solution is unique;
// otherwise this is the distinguished solution from back-substitution
// (free coordinates zero).
template <class F>
std::optional<std::vector<F>> express(const std::vector<F>& v,
                                      const std::vector<std::vector<F>>& basis) {
    const std::size_t n = v.size();
    for (const auto& b : basis)
        if (b.size() != n) throw std::invalid_argument("express: length mismatch");
    const std::size_t k = basis.size();
    Mat<F> m(n, k + 1);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) m.at(i, j) = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) m.at(i, k) = v[i];
    RrefResult<F> r = rref(std::move(m));
    std::vector<F> coeff(k, FieldOps<F>::zero());
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == k) return std::nullopt;  // inconsistent
        coeff[r.pivots[i]] = r.basis.at(i, k);
    }
    return coeff;
}

}  // namespace nonassoc
