#pragma once

#include <stdexcept>
#include <vector>

#include "nonassoc/matrix.hpp"

namespace nonassoc {

// Forward-elimination basis that grows one vector at a time. Used where the
// answer depends on which input rows enter the basis (the "basic identities"
// of a lifting module), not only on the span.
template <class F>
class IncrementalBasis {
  public:
    explicit IncrementalBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    std::vector<F> reduce(std::vector<F> v) const {
        for (const auto& [p, r] : rows_) {
            if (FieldOps<F>::is_zero(v[p])) continue;
            F m = -v[p];
            row_axpy(v, r, m, p);
            v[p] = FieldOps<F>::zero();
        }
        return v;
    }

    // true when v enlarges the span (v then joins the basis)
    bool add(const std::vector<F>& v) {
        if (v.size() != ambient_) throw std::invalid_argument("IncrementalBasis: length");
        std::vector<F> r = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && FieldOps<F>::is_zero(r[p])) ++p;
        if (p == ambient_) return false;
        F inv = FieldOps<F>::inv(r[p]);
        for (std::size_t j = p; j < ambient_; ++j) r[j] *= inv;
        rows_.emplace_back(p, std::move(r));
        return true;
    }

    bool contains(const std::vector<F>& v) const {
        std::vector<F> r = reduce(v);
        for (const F& a : r)
            if (!FieldOps<F>::is_zero(a)) return false;
        return true;
    }

  private:
    std::size_t ambient_;
    std::vector<std::pair<std::size_t, std::vector<F>>> rows_;
};

// A subspace of F^n held in reduced row echelon form. RREF is a canonical
// form, so equality of subspaces is equality of bases.
template <class F>
class RowSpace {
  public:
    explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

    static RowSpace span(std::size_t ambient, const std::vector<std::vector<F>>& vectors) {
        RowSpace s(ambient);
        Mat<F> m;
        for (const auto& v : vectors) {
            if (v.size() != ambient) throw std::invalid_argument("span: length mismatch");
            m.append_row(v);
        }
        if (m.rows() == 0) return s;  // zero space
        RrefResult<F> r = rref(std::move(m));
        s.basis_ = std::move(r.basis);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const Mat<F>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<std::vector<F>> basis_vectors() const {
        std::vector<std::vector<F>> out;
        out.reserve(rank());
        for (std::size_t i = 0; i < rank(); ++i) out.push_back(basis_.row(i));
        return out;
    }

    // v reduces to zero against the basis?
    bool contains(std::vector<F> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
        for (std::size_t i = 0; i < rank(); ++i) {
            const F& a = v[pivots_[i]];
            if (FieldOps<F>::is_zero(a)) continue;
            F mult = -a;
            row_axpy(v, basis_.row(i), mult, pivots_[i]);
            v[pivots_[i]] = FieldOps<F>::zero();
        }
        for (const F& a : v)
            if (!FieldOps<F>::is_zero(a)) return false;
        return true;
    }

    bool contains_all(const RowSpace& other) const {
        if (other.ambient_ != ambient_)
            throw std::invalid_argument("contains_all: dimension mismatch");
        for (std::size_t i = 0; i < other.rank(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    bool operator==(const RowSpace& o) const {
        if (ambient_ != o.ambient_) throw std::invalid_argument("equal: dimension mismatch");
        return basis_ == o.basis_;
    }
    bool operator!=(const RowSpace& o) const { return !(*this == o); }

  private:
    std::size_t ambient_;
    Mat<F> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace nonassoc
