#include <doctest.h>

#include <random>

#include "nonassoc/matrix.hpp"
#include "nonassoc/rowspace.hpp"

using namespace nonassoc;

namespace {

template <class F>
Mat<F> mat_from(const std::vector<std::vector<long>>& rows) {
    Mat<F> m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = FieldOps<F>::from_rat(Rat(rows[i][j]));
    return m;
}

template <class F>
std::vector<F> vec_from(const std::vector<long>& v) {
    std::vector<F> out;
    for (long x : v) out.push_back(FieldOps<F>::from_rat(Rat(x)));
    return out;
}

}  // namespace

TEST_CASE("rref collapses dependent rows") {
    auto r = rref(mat_from<Rat>({{2, 4}, {1, 2}}));
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
    CHECK(r.basis.at(0, 0) == Rat(1));
    CHECK(r.basis.at(0, 1) == Rat(2));
}

TEST_CASE("rref of the identity is the identity") {
    auto m = mat_from<Rat>({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto r = rref(m);
    CHECK(r.rank == 3);
    CHECK(r.basis == m);
}

TEST_CASE("rref is idempotent and rank-stable") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        Mat<Rat> m(6, 9);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 9; ++j) m.at(i, j) = Rat(d(rng));
        auto r1 = rref(m);
        auto r2 = rref(r1.basis);
        CHECK(r1.rank == r2.rank);
        CHECK(r1.basis == r2.basis);
        CHECK(r1.rank <= 6);
    }
}

TEST_CASE("rank agrees between Q and F101 on random integer matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<long>> rows(20, std::vector<long>(30));
        for (auto& r : rows)
            for (auto& x : r) x = d(rng);
        CHECK(rref(mat_from<Rat>(rows)).rank == rref(mat_from<Fp101>(rows)).rank);
    }
}

TEST_CASE("modular rank can drop; the rational answer is the arbiter") {
    // 101 vanishes mod 101: the discrepancy case that forces the fallback
    auto rq = rref(mat_from<Rat>({{101}}));
    auto rp = rref(mat_from<Fp101>({{101}}));
    CHECK(rq.rank == 1);
    CHECK(rp.rank == 0);
}

TEST_CASE("span and contains") {
    RowSpace<Rat> full = RowSpace<Rat>::span(2, {vec_from<Rat>({1, 0}), vec_from<Rat>({0, 1})});
    CHECK(full.rank() == 2);
    RowSpace<Rat> line = RowSpace<Rat>::span(2, {vec_from<Rat>({1, 1}), vec_from<Rat>({2, 2})});
    CHECK(line.rank() == 1);
    CHECK(line.contains(vec_from<Rat>({0, 0})));
    CHECK(line.contains(vec_from<Rat>({3, 3})));
    CHECK(!line.contains(vec_from<Rat>({1, 0})));
    // a basis row belongs to its own space
    CHECK(line.contains(line.basis().row(0)));
}

TEST_CASE("row space equality is canonical") {
    auto s1 = RowSpace<Rat>::span(3, {vec_from<Rat>({1, 1, 0}), vec_from<Rat>({0, 0, 1})});
    auto s2 = RowSpace<Rat>::span(3, {vec_from<Rat>({1, 1, 1}), vec_from<Rat>({2, 2, 1})});
    CHECK(s1 == s1);
    CHECK(s1 == s2);
    auto s3 = RowSpace<Rat>::span(2, {vec_from<Rat>({1, 0})});
    auto s4 = RowSpace<Rat>::span(2, {vec_from<Rat>({0, 1})});
    CHECK(s3 != s4);
}

TEST_CASE("contains matches the rank characterization") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rat>> vecs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rat> v;
            for (int j = 0; j < 6; ++j) v.push_back(Rat(d(rng)));
            vecs.push_back(v);
        }
        std::vector<Rat> probe;
        for (int j = 0; j < 6; ++j) probe.push_back(Rat(d(rng)));
        auto space = RowSpace<Rat>::span(6, vecs);
        auto extended = vecs;
        extended.push_back(probe);
        bool in = space.contains(probe);
        CHECK(in == (space.rank() == RowSpace<Rat>::span(6, extended).rank()));
    }
}

TEST_CASE("express recovers coefficients via the augmented column") {
    std::vector<std::vector<Rat>> basis = {vec_from<Rat>({1, 0, 2}), vec_from<Rat>({0, 1, 1})};
    SUBCASE("a basis vector expresses as a unit vector") {
        auto c = express(basis[0], basis);
        REQUIRE(c.has_value());
        CHECK((*c)[0] == Rat(1));
        CHECK((*c)[1] == Rat(0));
    }
    SUBCASE("zero expresses as zero") {
        auto c = express(vec_from<Rat>({0, 0, 0}), basis);
        REQUIRE(c.has_value());
        CHECK((*c)[0] == Rat(0));
        CHECK((*c)[1] == Rat(0));
    }
    SUBCASE("combination") {
        auto c = express(vec_from<Rat>({2, -3, 1}), basis);
        REQUIRE(c.has_value());
        CHECK((*c)[0] == Rat(2));
        CHECK((*c)[1] == Rat(-3));
    }
    SUBCASE("outside the span") {
        CHECK(!express(vec_from<Rat>({0, 0, 1}), basis).has_value());
    }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    auto m = mat_from<Rat>({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    auto ns = nullspace(m);
    CHECK(ns.size() == 1);
    for (const auto& v : ns)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rat dot(0);
            for (std::size_t j = 0; j < m.cols(); ++j) dot += m.at(i, j) * v[j];
            CHECK(dot == Rat(0));
        }
}
