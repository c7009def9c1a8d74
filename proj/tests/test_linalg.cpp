#include "omegader/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "support/random_gen.hpp"

using namespace omegader;

namespace {

Mat from_rows(const std::vector<std::vector<int>>& rows) {
    Mat m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = Scalar(rows[r][c]);
    return m;
}

}  // namespace

TEST_CASE("rref of simple matrices") {
    auto id = rref(Mat::identity(3));
    CHECK(id.mat == Mat::identity(3));
    CHECK(id.pivots == std::vector<int>{0, 1, 2});

    auto zero = rref(Mat(2, 3));
    CHECK(zero.mat == Mat(2, 3));
    CHECK(zero.pivots.empty());

    auto rank1 = rref(from_rows({{1, 2}, {2, 4}}));
    CHECK(rank1.mat == from_rows({{1, 2}, {0, 0}}));
    CHECK(rank1.pivots == std::vector<int>{0});
}

TEST_CASE("rref is idempotent and basis-order independent") {
    testgen::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m = testgen::random_matrix(rng, 4, 6);
        auto once = rref(m);
        CHECK(rref(once.mat).mat == once.mat);

        Mat shuffled(m.rows(), m.cols());
        std::vector<int> perm = {3, 0, 2, 1};
        for (int r = 0; r < 4; ++r) shuffled.set_row(r, m.row(perm[r]));
        Mat scaled = shuffled;
        for (int c = 0; c < scaled.cols(); ++c) scaled.at(0, c) = Scalar(-7) * scaled.at(0, c);
        CHECK(rref(scaled).mat == once.mat);
    }
}

TEST_CASE("nullspace dimensions and verification") {
    CHECK(nullspace_basis(Mat::identity(4)).empty());
    CHECK(nullspace_basis(Mat(1, 5)).size() == 5);

    testgen::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Mat m = testgen::random_matrix(rng, 5, 7);
        auto basis = nullspace_basis(m);
        CHECK(int(basis.size()) == 7 - rref(m).rank());
        for (const auto& v : basis)
            for (const Scalar& e : m.apply(v)) CHECK(e.is_zero());
    }
}

TEST_CASE("subspace idempotence and trivial containments") {
    testgen::Rng rng(29);
    Subspace s = testgen::random_subspace(rng, 6, 3);
    CHECK(subspace_sum(s, s) == s);
    CHECK(subspace_intersect(s, s) == s);
    CHECK(Subspace::full(6).contains(s));
    CHECK(s.contains(Subspace(6)));
}

TEST_CASE("complementary coordinate subspaces") {
    std::vector<Vec> first = {unit_vec(4, 0), unit_vec(4, 1)};
    std::vector<Vec> second = {unit_vec(4, 2), unit_vec(4, 3)};
    Subspace a = Subspace::span(4, first);
    Subspace b = Subspace::span(4, second);
    CHECK(subspace_sum(a, b) == Subspace::full(4));
    CHECK(subspace_intersect(a, b).dim() == 0);
}

TEST_CASE("grassmann dimension identity on random subspaces") {
    testgen::Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Subspace s = testgen::random_subspace(rng, 7, 1 + int(rng() % 5));
        Subspace t = testgen::random_subspace(rng, 7, 1 + int(rng() % 5));
        Subspace sum = subspace_sum(s, t);
        Subspace meet = subspace_intersect(s, t);
        CHECK(sum.dim() + meet.dim() == s.dim() + t.dim());
        CHECK(sum.contains(s));
        CHECK(sum.contains(t));
        CHECK(s.contains(meet));
        CHECK(t.contains(meet));
    }
}

TEST_CASE("projection onto coordinate blocks") {
    CHECK(Subspace::full(6).project_block(2, 3) == Subspace::full(3));

    Vec spike(5);
    spike[0] = Scalar(1);
    Subspace line = Subspace::span(5, {spike});
    CHECK(line.project_block(1, 4).dim() == 0);

    // projection can tangle coordinates: span{(1,0,1),(0,1,0)} onto last two
    Vec a(3), b(3);
    a[0] = Scalar(1);
    a[2] = Scalar(1);
    b[1] = Scalar(1);
    Subspace s = Subspace::span(3, {a, b});
    CHECK(s.project_block(1, 2) == Subspace::full(2));
}

TEST_CASE("generic form of simple spaces") {
    AffineDescription full = generic_form(Subspace::full(4));
    CHECK(full.free_vars == std::vector<int>{0, 1, 2, 3});
    CHECK(full.bound_vars.empty());

    // x22 = -x11 pattern: span{(1,-1)} in K^2
    Vec v(2);
    v[0] = Scalar(1);
    v[1] = Scalar(-1);
    AffineDescription d = generic_form(Subspace::span(2, {v}));
    CHECK(d.free_vars == std::vector<int>{0});
    CHECK(d.bound_vars == std::vector<int>{1});
    REQUIRE(d.bound_exprs.size() == 1);
    CHECK(d.bound_exprs[0] == Vec{Scalar(-1)});
}

TEST_CASE("matrix inverse and commutator helpers") {
    testgen::Rng rng(301);
    Mat p = testgen::random_invertible(rng, 4);
    CHECK(p * invert_matrix(p) == Mat::identity(4));
    Mat a = testgen::random_matrix(rng, 3, 3), b = testgen::random_matrix(rng, 3, 3);
    CHECK(commutator(a, b) == a * b - b * a);
    CHECK_THROWS_AS(invert_matrix(Mat(2, 2)), std::invalid_argument);
}
