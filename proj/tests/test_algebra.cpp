#include "omegader/algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support/random_gen.hpp"

using namespace omegader;

namespace {

Vec vec3(int a, int b, int c) { return Vec{Scalar(a), Scalar(b), Scalar(c)}; }

}  // namespace

TEST_CASE("L1 bracket and form values") {
    AlgebraSpec l1 = make_L1();
    Vec x = unit_vec(3, 0), y = unit_vec(3, 1), z = unit_vec(3, 2);
    CHECK(l1.bracket(y, z) == z);
    CHECK(l1.bracket(z, y) == vec3(0, 0, -1));
    CHECK(l1.bracket(x, y) == y);
    CHECK(l1.bracket(x, z) == vec3(0, 0, 0));
    CHECK(l1.omega_eval(x, y) == Scalar(1));
    CHECK(l1.omega_eval(y, x) == Scalar(-1));
    CHECK(l1.omega_eval(x, z) == Scalar(0));
}

TEST_CASE("L2 bracket and form values") {
    AlgebraSpec l2 = make_L2();
    Vec x = unit_vec(3, 0), y = unit_vec(3, 1), z = unit_vec(3, 2);
    CHECK(l2.bracket(x, z) == y);
    CHECK(l2.bracket(y, z) == z);
    CHECK(l2.bracket(x, y) == vec3(0, 0, 0));
    CHECK(l2.omega_eval(x, z) == Scalar(1));
}

TEST_CASE("bracket and form are bilinear and alternating") {
    testgen::Rng rng(42);
    AlgebraSpec l1 = make_L1();
    for (int trial = 0; trial < 40; ++trial) {
        Vec u(3), v(3), w(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = testgen::random_scalar(rng);
            v[i] = testgen::random_scalar(rng);
            w[i] = testgen::random_scalar(rng);
        }
        Scalar a = testgen::random_scalar(rng);

        Vec uv = l1.bracket(u, v);
        Vec vu = l1.bracket(v, u);
        for (int i = 0; i < 3; ++i) CHECK(uv[i] == -vu[i]);
        for (const Scalar& e : l1.bracket(u, u)) CHECK(e.is_zero());

        Vec scaled_u(3), combo(3);
        for (int i = 0; i < 3; ++i) {
            scaled_u[i] = a * u[i];
            combo[i] = v[i] + w[i];
        }
        Vec lhs = l1.bracket(scaled_u, combo);
        Vec rhs(3);
        Vec t1 = l1.bracket(u, v), t2 = l1.bracket(u, w);
        for (int i = 0; i < 3; ++i) rhs[i] = a * (t1[i] + t2[i]);
        CHECK(lhs == rhs);

        CHECK(l1.omega_eval(u, v) == -l1.omega_eval(v, u));
        CHECK(l1.omega_eval(u, u) == Scalar(0));
        CHECK(l1.omega_eval(scaled_u, combo) ==
              a * (l1.omega_eval(u, v) + l1.omega_eval(u, w)));
    }
}

TEST_CASE("validation accepts the catalog and Lie algebras") {
    CHECK(validate(make_L1()).ok());
    CHECK(validate(make_L2()).ok());
    CHECK(validate(make_sl2()).ok());
    CHECK(validate(make_heisenberg()).ok());
    CHECK(validate(make_abelian(4)).ok());
}

TEST_CASE("zeroing the form of L1 breaks the defining identity") {
    AlgebraSpec broken = make_L1();
    broken.set_omega(0, 1, Scalar(0));
    ValidationReport rep = validate(broken);
    CHECK(rep.structural_ok());
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.jacobi.size() == 1);
    CHECK(rep.jacobi[0].i == 0);
    CHECK(rep.jacobi[0].j == 1);
    CHECK(rep.jacobi[0].k == 2);
    // Jacobiator of (x, y, z) is z; the weighted side is zero once w = 0.
    CHECK(rep.jacobi[0].lhs == vec3(0, 0, 1));
    CHECK(rep.jacobi[0].rhs == vec3(0, 0, 0));
}

TEST_CASE("structural violations are reported before identity checks") {
    AlgebraSpec bad = make_L1();
    bad.set_c_raw(0, 1, 1, Scalar(7));  // breaks c_{01k} = -c_{10k}
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.structural_ok());
    REQUIRE(rep.bracket_antisymmetry.size() == 1);
    CHECK(rep.bracket_antisymmetry[0].i == 0);
    CHECK(rep.bracket_antisymmetry[0].j == 1);

    AlgebraSpec skew = make_L2();
    skew.set_omega_raw(0, 2, Scalar(5));
    ValidationReport rep2 = validate(skew);
    REQUIRE(rep2.form_skew.size() == 1);
    CHECK(rep2.form_skew[0].i == 0);
    CHECK(rep2.form_skew[0].j == 2);
}

TEST_CASE("random single-entry perturbations of L1 are rejected") {
    // Perturbations keep the structural symmetries so the defining identity
    // does the discriminating; any draw that happens to stay valid re-rolls.
    testgen::Rng rng(2024);
    int rejected = 0, rerolled = 0;
    while (rejected < 20) {
        AlgebraSpec mutant = make_L1();
        int i = int(rng() % 3), j = int(rng() % 3);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        Scalar delta = testgen::random_nonzero_scalar(rng);
        if (rng() % 2 == 0) {
            Vec out = mutant.bracket_basis(i, j);
            out[rng() % 3] += delta;
            mutant.set_bracket(i, j, out);
        } else {
            mutant.set_omega(i, j, mutant.omega(i, j) + delta);
        }
        ValidationReport rep = validate(mutant);
        CHECK(rep.structural_ok());
        if (rep.ok()) {
            ++rerolled;
            REQUIRE(rerolled < 200);
            continue;
        }
        ++rejected;
    }
    CHECK(rejected == 20);
}

TEST_CASE("center computations") {
    CHECK(center(make_L1()).dim() == 0);
    CHECK(center(make_L2()).dim() == 0);
    CHECK(center(make_abelian(5)) == Subspace::full(5));
    Subspace heis = center(make_heisenberg());
    REQUIRE(heis.dim() == 1);
    CHECK(heis.contains(unit_vec(3, 2)));
}

TEST_CASE("center members re-checked by direct bracket evaluation") {
    testgen::Rng rng(7);
    for (int dim = 2; dim <= 5; ++dim) {
        AlgebraSpec a = testgen::random_lie_algebra(rng, dim, "rnd");
        Subspace c = center(a);
        for (int r = 0; r < c.dim(); ++r)
            for (int j = 0; j < dim; ++j)
                for (const Scalar& e : a.bracket(c.basis_vector(r), unit_vec(dim, j)))
                    CHECK(e.is_zero());
    }
}

TEST_CASE("derived subalgebras") {
    Subspace d1 = derived_subalgebra(make_L1());
    CHECK(d1.dim() == 2);
    CHECK(d1.contains(unit_vec(3, 1)));
    CHECK(d1.contains(unit_vec(3, 2)));
    CHECK_FALSE(d1.contains(unit_vec(3, 0)));

    Subspace d2 = derived_subalgebra(make_L2());
    CHECK(d2.dim() == 2);
    CHECK(d2.contains(unit_vec(3, 1)));

    CHECK(derived_subalgebra(make_abelian(3)).dim() == 0);
}

TEST_CASE("derived subalgebra is generator-order independent") {
    // Same span regardless of which side of the antisymmetric pair generates.
    AlgebraSpec l1 = make_L1();
    std::vector<Vec> reversed;
    for (int j = 2; j >= 0; --j)
        for (int i = j + 1; i < 3; ++i) reversed.push_back(l1.bracket_basis(i, j));
    CHECK(Subspace::span(3, reversed) == derived_subalgebra(l1));
}
