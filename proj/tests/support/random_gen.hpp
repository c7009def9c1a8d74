#pragma once

// Seeded generators for property-style tests: random scalars, matrices,
// subspaces, and valid Lie-algebra specs (zero form) built from known blocks
// conjugated by random invertible integer matrices.

#include "omegader/algebra.hpp"
#include "omegader/linalg.hpp"
#include "omegader/scalar.hpp"
#include "omegader/spaces.hpp"

#include <random>
#include <vector>

namespace testgen {

using omegader::AlgebraSpec;
using omegader::Mat;
using omegader::Rational;
using omegader::Scalar;
using omegader::Subspace;
using omegader::Vec;

using Rng = std::mt19937;

inline Rational random_rational(Rng& rng, int max_num = 6, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Scalar random_scalar(Rng& rng) {
    std::uniform_int_distribution<int> shape(0, 3);
    switch (shape(rng)) {
        case 0: return Scalar(random_rational(rng));                       // real
        case 1: return Scalar(Rational(0), random_rational(rng));          // imaginary
        default: return Scalar(random_rational(rng), random_rational(rng));
    }
}

inline Scalar random_nonzero_scalar(Rng& rng) {
    for (;;) {
        Scalar s = random_scalar(rng);
        if (!s.is_zero()) return s;
    }
}

inline Mat random_matrix(Rng& rng, int rows, int cols, int percent_zero = 40) {
    std::uniform_int_distribution<int> coin(0, 99);
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) >= percent_zero) m.at(r, c) = random_scalar(rng);
    return m;
}

inline Subspace random_subspace(Rng& rng, int ambient, int generators) {
    std::vector<Vec> rows;
    for (int g = 0; g < generators; ++g) {
        Vec v(ambient);
        for (int c = 0; c < ambient; ++c) v[c] = random_scalar(rng);
        rows.push_back(std::move(v));
    }
    return Subspace::span(ambient, rows);
}

/// Random invertible integer matrix with small entries.
inline Mat random_invertible(Rng& rng, int n) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        Mat m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = Scalar(entry(rng));
        try {
            omegader::invert_matrix(m);
            return m;
        } catch (const std::invalid_argument&) {
            continue;  // singular, roll again
        }
    }
}

/// Change of basis: new constants for [P e_a, P e_b] expressed through P^-1.
inline AlgebraSpec conjugate(const AlgebraSpec& a, const Mat& p, const std::string& name) {
    const int n = a.dim();
    Mat p_inv = omegader::invert_matrix(p);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    AlgebraSpec out(name, names);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec w = a.bracket(p.col(i), p.col(j));
            out.set_bracket(i, j, p_inv.apply(w));
            out.set_omega(i, j, a.omega_eval(p.col(i), p.col(j)));
        }
    return out;
}

/// Direct sum; the form stays blockwise.
inline AlgebraSpec direct_sum(const AlgebraSpec& a, const AlgebraSpec& b) {
    const int n = a.dim(), m = b.dim();
    std::vector<std::string> names;
    for (int i = 0; i < n + m; ++i) names.push_back("e" + std::to_string(i + 1));
    AlgebraSpec out(a.name() + "+" + b.name(), names);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec v(n + m);
            for (int k = 0; k < n; ++k) v[k] = a.c(i, j, k);
            out.set_bracket(i, j, v);
            out.set_omega(i, j, a.omega(i, j));
        }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec v(n + m);
            for (int k = 0; k < m; ++k) v[n + k] = b.c(i, j, k);
            out.set_bracket(n + i, n + j, v);
            out.set_omega(n + i, n + j, b.omega(i, j));
        }
    return out;
}

/// Solvable dim-2 block: [e1, e2] = e2.
inline AlgebraSpec make_r2() {
    AlgebraSpec a("r2", {"e1", "e2"});
    a.set_bracket(0, 1, {Scalar(0), Scalar(1)});
    return a;
}

/// A random valid Lie algebra (zero form) of the requested dimension:
/// a direct sum of known Lie blocks in a random basis.
inline AlgebraSpec random_lie_algebra(Rng& rng, int dim, const std::string& name) {
    std::vector<AlgebraSpec> pool2 = {make_r2(), omegader::make_abelian(2)};
    std::vector<AlgebraSpec> pool3 = {omegader::make_sl2(), omegader::make_heisenberg(),
                                      omegader::make_abelian(3)};
    AlgebraSpec block = omegader::make_abelian(1);
    int have = 1;
    if (dim >= 3 && rng() % 2 == 0) {
        block = pool3[rng() % pool3.size()];
        have = 3;
    } else if (dim >= 2) {
        block = pool2[rng() % pool2.size()];
        have = 2;
    }
    while (have < dim) {
        int room = dim - have;
        if (room >= 3 && rng() % 2 == 0) {
            block = direct_sum(block, pool3[rng() % pool3.size()]);
            have += 3;
        } else if (room >= 2 && rng() % 2 == 0) {
            block = direct_sum(block, pool2[rng() % pool2.size()]);
            have += 2;
        } else {
            block = direct_sum(block, omegader::make_abelian(1));
            have += 1;
        }
    }
    return conjugate(block, random_invertible(rng, dim), name);
}

}  // namespace testgen
