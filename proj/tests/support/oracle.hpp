#pragma once

// Independent rank oracle: fraction-free (Bareiss) elimination over the
// Gaussian integers, written against raw bigint pairs.  Deliberately shares
// no elimination code with the library's rref; it exists to cross-check
// ranks and nullities.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

#include "omegader/linalg.hpp"

namespace oracle {

using Int = boost::multiprecision::mpz_int;

struct GInt {
    Int re, im;
    bool zero() const { return re == 0 && im == 0; }
};

inline GInt mul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline GInt sub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

/// Exact division in Z[i]; the Bareiss update guarantees divisibility.
inline GInt exact_div(const GInt& a, const GInt& b) {
    Int den = b.re * b.re + b.im * b.im;
    if (den == 0) throw std::logic_error("oracle: division by zero");
    Int num_re = a.re * b.re + a.im * b.im;
    Int num_im = a.im * b.re - a.re * b.im;
    if (num_re % den != 0 || num_im % den != 0)
        throw std::logic_error("oracle: non-exact division");
    return {num_re / den, num_im / den};
}

/// Rank by fraction-free elimination.  Rows are scaled to Gaussian integers
/// first (common denominator per row), which does not change the rank.
inline int rank(const omegader::Mat& m) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<GInt>> a(rows, std::vector<GInt>(cols));
    for (int r = 0; r < rows; ++r) {
        Int common = 1;
        for (int c = 0; c < cols; ++c) {
            const omegader::Scalar& s = m.at(r, c);
            common = lcm(common, Int(denominator(s.re)));
            common = lcm(common, Int(denominator(s.im)));
        }
        for (int c = 0; c < cols; ++c) {
            const omegader::Scalar& s = m.at(r, c);
            a[r][c].re = Int(numerator(s.re)) * (common / Int(denominator(s.re)));
            a[r][c].im = Int(numerator(s.im)) * (common / Int(denominator(s.im)));
        }
    }

    int rank = 0;
    GInt prev{1, 0};
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][col].zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c)
                a[r][c] = exact_div(sub(mul(a[rank][col], a[r][c]), mul(a[r][col], a[rank][c])),
                                    prev);
            a[r][col] = GInt{};
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

inline int nullity(const omegader::Mat& m) { return m.cols() - rank(m); }

}  // namespace oracle
